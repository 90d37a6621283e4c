#include "ellfib/fibers.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "ellfib/errors.hpp"
#include "ellfib/kv.hpp"

namespace ellfib {

namespace {

int rank(KodairaType::Kind k) {
    switch (k) {
    case KodairaType::I: return 0;
    case KodairaType::Istar: return 1;
    case KodairaType::IIstar: return 2;
    case KodairaType::IIIstar: return 3;
    case KodairaType::IVstar: return 4;
    case KodairaType::II: return 5;
    case KodairaType::III: return 6;
    case KodairaType::IV: return 7;
    }
    return 8;
}

// loose char 0 table keyed on vDelta
KodairaType by_delta(int vA, int vD) {
    if (vD == 0) return KodairaType::In(0);
    if (vA == 0) return KodairaType::In(vD);
    if (vD > 6 && vA == 2) return KodairaType::Instar(vD - 6);
    switch (vD) {
    case 2: return {KodairaType::II, 0};
    case 3: return {KodairaType::III, 0};
    case 4: return {KodairaType::IV, 0};
    case 6: return KodairaType::Instar(0);
    case 8: return {KodairaType::IVstar, 0};
    case 9: return {KodairaType::IIIstar, 0};
    case 10: return {KodairaType::IIstar, 0};
    }
    throw Error(ErrorKind::InconsistentOrders, "no fiber type for vA=" + order_string(vA) + ", vDelta=" + std::to_string(vD));
}

}  // namespace

int KodairaType::euler() const {
    switch (kind) {
    case I: return n;
    case Istar: return n + 6;
    case II: return 2;
    case III: return 3;
    case IV: return 4;
    case IVstar: return 8;
    case IIIstar: return 9;
    case IIstar: return 10;
    }
    return 0;
}

KodairaType KodairaType::toggled() const {
    switch (kind) {
    case I: return Instar(n);
    case Istar: return In(n);
    case II: return {IVstar, 0};
    case IVstar: return {II, 0};
    case III: return {IIIstar, 0};
    case IIIstar: return {III, 0};
    case IV: return {IIstar, 0};
    case IIstar: return {IV, 0};
    }
    return *this;
}

void KodairaType::orders(int& vA, int& vB, int& vD) const {
    switch (kind) {
    case I: vA = 0, vB = 0, vD = n; return;
    case Istar: vA = 2, vB = 3, vD = 6 + n; return;
    case II: vA = 1, vB = 1, vD = 2; return;
    case III: vA = 1, vB = 2, vD = 3; return;
    case IV: vA = 2, vB = 2, vD = 4; return;
    case IVstar: vA = 3, vB = 4, vD = 8; return;
    case IIIstar: vA = 3, vB = 5, vD = 9; return;
    case IIstar: vA = 4, vB = 5, vD = 10; return;
    }
}

std::string KodairaType::to_string() const {
    switch (kind) {
    case I: return std::to_string(n);
    case Istar: return std::to_string(n) + "*";
    case II: return "II";
    case III: return "III";
    case IV: return "IV";
    case IVstar: return "IV*";
    case IIIstar: return "III*";
    case IIstar: return "II*";
    }
    return "?";
}

bool operator<(const KodairaType& a, const KodairaType& b) {
    return std::make_tuple(rank(a.kind), a.n) < std::make_tuple(rank(b.kind), b.n);
}

KodairaType classify_orders(int vA, int vB, int vD) {
    auto at_least = [](int v, int k) { return v >= k; };  // kInfinite compares above everything
    if (at_least(vA, 4) && at_least(vB, 6)) throw Error(ErrorKind::NotMinimal, "orders (" + order_string(vA) + "," + order_string(vB) + ") are not minimal");
    auto bad = [&] {
        return Error(ErrorKind::InconsistentOrders,
                     "no fiber type for (vA,vB,vDelta) = (" + order_string(vA) + "," + order_string(vB) + "," + std::to_string(vD) + ")");
    };
    if (vD <= 0) throw bad();
    if (vA == 0) {
        if (vB != 0) throw bad();
        return KodairaType::In(vD);
    }
    if (vD == 2 && vB == 1) return {KodairaType::II, 0};
    if (vD == 3 && vA == 1 && at_least(vB, 2)) return {KodairaType::III, 0};
    if (vD == 4 && at_least(vA, 2) && vB == 2) return {KodairaType::IV, 0};
    if (vD == 6 && at_least(vA, 2) && at_least(vB, 3)) return KodairaType::Instar(0);
    if (vD > 6 && vA == 2 && vB == 3) return KodairaType::Instar(vD - 6);
    if (vD == 8 && at_least(vA, 3) && vB == 4) return {KodairaType::IVstar, 0};
    if (vD == 9 && vA == 3 && at_least(vB, 5)) return {KodairaType::IIIstar, 0};
    if (vD == 10 && at_least(vA, 4) && vB == 5) return {KodairaType::IIstar, 0};
    throw bad();
}

void Configuration::add(const KodairaType& k, int count) {
    if (k.smooth() || count <= 0) return;
    counts_[k] += count;
}

int Configuration::euler() const {
    int e = 0;
    for (auto& [k, c] : counts_) e += c * k.euler();
    return e;
}

int Configuration::fiber_count() const {
    int n = 0;
    for (auto& [k, c] : counts_) n += c;
    return n;
}

bool Configuration::all_semistable() const {
    for (auto& [k, c] : counts_)
        if (!k.semistable()) return false;
    return true;
}

std::string Configuration::to_string() const {
    std::string r = "[";
    bool first = true;
    for (auto& [k, c] : counts_)
        for (int i = 0; i < c; ++i) {
            r += (first ? "" : ",") + k.to_string();
            first = false;
        }
    return r + "]";
}

Configuration Configuration::parse(const std::string& text) {
    std::string t = trim(text);
    if (!t.empty() && t.front() == '[') t = t.substr(1);
    if (!t.empty() && t.back() == ']') t.pop_back();
    Configuration c;
    if (trim(t).empty()) return c;
    for (auto& tok : split(t, ',')) {
        if (tok.empty()) throw Error(ErrorKind::Parse, "empty entry in configuration \"" + text + "\"");
        bool star = tok.back() == '*';
        std::string body = star ? tok.substr(0, tok.size() - 1) : tok;
        KodairaType k;
        if (!body.empty() && std::all_of(body.begin(), body.end(), ::isdigit)) {
            int n = std::stoi(body);
            k = star ? KodairaType::Instar(n) : KodairaType::In(n);
            if (!star && n == 0) throw Error(ErrorKind::Parse, "smooth fiber listed in configuration \"" + text + "\"");
        } else if (body == "II") {
            k = {star ? KodairaType::IIstar : KodairaType::II, 0};
        } else if (body == "III") {
            k = {star ? KodairaType::IIIstar : KodairaType::III, 0};
        } else if (body == "IV") {
            k = {star ? KodairaType::IVstar : KodairaType::IV, 0};
        } else {
            throw Error(ErrorKind::Parse, "unknown fiber \"" + tok + "\" in configuration \"" + text + "\"");
        }
        c.add(k);
    }
    return c;
}

std::vector<FiberCluster> classify_fibers(const WeierstrassModel& m) {
    if (!is_minimal(m)) throw Error(ErrorKind::NotMinimal, "classification needs a minimal model");
    std::vector<FiberCluster> out;
    for (auto& cl : squarefree_decompose(discriminant(m)).clusters)
        for (auto& pa : order_split(cl.factor, m.A()))
            for (auto& pb : order_split(pa.factor, m.B()))
                out.push_back({pb.factor, pb.factor.degree(), pa.order, pb.order, cl.multiplicity,
                               classify_orders(pa.order, pb.order, cl.multiplicity)});
    std::sort(out.begin(), out.end(), [](const FiberCluster& a, const FiberCluster& b) {
        if (a.ktype != b.ktype) return a.ktype < b.ktype;
        return a.place.to_string() < b.place.to_string();
    });
    return out;
}

Configuration configuration_of(const std::vector<FiberCluster>& clusters) {
    Configuration c;
    for (auto& cl : clusters) c.add(cl.ktype, cl.places_count);
    return c;
}

Configuration configuration(const WeierstrassModel& m) { return configuration_of(classify_fibers(m)); }

bool check_semistable_extremal_necessary(const WeierstrassModel& m) {
    Configuration c = configuration(m);
    return c.euler() == 24 && euler_number(m) == 24 && c.all_semistable() && c.fiber_count() == 6;
}

Prediction predict_pullback_type(const KodairaType& f, int e) {
    if (e < 1) throw Error(ErrorKind::InvalidMap, "ramification index must be positive");
    if (f.kind == KodairaType::I) return {KodairaType::In(f.n * e), false};
    int vA = 0, vB = 0, vD = 0;
    f.orders(vA, vB, vD);
    vA *= e, vB *= e, vD *= e;
    int k = std::min({vA / 4, vB / 6, vD / 12});
    vA -= 4 * k, vB -= 6 * k, vD -= 12 * k;
    KodairaType r = by_delta(vA, vD);
    return {r, r.starred()};
}

}  // namespace ellfib
