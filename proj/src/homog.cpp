#include "ellfib/homog.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ellfib/errors.hpp"

namespace ellfib {

namespace {

using UPoly = std::vector<FieldElem>;  // univariate in s, index = exponent

void utrim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly umonic(UPoly p) {
    if (p.empty() || p.back().is_one()) return p;
    FieldElem inv = p.back().inverse();
    for (auto& c : p) c *= inv;
    return p;
}

void udivmod(const UPoly& a, const UPoly& b, UPoly* quo, UPoly& rem) {
    rem = a;
    int db = udeg(b);
    if (quo) quo->clear();
    if (udeg(a) < db) return;
    if (quo) quo->assign(a.size() - b.size() + 1, FieldElem(b.back().field()));
    FieldElem inv = b.back().inverse();
    bool unit_lead = b.back().is_one();
    for (int i = udeg(rem); i >= db; --i) {
        if (rem[i].is_zero()) continue;
        FieldElem c = unit_lead ? rem[i] : rem[i] * inv;
        if (quo) (*quo)[i - db] = c;
        for (int j = 0; j < db; ++j)
            if (!b[j].is_zero()) rem[i - db + j] -= c * b[j];
        rem[i] = FieldElem(rem[i].field());
    }
    utrim(rem);
    if (quo) utrim(*quo);
}

UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r;
        udivmod(a, b, nullptr, r);
        a = std::move(b);
        b = umonic(std::move(r));
    }
    return umonic(std::move(a));
}

UPoly uexact_div(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    udivmod(a, b, &q, r);
    if (!r.empty()) throw Error(ErrorKind::InexactDivision, "univariate division left a remainder");
    return q;
}

UPoly uderiv(const UPoly& p) {
    UPoly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * FieldElem(p[i].field(), Q(static_cast<long>(i))));
    utrim(r);
    return r;
}

UPoly usub(const UPoly& a, const UPoly& b, const Field& f) {
    UPoly r(std::max(a.size(), b.size()), FieldElem(f));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    utrim(r);
    return r;
}

UPoly dehomogenize(const HomogPoly& f) {
    UPoly u(f.coeffs().begin(), f.coeffs().end());
    utrim(u);
    return u;
}

HomogPoly homogenize(const UPoly& u, int degree, const Field& f) {
    std::vector<FieldElem> c(degree + 1, FieldElem(f));
    for (size_t i = 0; i < u.size(); ++i) c[i] = u[i];
    return HomogPoly(f, degree, std::move(c));
}

std::string term(const FieldElem& c, const std::string& mono, bool& negative) {
    std::string body;
    if (c.is_atomic()) {
        const QPoly& q = c.coeffs();
        int i = static_cast<int>(q.size()) - 1;
        Q mag = abs(q[i]);
        negative = q[i] < 0;
        std::string gen = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
        std::vector<std::string> parts;
        if (mag != 1 || (gen.empty() && mono.empty())) parts.push_back(mag.get_str());
        if (!gen.empty()) parts.push_back(gen);
        if (!mono.empty()) parts.push_back(mono);
        for (size_t k = 0; k < parts.size(); ++k) body += (k ? "*" : "") + parts[k];
    } else {
        negative = false;
        body = "(" + c.to_string() + ")";
        if (!mono.empty()) body += "*" + mono;
    }
    return body;
}

}  // namespace

HomogPoly::HomogPoly(Field f) : f_(std::move(f)), deg_(0), c_(1, FieldElem(f_)), zero_(true) {}

HomogPoly::HomogPoly(Field f, int degree, std::vector<FieldElem> coeffs)
    : f_(std::move(f)), deg_(degree), c_(std::move(coeffs)) {
    if (degree < 0 || static_cast<int>(c_.size()) != degree + 1)
        throw Error(ErrorKind::NonHomogeneous, "coefficient list does not match degree");
    for (auto& c : c_)
        if (c.field() != f_) c = c.lift(f_);
    settle();
}

void HomogPoly::settle() {
    zero_ = std::all_of(c_.begin(), c_.end(), [](const FieldElem& c) { return c.is_zero(); });
    if (zero_) {
        deg_ = 0;
        c_.assign(1, FieldElem(f_));
    }
}

HomogPoly HomogPoly::constant(const FieldElem& c) { return HomogPoly(c.field(), 0, {c}); }

HomogPoly HomogPoly::monomial(const FieldElem& c, int s_exp, int t_exp) {
    std::vector<FieldElem> v(s_exp + t_exp + 1, FieldElem(c.field()));
    v[s_exp] = c;
    return HomogPoly(c.field(), s_exp + t_exp, std::move(v));
}

HomogPoly HomogPoly::linear(const FieldElem& a, const FieldElem& b) {
    Field f = common_field(a.field(), b.field());
    return HomogPoly(f, 1, {b.lift(f), a.lift(f)});
}

const FieldElem& HomogPoly::leading() const {
    for (int k = deg_; k >= 0; --k)
        if (!c_[k].is_zero()) return c_[k];
    return c_[0];
}

int HomogPoly::s_order() const {
    if (zero_) return kInfinite;
    int k = 0;
    while (c_[k].is_zero()) ++k;
    return k;
}

int HomogPoly::t_order() const {
    if (zero_) return kInfinite;
    int k = deg_;
    while (c_[k].is_zero()) --k;
    return deg_ - k;
}

HomogPoly HomogPoly::lift(const Field& f) const {
    if (f == f_) return *this;
    std::vector<FieldElem> c;
    for (auto& x : c_) c.push_back(x.lift(f));
    return HomogPoly(f, deg_, std::move(c));
}

HomogPoly HomogPoly::operator-() const {
    HomogPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& o) {
    if (o.zero_) return *this;
    Field f = common_field(f_, o.f_);
    if (zero_) {
        *this = o.lift(f);
        return *this;
    }
    if (deg_ != o.deg_)
        throw Error(ErrorKind::NonHomogeneous, "adding degrees " + std::to_string(deg_) + " and " + std::to_string(o.deg_));
    f_ = f;
    for (int k = 0; k <= deg_; ++k) c_[k] += o.c_[k];
    settle();
    return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& o) { return *this += -o; }

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
    Field f = common_field(a.f_, b.f_);
    if (a.zero_ || b.zero_) return HomogPoly(f);
    int d = a.deg_ + b.deg_;
    std::vector<FieldElem> c(d + 1, FieldElem(f));
    for (int i = 0; i <= a.deg_; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; j <= b.deg_; ++j)
            if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
    }
    return HomogPoly(f, d, std::move(c));
}

HomogPoly operator*(const HomogPoly& a, const FieldElem& x) {
    Field f = common_field(a.f_, x.field());
    if (x.is_zero() || a.zero_) return HomogPoly(f);
    std::vector<FieldElem> c;
    for (auto& y : a.c_) c.push_back(y * x);
    return HomogPoly(f, a.deg_, std::move(c));
}

bool operator==(const HomogPoly& a, const HomogPoly& b) {
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
    return a.deg_ == b.deg_ && a.c_ == b.c_;
}

std::string HomogPoly::to_string() const {
    if (zero_) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = deg_; k >= 0; --k) {
        if (c_[k].is_zero()) continue;
        std::string mono;
        int j = deg_ - k;
        if (k) mono += k == 1 ? "s" : "s^" + std::to_string(k);
        if (j) mono += std::string(k ? "*" : "") + (j == 1 ? "t" : "t^" + std::to_string(j));
        bool neg;
        std::string body = term(c_[k], mono, neg);
        if (first)
            os << (neg ? "-" : "") << body;
        else
            os << (neg ? " - " : " + ") << body;
        first = false;
    }
    return os.str();
}

HomogPoly pow(const HomogPoly& f, unsigned e) {
    HomogPoly r = HomogPoly::constant(FieldElem(f.field(), 1L));
    HomogPoly b = f;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

HomogPoly substitute(const HomogPoly& f, const HomogPoly& N, const HomogPoly& D) {
    Field fld = common_field(common_field(f.field(), N.field()), D.field());
    int d = f.degree();
    if (N.degree() != D.degree() && !N.is_zero() && !D.is_zero())
        throw Error(ErrorKind::NonHomogeneous, "substituted pair has unequal degrees");
    if (f.is_zero()) return HomogPoly(fld);
    std::vector<HomogPoly> np{HomogPoly::constant(FieldElem(fld, 1L))}, dp = np;
    for (int k = 1; k <= d; ++k) {
        np.push_back(np.back() * N);
        dp.push_back(dp.back() * D);
    }
    HomogPoly r(fld);
    for (int k = 0; k <= d; ++k)
        if (!f.coeff(k).is_zero()) r += np[k] * dp[d - k] * f.coeff(k);
    return r;
}

HomogPoly d_ds(const HomogPoly& f) {
    if (f.is_zero() || f.degree() == 0) return HomogPoly(f.field());
    std::vector<FieldElem> c;
    for (int k = 1; k <= f.degree(); ++k) c.push_back(f.coeff(k) * FieldElem(f.field(), Q(k)));
    return HomogPoly(f.field(), f.degree() - 1, std::move(c));
}

HomogPoly d_dt(const HomogPoly& f) {
    if (f.is_zero() || f.degree() == 0) return HomogPoly(f.field());
    std::vector<FieldElem> c;
    int d = f.degree();
    for (int k = 0; k < d; ++k) c.push_back(f.coeff(k) * FieldElem(f.field(), Q(d - k)));
    return HomogPoly(f.field(), d - 1, std::move(c));
}

bool divides(const HomogPoly& g, const HomogPoly& f, HomogPoly* quo) {
    Field fld = common_field(f.field(), g.field());
    if (g.is_zero()) throw Error(ErrorKind::InexactDivision, "division by the zero polynomial");
    if (f.is_zero()) {
        if (quo) *quo = HomogPoly(fld);
        return true;
    }
    if (g.degree() > f.degree()) return false;
    int tg = g.t_order(), tf = f.t_order();
    if (tg > tf) return false;
    UPoly q, r;
    udivmod(dehomogenize(f.lift(fld)), dehomogenize(g.lift(fld)), &q, r);
    if (!r.empty()) return false;
    if (quo) *quo = homogenize(q, f.degree() - g.degree(), fld);
    return true;
}

HomogPoly exact_div(const HomogPoly& f, const HomogPoly& g) {
    HomogPoly q;
    if (!divides(g, f, &q))
        throw Error(ErrorKind::InexactDivision, "(" + g.to_string() + ") does not divide (" + f.to_string() + ")");
    return q;
}

Normalized content_normalize(const HomogPoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::InexactDivision, "content of the zero polynomial");
    const Field& fld = f.field();
    FieldElem unit(fld);
    if (fld.is_rational()) {
        mpz_class den = 1, num = 0;
        for (auto& c : f.coeffs()) {
            if (c.is_zero()) continue;
            Q q = c.rational();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
        }
        Q u(num, den);
        u.canonicalize();
        if (f.leading().sign() < 0) u = -u;
        unit = FieldElem(fld, u);
    } else {
        unit = f.leading();
    }
    return {unit, f * unit.inverse()};
}

HomogPoly hp_gcd(const HomogPoly& f, const HomogPoly& g) {
    if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::InexactDivision, "gcd of two zero polynomials");
    if (f.is_zero()) return normalized(g);
    if (g.is_zero()) return normalized(f);
    Field fld = common_field(f.field(), g.field());
    int tp = std::min(f.t_order(), g.t_order());
    UPoly u = ugcd(dehomogenize(f.lift(fld)), dehomogenize(g.lift(fld)));
    return normalized(homogenize(u, udeg(u) + tp, fld));
}

SquarefreeDecomposition squarefree_decompose(const HomogPoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::InexactDivision, "squarefree decomposition of zero");
    const Field& fld = f.field();
    SquarefreeDecomposition out;
    int tp = f.t_order();
    if (tp > 0) out.clusters.push_back({HomogPoly::t(fld), tp});
    // Yun on the dehomogenization
    UPoly u = dehomogenize(f);
    if (udeg(u) > 0) {
        UPoly du = uderiv(u);
        UPoly b = ugcd(u, du);
        UPoly c = uexact_div(u, b);
        UPoly d = usub(uexact_div(du, b), uderiv(c), fld);
        for (int i = 1; udeg(c) > 0; ++i) {
            UPoly a = ugcd(c, d);
            if (udeg(a) > 0) out.clusters.push_back({normalized(homogenize(a, udeg(a), fld)), i});
            c = uexact_div(c, a);
            d = usub(uexact_div(d, a), uderiv(c), fld);
        }
    }
    std::stable_sort(out.clusters.begin(), out.clusters.end(),
                     [](const SquarefreeCluster& x, const SquarefreeCluster& y) { return x.multiplicity < y.multiplicity; });
    FieldElem lead(fld, 1L);
    for (auto& cl : out.clusters) lead *= pow(cl.factor.leading(), cl.multiplicity);
    out.unit = f.leading() * lead.inverse();
    return out;
}

bool is_squarefree(const HomogPoly& f) {
    if (f.is_zero()) return false;
    for (auto& c : squarefree_decompose(f).clusters)
        if (c.multiplicity > 1) return false;
    return true;
}

HomogPoly squarefree_part(const HomogPoly& f) {
    HomogPoly r = HomogPoly::constant(FieldElem(f.field(), 1L));
    for (auto& c : squarefree_decompose(f).clusters) r = r * c.factor;
    return r;
}

std::vector<OrderPiece> order_split(const HomogPoly& base, const HomogPoly& target) {
    if (base.is_zero()) throw Error(ErrorKind::InexactDivision, "order_split on the zero base");
    if (target.is_zero()) return {{normalized(base), kInfinite}};
    std::vector<OrderPiece> out;
    HomogPoly rem = normalized(base), cur = target;
    for (int k = 0;; ++k) {
        HomogPoly g = hp_gcd(rem, cur);
        if (g.degree() < rem.degree()) out.push_back({normalized(exact_div(rem, g)), k});
        if (g.is_constant()) break;
        rem = g;
        cur = exact_div(cur, rem);
    }
    return out;
}

std::string order_string(int order) { return order == kInfinite ? "inf" : std::to_string(order); }

}  // namespace ellfib
