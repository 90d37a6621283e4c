#include "ellfib/covers.hpp"

#include <algorithm>
#include <sstream>

#include "ellfib/errors.hpp"
#include "ellfib/kv.hpp"
#include "ellfib/parse.hpp"

namespace ellfib {

HomogPoly Point::place() const { return HomogPoly::linear(b, -a); }

std::string Point::to_string() const {
    if (b.is_zero()) return "inf";
    FieldElem x = a / b;
    return x.is_atomic() ? x.to_string() : "(" + x.to_string() + ")";
}

Point parse_point(const std::string& text, const Field& f) {
    std::string t = trim(text);
    if (t == "inf" || t == "oo" || t == "\xE2\x88\x9E") return Point::infinity(f);
    if (t.size() > 2 && t.front() == '(' && t.back() == ')' && t.find(':') != std::string::npos) {
        auto parts = split(t.substr(1, t.size() - 2), ':');
        if (parts.size() != 2) throw Error(ErrorKind::Parse, "point \"" + text + "\"");
        Point p{parse_constant(parts[0], f), parse_constant(parts[1], f)};
        if (p.a.is_zero() && p.b.is_zero()) throw Error(ErrorKind::Parse, "(0:0) is not a point");
        return p;
    }
    return Point::affine(parse_constant(t, f));
}

RationalMap::RationalMap(HomogPoly N, HomogPoly D) {
    f_ = common_field(N.field(), D.field());
    N_ = N.lift(f_);
    D_ = D.lift(f_);
    if (N_.is_zero() || D_.is_zero()) throw Error(ErrorKind::InvalidMap, "map component is zero");
    if (N_.degree() != D_.degree())
        throw Error(ErrorKind::InvalidMap, "components of degrees " + std::to_string(N_.degree()) + " and " + std::to_string(D_.degree()));
    if (N_.degree() < 1) throw Error(ErrorKind::InvalidMap, "constant map");
    if (!hp_gcd(N_, D_).is_constant()) throw Error(ErrorKind::InvalidMap, "components share the factor " + hp_gcd(N_, D_).to_string());
}

RationalMap RationalMap::identity(const Field& f) { return RationalMap(HomogPoly::s(f), HomogPoly::t(f)); }

RationalMap RationalMap::lift(const Field& f) const {
    if (f == f_) return *this;
    return RationalMap(N_.lift(f), D_.lift(f));
}

std::string RationalMap::to_string() const { return "(" + N_.to_string() + " : " + D_.to_string() + ")"; }

RationalMap parse_map_inline(const std::string& text, const Field& f) {
    std::string t = trim(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw Error(ErrorKind::Parse, "map must look like (N : D): \"" + text + "\"");
    auto parts = split(t.substr(1, t.size() - 2), ':');
    if (parts.size() != 2) throw Error(ErrorKind::Parse, "map must look like (N : D): \"" + text + "\"");
    return RationalMap(parse_homog(parts[0], f), parse_homog(parts[1], f));
}

std::string RamificationProfile::to_string() const {
    std::string r = "(";
    for (size_t i = 0; i < indices.size(); ++i) r += (i ? "," : "") + std::to_string(indices[i]);
    return r + ")";
}

std::vector<SquarefreeCluster> preimage_clusters(const RationalMap& pi, const HomogPoly& place) {
    return squarefree_decompose(substitute(place, pi.N(), pi.D())).clusters;
}

RamificationProfile ramification_profile(const RationalMap& pi, const Point& p) {
    RamificationProfile r{p, {}};
    for (auto& c : preimage_clusters(pi, p.place()))
        for (int i = 0; i < c.factor.degree(); ++i) r.indices.push_back(c.multiplicity);
    std::sort(r.indices.rbegin(), r.indices.rend());
    return r;
}

HomogPoly wronskian(const RationalMap& pi) {
    return d_ds(pi.N()) * d_dt(pi.D()) - d_dt(pi.N()) * d_ds(pi.D());
}

bool riemann_hurwitz_verify(const RationalMap& pi, const std::vector<Point>& branch_points) {
    int d = pi.degree(), total = 0;
    HomogPoly w = wronskian(pi);
    if (w.is_zero() || w.degree() != 2 * d - 2) return false;
    for (auto& p : branch_points) {
        for (int e : ramification_profile(pi, p).indices) total += e - 1;
        HomogPoly F = substitute(p.place(), pi.N(), pi.D());
        for (HomogPoly g = hp_gcd(w, F); !g.is_constant(); g = hp_gcd(w, F)) w = exact_div(w, g);
    }
    return total == 2 * d - 2 && w.is_constant();
}

HurwitzCount hurwitz_count(int d, const std::vector<std::vector<int>>& profiles, int extra_cusps, int extra_preimages) {
    HurwitzCount h{0, 2 * d - 2};
    for (auto& p : profiles) {
        int sum = 0;
        for (int e : p) sum += e;
        if (sum != d) throw Error(ErrorKind::InvalidMap, "profile does not sum to the degree " + std::to_string(d));
        h.total += d - static_cast<int>(p.size());
    }
    h.total += extra_cusps * d - extra_preimages;
    return h;
}

bool hurwitz_feasible(int d, const std::vector<std::vector<int>>& profiles) { return hurwitz_count(d, profiles).feasible(); }

WeierstrassModel substitute_model(const WeierstrassModel& m, const RationalMap& pi) {
    return WeierstrassModel(substitute(m.A(), pi.N(), pi.D()), substitute(m.B(), pi.N(), pi.D()), m.M() * pi.degree());
}

WeierstrassModel pullback(const WeierstrassModel& m, const RationalMap& pi) { return minimalize(substitute_model(m, pi)).model; }

RationalMap mobius_from_three_points(const Point& p, const Point& q, const Point& r) {
    auto cross = [](const Point& x, const Point& y) { return x.a * y.b - x.b * y.a; };
    if (cross(p, q).is_zero() || cross(q, r).is_zero() || cross(p, r).is_zero())
        throw Error(ErrorKind::DegeneratePoints, "points must be pairwise distinct");
    // columns r and p scaled so that their sum is q
    FieldElem det = r.a * p.b - r.b * p.a;
    FieldElem lam = (q.a * p.b - q.b * p.a) / det;
    FieldElem mu = (r.a * q.b - r.b * q.a) / det;
    return RationalMap(HomogPoly::linear(lam * r.a, mu * p.a), HomogPoly::linear(lam * r.b, mu * p.b));
}

RationalMap compose(const RationalMap& outer, const RationalMap& inner) {
    return RationalMap(substitute(outer.N(), inner.N(), inner.D()), substitute(outer.D(), inner.N(), inner.D()));
}

HomogPoly starred_places(const WeierstrassModel& m) {
    HomogPoly r = HomogPoly::constant(m.field(), 1);
    for (auto& c : classify_fibers(m))
        if (c.ktype.starred()) r = r * c.place;
    return r;
}

WeierstrassModel transfer_star(const WeierstrassModel& m, const HomogPoly& from_place, const HomogPoly& to_place) {
    Field f = common_field(m.field(), common_field(from_place.field(), to_place.field()));
    WeierstrassModel mm = m.lift(f);
    if (from_place.is_constant() || !is_squarefree(from_place))
        throw Error(ErrorKind::NotStarred, "source place must be a non-constant squarefree polynomial");
    HomogPoly from = normalized(from_place.lift(f));
    if (!divides(from, starred_places(mm))) throw Error(ErrorKind::NotStarred, from.to_string() + " does not carry a non-reduced fiber");
    if (!hp_gcd(from, to_place.lift(f)).is_constant()) throw Error(ErrorKind::NotStarred, "source and target places meet");
    return quadratic_twist(mm, from * to_place.lift(f));
}

MapFile parse_map_file(const std::string& text) {
    KeyValues kv = parse_kv(text);
    Field f;
    if (auto fs = kv_find(kv, "field")) f = parse_field(*fs);
    RationalMap pi(parse_homog(kv_require(kv, "N", "map"), f), parse_homog(kv_require(kv, "D", "map"), f));
    if (auto d = kv_find(kv, "degree")) {
        if (std::to_string(pi.degree()) != *d)
            throw Error(ErrorKind::InvalidMap, "declared degree " + *d + " but components have degree " + std::to_string(pi.degree()));
    }
    MapFile out{pi, false, HomogPoly(pi.field())};
    if (auto id = kv_find(kv, "identity_check")) {
        out.has_identity = true;
        out.identity = parse_homog(*id, f);
        if (pi.N() - pi.D() != out.identity)
            throw Error(ErrorKind::CatalogCorrupt, "identity_check fails: N - D != " + *id);
    }
    return out;
}

std::string format_map(const RationalMap& pi) {
    std::ostringstream os;
    os << "field = " << pi.field().to_string() << "\n"
       << "degree = " << pi.degree() << "\n"
       << "N = " << pi.N().to_string() << "\n"
       << "D = " << pi.D().to_string() << "\n";
    return os.str();
}

}  // namespace ellfib
