#include "ellfib/weier.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ellfib/errors.hpp"
#include "ellfib/kv.hpp"
#include "ellfib/parse.hpp"

namespace ellfib {

namespace {

FieldElem qconst(const Field& f, long n) { return FieldElem(f, n); }

HomogPoly raw_discriminant(const HomogPoly& A, const HomogPoly& B, const Field& f) {
    HomogPoly d = pow(A, 3) * qconst(f, 4) + pow(B, 2) * qconst(f, 27);
    return d * qconst(f, -16);
}

// first index with a nonzero coefficient and the ratio b/a there, checked on every coefficient
bool poly_ratio(const HomogPoly& a, const HomogPoly& b, FieldElem& r) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.degree() != b.degree()) return false;
    int k = 0;
    while (a.coeff(k).is_zero()) ++k;
    r = b.coeff(k) / a.coeff(k);
    return a * r == b;
}

bool rational_root(const Q& q, unsigned n, Q& root) {
    if (q < 0 && n % 2 == 0) return false;
    mpz_class num = q.get_num(), den = q.get_den(), rn, rd;
    bool neg = num < 0;
    if (neg) num = -num;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) || !mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n)) return false;
    root = Q(neg ? mpz_class(-rn) : rn, rd);
    root.canonicalize();
    return true;
}

}  // namespace

WeierstrassModel::WeierstrassModel(HomogPoly A, HomogPoly B, int M) : M_(M) {
    f_ = common_field(A.field(), B.field());
    A_ = A.lift(f_);
    B_ = B.lift(f_);
    if (M < 1) throw Error(ErrorKind::DegenerateModel, "weight must be positive");
    if (!A_.is_zero() && A_.degree() != 4 * M)
        throw Error(ErrorKind::DegenerateModel, "deg A = " + std::to_string(A_.degree()) + ", expected " + std::to_string(4 * M));
    if (!B_.is_zero() && B_.degree() != 6 * M)
        throw Error(ErrorKind::DegenerateModel, "deg B = " + std::to_string(B_.degree()) + ", expected " + std::to_string(6 * M));
    if (raw_discriminant(A_, B_, f_).is_zero()) throw Error(ErrorKind::DegenerateModel, "discriminant vanishes identically");
}

WeierstrassModel WeierstrassModel::lift(const Field& f) const {
    if (f == f_) return *this;
    return WeierstrassModel(A_.lift(f), B_.lift(f), M_);
}

HomogPoly discriminant(const WeierstrassModel& m) { return raw_discriminant(m.A(), m.B(), m.field()); }

JInvariant reduce_fraction(const HomogPoly& n, const HomogPoly& d) {
    const Field& f = d.field();
    if (n.is_zero()) return {HomogPoly(f), HomogPoly::constant(f, 1), true};
    HomogPoly g = hp_gcd(n, d);
    HomogPoly nn = exact_div(n, g), dd = exact_div(d, g);
    Normalized nd = content_normalize(dd);
    return {nn * nd.unit.inverse(), nd.poly, true};
}

JInvariant j_invariant(const WeierstrassModel& m) {
    const Field& f = m.field();
    HomogPoly num = pow(m.A(), 3) * qconst(f, -1728 * 64);
    return reduce_fraction(num, discriminant(m));
}

bool same_function(const JInvariant& a, const JInvariant& b) {
    return a.numerator * b.denominator == b.numerator * a.denominator;
}

Minimalized minimalize(const WeierstrassModel& m) {
    const Field& f = m.field();
    const HomogPoly &A = m.A(), &B = m.B();
    HomogPoly g = A.is_zero() ? B : B.is_zero() ? A : hp_gcd(A, B);
    HomogPoly removed = HomogPoly::constant(f, 1);
    if (!g.is_constant()) {
        for (auto& pa : order_split(squarefree_part(g), A)) {
            for (auto& pb : order_split(pa.factor, B)) {
                int ea = pa.order == kInfinite ? kInfinite : pa.order / 4;
                int eb = pb.order == kInfinite ? kInfinite : pb.order / 6;
                int e = std::min(ea, eb);
                if (e > 0 && e != kInfinite) removed = removed * pow(pb.factor, e);
            }
        }
    }
    if (removed.is_constant()) return {m, removed};
    if (removed.degree() >= m.M())
        throw Error(ErrorKind::WeightUnderflow, "removing a factor of degree " + std::to_string(removed.degree()) + " from weight " + std::to_string(m.M()));
    HomogPoly A2 = A.is_zero() ? A : exact_div(A, pow(removed, 4));
    HomogPoly B2 = B.is_zero() ? B : exact_div(B, pow(removed, 6));
    return {WeierstrassModel(A2, B2, m.M() - removed.degree()), removed};
}

bool is_minimal(const WeierstrassModel& m) { return minimalize(m).removed.is_constant(); }

WeierstrassModel quadratic_twist(const WeierstrassModel& m, const HomogPoly& alpha) {
    if (alpha.is_zero()) throw Error(ErrorKind::NonSquarefreeTwist, "twist by zero");
    if (!alpha.is_constant() && !is_squarefree(alpha))
        throw Error(ErrorKind::NonSquarefreeTwist, "twist polynomial " + alpha.to_string() + " has a repeated factor");
    if (alpha.degree() % 2)
        throw Error(ErrorKind::OddTwistImbalance, "twist polynomial of odd degree " + std::to_string(alpha.degree()));
    HomogPoly a2 = alpha * alpha;
    WeierstrassModel raw(a2 * m.A(), a2 * alpha * m.B(), m.M() + alpha.degree() / 2);
    return minimalize(raw).model;
}

WeierstrassModel rescale(const WeierstrassModel& m, const FieldElem& u) {
    if (u.is_zero()) throw Error(ErrorKind::DegenerateModel, "rescale by zero");
    FieldElem u2 = u * u;
    return WeierstrassModel(m.A() * (u2 * u2), m.B() * (u2 * u2 * u2), m.M());
}

bool twist_class_ratio(const WeierstrassModel& m1, const WeierstrassModel& m2, FieldElem& u2) {
    if (m1.M() != m2.M()) return false;
    Field f = common_field(m1.field(), m2.field());
    FieldElem ra(f), rb(f);
    if (!poly_ratio(m1.A().lift(f), m2.A().lift(f), ra) || !poly_ratio(m1.B().lift(f), m2.B().lift(f), rb)) return false;
    if (m1.A().is_zero() || m1.B().is_zero())
        throw Error(ErrorKind::Unsupported, "twist ratio needs A and B both nonzero");
    if (rb * rb != ra * ra * ra) return false;
    u2 = rb / ra;
    return true;
}

bool models_equivalent(const WeierstrassModel& m1, const WeierstrassModel& m2, FieldElem* u) {
    if (m1.M() != m2.M()) return false;
    Field f = common_field(m1.field(), m2.field());
    FieldElem ra(f), rb(f);
    if (!poly_ratio(m1.A().lift(f), m2.A().lift(f), ra) || !poly_ratio(m1.B().lift(f), m2.B().lift(f), rb)) return false;
    FieldElem root(f);
    if (!m1.A().is_zero() && !m1.B().is_zero()) {
        FieldElem w = rb / ra;  // u^2
        if (w * w != ra || w * w * w != rb) return false;
        if (!field_sqrt(w, root)) return false;
    } else {
        if (!f.is_rational()) throw Error(ErrorKind::Unsupported, "equivalence with A = 0 or B = 0 is decided over Q only");
        Q r;
        if (m1.A().is_zero()) {
            if (!rational_root(rb.rational(), 6, r)) return false;
        } else if (!rational_root(ra.rational(), 4, r)) {
            return false;
        }
        root = FieldElem(f, r);
    }
    if (u) *u = root;
    return true;
}

int euler_number(const WeierstrassModel& m) {
    if (!is_minimal(m)) throw Error(ErrorKind::NotMinimal, "euler number of a non-minimal model");
    return discriminant(m).degree();
}

namespace {

Q poly_content(const HomogPoly& p) {
    if (p.is_zero()) return 0;
    return content_normalize(p).unit.rational();
}

// primes dividing n found by trial division; a leftover cofactor is kept as one entry
std::map<mpz_class, int> factor_small(mpz_class n) {
    std::map<mpz_class, int> out;
    if (n < 0) n = -n;
    for (unsigned long p = 2; p < (1UL << 20) && n > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_class(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[mpz_class(p)];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

int valuation(mpz_class n, const mpz_class& p) {
    if (n == 0) return kInfinite;
    int v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    return v;
}

int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace

WeierstrassModel canonical_rescale(const WeierstrassModel& m) {
    if (!m.field().is_rational()) return m;
    Q ca = abs(poly_content(m.A())), cb = abs(poly_content(m.B()));
    std::map<mpz_class, int> primes;
    for (const Q* c : {&ca, &cb}) {
        if (*c == 0) continue;
        for (auto& [p, e] : factor_small(c->get_num())) primes[p] = 1;
        for (auto& [p, e] : factor_small(c->get_den())) primes[p] = 1;
    }
    Q u = 1;
    for (auto& [p, unused] : primes) {
        int a = ca == 0 ? kInfinite : valuation(ca.get_num(), p) - valuation(ca.get_den(), p);
        int b = cb == 0 ? kInfinite : valuation(cb.get_num(), p) - valuation(cb.get_den(), p);
        int e = std::max(a == kInfinite ? -kInfinite : ceil_div(-a, 4), b == kInfinite ? -kInfinite : ceil_div(-b, 6));
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), std::abs(e));
        if (e > 0) u *= pe;
        if (e < 0) u /= pe;
    }
    return rescale(m, FieldElem(m.field(), u));
}

WeierstrassModel parse_surface(const std::string& text) { return parse_surface_kv(parse_kv(text)); }

WeierstrassModel parse_surface_kv(const KeyValues& kv) {
    Field f = Field::rationals();
    if (auto fs = kv_find(kv, "field")) f = parse_field(*fs);
    int M;
    try {
        M = std::stoi(kv_require(kv, "M", "surface"));
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::Parse, "surface: M is not an integer");
    }
    return WeierstrassModel(parse_homog(kv_require(kv, "A", "surface"), f), parse_homog(kv_require(kv, "B", "surface"), f), M);
}

std::string format_surface(const WeierstrassModel& m) {
    std::ostringstream os;
    os << "field = " << m.field().to_string() << "\n"
       << "M = " << m.M() << "\n"
       << "A = " << m.A().to_string() << "\n"
       << "B = " << m.B().to_string() << "\n";
    return os.str();
}

}  // namespace ellfib
