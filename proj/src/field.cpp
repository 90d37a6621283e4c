#include "ellfib/field.hpp"

#include <sstream>

#include "ellfib/errors.hpp"

namespace ellfib {

namespace qpoly {

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
    rem = a;
    quo.clear();
    int db = degree(b);
    if (db < 0) throw Error(ErrorKind::InexactDivision, "division by zero polynomial");
    if (degree(a) < db) return;
    quo.assign(a.size() - b.size() + 1, Q(0));
    Q lead_inv = 1 / b.back();
    for (int i = degree(rem); i >= db; --i) {
        if (rem[i] == 0) continue;
        Q c = rem[i] * lead_inv;
        quo[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
    }
    trim(rem);
    trim(quo);
}

QPoly monic(const QPoly& p) {
    if (p.empty()) return p;
    QPoly r = p;
    Q inv = 1 / p.back();
    for (auto& c : r) c *= inv;
    return r;
}

std::string to_string(const QPoly& p, char var) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(p); i >= 0; --i) {
        if (p[i] == 0) continue;
        Q c = p[i];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        c = abs(c);
        first = false;
        if (i == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) os << c.get_str() << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

}  // namespace qpoly

Field Field::extension(QPoly modulus) {
    qpoly::trim(modulus);
    if (qpoly::degree(modulus) < 2)
        throw Error(ErrorKind::Parse, "extension modulus must have degree at least 2");
    Field f;
    auto d = std::make_shared<Data>();
    d->monic = qpoly::monic(modulus);
    d->modulus = std::move(modulus);
    f.d_ = std::move(d);
    return f;
}

int Field::degree() const { return d_ ? qpoly::degree(d_->modulus) : 1; }

const QPoly& Field::modulus() const {
    static const QPoly empty;
    return d_ ? d_->modulus : empty;
}

const QPoly& Field::monic_modulus() const {
    static const QPoly empty;
    return d_ ? d_->monic : empty;
}

std::string Field::to_string() const {
    if (!d_) return "rationals";
    return "extension: " + qpoly::to_string(d_->modulus, 'x');
}

bool operator==(const Field& a, const Field& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.d_->monic == b.d_->monic;
}

Field common_field(const Field& a, const Field& b) {
    if (a.is_rational()) return b;
    if (b.is_rational() || a == b) return a;
    throw Error(ErrorKind::FieldMismatch, a.to_string() + " vs " + b.to_string());
}

FieldElem::FieldElem(Field f, const Q& q) : f_(std::move(f)) {
    if (q != 0) c_.push_back(q);
}

FieldElem::FieldElem(Field f, QPoly coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    reduce();
}

FieldElem FieldElem::generator(const Field& f) {
    if (f.is_rational()) throw Error(ErrorKind::FieldMismatch, "the rationals have no generator");
    return FieldElem(f, QPoly{Q(0), Q(1)});
}

void FieldElem::reduce() {
    qpoly::trim(c_);
    if (f_.is_rational()) {
        if (c_.size() > 1) throw Error(ErrorKind::FieldMismatch, "generator used over the rationals");
        return;
    }
    const QPoly& m = f_.monic_modulus();
    int n = qpoly::degree(m);
    for (int i = qpoly::degree(c_); i >= n; --i) {
        if (c_[i] == 0) continue;
        Q c = c_[i];
        for (int j = 0; j <= n; ++j) c_[i - n + j] -= c * m[j];
    }
    qpoly::trim(c_);
}

Q FieldElem::rational() const {
    if (c_.size() > 1) throw Error(ErrorKind::FieldMismatch, "element " + to_string() + " is not rational");
    return c_.empty() ? Q(0) : c_[0];
}

int FieldElem::sign() const { return sgn(rational()); }

FieldElem FieldElem::lift(const Field& f) const {
    if (f == f_) return *this;
    if (!f_.is_rational()) throw Error(ErrorKind::FieldMismatch, "cannot move " + f_.to_string() + " into " + f.to_string());
    FieldElem r(f);
    r.c_ = c_;
    return r;
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    if (f_ != o.f_) f_ = common_field(f_, o.f_);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    qpoly::trim(c_);
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
    if (f_ != o.f_) f_ = common_field(f_, o.f_);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    qpoly::trim(c_);
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    if (f_ != o.f_) f_ = common_field(f_, o.f_);
    if (c_.size() == 1 && o.c_.size() == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    c_ = qpoly::mul(c_, o.c_);
    reduce();
    return *this;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw Error(ErrorKind::InexactDivision, "inverse of zero");
    if (c_.size() == 1) return FieldElem(f_, 1 / c_[0]);
    // extended euclid: track s with s*x = r (mod m)
    QPoly r0 = f_.monic_modulus(), r1 = c_;
    QPoly s0, s1{Q(1)};
    while (qpoly::degree(r1) > 0) {
        QPoly q, r;
        qpoly::divmod(r0, r1, q, r);
        QPoly s = qpoly::sub(s0, qpoly::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty()) throw ZeroDivisor(qpoly::to_string(qpoly::monic(r0), 'a'));
    Q inv = 1 / r1[0];
    for (auto& c : s1) c *= inv;
    return FieldElem(f_, s1);
}

bool FieldElem::is_atomic() const {
    if (c_.size() <= 1) return true;
    int nz = 0;
    for (auto& c : c_) nz += c != 0;
    return nz == 1;
}

std::string FieldElem::to_string() const { return qpoly::to_string(c_, 'a'); }

FieldElem pow(FieldElem x, unsigned e) {
    FieldElem r(x.field(), Q(1));
    while (e) {
        if (e & 1) r *= x;
        e >>= 1;
        if (e) x *= x;
    }
    return r;
}

bool rational_sqrt(const Q& q, Q& root) {
    if (q < 0) return false;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    root = Q(n, d);
    root.canonicalize();
    return true;
}

bool field_sqrt(const FieldElem& x, FieldElem& root) {
    const Field& f = x.field();
    if (x.is_rational() && (f.is_rational() || f.degree() % 2 == 1)) {
        // odd degree extensions contain no new square roots of rationals
        Q r;
        if (!rational_sqrt(x.rational(), r)) return false;
        root = FieldElem(f, r);
        return true;
    }
    if (f.degree() != 2)
        throw Error(ErrorKind::Unsupported, "square roots are only decided over Q and quadratic fields");
    // a^2 = al*a + be;  (u + v a)^2 = p + q a
    const QPoly& m = f.monic_modulus();
    Q al = -m[1], be = -m[0];
    QPoly c = x.coeffs();
    c.resize(2);
    Q p = c[0], q = c[1];
    std::vector<FieldElem> cands;
    Q r;
    if (q == 0 && rational_sqrt(p, r)) cands.emplace_back(f, r);
    // v != 0: (al^2+4be) V^2 - (2 al q + 4p) V + q^2 = 0 with V = v^2
    Q qa = al * al + 4 * be, qb = -(2 * al * q + 4 * p), qc = q * q;
    std::vector<Q> vs;
    if (qa == 0) {
        if (qb != 0) vs.push_back(-qc / qb);
    } else {
        Q disc = qb * qb - 4 * qa * qc, sd;
        if (rational_sqrt(disc, sd)) {
            vs.push_back((-qb + sd) / (2 * qa));
            vs.push_back((-qb - sd) / (2 * qa));
        }
    }
    for (auto& V : vs) {
        Q v;
        if (V == 0 || !rational_sqrt(V, v)) continue;
        Q u = (q - al * V) / (2 * v);
        cands.emplace_back(f, QPoly{u, v});
    }
    for (auto& cand : cands) {
        if (cand * cand == x) {
            root = cand;
            return true;
        }
    }
    return false;
}

}  // namespace ellfib
