#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace ellfib {

using Q = mpq_class;
// dense univariate polynomial over Q, index = exponent, no trailing zeros
using QPoly = std::vector<Q>;

namespace qpoly {
void trim(QPoly& p);
int degree(const QPoly& p);  // -1 for zero
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
void divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem);
QPoly monic(const QPoly& p);
std::string to_string(const QPoly& p, char var);
}  // namespace qpoly

class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    static Field extension(QPoly modulus);

    bool is_rational() const { return !d_; }
    int degree() const;
    const QPoly& modulus() const;
    const QPoly& monic_modulus() const;
    std::string to_string() const;

    friend bool operator==(const Field& a, const Field& b);
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    struct Data {
        QPoly modulus;
        QPoly monic;
    };
    std::shared_ptr<const Data> d_;
};

// smallest field containing both; Q embeds in every extension
Field common_field(const Field& a, const Field& b);

class FieldElem {
public:
    FieldElem() = default;
    explicit FieldElem(Field f) : f_(std::move(f)) {}
    FieldElem(Field f, const Q& q);
    FieldElem(Field f, long n) : FieldElem(std::move(f), Q(n)) {}
    FieldElem(Field f, QPoly coeffs);
    static FieldElem generator(const Field& f);

    const Field& field() const { return f_; }
    const QPoly& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_rational() const { return c_.size() <= 1; }
    Q rational() const;
    int sign() const;  // sign of a rational element, throws otherwise

    FieldElem lift(const Field& f) const;
    FieldElem inverse() const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator/=(const FieldElem& o) { return *this *= o.inverse(); }

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
    friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.c_ == b.c_; }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    // single term or rational: no parentheses needed as a coefficient
    bool is_atomic() const;
    std::string to_string() const;

private:
    void reduce();
    Field f_;
    QPoly c_;
};

inline FieldElem field_invert(const FieldElem& x) { return x.inverse(); }
FieldElem pow(FieldElem x, unsigned e);
// exact square root if one exists in the field; supported over Q and quadratic fields
bool field_sqrt(const FieldElem& x, FieldElem& root);
// rational q = r^2 for rational r
bool rational_sqrt(const Q& q, Q& root);

}  // namespace ellfib
