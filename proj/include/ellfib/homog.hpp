#pragma once

#include <climits>
#include <string>
#include <vector>

#include "ellfib/field.hpp"

namespace ellfib {

// homogeneous polynomial in (s,t); coefficient of s^k t^(d-k) at index k
class HomogPoly {
public:
    HomogPoly() : HomogPoly(Field()) {}
    explicit HomogPoly(Field f);
    HomogPoly(Field f, int degree, std::vector<FieldElem> coeffs);

    static HomogPoly constant(const FieldElem& c);
    static HomogPoly constant(const Field& f, const Q& c) { return constant(FieldElem(f, c)); }
    static HomogPoly monomial(const FieldElem& c, int s_exp, int t_exp);
    static HomogPoly s(const Field& f) { return monomial(FieldElem(f, 1L), 1, 0); }
    static HomogPoly t(const Field& f) { return monomial(FieldElem(f, 1L), 0, 1); }
    // a*s + b*t
    static HomogPoly linear(const FieldElem& a, const FieldElem& b);

    const Field& field() const { return f_; }
    int degree() const { return deg_; }
    bool is_zero() const { return zero_; }
    bool is_constant() const { return deg_ == 0; }
    const FieldElem& coeff(int k) const { return c_[k]; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    // coefficient of the highest power of s present
    const FieldElem& leading() const;
    int s_order() const;
    int t_order() const;
    HomogPoly lift(const Field& f) const;

    HomogPoly operator-() const;
    HomogPoly& operator+=(const HomogPoly& o);
    HomogPoly& operator-=(const HomogPoly& o);
    friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
    friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
    friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);
    friend HomogPoly operator*(const HomogPoly& a, const FieldElem& c);
    friend HomogPoly operator*(const FieldElem& c, const HomogPoly& a) { return a * c; }
    friend bool operator==(const HomogPoly& a, const HomogPoly& b);
    friend bool operator!=(const HomogPoly& a, const HomogPoly& b) { return !(a == b); }

    std::string to_string() const;

private:
    Field f_;
    int deg_ = 0;
    std::vector<FieldElem> c_;
    bool zero_ = true;
    void settle();
};

HomogPoly pow(const HomogPoly& f, unsigned e);
// f(N, D): every s^k t^(d-k) becomes N^k D^(d-k)
HomogPoly substitute(const HomogPoly& f, const HomogPoly& N, const HomogPoly& D);
HomogPoly d_ds(const HomogPoly& f);
HomogPoly d_dt(const HomogPoly& f);

bool divides(const HomogPoly& g, const HomogPoly& f, HomogPoly* quo = nullptr);
HomogPoly exact_div(const HomogPoly& f, const HomogPoly& g);

struct Normalized {
    FieldElem unit;
    HomogPoly poly;
};
Normalized content_normalize(const HomogPoly& f);
inline HomogPoly normalized(const HomogPoly& f) { return content_normalize(f).poly; }

HomogPoly hp_gcd(const HomogPoly& f, const HomogPoly& g);

struct SquarefreeCluster {
    HomogPoly factor;
    int multiplicity;
};
struct SquarefreeDecomposition {
    FieldElem unit;
    std::vector<SquarefreeCluster> clusters;
};
SquarefreeDecomposition squarefree_decompose(const HomogPoly& f);
bool is_squarefree(const HomogPoly& f);
HomogPoly squarefree_part(const HomogPoly& f);

constexpr int kInfinite = INT_MAX;
struct OrderPiece {
    HomogPoly factor;
    int order;  // kInfinite for the zero target
};
std::vector<OrderPiece> order_split(const HomogPoly& base, const HomogPoly& target);
std::string order_string(int order);

}  // namespace ellfib
