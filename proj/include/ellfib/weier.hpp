#pragma once

#include <string>

#include "ellfib/homog.hpp"
#include "ellfib/kv.hpp"

namespace ellfib {

// y^2 = x^3 + A x + B with deg A = 4M, deg B = 6M
class WeierstrassModel {
public:
    WeierstrassModel(HomogPoly A, HomogPoly B, int M);

    const HomogPoly& A() const { return A_; }
    const HomogPoly& B() const { return B_; }
    int M() const { return M_; }
    const Field& field() const { return f_; }
    WeierstrassModel lift(const Field& f) const;

private:
    HomogPoly A_, B_;
    int M_;
    Field f_;
};

struct JInvariant {
    HomogPoly numerator, denominator;
    bool reduced = false;
};

struct Minimalized {
    WeierstrassModel model;
    HomogPoly removed;
};

HomogPoly discriminant(const WeierstrassModel& m);
JInvariant j_invariant(const WeierstrassModel& m);
// reduce n/d and scale so that d is content normalized
JInvariant reduce_fraction(const HomogPoly& n, const HomogPoly& d);
bool same_function(const JInvariant& a, const JInvariant& b);

Minimalized minimalize(const WeierstrassModel& m);
bool is_minimal(const WeierstrassModel& m);
WeierstrassModel quadratic_twist(const WeierstrassModel& m, const HomogPoly& alpha);
WeierstrassModel rescale(const WeierstrassModel& m, const FieldElem& u);
// u with m2 = (u^4 A1, u^6 B1), if it exists in the field
bool models_equivalent(const WeierstrassModel& m1, const WeierstrassModel& m2, FieldElem* u = nullptr);
// u^2 with m2 = (u^4 A1, u^6 B1) for u possibly outside the field; false if no such u exists
bool twist_class_ratio(const WeierstrassModel& m1, const WeierstrassModel& m2, FieldElem& u2);
int euler_number(const WeierstrassModel& m);
// over Q: the positive rescale with integral coefficients and no p^4 | cont(A), p^6 | cont(B)
WeierstrassModel canonical_rescale(const WeierstrassModel& m);

// surface file: field, M, A, B lines
WeierstrassModel parse_surface(const std::string& text);
WeierstrassModel parse_surface_kv(const KeyValues& kv);
std::string format_surface(const WeierstrassModel& m);

}  // namespace ellfib
