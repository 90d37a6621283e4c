#pragma once
#include <string>
#include "ellfib/catalog.hpp"
#include "ellfib/errors.hpp"
#include "ellfib/parse.hpp"

namespace test {

inline ellfib::HomogPoly P(const std::string& s, const ellfib::Field& f = ellfib::Field()) { return ellfib::parse_homog(s, f); }

inline ellfib::WeierstrassModel W(const std::string& a, const std::string& b, int M = 1, const ellfib::Field& f = ellfib::Field()) {
    return ellfib::WeierstrassModel(P(a, f), P(b, f), M);
}

inline ellfib::WeierstrassModel x411() { return W("-3*t^2*(s^2-3*t^2)", "s*t^3*(2*s^2-9*t^2)"); }

inline ellfib::Field ext(const std::string& modulus) { return ellfib::Field::extension(ellfib::parse_univariate(modulus)); }

// loaded once, shared read-only
inline const ellfib::Catalog& builtin() {
    static const ellfib::Catalog c = ellfib::load_builtin();
    return c;
}

}  // namespace test
