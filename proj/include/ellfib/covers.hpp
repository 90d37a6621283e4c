#pragma once

#include <string>
#include <vector>

#include "ellfib/fibers.hpp"
#include "ellfib/weier.hpp"

namespace ellfib {

// the point (a:b) of the projective line; infinity is (1:0)
struct Point {
    FieldElem a, b;
    static Point affine(const FieldElem& x) { return {x, FieldElem(x.field(), 1L)}; }
    static Point infinity(const Field& f) { return {FieldElem(f, 1L), FieldElem(f)}; }
    // b*s - a*t, vanishing exactly at the point
    HomogPoly place() const;
    std::string to_string() const;
};
Point parse_point(const std::string& text, const Field& f);

class RationalMap {
public:
    RationalMap(HomogPoly N, HomogPoly D);
    static RationalMap identity(const Field& f);

    const HomogPoly& N() const { return N_; }
    const HomogPoly& D() const { return D_; }
    int degree() const { return N_.degree(); }
    const Field& field() const { return f_; }
    RationalMap lift(const Field& f) const;
    std::string to_string() const;

private:
    HomogPoly N_, D_;
    Field f_;
};

// "(N : D)"
RationalMap parse_map_inline(const std::string& text, const Field& f);

struct RamificationProfile {
    Point point;
    std::vector<int> indices;  // descending
    int preimages() const { return static_cast<int>(indices.size()); }
    std::string to_string() const;
};
RamificationProfile ramification_profile(const RationalMap& pi, const Point& p);
// ramification over all roots of a squarefree place: clusters of place(N, D) with their indices
std::vector<SquarefreeCluster> preimage_clusters(const RationalMap& pi, const HomogPoly& place);

HomogPoly wronskian(const RationalMap& pi);
bool riemann_hurwitz_verify(const RationalMap& pi, const std::vector<Point>& branch_points);

struct HurwitzCount {
    int total;  // sum over points of (d - #preimages)
    int bound;  // 2d - 2
    bool feasible() const { return total <= bound; }
};
// extra_cusps further branch points with extra_preimages preimages between them
HurwitzCount hurwitz_count(int d, const std::vector<std::vector<int>>& profiles, int extra_cusps = 0, int extra_preimages = 0);
bool hurwitz_feasible(int d, const std::vector<std::vector<int>>& profiles);

WeierstrassModel substitute_model(const WeierstrassModel& m, const RationalMap& pi);
WeierstrassModel pullback(const WeierstrassModel& m, const RationalMap& pi);
RationalMap mobius_from_three_points(const Point& p, const Point& q, const Point& r);
RationalMap compose(const RationalMap& outer, const RationalMap& inner);

// product of the places carrying non-reduced fibers
HomogPoly starred_places(const WeierstrassModel& m);
WeierstrassModel transfer_star(const WeierstrassModel& m, const HomogPoly& from_place, const HomogPoly& to_place);

// map file: optional field, degree, N, D, identity_check (= N - D)
struct MapFile {
    RationalMap map;
    bool has_identity = false;
    HomogPoly identity;
};
MapFile parse_map_file(const std::string& text);
std::string format_map(const RationalMap& pi);

}  // namespace ellfib
