#ifndef DWORK_POLYTOPE_HPP
#define DWORK_POLYTOPE_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "dwork/laurent.hpp"

namespace dwork {

/// Convex hull of a finite set of integer points in Z^r, kept as its
/// generating set.  Membership tests are exact (rational arithmetic).
class LatticePolytope {
public:
    using Point = std::vector<int64_t>;

    LatticePolytope(unsigned r, std::set<Point> generators);

    unsigned dim() const { return r_; }
    const std::set<Point>& generators() const { return gens_; }

    /// Exact test for x in conv(generators).  r = 1 short-circuits to an
    /// interval check; higher dimensions run a phase-1 simplex over Q.
    bool contains(const Point& x) const;
    bool contains_lp(const Point& x) const;  // generic path, any r

    Point box_min() const;
    Point box_max() const;

private:
    unsigned r_;
    std::set<Point> gens_;
};

/// Newton polytope of a with respect to the t variables only.
LatticePolytope newton_polytope_t(const LaurentPoly& a);

/// Hull of all sums of one generator per polytope scaled by its weight.
LatticePolytope weighted_minkowski_sum(const std::vector<LatticePolytope>& polys,
                                       const std::vector<int64_t>& weights);

/// True iff conv(P) meets qZ^r exactly in {0}: the origin lies in the hull
/// and no nonzero multiple of q inside the bounding box does.
bool polytope_lattice_intersection_trivial(const LatticePolytope& P, int64_t q);

/// Admissibility of a tuple of Laurent polynomials: for every window
/// 0 <= i <= j < l, the Minkowski sum of the t-Newton polytopes with weights
/// 1, p, ..., p^{j-i} meets p^{j-i+1}Z^r only in the origin.
bool is_admissible_tuple(const std::vector<LaurentPoly>& tuple, uint64_t p);

/// Same test, reporting the first failing window (i, j) or (-1, -1).
std::pair<int, int> admissibility_failure(const std::vector<LaurentPoly>& tuple, uint64_t p);

}  // namespace dwork

#endif
