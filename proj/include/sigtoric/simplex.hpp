#ifndef SIGTORIC_SIMPLEX_HPP
#define SIGTORIC_SIMPLEX_HPP

#include <optional>
#include <vector>

#include "sigtoric/linalg.hpp"
#include "sigtoric/rational.hpp"

namespace sigtoric {

// Exact phase-I simplex (Bland's rule, never cycles).
// Decides whether {x >= 0 : A x = b} is nonempty.
bool lp_feasible(const QMatrix& a, const std::vector<Rational>& b);

// Same, but returns a feasible point when one exists.
std::optional<std::vector<Rational>> lp_solve_feasible(const QMatrix& a,
                                                       const std::vector<Rational>& b);

// Convex-hull membership: is v a convex combination of the given points?
bool in_convex_hull(const std::vector<std::vector<Int>>& points,
                    const std::vector<Int>& v);

// Cone membership: is v a nonnegative real combination of the generators?
bool in_cone(const std::vector<std::vector<Int>>& generators,
             const std::vector<Int>& v);

// A strictly positive integer functional on a pointed cone: phi with
// phi . g >= 1 for every generator. Empty result when none exists
// (i.e. the cone is not pointed / generators span a line both ways).
std::vector<Int> positive_functional(const std::vector<std::vector<Int>>& generators);

} // namespace sigtoric

#endif
