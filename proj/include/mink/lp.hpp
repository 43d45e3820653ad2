#pragma once
// Exact rational linear feasibility. Phase-1 simplex over BigRational with
// Bland's rule (no cycling, no tolerances — feasibility verdicts are exact).

#include <mink/rational.hpp>

#include <optional>

namespace mink {

// Finds lambda with a·lambda = b and lambda >= 0 (componentwise).
//
// strict_positive = true demands lambda > 0 instead: internally maximizes a
// slack eps subject to lambda >= eps·1 (eps capped at 1 to keep the program
// bounded) and accepts iff the optimum is positive.
//
// a is row-major and must be rectangular and nonempty. Returns the exact
// witness vector, or nullopt when infeasible.
std::optional<RationalVector> rational_feasible(const RationalMatrix& a,
                                                const RationalVector& b,
                                                bool strict_positive = false);

}  // namespace mink
