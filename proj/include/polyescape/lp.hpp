#pragma once

#include "polyescape/linalg.hpp"
#include "polyescape/rational.hpp"

#include <stdexcept>
#include <vector>

namespace polyescape {

// P = {x in R^d | B x <= c}.
struct Polytope {
    RatMatrix b;  // n x d
    RatVector c;  // n

    std::size_t dimension() const { return b.cols(); }
    std::size_t constraint_count() const { return b.rows(); }
    // Exact membership test (closed polytope).
    bool contains(const RatVector& x) const;
};

enum class LpStatus { Infeasible, Unbounded, Optimal };

struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    // Optimal: an optimal point. Unbounded: an improving recession ray r with
    // B r <= 0 and objective . r strictly improving. Empty otherwise.
    RatVector witness;
    Rational value;  // objective value, present for Optimal
};

enum class LpSense { Max, Min };

enum class Compactness { Empty, Unbounded, CompactNonempty };

// Thrown by vertices() when C(n, d) exceeds the enumeration cap.
class EnumerationCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact optimum of objective . x over P, two-phase simplex with Bland's rule.
LpOutcome lp_optimize(const Polytope& p, const RatVector& objective, LpSense sense);

// Feasibility of {x | B x <= c, E x = f}; Optimal with a witness point when
// feasible, Infeasible otherwise (never Unbounded: the objective is 0).
LpOutcome lp_feasible_with_equalities(const Polytope& p, const RatMatrix& e, const RatVector& f);

// CompactNonempty iff P is nonempty and every coordinate has finite maximum
// and minimum (2d optimizations).
Compactness is_compact_nonempty(const Polytope& p);

// All vertices of a compact nonempty P: exact solutions of d active
// constraints, verified feasible, deduplicated, sorted lexicographically.
// Throws EnumerationCapExceeded when C(n, d) > enumeration_cap.
std::vector<RatVector> vertices(const Polytope& p, unsigned long enumeration_cap = 200000);

}  // namespace polyescape
