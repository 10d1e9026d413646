#pragma once

#include "polyescape/linalg.hpp"
#include "polyescape/lp.hpp"
#include "polyescape/rational.hpp"

#include <optional>

namespace polyescape {

enum class Mode { Continuous, Discrete };

// A linear dynamical system (dx/dt = Ax + a, or x_{n+1} = Ax_n + a) together
// with the polytope whose escape behaviour is analyzed.
struct Instance {
    RatMatrix a;                      // d x d system matrix
    std::optional<RatVector> affine;  // optional constant drift term (size d)
    Polytope polytope;                // B x <= c over the same d variables
    Mode mode = Mode::Continuous;
};

enum class Verdict {
    AllEscape,           // every trajectory starting in P eventually leaves P
    TrappedPointExists,  // some point of P stays in P forever (a fixed point)
    PolytopeEmpty,       // degenerate input: P has no points
    PolytopeUnbounded,   // degenerate input: P is not compact
};

struct Decision {
    Verdict verdict = Verdict::AllEscape;
    // Fixed point inside P; present exactly when verdict is
    // TrappedPointExists. Satisfies the fixed-point equation and the
    // polytope constraints exactly.
    std::optional<RatVector> witness;
};

// Decide whether every trajectory escapes: a trapped point exists iff a
// fixed point of the dynamics lies in P (checked by one exact LP), after a
// compactness precheck.
Decision decide(const Instance& inst);

// Basis (columns) of the fixed-point space: kernel(A) for Continuous,
// kernel(A - I) for Discrete.
RatMatrix fixed_point_set(const RatMatrix& a, Mode mode);

// Reduce affine dynamics to homogeneous form one dimension up, embedding the
// polytope into the hyperplane where the added coordinate equals 1.
Instance homogenize(const Instance& inst);

}  // namespace polyescape
