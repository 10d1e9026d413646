#include "polyescape/decide.hpp"

#include <stdexcept>

namespace polyescape {

namespace {

void validate_shapes(const Instance& inst) {
    if (!inst.a.is_square()) throw std::invalid_argument("system matrix must be square");
    if (inst.a.cols() != inst.polytope.dimension())
        throw std::invalid_argument("matrix dimension does not match polytope dimension");
    if (inst.affine && inst.affine->size() != inst.a.rows())
        throw std::invalid_argument("affine term dimension does not match the matrix");
}

// The fixed-point equation matrix: Ax = 0 (continuous) or (A - I)x = 0
// (discrete).
RatMatrix equation_matrix(const RatMatrix& a, Mode mode) {
    if (mode == Mode::Continuous) return a;
    return a - RatMatrix::identity(a.rows());
}

bool satisfies_fixed_point(const Instance& inst, const RatVector& x) {
    RatVector image = inst.a * x;
    if (inst.affine) image = image + *inst.affine;
    if (inst.mode == Mode::Continuous) return image.is_zero();
    return image == x;
}

}  // namespace

Instance homogenize(const Instance& inst) {
    validate_shapes(inst);
    const std::size_t d = inst.a.rows();
    Instance out;
    out.mode = inst.mode;

    RatMatrix a(d + 1, d + 1);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a.at(i, j) = inst.a.at(i, j);
    if (inst.affine)
        for (std::size_t i = 0; i < d; ++i) a.at(i, d) = (*inst.affine)[i];
    if (inst.mode == Mode::Discrete) a.at(d, d) = 1;  // the added coordinate is constant
    out.a = std::move(a);

    const RatMatrix& b = inst.polytope.b;
    const RatVector& c = inst.polytope.c;
    const std::size_t m = b.rows();
    RatMatrix b2(m + 2, d + 1);
    RatVector c2(m + 2);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < d; ++j) b2.at(i, j) = b.at(i, j);
        b2.at(i, d) = -c[i];  // B x <= c z
        c2[i] = 0;
    }
    b2.at(m, d) = 1;
    c2[m] = 1;  // z <= 1
    b2.at(m + 1, d) = -1;
    c2[m + 1] = -1;  // z >= 1
    out.polytope = Polytope{std::move(b2), std::move(c2)};
    return out;
}

RatMatrix fixed_point_set(const RatMatrix& a, Mode mode) {
    if (!a.is_square()) throw std::invalid_argument("fixed_point_set requires a square matrix");
    return kernel(equation_matrix(a, mode));
}

Decision decide(const Instance& inst) {
    validate_shapes(inst);

    if (inst.affine && !inst.affine->is_zero()) {
        Instance lifted = homogenize(inst);
        lifted.affine.reset();
        Decision inner = decide(lifted);
        if (inner.witness) {
            const std::size_t d = inst.a.rows();
            RatVector projected(d);
            for (std::size_t i = 0; i < d; ++i) projected[i] = (*inner.witness)[i];
            if (!satisfies_fixed_point(inst, projected) || !inst.polytope.contains(projected))
                throw std::logic_error("projected fixed-point witness failed exact verification");
            inner.witness = std::move(projected);
        }
        return inner;
    }

    switch (is_compact_nonempty(inst.polytope)) {
        case Compactness::Empty:
            return {Verdict::PolytopeEmpty, std::nullopt};
        case Compactness::Unbounded:
            return {Verdict::PolytopeUnbounded, std::nullopt};
        case Compactness::CompactNonempty:
            break;
    }

    const std::size_t d = inst.a.rows();
    const RatMatrix e = equation_matrix(inst.a, inst.mode);
    const RatVector zero(d);
    const LpOutcome lp = lp_feasible_with_equalities(inst.polytope, e, zero);
    if (lp.status == LpStatus::Infeasible) return {Verdict::AllEscape, std::nullopt};
    if (lp.status != LpStatus::Optimal)
        throw std::logic_error("feasibility LP over a compact set must be optimal or infeasible");

    const RatVector& w = lp.witness;
    if (!satisfies_fixed_point(inst, w) || !inst.polytope.contains(w))
        throw std::logic_error("fixed-point witness failed exact verification");
    return {Verdict::TrappedPointExists, w};
}

}  // namespace polyescape
