#include "polyescape/simulate.hpp"

#include "polyescape/directed.hpp"
#include "polyescape/logscale.hpp"
#include "polyescape/lp.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

namespace polyescape {

namespace {

enum class Membership { Inside, Outside, Uncertain };

// Certified membership of a ball state, tested on the first p.dimension()
// coordinates. Outside requires a strict violation beyond all evaluation
// error; anything touching the boundary within error counts as not-outside.
Membership classify(const Polytope& p, const std::vector<Ball>& x, mpfr_prec_t prec) {
    bool all_inside = true;
    const std::size_t d = p.dimension();
    for (std::size_t i = 0; i < p.constraint_count(); ++i) {
        Ball acc(prec);
        for (std::size_t j = 0; j < d; ++j) {
            const Rational& bij = p.b.at(i, j);
            if (bij == 0) continue;
            acc = acc + Ball::exact(bij, prec) * x[j];
        }
        if (acc.certainly_gt(p.c[i])) return Membership::Outside;
        if (!(acc.upper() <= p.c[i])) all_inside = false;
    }
    return all_inside ? Membership::Inside : Membership::Uncertain;
}

std::vector<Rational> midpoints(const std::vector<Ball>& x, std::size_t d) {
    std::vector<Rational> out;
    out.reserve(d);
    for (std::size_t j = 0; j < d; ++j) out.push_back(x[j].midpoint());
    return out;
}

std::vector<Ball> exact_state(const RatVector& x, mpfr_prec_t prec) {
    std::vector<Ball> out;
    out.reserve(x.size());
    for (const auto& e : x.entries()) out.push_back(Ball::exact(e, prec));
    return out;
}

// State exp(a t) x_start, evaluated directly from the exact start.
std::vector<Ball> state_at(const RatMatrix& a, const RatVector& x_start, const Rational& t,
                           unsigned precision_bits) {
    const MatrixExpResult e = matrix_exp(a, t, precision_bits);
    return e.value * exact_state(x_start, e.working_precision);
}

struct Bracket {
    Rational inside_time;
    Rational outside_time;
};

// Walk the trajectory on a uniform grid. Appends non-exit samples to record
// (when given, downsampled to ~max_recorded) and stops at the first
// certified exit, returning the surrounding bracket.
std::optional<Bracket> scan_grid(const RatMatrix& a, const RatVector& x_start, const Polytope& p,
                                 const Rational& step, unsigned long n_steps,
                                 unsigned precision_bits, std::vector<TrajectorySample>* record,
                                 std::size_t max_recorded) {
    const MatrixExpResult stepper = matrix_exp(a, step, precision_bits);
    const mpfr_prec_t wp = stepper.working_precision;
    std::vector<Ball> x = exact_state(x_start, wp);
    const unsigned long stride =
        record && max_recorded > 0 ? std::max<unsigned long>(1, (n_steps + 1) / max_recorded) : 1;
    const std::size_t d = p.dimension();
    for (unsigned long k = 0; k <= n_steps; ++k) {
        const Rational t = step * Rational(k);
        const Membership m = classify(p, x, wp);
        if (m == Membership::Outside) {
            if (k == 0)
                throw std::logic_error("certified exit at the verified-inside start point");
            return Bracket{step * Rational(k - 1), t};
        }
        if (record && k % stride == 0)
            record->push_back(TrajectorySample{t, midpoints(x, d), true});
        if (k < n_steps) x = stepper.value * x;
    }
    return std::nullopt;
}

TrajectoryRun continuous_run(const Instance& inst, const RatVector& x0, const Rational& horizon,
                             unsigned precision_bits, std::size_t max_recorded) {
    // Affine drift is embedded one dimension up; the added coordinate stays
    // exactly 1, and membership keeps testing the original coordinates.
    RatMatrix a_eff = inst.a;
    RatVector x_start = x0;
    if (inst.affine && !inst.affine->is_zero()) {
        a_eff = homogenize(inst).a;
        std::vector<Rational> lifted(x0.entries());
        lifted.emplace_back(1);
        x_start = RatVector(std::move(lifted));
    }

    TrajectoryRun run;
    run.initial_point = x0;
    run.mode = Mode::Continuous;
    run.horizon = horizon;
    run.precision_bits = precision_bits;

    const Rational coarse = horizon / 10000;
    auto bracket = scan_grid(a_eff, x_start, inst.polytope, coarse, 10000, precision_bits,
                             &run.samples, max_recorded);
    if (!bracket)  // one 32x finer pass, unrecorded, before giving up
        bracket = scan_grid(a_eff, x_start, inst.polytope, coarse / 32, 320000, precision_bits,
                            nullptr, 0);
    if (!bracket) return run;

    // Shrink the exit bracket to 2^-30 while keeping its right end a
    // certified exit, evaluating directly from the exact start each time.
    Rational t_in = bracket->inside_time;
    Rational t_out = bracket->outside_time;
    const Rational resolution = pow2(-30);
    while (t_out - t_in > resolution) {
        const Rational mid = (t_in + t_out) / 2;
        const std::vector<Ball> xm = state_at(a_eff, x_start, mid, precision_bits);
        if (classify(inst.polytope, xm, xm.front().precision()) == Membership::Outside)
            t_out = mid;
        else
            t_in = mid;
    }

    const std::vector<Ball> exit_state = state_at(a_eff, x_start, t_out, precision_bits);
    run.escape_time = t_out;
    run.samples.push_back(
        TrajectorySample{t_out, midpoints(exit_state, inst.polytope.dimension()), false});
    return run;
}

TrajectoryRun discrete_run(const Instance& inst, const RatVector& x0, const Rational& horizon,
                           unsigned precision_bits, std::size_t max_recorded) {
    TrajectoryRun run;
    run.initial_point = x0;
    run.mode = Mode::Discrete;
    run.horizon = horizon;
    run.precision_bits = precision_bits;

    if (horizon > Rational(1000000000))
        throw std::invalid_argument("horizon too large for exact discrete iteration");
    const unsigned long n_max =
        horizon < 0 ? 0 : floor_int(horizon).convert_to<unsigned long>();
    const unsigned long stride =
        max_recorded > 0 ? std::max<unsigned long>(1, (n_max + 1) / max_recorded) : 1;

    RatVector x = x0;
    for (unsigned long n = 0;; ++n) {
        const bool inside = inst.polytope.contains(x);
        if (!inside) {
            run.escape_time = Rational(n);
            run.samples.push_back(TrajectorySample{Rational(n), x.entries(), false});
            return run;
        }
        if (n % stride == 0)
            run.samples.push_back(TrajectorySample{Rational(n), x.entries(), true});
        if (n == n_max) return run;
        x = inst.a * x;
        if (inst.affine) x = x + *inst.affine;
    }
}

}  // namespace

TrajectoryRun escape_time(const Instance& inst, const RatVector& x0, const Rational& horizon,
                          unsigned precision_bits, std::size_t max_recorded) {
    if (x0.size() != inst.polytope.dimension())
        throw std::invalid_argument("start point dimension does not match the polytope");
    if (!inst.polytope.contains(x0))
        throw std::invalid_argument("start point is not in the polytope");
    if (horizon <= 0) throw std::invalid_argument("horizon must be positive");
    return inst.mode == Mode::Continuous
               ? continuous_run(inst, x0, horizon, precision_bits, max_recorded)
               : discrete_run(inst, x0, horizon, precision_bits, max_recorded);
}

std::vector<RatVector> sample_points(const Polytope& p, const SamplingPlan& plan) {
    if (is_compact_nonempty(p) != Compactness::CompactNonempty)
        throw std::invalid_argument("sampling requires a compact nonempty polytope");
    const std::vector<RatVector> verts = vertices(p);
    if (verts.empty()) throw std::logic_error("compact nonempty polytope produced no vertices");

    std::vector<RatVector> out;
    if (plan.include_vertices) out = verts;

    std::mt19937_64 rng(plan.seed);
    for (unsigned i = 0; i < plan.random_interior_count; ++i) {
        // A strictly positive rational convex combination of all vertices.
        std::vector<Rational> w(verts.size());
        Rational total(0);
        for (auto& wi : w) {
            wi = Rational(1 + (rng() & 0xffff));
            total += wi;
        }
        RatVector point(p.dimension());
        for (std::size_t v = 0; v < verts.size(); ++v) point = point + verts[v] * (w[v] / total);
        if (!p.contains(point)) throw std::logic_error("sampled point escaped its polytope");
        out.push_back(std::move(point));
    }
    return out;
}

ValidationReport validate_certificate(const Instance& inst, const EscapeCertificate& cert,
                                      const SamplingPlan& plan, const Rational& sim_cap,
                                      unsigned precision_bits) {
    ValidationReport rep;
    rep.total_bound = cert.total_bound;
    rep.horizon = sim_cap;

    switch (decide(inst).verdict) {
    case Verdict::AllEscape:
        break;
    case Verdict::TrappedPointExists:
        rep.detail = "a trapped fixed point exists; the certificate precondition is unmet";
        return rep;
    case Verdict::PolytopeEmpty:
        rep.detail = "the polytope is empty; nothing to validate";
        return rep;
    case Verdict::PolytopeUnbounded:
        rep.detail = "the polytope is not compact; the certificate precondition is unmet";
        return rep;
    }

    rep.bound_within_cap = certified_leq(cert.total_bound, LogScaleRational::value(sim_cap));
    Rational horizon = sim_cap;
    if (rep.bound_within_cap) {
        const Rational materialized = cert.total_bound.is_value()
                                          ? cert.total_bound.exact_value()
                                          : exp_upper(cert.total_bound.log_exponent());
        if (materialized < horizon) horizon = materialized;
    }
    rep.horizon = horizon;

    bool all_escaped = true;
    for (const auto& start : sample_points(inst.polytope, plan)) {
        TrajectoryRun run = escape_time(inst, start, horizon, precision_bits);
        SampleValidation sv;
        sv.initial_point = start;
        sv.escape_time = run.escape_time;
        sv.escaped = run.escape_time.has_value();
        all_escaped = all_escaped && sv.escaped;
        if (sv.escape_time &&
            (!rep.max_observed_escape || *sv.escape_time > *rep.max_observed_escape))
            rep.max_observed_escape = sv.escape_time;
        rep.samples.push_back(std::move(sv));
        rep.runs.push_back(std::move(run));
    }

    if (rep.max_observed_escape && *rep.max_observed_escape > 0 && rep.bound_within_cap)
        rep.slack_ratio = horizon / *rep.max_observed_escape;

    if (rep.bound_within_cap) {
        rep.status = all_escaped ? ValidationReport::Status::Pass : ValidationReport::Status::Fail;
        rep.detail = all_escaped ? "every sample escaped within the certified bound"
                                 : "a sample failed to escape within the certified bound";
    } else {
        rep.status =
            all_escaped ? ValidationReport::Status::Pass : ValidationReport::Status::Unconfirmed;
        rep.detail = all_escaped
                         ? "bound exceeds the simulation cap; escape existence confirmed for "
                           "every sample"
                         : "bound exceeds the simulation cap and a sample outlasted the cap; "
                           "escape existence unconfirmed";
    }
    return rep;
}

bool hull_contains_origin(const std::vector<RatVector>& points) {
    if (points.empty()) throw std::invalid_argument("hull test needs at least one point");
    const std::size_t n = points.size();
    const std::size_t d = points.front().size();

    // Feasibility over weights w: w >= 0, sum w = 1, sum w_i x_i = 0.
    RatMatrix nonneg(n, n);
    for (std::size_t i = 0; i < n; ++i) nonneg.at(i, i) = Rational(-1);
    RatMatrix eq(d + 1, n);
    RatVector rhs(d + 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (points[i].size() != d)
            throw std::invalid_argument("hull points must share one dimension");
        for (std::size_t j = 0; j < d; ++j) eq.at(j, i) = points[i][j];
        eq.at(d, i) = Rational(1);
    }
    rhs[d] = Rational(1);
    return lp_feasible_with_equalities(Polytope{std::move(nonneg), RatVector(n)}, eq, rhs)
               .status == LpStatus::Optimal;
}

bool hull_contains_origin(const std::vector<RatVector>& points, const Rational& tolerance) {
    if (tolerance < 0) throw std::domain_error("tolerance must be nonnegative");
    if (points.empty()) throw std::invalid_argument("hull test needs at least one point");
    const std::size_t n = points.size();
    const std::size_t d = points.front().size();

    // w >= 0, sum w = 1, |sum w_i x_ij| <= tolerance per coordinate.
    RatMatrix ineq(n + 2 * d, n);
    RatVector bound(n + 2 * d);
    for (std::size_t i = 0; i < n; ++i) ineq.at(i, i) = Rational(-1);
    for (std::size_t i = 0; i < n; ++i) {
        if (points[i].size() != d)
            throw std::invalid_argument("hull points must share one dimension");
        for (std::size_t j = 0; j < d; ++j) {
            ineq.at(n + 2 * j, i) = points[i][j];
            ineq.at(n + 2 * j + 1, i) = -points[i][j];
        }
    }
    for (std::size_t j = 0; j < 2 * d; ++j) bound[n + j] = tolerance;
    RatMatrix eq(1, n);
    for (std::size_t i = 0; i < n; ++i) eq.at(0, i) = Rational(1);
    return lp_feasible_with_equalities(Polytope{std::move(ineq), std::move(bound)}, eq,
                                       RatVector{Rational(1)})
               .status == LpStatus::Optimal;
}

}  // namespace polyescape
