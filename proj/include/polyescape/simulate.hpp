#pragma once

#include "polyescape/ball.hpp"
#include "polyescape/bounds.hpp"
#include "polyescape/decide.hpp"
#include "polyescape/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyescape {

// One recorded state of a simulated trajectory. The point is the certified
// ball midpoint (exact for discrete runs); inside reflects the certified
// membership test — a sample on or near the boundary within evaluation error
// counts as inside, since the polytope is closed and an exit must be a
// certified strict violation.
struct TrajectorySample {
    Rational time;
    std::vector<Rational> point;
    bool inside = true;
};

struct TrajectoryRun {
    RatVector initial_point;
    Mode mode = Mode::Continuous;
    // First certified exit time found (an upper bound on the first exit in
    // the detected bracket, refined by bisection; not necessarily the infimum
    // over the whole run). Empty when no exit was certified within horizon.
    std::optional<Rational> escape_time;
    Rational horizon;
    // Recorded coarse-scan samples (downsampled to at most max_recorded
    // entries) plus, when an exit was found, the certified exit sample last.
    std::vector<TrajectorySample> samples;
    unsigned precision_bits = 128;
};

struct SamplingPlan {
    bool include_vertices = true;
    unsigned random_interior_count = 0;
    std::uint64_t seed = 0;
};

// Detect an escape from the polytope along the trajectory started at x0
// (which must lie in P exactly). Continuous dynamics are evaluated through
// the certified matrix exponential on a coarse grid of horizon/10^4 steps
// (with one 32x finer rescan if nothing is found), then the first exit
// bracket is refined by bisection to time resolution 2^-30. Discrete
// dynamics iterate exact rational states; the result is the first n with
// B x_n <= c violated, exactly.
TrajectoryRun escape_time(const Instance& inst, const RatVector& x0, const Rational& horizon,
                          unsigned precision_bits = 128, std::size_t max_recorded = 256);

// Vertices (optionally) plus seeded random interior points of a compact
// nonempty polytope: strictly positive rational convex combinations of the
// vertices, each verified against B x <= c exactly. Deterministic per seed.
std::vector<RatVector> sample_points(const Polytope& p, const SamplingPlan& plan);

struct SampleValidation {
    RatVector initial_point;
    std::optional<Rational> escape_time;
    bool escaped = false;
};

struct ValidationReport {
    enum class Status {
        Pass,           // every sample escaped within the simulated horizon
        Fail,           // bound is simulable and some sample stayed inside it
        Unconfirmed,    // bound exceeds the cap and some sample outlasted the cap
        NotApplicable,  // instance has a trapped point / degenerate polytope
    };

    Status status = Status::NotApplicable;
    std::string detail;

    bool bound_within_cap = false;  // certified total_bound <= sim_cap
    Rational horizon;               // simulated horizon actually used
    LogScaleRational total_bound;
    std::optional<Rational> max_observed_escape;
    // Materialized bound / max observed escape time; absent when the bound
    // is too large to materialize or nothing escaped.
    std::optional<Rational> slack_ratio;

    std::vector<SampleValidation> samples;
    std::vector<TrajectoryRun> runs;
};

// Cross-validate an escape certificate by simulation: every sampled start
// must escape within min(total_bound, sim_cap). A miss is a hard failure
// only when the bound itself is within the cap; larger bounds downgrade to
// escape-existence checking, marked in the report.
ValidationReport validate_certificate(const Instance& inst, const EscapeCertificate& cert,
                                      const SamplingPlan& plan, const Rational& sim_cap,
                                      unsigned precision_bits = 128);

// Does the convex hull of the points contain the origin? Exact LP over
// convex-combination weights; the tolerance overload accepts any point whose
// hull comes within the band |sum w_i x_i| <= tolerance coordinatewise.
bool hull_contains_origin(const std::vector<RatVector>& points);
bool hull_contains_origin(const std::vector<RatVector>& points, const Rational& tolerance);

}  // namespace polyescape
