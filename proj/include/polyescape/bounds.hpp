#pragma once

#include "polyescape/decide.hpp"
#include "polyescape/logscale.hpp"
#include "polyescape/rational.hpp"
#include "polyescape/spectrum.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace polyescape {

// Raised when a rotation rate (imaginary part of an eigenvalue, or its
// argument in discrete mode) lacks a strictly positive certified lower bound.
class UncertifiedTheta : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an eigenvalue's position relative to a case boundary (its sign,
// or its comparison with 1 in discrete mode) is not certified by the
// enclosure.
class UncertifiedSign : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Which per-eigenvalue formula produced a bound.
enum class TLambdaCase { Negative, Zero, Positive };

// Contribution policy for a zero eigenvalue of index 1: its coordinate is
// constant along every trajectory, so escape must come from other blocks.
// ZeroContribution records 0 for such a block; FormulaValue evaluates the
// iterative formula anyway (still a valid upper bound, just weaker).
enum class ZeroIndexOnePolicy { FormulaValue, ZeroContribution };

struct PerEigenvalueBound {
    // In discrete mode this is the eigenvalue of A itself, while t_case and
    // t_lambda describe its logarithm (the continuous-time rate).
    EigenvalueEnclosure eigenvalue;
    TLambdaCase t_case = TLambdaCase::Positive;
    LogScaleRational t_lambda;
};

// Where the ratio C/eps came from. Only the closed-form formula exists today;
// certificates record the source so tighter instance-specific ratios can be
// added without changing the format.
enum class RatioSource { ClosedFormFormula };

struct SpecialCase {
    bool diagonalizable = false;  // minimal polynomial squarefree
    bool invertible = false;      // zero is not an eigenvalue
    bool any() const { return diagonalizable || invertible; }
};

// Certified uniform escape-time bound for an instance on which every
// trajectory escapes. For continuous dynamics total_bound is a time T; for
// discrete dynamics it is an iteration count N = ceil(T_mapped) + d, where
// the trailing extra_steps = d iterations absorb nilpotent decay and
// sign-alternating (negative-eigenvalue) components.
struct EscapeCertificate {
    Mode mode = Mode::Continuous;

    // Formula inputs, after any affine embedding: dimension d and the
    // maximum entry bit size b over A, B, c.
    unsigned dimension = 0;
    std::size_t coefficient_bits = 0;

    LogScaleRational total_bound;        // T (continuous) or N (discrete)
    LogScaleRational complex_hull_time;  // time for sample hulls to wrap the origin
    LogScaleRational real_bound;         // 2 * max per-eigenvalue bound
    LogScaleRational ratio_bound;        // the ratio C/eps entering every case
    RatioSource ratio_source = RatioSource::ClosedFormFormula;

    std::vector<PerEigenvalueBound> per_eigenvalue;

    SpecialCase special_case;
    // 4^{b d^2}, evaluated only when a special case is certified in
    // continuous mode.
    std::optional<LogScaleRational> special_case_bound;

    // The instance-independent closed form 4 exp(640 b d^{4d+10}) (plus the
    // ceil and +d adjustments in discrete mode), carried as a directed upper
    // representation. The assembled continuous bound is checked against it.
    LogScaleRational closed_form_bound;

    unsigned extra_steps = 0;  // discrete only: the trailing +d iterations
};

// C/eps <= exp(640 * b * d^(3d+8)), always carried in log scale.
LogScaleRational ratio_bound_formula(std::size_t b, unsigned d);

// Time for every trajectory's sample hull to wrap the origin: sum over
// conjugate pairs of index * pi / theta, evaluated upward with certified
// theta lower bounds. Zero for an all-real spectrum.
LogScaleRational complex_hull_time(const Spectrum& s);

// Per-eigenvalue escape-time bounds; k is the eigenvalue's multiplicity in
// the minimal polynomial (largest Jordan block). Each evaluates its formula
// with the certified endpoint substituted in the sound (monotone) direction:
//   negative: max(1, 4a log(2a) + 2b') with a = max(1, k/|lambda|) and
//             b' = log(k * ratio)/|lambda|
//   zero:     (1/k) (k^2 * ratio)^(2^(k-1))
//   positive: (2^(k-1)/lambda) log(k * ratio)
LogScaleRational t_lambda_negative(unsigned k, const Rational& lambda_abs_lower,
                                   const LogScaleRational& ratio);
LogScaleRational t_lambda_zero(unsigned k, const LogScaleRational& ratio);
LogScaleRational t_lambda_positive(unsigned k, const Rational& lambda_lower,
                                   const LogScaleRational& ratio);

// Threshold 4a log(2a) + 2b (rounded upward) past which t >= a log t + b
// holds. Requires a >= 1 and b > 0.
Rational log_inequality_threshold(const Rational& a, const Rational& b);

// 2 * max over real eigenvalues of the case-matched per-eigenvalue bound;
// 0 when the spectrum has no real eigenvalues.
LogScaleRational real_escape_bound(const Spectrum& s, const LogScaleRational& ratio,
                                   ZeroIndexOnePolicy policy = ZeroIndexOnePolicy::FormulaValue);

// b entering the bound formulas: maximum entry bit size over A, B and c.
std::size_t instance_bit_size(const Instance& inst);

// Assemble the full certificate for an instance where every trajectory
// escapes (throws std::invalid_argument otherwise). Affine instances are
// embedded one dimension up first; the certificate reports the embedded
// dimension and bit size. precision_bits controls the spectrum enclosures.
EscapeCertificate continuous_escape_bound(const Instance& inst, unsigned precision_bits = 128);
EscapeCertificate discrete_escape_bound(const Instance& inst, unsigned precision_bits = 128);

}  // namespace polyescape
