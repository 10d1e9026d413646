#include "polyescape/bounds.hpp"

#include "polyescape/directed.hpp"
#include "polyescape/heights.hpp"
#include "polyescape/linalg.hpp"
#include "polyescape/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace polyescape {

namespace {

Rational rational_max(const Rational& x, const Rational& y) { return x > y ? x : y; }

Integer int_pow(unsigned base, unsigned exp) {
    return boost::multiprecision::pow(Integer(base), exp);
}

// Upper bound on log(k * ratio) for a positive integer k.
Rational log_upper_scaled(const Integer& k, const LogScaleRational& ratio) {
    if (ratio.is_value()) {
        const Rational scaled = ratio.exact_value() * Rational(k);
        if (!(scaled > 0)) throw std::domain_error("ratio must be positive");
        return log_upper(scaled);
    }
    return log_upper(Rational(k)) + ratio.log_exponent();
}

}  // namespace

LogScaleRational ratio_bound_formula(std::size_t b, unsigned d) {
    if (b < 1 || d < 1)
        throw std::domain_error("bit size and dimension must both be at least 1");
    const Integer exponent = Integer(640) * Integer(b) * int_pow(d, 3 * d + 8);
    return LogScaleRational::exp_of(Rational(exponent));
}

LogScaleRational complex_hull_time(const Spectrum& s) {
    Rational total(0);
    for (const auto& e : s.eigenvalues) {
        if (e.kind != EigenvalueKind::ComplexPair) continue;
        const Rational& theta_lo = e.imag_interval.lo;
        if (!(theta_lo > 0))
            throw UncertifiedTheta("imaginary part lacks a positive certified lower bound");
        total += Rational(e.index) * pi_upper() / theta_lo;
    }
    return LogScaleRational::value(std::move(total));
}

LogScaleRational t_lambda_negative(unsigned k, const Rational& lambda_abs_lower,
                                   const LogScaleRational& ratio) {
    if (k < 1) throw std::domain_error("index must be at least 1");
    if (!(lambda_abs_lower > 0))
        throw std::domain_error("|lambda| lower bound must be positive");
    const Rational a = rational_max(Rational(1), Rational(k) / lambda_abs_lower);
    const Rational b = log_upper_scaled(Integer(k), ratio) / lambda_abs_lower;
    const Rational t = 4 * a * log_upper(2 * a) + 2 * b;
    return LogScaleRational::value(rational_max(Rational(1), t));
}

LogScaleRational t_lambda_zero(unsigned k, const LogScaleRational& ratio) {
    if (k < 1) throw std::domain_error("index must be at least 1");
    const Integer k_squared = Integer(k) * Integer(k);
    // Materialize the tower exactly while the result stays small enough;
    // otherwise fall back to the log-scale form
    //   2^(k-1) log(k^2 ratio) - log k  (exponent rounded upward).
    if (ratio.is_value() && k <= 12) {
        const Rational scaled = ratio.exact_value() * Rational(k_squared);
        if (!(scaled > 0)) throw std::domain_error("ratio must be positive");
        const unsigned long reps = 1ul << (k - 1);
        if (bit_size(scaled) * reps <= 4096)
            return LogScaleRational::value(pow_rational(scaled, reps) / Rational(k));
    }
    const Rational lg = log_upper_scaled(k_squared, ratio);
    const Rational log_k_lower = k == 1 ? Rational(0) : log_lower(Rational(k));
    return LogScaleRational::exp_of(pow2(long(k) - 1) * lg - log_k_lower);
}

LogScaleRational t_lambda_positive(unsigned k, const Rational& lambda_lower,
                                   const LogScaleRational& ratio) {
    if (k < 1) throw std::domain_error("index must be at least 1");
    if (!(lambda_lower > 0))
        throw std::domain_error("lambda lower bound must be positive");
    const Rational t = pow2(long(k) - 1) * log_upper_scaled(Integer(k), ratio) / lambda_lower;
    return LogScaleRational::value(rational_max(Rational(0), t));
}

Rational log_inequality_threshold(const Rational& a, const Rational& b) {
    if (!(a >= 1)) throw std::domain_error("threshold requires a >= 1");
    if (!(b > 0)) throw std::domain_error("threshold requires b > 0");
    return 4 * a * log_upper(2 * a) + 2 * b;
}

namespace {

// Case-matched per-eigenvalue bound for a real eigenvalue. abs_floor, when
// given, is an enclosure-independent lower bound on |lambda| that may be
// substituted if the enclosure endpoint is weaker.
PerEigenvalueBound real_case_bound(const EigenvalueEnclosure& e, const LogScaleRational& ratio,
                                   ZeroIndexOnePolicy policy, const Rational* abs_floor) {
    PerEigenvalueBound out;
    out.eigenvalue = e;
    switch (e.kind) {
    case EigenvalueKind::Zero: {
        if (!(e.real_interval.is_point() && e.real_interval.lo == 0))
            throw UncertifiedSign("zero eigenvalue enclosure is not exactly zero");
        out.t_case = TLambdaCase::Zero;
        out.t_lambda = (e.index == 1 && policy == ZeroIndexOnePolicy::ZeroContribution)
                           ? LogScaleRational::value(Rational(0))
                           : t_lambda_zero(e.index, ratio);
        return out;
    }
    case EigenvalueKind::PositiveReal: {
        out.t_case = TLambdaCase::Positive;
        Rational lo = e.real_interval.lo;
        if (abs_floor) lo = rational_max(lo, *abs_floor);
        if (!(lo > 0))
            throw UncertifiedSign("positive eigenvalue lacks a positive certified lower bound");
        out.t_lambda = t_lambda_positive(e.index, lo, ratio);
        return out;
    }
    case EigenvalueKind::NegativeReal: {
        out.t_case = TLambdaCase::Negative;
        Rational abs_lo = -e.real_interval.hi;
        if (abs_floor) abs_lo = rational_max(abs_lo, *abs_floor);
        if (!(abs_lo > 0))
            throw UncertifiedSign("negative eigenvalue lacks a negative certified upper bound");
        out.t_lambda = t_lambda_negative(e.index, abs_lo, ratio);
        return out;
    }
    default:
        throw std::logic_error("complex eigenvalue reached the real-case dispatcher");
    }
}

}  // namespace

LogScaleRational real_escape_bound(const Spectrum& s, const LogScaleRational& ratio,
                                   ZeroIndexOnePolicy policy) {
    LogScaleRational best = LogScaleRational::value(Rational(0));
    for (const auto& e : s.eigenvalues) {
        if (e.kind == EigenvalueKind::ComplexPair) continue;
        best = max_upper(best, real_case_bound(e, ratio, policy, nullptr).t_lambda);
    }
    return scale_upper(best, Rational(2));
}

std::size_t instance_bit_size(const Instance& inst) {
    std::size_t b = max_entry_bit_size(inst.a);
    b = std::max(b, max_entry_bit_size(inst.polytope.b));
    b = std::max(b, max_entry_bit_size(inst.polytope.c));
    return b;
}

namespace {

// 4 exp(640 b d^{4d+10}) as a directed upper representation.
LogScaleRational closed_form_ceiling(std::size_t b, unsigned d) {
    const Integer exponent = Integer(640) * Integer(b) * int_pow(d, 4 * d + 10);
    return LogScaleRational::exp_of(Rational(exponent) + 2 * log2_upper());
}

// 4^{b d^2} = 2^{2 b d^2}: exact while small, log scale beyond.
LogScaleRational special_case_value(std::size_t b, unsigned d) {
    const Integer e2 = 2 * Integer(b) * Integer(d) * Integer(d);
    if (e2 <= 4096) return LogScaleRational::value(pow2(e2.convert_to<long>()));
    return LogScaleRational::exp_of(Rational(e2) * log2_upper());
}

struct Prepared {
    Instance work;
    unsigned d = 0;
    std::size_t b = 0;
    LogScaleRational ratio;
    Spectrum spec;
    Rational floor;  // enclosure-independent lower bound on |lambda| and theta
    SpecialCase special;
};

Prepared prepare(const Instance& inst, Mode expected, unsigned precision_bits) {
    if (inst.mode != expected)
        throw std::invalid_argument("instance mode does not match the requested bound");
    Instance work = inst;
    if (work.affine && !work.affine->is_zero()) work = homogenize(work);
    work.affine.reset();

    const Decision dec = decide(work);
    switch (dec.verdict) {
    case Verdict::AllEscape:
        break;
    case Verdict::TrappedPointExists:
        throw std::invalid_argument("a trapped fixed point exists; no uniform escape bound");
    case Verdict::PolytopeEmpty:
        throw std::invalid_argument("the polytope is empty; escape bounds are undefined");
    case Verdict::PolytopeUnbounded:
        throw std::invalid_argument("the polytope is not compact; escape bounds are undefined");
    }

    Prepared p;
    p.d = unsigned(work.a.rows());
    p.b = instance_bit_size(work);
    p.ratio = ratio_bound_formula(p.b, p.d);
    p.spec = spectrum(work.a, precision_bits);
    p.floor = inverse_eigenvalue_floor(int(p.d), int(p.b));

    p.special.invertible = char_poly(work.a).cleared.coeff(0) != 0;
    bool squarefree = true;
    for (const auto& factor : squarefree_decomposition(min_poly(work.a).cleared))
        if (factor.second > 1) squarefree = false;
    p.special.diagonalizable = squarefree;

    p.work = std::move(work);
    return p;
}

// Minimum of arg over a box in the open upper half plane. The argument is
// monotone in each coordinate separately there, so the minimum over the box
// is attained at one of the four corners.
Rational corner_arg_lower(const RationalInterval& re, const RationalInterval& im) {
    Rational best = arg_lower(re.lo, im.lo);
    const auto consider = [&](const Rational& x, const Rational& y) {
        const Rational v = arg_lower(x, y);
        if (v < best) best = v;
    };
    consider(re.lo, im.hi);
    consider(re.hi, im.lo);
    consider(re.hi, im.hi);
    return best;
}

}  // namespace

EscapeCertificate continuous_escape_bound(const Instance& inst, unsigned precision_bits) {
    Prepared p = prepare(inst, Mode::Continuous, precision_bits);

    EscapeCertificate cert;
    cert.mode = Mode::Continuous;
    cert.dimension = p.d;
    cert.coefficient_bits = p.b;
    cert.ratio_bound = p.ratio;
    cert.ratio_source = RatioSource::ClosedFormFormula;

    Rational hull(0);
    for (const auto& e : p.spec.eigenvalues) {
        if (e.kind != EigenvalueKind::ComplexPair) continue;
        const Rational theta_lo = rational_max(e.imag_interval.lo, p.floor);
        if (!(theta_lo > 0))
            throw UncertifiedTheta("imaginary part lacks a positive certified lower bound");
        hull += Rational(e.index) * pi_upper() / theta_lo;
    }
    cert.complex_hull_time = LogScaleRational::value(std::move(hull));

    LogScaleRational best = LogScaleRational::value(Rational(0));
    for (const auto& e : p.spec.eigenvalues) {
        if (e.kind == EigenvalueKind::ComplexPair) continue;
        PerEigenvalueBound pb =
            real_case_bound(e, p.ratio, ZeroIndexOnePolicy::ZeroContribution, &p.floor);
        best = max_upper(best, pb.t_lambda);
        cert.per_eigenvalue.push_back(std::move(pb));
    }
    cert.real_bound = scale_upper(best, Rational(2));
    cert.total_bound = add_upper(cert.complex_hull_time, cert.real_bound);

    cert.closed_form_bound = closed_form_ceiling(p.b, p.d);
    if (!certified_leq(cert.total_bound, cert.closed_form_bound))
        throw std::logic_error("assembled escape bound exceeds the closed-form ceiling");

    cert.special_case = p.special;
    if (p.special.any()) cert.special_case_bound = special_case_value(p.b, p.d);
    return cert;
}

EscapeCertificate discrete_escape_bound(const Instance& inst, unsigned precision_bits) {
    Prepared p = prepare(inst, Mode::Discrete, precision_bits);

    EscapeCertificate cert;
    cert.mode = Mode::Discrete;
    cert.dimension = p.d;
    cert.coefficient_bits = p.b;
    cert.ratio_bound = p.ratio;
    cert.ratio_source = RatioSource::ClosedFormFormula;

    // Per iteration, a conjugate pair advances its angle by arg(lambda); the
    // hull-wrapping time of the underlying continuous rates uses that angle.
    Rational hull(0);
    for (const auto& e : p.spec.eigenvalues) {
        if (e.kind != EigenvalueKind::ComplexPair) continue;
        if (!(e.imag_interval.lo > 0))
            throw UncertifiedTheta("imaginary part lacks a positive certified lower bound");
        const Rational phi_lo = corner_arg_lower(e.real_interval, e.imag_interval);
        if (!(phi_lo > 0))
            throw UncertifiedTheta("argument lacks a positive certified lower bound");
        hull += Rational(e.index) * pi_upper() / phi_lo;
    }
    cert.complex_hull_time = LogScaleRational::value(std::move(hull));

    // Positive eigenvalues map to the rate log(lambda); zero and negative
    // eigenvalues (nilpotent decay, sign-alternating components) are absorbed
    // by the trailing +d iterations.
    LogScaleRational best = LogScaleRational::value(Rational(0));
    for (const auto& e : p.spec.eigenvalues) {
        if (e.kind != EigenvalueKind::PositiveReal) continue;
        PerEigenvalueBound pb;
        pb.eigenvalue = e;
        const Rational& lo = e.real_interval.lo;
        const Rational& hi = e.real_interval.hi;
        if (e.real_interval.is_point() && lo == 1) {
            pb.t_case = TLambdaCase::Zero;
            pb.t_lambda = e.index == 1 ? LogScaleRational::value(Rational(0))
                                       : t_lambda_zero(e.index, p.ratio);
        } else if (lo > 1) {
            pb.t_case = TLambdaCase::Positive;
            // log(lambda) >= max(directed log, (lambda-1)/lambda); the second
            // form keeps the bound positive when the directed form underflows.
            const Rational mapped_lo = rational_max(log_lower(lo), (lo - 1) / hi);
            pb.t_lambda = t_lambda_positive(e.index, mapped_lo, p.ratio);
        } else if (hi < 1) {
            pb.t_case = TLambdaCase::Negative;
            // |log(lambda)| >= max(-directed log, 1 - lambda).
            const Rational mapped_abs = rational_max(-log_upper(hi), 1 - hi);
            pb.t_lambda = t_lambda_negative(e.index, mapped_abs, p.ratio);
        } else {
            throw UncertifiedSign("eigenvalue enclosure does not separate from 1");
        }
        best = max_upper(best, pb.t_lambda);
        cert.per_eigenvalue.push_back(std::move(pb));
    }
    cert.real_bound = scale_upper(best, Rational(2));

    const LogScaleRational mapped_time = add_upper(cert.complex_hull_time, cert.real_bound);
    const LogScaleRational extra = LogScaleRational::value(Rational(p.d));
    cert.extra_steps = p.d;
    cert.total_bound = add_upper(ceil_upper(mapped_time), extra);
    cert.closed_form_bound = add_upper(ceil_upper(closed_form_ceiling(p.b, p.d)), extra);
    cert.special_case = p.special;
    return cert;
}

}  // namespace polyescape
