#include "polyescape/spectrum.hpp"

#include "polyescape/ball.hpp"
#include "polyescape/heights.hpp"

#include <mpfr.h>

#include <algorithm>
#include <array>
#include <optional>
#include <utility>

namespace polyescape {

namespace {

using ratpoly::Poly;

int sign_of(const Rational& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

// ---------------------------------------------------------------------------
// Sturm sequences (exact rational arithmetic)
// ---------------------------------------------------------------------------

std::vector<Poly> sturm_chain(const IntPolynomial& g) {
    std::vector<Poly> chain;
    chain.push_back(g.to_ratpoly());
    Poly d = ratpoly::derivative(chain[0]);
    if (ratpoly::is_zero(d)) return chain;
    chain.push_back(std::move(d));
    while (true) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain.back();
        Poly rem;
        ratpoly::divmod(a, b, rem);
        if (ratpoly::is_zero(rem)) break;
        chain.push_back(ratpoly::scale(rem, Rational(-1)));
    }
    return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    int variations = 0;
    int last = 0;
    for (const auto& p : chain) {
        const int s = sign_of(ratpoly::eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

// A power of two strictly larger than the absolute value of every complex
// root (Cauchy bound rounded up to a power of two).
Rational cauchy_power2_bound(const IntPolynomial& g) {
    const Integer lead = abs(g.leading());
    Rational mx = 0;
    for (int i = 0; i < g.degree(); ++i) {
        Rational c = abs(Rational(g.coeff(static_cast<std::size_t>(i)))) / Rational(lead);
        if (c > mx) mx = c;
    }
    const Integer c = ceil_int(Rational(1) + mx);
    return pow2(static_cast<long>(bit_size(c)));
}

IntPolynomial deflate_zero_root(const IntPolynomial& g) {
    const auto& cs = g.coefficients();
    return IntPolynomial(std::vector<Integer>(cs.begin() + 1, cs.end()));
}

IntPolynomial deflate_root(const IntPolynomial& g, const Rational& r) {
    const Poly lin{-r, Rational(1)};
    return IntPolynomial::from_ratpoly_cleared(ratpoly::div_exact(g.to_ratpoly(), lin));
}

// Minimal-denominator rational in the closed interval [lo, hi] (Stern-Brocot
// descent via continued fractions).
Rational simplest_between(const Rational& lo, const Rational& hi) {
    if (lo == hi) return lo;
    if (lo <= 0 && 0 <= hi) return Rational(0);
    if (hi < 0) return -simplest_between(-hi, -lo);
    const Integer fl = floor_int(lo);
    const Integer cl = ceil_int(lo);
    if (Rational(cl) <= hi) return Rational(cl);
    const Rational inner =
        simplest_between(Rational(1) / (hi - Rational(fl)), Rational(1) / (lo - Rational(fl)));
    return Rational(fl) + Rational(1) / inner;
}

// Shrink an isolating interval of a simple root (certified by a sign change
// across it) to width <= target by sign bisection. Returns a midpoint that
// evaluates to zero, if one is hit (an exact rational root).
std::optional<Rational> refine_by_sign(const IntPolynomial& g, Rational& lo, Rational& hi,
                                       int& sign_lo, const Rational& target) {
    while (hi - lo > target) {
        const Rational m = (lo + hi) / 2;
        const int s = g.sign_at(m);
        if (s == 0) return m;
        if (s == sign_lo)
            lo = m;
        else
            hi = m;
    }
    return std::nullopt;
}

// Shrink the interval until it no longer touches any of -1, 0, 1. The
// contained root is irrational, so termination is guaranteed.
void exclude_unit_points(const IntPolynomial& g, Rational& lo, Rational& hi, int& sign_lo) {
    const std::array<Rational, 3> points{Rational(-1), Rational(0), Rational(1)};
    for (const Rational& c : points) {
        while (lo <= c && c <= hi) {
            const Rational m = (lo < c && c < hi) ? c : (lo + hi) / 2;
            const int s = g.sign_at(m);
            if (s == 0)
                throw std::logic_error("unexpected rational root during exclusion refinement");
            if (s == sign_lo)
                lo = m;
            else
                hi = m;
        }
    }
}

// Distinct real roots of a squarefree polynomial: exact point intervals for
// rational roots, sign-certified enclosures of width <= width_target that
// exclude -1, 0 and 1 for irrational ones.
std::vector<RationalInterval> isolate_squarefree_real(IntPolynomial g,
                                                      const Rational& width_target) {
    std::vector<RationalInterval> out;
    if (g.degree() < 1) return out;
    if (g.coeff(0) == 0) {
        out.push_back({Rational(0), Rational(0)});
        g = deflate_zero_root(g);
    }

    std::vector<std::pair<Rational, Rational>> pending;
    while (g.degree() >= 1) {
        pending.clear();
        if (g.degree() == 1) {
            const Rational r = Rational(-g.coeff(0)) / Rational(g.coeff(1));
            out.push_back({r, r});
            break;
        }

        const auto chain = sturm_chain(g);
        const Rational m_bound = cauchy_power2_bound(g);
        std::optional<Rational> hit;

        struct Node {
            Rational lo, hi;
            int vlo, vhi;
        };
        std::vector<Node> stack;
        stack.push_back({-m_bound, m_bound, sign_variations(chain, -m_bound),
                         sign_variations(chain, m_bound)});
        while (!stack.empty()) {
            Node nd = std::move(stack.back());
            stack.pop_back();
            const int count = nd.vlo - nd.vhi;
            if (count <= 0) continue;
            if (count == 1) {
                pending.emplace_back(nd.lo, nd.hi);
                continue;
            }
            const Rational mid = (nd.lo + nd.hi) / 2;
            if (g.sign_at(mid) == 0) {
                hit = mid;
                break;
            }
            const int vm = sign_variations(chain, mid);
            stack.push_back({nd.lo, mid, nd.vlo, vm});
            stack.push_back({mid, nd.hi, vm, nd.vhi});
        }

        if (!hit) {
            // Rational-root detection: any rational root has denominator
            // dividing the leading coefficient, and two rationals with
            // denominators <= l differ by more than 1/(l^2+1); refining below
            // that gap leaves a single exactly-testable candidate.
            const Integer l = abs(g.leading());
            const Rational gap = Rational(1, l * l + 1);
            for (auto& iv : pending) {
                int slo = g.sign_at(iv.first);
                hit = refine_by_sign(g, iv.first, iv.second, slo, gap / 2);
                if (hit) break;
                const Rational cand = simplest_between(iv.first, iv.second);
                if (denominator(cand) <= l && g.sign_at(cand) == 0) {
                    hit = cand;
                    break;
                }
            }
        }

        if (hit) {
            out.push_back({*hit, *hit});
            g = deflate_root(g, *hit);
            continue;  // re-isolate the deflated polynomial
        }
        break;  // every pending interval holds an irrational root
    }

    for (auto& [lo, hi] : pending) {
        int slo = g.sign_at(lo);
        if (refine_by_sign(g, lo, hi, slo, width_target))
            throw std::logic_error("rational root slipped past the exact detection pass");
        exclude_unit_points(g, lo, hi, slo);
        out.push_back({lo, hi});
    }

    std::sort(out.begin(), out.end(),
              [](const RationalInterval& a, const RationalInterval& b) { return a.lo < b.lo; });
    return out;
}

// ---------------------------------------------------------------------------
// Complex pair isolation
// ---------------------------------------------------------------------------

struct Box {
    RationalInterval re;
    RationalInterval im;
};

// Exact resolution for a squarefree quadratic with negative discriminant:
// eta is rational, theta = sqrt(D)/(2a) enclosed (or exact when D is a
// perfect square) via real-root isolation of y^2 - D.
Box quadratic_complex_box(const IntPolynomial& q, const Rational& width_target) {
    const Integer a = q.coeff(2);
    const Integer b = q.coeff(1);
    const Integer c = q.coeff(0);
    const Integer disc = b * b - 4 * a * c;
    if (a <= 0 || disc >= 0) throw std::logic_error("quadratic box requires a > 0, disc < 0");
    const Rational eta = Rational(-b) / Rational(2 * a);

    const IntPolynomial square_poly{Integer(disc), Integer(0), Integer(1)};
    // y^2 + disc = y^2 - D with D = -disc > 0.
    const Rational scaled_target = width_target * Rational(2 * a);
    const auto roots = isolate_squarefree_real(square_poly, scaled_target);
    for (const auto& iv : roots) {
        if (iv.hi <= 0) continue;
        const Rational lo = iv.lo / Rational(2 * a);
        const Rational hi = iv.hi / Rational(2 * a);
        return Box{{eta, eta}, {lo, hi}};
    }
    throw std::logic_error("positive square root enclosure not found");
}

// High-precision complex value for the root-polishing iteration.
struct Cmp {
    BigFloat re, im;
    explicit Cmp(mpfr_prec_t p) : re(p), im(p) {}
};

Cmp cmul(const Cmp& a, const Cmp& b, mpfr_prec_t wp) {
    Cmp o(wp);
    BigFloat t(wp);
    mpfr_mul(o.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(o.re.get(), o.re.get(), t.get(), MPFR_RNDN);
    mpfr_mul(o.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(o.im.get(), o.im.get(), t.get(), MPFR_RNDN);
    return o;
}

Cmp csub(const Cmp& a, const Cmp& b, mpfr_prec_t wp) {
    Cmp o(wp);
    mpfr_sub(o.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(o.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    return o;
}

bool cdiv(Cmp& out, const Cmp& a, const Cmp& b, mpfr_prec_t wp) {
    BigFloat den(wp), t(wp);
    mpfr_mul(den.get(), b.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t.get(), b.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(den.get(), den.get(), t.get(), MPFR_RNDN);
    if (mpfr_zero_p(den.get()) || !mpfr_number_p(den.get())) return false;
    BigFloat nr(wp), ni(wp);
    mpfr_mul(nr.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(nr.get(), nr.get(), t.get(), MPFR_RNDN);
    mpfr_mul(ni.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(ni.get(), ni.get(), t.get(), MPFR_RNDN);
    mpfr_div(out.re.get(), nr.get(), den.get(), MPFR_RNDN);
    mpfr_div(out.im.get(), ni.get(), den.get(), MPFR_RNDN);
    return mpfr_number_p(out.re.get()) && mpfr_number_p(out.im.get());
}

Cmp horner(const std::vector<BigFloat>& cf, const Cmp& z, mpfr_prec_t wp) {
    Cmp acc(wp);
    for (std::size_t k = cf.size(); k-- > 0;) {
        acc = cmul(acc, z, wp);
        mpfr_add(acc.re.get(), acc.re.get(), cf[k].get(), MPFR_RNDN);
    }
    return acc;
}

struct BallC {
    Ball re, im;
};

BallC ball_horner(const IntPolynomial& p, const Ball& zr, const Ball& zi, mpfr_prec_t bp) {
    Ball ar(bp), ai(bp);
    for (int k = p.degree(); k >= 0; --k) {
        Ball nr = ar * zr - ai * zi + Ball::exact(Rational(p.coeff(static_cast<std::size_t>(k))), bp);
        Ball ni = ar * zi + ai * zr;
        ar = std::move(nr);
        ai = std::move(ni);
    }
    return {std::move(ar), std::move(ai)};
}

// Lower bound on |component value| from a ball; 0 when the ball straddles 0.
Rational component_abs_lower(const Ball& b) {
    const Rational m = b.midpoint();
    const Rational r = b.radius();
    const Rational v = (m < 0 ? -m : m) - r;
    return v > 0 ? v : Rational(0);
}

// One root-polishing and certification attempt at working precision wp.
// m_real is the exact count of real roots of g (from a Sturm sequence).
std::optional<std::vector<Box>> dk_attempt(const IntPolynomial& g, int m_real,
                                           const Rational& width_target, mpfr_prec_t wp) {
    const int n = g.degree();
    std::vector<BigFloat> cf;
    cf.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        BigFloat b(wp);
        mpfr_set_z(b.get(), g.coeff(static_cast<std::size_t>(k)).backend().data(), MPFR_RNDN);
        cf.push_back(std::move(b));
    }

    // Initial guesses on a circle of the root-bound radius, angle-offset to
    // avoid the real axis and symmetry lock-in.
    const Rational m_bound = cauchy_power2_bound(g);
    std::vector<Cmp> z;
    z.reserve(static_cast<std::size_t>(n));
    BigFloat radius(wp);
    mpfr_set_q(radius.get(), m_bound.backend().data(), MPFR_RNDN);
    for (int j = 0; j < n; ++j) {
        BigFloat ang(wp);
        mpfr_const_pi(ang.get(), MPFR_RNDN);
        mpfr_mul_si(ang.get(), ang.get(), 2 * j, MPFR_RNDN);
        mpfr_div_si(ang.get(), ang.get(), n, MPFR_RNDN);
        mpfr_add_d(ang.get(), ang.get(), 0.5, MPFR_RNDN);
        Cmp p(wp);
        mpfr_sin_cos(p.im.get(), p.re.get(), ang.get(), MPFR_RNDN);
        mpfr_mul(p.re.get(), p.re.get(), radius.get(), MPFR_RNDN);
        mpfr_mul(p.im.get(), p.im.get(), radius.get(), MPFR_RNDN);
        z.push_back(std::move(p));
    }

    // Simultaneous Weierstrass/Durand-Kerner sweeps.
    const Rational eps_q = width_target / Rational(8 * n);
    BigFloat eps(wp);
    mpfr_set_q(eps.get(), eps_q.backend().data(), MPFR_RNDD);
    const int max_sweeps = 800;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        BigFloat max_delta(wp);
        mpfr_set_zero(max_delta.get(), 1);
        bool bad = false;
        for (int i = 0; i < n && !bad; ++i) {
            const Cmp num = horner(cf, z[static_cast<std::size_t>(i)], wp);
            Cmp den(wp);
            mpfr_set(den.re.get(), cf.back().get(), MPFR_RNDN);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                den = cmul(den,
                           csub(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)], wp),
                           wp);
            }
            Cmp delta(wp);
            if (!cdiv(delta, num, den, wp)) {
                bad = true;
                break;
            }
            mpfr_sub(z[static_cast<std::size_t>(i)].re.get(),
                     z[static_cast<std::size_t>(i)].re.get(), delta.re.get(), MPFR_RNDN);
            mpfr_sub(z[static_cast<std::size_t>(i)].im.get(),
                     z[static_cast<std::size_t>(i)].im.get(), delta.im.get(), MPFR_RNDN);
            if (mpfr_cmpabs(delta.re.get(), max_delta.get()) > 0)
                mpfr_abs(max_delta.get(), delta.re.get(), MPFR_RNDU);
            if (mpfr_cmpabs(delta.im.get(), max_delta.get()) > 0)
                mpfr_abs(max_delta.get(), delta.im.get(), MPFR_RNDU);
        }
        if (bad) return std::nullopt;
        if (mpfr_cmp(max_delta.get(), eps.get()) <= 0) break;
    }

    // A-posteriori certification over exact dyadic centers: around each
    // center, a disk of radius n |g(z)| / |g'(z)| contains a root; disjoint
    // disks then hold exactly one root each, classified by axis position.
    const mpfr_prec_t bp = wp + 64;
    const IntPolynomial dg = g.derivative();
    std::vector<Rational> xr, xi, rad;
    xr.reserve(static_cast<std::size_t>(n));
    xi.reserve(static_cast<std::size_t>(n));
    rad.reserve(static_cast<std::size_t>(n));
    const Rational half_target = width_target / 2;
    for (int i = 0; i < n; ++i) {
        if (!mpfr_number_p(z[static_cast<std::size_t>(i)].re.get()) ||
            !mpfr_number_p(z[static_cast<std::size_t>(i)].im.get()))
            return std::nullopt;
        const Rational cr = mpfr_to_rational(z[static_cast<std::size_t>(i)].re.get());
        const Rational ci = mpfr_to_rational(z[static_cast<std::size_t>(i)].im.get());
        const Ball br = Ball::exact(cr, bp);
        const Ball bi = Ball::exact(ci, bp);
        const BallC gv = ball_horner(g, br, bi, bp);
        const BallC dv = ball_horner(dg, br, bi, bp);
        const Rational g_upper = gv.re.abs_upper() + gv.im.abs_upper();
        const Rational dg_lower =
            std::max(component_abs_lower(dv.re), component_abs_lower(dv.im));
        if (dg_lower == 0) return std::nullopt;
        const Rational r = Rational(n) * g_upper / dg_lower;
        if (r > half_target) return std::nullopt;
        xr.push_back(cr);
        xi.push_back(ci);
        rad.push_back(r);
    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Rational dre = abs(xr[static_cast<std::size_t>(i)] - xr[static_cast<std::size_t>(j)]);
            const Rational dim = abs(xi[static_cast<std::size_t>(i)] - xi[static_cast<std::size_t>(j)]);
            const Rational dist_lo = dre > dim ? dre : dim;
            if (!(dist_lo > rad[static_cast<std::size_t>(i)] + rad[static_cast<std::size_t>(j)]))
                return std::nullopt;
        }

    int upper = 0, lower = 0, straddle = 0;
    std::vector<Box> boxes;
    for (int i = 0; i < n; ++i) {
        const Rational& c = xi[static_cast<std::size_t>(i)];
        const Rational& r = rad[static_cast<std::size_t>(i)];
        if (c - r > 0) {
            ++upper;
            boxes.push_back(Box{{xr[static_cast<std::size_t>(i)] - r,
                                 xr[static_cast<std::size_t>(i)] + r},
                                {c - r, c + r}});
        } else if (c + r < 0) {
            ++lower;
        } else {
            ++straddle;
        }
    }
    if (straddle != m_real || upper != lower || 2 * upper + straddle != n)
        return std::nullopt;

    std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
        return a.re.lo != b.re.lo ? a.re.lo < b.re.lo : a.im.lo < b.im.lo;
    });
    return boxes;
}

// Upper-half-plane root boxes of a squarefree polynomial.
std::vector<Box> isolate_squarefree_complex(IntPolynomial g, const Rational& width_target) {
    std::vector<Box> out;
    if (g.degree() < 1) return out;
    if (g.coeff(0) == 0) g = deflate_zero_root(g);

    // Deflate every rational root exactly; complex roots are unaffected.
    for (const auto& iv : isolate_squarefree_real(g, Rational(1)))
        if (iv.is_point()) g = deflate_root(g, iv.lo);

    if (g.degree() < 2) return out;

    // Exact real-root count of the deflated polynomial.
    const auto chain = sturm_chain(g);
    const Rational m_bound = cauchy_power2_bound(g);
    const int m_real =
        sign_variations(chain, -m_bound) - sign_variations(chain, m_bound);
    if (g.degree() == m_real) return out;  // no complex roots

    if (g.degree() == 2) {
        out.push_back(quadratic_complex_box(g, width_target));
        return out;
    }

    for (mpfr_prec_t wp = 128; wp <= 4096; wp *= 2) {
        if (auto boxes = dk_attempt(g, m_real, width_target, wp)) return *boxes;
    }
    throw CertificationFailure(
        "complex root enclosures could not be certified at the precision cap");
}

// Shared refinement target: fine enough for the requested precision and for
// guaranteed pairwise disjointness (quarter of the minimal root separation).
Rational disjointness_target(const IntPolynomial& radical, unsigned precision_bits) {
    Rational target = pow2(-static_cast<long>(precision_bits));
    if (radical.degree() >= 2) {
        const Rational quarter_sep = mignotte_separation(radical) / 4;
        if (quarter_sep < target) target = quarter_sep;
    }
    return target;
}

IntPolynomial radical_of(const std::vector<std::pair<IntPolynomial, int>>& factors) {
    IntPolynomial radical{Integer(1)};
    for (const auto& [g, m] : factors) radical = radical * g;
    return radical;
}

}  // namespace

std::vector<IsolatedRealRoot> isolate_real_roots(const IntPolynomial& p,
                                                 unsigned precision_bits) {
    if (p.is_zero())
        throw std::invalid_argument("cannot isolate roots of the zero polynomial");
    const auto factors = squarefree_decomposition(p);
    const Rational target = disjointness_target(radical_of(factors), precision_bits);

    std::vector<IsolatedRealRoot> out;
    for (const auto& [g, mult] : factors)
        for (const auto& iv : isolate_squarefree_real(g, target))
            out.push_back({iv, static_cast<unsigned>(mult)});

    std::sort(out.begin(), out.end(), [](const IsolatedRealRoot& a, const IsolatedRealRoot& b) {
        return a.interval.lo < b.interval.lo;
    });
    return out;
}

std::vector<IsolatedComplexPair> isolate_complex_roots(const IntPolynomial& p,
                                                       unsigned precision_bits) {
    if (p.is_zero())
        throw std::invalid_argument("cannot isolate roots of the zero polynomial");
    const auto factors = squarefree_decomposition(p);
    const Rational target = disjointness_target(radical_of(factors), precision_bits);

    std::vector<IsolatedComplexPair> out;
    for (const auto& [g, mult] : factors)
        for (const auto& bx : isolate_squarefree_complex(g, target))
            out.push_back({bx.re, bx.im, static_cast<unsigned>(mult)});

    std::sort(out.begin(), out.end(),
              [](const IsolatedComplexPair& a, const IsolatedComplexPair& b) {
                  return a.real_interval.lo != b.real_interval.lo
                             ? a.real_interval.lo < b.real_interval.lo
                             : a.imag_interval.lo < b.imag_interval.lo;
              });
    return out;
}

Spectrum spectrum(const RatMatrix& a, unsigned precision_bits) {
    if (!a.is_square()) throw std::invalid_argument("spectrum requires a square matrix");
    Spectrum out;
    out.dimension = a.rows();
    if (a.rows() == 0) return out;

    const ScaledPolynomial cp = char_poly(a);
    const ScaledPolynomial mp = min_poly(a);
    const auto min_factors = squarefree_decomposition(mp.cleared);
    const auto char_factors = squarefree_decomposition(cp.cleared);
    const Rational target = disjointness_target(radical_of(min_factors), precision_bits);

    std::size_t alg_sum = 0;
    for (const auto& [g, index] : min_factors) {
        for (const auto& [h, alg] : char_factors) {
            const IntPolynomial q = poly_gcd(g, h);
            if (q.degree() < 1) continue;

            for (const auto& iv : isolate_squarefree_real(q, target)) {
                EigenvalueEnclosure e;
                e.real_interval = iv;
                e.imag_interval = {Rational(0), Rational(0)};
                e.index = static_cast<unsigned>(index);
                e.alg_multiplicity = static_cast<unsigned>(alg);
                if (iv.is_point() && iv.lo == 0)
                    e.kind = EigenvalueKind::Zero;
                else if (iv.lo > 0)
                    e.kind = EigenvalueKind::PositiveReal;
                else if (iv.hi < 0)
                    e.kind = EigenvalueKind::NegativeReal;
                else
                    throw std::logic_error("real enclosure with uncertified sign");
                out.eigenvalues.push_back(std::move(e));
                alg_sum += static_cast<std::size_t>(alg);
            }

            for (const auto& bx : isolate_squarefree_complex(q, target)) {
                EigenvalueEnclosure e;
                e.kind = EigenvalueKind::ComplexPair;
                e.real_interval = bx.re;
                e.imag_interval = bx.im;
                e.index = static_cast<unsigned>(index);
                e.alg_multiplicity = static_cast<unsigned>(alg);
                out.eigenvalues.push_back(std::move(e));
                alg_sum += 2 * static_cast<std::size_t>(alg);
            }
        }
    }

    if (alg_sum != out.dimension)
        throw std::logic_error("eigenvalue multiplicity bookkeeping failed");

    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
              [](const EigenvalueEnclosure& a, const EigenvalueEnclosure& b) {
                  if (a.real_interval.lo != b.real_interval.lo)
                      return a.real_interval.lo < b.real_interval.lo;
                  return a.imag_interval.lo < b.imag_interval.lo;
              });
    return out;
}

SignClass real_part_sign(const EigenvalueEnclosure& e) {
    switch (e.kind) {
        case EigenvalueKind::Zero:
            return SignClass::Zero;
        case EigenvalueKind::PositiveReal:
            return SignClass::Positive;
        case EigenvalueKind::NegativeReal:
            return SignClass::Negative;
        case EigenvalueKind::ComplexPair: {
            const RationalInterval& iv = e.real_interval;
            if (iv.is_point()) {
                if (iv.lo == 0) return SignClass::Zero;
                return iv.lo > 0 ? SignClass::Positive : SignClass::Negative;
            }
            if (iv.lo > 0) return SignClass::Positive;
            if (iv.hi < 0) return SignClass::Negative;
            return SignClass::ZeroUncertified;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace polyescape
