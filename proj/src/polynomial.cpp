#include "polyescape/polynomial.hpp"

#include <gmp.h>

#include <sstream>
#include <stdexcept>

namespace polyescape {

namespace ratpoly {

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_zero(const Poly& p) { return p.empty(); }

Poly add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] += b[i];
    }
    trim(out);
    return out;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] -= b[i];
    }
    trim(out);
    return out;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

Poly scale(const Poly& a, const Rational& s) {
    if (s == 0) return {};
    Poly out = a;
    for (auto& c : out) c *= s;
    return out;
}

Rational eval(const Poly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * Rational(Integer(i));
    return out;
}

Poly monic(const Poly& p) {
    if (p.empty()) return {};
    return scale(p, Rational(1) / p.back());
}

Poly divmod(const Poly& num, const Poly& den, Poly& rem) {
    if (den.empty()) throw std::invalid_argument("polynomial division by zero");
    rem = num;
    if (num.size() < den.size()) return {};
    Poly quot(num.size() - den.size() + 1);
    const Rational lead_inv = Rational(1) / den.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        if (rem.size() < den.size() + k) continue;
        const std::size_t top = den.size() - 1 + k;
        if (top >= rem.size() || rem[top] == 0) continue;
        const Rational q = rem[top] * lead_inv;
        quot[k] = q;
        for (std::size_t j = 0; j < den.size(); ++j) rem[j + k] -= q * den[j];
    }
    trim(rem);
    trim(quot);
    return quot;
}

Poly div_exact(const Poly& num, const Poly& den) {
    Poly rem;
    Poly quot = divmod(num, den, rem);
    if (!rem.empty()) throw std::logic_error("polynomial division expected to be exact");
    return quot;
}

Poly gcd_monic(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly rem;
        divmod(a, b, rem);
        a = std::move(b);
        b = monic(rem);  // positive rescaling preserves the gcd
    }
    return monic(a);
}

}  // namespace ratpoly

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial::IntPolynomial(std::initializer_list<Integer> coeffs)
    : IntPolynomial(std::vector<Integer>(coeffs)) {}

const Integer& IntPolynomial::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rational IntPolynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
    const Rational v = eval(x);
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Integer> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Integer(i);
    return IntPolynomial(std::move(out));
}

Integer IntPolynomial::content() const {
    Integer g = 0;
    for (const auto& c : c_) {
        Integer a = c < 0 ? Integer(-c) : c;
        mpz_gcd(g.backend().data(), g.backend().data(), a.backend().data());
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (c_.empty()) return {};
    Integer g = content();
    if (c_.back() < 0) g = -g;
    std::vector<Integer> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / g;
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
    std::vector<Integer> out(std::max(c_.size(), other.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < c_.size()) out[i] += c_[i];
        if (i < other.c_.size()) out[i] += other.c_[i];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
    std::vector<Integer> out(std::max(c_.size(), other.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < c_.size()) out[i] += c_[i];
        if (i < other.c_.size()) out[i] -= other.c_[i];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
    if (c_.empty() || other.c_.empty()) return {};
    std::vector<Integer> out(c_.size() + other.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < other.c_.size(); ++j) out[i + j] += c_[i] * other.c_[j];
    }
    return IntPolynomial(std::move(out));
}

ratpoly::Poly IntPolynomial::to_ratpoly() const {
    ratpoly::Poly out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = Rational(c_[i]);
    return out;
}

IntPolynomial IntPolynomial::from_ratpoly_cleared(const ratpoly::Poly& p) {
    if (p.empty()) return {};
    Integer l = 1;
    for (const auto& c : p) {
        Integer d = denominator(c);
        mpz_lcm(l.backend().data(), l.backend().data(), d.backend().data());
    }
    std::vector<Integer> cleared(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rational scaled = p[i] * Rational(l);
        cleared[i] = numerator(scaled);  // denominator is 1 by construction
    }
    return IntPolynomial(std::move(cleared)).primitive_part();
}

std::string IntPolynomial::to_pretty_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Integer a = c_[i];
        if (first) {
            if (a < 0) out << '-';
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        Integer mag = a < 0 ? Integer(-a) : a;
        if (i == 0 || mag != 1) out << mag.str();
        if (i >= 1) {
            out << var;
            if (i >= 2) out << '^' << i;
        }
    }
    return out.str();
}

RatMatrix eval(const IntPolynomial& p, const RatMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("matrix substitution needs a square matrix");
    const std::size_t d = a.rows();
    RatMatrix acc(d, d);
    const auto& c = p.coefficients();
    for (std::size_t k = c.size(); k-- > 0;) {
        acc = acc * a;
        for (std::size_t i = 0; i < d; ++i) acc.at(i, i) += Rational(c[k]);
    }
    return acc;
}

ratpoly::Poly ScaledPolynomial::monic() const {
    return ratpoly::monic(cleared.to_ratpoly());
}

namespace {

ScaledPolynomial clear_monic(const ratpoly::Poly& monic_poly) {
    ScaledPolynomial out;
    out.cleared = IntPolynomial::from_ratpoly_cleared(monic_poly);
    out.scale = out.cleared.is_zero() ? Rational(0) : Rational(out.cleared.leading());
    return out;
}

}  // namespace

ScaledPolynomial char_poly(const RatMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("char_poly needs a square matrix");
    const std::size_t d = a.rows();
    // Faddeev-LeVerrier: M_1 = I, c_{d-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{d-k} I.
    ratpoly::Poly coeffs(d + 1);
    coeffs[d] = 1;
    RatMatrix m = RatMatrix::identity(d);
    for (std::size_t k = 1; k <= d; ++k) {
        RatMatrix am = a * m;
        const Rational ck = -am.trace() / Rational(Integer(k));
        coeffs[d - k] = ck;
        if (k < d) {
            m = std::move(am);
            for (std::size_t i = 0; i < d; ++i) m.at(i, i) += ck;
        }
    }
    return clear_monic(coeffs);
}

ScaledPolynomial min_poly(const RatMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("min_poly needs a square matrix");
    const std::size_t d = a.rows();
    if (d == 0) throw std::invalid_argument("min_poly of empty matrix");

    // Vectorized powers I, A, A^2, ...; the first linear dependence gives the
    // monic annihilator of least degree.
    std::vector<RatVector> powers;
    RatMatrix pw = RatMatrix::identity(d);
    auto vectorize = [d](const RatMatrix& m) {
        RatVector v(d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) v[i * d + j] = m.at(i, j);
        return v;
    };
    powers.push_back(vectorize(pw));
    for (std::size_t k = 1; k <= d; ++k) {
        pw = pw * a;
        RatVector target = vectorize(pw);
        RatMatrix basis(d * d, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < d * d; ++i) basis.at(i, j) = powers[j][i];
        GaussSolution sol = gauss_solve(basis, target);
        if (sol.kind != GaussSolution::Kind::None) {
            ratpoly::Poly monic_poly(k + 1);
            monic_poly[k] = 1;
            for (std::size_t j = 0; j < k; ++j) monic_poly[j] = -sol.particular[j];
            ScaledPolynomial out = clear_monic(monic_poly);
            if (!eval(out.cleared, a).is_zero())
                throw std::logic_error("minimal polynomial failed to annihilate its matrix");
            return out;
        }
        powers.push_back(std::move(target));
    }
    throw std::logic_error("minimal polynomial search exceeded the matrix dimension");
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero polynomial");
    std::vector<std::pair<IntPolynomial, int>> result;
    if (p.degree() == 0) return result;

    using namespace ratpoly;
    Poly f = monic(p.to_ratpoly());
    Poly fp = derivative(f);
    Poly g = gcd_monic(f, fp);
    if (degree(g) == 0) {
        result.emplace_back(p.primitive_part(), 1);
        return result;
    }
    Poly w = div_exact(f, g);
    Poly y = div_exact(fp, g);
    Poly z = sub(y, derivative(w));
    int i = 1;
    while (degree(w) > 0) {
        Poly gi = gcd_monic(w, z);
        if (degree(gi) > 0)
            result.emplace_back(IntPolynomial::from_ratpoly_cleared(gi), i);
        w = div_exact(w, gi);
        if (degree(w) == 0) break;
        y = div_exact(z, gi);
        z = sub(y, derivative(w));
        ++i;
    }
    return result;
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    ratpoly::Poly g = ratpoly::gcd_monic(a.to_ratpoly(), b.to_ratpoly());
    return IntPolynomial::from_ratpoly_cleared(g);
}

bool poly_divides(const IntPolynomial& den, const IntPolynomial& num) {
    if (den.is_zero()) return num.is_zero();
    ratpoly::Poly rem;
    ratpoly::divmod(num.to_ratpoly(), den.to_ratpoly(), rem);
    return rem.empty();
}

}  // namespace polyescape
