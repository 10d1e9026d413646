#include "polyescape/lp.hpp"

#include <algorithm>
#include <optional>

namespace polyescape {

bool Polytope::contains(const RatVector& x) const {
    if (x.size() != dimension()) return false;
    for (std::size_t i = 0; i < b.rows(); ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < b.cols(); ++j) acc += b.at(i, j) * x[j];
        if (acc > c[i]) return false;
    }
    return true;
}

namespace {

// Dense tableau simplex over exact rationals, minimization form:
//   min cost . z   s.t.  M z = rhs (rhs >= 0),  z >= 0,
// driven by Bland's rule (smallest eligible index), which cannot cycle.
class SimplexTableau {
public:
    SimplexTableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
                   std::vector<int> basis, std::size_t num_cols)
        : t_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)), cols_(num_cols) {}

    // Installs a cost vector (padded with zeros) and prices out the basis.
    void set_cost(const std::vector<Rational>& cost) {
        cost_.assign(cols_, Rational(0));
        std::copy(cost.begin(), cost.end(), cost_.begin());
        value_ = 0;
        for (std::size_t r = 0; r < t_.size(); ++r) {
            const Rational f = cost_[static_cast<std::size_t>(basis_[r])];
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j) cost_[j] -= f * t_[r][j];
            value_ -= f * rhs_[r];
        }
    }

    void ban_column(std::size_t j) { banned_[j] = true; }
    void init_bans() { banned_.assign(cols_, false); }

    enum class Step { Optimal, Unbounded, Pivoted };

    Step step() {
        std::size_t enter = cols_;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!banned_[j] && cost_[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols_) return Step::Optimal;

        std::size_t leave = t_.size();
        Rational best_ratio;
        for (std::size_t r = 0; r < t_.size(); ++r) {
            if (t_[r][enter] <= 0) continue;
            Rational ratio = rhs_[r] / t_[r][enter];
            if (leave == t_.size() || ratio < best_ratio ||
                (ratio == best_ratio && basis_[r] < basis_[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == t_.size()) {
            unbounded_col_ = enter;
            return Step::Unbounded;
        }
        pivot(leave, enter);
        return Step::Pivoted;
    }

    Step run() {
        for (;;) {
            const Step s = step();
            if (s != Step::Pivoted) return s;
        }
    }

    const Rational& objective_value() const { return value_; }
    const std::vector<int>& basis() const { return basis_; }
    std::size_t rows() const { return t_.size(); }
    const Rational& coeff(std::size_t r, std::size_t j) const { return t_[r][j]; }
    const Rational& rhs(std::size_t r) const { return rhs_[r]; }
    std::size_t unbounded_col() const { return unbounded_col_; }

    // Value of variable j in the current basic solution.
    Rational variable_value(std::size_t j) const {
        for (std::size_t r = 0; r < t_.size(); ++r)
            if (basis_[r] == static_cast<int>(j)) return rhs_[r];
        return 0;
    }

    // Direction of the unbounded ray in variable space.
    std::vector<Rational> ray() const {
        std::vector<Rational> d(cols_, Rational(0));
        d[unbounded_col_] = 1;
        for (std::size_t r = 0; r < t_.size(); ++r)
            d[static_cast<std::size_t>(basis_[r])] = -t_[r][unbounded_col_];
        return d;
    }

    // Pivot a basic variable in column `avoid_beyond` out of row r if possible;
    // returns false when the row has no eligible nonzero column (redundant row).
    bool force_out_of_basis(std::size_t r, std::size_t first_banned_col) {
        for (std::size_t j = 0; j < first_banned_col; ++j) {
            if (t_[r][j] != 0) {
                pivot(r, j);
                return true;
            }
        }
        return false;
    }

    void drop_row(std::size_t r) {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

private:
    void pivot(std::size_t leave, std::size_t enter) {
        const Rational inv = Rational(1) / t_[leave][enter];
        for (auto& v : t_[leave]) v *= inv;
        rhs_[leave] *= inv;
        t_[leave][enter] = 1;  // kill residual normalization noise exactly
        for (std::size_t r = 0; r < t_.size(); ++r) {
            if (r == leave || t_[r][enter] == 0) continue;
            const Rational f = t_[r][enter];
            for (std::size_t j = 0; j < cols_; ++j) t_[r][j] -= f * t_[leave][j];
            t_[r][enter] = 0;
            rhs_[r] -= f * rhs_[leave];
        }
        if (cost_[enter] != 0) {
            const Rational f = cost_[enter];
            for (std::size_t j = 0; j < cols_; ++j) cost_[j] -= f * t_[leave][j];
            cost_[enter] = 0;
            value_ -= f * rhs_[leave];
        }
        basis_[leave] = static_cast<int>(enter);
    }

    std::vector<std::vector<Rational>> t_;
    std::vector<Rational> rhs_;
    std::vector<Rational> cost_;
    std::vector<int> basis_;
    std::vector<bool> banned_;
    std::size_t cols_;
    Rational value_ = 0;
    std::size_t unbounded_col_ = 0;
};

// Shared solver: min/max objective . x over {B x <= c, E x = f} with x free,
// modeled as x = u - w, u, w >= 0, slack per inequality row, one artificial
// per row for phase 1.
struct StandardForm {
    std::size_t d = 0;        // original dimension
    std::size_t n_ineq = 0;   // inequality rows
    std::size_t n_rows = 0;   // total equation rows
    std::size_t slack0 = 0;   // first slack column
    std::size_t art0 = 0;     // first artificial column
    std::size_t cols = 0;
};

LpOutcome solve(const Polytope& p, const RatMatrix* e, const RatVector* f,
                const RatVector& objective, LpSense sense) {
    const std::size_t d = p.dimension();
    const std::size_t n_ineq = p.b.rows();
    const std::size_t n_eq = e ? e->rows() : 0;
    const std::size_t n_rows = n_ineq + n_eq;

    StandardForm sf;
    sf.d = d;
    sf.n_ineq = n_ineq;
    sf.n_rows = n_rows;
    sf.slack0 = 2 * d;
    sf.art0 = 2 * d + n_ineq;
    sf.cols = sf.art0 + n_rows;

    std::vector<std::vector<Rational>> rows(n_rows, std::vector<Rational>(sf.cols, Rational(0)));
    std::vector<Rational> rhs(n_rows);
    std::vector<int> basis(n_rows);

    auto fill_row = [&](std::size_t r, const RatMatrix& m, std::size_t src_row,
                        const Rational& rhs_value, bool with_slack) {
        const bool flip = rhs_value < 0;
        const Rational sign = flip ? Rational(-1) : Rational(1);
        for (std::size_t j = 0; j < d; ++j) {
            const Rational v = sign * m.at(src_row, j);
            rows[r][j] = v;
            rows[r][d + j] = -v;
        }
        if (with_slack) rows[r][sf.slack0 + r] = sign;
        rows[r][sf.art0 + r] = 1;
        rhs[r] = sign * rhs_value;
        basis[r] = static_cast<int>(sf.art0 + r);
    };

    for (std::size_t i = 0; i < n_ineq; ++i) fill_row(i, p.b, i, p.c[i], true);
    for (std::size_t i = 0; i < n_eq; ++i) fill_row(n_ineq + i, *e, i, (*f)[i], false);

    SimplexTableau tab(std::move(rows), std::move(rhs), std::move(basis), sf.cols);
    tab.init_bans();

    // Phase 1: minimize the sum of artificials.
    std::vector<Rational> phase1_cost(sf.cols, Rational(0));
    for (std::size_t j = sf.art0; j < sf.cols; ++j) phase1_cost[j] = 1;
    tab.set_cost(phase1_cost);
    if (tab.run() != SimplexTableau::Step::Optimal)
        throw std::logic_error("phase-1 simplex cannot be unbounded");
    if (tab.objective_value() != 0) return LpOutcome{LpStatus::Infeasible, {}, {}};

    // Drive remaining artificials out of the basis (degenerate feasibility).
    for (std::size_t r = 0; r < tab.rows();) {
        if (tab.basis()[r] >= static_cast<int>(sf.art0)) {
            if (!tab.force_out_of_basis(r, sf.art0)) {
                tab.drop_row(r);
                continue;
            }
        }
        ++r;
    }
    for (std::size_t j = sf.art0; j < sf.cols; ++j) tab.ban_column(j);

    // Phase 2.
    std::vector<Rational> phase2_cost(sf.cols, Rational(0));
    const Rational flip = sense == LpSense::Max ? Rational(-1) : Rational(1);
    for (std::size_t j = 0; j < d; ++j) {
        phase2_cost[j] = flip * objective[j];
        phase2_cost[d + j] = -flip * objective[j];
    }
    tab.set_cost(phase2_cost);
    const auto status = tab.run();

    if (status == SimplexTableau::Step::Unbounded) {
        const auto zray = tab.ray();
        RatVector ray(d);
        for (std::size_t j = 0; j < d; ++j) ray[j] = zray[j] - zray[d + j];
        return LpOutcome{LpStatus::Unbounded, std::move(ray), {}};
    }

    RatVector point(d);
    for (std::size_t j = 0; j < d; ++j)
        point[j] = tab.variable_value(j) - tab.variable_value(d + j);
    Rational value = 0;
    for (std::size_t j = 0; j < d; ++j) value += objective[j] * point[j];
    return LpOutcome{LpStatus::Optimal, std::move(point), std::move(value)};
}

}  // namespace

LpOutcome lp_optimize(const Polytope& p, const RatVector& objective, LpSense sense) {
    if (objective.size() != p.dimension())
        throw std::invalid_argument("lp_optimize: objective dimension mismatch");
    if (p.b.rows() != p.c.size())
        throw std::invalid_argument("lp_optimize: polytope shape mismatch");
    return solve(p, nullptr, nullptr, objective, sense);
}

LpOutcome lp_feasible_with_equalities(const Polytope& p, const RatMatrix& e, const RatVector& f) {
    if (e.cols() != p.dimension())
        throw std::invalid_argument("lp_feasible_with_equalities: dimension mismatch");
    if (e.rows() != f.size())
        throw std::invalid_argument("lp_feasible_with_equalities: equality shape mismatch");
    RatVector zero(p.dimension());
    return solve(p, &e, &f, zero, LpSense::Min);
}

Compactness is_compact_nonempty(const Polytope& p) {
    RatVector zero(p.dimension());
    if (solve(p, nullptr, nullptr, zero, LpSense::Min).status == LpStatus::Infeasible)
        return Compactness::Empty;
    for (std::size_t j = 0; j < p.dimension(); ++j) {
        RatVector obj(p.dimension());
        obj[j] = 1;
        if (lp_optimize(p, obj, LpSense::Max).status == LpStatus::Unbounded)
            return Compactness::Unbounded;
        if (lp_optimize(p, obj, LpSense::Min).status == LpStatus::Unbounded)
            return Compactness::Unbounded;
    }
    return Compactness::CompactNonempty;
}

std::vector<RatVector> vertices(const Polytope& p, unsigned long enumeration_cap) {
    const std::size_t n = p.b.rows();
    const std::size_t d = p.dimension();
    if (n < d) return {};

    Integer combos = 1;
    for (std::size_t i = 0; i < d; ++i) combos = combos * Integer(n - i) / Integer(i + 1);
    if (combos > Integer(enumeration_cap))
        throw EnumerationCapExceeded(
            "vertex enumeration over " + combos.str() + " constraint subsets exceeds the cap of " +
            std::to_string(enumeration_cap));

    std::vector<RatVector> found;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;

    auto advance = [&]() -> bool {
        std::size_t i = d;
        while (i-- > 0) {
            if (idx[i] != i + n - d) {
                ++idx[i];
                for (std::size_t k = i + 1; k < d; ++k) idx[k] = idx[k - 1] + 1;
                return true;
            }
        }
        return false;
    };

    do {
        RatMatrix sys(d, d);
        RatVector rhs(d);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) sys.at(i, j) = p.b.at(idx[i], j);
            rhs[i] = p.c[idx[i]];
        }
        GaussSolution sol = gauss_solve(sys, rhs);
        if (sol.kind != GaussSolution::Kind::Unique) continue;
        if (!p.contains(sol.particular)) continue;
        found.push_back(std::move(sol.particular));
    } while (advance());

    std::sort(found.begin(), found.end(), [](const RatVector& a, const RatVector& b) {
        return a.entries() < b.entries();
    });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

}  // namespace polyescape
