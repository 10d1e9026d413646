#include "polyescape/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyescape {

bool RatVector::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x == 0; });
}

Rational RatVector::dot(const RatVector& other) const {
    if (size() != other.size()) throw std::invalid_argument("dot: size mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < size(); ++i) acc += e_[i] * other.e_[i];
    return acc;
}

RatVector RatVector::operator+(const RatVector& other) const {
    if (size() != other.size()) throw std::invalid_argument("vector add: size mismatch");
    RatVector out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = e_[i] + other.e_[i];
    return out;
}

RatVector RatVector::operator-(const RatVector& other) const {
    if (size() != other.size()) throw std::invalid_argument("vector sub: size mismatch");
    RatVector out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = e_[i] - other.e_[i];
    return out;
}

RatVector RatVector::operator*(const Rational& s) const {
    RatVector out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = e_[i] * s;
    return out;
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatVector RatMatrix::row(std::size_t i) const {
    RatVector out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

RatVector RatMatrix::col(std::size_t j) const {
    RatVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matmul: shape mismatch");
    RatMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += aik * other.at(k, j);
        }
    return out;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matvec: shape mismatch");
    RatVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
        out[i] = std::move(acc);
    }
    return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix add: shape mismatch");
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + other.a_[i];
    return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sub: shape mismatch");
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - other.a_[i];
    return out;
}

RatMatrix RatMatrix::operator*(const Rational& s) const {
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
    return out;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Rational RatMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace: matrix not square");
    Rational acc = 0;
    for (std::size_t i = 0; i < rows_; ++i) acc += at(i, i);
    return acc;
}

bool RatMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

std::size_t max_entry_bit_size(const RatMatrix& m) {
    std::size_t best = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            best = std::max(best, bit_size(m.at(i, j)));
    return best;
}

std::size_t max_entry_bit_size(const RatVector& v) {
    std::size_t best = 1;
    for (std::size_t i = 0; i < v.size(); ++i) best = std::max(best, bit_size(v[i]));
    return best;
}

namespace {

// Reduced row echelon form computed in place on an augmented matrix.
// Returns the pivot column of each pivot row, in order.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t active_cols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < active_cols && pivot_row < m.rows(); ++col) {
        std::size_t sel = m.rows();
        for (std::size_t r = pivot_row; r < m.rows(); ++r) {
            if (m.at(r, col) != 0) {
                sel = r;
                break;
            }
        }
        if (sel == m.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(sel, j), m.at(pivot_row, j));
        const Rational inv = Rational(1) / m.at(pivot_row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(pivot_row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || m.at(r, col) == 0) continue;
            const Rational f = m.at(r, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(r, j) -= f * m.at(pivot_row, j);
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    return pivot_cols;
}

}  // namespace

GaussSolution gauss_solve(const RatMatrix& m, const RatVector& v) {
    if (m.rows() != v.size()) throw std::invalid_argument("gauss_solve: shape mismatch");
    const std::size_t n = m.cols();
    RatMatrix aug(m.rows(), n + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n) = v[i];
    }
    const auto pivots = rref(aug, n);

    // Inconsistency: a row 0 ... 0 | nonzero.
    for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
        if (aug.at(i, n) != 0) return GaussSolution{GaussSolution::Kind::None, {}, {}};

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    RatVector particular(n);
    for (std::size_t k = 0; k < pivots.size(); ++k) particular[pivots[k]] = aug.at(k, n);

    std::vector<RatVector> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVector b(n);
        b[free_col] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            b[pivots[k]] = -aug.at(k, free_col);
        basis.push_back(std::move(b));
    }

    if (basis.empty())
        return GaussSolution{GaussSolution::Kind::Unique, std::move(particular), {}};
    return GaussSolution{GaussSolution::Kind::Parametric, std::move(particular), std::move(basis)};
}

RatMatrix kernel(const RatMatrix& m) {
    const std::size_t n = m.cols();
    GaussSolution sol = gauss_solve(m, RatVector(m.rows()));
    const auto& basis = sol.kernel_basis;
    RatMatrix out(n, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) out.at(i, j) = basis[j][i];
    return out;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix work = m;
    return rref(work, m.cols()).size();
}

}  // namespace polyescape
