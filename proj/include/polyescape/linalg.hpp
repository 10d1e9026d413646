#pragma once

#include "polyescape/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace polyescape {

class RatVector {
public:
    RatVector() = default;
    explicit RatVector(std::size_t n) : e_(n) {}
    RatVector(std::initializer_list<Rational> init) : e_(init) {}
    explicit RatVector(std::vector<Rational> entries) : e_(std::move(entries)) {}

    std::size_t size() const { return e_.size(); }
    Rational& operator[](std::size_t i) { return e_[i]; }
    const Rational& operator[](std::size_t i) const { return e_[i]; }

    auto begin() { return e_.begin(); }
    auto end() { return e_.end(); }
    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

    bool is_zero() const;
    Rational dot(const RatVector& other) const;
    RatVector operator+(const RatVector& other) const;
    RatVector operator-(const RatVector& other) const;
    RatVector operator*(const Rational& s) const;
    bool operator==(const RatVector& other) const = default;

    const std::vector<Rational>& entries() const { return e_; }

private:
    std::vector<Rational> e_;
};

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    // Row-major construction from nested initializer lists.
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RatVector row(std::size_t i) const;
    RatVector col(std::size_t j) const;

    RatMatrix operator*(const RatMatrix& other) const;
    RatVector operator*(const RatVector& v) const;
    RatMatrix operator+(const RatMatrix& other) const;
    RatMatrix operator-(const RatMatrix& other) const;
    RatMatrix operator*(const Rational& s) const;
    bool operator==(const RatMatrix& other) const = default;

    RatMatrix transpose() const;
    Rational trace() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Maximum bit size over all entries (1 for an empty collection).
std::size_t max_entry_bit_size(const RatMatrix& m);
std::size_t max_entry_bit_size(const RatVector& v);

// Outcome of solving M x = v exactly.
struct GaussSolution {
    enum class Kind { Unique, None, Parametric };
    Kind kind = Kind::None;
    // A solution of M x = v (the unique one for Kind::Unique, any particular
    // one for Kind::Parametric). Empty for Kind::None.
    RatVector particular;
    // Basis of the solution space of M x = 0; nonempty iff Kind::Parametric.
    std::vector<RatVector> kernel_basis;
};

// Exact Gaussian elimination with deterministic pivoting (first row with a
// nonzero entry in the current column).
GaussSolution gauss_solve(const RatMatrix& m, const RatVector& v);

// Basis of {x : M x = 0} as matrix columns (d x k for a matrix with d
// columns and kernel dimension k; k == 0 for a trivial kernel).
RatMatrix kernel(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

}  // namespace polyescape
