#pragma once

#include <cstddef>
#include <vector>

#include "rfh/scalars.hpp"

namespace rfh {

/// Dense matrix with exact entries over Z or Q. Over Z every entry is an
/// integer (denominator one); the ring tag decides which normal forms and
/// group descriptions apply downstream.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0), ring_(Ring::Z) {}

    ExactMatrix(std::size_t rows, std::size_t cols, Ring ring = Ring::Z)
        : rows_(rows), cols_(cols), ring_(ring), entries_(rows * cols, Rat(0)) {}

    static ExactMatrix identity(std::size_t n, Ring ring = Ring::Z);

    /// Builds from rows of integers, e.g. {{2,-2},{-2,2}}.
    static ExactMatrix from_rows(const std::vector<std::vector<long long>>& rows,
                                 Ring ring = Ring::Z);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Ring ring() const { return ring_; }

    const Rat& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Rat& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    bool is_integral() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    ExactMatrix transposed() const;
    ExactMatrix operator*(const ExactMatrix& rhs) const;
    ExactMatrix operator+(const ExactMatrix& rhs) const;
    ExactMatrix operator-() const;

    bool operator==(const ExactMatrix& rhs) const;
    bool operator!=(const ExactMatrix& rhs) const { return !(*this == rhs); }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

    /// Row echelon rank over the fraction field; exact, destroys nothing.
    std::size_t rank() const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    Ring ring_;
    std::vector<Rat> entries_;
};

/// Solves U * X = B for X where U is square and invertible over Q.
/// Throws DomainError when U is singular.
ExactMatrix solve_linear(const ExactMatrix& u, const ExactMatrix& b);

} // namespace rfh
