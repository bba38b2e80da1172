#include "rfh/matrix.hpp"

#include <sstream>

namespace rfh {

ExactMatrix ExactMatrix::identity(std::size_t n, Ring ring)
{
    ExactMatrix m(n, n, ring);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<long long>>& rows, Ring ring)
{
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    ExactMatrix m(r, c, ring);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw Error(ErrorKind::ShapeMismatch, "ragged row list");
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

bool ExactMatrix::is_integral() const
{
    for (const Rat& x : entries_)
        if (!rfh::is_integral(x)) return false;
    return true;
}

bool ExactMatrix::is_zero() const
{
    for (const Rat& x : entries_)
        if (x != 0) return false;
    return true;
}

ExactMatrix ExactMatrix::transposed() const
{
    ExactMatrix t(cols_, rows_, ring_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
    ExactMatrix p(rows_, rhs.cols_, ring_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rat& b = rhs.at(k, j);
                if (b != 0) p.at(i, j) += a * b;
            }
        }
    return p;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error(ErrorKind::ShapeMismatch, "matrix sum shape mismatch");
    ExactMatrix s(rows_, cols_, ring_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        s.entries_[i] = entries_[i] + rhs.entries_[i];
    return s;
}

ExactMatrix ExactMatrix::operator-() const
{
    ExactMatrix s(rows_, cols_, ring_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        s.entries_[i] = -entries_[i];
    return s;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const
{
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

void ExactMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap(at(a, j), at(b, j));
}

void ExactMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap(at(i, a), at(i, b));
}

std::size_t ExactMatrix::rank() const
{
    ExactMatrix w = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.cols_ && r < w.rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < w.rows_ && w.at(pivot, c) == 0) ++pivot;
        if (pivot == w.rows_) continue;
        w.swap_rows(r, pivot);
        for (std::size_t i = r + 1; i < w.rows_; ++i) {
            if (w.at(i, c) == 0) continue;
            Rat f = w.at(i, c) / w.at(r, c);
            for (std::size_t j = c; j < w.cols_; ++j)
                w.at(i, j) -= f * w.at(r, j);
        }
        ++r;
    }
    return r;
}

std::string ExactMatrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << scalar_to_string(at(i, j));
        }
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    os << "] (" << rows_ << "x" << cols_ << " over " << ring_name(ring_) << ")";
    return os.str();
}

ExactMatrix solve_linear(const ExactMatrix& u, const ExactMatrix& b)
{
    if (u.rows() != u.cols())
        throw Error(ErrorKind::ShapeMismatch, "solve_linear needs a square matrix");
    if (u.rows() != b.rows())
        throw Error(ErrorKind::ShapeMismatch, "solve_linear shape mismatch");
    std::size_t n = u.rows();
    ExactMatrix a = u;
    ExactMatrix x = b;
    // Forward elimination with exact pivots, then back substitution.
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a.at(pivot, c) == 0) ++pivot;
        if (pivot == n)
            throw Error(ErrorKind::DomainError, "solve_linear: singular matrix");
        a.swap_rows(c, pivot);
        x.swap_rows(c, pivot);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a.at(i, c) == 0) continue;
            Rat f = a.at(i, c) / a.at(c, c);
            for (std::size_t j = c; j < n; ++j)
                a.at(i, j) -= f * a.at(c, j);
            for (std::size_t j = 0; j < x.cols(); ++j)
                x.at(i, j) -= f * x.at(c, j);
        }
    }
    for (std::size_t rc = n; rc-- > 0;) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            Rat acc = x.at(rc, j);
            for (std::size_t k = rc + 1; k < n; ++k)
                acc -= a.at(rc, k) * x.at(k, j);
            x.at(rc, j) = acc / a.at(rc, rc);
        }
    }
    return x;
}

} // namespace rfh
