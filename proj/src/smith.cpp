#include "rfh/smith.hpp"

#include <algorithm>
#include <sstream>

namespace rfh {

ExactMatrix SmithDecomposition::diagonal_matrix(std::size_t rows, std::size_t cols) const
{
    ExactMatrix d(rows, cols, Ring::Z);
    for (std::size_t i = 0; i < diagonal.size(); ++i)
        d.at(i, i) = Rat(diagonal[i]);
    return d;
}

namespace {

// Working state: integer entries plus optional unimodular transform
// accumulators. Row operations act on L, column operations on R, so that
// L * M_input * R stays equal to the current working matrix.
struct SnfWork {
    std::size_t rows, cols;
    std::vector<Int> a;
    bool track;
    std::vector<Int> left, right;

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    Int& l(std::size_t i, std::size_t j) { return left[i * rows + j]; }
    Int& r(std::size_t i, std::size_t j) { return right[i * cols + j]; }

    void swap_rows(std::size_t x, std::size_t y)
    {
        if (x == y) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(at(x, j), at(y, j));
        if (track)
            for (std::size_t j = 0; j < rows; ++j) std::swap(l(x, j), l(y, j));
    }

    void swap_cols(std::size_t x, std::size_t y)
    {
        if (x == y) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, x), at(i, y));
        if (track)
            for (std::size_t i = 0; i < cols; ++i) std::swap(r(i, x), r(i, y));
    }

    // row_x += q * row_y
    void add_row(std::size_t x, std::size_t y, const Int& q)
    {
        if (q == 0) return;
        for (std::size_t j = 0; j < cols; ++j) at(x, j) += q * at(y, j);
        if (track)
            for (std::size_t j = 0; j < rows; ++j) l(x, j) += q * l(y, j);
    }

    // col_x += q * col_y
    void add_col(std::size_t x, std::size_t y, const Int& q)
    {
        if (q == 0) return;
        for (std::size_t i = 0; i < rows; ++i) at(i, x) += q * at(i, y);
        if (track)
            for (std::size_t i = 0; i < cols; ++i) r(i, x) += q * r(i, y);
    }

    void negate_row(std::size_t x)
    {
        for (std::size_t j = 0; j < cols; ++j) at(x, j) = -at(x, j);
        if (track)
            for (std::size_t j = 0; j < rows; ++j) l(x, j) = -l(x, j);
    }
};

} // namespace

SmithDecomposition smith_normal_form(const ExactMatrix& m, bool want_transforms)
{
    if (!m.is_integral())
        throw Error(ErrorKind::DomainError, "smith_normal_form requires integer entries");

    SnfWork w;
    w.rows = m.rows();
    w.cols = m.cols();
    w.track = want_transforms;
    w.a.resize(w.rows * w.cols);
    for (std::size_t i = 0; i < w.rows; ++i)
        for (std::size_t j = 0; j < w.cols; ++j)
            w.at(i, j) = to_int(m.at(i, j));
    if (w.track) {
        w.left.assign(w.rows * w.rows, Int(0));
        w.right.assign(w.cols * w.cols, Int(0));
        for (std::size_t i = 0; i < w.rows; ++i) w.l(i, i) = 1;
        for (std::size_t j = 0; j < w.cols; ++j) w.r(j, j) = 1;
    }

    std::size_t nmin = std::min(w.rows, w.cols);
    std::size_t s = 0;
    for (; s < nmin; ++s) {
        for (;;) {
            // Pivot on the smallest nonzero entry of the trailing submatrix.
            bool found = false;
            Int best;
            std::size_t bi = s, bj = s;
            for (std::size_t i = s; i < w.rows; ++i)
                for (std::size_t j = s; j < w.cols; ++j) {
                    if (w.at(i, j) == 0) continue;
                    Int v = abs_int(w.at(i, j));
                    if (!found || v < best) {
                        found = true;
                        best = v;
                        bi = i;
                        bj = j;
                    }
                }
            if (!found) goto done;  // trailing submatrix is zero
            w.swap_rows(s, bi);
            w.swap_cols(s, bj);

            bool clean = true;
            for (std::size_t i = s + 1; i < w.rows; ++i) {
                if (w.at(i, s) == 0) continue;
                Int q = w.at(i, s) / w.at(s, s);
                w.add_row(i, s, -q);
                if (w.at(i, s) != 0) clean = false;  // remainder smaller than pivot
            }
            for (std::size_t j = s + 1; j < w.cols; ++j) {
                if (w.at(s, j) == 0) continue;
                Int q = w.at(s, j) / w.at(s, s);
                w.add_col(j, s, -q);
                if (w.at(s, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the rest of the submatrix, otherwise fold the
            // offending row in and restart with a smaller pivot (gcd step).
            bool divides = true;
            for (std::size_t i = s + 1; i < w.rows && divides; ++i)
                for (std::size_t j = s + 1; j < w.cols && divides; ++j)
                    if (w.at(i, j) % w.at(s, s) != 0) {
                        w.add_row(s, i, Int(1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (w.at(s, s) < 0) w.negate_row(s);
    }
done:

    SmithDecomposition out;
    out.diagonal.resize(nmin, Int(0));
    for (std::size_t i = 0; i < nmin; ++i)
        out.diagonal[i] = w.at(i, i);
    out.rank = 0;
    while (out.rank < nmin && out.diagonal[out.rank] != 0) ++out.rank;

    if (want_transforms) {
        ExactMatrix left(w.rows, w.rows, Ring::Z), right(w.cols, w.cols, Ring::Z);
        for (std::size_t i = 0; i < w.rows; ++i)
            for (std::size_t j = 0; j < w.rows; ++j)
                left.at(i, j) = Rat(w.l(i, j));
        for (std::size_t i = 0; i < w.cols; ++i)
            for (std::size_t j = 0; j < w.cols; ++j)
                right.at(i, j) = Rat(w.r(i, j));
        out.left = std::move(left);
        out.right = std::move(right);
    }
    return out;
}

std::string AbelianGroupDescription::to_string() const
{
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const Int& t : torsion) {
        if (!first) os << " + ";
        os << "Z_" << t.str();
        first = false;
    }
    return os.str();
}

AbelianGroupDescription direct_sum(const AbelianGroupDescription& a,
                                   const AbelianGroupDescription& b)
{
    // Merge the two torsion chains into one divisibility chain via the
    // normal form of the block-diagonal matrix.
    AbelianGroupDescription out;
    out.free_rank = a.free_rank + b.free_rank;
    if (a.torsion.empty()) {
        out.torsion = b.torsion;
        return out;
    }
    if (b.torsion.empty()) {
        out.torsion = a.torsion;
        return out;
    }
    std::size_t n = a.torsion.size() + b.torsion.size();
    ExactMatrix d(n, n, Ring::Z);
    std::size_t k = 0;
    for (const Int& t : a.torsion) d.at(k, k) = Rat(t), ++k;
    for (const Int& t : b.torsion) d.at(k, k) = Rat(t), ++k;
    SmithDecomposition snf = smith_normal_form(d);
    for (const Int& t : snf.diagonal)
        if (t > 1) out.torsion.push_back(t);
    return out;
}

AbelianGroupDescription cokernel_description(const ExactMatrix& m)
{
    AbelianGroupDescription g;
    if (m.ring() == Ring::Q) {
        g.free_rank = m.rows() - m.rank();
        return g;
    }
    SmithDecomposition snf = smith_normal_form(m);
    g.free_rank = m.rows() - snf.rank;
    for (const Int& d : snf.diagonal)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

std::size_t kernel_rank(const ExactMatrix& m)
{
    return m.cols() - m.rank();
}

ExactMatrix kernel_basis(const ExactMatrix& m)
{
    if (m.ring() != Ring::Z || !m.is_integral())
        throw Error(ErrorKind::DomainError, "kernel_basis is defined over Z");
    SmithDecomposition snf = smith_normal_form(m, true);
    // Columns of the right transform beyond the rank are a saturated basis
    // of the kernel lattice: they extend to a basis of Z^cols.
    const ExactMatrix& right = *snf.right;
    std::size_t k = m.cols() - snf.rank;
    ExactMatrix basis(m.cols(), k, Ring::Z);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < m.cols(); ++i)
            basis.at(i, j) = right.at(i, snf.rank + j);
    return basis;
}

} // namespace rfh
