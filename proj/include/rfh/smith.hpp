#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rfh/matrix.hpp"

namespace rfh {

/// Invariant-factor normal form of an integer matrix: nonnegative diagonal
/// d_1 | d_2 | ... | d_r followed by zeros. When transforms are requested,
/// left * M * right equals the diagonal form and both transforms are
/// unimodular.
struct SmithDecomposition {
    std::vector<Int> diagonal;  // length min(rows, cols)
    std::size_t rank = 0;       // number of nonzero diagonal entries
    std::optional<ExactMatrix> left;
    std::optional<ExactMatrix> right;

    ExactMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

SmithDecomposition smith_normal_form(const ExactMatrix& m, bool want_transforms = false);

/// A finitely generated abelian group: free part plus invariant-factor
/// torsion chain (each entry >= 2, each dividing the next). Over Q the
/// torsion list is empty and free_rank is the dimension.
struct AbelianGroupDescription {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroupDescription&) const = default;

    /// "0", "Z", "Z^2 + Z_2 + Z_4", ...
    std::string to_string() const;
};

AbelianGroupDescription direct_sum(const AbelianGroupDescription& a,
                                   const AbelianGroupDescription& b);

/// Target space modulo the column span of m.
AbelianGroupDescription cokernel_description(const ExactMatrix& m);

std::size_t kernel_rank(const ExactMatrix& m);

/// Columns form a basis of the kernel lattice ker(m) in Z^cols; each column
/// is primitive and the span is saturated. Integer matrices only.
ExactMatrix kernel_basis(const ExactMatrix& m);

} // namespace rfh
