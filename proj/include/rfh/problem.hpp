#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rfh/graded.hpp"

namespace rfh {

struct ProblemMetadata {
    std::optional<Int> m_w;       // multiplicity of the fiber class killed in the filling
    std::optional<Rat> k_const;   // monotonicity constant K
    bool operator==(const ProblemMetadata&) const = default;
};

/// One Gysin-sequence computation: coefficient ring, grading, the graded
/// basis of the base, the connecting map delta (the full map, degree shift
/// -2, with any sphere-count correction already folded in), an optional
/// Morse boundary (shift -1), and bookkeeping metadata.
///
/// delta_c_coeff records the scalar of the T^{-1}-identity summand of delta
/// for reporting; it is not added again by the engine.
struct GysinProblem {
    std::string label;
    Ring ring = Ring::Z;
    NovikovGrading grading = NovikovGrading::trivial();
    int dim_sigma = 0;
    GradedBasis basis;
    GradedMap delta;
    std::optional<GradedMap> boundary;
    Rat delta_c_coeff = 0;
    ProblemMetadata metadata;

    int half_dim() const { return dim_sigma / 2; }
    bool has_nonzero_boundary() const { return boundary && !boundary->is_zero(); }
};

/// Structural violations: wrong shifts, mismatched bases or gradings,
/// invalid delta/boundary, broken chain conditions, delta_c constraints.
/// Empty result means the problem is well formed.
std::vector<Violation> validate_problem(const GysinProblem& p);

/// Throws InvalidProblem when validation fails.
void require_valid_problem(const GysinProblem& p);

/// Same problem viewed over another coefficient ring. Q -> Z requires all
/// coefficients to be integers.
GysinProblem with_ring(const GysinProblem& p, Ring ring);

} // namespace rfh
