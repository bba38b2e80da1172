#pragma once

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "rfh/engine.hpp"
#include "rfh/presets.hpp"

namespace rfh {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;      // diff or note; empty when silent
    std::string provenance;  // where the expected values come from
};

using CheckList = std::vector<CheckResult>;

/// Expected homology tables in closed form, used by the golden suites.
AbelianGroupDescription expected_sphere_cotangent(int n, int degree);
AbelianGroupDescription expected_quadric_complement(int n, int degree);
std::vector<AbelianGroupDescription> expected_lens_space(int k);  // degrees -1..2

CheckList verify_spheres();
CheckList verify_quadric_complements();
CheckList verify_hypersurfaces_vanishing();
CheckList verify_hypersurfaces_generic();
CheckList verify_flag();
CheckList verify_classical();
CheckList verify_snf();
CheckList verify_properties();

std::string verify_suite_names();

/// Runs one suite (or "all") and prints one line per check. Returns 0 when
/// everything passed, 1 otherwise.
int run_verify_suite(const std::string& suite, std::ostream& os);

/// Randomized inputs for the property suites; deterministic given the seed.
ExactMatrix random_int_matrix(std::mt19937& rng, std::size_t max_dim, int max_abs);
ExactMatrix random_unimodular_matrix(std::mt19937& rng, std::size_t n);
GysinProblem random_valid_problem(std::mt19937& rng);
GradedMap random_unimodular_degree0_map(const GradedBasis& basis, const NovikovGrading& grading,
                                        Ring ring, std::mt19937& rng);

/// Determinant by cofactor expansion; independent of the normal-form code.
Int determinant_by_cofactors(const ExactMatrix& m);

} // namespace rfh
