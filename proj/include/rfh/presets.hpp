#pragma once

#include <map>
#include <vector>

#include "rfh/problem.hpp"

namespace rfh {

/// Rabinowitz Floer homology problem for the unit cotangent bundle of the
/// k-sphere, modeled on the circle bundle over the (k-1)-quadric; k = 2 uses
/// the diagonal model in the product of two projective lines, which carries
/// a nonzero sphere-count correction.
GysinProblem preset_unit_cotangent_sphere(int k);

/// Complement of a smooth degree-d hypersurface in projective (n+1)-space.
/// d <= 2 works over Z or Q; 3 <= d <= n and d = n+1 are rational only.
/// d = n+1 over Z is rejected: no integral basis is known for the
/// eigenvector-style encoding used there.
GysinProblem preset_hypersurface_complement(int n, int d, Ring ring);

/// Topological Euler characteristic of a smooth degree-d hypersurface in
/// projective (n+1)-space.
Int hypersurface_euler_characteristic(int n, int d);

/// Rank of the primitive part of the middle homology of the hypersurface.
std::size_t primitive_middle_rank(int n, int d);

/// Unit cotangent bundle of the projective plane, via the incidence variety
/// in the product of two projective planes (the full flag manifold F3).
GysinProblem preset_flag_f3(Ring ring = Ring::Q);

/// Classical circle-bundle problem: trivial grading, connecting map the
/// ordinary cap product with the Euler class. The optional Morse boundary
/// turns this into a mapping-cone computation.
GysinProblem preset_classical_circle_bundle(const std::string& label, const GradedBasis& basis,
                                            const GradedMap& cap_map, int dim_sigma,
                                            std::optional<GradedMap> boundary = std::nullopt);

/// Circle bundle over the projective line with Euler number -k (lens-space
/// boundary; k = 0 is the trivial bundle, k = 1 the Hopf fibration).
GysinProblem preset_classical_lens(int k);

/// Connecting map of the degree-(n+1) hypersurface preset reassembled from
/// the quantum-ring relations plus the sphere-count correction, instead of
/// the direct lower-triangular coefficients. Must agree with the preset's
/// delta entry for entry.
GradedMap hypersurface_top_delta_from_relations(int n);

/// Named presets exposed to the CLI.
struct PresetInfo {
    std::string name;
    std::string parameters;
};

std::vector<PresetInfo> list_presets();

/// Builds a preset by CLI name with integer/string parameters. Throws
/// DomainError for unknown names or out-of-range parameters.
GysinProblem make_preset(const std::string& name, const std::map<std::string, std::string>& params);

/// The canonical finite family used by the property suites: spheres up to
/// k = 6, all hypersurface families at small n, and the flag preset.
std::vector<GysinProblem> all_test_presets();

} // namespace rfh
