#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rfh/problem.hpp"
#include "rfh/smith.hpp"

namespace rfh {

struct DegreeWindow {
    int min = 0;
    int max = 0;  // inclusive

    bool operator==(const DegreeWindow&) const = default;
};

/// One full period around zero for periodic problems; for the trivial
/// grading, wide enough to reach every degree the generators can touch.
DegreeWindow default_window(const GysinProblem& p);

DegreeWindow parse_window(const std::string& text);  // "a..b"

/// Homology groups per degree over a window. For periodic problems the
/// groups repeat with period deg_T.
struct RFHResult {
    DegreeWindow window;
    std::map<int, AbelianGroupDescription> groups;
    bool periodic = false;
    int period = 0;
    std::string note;

    const AbelianGroupDescription& group(int j) const;
    bool all_trivial() const;
};

/// Long-exact-sequence route: the group in degree j is the cokernel of the
/// connecting-map slice entering that degree plus the free kernel of the
/// slice leaving it. The extension splits because kernels of integer
/// matrices between free modules are free; the note field records this.
RFHResult rabinowitz_homology(const GysinProblem& p,
                              std::optional<DegreeWindow> window = std::nullopt);

/// Mapping-cone route: homology of the total complex built from the Morse
/// boundary and the connecting map. With a zero boundary this agrees with
/// rabinowitz_homology degree by degree.
RFHResult mapping_cone_homology(const GysinProblem& p,
                                std::optional<DegreeWindow> window = std::nullopt);

struct VanishingWitness {
    int degree = 0;
    AbelianGroupDescription group;
    std::string detail;
};

/// delta_iso and sh_vanishes are computed independently and must agree;
/// disagreement would be an internal invariant breach.
struct VanishingReport {
    bool delta_iso = false;
    bool sh_vanishes = false;
    std::optional<VanishingWitness> witness;
};

VanishingReport vanishing_report(const GysinProblem& p);

struct DivisibilityReport {
    Int divisor;  // gcd of all stored coefficients; 0 for the zero map
    bool primitivity_contradiction = false;
};

DivisibilityReport divisibility_report(const GysinProblem& p);

enum class InvertibilityConclusion { QuantumInvertible, NoConclusion };

struct InvertibilityReport {
    bool delta_c_zero = false;
    bool delta_iso = false;
    InvertibilityConclusion conclusion = InvertibilityConclusion::NoConclusion;
};

InvertibilityReport invertibility_report(const GysinProblem& p);

/// Alternating sum of rational dimensions over one period must vanish by
/// exactness. Requires a periodic torsion-free result whose window covers a
/// full period.
bool euler_characteristic_check(const RFHResult& result);

/// Side-by-side comparison of engine output against the closed-form rank
/// expressions for hypersurface complements of degree 3..n. The closed
/// forms assume the connecting map is injective away from the middle
/// degree; the relations force an extra rank-one kernel where the quantum
/// power wraps, so the two columns are expected to differ there. Engine
/// output is authoritative.
struct RankComparisonRow {
    int degree = 0;
    long long engine_dim = 0;
    long long closed_form_dim = 0;
    bool match = false;
};

struct GenericHypersurfaceReport {
    int n = 0;
    int d = 0;
    int deg_t = 0;
    std::size_t primitive_rank = 0;
    Int euler_characteristic;
    std::vector<RankComparisonRow> rows;        // one period of degrees, starting at 0
    std::vector<int> kernel_classes;            // slice source classes mod deg_T with kernel
    bool kernel_at_expected_classes = false;    // wrap class 0 and middle class n only
    bool alternating_sum_zero = false;
    bool rank_bookkeeping_ok = false;
    bool internally_consistent = false;
    bool matches_closed_forms = false;
};

GenericHypersurfaceReport generic_hypersurface_report(int n, int d);

} // namespace rfh
