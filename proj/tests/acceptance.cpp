// Acceptance suite: one check per shipped guarantee, one pass/fail line
// each, exit nonzero on any failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "rfh/engine.hpp"
#include "rfh/json_io.hpp"
#include "rfh/presets.hpp"
#include "rfh/verify.hpp"

using namespace rfh;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

const AbelianGroupDescription kZero{};
const AbelianGroupDescription kZ{1, {}};

bool table_matches(const GysinProblem& p, const DegreeWindow& w,
                   const std::function<AbelianGroupDescription(int)>& expected, std::string& why)
{
    RFHResult r = rabinowitz_homology(p, w);
    for (int j = w.min; j <= w.max; ++j) {
        if (!(r.group(j) == expected(j))) {
            std::ostringstream os;
            os << p.label << " degree " << j << ": got " << r.group(j).to_string() << ", expected "
               << expected(j).to_string();
            why = os.str();
            return false;
        }
    }
    return true;
}

bool criterion_sphere_k2(std::string& why)
{
    return table_matches(preset_unit_cotangent_sphere(2), {-6, 6},
                         [](int j) {
                             return ((j % 2 + 2) % 2 == 0) ? AbelianGroupDescription{1, {Int(2)}}
                                                           : kZ;
                         },
                         why);
}

bool criterion_even_spheres(std::string& why)
{
    for (int n : {3, 5}) {
        GysinProblem complement = preset_hypersurface_complement(n, 2, Ring::Z);
        GysinProblem cotangent = preset_unit_cotangent_sphere(n + 1);
        DegreeWindow two_periods{-4 * n, 4 * n};
        if (!table_matches(complement, two_periods,
                           [n](int j) { return expected_quadric_complement(n, j); }, why))
            return false;
        if (!table_matches(cotangent, two_periods,
                           [n](int j) { return expected_sphere_cotangent(n, j); }, why))
            return false;
    }
    return true;
}

bool criterion_odd_spheres(std::string& why)
{
    for (int n : {2, 4}) {
        GysinProblem complement = preset_hypersurface_complement(n, 2, Ring::Z);
        GysinProblem cotangent = preset_unit_cotangent_sphere(n + 1);
        DegreeWindow two_periods{-4 * n, 4 * n};
        if (!table_matches(cotangent, two_periods,
                           [n](int j) { return expected_sphere_cotangent(n, j); }, why))
            return false;
        if (!table_matches(complement, two_periods,
                           [n](int j) { return expected_quadric_complement(n, j); }, why))
            return false;
    }
    return true;
}

bool criterion_degree_one(std::string& why)
{
    for (int n = 0; n <= 3; ++n) {
        GysinProblem p = preset_hypersurface_complement(n, 1, Ring::Z);
        bool sphere_route = p.delta_c_coeff != 0;
        if ((n == 0) != sphere_route) {
            why = "sphere-count route expected exactly for the point case";
            return false;
        }
        VanishingReport rep = vanishing_report(p);
        if (!rep.sh_vanishes || !rep.delta_iso) {
            why = p.label + " does not vanish";
            return false;
        }
    }
    return true;
}

bool criterion_top_degree(std::string& why)
{
    for (int n = 1; n <= 4; ++n) {
        GysinProblem p = preset_hypersurface_complement(n, n + 1, Ring::Q);
        VanishingReport rep = vanishing_report(p);
        if (!rep.sh_vanishes) {
            why = p.label + " does not vanish over Q";
            return false;
        }
        GradedMap assembled = hypersurface_top_delta_from_relations(n);
        if (!(assembled == p.delta)) {
            why = p.label + ": relation-assembled map differs from the direct encoding";
            return false;
        }
        for (int d = 0; d <= 1; ++d)
            if (!(degree_slice(assembled, d) == degree_slice(p.delta, d))) {
                why = p.label + ": slices differ at degree " + std::to_string(d);
                return false;
            }
    }
    return true;
}

bool criterion_flag(std::string& why)
{
    GysinProblem p = preset_flag_f3(Ring::Q);
    if (!(degree_slice(p.delta, 6) ==
          ExactMatrix::from_rows({{-1, -1, 0}, {0, -1, -1}, {-1, 0, -1}}, Ring::Q))) {
        why = "slice at degree 6 differs from the pinned matrix";
        return false;
    }
    if (!(degree_slice(p.delta, 4) ==
          ExactMatrix::from_rows({{-1, -2, -1}, {-1, -1, -2}, {-2, -1, -1}}, Ring::Q))) {
        why = "slice at degree 4 differs from the pinned matrix";
        return false;
    }
    RFHResult r = rabinowitz_homology(p, DegreeWindow{0, 3});
    if (!r.all_trivial()) {
        why = "rational homology of the flag problem is nonzero";
        return false;
    }
    GysinProblem pz = preset_flag_f3(Ring::Z);
    if (smith_normal_form(degree_slice(pz.delta, 6)).diagonal != std::vector<Int>{1, 1, 2} ||
        smith_normal_form(degree_slice(pz.delta, 4)).diagonal != std::vector<Int>{1, 1, 4}) {
        why = "integer slice normal forms are not diag(1,1,2) and diag(1,1,4)";
        return false;
    }
    return true;
}

bool criterion_classical(std::string& why)
{
    for (int k : {1, 2, 3, 5}) {
        GysinProblem p = preset_classical_lens(k);
        RFHResult r = rabinowitz_homology(p, DegreeWindow{-1, 2});
        std::vector<AbelianGroupDescription> want = expected_lens_space(k);
        for (int j = -1; j <= 2; ++j)
            if (!(r.group(j) == want[j + 1])) {
                std::ostringstream os;
                os << "lens k=" << k << " degree " << j << ": got " << r.group(j).to_string();
                why = os.str();
                return false;
            }
    }
    return true;
}

bool checks_pass(const CheckList& checks, std::string& why)
{
    for (const CheckResult& c : checks)
        if (!c.pass) {
            why = c.name + ": " + c.detail;
            return false;
        }
    return true;
}

bool criterion_property_suites(std::string& why)
{
    return checks_pass(verify_snf(), why) && checks_pass(verify_properties(), why);
}

bool criterion_cross_encoding(std::string& why)
{
    GysinProblem beauville = preset_hypersurface_complement(2, 2, Ring::Z);
    GysinProblem tensor;
    tensor.label = "tensor-square";
    tensor.ring = Ring::Z;
    tensor.grading = NovikovGrading::periodic(4);
    tensor.dim_sigma = 4;
    tensor.basis = GradedBasis({{"one", 4}, {"u", 2}, {"v", 2}, {"w", 0}});
    tensor.delta = GradedMap(tensor.basis, tensor.basis, -2, tensor.grading, tensor.ring,
                             {{"one", "u", -2},
                              {"one", "v", -2},
                              {"u", "one", -2},
                              {"u", "w", -2},
                              {"v", "one", -2},
                              {"v", "w", -2},
                              {"w", "u", -2},
                              {"w", "v", -2}});
    DegreeWindow w{-4, 4};
    RFHResult a = rabinowitz_homology(beauville, w);
    RFHResult b = rabinowitz_homology(tensor, w);
    for (int j = w.min; j <= w.max; ++j)
        if (!(a.group(j) == b.group(j))) {
            std::ostringstream os;
            os << "encodings disagree at degree " << j << ": " << a.group(j).to_string() << " vs "
               << b.group(j).to_string();
            why = os.str();
            return false;
        }
    return true;
}

bool criterion_generic_protocol(std::string& why)
{
    const std::pair<int, int> cases[] = {{3, 3}, {4, 3}, {4, 4}, {5, 3}};
    for (auto [n, d] : cases) {
        GenericHypersurfaceReport rep = generic_hypersurface_report(n, d);
        std::string id = "(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
        if (rep.rows.empty()) {
            why = id + ": no report generated";
            return false;
        }
        if (!rep.internally_consistent) {
            why = id + ": report is not internally consistent";
            return false;
        }
        if (!rep.kernel_at_expected_classes ||
            std::find(rep.kernel_classes.begin(), rep.kernel_classes.end(), 0) ==
                rep.kernel_classes.end()) {
            why = id + ": kernel is not located at the residue class forced by the wrap relation";
            return false;
        }
        if (rep.matches_closed_forms) {
            why = id + ": expected the closed-form comparison to be flagged";
            return false;
        }
        nlohmann::json j = report_to_json(rep);
        if (!j.contains("ranks") || !j.contains("internally_consistent")) {
            why = id + ": machine-readable report is incomplete";
            return false;
        }
    }
    return true;
}

} // namespace

int main()
{
    std::vector<Criterion> criteria = {
        {"1  two-sphere table over [-6,6]", criterion_sphere_k2},
        {"2  even spheres (n = 3, 5): complement and cotangent tables", criterion_even_spheres},
        {"3  odd spheres (n = 2, 4): cotangent and complement tables", criterion_odd_spheres},
        {"4  degree-one complements vanish (n = 0..3)", criterion_degree_one},
        {"5  top-degree complements vanish over Q; encodings agree (n = 1..4)",
         criterion_top_degree},
        {"6  flag slices, rational vanishing, integer normal forms", criterion_flag},
        {"7  classical mode reproduces lens-space homology (k = 1,2,3,5)", criterion_classical},
        {"8  property suites (periodicity, cone route, vanishing equivalence, normal-form "
         "oracle, alternating sum, basis change)",
         criterion_property_suites},
        {"9  quadric-surface cross-encoding consistency", criterion_cross_encoding},
        {"10 generic-degree rank-comparison protocol (internally consistent, flagged)",
         criterion_generic_protocol},
    };

    auto start = std::chrono::steady_clock::now();
    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string why;
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        if (ok) {
            std::cout << "PASS  criterion " << c.name << "\n";
        } else {
            ++failures;
            std::cout << "FAIL  criterion " << c.name << "  [" << why << "]\n";
        }
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::cout << (failures == 0 ? "ACCEPTED" : "REJECTED") << " (" << criteria.size() - failures
              << "/" << criteria.size() << " criteria, " << elapsed << " ms)" << std::endl;
    return failures == 0 ? 0 : 1;
}
