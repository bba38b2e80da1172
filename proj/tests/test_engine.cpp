#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rfh/engine.hpp"
#include "rfh/presets.hpp"
#include "rfh/verify.hpp"

using namespace rfh;

namespace {

const AbelianGroupDescription kZero{};
const AbelianGroupDescription kZ{1, {}};

GysinProblem morse_sphere_with_cancelling_pair(int euler_k)
{
    // Height-like function on the two-sphere with two maxima, one saddle and
    // one minimum; the maxima both hit the saddle, and the cap with the
    // Euler class lands on the minimum through one of them.
    GradedBasis basis({{"min", 0}, {"s", 1}, {"m1", 2}, {"m2", 2}});
    NovikovGrading g = NovikovGrading::trivial();
    GradedMap boundary(basis, basis, -1, g, Ring::Z, {{"m1", "s", 1}, {"m2", "s", 1}});
    GradedMap cap(basis, basis, -2, g, Ring::Z, {{"m1", "min", -euler_k}});
    GysinProblem p;
    p.label = "morse-sphere(k=" + std::to_string(euler_k) + ")";
    p.ring = Ring::Z;
    p.grading = g;
    p.dim_sigma = 2;
    p.basis = basis;
    p.delta = cap;
    p.boundary = boundary;
    return p;
}

} // namespace

TEST_CASE("two-sphere table over the window from the examples")
{
    GysinProblem p = preset_unit_cotangent_sphere(2);
    RFHResult r = rabinowitz_homology(p, DegreeWindow{-4, 4});
    for (int j = -4; j <= 4; ++j) {
        INFO("degree " << j);
        if ((j % 2 + 2) % 2 == 0)
            CHECK(r.group(j) == AbelianGroupDescription{1, {Int(2)}});
        else
            CHECK(r.group(j) == kZ);
    }
    CHECK(r.periodic);
    CHECK(r.period == 2);
    CHECK(!r.note.empty());
}

TEST_CASE("degree-one complements vanish")
{
    for (int n = 0; n <= 2; ++n) {
        INFO("n = " << n);
        GysinProblem p = preset_hypersurface_complement(n, 1, Ring::Z);
        CHECK(rabinowitz_homology(p).all_trivial());
    }
}

TEST_CASE("empty basis gives the trivial answer")
{
    GysinProblem p;
    p.label = "empty";
    p.ring = Ring::Z;
    p.grading = NovikovGrading::periodic(2);
    p.dim_sigma = 0;
    p.basis = GradedBasis(std::vector<Generator>{});
    p.delta = GradedMap::zero(p.basis, p.basis, -2, p.grading, p.ring);
    RFHResult r = rabinowitz_homology(p, DegreeWindow{-3, 3});
    CHECK(r.all_trivial());
    CHECK(vanishing_report(p).sh_vanishes);
}

TEST_CASE("default windows")
{
    GysinProblem p = preset_flag_f3(Ring::Q);
    DegreeWindow w = default_window(p);
    CHECK(w == DegreeWindow{-7, 7});
    GysinProblem lens = preset_classical_lens(2);
    DegreeWindow wl = default_window(lens);
    CHECK(wl.min <= -1);
    CHECK(wl.max >= 2);
    CHECK(parse_window("-3..4") == DegreeWindow{-3, 4});
    CHECK_THROWS_AS(parse_window("3"), Error);
    CHECK_THROWS_AS(parse_window("4..3"), Error);
    CHECK_THROWS_AS(parse_window("a..b"), Error);
}

TEST_CASE("rabinowitz homology rejects a live boundary")
{
    GysinProblem p = morse_sphere_with_cancelling_pair(2);
    CHECK_THROWS_AS(rabinowitz_homology(p), Error);
}

TEST_CASE("mapping cone")
{
    SUBCASE("zero boundary agrees with the exact-sequence route")
    {
        for (const GysinProblem& p :
             {preset_unit_cotangent_sphere(2), preset_flag_f3(Ring::Z), preset_classical_lens(3)}) {
            INFO(p.label);
            DegreeWindow w = default_window(p);
            RFHResult les = rabinowitz_homology(p, w);
            RFHResult cone = mapping_cone_homology(p, w);
            for (int j = w.min; j <= w.max; ++j) CHECK(les.group(j) == cone.group(j));
        }
    }
    SUBCASE("non-perfect Morse data reproduces the lens spaces")
    {
        for (int k : {1, 2, 3, 5}) {
            INFO("k = " << k);
            GysinProblem p = morse_sphere_with_cancelling_pair(k);
            CHECK(validate_problem(p).empty());
            RFHResult r = mapping_cone_homology(p, DegreeWindow{-1, 2});
            std::vector<AbelianGroupDescription> want = expected_lens_space(k);
            for (int j = -1; j <= 2; ++j) {
                INFO("degree " << j);
                CHECK(r.group(j) == want[j + 1]);
            }
        }
    }
    SUBCASE("boundary must square to zero")
    {
        GradedBasis basis({{"x", 2}, {"y", 1}, {"z", 0}});
        NovikovGrading g = NovikovGrading::trivial();
        GysinProblem p;
        p.ring = Ring::Z;
        p.grading = g;
        p.dim_sigma = 2;
        p.basis = basis;
        p.delta = GradedMap::zero(basis, basis, -2, g, Ring::Z);
        p.boundary = GradedMap(basis, basis, -1, g, Ring::Z, {{"x", "y", 1}, {"y", "z", 1}});
        try {
            mapping_cone_homology(p);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotAChainComplex);
        }
    }
    SUBCASE("connecting map must commute with the boundary")
    {
        GradedBasis basis({{"x", 2}, {"y", 1}, {"u", 0}, {"v", -1}});
        NovikovGrading g = NovikovGrading::trivial();
        GysinProblem p;
        p.ring = Ring::Z;
        p.grading = g;
        p.dim_sigma = 2;
        p.basis = basis;
        p.delta = GradedMap(basis, basis, -2, g, Ring::Z, {{"x", "u", 1}});
        p.boundary = GradedMap(basis, basis, -1, g, Ring::Z, {{"x", "y", 1}, {"u", "v", 1}});
        try {
            mapping_cone_homology(p);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotAChainMap);
        }
    }
}

TEST_CASE("classical circle bundles")
{
    for (int k : {0, 1, 2, 3, 5}) {
        INFO("k = " << k);
        GysinProblem p = preset_classical_lens(k);
        RFHResult r = rabinowitz_homology(p, DegreeWindow{-1, 2});
        std::vector<AbelianGroupDescription> want = expected_lens_space(k);
        for (int j = -1; j <= 2; ++j) CHECK(r.group(j) == want[j + 1]);
    }
}

TEST_CASE("vanishing reports")
{
    SUBCASE("top-degree complement vanishes")
    {
        VanishingReport rep = vanishing_report(preset_hypersurface_complement(3, 4, Ring::Q));
        CHECK(rep.delta_iso);
        CHECK(rep.sh_vanishes);
        CHECK(!rep.witness);
    }
    SUBCASE("flag vanishes rationally")
    {
        CHECK(vanishing_report(preset_flag_f3(Ring::Q)).sh_vanishes);
    }
    SUBCASE("spheres do not vanish and provide a witness")
    {
        VanishingReport rep = vanishing_report(preset_unit_cotangent_sphere(3));
        CHECK(!rep.delta_iso);
        CHECK(!rep.sh_vanishes);
        REQUIRE(rep.witness);
        CHECK(!rep.witness->group.trivial());
    }
    SUBCASE("flag over the integers does not vanish")
    {
        VanishingReport rep = vanishing_report(preset_flag_f3(Ring::Z));
        CHECK(!rep.sh_vanishes);
    }
}

TEST_CASE("divisibility reports")
{
    CHECK(divisibility_report(preset_hypersurface_complement(3, 2, Ring::Z)).divisor == 2);
    CHECK(divisibility_report(preset_hypersurface_complement(2, 1, Ring::Z)).divisor == 1);

    GysinProblem zero;
    zero.ring = Ring::Z;
    zero.grading = NovikovGrading::periodic(2);
    zero.basis = GradedBasis({{"x", 0}});
    zero.dim_sigma = 0;
    zero.delta = GradedMap::zero(zero.basis, zero.basis, -2, zero.grading, zero.ring);
    CHECK(divisibility_report(zero).divisor == 0);

    CHECK_THROWS_AS(divisibility_report(preset_flag_f3(Ring::Q)), Error);
    CHECK(!divisibility_report(preset_hypersurface_complement(3, 2, Ring::Z))
               .primitivity_contradiction);
}

TEST_CASE("invertibility reports")
{
    InvertibilityReport a = invertibility_report(preset_hypersurface_complement(2, 1, Ring::Z));
    CHECK(a.delta_c_zero);
    CHECK(a.delta_iso);
    CHECK(a.conclusion == InvertibilityConclusion::QuantumInvertible);

    InvertibilityReport b = invertibility_report(preset_hypersurface_complement(3, 4, Ring::Q));
    CHECK(!b.delta_c_zero);
    CHECK(b.conclusion == InvertibilityConclusion::NoConclusion);

    InvertibilityReport c = invertibility_report(preset_hypersurface_complement(3, 2, Ring::Z));
    CHECK(c.delta_c_zero);
    CHECK(!c.delta_iso);
    CHECK(c.conclusion == InvertibilityConclusion::NoConclusion);
}

TEST_CASE("euler characteristic check")
{
    SUBCASE("two-sphere over the rationals")
    {
        GysinProblem p = with_ring(preset_unit_cotangent_sphere(2), Ring::Q);
        RFHResult r = rabinowitz_homology(p, DegreeWindow{0, 1});
        CHECK(r.group(0).free_rank == 1);
        CHECK(r.group(1).free_rank == 1);
        CHECK(euler_characteristic_check(r));
    }
    SUBCASE("all-zero result")
    {
        GysinProblem p = preset_hypersurface_complement(2, 1, Ring::Q);
        RFHResult r = rabinowitz_homology(p, DegreeWindow{0, 5});
        CHECK(euler_characteristic_check(r));
    }
    SUBCASE("odd quadric complement over the rationals")
    {
        GysinProblem p = with_ring(preset_hypersurface_complement(3, 2, Ring::Z), Ring::Q);
        RFHResult r = rabinowitz_homology(p, DegreeWindow{0, 5});
        long long total = 0;
        for (int j = 0; j <= 5; ++j) total += static_cast<long long>(r.group(j).free_rank);
        CHECK(total == 2);  // one class at the middle degree, one just above
        CHECK(euler_characteristic_check(r));
    }
    SUBCASE("window too small")
    {
        GysinProblem p = with_ring(preset_flag_f3(Ring::Q), Ring::Q);
        RFHResult r = rabinowitz_homology(p, DegreeWindow{0, 1});
        CHECK_THROWS_AS(euler_characteristic_check(r), Error);
    }
    SUBCASE("torsion is rejected")
    {
        RFHResult r = rabinowitz_homology(preset_unit_cotangent_sphere(2), DegreeWindow{0, 1});
        CHECK_THROWS_AS(euler_characteristic_check(r), Error);
    }
}

TEST_CASE("generic hypersurface rank report")
{
    GenericHypersurfaceReport rep = generic_hypersurface_report(3, 3);
    CHECK(rep.deg_t == 4);
    CHECK(rep.primitive_rank == 10);
    CHECK(rep.euler_characteristic == -6);
    REQUIRE(rep.rows.size() == 4);
    CHECK(rep.rows[0].engine_dim == 11);
    CHECK(rep.rows[0].closed_form_dim == 10);
    CHECK(!rep.rows[0].match);
    CHECK(rep.rows[1].engine_dim == 11);
    CHECK(rep.rows[2].engine_dim == 0);
    CHECK(rep.rows[2].match);
    CHECK(rep.rows[3].engine_dim == 0);
    CHECK(rep.kernel_classes == std::vector<int>{0, 3});
    CHECK(rep.kernel_at_expected_classes);
    CHECK(rep.alternating_sum_zero);
    CHECK(rep.rank_bookkeeping_ok);
    CHECK(rep.internally_consistent);
    CHECK(!rep.matches_closed_forms);

    CHECK_THROWS_AS(generic_hypersurface_report(3, 4), Error);
    CHECK_THROWS_AS(generic_hypersurface_report(4, 2), Error);
}

TEST_CASE("result periodicity on a mixed window")
{
    GysinProblem p = preset_hypersurface_complement(3, 2, Ring::Z);
    RFHResult r = rabinowitz_homology(p, DegreeWindow{-9, 9});
    for (int j = -9; j + 6 <= 9; ++j) CHECK(r.group(j) == r.group(j + 6));
}
