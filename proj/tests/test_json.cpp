#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "rfh/json_io.hpp"
#include "rfh/presets.hpp"

using namespace rfh;
using nlohmann::json;

namespace {

json minimal_problem()
{
    return json::parse(R"({
      "schema": 1,
      "label": "sample",
      "ring": "Z",
      "grading": {"deg_T": 2},
      "dim_sigma": 2,
      "generators": [{"label": "p^0", "degree": 0}, {"label": "p^1", "degree": 2}],
      "delta": [
        {"from": "p^1", "to": "p^0", "coeff": -2},
        {"from": "p^0", "to": "p^1", "coeff": -2}
      ],
      "delta_c": {"coeff": 2}
    })");
}

} // namespace

TEST_CASE("scalar formatting")
{
    CHECK(scalar_to_string(Rat(-7)) == "-7");
    CHECK(scalar_to_string(Rat(1) / 2) == "1/2");
    CHECK(scalar_from_string("-3") == Rat(-3));
    CHECK(scalar_from_string("9/6") == Rat(3) / 2);
    CHECK_THROWS_AS(scalar_from_string("1.5"), Error);
    CHECK_THROWS_AS(scalar_from_string("x"), Error);
    CHECK_THROWS_AS(scalar_from_string("1/0"), Error);
    CHECK_THROWS_AS(scalar_from_string(""), Error);
}

TEST_CASE("problem files round-trip through the engine")
{
    for (const GysinProblem& p : all_test_presets()) {
        INFO(p.label);
        json j = problem_to_json(p);
        GysinProblem q = problem_from_json(j);
        CHECK(q.label == p.label);
        CHECK(q.ring == p.ring);
        CHECK(q.grading == p.grading);
        CHECK(q.dim_sigma == p.dim_sigma);
        CHECK(q.basis == p.basis);
        CHECK(q.delta == p.delta);
        CHECK(q.delta_c_coeff == p.delta_c_coeff);
        CHECK(q.metadata == p.metadata);

        DegreeWindow w{-3, 3};
        RFHResult a = rabinowitz_homology(p, w);
        RFHResult b = rabinowitz_homology(q, w);
        for (int deg = w.min; deg <= w.max; ++deg) CHECK(a.group(deg) == b.group(deg));
    }
}

TEST_CASE("delta_c is folded on load and split on save")
{
    GysinProblem p = problem_from_json(minimal_problem());
    CHECK(p.delta_c_coeff == 2);
    CHECK(p.delta.entries().size() == 4);  // two cap entries plus the folded identity
    json back = problem_to_json(p);
    CHECK(back.at("delta").size() == 2);
    CHECK(back.at("delta_c").at("coeff") == 2);
    ExactMatrix slice = degree_slice(p.delta, 0);
    CHECK(slice == ExactMatrix::from_rows({{2, -2}, {-2, 2}}));
}

TEST_CASE("t_power fields are validated against the forced exponent")
{
    json j = minimal_problem();
    j["delta"][1]["t_power"] = -2;
    CHECK_NOTHROW(problem_from_json(j));
    j["delta"][1]["t_power"] = -1;
    CHECK_THROWS_AS(problem_from_json(j), Error);
}

TEST_CASE("parse errors carry located messages")
{
    json j = minimal_problem();
    j.erase("ring");
    CHECK_THROWS_WITH_AS(problem_from_json(j), "problem: missing field \"ring\"", Error);

    j = minimal_problem();
    j["ring"] = "R";
    CHECK_THROWS_AS(problem_from_json(j), Error);

    j = minimal_problem();
    j["grading"] = json{{"deg_T", 3}};
    CHECK_THROWS_AS(problem_from_json(j), Error);

    j = minimal_problem();
    j["delta"][0]["coeff"] = 1.5;
    CHECK_THROWS_AS(problem_from_json(j), Error);

    j = minimal_problem();
    j["generators"][0].erase("label");
    CHECK_THROWS_AS(problem_from_json(j), Error);

    j = minimal_problem();
    j["schema"] = 2;
    CHECK_THROWS_AS(problem_from_json(j), Error);

    j = minimal_problem();
    j["delta_c"]["coeff"] = "1/2";  // non-integer over Z shows up in validation
    GysinProblem p = problem_from_json(j);
    CHECK(!validate_problem(p).empty());
}

TEST_CASE("empty problems parse and compute")
{
    json j = json::parse(R"({
      "schema": 1, "ring": "Z", "grading": {"trivial": true},
      "dim_sigma": 0, "generators": [], "delta": []
    })");
    GysinProblem p = problem_from_json(j);
    CHECK(rabinowitz_homology(p, DegreeWindow{-2, 2}).all_trivial());
}

TEST_CASE("results serialize faithfully")
{
    GysinProblem p = preset_unit_cotangent_sphere(2);
    RFHResult r = rabinowitz_homology(p, DegreeWindow{-2, 2});
    json j = result_to_json(p, r, "les");
    CHECK(j.at("schema") == 1);
    CHECK(j.at("deg_T") == 2);
    auto groups = result_groups_from_json(j);
    REQUIRE(groups.size() == r.groups.size());
    for (const auto& [deg, g] : r.groups) CHECK(groups.at(deg) == g);
}

TEST_CASE("serialization is deterministic")
{
    GysinProblem p = preset_flag_f3(Ring::Q);
    std::string a = problem_to_json(p).dump(2);
    std::string b = problem_to_json(preset_flag_f3(Ring::Q)).dump(2);
    CHECK(a == b);
    RFHResult r1 = rabinowitz_homology(p);
    RFHResult r2 = rabinowitz_homology(p);
    CHECK(result_to_json(p, r1, "les").dump() == result_to_json(p, r2, "les").dump());
}

TEST_CASE("boundaries survive the round trip")
{
    GradedBasis basis({{"min", 0}, {"s", 1}, {"m1", 2}, {"m2", 2}});
    NovikovGrading g = NovikovGrading::trivial();
    GysinProblem p;
    p.label = "morse";
    p.ring = Ring::Z;
    p.grading = g;
    p.dim_sigma = 2;
    p.basis = basis;
    p.delta = GradedMap(basis, basis, -2, g, Ring::Z, {{"m1", "min", -2}});
    p.boundary = GradedMap(basis, basis, -1, g, Ring::Z, {{"m1", "s", 1}, {"m2", "s", 1}});
    GysinProblem q = problem_from_json(problem_to_json(p));
    REQUIRE(q.boundary);
    CHECK(*q.boundary == *p.boundary);
    DegreeWindow w{-1, 2};
    RFHResult a = mapping_cone_homology(p, w);
    RFHResult b = mapping_cone_homology(q, w);
    for (int j = w.min; j <= w.max; ++j) CHECK(a.group(j) == b.group(j));
}

TEST_CASE("big coefficients fall back to strings")
{
    GysinProblem p;
    p.ring = Ring::Z;
    p.grading = NovikovGrading::periodic(2);
    p.dim_sigma = 0;
    p.basis = GradedBasis({{"x", 0}});
    Rat huge(Int("123456789012345678901234567890"));
    p.delta = GradedMap(p.basis, p.basis, -2, p.grading, p.ring, {{"x", "x", huge}});
    json j = problem_to_json(p);
    CHECK(j.at("delta")[0].at("coeff").is_string());
    GysinProblem q = problem_from_json(j);
    CHECK(q.delta == p.delta);
}
