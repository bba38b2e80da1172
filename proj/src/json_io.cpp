#include "rfh/json_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace rfh {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what)
{
    throw Error(ErrorKind::ParseError, where + ": " + what);
}

Rat scalar_from_json(const json& j, const std::string& where)
{
    if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<std::int64_t>()));
    if (j.is_string()) return scalar_from_string(j.get<std::string>());
    parse_fail(where, "expected a decimal integer or a \"p/q\" string");
}

json scalar_to_json(const Rat& x)
{
    if (is_integral(x)) {
        Int n = numerator(x);
        if (n >= std::numeric_limits<std::int64_t>::min() &&
            n <= std::numeric_limits<std::int64_t>::max())
            return n.convert_to<std::int64_t>();
    }
    return scalar_to_string(x);
}

int int_field(const json& j, const std::string& key, const std::string& where)
{
    if (!j.contains(key)) parse_fail(where, "missing field \"" + key + "\"");
    if (!j.at(key).is_number_integer()) parse_fail(where + "." + key, "expected an integer");
    return j.at(key).get<int>();
}

std::string string_field(const json& j, const std::string& key, const std::string& where)
{
    if (!j.contains(key)) parse_fail(where, "missing field \"" + key + "\"");
    if (!j.at(key).is_string()) parse_fail(where + "." + key, "expected a string");
    return j.at(key).get<std::string>();
}

std::vector<MapEntry> entries_from_json(const json& arr, const std::string& where,
                                        const GradedBasis& basis, int shift,
                                        const NovikovGrading& grading)
{
    if (!arr.is_array()) parse_fail(where, "expected an array of map entries");
    std::vector<MapEntry> out;
    std::size_t idx = 0;
    for (const json& e : arr) {
        std::string at = where + "[" + std::to_string(idx++) + "]";
        MapEntry entry;
        entry.from = string_field(e, "from", at);
        entry.to = string_field(e, "to", at);
        if (!e.contains("coeff")) parse_fail(at, "missing field \"coeff\"");
        entry.coeff = scalar_from_json(e.at("coeff"), at + ".coeff");
        if (e.contains("t_power")) {
            if (!e.at("t_power").is_number_integer()) parse_fail(at + ".t_power", "expected an integer");
            int given = e.at("t_power").get<int>();
            if (!basis.contains(entry.from) || !basis.contains(entry.to))
                parse_fail(at, "t_power given for an unknown generator label");
            int s = basis.degree_of(entry.from), t = basis.degree_of(entry.to);
            int num = s + shift - t;
            int forced = 0;
            if (grading.is_periodic()) {
                if (num % grading.deg_t() != 0)
                    parse_fail(at, "entry violates the degree congruence; no T-power fits");
                forced = num / grading.deg_t();
            } else if (num != 0) {
                parse_fail(at, "entry violates the degree constraint");
            }
            if (given != forced)
                parse_fail(at + ".t_power", "must equal the forced exponent " + std::to_string(forced));
        }
        out.push_back(std::move(entry));
    }
    return out;
}

json entries_to_json(const GradedMap& m)
{
    json arr = json::array();
    for (const MapEntry& e : m.entries()) {
        json je;
        je["from"] = e.from;
        je["to"] = e.to;
        je["coeff"] = scalar_to_json(e.coeff);
        je["t_power"] = m.forced_exponent(e.from, e.to);
        arr.push_back(std::move(je));
    }
    return arr;
}

} // namespace

GysinProblem problem_from_json(const json& j)
{
    if (!j.is_object()) parse_fail("problem", "expected a JSON object");
    if (j.contains("schema") && j.at("schema") != 1)
        parse_fail("problem.schema", "unsupported schema version");

    GysinProblem p;
    p.label = j.value("label", std::string("problem"));
    p.ring = ring_from_string(string_field(j, "ring", "problem"));

    if (!j.contains("grading")) parse_fail("problem", "missing field \"grading\"");
    const json& jg = j.at("grading");
    if (jg.is_object() && jg.contains("deg_T"))
        p.grading = NovikovGrading::periodic(int_field(jg, "deg_T", "problem.grading"));
    else if (jg.is_object() && jg.value("trivial", false))
        p.grading = NovikovGrading::trivial();
    else
        parse_fail("problem.grading", "expected {\"trivial\": true} or {\"deg_T\": <even int>}");

    p.dim_sigma = int_field(j, "dim_sigma", "problem");

    if (!j.contains("generators") || !j.at("generators").is_array())
        parse_fail("problem", "missing \"generators\" array");
    std::vector<Generator> gens;
    std::size_t idx = 0;
    for (const json& g : j.at("generators")) {
        std::string at = "problem.generators[" + std::to_string(idx++) + "]";
        gens.push_back({string_field(g, "label", at), int_field(g, "degree", at)});
    }
    try {
        p.basis = GradedBasis(std::move(gens));
    } catch (const Error& e) {
        parse_fail("problem.generators", e.what());
    }

    if (!j.contains("delta")) parse_fail("problem", "missing \"delta\" array");
    std::vector<MapEntry> delta_entries =
        entries_from_json(j.at("delta"), "problem.delta", p.basis, -2, p.grading);
    p.delta = GradedMap(p.basis, p.basis, -2, p.grading, p.ring, std::move(delta_entries));

    if (j.contains("boundary")) {
        std::vector<MapEntry> bnd =
            entries_from_json(j.at("boundary"), "problem.boundary", p.basis, -1, p.grading);
        p.boundary = GradedMap(p.basis, p.basis, -1, p.grading, p.ring, std::move(bnd));
    }

    if (j.contains("delta_c")) {
        const json& jc = j.at("delta_c");
        if (!jc.is_object() || !jc.contains("coeff"))
            parse_fail("problem.delta_c", "expected {\"coeff\": <scalar>}");
        p.delta_c_coeff = scalar_from_json(jc.at("coeff"), "problem.delta_c.coeff");
        if (p.delta_c_coeff != 0) {
            if (!p.grading.is_periodic() || p.grading.deg_t() != 2)
                parse_fail("problem.delta_c", "nonzero delta_c needs deg_T = 2");
            p.delta = add(p.delta, scalar_tpower_identity(p.basis, p.grading, p.ring,
                                                          p.delta_c_coeff, -1));
        }
    }

    if (j.contains("metadata")) {
        const json& jm = j.at("metadata");
        if (jm.contains("m_W"))
            p.metadata.m_w = to_int(scalar_from_json(jm.at("m_W"), "problem.metadata.m_W"));
        if (jm.contains("K"))
            p.metadata.k_const = scalar_from_json(jm.at("K"), "problem.metadata.K");
    }
    return p;
}

GysinProblem load_problem_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot open \"" + path + "\"");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
    try {
        return problem_from_json(j);
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what());
    }
}

json problem_to_json(const GysinProblem& p)
{
    json j;
    j["schema"] = 1;
    j["label"] = p.label;
    j["ring"] = ring_name(p.ring);
    if (p.grading.is_periodic())
        j["grading"] = json{{"deg_T", p.grading.deg_t()}};
    else
        j["grading"] = json{{"trivial", true}};
    j["dim_sigma"] = p.dim_sigma;
    json gens = json::array();
    for (const Generator& g : p.basis.generators())
        gens.push_back(json{{"label", g.label}, {"degree", g.degree}});
    j["generators"] = std::move(gens);

    GradedMap delta = p.delta;
    if (p.delta_c_coeff != 0)
        delta = add(delta, scalar_tpower_identity(p.basis, p.grading, p.ring,
                                                  -p.delta_c_coeff, -1));
    j["delta"] = entries_to_json(delta);
    if (p.boundary) j["boundary"] = entries_to_json(*p.boundary);
    if (p.delta_c_coeff != 0) j["delta_c"] = json{{"coeff", scalar_to_json(p.delta_c_coeff)}};
    if (p.metadata.m_w || p.metadata.k_const) {
        json jm;
        if (p.metadata.m_w) jm["m_W"] = scalar_to_json(Rat(*p.metadata.m_w));
        if (p.metadata.k_const) jm["K"] = scalar_to_json(*p.metadata.k_const);
        j["metadata"] = std::move(jm);
    }
    return j;
}

json group_to_json(const AbelianGroupDescription& g)
{
    json j;
    j["free_rank"] = g.free_rank;
    json tor = json::array();
    for (const Int& t : g.torsion) tor.push_back(scalar_to_json(Rat(t)));
    j["torsion"] = std::move(tor);
    j["pretty"] = g.to_string();
    return j;
}

AbelianGroupDescription group_from_json(const json& j)
{
    AbelianGroupDescription g;
    g.free_rank = j.at("free_rank").get<std::size_t>();
    for (const json& t : j.at("torsion"))
        g.torsion.push_back(to_int(scalar_from_json(t, "torsion")));
    return g;
}

json result_to_json(const GysinProblem& p, const RFHResult& r, const std::string& mode)
{
    json j;
    j["schema"] = 1;
    j["problem"] = p.label;
    j["ring"] = ring_name(p.ring);
    j["mode"] = mode;
    j["window"] = json{{"min", r.window.min}, {"max", r.window.max}};
    j["periodic"] = r.periodic;
    if (r.periodic) j["deg_T"] = r.period;
    json groups = json::array();
    for (const auto& [deg, g] : r.groups) {
        json row = group_to_json(g);
        row["degree"] = deg;
        groups.push_back(std::move(row));
    }
    j["groups"] = std::move(groups);
    j["note"] = r.note;
    return j;
}

json report_to_json(const GenericHypersurfaceReport& rep)
{
    json j;
    j["n"] = rep.n;
    j["d"] = rep.d;
    j["deg_T"] = rep.deg_t;
    j["primitive_rank"] = rep.primitive_rank;
    j["euler_characteristic"] = scalar_to_json(Rat(rep.euler_characteristic));
    json rows = json::array();
    for (const RankComparisonRow& r : rep.rows)
        rows.push_back(json{{"degree", r.degree},
                            {"engine_dim", r.engine_dim},
                            {"closed_form_dim", r.closed_form_dim},
                            {"match", r.match}});
    j["ranks"] = std::move(rows);
    j["kernel_classes"] = rep.kernel_classes;
    j["kernel_at_expected_classes"] = rep.kernel_at_expected_classes;
    j["alternating_sum_zero"] = rep.alternating_sum_zero;
    j["rank_bookkeeping_ok"] = rep.rank_bookkeeping_ok;
    j["internally_consistent"] = rep.internally_consistent;
    j["matches_closed_forms"] = rep.matches_closed_forms;
    return j;
}

std::map<int, AbelianGroupDescription> result_groups_from_json(const json& j)
{
    std::map<int, AbelianGroupDescription> out;
    for (const json& row : j.at("groups"))
        out.emplace(row.at("degree").get<int>(), group_from_json(row));
    return out;
}

} // namespace rfh
