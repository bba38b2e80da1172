// Command-line front end: compute homology tables from presets or problem
// files, verify the built-in golden tables and property suites, and run the
// integer normal-form utility.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rfh/engine.hpp"
#include "rfh/json_io.hpp"
#include "rfh/presets.hpp"
#include "rfh/verify.hpp"

using nlohmann::json;

namespace {

struct ComputeOptions {
    std::string preset;
    std::string input;
    std::string window;
    std::string format = "table";
    std::string mode = "les";
    std::string reports;
    std::string ring;
    int k = -1, n = -1, d = -1;
};

rfh::GysinProblem resolve_problem(const ComputeOptions& opt)
{
    if (!opt.preset.empty() && !opt.input.empty())
        throw rfh::Error(rfh::ErrorKind::DomainError, "--preset and --input are mutually exclusive");
    if (!opt.input.empty()) return rfh::load_problem_file(opt.input);
    if (opt.preset.empty())
        throw rfh::Error(rfh::ErrorKind::DomainError, "one of --preset or --input is required");
    std::map<std::string, std::string> params;
    if (opt.k >= 0) params["k"] = std::to_string(opt.k);
    if (opt.n >= 0) params["n"] = std::to_string(opt.n);
    if (opt.d >= 0) params["d"] = std::to_string(opt.d);
    if (!opt.ring.empty()) params["ring"] = opt.ring;
    return rfh::make_preset(opt.preset, params);
}

std::vector<std::string> split_csv(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int cmd_compute(const ComputeOptions& opt)
{
    rfh::GysinProblem p = resolve_problem(opt);
    std::optional<rfh::DegreeWindow> window;
    if (!opt.window.empty()) window = rfh::parse_window(opt.window);

    rfh::RFHResult result = opt.mode == "cone" ? rfh::mapping_cone_homology(p, window)
                                               : rfh::rabinowitz_homology(p, window);

    json reports = json::object();
    for (const std::string& name : split_csv(opt.reports)) {
        if (name == "vanishing") {
            rfh::VanishingReport rep = rfh::vanishing_report(p);
            json jr;
            jr["delta_iso"] = rep.delta_iso;
            jr["sh_vanishes"] = rep.sh_vanishes;
            if (rep.witness) {
                jr["witness"] = json{{"degree", rep.witness->degree},
                                     {"group", rfh::group_to_json(rep.witness->group)},
                                     {"detail", rep.witness->detail}};
            }
            reports["vanishing"] = std::move(jr);
        } else if (name == "divisibility") {
            rfh::DivisibilityReport rep = rfh::divisibility_report(p);
            reports["divisibility"] = json{{"divisor", rep.divisor.str()},
                                           {"primitivity_contradiction", rep.primitivity_contradiction}};
        } else if (name == "invertibility") {
            rfh::InvertibilityReport rep = rfh::invertibility_report(p);
            reports["invertibility"] =
                json{{"delta_c_zero", rep.delta_c_zero},
                     {"delta_iso", rep.delta_iso},
                     {"conclusion", rep.conclusion == rfh::InvertibilityConclusion::QuantumInvertible
                                        ? "quantum-invertible"
                                        : "no-conclusion"}};
        } else if (name == "euler") {
            reports["euler"] = json{{"alternating_sum_zero", rfh::euler_characteristic_check(result)}};
        } else {
            throw rfh::Error(rfh::ErrorKind::DomainError, "unknown report \"" + name + "\"");
        }
    }

    if (opt.format == "json") {
        json out = rfh::result_to_json(p, result, opt.mode);
        if (!reports.empty()) out["reports"] = reports;
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "problem: " << p.label << "  (ring " << rfh::ring_name(p.ring) << ", "
              << (result.periodic ? "deg_T = " + std::to_string(result.period)
                                  : std::string("trivial grading"))
              << ")\n";
    std::cout << "window:  " << result.window.min << ".." << result.window.max << "\n";
    std::cout << "degree  group\n";
    for (const auto& [deg, group] : result.groups)
        std::cout << (deg < 0 ? "" : " ") << deg << "\t" << group.to_string() << "\n";
    for (const auto& [name, body] : reports.items())
        std::cout << "report " << name << ": " << body.dump() << "\n";
    return 0;
}

int cmd_snf(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw rfh::Error(rfh::ErrorKind::ParseError, "cannot open \"" + path + "\"");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw rfh::Error(rfh::ErrorKind::ParseError, path + ": " + e.what());
    }
    if (!j.is_array()) throw rfh::Error(rfh::ErrorKind::ParseError, "expected an array of rows");
    std::size_t rows = j.size();
    std::size_t cols = rows == 0 ? 0 : j.at(0).size();
    rfh::ExactMatrix m(rows, cols, rfh::Ring::Z);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j.at(i).is_array() || j.at(i).size() != cols)
            throw rfh::Error(rfh::ErrorKind::ParseError, "row " + std::to_string(i) + ": ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) {
            const json& cell = j.at(i).at(c);
            if (!cell.is_number_integer())
                throw rfh::Error(rfh::ErrorKind::ParseError,
                                 "row " + std::to_string(i) + ": entries must be integers");
            m.at(i, c) = static_cast<long long>(cell.get<std::int64_t>());
        }
    }
    rfh::SmithDecomposition snf = rfh::smith_normal_form(m);
    std::cout << "size: " << rows << "x" << cols << "\n";
    std::cout << "rank: " << snf.rank << "\n";
    std::cout << "diag(";
    for (std::size_t i = 0; i < snf.diagonal.size(); ++i)
        std::cout << (i ? "," : "") << snf.diagonal[i].str();
    std::cout << ")\n";
    std::cout << "invariant factors:";
    bool any = false;
    for (const rfh::Int& t : snf.diagonal)
        if (t > 1) {
            std::cout << " " << t.str();
            any = true;
        }
    if (!any) std::cout << " none";
    std::cout << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rabinowitz Floer homology of prequantization boundaries via the Gysin sequence"};
    app.require_subcommand(1);

    ComputeOptions copt;
    CLI::App* compute = app.add_subcommand("compute", "compute homology groups over a degree window");
    compute->add_option("--preset", copt.preset, "preset name (see `presets`)");
    compute->add_option("--input", copt.input, "problem file (JSON, schema 1)");
    compute->add_option("--window", copt.window, "degree window a..b (default: one period)");
    compute->add_option("--format", copt.format, "table | json")
        ->check(CLI::IsMember({"table", "json"}));
    compute->add_option("--mode", copt.mode, "les | cone")->check(CLI::IsMember({"les", "cone"}));
    compute->add_option("--report", copt.reports,
                        "comma list of vanishing,divisibility,invertibility,euler");
    compute->add_option("--k", copt.k, "sphere dimension / lens parameter");
    compute->add_option("--n", copt.n, "complex dimension of the hypersurface");
    compute->add_option("--d", copt.d, "hypersurface degree");
    compute->add_option("--ring", copt.ring, "Z | Q");

    std::string suite = "all";
    CLI::App* verify = app.add_subcommand("verify", "run golden-table and property suites");
    verify->add_option("--suite", suite, "all | " + rfh::verify_suite_names());

    CLI::App* presets = app.add_subcommand("presets", "list presets and parameter ranges");

    std::string matrix_path;
    CLI::App* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    snf->add_option("--matrix", matrix_path, "JSON file: array of arrays of integers")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return cmd_compute(copt);
        if (verify->parsed()) return rfh::run_verify_suite(suite, std::cout);
        if (presets->parsed()) {
            for (const rfh::PresetInfo& info : rfh::list_presets())
                std::cout << info.name << "\n    " << info.parameters << "\n";
            return 0;
        }
        if (snf->parsed()) return cmd_snf(matrix_path);
    } catch (const rfh::Error& e) {
        if (e.kind() == rfh::ErrorKind::Internal) {
            std::cerr << "internal invariant breach: " << e.what() << "\n";
            return 2;
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
