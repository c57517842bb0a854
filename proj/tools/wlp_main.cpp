// Batch driver for the weighted convolution algebra experiments.
//
// Exit codes: 0 all checks passed, 1 numeric failure, 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wlp/circlemaps.hpp"
#include "wlp/compops.hpp"
#include "wlp/error.hpp"
#include "wlp/groupalg.hpp"
#include "wlp/json_io.hpp"
#include "wlp/parallel.hpp"
#include "wlp/verify.hpp"
#include "wlp/version.hpp"

namespace {

using wlp::json;

struct Config {
    std::string format;  ///< csv for tabular commands, json otherwise
    std::string out;
    std::uint64_t seed = 0;
    unsigned jobs = wlp::default_jobs();
    double p = 2.0;
    double a = 2.0;
    double gamma = 0.5;
    double r = 0.5;
    std::vector<double> r_list{0.02, 0.05, 0.1, 0.2};
    std::int64_t N = 256;
    std::vector<std::int64_t> n_list;
    double tol = 1e-10;
    double Lambda = 1.0;
    int weight_case = 1;
    std::string suite = "all";
    std::string family = "polynomial";
    std::string weight_file;
    std::int64_t window = 40;
    int trials = 20;
};

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

class Report {
public:
    Report(std::string command, json config) : command_(std::move(command)), config_(std::move(config)) {}

    void set_results(json results) { results_ = std::move(results); }
    void set_table(std::vector<std::string> header, std::vector<std::vector<std::string>> rows) {
        header_ = std::move(header);
        rows_ = std::move(rows);
    }
    void set_passed(bool passed) { passed_ = passed; }
    bool passed() const { return passed_; }

    std::string render(const std::string& format) const {
        std::ostringstream os;
        if (format == "csv") {
            os << "# wlp " << wlp::kVersion << " schema " << wlp::kReportSchemaVersion << " command " << command_ << "\n";
            os << "# config " << config_.dump() << "\n";
            for (std::size_t i = 0; i < header_.size(); ++i) os << (i ? "," : "") << header_[i];
            os << "\n";
            for (const auto& row : rows_) {
                for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
                os << "\n";
            }
            return os.str();
        }
        json j;
        j["schema_version"] = wlp::kReportSchemaVersion;
        j["version"] = wlp::kVersion;
        j["command"] = command_;
        j["config"] = config_;
        j["passed"] = passed_;
        j["results"] = results_;
        return j.dump(2) + "\n";
    }

private:
    std::string command_;
    json config_;
    json results_;
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
    bool passed_ = true;
};

json common_config(const Config& c) {
    return {{"seed", c.seed}, {"format", c.format}};
}

Report run_verify(const Config& c) {
    json config = common_config(c);
    config["suite"] = c.suite;
    Report rep("verify", config);
    const auto results = wlp::run_verify(c.suite, c.seed, c.jobs);
    json arr = json::array();
    std::vector<std::vector<std::string>> rows;
    bool all = true;
    std::size_t passed = 0;
    for (const auto& r : results) {
        all = all && r.passed;
        passed += r.passed ? 1 : 0;
        arr.push_back({{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        rows.push_back({r.suite, r.name, r.passed ? "pass" : "FAIL", r.detail});
        std::cerr << (r.passed ? "pass  " : "FAIL  ") << r.suite << "/" << r.name << ": " << r.detail << "\n";
    }
    std::cerr << passed << "/" << results.size() << " checks passed\n";
    rep.set_results({{"summary", {{"total", results.size()}, {"passed", passed}}}, {"checks", std::move(arr)}});
    rep.set_table({"suite", "name", "status", "detail"}, std::move(rows));
    rep.set_passed(all);
    return rep;
}

Report run_blowup(const Config& c) {
    wlp::BlowupParams params;
    params.weight_case = c.weight_case;
    params.gamma = c.gamma;
    params.a = c.a;
    params.r = c.r;
    params.p = c.p;
    params.n_list = c.n_list;
    if (params.n_list.empty())
        params.n_list = c.weight_case == 1 ? std::vector<std::int64_t>{9, 16, 25, 36, 49}
                                           : std::vector<std::int64_t>{5, 10, 15, 20, 25};
    json config = common_config(c);
    config["case"] = params.weight_case;
    if (params.weight_case == 1) config["gamma"] = params.gamma;
    else config["a"] = params.a;
    config["r"] = params.r;
    config["p"] = params.p;
    config["n"] = params.n_list;
    Report rep("blowup", config);

    const auto rows = wlp::blowup_experiment(params, c.jobs);
    json arr = json::array();
    std::vector<std::vector<std::string>> table;
    bool increasing = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (i > 0) increasing = increasing && r.ratio > rows[i - 1].ratio;
        arr.push_back(wlp::to_json(r));
        table.push_back({std::to_string(r.n), g17(r.ratio), g17(r.model_value), std::to_string(r.k_n),
                         g17(r.coeff_at_k_n), g17(r.single_coeff_ratio), g17(r.scaled_coeff)});
    }
    rep.set_results({{"strictly_increasing", increasing}, {"rows", std::move(arr)}});
    rep.set_table({"n", "ratio", "model_value", "k_n", "coeff_at_k_n", "single_coeff_ratio", "scaled_coeff"},
                  std::move(table));
    rep.set_passed(params.r == 0.0 || increasing);
    return rep;
}

Report run_distortion(const Config& c) {
    if (c.a != std::floor(c.a) || c.a <= 1.0) throw wlp::ParameterError("--a must be an integer > 1");
    json config = common_config(c);
    config["a"] = c.a;
    config["r"] = c.r_list;
    config["N"] = c.N;
    config["Lambda"] = c.Lambda;
    Report rep("distortion", config);

    const auto reports = wlp::distortion_experiment(wlp::Weight::polynomial(c.a), c.r_list, c.N, c.Lambda, c.jobs);
    json arr = json::array();
    std::vector<std::vector<std::string>> table;
    bool ok = true;
    for (const auto& d : reports) {
        ok = ok && d.distortion >= 1.0 - 1e-9 && (d.r == 0.0 || d.column1_support >= 2);
        arr.push_back(wlp::to_json(d));
        table.push_back({g17(d.r), std::to_string(d.N), g17(d.norm_fwd), g17(d.norm_inv), g17(d.distortion),
                         g17(d.k_bound_fwd), g17(d.k_bound_inv), g17(d.lambda_param), d.within_k_bound ? "1" : "0",
                         std::to_string(d.column1_support)});
    }
    rep.set_results({{"reports", std::move(arr)}});
    rep.set_table({"r", "N", "norm_fwd", "norm_inv", "distortion", "k_bound_fwd", "k_bound_inv", "lambda_param",
                   "within_k_bound", "column1_support"},
                  std::move(table));
    rep.set_passed(ok);
    return rep;
}

Report run_group_scan(const Config& c) {
    std::vector<std::int64_t> sizes = c.n_list;
    if (sizes.empty()) sizes = {3, 4, 5, 6};
    json config = common_config(c);
    config["n"] = sizes;
    Report rep("group-scan", config);

    json census = json::array(), kw = json::array();
    std::vector<std::vector<std::string>> table;
    bool ok = true;
    for (auto n : sizes) {
        if (n < 1) throw wlp::ParameterError("group sizes must be positive");
        const auto cs = wlp::enumerate_automorphisms_l2(static_cast<std::size_t>(n), c.jobs);
        ok = ok && cs.max_homomorphism_defect < 1e-10 && cs.max_isometry_defect < 1e-10;
        census.push_back(wlp::to_json(cs));
        std::string min_norm = "none", kw_flag = "";
        if (n <= 8) {
            const auto k = wlp::kalton_wood_scan(static_cast<std::size_t>(n), c.jobs);
            ok = ok && k.all_below_threshold_standard;
            kw.push_back(wlp::to_json(k));
            if (k.min_nonstandard_norm) min_norm = g17(*k.min_nonstandard_norm);
            kw_flag = k.all_below_threshold_standard ? "1" : "0";
        }
        table.push_back({std::to_string(n), std::to_string(cs.total), std::to_string(cs.standard_count),
                         g17(cs.max_homomorphism_defect), g17(cs.max_isometry_defect), min_norm, kw_flag});
    }
    rep.set_results({{"census", std::move(census)}, {"kalton_wood", std::move(kw)}});
    rep.set_table({"n", "total", "standard", "max_homomorphism_defect", "max_isometry_defect", "min_nonstandard_l1_norm",
                   "all_below_threshold_standard"},
                  std::move(table));
    rep.set_passed(ok);
    return rep;
}

wlp::Weight weight_from_flags(const Config& c) {
    if (!c.weight_file.empty()) {
        std::ifstream in(c.weight_file);
        if (!in) throw wlp::ParameterError("cannot open weight file " + c.weight_file);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw wlp::ParameterError(std::string("weight file is not JSON: ") + e.what());
        }
        return wlp::weight_from_json(j);
    }
    const auto family = wlp::weight_family_from_string(c.family);
    switch (family) {
    case wlp::WeightFamily::Constant: return wlp::Weight::constant();
    case wlp::WeightFamily::Polynomial: return wlp::Weight::polynomial(c.a);
    case wlp::WeightFamily::SubExp: return wlp::Weight::subexp(c.gamma);
    case wlp::WeightFamily::ExpPoly: return wlp::Weight::exppoly(c.a);
    case wlp::WeightFamily::Tabulated: break;
    }
    throw wlp::ParameterError("tabulated weights need --weight-file");
}

Report run_weights_check(const Config& c) {
    const auto w = weight_from_flags(c);
    json config = common_config(c);
    config["weight"] = wlp::weight_to_json(w);
    config["window"] = c.window;
    config["p"] = c.p;
    Report rep("weights-check", config);

    const auto sub = w.on_integers() ? wlp::check_submultiplicative(w, c.window) : wlp::check_submultiplicative(w);
    json results = {{"submultiplicativity", wlp::to_json(sub)}};
    std::vector<std::vector<std::string>> table = {
        {"max_excess", g17(sub.max_excess)},
        {"max_ratio", g17(sub.max_ratio)},
        {"submultiplicative", sub.submultiplicative ? "1" : "0"}};
    if (c.p > 1.0) {
        const auto ac = w.on_integers() ? wlp::algebra_constant(w, c.p, c.window) : wlp::algebra_constant(w, c.p);
        results["algebra_constant"] = wlp::to_json(ac);
        table.push_back({"algebra_constant", g17(ac.constant)});
        table.push_back({"tail_bound", g17(ac.tail_bound)});
    }
    rep.set_results(std::move(results));
    rep.set_table({"quantity", "value"}, std::move(table));
    rep.set_passed(sub.submultiplicative);
    return rep;
}

Report run_chain_rule(const Config& c) {
    const std::int64_t half = c.n_list.empty() ? 20 : c.n_list.front();
    if (half < 0) throw wlp::ParameterError("support half-width must be nonnegative");
    json config = common_config(c);
    config["r"] = c.r;
    config["support"] = {-half, half};
    config["trials"] = c.trials;
    config["tol"] = c.tol;
    Report rep("chain-rule", config);

    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const auto phi = wlp::CircleMap::blaschke(c.r);
    json arr = json::array();
    std::vector<std::vector<std::string>> table;
    double worst = 0.0;
    for (int t = 0; t < c.trials; ++t) {
        std::vector<wlp::cplx> v(static_cast<std::size_t>(2 * half + 1));
        for (auto& x : v) x = wlp::cplx(u(rng), u(rng));
        const auto res = wlp::chain_rule_check(wlp::TruncSeq(-half, std::move(v)), phi, c.tol);
        worst = std::max(worst, res.residual_l1);
        arr.push_back(wlp::to_json(res));
        table.push_back({std::to_string(t), g17(res.residual_l1), g17(res.lhs_l1)});
    }
    rep.set_results({{"max_residual_l1", worst}, {"threshold", 1e-6}, {"trials", std::move(arr)}});
    rep.set_table({"trial", "residual_l1", "lhs_l1"}, std::move(table));
    rep.set_passed(worst < 1e-6);
    return rep;
}

void add_common(CLI::App* sub, Config& c) {
    sub->add_option("--seed", c.seed, "RNG seed");
    sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--out", c.out, "report path (default: stdout)");
    sub->add_option("--format", c.format, "report format (csv for blowup, weights-check, chain-rule; json otherwise)")
        ->check(CLI::IsMember({"csv", "json"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted convolution algebra experiments"};
    app.set_version_flag("--version", std::string(wlp::kVersion));
    app.require_subcommand(1);
    Config c;

    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    add_common(verify, c);
    std::vector<std::string> suites = wlp::verify_suites();
    suites.push_back("all");
    verify->add_option("--suite", c.suite, "suite name")->check(CLI::IsMember(suites));

    auto* blowup = app.add_subcommand("blowup", "column ratios of C_{b_r} under growing weights");
    add_common(blowup, c);
    blowup->add_option("--case", c.weight_case, "1: exp(|n|^gamma), 2: a^|n|(1+n^2)")->check(CLI::IsMember({1, 2}));
    blowup->add_option("--gamma", c.gamma, "case 1 exponent");
    blowup->add_option("--a", c.a, "case 2 base");
    blowup->add_option("--r", c.r, "Blaschke parameter");
    blowup->add_option("--p", c.p, "norm exponent");
    blowup->add_option("--n", c.n_list, "column indices")->delimiter(',');

    auto* distortion = app.add_subcommand("distortion", "distortion of C_{b_r} on weighted l^2");
    add_common(distortion, c);
    distortion->add_option("--a", c.a, "polynomial weight exponent (integer > 1)");
    distortion->add_option("--r", c.r_list, "Blaschke parameters")->delimiter(',');
    distortion->add_option("--N", c.N, "truncation")->check(CLI::PositiveNumber);
    distortion->add_option("--Lambda", c.Lambda, "composition exponent in K(r)");
    distortion->add_option("--p", c.p, "norm exponent (only 2 is supported)");

    auto* scan = app.add_subcommand("group-scan", "Fourier-permutation automorphisms of Z_n");
    add_common(scan, c);
    scan->add_option("--n", c.n_list, "group orders")->delimiter(',');

    auto* wcheck = app.add_subcommand("weights-check", "submultiplicativity and algebra constant");
    add_common(wcheck, c);
    wcheck->add_option("--family", c.family, "weight family")
        ->check(CLI::IsMember({"constant", "polynomial", "subexp", "exppoly"}));
    wcheck->add_option("--weight-file", c.weight_file, "JSON weight descriptor");
    wcheck->add_option("--a", c.a, "polynomial exponent or exppoly base");
    wcheck->add_option("--gamma", c.gamma, "subexp exponent");
    wcheck->add_option("--window", c.window, "index window")->check(CLI::PositiveNumber);
    wcheck->add_option("--p", c.p, "norm exponent for the algebra constant");

    auto* chain = app.add_subcommand("chain-rule", "chain rule residual under composition with b_r");
    add_common(chain, c);
    chain->add_option("--r", c.r, "Blaschke parameter");
    chain->add_option("--n", c.n_list, "support half-width")->expected(1);
    chain->add_option("--trials", c.trials, "random inputs")->check(CLI::PositiveNumber);
    chain->add_option("--tol", c.tol, "truncation budget for coeffs(phi')");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c.format.empty()) c.format = blowup->parsed() || wcheck->parsed() || chain->parsed() ? "csv" : "json";
        if (distortion->parsed() && c.p != 2.0) throw wlp::ParameterError("distortion is computed for p = 2 only");
        Report rep = verify->parsed()       ? run_verify(c)
                     : blowup->parsed()     ? run_blowup(c)
                     : distortion->parsed() ? run_distortion(c)
                     : scan->parsed()       ? run_group_scan(c)
                     : wcheck->parsed()     ? run_weights_check(c)
                                            : run_chain_rule(c);
        const std::string text = rep.render(c.format);
        if (c.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(c.out, std::ios::binary);
            if (!out) throw wlp::ParameterError("cannot write " + c.out);
            out << text;
        }
        return rep.passed() ? 0 : 1;
    } catch (const wlp::ParameterError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const wlp::AdmissibilityError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
