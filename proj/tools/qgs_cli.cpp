// Experiment driver: classical Grover runs, amplitude-suppression runs, the
// oracle growth sweep, and the QAOA initialization comparison, all with
// file-based reproducible outputs.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgs/basis.hpp"
#include "qgs/depth.hpp"
#include "qgs/format.hpp"
#include "qgs/grover.hpp"
#include "qgs/qaoa.hpp"
#include "qgs/state.hpp"
#include "qgs/tsp.hpp"

namespace {

using nlohmann::json;

// Round through the 12-significant-digit form so JSON numbers match the
// CSV serialization convention.
double g12(double x) { return std::strtod(qgs::format_g12(x).c_str(), nullptr); }

// Outputs are staged as temp files and renamed together once every write
// succeeded, so a failed run never leaves a partial output set behind.
class OutputSet {
  public:
    void stage(std::filesystem::path path, std::string content) {
        staged_.push_back({std::move(path), std::move(content)});
    }

    void commit() {
        namespace fs = std::filesystem;
        std::vector<fs::path> temps;
        auto cleanup = [&temps] {
            std::error_code ec;
            for (const fs::path& t : temps) fs::remove(t, ec);
        };
        try {
            for (const auto& [path, content] : staged_) {
                const fs::path dir = path.parent_path();
                if (!dir.empty()) fs::create_directories(dir);
                const fs::path tmp = path.string() + ".tmp";
                std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
                if (!out)
                    throw std::runtime_error("cannot open " + tmp.string() + " for writing");
                temps.push_back(tmp);
                out << content;
                out.flush();
                if (!out) throw std::runtime_error("failed writing " + tmp.string());
            }
            for (std::size_t i = 0; i < staged_.size(); ++i)
                fs::rename(temps[i], staged_[i].first);
        } catch (...) {
            cleanup();
            throw;
        }
    }

  private:
    std::vector<std::pair<std::filesystem::path, std::string>> staged_;
};

std::vector<std::string> split_csv_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::set<std::uint64_t> parse_labels(const std::string& list, int n, const char* what) {
    std::set<std::uint64_t> out;
    for (const std::string& tok : split_csv_list(list)) {
        if (tok.size() != static_cast<std::size_t>(n) ||
            tok.find_first_not_of("01") != std::string::npos)
            throw std::invalid_argument(std::string(what) + " '" + tok +
                                        "' is not a length-" + std::to_string(n) +
                                        " bitstring");
        if (!out.insert(qgs::label_to_index(tok)).second)
            throw std::invalid_argument(std::string(what) + " '" + tok + "' repeats");
    }
    if (out.empty())
        throw std::invalid_argument(std::string(what) + " list is empty");
    return out;
}

// Config-file support: JSON keys mirror the long flag names; values apply
// only where the command line did not set the option, so flags win.
json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config file " + path + ": " + e.what());
    }
    if (!j.is_object())
        throw std::invalid_argument("config file " + path + ": top level must be an object");
    return j;
}

template <typename T>
void merge_option(const CLI::App& cmd, const json& cfg, const std::string& flag, T& value) {
    const CLI::Option* opt = cmd.get_option("--" + flag);
    if (opt->count() > 0 || !cfg.contains(flag)) return;
    value = cfg.at(flag).get<T>();
}

// Label lists appear as comma-joined strings on the command line and as
// arrays in emitted summaries; the config loader takes either, so a summary
// can be replayed as a config file.
void merge_labels(const CLI::App& cmd, const json& cfg, const std::string& flag,
                  std::string& value) {
    const CLI::Option* opt = cmd.get_option("--" + flag);
    if (opt->count() > 0 || !cfg.contains(flag)) return;
    const json& field = cfg.at(flag);
    if (field.is_string()) {
        value = field.get<std::string>();
        return;
    }
    if (field.is_array()) {
        std::string joined;
        for (const auto& item : field) {
            if (!joined.empty()) joined += ',';
            joined += item.get<std::string>();
        }
        value = joined;
        return;
    }
    throw std::invalid_argument("config field \"" + flag +
                                "\" must be a string or an array of labels");
}

std::string histogram_csv(const std::vector<double>& probs, int n,
                          const std::map<std::string, std::uint64_t>& counts) {
    std::string out = "label,probability,counts\n";
    for (std::size_t i = 0; i < probs.size(); ++i) {
        const std::string label = qgs::index_to_label(i, n);
        const auto it = counts.find(label);
        const std::uint64_t c = it == counts.end() ? 0 : it->second;
        out += label + ',' + qgs::format_g12(probs[i]) + ',' + std::to_string(c) + '\n';
    }
    return out;
}

struct CommonArgs {
    std::uint64_t seed = 1;
    std::uint64_t shots = 4096;
    std::string out;
    std::string config;
};

void add_common(CLI::App* cmd, CommonArgs& args, const std::string& default_out) {
    args.out = default_out;
    cmd->add_option("--shots", args.shots, "Measurement shots for the histogram");
    cmd->add_option("--seed", args.seed, "Sampling / optimizer seed");
    cmd->add_option("--out", args.out, "Output path prefix (<out>.csv, <out>.json)");
    cmd->add_option("--config", args.config, "JSON config file mirroring the flags");
}

int run_grover_cmd(const CLI::App& cmd, int n, std::string targets,
                   std::optional<int> k, CommonArgs args) {
    if (!args.config.empty()) {
        const json cfg = load_config(args.config);
        merge_option(cmd, cfg, "n", n);
        merge_labels(cmd, cfg, "targets", targets);
        merge_option(cmd, cfg, "shots", args.shots);
        merge_option(cmd, cfg, "seed", args.seed);
        merge_option(cmd, cfg, "out", args.out);
        if (!k && cfg.contains("k")) k = cfg.at("k").get<int>();
    }
    if (targets.empty())
        throw std::invalid_argument("missing --targets (flag or config)");
    const std::set<std::uint64_t> target_set = parse_labels(targets, n, "target");
    const qgs::OracleSpec spec = qgs::OracleSpec::from_targets(n, target_set);

    qgs::GroverConfig config{spec, qgs::GroverMode::Classical, k, std::nullopt, {}};
    const qgs::GroverResult result = qgs::run_grover(config);

    const qgs::StateVector register_state = qgs::StateVector::from_amplitudes(
        n,
        [&] {
            std::vector<qgs::cplx> a(result.register_probabilities.size());
            for (std::size_t i = 0; i < a.size(); ++i)
                a[i] = std::sqrt(result.register_probabilities[i]);
            return a;
        }());
    const auto counts = qgs::sample(register_state, args.shots, args.seed);

    double simulated = 0.0;
    for (std::uint64_t t : target_set) simulated += result.register_probabilities[t];
    const double closed = qgs::closed_form_success(
        spec.total_states(), target_set.size(),
        static_cast<std::uint64_t>(result.iterations_used));

    json summary;
    summary["subcommand"] = "grover";
    summary["n"] = n;
    json jt = json::array();
    for (std::uint64_t t : target_set) jt.push_back(qgs::index_to_label(t, n));
    summary["targets"] = jt;
    summary["k"] = result.iterations_used;
    summary["closed_form_probability"] = g12(closed);
    summary["simulated_probability"] = g12(simulated);
    summary["shots"] = args.shots;
    summary["seed"] = args.seed;

    OutputSet outputs;
    outputs.stage(args.out + ".csv",
                  histogram_csv(result.register_probabilities, n, counts));
    outputs.stage(args.out + ".json", summary.dump(2) + "\n");
    outputs.commit();
    std::cout << "k=" << result.iterations_used
              << " P(targets)=" << qgs::format_g12(simulated) << "\n";
    return 0;
}

int run_suppress_cmd(const CLI::App& cmd, int n, std::string undesired,
                     std::optional<int> k, bool trailing_x, CommonArgs args) {
    if (!args.config.empty()) {
        const json cfg = load_config(args.config);
        merge_option(cmd, cfg, "n", n);
        merge_labels(cmd, cfg, "undesired", undesired);
        merge_option(cmd, cfg, "shots", args.shots);
        merge_option(cmd, cfg, "seed", args.seed);
        merge_option(cmd, cfg, "out", args.out);
        if (cmd.get_option("--trailing-x")->count() == 0 && cfg.contains("trailing-x"))
            trailing_x = cfg.at("trailing-x").get<bool>();
        if (!k && cfg.contains("k")) k = cfg.at("k").get<int>();
    }
    if (undesired.empty())
        throw std::invalid_argument("missing --undesired (flag or config)");
    const std::set<std::uint64_t> s_set = parse_labels(undesired, n, "undesired label");
    const qgs::OracleSpec spec(n, s_set); // rejects S = all states

    qgs::SuppressionOptions opts;
    opts.ancilla = trailing_x ? qgs::AncillaHandling::EntangledTrailingX
                              : qgs::AncillaHandling::Entangled;
    qgs::GroverConfig config{spec, qgs::GroverMode::Suppression, k, std::nullopt, opts};
    qgs::GroverResult result = qgs::run_grover(config);
    if (result.sweep.empty()) {
        const auto plan = qgs::plan_iterations(spec, qgs::GroverMode::Suppression);
        result.sweep = qgs::sweep_suppression(spec, static_cast<int>(plan.sweep_bound), opts);
    }

    const qgs::StateVector register_state = qgs::StateVector::from_amplitudes(
        n,
        [&] {
            std::vector<qgs::cplx> a(result.register_probabilities.size());
            for (std::size_t i = 0; i < a.size(); ++i)
                a[i] = std::sqrt(result.register_probabilities[i]);
            return a;
        }());
    const auto counts = qgs::sample(register_state, args.shots, args.seed);

    double p_final = 0.0;
    for (std::uint64_t s : s_set) p_final += result.register_probabilities[s];
    const double p_initial = static_cast<double>(s_set.size()) /
                             static_cast<double>(spec.total_states());

    json summary;
    summary["subcommand"] = "suppress";
    summary["n"] = n;
    json js = json::array();
    for (std::uint64_t s : s_set) js.push_back(qgs::index_to_label(s, n));
    summary["undesired"] = js;
    summary["k"] = result.iterations_used;
    summary["trailing-x"] = trailing_x;
    summary["p_undesired_initial"] = g12(p_initial);
    summary["p_undesired_final"] = g12(p_final);
    json sweep = json::array();
    for (const qgs::SweepPoint& pt : result.sweep)
        sweep.push_back({{"k", pt.k}, {"p_undesired", g12(pt.undesired_probability)}});
    summary["sweep"] = sweep;
    summary["shots"] = args.shots;
    summary["seed"] = args.seed;

    OutputSet outputs;
    outputs.stage(args.out + ".csv",
                  histogram_csv(result.register_probabilities, n, counts));
    outputs.stage(args.out + ".json", summary.dump(2) + "\n");
    outputs.commit();
    std::cout << "k=" << result.iterations_used
              << " P(undesired)=" << qgs::format_g12(p_final) << "\n";
    return 0;
}

int run_depth_cmd(const CLI::App& cmd, int n_min, int n_max, std::string out,
                  const std::string& config_path) {
    if (!config_path.empty()) {
        const json cfg = load_config(config_path);
        merge_option(cmd, cfg, "n-min", n_min);
        merge_option(cmd, cfg, "n-max", n_max);
        merge_option(cmd, cfg, "out", out);
    }
    const auto rows = qgs::growth_sweep(n_min, n_max);
    OutputSet outputs;
    outputs.stage(out + ".csv", qgs::growth_csv(rows));
    outputs.commit();
    const int cross = qgs::crossover_n(rows);
    if (cross < 0)
        std::cout << "no crossover in range\n";
    else
        std::cout << "crossover n=" << cross << "\n";
    return 0;
}

json qaoa_arm_json(const qgs::QaoaResult& r) {
    json arm;
    arm["best_expected_cost"] = g12(r.best_expected_cost);
    arm["optimal_state_probability"] = g12(r.optimal_state_probability);
    arm["initial_feasible_probability"] = g12(r.initial_feasible_probability);
    arm["grover_iterations"] = r.grover_iterations_used;
    arm["evaluations"] = r.evaluations;
    json gammas = json::array(), betas = json::array();
    for (double g : r.best_gammas) gammas.push_back(g12(g));
    for (double b : r.best_betas) betas.push_back(g12(b));
    arm["best_gammas"] = gammas;
    arm["best_betas"] = betas;
    return arm;
}

int run_qaoa_cmd(const CLI::App& cmd, std::string instance_path, int p, int budget,
                 CommonArgs args) {
    if (!args.config.empty()) {
        const json cfg = load_config(args.config);
        merge_option(cmd, cfg, "instance", instance_path);
        merge_option(cmd, cfg, "p", p);
        merge_option(cmd, cfg, "budget", budget);
        merge_option(cmd, cfg, "seed", args.seed);
        merge_option(cmd, cfg, "out", args.out);
    }
    if (instance_path.empty())
        throw std::invalid_argument("missing --instance (flag or config)");
    std::ifstream in(instance_path);
    if (!in) throw std::runtime_error("cannot read instance file " + instance_path);
    std::stringstream buf;
    buf << in.rdbuf();
    const qgs::TspInstance instance = qgs::tsp_from_json_text(buf.str());

    qgs::QaoaConfig config{instance, qgs::QaoaInit::Uniform, p, budget, args.seed, {}, {}};
    const qgs::TspEncoding enc =
        qgs::tsp_to_qubo(instance, qgs::default_penalty(instance));
    if (!enc.penalty_valid)
        std::cerr << "warning: penalty does not dominate the tour costs\n";

    const qgs::ComparisonReport report = qgs::compare_initializations(config);

    const int n = (instance.city_count - 1) * (instance.city_count - 1);
    json summary;
    summary["subcommand"] = "qaoa-compare";
    summary["instance"] = instance_path;
    summary["cities"] = instance.city_count;
    summary["p"] = p;
    summary["budget"] = budget;
    summary["seed"] = args.seed;
    summary["uniform"] = qaoa_arm_json(report.uniform);
    summary["suppression"] = qaoa_arm_json(report.suppression);
    summary["optimal_label"] = qgs::index_to_label(report.optimal_index, n);
    summary["optimal_energy"] = g12(report.optimal_energy);
    summary["winner"] =
        report.suppression.optimal_state_probability >=
                report.uniform.optimal_state_probability
            ? "suppression"
            : "uniform";

    OutputSet outputs;
    outputs.stage(args.out + ".csv", qgs::comparison_csv(report));
    outputs.stage(args.out + ".json", summary.dump(2) + "\n");
    outputs.commit();
    std::cout << "winner=" << summary["winner"].get<std::string>()
              << " suppression_osp="
              << qgs::format_g12(report.suppression.optimal_state_probability)
              << " uniform_osp="
              << qgs::format_g12(report.uniform.optimal_state_probability) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grover search and amplitude-suppression simulation toolkit"};
    app.require_subcommand(1);

    // grover
    auto* grover = app.add_subcommand("grover", "Classical Grover search run");
    int g_n = 3;
    std::string g_targets;
    std::optional<int> g_k;
    CommonArgs g_args;
    grover->add_option("--n", g_n, "Register qubit count");
    grover->add_option("--targets", g_targets, "Comma-separated target bitstrings");
    grover->add_option("--k", g_k, "Iteration count (default: optimal)");
    add_common(grover, g_args, "grover");

    // suppress
    auto* suppress = app.add_subcommand("suppress", "Amplitude-suppression Grover run");
    int s_n = 3;
    std::string s_undesired;
    std::optional<int> s_k;
    bool s_trailing = false;
    CommonArgs s_args;
    suppress->add_option("--n", s_n, "Register qubit count");
    suppress->add_option("--undesired", s_undesired,
                         "Comma-separated undesired bitstrings");
    suppress->add_option("--k", s_k, "Iteration count (default: sweep argmin)");
    suppress->add_flag("--trailing-x", s_trailing,
                       "Append a trailing ancilla flip to the oracle");
    add_common(suppress, s_args, "suppress");

    // depth-sweep
    auto* depth = app.add_subcommand("depth-sweep", "Oracle gate-count growth sweep");
    int d_min = 2, d_max = 20;
    std::string d_out = "depth";
    std::string d_config;
    depth->add_option("--n-min", d_min, "Smallest register size");
    depth->add_option("--n-max", d_max, "Largest register size");
    depth->add_option("--out", d_out, "Output path prefix (<out>.csv)");
    depth->add_option("--config", d_config, "JSON config file mirroring the flags");

    // qaoa-compare
    auto* qaoa = app.add_subcommand("qaoa-compare",
                                    "QAOA with uniform vs suppression initialization");
    std::string q_instance;
    int q_p = 1, q_budget = 500;
    CommonArgs q_args;
    qaoa->add_option("--instance", q_instance, "TSP instance JSON file");
    qaoa->add_option("--p", q_p, "QAOA layer count");
    qaoa->add_option("--budget", q_budget, "Optimizer evaluation budget per arm");
    add_common(qaoa, q_args, "qaoa_compare");

    CLI11_PARSE(app, argc, argv);

    try {
        if (grover->parsed()) return run_grover_cmd(*grover, g_n, g_targets, g_k, g_args);
        if (suppress->parsed())
            return run_suppress_cmd(*suppress, s_n, s_undesired, s_k, s_trailing, s_args);
        if (depth->parsed()) return run_depth_cmd(*depth, d_min, d_max, d_out, d_config);
        if (qaoa->parsed()) return run_qaoa_cmd(*qaoa, q_instance, q_p, q_budget, q_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
