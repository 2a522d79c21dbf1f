// netgames: config-driven runner for simulating linear-quadratic network
// games, learning graphs and marginal benefits from observed actions, and
// scoring the results.
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "netgames/baselines.hpp"
#include "netgames/experiment.hpp"
#include "netgames/io.hpp"
#include "netgames/rng.hpp"
#include "netgames/simplex.hpp"

namespace {

using namespace netgames;

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitNumerical = 4;

// Grid values: comma-separated numbers, or "log2:lo:hi:step" for a
// log2-spaced list 2^lo, 2^(lo+step), ..., 2^hi.
std::vector<double> parse_value_list(const std::string& text) {
    std::vector<double> out;
    if (text.rfind("log2:", 0) == 0) {
        std::stringstream ss(text.substr(5));
        std::string part;
        std::vector<double> spec;
        while (std::getline(ss, part, ':')) spec.push_back(std::stod(part));
        if (spec.size() != 3 || spec[2] <= 0.0) {
            throw ParamError("grid: expected log2:lo:hi:step with step > 0, got '" + text + "'");
        }
        for (double e = spec[0]; e <= spec[1] + 1e-12; e += spec[2]) {
            out.push_back(std::pow(2.0, e));
        }
        return out;
    }
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stod(part));
        } catch (const std::exception&) {
            throw ParamError("grid: cannot parse number '" + part + "'");
        }
    }
    if (out.empty()) throw ParamError("grid: empty value list");
    return out;
}

struct CliOverrides {
    std::optional<std::string> config_path;
    std::optional<std::string> mode, model, sign, regime, algorithm, output;
    std::optional<std::string> actions_csv, truth_csv, benefits_csv, scores_csv, graph_csv;
    std::optional<std::string> rho, noise_std, theta1, theta2, lambda, beta, band;
    std::optional<int> n, k, m, k_games, repeats, threads, clusters;
    std::optional<double> p;
    std::optional<std::uint64_t> seed;
};

void add_common_options(CLI::App* cmd, CliOverrides* o) {
    cmd->add_option("--config", o->config_path, "JSON config file (flags override its fields)");
    cmd->add_option("--model", o->model, "graph model: ER|WS|BA");
    cmd->add_option("--n", o->n, "node count");
    cmd->add_option("--p", o->p, "ER edge probability / WS rewiring probability");
    cmd->add_option("--k", o->k, "WS ring degree (even)");
    cmd->add_option("--m", o->m, "BA attachments per new node");
    cmd->add_option("--k-games", o->k_games, "number of games (columns of A)");
    cmd->add_option("--rho", o->rho, "target spectral radii, comma list or log2:lo:hi:step");
    cmd->add_option("--sign", o->sign, "complement|substitute");
    cmd->add_option("--regime", o->regime, "independent|homophilous|bandlimited");
    cmd->add_option("--band", o->band, "bandlimited eigenvector range lo,hi (1-based)");
    cmd->add_option("--noise-std", o->noise_std, "benefit noise standard deviations");
    cmd->add_option("--algorithm", o->algorithm, "alg1|alg2|correlation|glasso");
    cmd->add_option("--theta1", o->theta1, "theta1 grid");
    cmd->add_option("--theta2", o->theta2, "theta2 grid");
    cmd->add_option("--lambda", o->lambda, "glasso lambda grid");
    cmd->add_option("--beta", o->beta, "beta grid (learn mode)");
    cmd->add_option("--repeats", o->repeats, "seeds per grid point");
    cmd->add_option("--seed", o->seed, "master seed");
    cmd->add_option("--threads", o->threads, "worker threads (0 = hardware)");
    cmd->add_option("--output", o->output, "output directory");
    cmd->add_option("--actions", o->actions_csv, "observed actions CSV (N rows x K columns)");
    cmd->add_option("--truth", o->truth_csv, "groundtruth adjacency CSV");
    cmd->add_option("--benefits", o->benefits_csv, "groundtruth benefits CSV");
    cmd->add_option("--scores", o->scores_csv, "edge-score CSV to evaluate");
    cmd->add_option("--graph", o->graph_csv, "graph CSV (cluster mode)");
    cmd->add_option("--clusters", o->clusters, "cluster count");
}

ExperimentConfig build_config(const CliOverrides& o, Mode mode) {
    ExperimentConfig c;
    if (o.config_path) {
        std::ifstream in(*o.config_path);
        if (!in) throw DataError("cannot open config file " + *o.config_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        c = parse_config_json(buffer.str());
    }
    c.mode = mode;
    if (o.mode) c.mode = mode_from_string(*o.mode);
    if (o.model) c.graph.model = graph_model_from_string(*o.model);
    if (o.n) c.graph.n = *o.n;
    if (o.p) c.graph.p = *o.p;
    if (o.k) c.graph.k = *o.k;
    if (o.m) c.graph.m = *o.m;
    if (o.k_games) c.k_games = *o.k_games;
    if (o.rho) c.rho = parse_value_list(*o.rho);
    if (o.sign) c.sign = sign_from_string(*o.sign);
    if (o.regime) c.regime = benefit_kind_from_string(*o.regime);
    if (o.band) {
        auto band = parse_value_list(*o.band);
        if (band.size() != 2) throw ParamError("band: expected lo,hi");
        c.band_lo = static_cast<int>(band[0]);
        c.band_hi = static_cast<int>(band[1]);
    }
    if (o.noise_std) c.noise_std = parse_value_list(*o.noise_std);
    if (o.algorithm) c.algorithm = algorithm_from_string(*o.algorithm);
    if (o.theta1) c.theta1 = parse_value_list(*o.theta1);
    if (o.theta2) c.theta2 = parse_value_list(*o.theta2);
    if (o.lambda) c.lambda = parse_value_list(*o.lambda);
    if (o.beta) c.beta = parse_value_list(*o.beta);
    if (o.repeats) c.repeats = *o.repeats;
    if (o.seed) c.seed = *o.seed;
    if (o.threads) c.threads = *o.threads;
    if (o.output) c.output = *o.output;
    if (o.actions_csv) c.actions_csv = *o.actions_csv;
    if (o.truth_csv) c.truth_csv = *o.truth_csv;
    if (o.benefits_csv) c.benefits_csv = *o.benefits_csv;
    if (o.scores_csv) c.scores_csv = *o.scores_csv;
    if (o.graph_csv) c.graph_csv = *o.graph_csv;
    if (o.clusters) c.clusters = *o.clusters;
    return c;
}

std::filesystem::path ensure_output_dir(const ExperimentConfig& c) {
    std::filesystem::path dir(c.output.empty() ? "." : c.output);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec && !std::filesystem::is_directory(dir)) {
        throw DataError("cannot create output directory " + dir.string());
    }
    return dir;
}

int cmd_simulate(const ExperimentConfig& config) {
    config.validate();
    auto dir = ensure_output_dir(config);
    BenefitRegime regime{config.regime, config.band_lo, config.band_hi,
                         config.noise_std.front()};
    Dataset data = simulate_dataset(config.graph, config.k_games, config.rho.front(),
                                    config.sign, regime, config.seed);
    write_matrix_csv((dir / "graph.csv").string(), data.graph.weights());
    write_matrix_csv((dir / "actions.csv").string(), data.actions);
    write_matrix_csv((dir / "benefits.csv").string(), data.benefits);

    nlohmann::json meta;
    meta["model"] = to_string(config.graph.model);
    meta["n"] = config.graph.n;
    meta["k_games"] = config.k_games;
    meta["rho"] = config.rho.front();
    meta["beta"] = data.beta;
    meta["sign"] = to_string(config.sign);
    meta["regime"] = to_string(config.regime);
    meta["noise_std"] = config.noise_std.front();
    meta["seed"] = config.seed;
    write_text_file((dir / "meta.json").string(), meta.dump(2));
    std::cout << "simulated " << to_string(config.graph.model) << " n=" << config.graph.n
              << " K=" << config.k_games << " beta=" << data.beta << " -> " << dir.string()
              << "\n";
    return 0;
}

int cmd_learn(const ExperimentConfig& config) {
    if (config.actions_csv.empty()) throw ParamError("actions: input CSV is required");
    ActionMatrix actions = read_matrix_csv(config.actions_csv);
    Graph truth;
    bool have_truth = !config.truth_csv.empty();
    if (have_truth) truth = load_graph_csv(config.truth_csv);

    LearnResult result = learn_real(actions, have_truth ? &truth : nullptr, config);

    auto dir = ensure_output_dir(config);
    write_matrix_csv((dir / "learned_graph.csv").string(), result.model.graph.weights());
    write_matrix_csv((dir / "learned_benefits.csv").string(), result.model.benefits);
    write_text_file((dir / "model.json").string(),
                    model_metadata_json(result.model, result.chosen));

    nlohmann::json grid = nlohmann::json::array();
    for (const GridOutcome& o : result.outcomes) {
        nlohmann::json j;
        j["beta"] = o.beta;
        j["theta1"] = o.theta1;
        j["theta2"] = o.theta2;
        j["objective"] = o.objective;
        j["converged"] = o.converged;
        j["rho_violation"] = o.rho_violation;
        if (o.auc) j["auc"] = *o.auc;
        grid.push_back(j);
    }
    write_text_file((dir / "grid.json").string(), grid.dump(2));

    if (result.report) {
        write_text_file((dir / "eval.json").string(), eval_report_json(*result.report));
        std::cout << "selected beta=" << result.chosen.beta << " theta1=" << result.chosen.theta1
                  << " theta2=" << result.chosen.theta2 << " auc=" << result.report->auc << "\n";
    } else {
        std::cout << "selected beta=" << result.chosen.beta << " theta1=" << result.chosen.theta1
                  << " theta2=" << result.chosen.theta2
                  << " objective=" << result.model.objective_trace.back() << "\n";
    }
    return 0;
}

int cmd_sweep(const ExperimentConfig& config) {
    SweepResult result = run_sweep(config);
    auto dir = ensure_output_dir(config);
    write_text_file((dir / "results.csv").string(), sweep_rows_csv(result.rows));
    write_text_file((dir / "summary.json").string(), sweep_summary_json(result, config));
    std::cout << result.rows.size() << " rows -> " << (dir / "results.csv").string()
              << "\nbest mean AUC " << result.best.auc_mean << " at rho=" << result.best.rho
              << " theta1=" << result.best.theta1 << " theta2=" << result.best.theta2
              << " lambda=" << result.best.lambda << "\n";
    return 0;
}

int cmd_evaluate(const ExperimentConfig& config) {
    if (config.scores_csv.empty() || config.truth_csv.empty()) {
        throw ParamError("scores/truth: both CSVs are required");
    }
    Eigen::MatrixXd scores = read_matrix_csv(config.scores_csv);
    Graph truth = load_graph_csv(config.truth_csv);

    EvalReport report;
    report.auc = auc_edges(scores, truth);
    count_edge_labels(truth, &report.n_pos, &report.n_neg);
    report.r2 = std::nan("");
    if (!config.benefits_csv.empty() && !config.actions_csv.empty()) {
        // benefits_csv = groundtruth benefits, actions_csv reused as the
        // learned-benefit input for R2
        BenefitMatrix truth_b = read_matrix_csv(config.benefits_csv);
        BenefitMatrix learned_b = read_matrix_csv(config.actions_csv);
        report.r2 = r2_benefits(truth_b, learned_b);
    }
    auto dir = ensure_output_dir(config);
    write_text_file((dir / "eval.json").string(), eval_report_json(report));
    std::cout << eval_report_json(report) << "\n";
    return 0;
}

int cmd_cluster(const ExperimentConfig& config) {
    if (config.graph_csv.empty()) throw ParamError("graph: input CSV is required");
    Graph g = load_graph_csv(config.graph_csv);
    std::vector<int> labels = spectral_cluster(g, config.clusters, config.seed);
    auto dir = ensure_output_dir(config);
    write_labels_csv((dir / "labels.csv").string(), labels);
    std::cout << "wrote " << labels.size() << " labels -> " << (dir / "labels.csv").string()
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear-quadratic network games: simulation, learning, evaluation"};
    app.require_subcommand(1);

    CliOverrides o;
    Mode mode = Mode::sweep;
    auto* sim = app.add_subcommand("simulate", "simulate a synthetic dataset");
    auto* learn = app.add_subcommand("learn", "learn a graph and benefits from actions");
    auto* sweep = app.add_subcommand("sweep", "run a grid x seeds experiment sweep");
    auto* evaluate = app.add_subcommand("evaluate", "score edge predictions against truth");
    auto* cluster = app.add_subcommand("cluster", "spectral-cluster a learned graph");
    for (auto* cmd : {sim, learn, sweep, evaluate, cluster}) add_common_options(cmd, &o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitConfig : 0;
    }

    if (sim->parsed()) mode = Mode::simulate;
    if (learn->parsed()) mode = Mode::learn;
    if (sweep->parsed()) mode = Mode::sweep;
    if (evaluate->parsed()) mode = Mode::evaluate;
    if (cluster->parsed()) mode = Mode::cluster;

    try {
        ExperimentConfig config = build_config(o, mode);
        switch (config.mode) {
            case Mode::simulate: return cmd_simulate(config);
            case Mode::learn: return cmd_learn(config);
            case Mode::sweep: return cmd_sweep(config);
            case Mode::evaluate: return cmd_evaluate(config);
            case Mode::cluster: return cmd_cluster(config);
        }
    } catch (const ParamError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
