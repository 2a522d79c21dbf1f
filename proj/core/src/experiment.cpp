#include "netgames/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "netgames/baselines.hpp"
#include "netgames/rng.hpp"

namespace netgames {

std::string to_string(Mode m) {
    switch (m) {
        case Mode::simulate: return "simulate";
        case Mode::learn: return "learn";
        case Mode::sweep: return "sweep";
        case Mode::evaluate: return "evaluate";
        case Mode::cluster: return "cluster";
    }
    return "?";
}

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::alg1: return "alg1";
        case Algorithm::alg2: return "alg2";
        case Algorithm::correlation: return "correlation";
        case Algorithm::glasso: return "glasso";
    }
    return "?";
}

std::string to_string(GraphModel m) {
    switch (m) {
        case GraphModel::ER: return "ER";
        case GraphModel::WS: return "WS";
        case GraphModel::BA: return "BA";
    }
    return "?";
}

std::string to_string(GameSign s) {
    return s == GameSign::complement ? "complement" : "substitute";
}

std::string to_string(BenefitKind k) {
    switch (k) {
        case BenefitKind::independent: return "independent";
        case BenefitKind::homophilous: return "homophilous";
        case BenefitKind::bandlimited: return "bandlimited";
    }
    return "?";
}

Mode mode_from_string(const std::string& s) {
    if (s == "simulate") return Mode::simulate;
    if (s == "learn") return Mode::learn;
    if (s == "sweep") return Mode::sweep;
    if (s == "evaluate") return Mode::evaluate;
    if (s == "cluster") return Mode::cluster;
    throw ParamError("mode: expected simulate|learn|sweep|evaluate|cluster, got '" + s + "'");
}

Algorithm algorithm_from_string(const std::string& s) {
    if (s == "alg1") return Algorithm::alg1;
    if (s == "alg2") return Algorithm::alg2;
    if (s == "correlation") return Algorithm::correlation;
    if (s == "glasso") return Algorithm::glasso;
    throw ParamError("algorithm: expected alg1|alg2|correlation|glasso, got '" + s + "'");
}

GraphModel graph_model_from_string(const std::string& s) {
    if (s == "ER" || s == "er") return GraphModel::ER;
    if (s == "WS" || s == "ws") return GraphModel::WS;
    if (s == "BA" || s == "ba") return GraphModel::BA;
    throw ParamError("model: expected ER|WS|BA, got '" + s + "'");
}

GameSign sign_from_string(const std::string& s) {
    if (s == "complement") return GameSign::complement;
    if (s == "substitute") return GameSign::substitute;
    throw ParamError("sign: expected complement|substitute, got '" + s + "'");
}

BenefitKind benefit_kind_from_string(const std::string& s) {
    if (s == "independent") return BenefitKind::independent;
    if (s == "homophilous") return BenefitKind::homophilous;
    if (s == "bandlimited") return BenefitKind::bandlimited;
    throw ParamError("regime: expected independent|homophilous|bandlimited, got '" + s + "'");
}

SolverParams ExperimentConfig::solver_base() const {
    SolverParams params;
    params.seed = derive_seed(seed, 0x50f7);
    return params;
}

void ExperimentConfig::validate() const {
    if (repeats < 1) throw ParamError("repeats: must be >= 1");
    if (k_games < 1) throw ParamError("k_games: must be >= 1");
    if (graph.n < 2) throw ParamError("n: must be >= 2");
    if (rho.empty()) throw ParamError("rho: grid must be non-empty");
    for (double r : rho) {
        if (r <= 0.0 || r >= 1.0) throw ParamError("rho: every value must lie in (0,1)");
    }
    if (noise_std.empty()) throw ParamError("noise_std: grid must be non-empty");
    for (double s : noise_std) {
        if (s < 0.0) throw ParamError("noise_std: values must be >= 0");
    }
    if (theta1.empty()) throw ParamError("theta1: grid must be non-empty");
    if (theta2.empty()) throw ParamError("theta2: grid must be non-empty");
    if (lambda.empty()) throw ParamError("lambda: grid must be non-empty");
    for (double t : theta1) {
        if (t < 0.0) throw ParamError("theta1: values must be >= 0");
    }
    for (double t : theta2) {
        if (t < 0.0) throw ParamError("theta2: values must be >= 0");
    }
    for (double l : lambda) {
        if (l < 0.0) throw ParamError("lambda: values must be >= 0");
    }
    if (regime == BenefitKind::bandlimited &&
        (band_lo < 1 || band_lo > band_hi || band_hi > graph.n)) {
        throw ParamError("band: must satisfy 1 <= lo <= hi <= n");
    }
    if (threads < 0) throw ParamError("threads: must be >= 0");
    if (clusters < 2) throw ParamError("clusters: must be >= 2");
}

namespace {

std::vector<double> number_list(const nlohmann::json& v, const std::string& key) {
    std::vector<double> out;
    if (v.is_array()) {
        for (const auto& e : v) {
            if (!e.is_number()) throw ParamError(key + ": expected numbers");
            out.push_back(e.get<double>());
        }
    } else if (v.is_number()) {
        out.push_back(v.get<double>());
    } else {
        throw ParamError(key + ": expected a number or an array of numbers");
    }
    return out;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

ExperimentConfig parse_config_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParamError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParamError("config: top level must be an object");

    ExperimentConfig c;
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "mode") c.mode = mode_from_string(value.get<std::string>());
            else if (key == "model") c.graph.model = graph_model_from_string(value.get<std::string>());
            else if (key == "n") c.graph.n = value.get<int>();
            else if (key == "p") c.graph.p = value.get<double>();
            else if (key == "k") c.graph.k = value.get<int>();
            else if (key == "m") c.graph.m = value.get<int>();
            else if (key == "k_games") c.k_games = value.get<int>();
            else if (key == "rho") c.rho = number_list(value, key);
            else if (key == "sign") c.sign = sign_from_string(value.get<std::string>());
            else if (key == "regime") c.regime = benefit_kind_from_string(value.get<std::string>());
            else if (key == "band") {
                auto band = number_list(value, key);
                if (band.size() != 2) throw ParamError("band: expected [lo, hi]");
                c.band_lo = static_cast<int>(band[0]);
                c.band_hi = static_cast<int>(band[1]);
            }
            else if (key == "noise_std") c.noise_std = number_list(value, key);
            else if (key == "algorithm") c.algorithm = algorithm_from_string(value.get<std::string>());
            else if (key == "theta1") c.theta1 = number_list(value, key);
            else if (key == "theta2") c.theta2 = number_list(value, key);
            else if (key == "lambda") c.lambda = number_list(value, key);
            else if (key == "beta") c.beta = number_list(value, key);
            else if (key == "repeats") c.repeats = value.get<int>();
            else if (key == "seed") c.seed = value.get<std::uint64_t>();
            else if (key == "threads") c.threads = value.get<int>();
            else if (key == "output") c.output = value.get<std::string>();
            else if (key == "actions_csv") c.actions_csv = value.get<std::string>();
            else if (key == "truth_csv") c.truth_csv = value.get<std::string>();
            else if (key == "benefits_csv") c.benefits_csv = value.get<std::string>();
            else if (key == "scores_csv") c.scores_csv = value.get<std::string>();
            else if (key == "graph_csv") c.graph_csv = value.get<std::string>();
            else if (key == "clusters") c.clusters = value.get<int>();
            else throw ParamError("config: unknown key '" + key + "'");
        } catch (const nlohmann::json::exception&) {
            throw ParamError("config: bad value for key '" + key + "'");
        }
    }
    return c;
}

namespace {

struct GridPoint {
    double rho = 0.0;
    double noise_std = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;
    double lambda = 0.0;
};

std::vector<GridPoint> enumerate_grid(const ExperimentConfig& c) {
    std::vector<GridPoint> points;
    const bool uses_theta =
        c.algorithm == Algorithm::alg1 || c.algorithm == Algorithm::alg2;
    const bool uses_lambda = c.algorithm == Algorithm::glasso;
    for (double rho : c.rho) {
        for (double noise : c.noise_std) {
            if (uses_theta) {
                for (double t1 : c.theta1)
                    for (double t2 : c.theta2) points.push_back({rho, noise, t1, t2, 0.0});
            } else if (uses_lambda) {
                for (double lam : c.lambda) points.push_back({rho, noise, 0.0, 0.0, lam});
            } else {
                points.push_back({rho, noise, 0.0, 0.0, 0.0});
            }
        }
    }
    return points;
}

SweepResultRow run_one_task(const ExperimentConfig& c, const GridPoint& point, int repeat) {
    SweepResultRow row;
    row.model = to_string(c.graph.model);
    row.algorithm = to_string(c.algorithm);
    row.n = c.graph.n;
    row.k_games = c.k_games;
    row.rho = point.rho;
    row.noise_std = point.noise_std;
    row.theta1 = point.theta1;
    row.theta2 = point.theta2;
    row.lambda = point.lambda;
    row.seed = derive_seed(c.seed, static_cast<std::uint64_t>(repeat));

    auto start = std::chrono::steady_clock::now();
    try {
        BenefitRegime regime;
        regime.kind = c.regime;
        regime.band_lo = c.band_lo;
        regime.band_hi = c.band_hi;
        regime.noise_std = point.noise_std;
        Dataset data =
            simulate_dataset(c.graph, c.k_games, point.rho, c.sign, regime, row.seed);
        row.beta = data.beta;

        switch (c.algorithm) {
            case Algorithm::alg1:
            case Algorithm::alg2: {
                SolverParams params = c.solver_base();
                params.beta = data.beta;
                params.theta1 = point.theta1;
                params.theta2 = point.theta2;
                params.seed = derive_seed(row.seed, 2);
                LearnedModel model = c.algorithm == Algorithm::alg1
                                         ? solve_independent(data.actions, params)
                                         : solve_homophilous(data.actions, params);
                row.auc = auc_edges(model.graph.weights(), data.graph);
                row.r2 = r2_benefits(data.benefits, model.benefits);
                row.objective = model.objective_trace.back();
                row.iterations = model.iterations;
                row.converged = model.converged;
                break;
            }
            case Algorithm::correlation: {
                CorrelationScores scores = sample_correlation(data.actions);
                row.auc = auc_edges(scores.scores, data.graph);
                row.converged = true;
                break;
            }
            case Algorithm::glasso: {
                GlassoResult glasso = graphical_lasso(data.actions, point.lambda);
                row.auc = auc_edges(glasso.scores, data.graph);
                row.objective = glasso.objective;
                row.iterations = glasso.iterations;
                row.converged = glasso.converged;
                break;
            }
        }
    } catch (const std::exception&) {
        row.converged = false;  // failed tasks stay visible as rows
    }
    row.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return row;
}

double percentile(std::vector<double> values, double p) {
    std::sort(values.begin(), values.end());
    if (values.empty()) return std::nan("");
    double h = (static_cast<double>(values.size()) - 1.0) * p;
    std::size_t lo = static_cast<std::size_t>(h);
    double frac = h - static_cast<double>(lo);
    if (lo + 1 >= values.size()) return values.back();
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

void run_tasks_parallel(int n_tasks, int threads, const std::function<void(int)>& task) {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    int n_threads = threads > 0 ? threads : std::max(hw, 1);
    n_threads = std::min(n_threads, n_tasks);
    if (n_threads <= 1) {
        for (int t = 0; t < n_tasks; ++t) task(t);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int w = 0; w < n_threads; ++w) {
        pool.emplace_back([&]() {
            for (int t = next.fetch_add(1); t < n_tasks; t = next.fetch_add(1)) task(t);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

SweepResult run_sweep(const ExperimentConfig& config) {
    config.validate();
    std::vector<GridPoint> grid = enumerate_grid(config);
    const int n_points = static_cast<int>(grid.size());
    const int n_tasks = n_points * config.repeats;

    SweepResult result;
    result.rows.resize(n_tasks);
    // task index -> (grid point, repeat) in canonical order; slots make the
    // output independent of scheduling
    run_tasks_parallel(n_tasks, config.threads, [&](int t) {
        int point_idx = t / config.repeats;
        int repeat = t % config.repeats;
        result.rows[t] = run_one_task(config, grid[point_idx], repeat);
    });

    for (int pt = 0; pt < n_points; ++pt) {
        SweepSummaryPoint s;
        s.rho = grid[pt].rho;
        s.noise_std = grid[pt].noise_std;
        s.theta1 = grid[pt].theta1;
        s.theta2 = grid[pt].theta2;
        s.lambda = grid[pt].lambda;
        std::vector<double> aucs, r2s;
        for (int r = 0; r < config.repeats; ++r) {
            const SweepResultRow& row = result.rows[pt * config.repeats + r];
            if (row.auc) aucs.push_back(*row.auc);
            if (row.r2) r2s.push_back(*row.r2);
        }
        if (!aucs.empty()) {
            s.auc_mean = std::accumulate(aucs.begin(), aucs.end(), 0.0) /
                         static_cast<double>(aucs.size());
            s.auc_median = percentile(aucs, 0.5);
            s.auc_q25 = percentile(aucs, 0.25);
            s.auc_q75 = percentile(aucs, 0.75);
        } else {
            s.auc_mean = s.auc_median = s.auc_q25 = s.auc_q75 = std::nan("");
        }
        s.r2_mean = r2s.empty() ? std::nan("")
                                : std::accumulate(r2s.begin(), r2s.end(), 0.0) /
                                      static_cast<double>(r2s.size());
        result.summary.push_back(s);
    }

    result.best = result.summary.empty() ? SweepSummaryPoint{} : result.summary.front();
    for (const SweepSummaryPoint& s : result.summary) {
        if (!std::isnan(s.auc_mean) &&
            (std::isnan(result.best.auc_mean) || s.auc_mean > result.best.auc_mean)) {
            result.best = s;
        }
    }
    return result;
}

std::string sweep_rows_csv(const std::vector<SweepResultRow>& rows) {
    std::ostringstream out;
    out << "model,algorithm,n,K,rho,noise_std,theta1,theta2,lambda,beta,seed,auc,r2,"
           "objective,iterations,converged,runtime_ms\n";
    for (const SweepResultRow& r : rows) {
        out << r.model << ',' << r.algorithm << ',' << r.n << ',' << r.k_games << ','
            << format_double(r.rho) << ',' << format_double(r.noise_std) << ','
            << format_double(r.theta1) << ',' << format_double(r.theta2) << ','
            << format_double(r.lambda) << ',' << format_double(r.beta) << ',' << r.seed
            << ',';
        if (r.auc) out << format_double(*r.auc);
        out << ',';
        if (r.r2) out << format_double(*r.r2);
        out << ',';
        if (r.objective) out << format_double(*r.objective);
        out << ',' << r.iterations << ',' << (r.converged ? "true" : "false") << ','
            << format_double(r.runtime_ms) << '\n';
    }
    return out.str();
}

namespace {

nlohmann::json summary_point_json(const SweepSummaryPoint& s) {
    nlohmann::json j;
    j["rho"] = s.rho;
    j["noise_std"] = s.noise_std;
    j["theta1"] = s.theta1;
    j["theta2"] = s.theta2;
    j["lambda"] = s.lambda;
    j["auc_mean"] = s.auc_mean;
    j["auc_median"] = s.auc_median;
    j["auc_q25"] = s.auc_q25;
    j["auc_q75"] = s.auc_q75;
    j["r2_mean"] = s.r2_mean;
    return j;
}

}  // namespace

std::string sweep_summary_json(const SweepResult& result, const ExperimentConfig& config) {
    nlohmann::json j;
    j["model"] = to_string(config.graph.model);
    j["algorithm"] = to_string(config.algorithm);
    j["n"] = config.graph.n;
    j["k_games"] = config.k_games;
    j["regime"] = to_string(config.regime);
    j["repeats"] = config.repeats;
    j["seed"] = config.seed;
    j["points"] = nlohmann::json::array();
    for (const SweepSummaryPoint& s : result.summary) j["points"].push_back(summary_point_json(s));
    j["best"] = {{to_string(config.algorithm), summary_point_json(result.best)}};
    return j.dump(2);
}

LearnResult learn_real(const ActionMatrix& actions, const Graph* truth,
                       const ExperimentConfig& config) {
    if (config.algorithm != Algorithm::alg1 && config.algorithm != Algorithm::alg2) {
        throw ParamError("algorithm: learn mode requires alg1 or alg2");
    }
    if (config.beta.empty()) throw ParamError("beta: grid must be non-empty in learn mode");
    if (truth && truth->n() != actions.rows()) {
        throw ParamError("truth_csv: node count does not match actions");
    }

    struct Point {
        double beta, theta1, theta2;
    };
    std::vector<Point> grid;
    for (double b : config.beta)
        for (double t1 : config.theta1)
            for (double t2 : config.theta2) grid.push_back({b, t1, t2});

    LearnResult result;
    result.outcomes.resize(grid.size());

    auto solve_point = [&](const Point& pt) {
        SolverParams params = config.solver_base();
        params.beta = pt.beta;
        params.theta1 = pt.theta1;
        params.theta2 = pt.theta2;
        return config.algorithm == Algorithm::alg1 ? solve_independent(actions, params)
                                                   : solve_homophilous(actions, params);
    };

    run_tasks_parallel(static_cast<int>(grid.size()), config.threads, [&](int t) {
        const Point& pt = grid[t];
        GridOutcome outcome;
        outcome.beta = pt.beta;
        outcome.theta1 = pt.theta1;
        outcome.theta2 = pt.theta2;
        LearnedModel model = solve_point(pt);
        outcome.objective = model.objective_trace.back();
        outcome.converged = model.converged;
        outcome.rho_violation =
            std::abs(pt.beta) * spectral_radius(model.graph.weights()) >= 1.0;
        if (truth) outcome.auc = auc_edges(model.graph.weights(), *truth);
        result.outcomes[t] = outcome;
    });

    // prefer points satisfying the equilibrium assumption
    int best_idx = -1;
    auto better = [&](int a, int b) {  // is a better than b
        const GridOutcome& oa = result.outcomes[a];
        const GridOutcome& ob = result.outcomes[b];
        if (oa.rho_violation != ob.rho_violation) return !oa.rho_violation;
        if (truth) return *oa.auc > *ob.auc;
        return oa.objective < ob.objective;
    };
    for (int i = 0; i < static_cast<int>(grid.size()); ++i) {
        if (best_idx < 0 || better(i, best_idx)) best_idx = i;
    }

    result.model = solve_point(grid[best_idx]);
    result.chosen = config.solver_base();
    result.chosen.beta = grid[best_idx].beta;
    result.chosen.theta1 = grid[best_idx].theta1;
    result.chosen.theta2 = grid[best_idx].theta2;

    if (truth) {
        EvalReport report;
        report.auc = *result.outcomes[best_idx].auc;
        report.r2 = std::nan("");  // no groundtruth benefits on real data
        count_edge_labels(*truth, &report.n_pos, &report.n_neg);
        result.report = report;
    }
    return result;
}

}  // namespace netgames
