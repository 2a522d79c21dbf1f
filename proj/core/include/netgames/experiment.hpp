#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netgames/eval.hpp"
#include "netgames/games.hpp"
#include "netgames/graph.hpp"
#include "netgames/inference.hpp"

namespace netgames {

enum class Mode { simulate, learn, sweep, evaluate, cluster };
enum class Algorithm { alg1, alg2, correlation, glasso };

std::string to_string(Mode m);
std::string to_string(Algorithm a);
std::string to_string(GraphModel m);
std::string to_string(GameSign s);
std::string to_string(BenefitKind k);
Mode mode_from_string(const std::string& s);
Algorithm algorithm_from_string(const std::string& s);
GraphModel graph_model_from_string(const std::string& s);
GameSign sign_from_string(const std::string& s);
BenefitKind benefit_kind_from_string(const std::string& s);

/// Full experiment description; also the schema of the JSON config file.
/// Hyperparameter grids are given as explicit value lists (log2-spaced by
/// convention). Seeds for every task derive from `seed` alone.
struct ExperimentConfig {
    Mode mode = Mode::sweep;

    GraphModelParams graph;
    int k_games = 50;
    std::vector<double> rho = {0.6};
    GameSign sign = GameSign::complement;
    BenefitKind regime = BenefitKind::independent;
    int band_lo = 1;
    int band_hi = 5;
    std::vector<double> noise_std = {0.0};

    Algorithm algorithm = Algorithm::alg1;
    std::vector<double> theta1 = {1.0};
    std::vector<double> theta2 = {1.0};
    std::vector<double> lambda = {1.0};
    std::vector<double> beta = {};  // learn mode: grid to search

    int repeats = 1;
    std::uint64_t seed = 0;
    int threads = 0;  // 0 = hardware concurrency
    std::string output = ".";

    // learn / evaluate / cluster inputs
    std::string actions_csv;
    std::string truth_csv;
    std::string benefits_csv;
    std::string scores_csv;
    std::string graph_csv;
    int clusters = 3;

    SolverParams solver_base() const;
    void validate() const;  // throws ParamError naming the offending field
};

/// Parses the JSON config document; unknown keys are rejected so typos
/// surface as config errors.
ExperimentConfig parse_config_json(const std::string& text);

/// One row of results.csv: a single (grid point, seed) task.
struct SweepResultRow {
    std::string model;
    std::string algorithm;
    int n = 0;
    int k_games = 0;
    double rho = 0.0;
    double noise_std = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;
    double lambda = 0.0;
    double beta = 0.0;
    std::uint64_t seed = 0;
    std::optional<double> auc;
    std::optional<double> r2;
    std::optional<double> objective;
    int iterations = 0;
    bool converged = false;
    double runtime_ms = 0.0;
};

struct SweepSummaryPoint {
    double rho = 0.0;
    double noise_std = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;
    double lambda = 0.0;
    double auc_mean = 0.0;
    double auc_median = 0.0;
    double auc_q25 = 0.0;
    double auc_q75 = 0.0;
    double r2_mean = 0.0;
};

struct SweepResult {
    std::vector<SweepResultRow> rows;
    std::vector<SweepSummaryPoint> summary;
    SweepSummaryPoint best;  // grid point with the highest mean AUC
};

/// Executes the Cartesian product of grids x repeats. Per-repeat datasets are
/// regenerated from seeds derived from (config.seed, repeat), so results are
/// independent of execution order and thread count.
SweepResult run_sweep(const ExperimentConfig& config);

std::string sweep_rows_csv(const std::vector<SweepResultRow>& rows);
std::string sweep_summary_json(const SweepResult& result, const ExperimentConfig& config);

/// Outcome of one grid point in learn_real.
struct GridOutcome {
    double beta = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;
    double objective = 0.0;
    std::optional<double> auc;
    bool converged = false;
    bool rho_violation = false;  // rho(beta * learned G) >= 1
};

struct LearnResult {
    LearnedModel model;
    SolverParams chosen;
    std::optional<EvalReport> report;  // present when a truth graph was given
    std::vector<GridOutcome> outcomes;
};

/// Grid-search (beta x theta1 x theta2) on observed actions. With a truth
/// graph the winner is the best-AUC point; without one, the lowest final
/// objective. Grid points whose learned graph violates rho(beta G) < 1 are
/// flagged and skipped during selection (unless all are flagged).
LearnResult learn_real(const ActionMatrix& actions, const Graph* truth,
                       const ExperimentConfig& config);

}  // namespace netgames
