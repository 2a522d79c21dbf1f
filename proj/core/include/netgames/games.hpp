#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "netgames/graph.hpp"

namespace netgames {

/// N x K matrix, column k = marginal benefits of game k.
using BenefitMatrix = Eigen::MatrixXd;
/// N x K matrix, column k = equilibrium actions of game k.
using ActionMatrix = Eigen::MatrixXd;

enum class BenefitKind { independent, homophilous, bandlimited };

/// How the per-game marginal benefits are drawn.
///  - independent: iid standard normal entries.
///  - homophilous: N(0, pinv(L)) via spectral sampling on the groundtruth
///    Laplacian (zero on the null space).
///  - bandlimited: unit-norm combination of Laplacian eigenvectors band_lo..
///    band_hi (1-based, ascending eigenvalues).
/// Gaussian noise of standard deviation noise_std is added entrywise last.
struct BenefitRegime {
    BenefitKind kind = BenefitKind::independent;
    int band_lo = 1;
    int band_hi = 1;
    double noise_std = 0.0;
};

/// Per-player payoff u_i = b_i a_i - a_i^2/2 + beta a_i (G a)_i.
Eigen::VectorXd payoff(const Graph& g, double beta, const Eigen::VectorXd& b,
                       const Eigen::VectorXd& a);

/// Solves (I - beta G) a = b for one game. Requires rho(beta G) < 1; throws
/// EquilibriumError carrying the computed rho otherwise.
Eigen::VectorXd equilibrium(const Graph& g, double beta, const Eigen::VectorXd& b);

/// Same system, all K columns at once, reusing a single factorization.
ActionMatrix equilibrium_all(const Graph& g, double beta, const BenefitMatrix& b);

/// Draws an N x K benefit matrix under the given regime. Deterministic given seed.
BenefitMatrix sample_benefits(const Graph& g, int k_games, const BenefitRegime& regime,
                              std::uint64_t seed);

/// Fully simulated instance: graph, scale beta, benefits and equilibrium actions.
struct Dataset {
    Graph graph;
    double beta = 0.0;
    BenefitMatrix benefits;
    ActionMatrix actions;
};

/// generate_graph -> beta_for_rho -> sample_benefits -> column equilibria.
/// Graph and benefit draws use seeds derived from `seed` (streams 0 and 1).
Dataset simulate_dataset(const GraphModelParams& params, int k_games, double target_rho,
                         GameSign sign, const BenefitRegime& regime, std::uint64_t seed);

}  // namespace netgames
