#include "netgames/games.hpp"

#include <cmath>
#include <random>
#include <string>

#include "netgames/rng.hpp"

namespace netgames {

namespace {

void check_dims(const Graph& g, const Eigen::VectorXd& v, const char* what) {
    if (v.size() != g.n()) {
        throw ParamError(std::string(what) + ": length does not match node count");
    }
}

// Shared factorization of I - beta*G. The system matrix is SPD whenever
// rho(beta G) < 1, so a Cholesky solve is exact for our use.
class EquilibriumSolver {
public:
    EquilibriumSolver(const Graph& g, double beta) {
        double rho = std::abs(beta) * (g.edge_count() > 0 ? spectral_radius(g.weights()) : 0.0);
        if (rho >= 1.0) {
            throw EquilibriumError(
                "equilibrium: rho(beta G) = " + std::to_string(rho) + " >= 1", rho);
        }
        Eigen::MatrixXd system =
            Eigen::MatrixXd::Identity(g.n(), g.n()) - beta * g.weights();
        llt_.compute(system);
        if (llt_.info() != Eigen::Success) {
            throw NumericalError("equilibrium: factorization of I - beta G failed");
        }
    }

    Eigen::MatrixXd solve(const Eigen::MatrixXd& rhs) const { return llt_.solve(rhs); }

private:
    Eigen::LLT<Eigen::MatrixXd> llt_;
};

}  // namespace

Eigen::VectorXd payoff(const Graph& g, double beta, const Eigen::VectorXd& b,
                       const Eigen::VectorXd& a) {
    check_dims(g, b, "payoff: b");
    check_dims(g, a, "payoff: a");
    Eigen::VectorXd neighbor = g.weights() * a;
    return b.cwiseProduct(a) - 0.5 * a.cwiseProduct(a) +
           beta * a.cwiseProduct(neighbor);
}

Eigen::VectorXd equilibrium(const Graph& g, double beta, const Eigen::VectorXd& b) {
    check_dims(g, b, "equilibrium: b");
    return EquilibriumSolver(g, beta).solve(b);
}

ActionMatrix equilibrium_all(const Graph& g, double beta, const BenefitMatrix& b) {
    if (b.rows() != g.n()) {
        throw ParamError("equilibrium_all: benefit rows do not match node count");
    }
    return EquilibriumSolver(g, beta).solve(b);
}

BenefitMatrix sample_benefits(const Graph& g, int k_games, const BenefitRegime& regime,
                              std::uint64_t seed) {
    const int n = g.n();
    if (k_games < 0) throw ParamError("sample_benefits: game count must be >= 0");
    if (regime.noise_std < 0.0) throw ParamError("sample_benefits: noise_std must be >= 0");

    Rng rng = make_rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    BenefitMatrix b(n, k_games);

    switch (regime.kind) {
        case BenefitKind::independent: {
            for (int k = 0; k < k_games; ++k)
                for (int i = 0; i < n; ++i) b(i, k) = gauss(rng);
            break;
        }
        case BenefitKind::homophilous: {
            // b ~ N(0, pinv(L)): coefficient N(0, 1/lambda) on each eigenvector
            // with lambda above the rank cutoff, zero on the null space.
            SpectralInfo spec = spectral_decompose(graph_laplacian(g));
            for (int k = 0; k < k_games; ++k) {
                Eigen::VectorXd col = Eigen::VectorXd::Zero(n);
                for (int i = 0; i < n; ++i) {
                    if (spec.eigenvalues[i] > 1e-9) {
                        col += (gauss(rng) / std::sqrt(spec.eigenvalues[i])) *
                               spec.eigenvectors.col(i);
                    }
                }
                b.col(k) = col;
            }
            break;
        }
        case BenefitKind::bandlimited: {
            if (regime.band_lo < 1 || regime.band_lo > regime.band_hi ||
                regime.band_hi > n) {
                throw ParamError("sample_benefits: band [lo,hi] must satisfy 1 <= lo <= hi <= n");
            }
            SpectralInfo spec = spectral_decompose(graph_laplacian(g));
            for (int k = 0; k < k_games; ++k) {
                Eigen::VectorXd col = Eigen::VectorXd::Zero(n);
                for (int i = regime.band_lo - 1; i < regime.band_hi; ++i) {
                    col += gauss(rng) * spec.eigenvectors.col(i);
                }
                double norm = col.norm();
                if (norm > 0.0) col /= norm;
                b.col(k) = col;
            }
            break;
        }
    }

    if (regime.noise_std > 0.0) {
        for (int k = 0; k < k_games; ++k)
            for (int i = 0; i < n; ++i) b(i, k) += regime.noise_std * gauss(rng);
    }
    return b;
}

Dataset simulate_dataset(const GraphModelParams& params, int k_games, double target_rho,
                         GameSign sign, const BenefitRegime& regime, std::uint64_t seed) {
    GraphModelParams graph_params = params;
    graph_params.seed = derive_seed(seed, 0);
    Dataset data;
    data.graph = generate_graph(graph_params);
    data.beta = beta_for_rho(data.graph, target_rho, sign);
    data.benefits = sample_benefits(data.graph, k_games, regime, derive_seed(seed, 1));
    data.actions = equilibrium_all(data.graph, data.beta, data.benefits);
    return data;
}

}  // namespace netgames
