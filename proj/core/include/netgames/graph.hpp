#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "netgames/errors.hpp"

namespace netgames {

/// Undirected weighted graph over n nodes, stored as a dense symmetric
/// nonnegative adjacency matrix with a zero diagonal. Immutable after
/// construction; safe to share read-only across threads.
class Graph {
public:
    Graph() = default;

    /// Validating constructor: throws DataError unless `weights` is exactly
    /// symmetric with zero diagonal and nonnegative entries.
    explicit Graph(Eigen::MatrixXd weights);

    /// Builds the adjacency from the strict upper triangle packed row-major:
    /// upper[e] is the weight of pair (i,j), i<j, in lexicographic order.
    /// Mirroring makes symmetry exact by construction; negative inputs throw.
    static Graph from_upper(int n, const Eigen::VectorXd& upper);

    int n() const { return static_cast<int>(w_.rows()); }
    const Eigen::MatrixXd& weights() const { return w_; }

    /// Number of node pairs with positive weight.
    int edge_count() const;

    /// Strict upper triangle packed row-major (inverse of from_upper).
    Eigen::VectorXd upper() const;

private:
    Eigen::MatrixXd w_;
};

/// Number of free (strict upper-triangular) entries of an n-node graph.
inline int upper_size(int n) { return n * (n - 1) / 2; }

enum class GraphModel { ER, WS, BA };

/// Parameters of the three random graph models. Only the fields relevant to
/// `model` are read: p for ER (edge probability) and WS (rewiring), k for WS
/// (even ring degree), m for BA (edges per new node).
struct GraphModelParams {
    GraphModel model = GraphModel::ER;
    int n = 20;
    double p = 0.2;
    int k = 4;
    int m = 1;
    std::uint64_t seed = 0;
};

/// Eigendecomposition of a symmetric matrix: eigenvalues ascending,
/// eigenvector columns orthonormal and paired with the eigenvalues.
struct SpectralInfo {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
};

/// Samples a unit-weight graph from the requested model. Deterministic given
/// params.seed. Throws ParamError naming the invalid field.
Graph generate_graph(const GraphModelParams& params);

/// L = D - G with D = diag(row sums). Symmetric positive semidefinite.
Eigen::MatrixXd graph_laplacian(const Graph& g);

/// Eigendecomposition of a symmetric matrix (ascending eigenvalues).
SpectralInfo spectral_decompose(const Eigen::MatrixXd& m);

/// Largest |eigenvalue| of a symmetric matrix. Throws ParamError if the
/// input is not symmetric.
double spectral_radius(const Eigen::MatrixXd& m);

enum class GameSign { complement, substitute };

/// Scale factor beta with rho(beta*G) == target_rho; positive for strategic
/// complements, negative for substitutes. Throws ParamError for an empty
/// graph or target outside (0,1).
double beta_for_rho(const Graph& g, double target_rho, GameSign sign);

/// Ring degree used for WS graphs when none is given: floor(log2(n)) rounded
/// down to the nearest even integer >= 2.
int default_ws_degree(int n);

}  // namespace netgames
