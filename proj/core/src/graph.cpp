#include "netgames/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "netgames/rng.hpp"

namespace netgames {

Graph::Graph(Eigen::MatrixXd weights) : w_(std::move(weights)) {
    if (w_.rows() != w_.cols()) {
        throw DataError("Graph: adjacency matrix must be square");
    }
    for (int i = 0; i < w_.rows(); ++i) {
        if (w_(i, i) != 0.0) {
            throw DataError("Graph: nonzero diagonal entry");
        }
        for (int j = i + 1; j < w_.cols(); ++j) {
            if (w_(i, j) != w_(j, i)) {
                throw DataError("Graph: adjacency matrix not symmetric");
            }
            if (w_(i, j) < 0.0 || !std::isfinite(w_(i, j))) {
                throw DataError("Graph: edge weights must be finite and nonnegative");
            }
        }
    }
}

Graph Graph::from_upper(int n, const Eigen::VectorXd& upper) {
    if (n < 1) throw ParamError("from_upper: n must be >= 1");
    if (upper.size() != upper_size(n)) {
        throw ParamError("from_upper: upper triangle has wrong length");
    }
    Graph g;
    g.w_ = Eigen::MatrixXd::Zero(n, n);
    int e = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++e) {
            if (upper[e] < 0.0 || !std::isfinite(upper[e])) {
                throw DataError("from_upper: edge weights must be finite and nonnegative");
            }
            g.w_(i, j) = upper[e];
            g.w_(j, i) = upper[e];
        }
    }
    return g;
}

int Graph::edge_count() const {
    int count = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (w_(i, j) > 0.0) ++count;
    return count;
}

Eigen::VectorXd Graph::upper() const {
    Eigen::VectorXd u(upper_size(n()));
    int e = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j, ++e) u[e] = w_(i, j);
    return u;
}

namespace {

Graph generate_er(int n, double p, Rng& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Eigen::VectorXd upper = Eigen::VectorXd::Zero(upper_size(n));
    for (int e = 0; e < upper.size(); ++e) {
        if (unif(rng) < p) upper[e] = 1.0;
    }
    return Graph::from_upper(n, upper);
}

// Ring lattice of degree k, then each lattice edge (i, i+d) is rewired with
// probability p by replacing the far endpoint with a uniform node, skipping
// self-loops and already-present edges. Edge count is preserved.
Graph generate_ws(int n, int k, double p, Rng& rng) {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int d = 1; d <= k / 2; ++d) {
            int j = (i + d) % n;
            w(i, j) = 1.0;
            w(j, i) = 1.0;
        }
    }
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::uniform_int_distribution<int> node(0, n - 1);
    for (int i = 0; i < n; ++i) {
        for (int d = 1; d <= k / 2; ++d) {
            int j = (i + d) % n;
            if (unif(rng) >= p) continue;
            // a node of full degree cannot be rewired anywhere
            if (w.row(i).sum() >= static_cast<double>(n - 1)) continue;
            int t = node(rng);
            while (t == i || w(i, t) > 0.0) t = node(rng);
            w(i, j) = 0.0;
            w(j, i) = 0.0;
            w(i, t) = 1.0;
            w(t, i) = 1.0;
        }
    }
    return Graph(std::move(w));
}

// Preferential attachment via the repeated-endpoints list: every edge pushes
// both endpoints, so a uniform draw from the list is degree-proportional.
Graph generate_ba(int n, int m, Rng& rng) {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    std::vector<int> endpoints;
    auto add_edge = [&](int a, int b) {
        w(a, b) = 1.0;
        w(b, a) = 1.0;
        endpoints.push_back(a);
        endpoints.push_back(b);
    };
    add_edge(0, 1);
    for (int v = 2; v < n; ++v) {
        std::vector<int> targets;
        if (v == 2) {
            // first attachment is forced: with two seed nodes of equal degree
            // there is no preference to express
            for (int t = 0; t < std::min(m, v); ++t) targets.push_back(t);
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
            int want = std::min(m, v);
            while (static_cast<int>(targets.size()) < want) {
                int t = endpoints[pick(rng)];
                if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
                    targets.push_back(t);
                }
            }
        }
        for (int t : targets) add_edge(v, t);
    }
    return Graph(std::move(w));
}

}  // namespace

Graph generate_graph(const GraphModelParams& params) {
    if (params.n < 2) throw ParamError("generate_graph: n must be >= 2");
    Rng rng = make_rng(params.seed);
    switch (params.model) {
        case GraphModel::ER:
            if (params.p < 0.0 || params.p > 1.0) {
                throw ParamError("generate_graph: p must lie in [0,1]");
            }
            return generate_er(params.n, params.p, rng);
        case GraphModel::WS:
            if (params.k < 2 || params.k % 2 != 0 || params.k >= params.n) {
                throw ParamError("generate_graph: k must be even, >= 2 and < n");
            }
            if (params.p < 0.0 || params.p > 1.0) {
                throw ParamError("generate_graph: p must lie in [0,1]");
            }
            return generate_ws(params.n, params.k, params.p, rng);
        case GraphModel::BA:
            if (params.m < 1 || params.m >= params.n) {
                throw ParamError("generate_graph: m must satisfy 1 <= m < n");
            }
            return generate_ba(params.n, params.m, rng);
    }
    throw ParamError("generate_graph: unknown model");
}

Eigen::MatrixXd graph_laplacian(const Graph& g) {
    const Eigen::MatrixXd& w = g.weights();
    Eigen::MatrixXd lap = -w;
    for (int i = 0; i < g.n(); ++i) lap(i, i) = w.row(i).sum();
    return lap;
}

SpectralInfo spectral_decompose(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    if (es.info() != Eigen::Success) {
        throw NumericalError("spectral_decompose: eigensolver failed");
    }
    return SpectralInfo{es.eigenvalues(), es.eigenvectors()};
}

double spectral_radius(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw ParamError("spectral_radius: matrix must be square");
    double scale = m.cwiseAbs().maxCoeff();
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + scale)) {
        throw ParamError("spectral_radius: matrix must be symmetric");
    }
    if (m.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw NumericalError("spectral_radius: eigensolver failed");
    }
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

double beta_for_rho(const Graph& g, double target_rho, GameSign sign) {
    if (target_rho <= 0.0 || target_rho >= 1.0) {
        throw ParamError("beta_for_rho: target_rho must lie in (0,1)");
    }
    if (g.edge_count() == 0) {
        throw ParamError("beta_for_rho: graph has no edges, spectral radius is zero");
    }
    double rho = spectral_radius(g.weights());
    double beta = target_rho / rho;
    return sign == GameSign::complement ? beta : -beta;
}

int default_ws_degree(int n) {
    if (n < 3) throw ParamError("default_ws_degree: n must be >= 3");
    int k = static_cast<int>(std::floor(std::log2(static_cast<double>(n))));
    if (k % 2 != 0) --k;
    return std::max(k, 2);
}

}  // namespace netgames
