#pragma once

#include <Eigen/Dense>
#include <queue>
#include <random>
#include <vector>

#include "netgames/graph.hpp"

namespace testutil {

/// Random weighted graph: each pair present with probability `density`,
/// weights uniform in (0, 1].
inline netgames::Graph random_weighted_graph(int n, double density, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Eigen::VectorXd upper = Eigen::VectorXd::Zero(netgames::upper_size(n));
    for (int e = 0; e < upper.size(); ++e) {
        if (unif(rng) < density) upper[e] = unif(rng) + 1e-3;
    }
    return netgames::Graph::from_upper(n, upper);
}

inline bool is_connected(const netgames::Graph& g) {
    const int n = g.n();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = true;
    int visited = 1;
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        for (int v = 0; v < n; ++v) {
            if (!seen[v] && g.weights()(u, v) > 0.0) {
                seen[v] = true;
                ++visited;
                frontier.push(v);
            }
        }
    }
    return visited == n;
}

inline Eigen::VectorXd random_vector(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = gauss(rng);
    return v;
}

}  // namespace testutil
