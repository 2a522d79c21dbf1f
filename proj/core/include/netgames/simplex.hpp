#pragma once

#include <Eigen/Dense>

#include "netgames/graph.hpp"

namespace netgames {

/// Euclidean projection of v onto the scaled simplex {x >= 0, sum x = total},
/// by the exact sort-based algorithm, O(m log m).
Eigen::VectorXd project_simplex(const Eigen::VectorXd& v, double total);

/// Euclidean projection of a candidate adjacency onto the feasible graph set
/// {symmetric, nonnegative, zero diagonal, sum of all entries = n}. A
/// non-symmetric candidate is symmetrized by averaging first. Throws
/// ParamError for n < 2 (no free entries).
Graph project_feasible(const Eigen::MatrixXd& candidate);

/// The uniform feasible graph: every off-diagonal entry 1/(n-1). It is the
/// minimum-Frobenius-norm point of the feasible set.
Graph uniform_feasible_graph(int n);

}  // namespace netgames
