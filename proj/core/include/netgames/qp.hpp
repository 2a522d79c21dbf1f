#pragma once

#include <Eigen/Dense>
#include <vector>

#include "netgames/graph.hpp"

namespace netgames {

/// Quadratic objective over the feasible graph set, in the form shared by
/// both learning problems:
///
///   phi(G) = c0 + <G, lin> + q * tr(G P G) + t1 * ||G||_F^2
///
/// with lin, p symmetric and p positive semidefinite. G is parameterized by
/// its strict upper triangle x (each entry appearing twice in the matrix),
/// and gradients below are with respect to x.
struct GraphQuadratic {
    double c0 = 0.0;
    Eigen::MatrixXd lin;
    double q = 0.0;
    Eigen::MatrixXd p;
    double t1 = 0.0;

    double value(const Eigen::MatrixXd& g) const;
    /// Full-matrix gradient d(phi)/dG treating every entry as independent.
    Eigen::MatrixXd grad_matrix(const Eigen::MatrixXd& g) const;
};

struct QpResult {
    Eigen::VectorXd x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
    std::vector<double> trace;
};

struct QpOptions {
    double rel_tol = 1e-8;      // relative objective-change tolerance
    double pg_tol = 1e-7;       // projected-gradient residual tolerance
    int max_iter = 20000;
    bool record_trace = true;
};

/// Minimizes a GraphQuadratic over {x >= 0, sum x = n/2} by accelerated
/// projected gradient: momentum with restart on objective increase, and
/// backtracking from a power-iteration Lipschitz estimate. The recorded
/// trace is non-increasing.
QpResult minimize_feasible_qp(const GraphQuadratic& problem, int n,
                              const Eigen::VectorXd& x0, const QpOptions& options);

/// Scatter the packed upper triangle into a symmetric zero-diagonal matrix.
Eigen::MatrixXd matrix_from_upper(int n, const Eigen::VectorXd& x);

/// Gradient with respect to the packed upper triangle: each free entry
/// appears at (i,j) and (j,i), so x-gradients are the paired matrix sums.
Eigen::VectorXd upper_gradient(const Eigen::MatrixXd& grad_matrix);

/// ||x - P(x - eta g)|| / eta, the projected-gradient residual used for
/// termination and first-order optimality checks.
double projected_gradient_residual(const Eigen::VectorXd& x, const Eigen::VectorXd& grad,
                                   double total, double eta);

}  // namespace netgames
