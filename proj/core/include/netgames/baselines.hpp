#pragma once

#include <Eigen/Dense>
#include <vector>

#include "netgames/games.hpp"

namespace netgames {

/// Symmetric n x n edge-score matrix, zero diagonal; higher means more
/// likely edge.
using ScoreMatrix = Eigen::MatrixXd;

struct CorrelationScores {
    ScoreMatrix scores;
    std::vector<int> constant_rows;  // rows whose correlations were undefined
};

/// Pearson correlation between the rows of A. Constant rows get zero scores
/// and are reported in constant_rows instead of failing the whole sweep.
CorrelationScores sample_correlation(const ActionMatrix& a);

struct GlassoResult {
    ScoreMatrix scores;           // |Theta_ij| off-diagonal, zero diagonal
    Eigen::MatrixXd precision;    // positive definite estimate of Theta
    bool converged = false;
    int iterations = 0;
    double objective = 0.0;
};

/// Graphical Lasso on the row covariance of A (shrunk by 1e-6 tr(S)/n on the
/// diagonal): minimizes tr(S Theta) - log det Theta + lambda sum_{i!=j}
/// |Theta_ij| over positive-definite Theta by operator splitting, alternating
/// an eigendecomposition log-det prox with entrywise soft-thresholding of the
/// off-diagonals, to relative primal/dual residual 1e-6 or 5000 iterations.
GlassoResult graphical_lasso(const ActionMatrix& a, double lambda);

/// The splitting objective tr(S Theta) - log det Theta + lambda ||offdiag||_1
/// at a positive definite Theta; used by tests to track descent.
double glasso_objective(const Eigen::MatrixXd& covariance, const Eigen::MatrixXd& theta,
                        double lambda);

/// Row covariance of A as used by graphical_lasso, including the diagonal
/// shrinkage.
Eigen::MatrixXd shrunk_row_covariance(const ActionMatrix& a);

}  // namespace netgames
