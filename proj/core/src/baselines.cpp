#include "netgames/baselines.hpp"

#include <cmath>

namespace netgames {

CorrelationScores sample_correlation(const ActionMatrix& a) {
    const int n = static_cast<int>(a.rows());
    const int k = static_cast<int>(a.cols());
    if (k < 2) throw ParamError("sample_correlation: need at least 2 games");

    Eigen::MatrixXd centered = a.colwise() - a.rowwise().mean();
    Eigen::VectorXd sd = centered.rowwise().norm();

    CorrelationScores result;
    result.scores = Eigen::MatrixXd::Zero(n, n);
    std::vector<bool> constant(n, false);
    for (int i = 0; i < n; ++i) {
        if (sd[i] <= 1e-30) {
            constant[i] = true;
            result.constant_rows.push_back(i);
        }
    }
    for (int i = 0; i < n; ++i) {
        if (constant[i]) continue;
        for (int j = i + 1; j < n; ++j) {
            if (constant[j]) continue;
            double r = centered.row(i).dot(centered.row(j)) / (sd[i] * sd[j]);
            result.scores(i, j) = r;
            result.scores(j, i) = r;
        }
    }
    return result;
}

Eigen::MatrixXd shrunk_row_covariance(const ActionMatrix& a) {
    const int n = static_cast<int>(a.rows());
    const int k = static_cast<int>(a.cols());
    if (k < 2) throw ParamError("graphical_lasso: need at least 2 games");
    Eigen::MatrixXd centered = a.colwise() - a.rowwise().mean();
    Eigen::MatrixXd s = (centered * centered.transpose()) / static_cast<double>(k);
    s.diagonal().array() += 1e-6 * s.trace() / static_cast<double>(n);
    return s;
}

double glasso_objective(const Eigen::MatrixXd& covariance, const Eigen::MatrixXd& theta,
                        double lambda) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(theta, Eigen::EigenvaluesOnly);
    double logdet = es.eigenvalues().array().log().sum();
    double l1_off = theta.cwiseAbs().sum() - theta.diagonal().cwiseAbs().sum();
    return (covariance * theta).trace() - logdet + lambda * l1_off;
}

GlassoResult graphical_lasso(const ActionMatrix& a, double lambda) {
    if (lambda < 0.0) throw ParamError("graphical_lasso: lambda must be >= 0");
    const int n = static_cast<int>(a.rows());
    Eigen::MatrixXd s = shrunk_row_covariance(a);

    const double rho = 1.0;  // splitting penalty
    const double tol = 1e-6;
    const int max_iter = 5000;

    Eigen::MatrixXd theta = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd z = theta;
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n, n);

    GlassoResult result;
    for (int iter = 1; iter <= max_iter; ++iter) {
        // log-det prox: eigendecompose rho(Z - U) - S, lift eigenvalues to
        // the positive root of rho t^2 - d t - 1 = 0
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho * (z - u) - s);
        Eigen::VectorXd d = es.eigenvalues();
        Eigen::VectorXd lifted(n);
        for (int i = 0; i < n; ++i) {
            lifted[i] = (d[i] + std::sqrt(d[i] * d[i] + 4.0 * rho)) / (2.0 * rho);
        }
        theta = es.eigenvectors() * lifted.asDiagonal() * es.eigenvectors().transpose();
        theta = 0.5 * (theta + theta.transpose());

        // soft-threshold off-diagonals; the diagonal is unpenalized
        Eigen::MatrixXd z_prev = z;
        Eigen::MatrixXd v = theta + u;
        double cut = lambda / rho;
        z = (v.array().abs() - cut).max(0.0) * v.array().sign();
        z.diagonal() = v.diagonal();

        u += theta - z;

        result.iterations = iter;
        double primal = (theta - z).norm();
        double dual = rho * (z - z_prev).norm();
        double eps_pri = tol * std::max(theta.norm(), z.norm()) + 1e-12;
        double eps_dual = tol * rho * u.norm() + 1e-12;
        if (primal <= eps_pri && dual <= eps_dual) {
            result.converged = true;
            break;
        }
    }

    result.precision = theta;
    result.scores = z.cwiseAbs();
    result.scores.diagonal().setZero();
    result.scores = 0.5 * (result.scores + result.scores.transpose());
    result.objective = glasso_objective(s, theta, lambda);
    return result;
}

}  // namespace netgames
