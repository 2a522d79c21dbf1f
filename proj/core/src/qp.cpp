#include "netgames/qp.hpp"

#include <cmath>

#include "netgames/simplex.hpp"

namespace netgames {

double GraphQuadratic::value(const Eigen::MatrixXd& g) const {
    double v = c0 + g.cwiseProduct(lin).sum() + t1 * g.squaredNorm();
    if (q != 0.0) v += q * (g * p).cwiseProduct(g).sum();  // tr(GPG), G symmetric
    return v;
}

Eigen::MatrixXd GraphQuadratic::grad_matrix(const Eigen::MatrixXd& g) const {
    Eigen::MatrixXd m = lin + (2.0 * t1) * g;
    if (q != 0.0) {
        Eigen::MatrixXd pg = p * g;
        m += q * (pg + pg.transpose());  // PG + GP for symmetric P, G
    }
    return m;
}

Eigen::MatrixXd matrix_from_upper(int n, const Eigen::VectorXd& x) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
    int e = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++e) {
            g(i, j) = x[e];
            g(j, i) = x[e];
        }
    return g;
}

Eigen::VectorXd upper_gradient(const Eigen::MatrixXd& grad_matrix) {
    const int n = static_cast<int>(grad_matrix.rows());
    Eigen::VectorXd g(upper_size(n));
    int e = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++e)
            g[e] = grad_matrix(i, j) + grad_matrix(j, i);
    return g;
}

double projected_gradient_residual(const Eigen::VectorXd& x, const Eigen::VectorXd& grad,
                                   double total, double eta) {
    return (x - project_simplex(x - eta * grad, total)).norm() / eta;
}

namespace {

// Largest Hessian eigenvalue by power iteration on the exact (affine-gradient)
// Hessian action in upper-triangle coordinates.
double lipschitz_estimate(const GraphQuadratic& problem, int n) {
    const int m = upper_size(n);
    Eigen::VectorXd v = Eigen::VectorXd::Ones(m) / std::sqrt(static_cast<double>(m));
    double lambda = 0.0;
    for (int it = 0; it < 30; ++it) {
        Eigen::MatrixXd d = matrix_from_upper(n, v);
        Eigen::MatrixXd hd_mat = (2.0 * problem.t1) * d;
        if (problem.q != 0.0) {
            Eigen::MatrixXd pd = problem.p * d;
            hd_mat += problem.q * (pd + pd.transpose());
        }
        Eigen::VectorXd hv = upper_gradient(hd_mat);
        lambda = hv.norm();
        if (lambda <= 0.0) break;
        v = hv / lambda;
    }
    return lambda;
}

}  // namespace

QpResult minimize_feasible_qp(const GraphQuadratic& problem, int n,
                              const Eigen::VectorXd& x0, const QpOptions& options) {
    const double total = 0.5 * n;
    const double pg_eta = 1e-6;

    QpResult result;
    Eigen::VectorXd x = project_simplex(x0, total);
    Eigen::VectorXd x_prev = x;
    Eigen::VectorXd y = x;

    auto value_at = [&](const Eigen::VectorXd& v) {
        return problem.value(matrix_from_upper(n, v));
    };
    auto grad_at = [&](const Eigen::VectorXd& v) {
        return upper_gradient(problem.grad_matrix(matrix_from_upper(n, v)));
    };

    double fx = value_at(x);
    if (options.record_trace) result.trace.push_back(fx);

    double lip = lipschitz_estimate(problem, n);
    double step = lip > 0.0 ? 1.0 / lip : 1.0;
    double theta = 1.0;
    int stalls = 0;

    for (int iter = 1; iter <= options.max_iter; ++iter) {
        Eigen::VectorXd gy = grad_at(y);
        double fy = value_at(y);

        Eigen::VectorXd z;
        double fz = 0.0;
        for (;;) {
            z = project_simplex(y - step * gy, total);
            fz = value_at(z);
            Eigen::VectorXd dz = z - y;
            if (fz <= fy + gy.dot(dz) + dz.squaredNorm() / (2.0 * step) + 1e-14 * std::abs(fy)) {
                break;
            }
            step *= 0.5;
            if (step < 1e-18) break;
        }

        if (fz > fx) {
            // momentum overshot: restart from the best iterate
            theta = 1.0;
            y = x;
            gy = grad_at(x);
            fy = fx;
            for (;;) {
                z = project_simplex(y - step * gy, total);
                fz = value_at(z);
                Eigen::VectorXd dz = z - y;
                if (fz <= fy + gy.dot(dz) + dz.squaredNorm() / (2.0 * step) + 1e-14 * std::abs(fy)) {
                    break;
                }
                step *= 0.5;
                if (step < 1e-18) break;
            }
            if (fz > fx) {  // numerically stuck at a minimizer
                z = x;
                fz = fx;
            }
        }

        x_prev = x;
        double fx_prev = fx;
        x = z;
        fx = fz;
        if (options.record_trace) result.trace.push_back(fx);
        result.iterations = iter;

        double theta_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * theta * theta));
        y = x + ((theta - 1.0) / theta_next) * (x - x_prev);
        theta = theta_next;

        double change = std::abs(fx_prev - fx);
        if (change <= options.rel_tol * std::max(1.0, std::abs(fx))) {
            double residual = projected_gradient_residual(x, grad_at(x), total, pg_eta);
            if (residual <= options.pg_tol) {
                result.converged = true;
                break;
            }
            // no progress and no optimality: bail out after repeated stalls
            if ((x - x_prev).norm() == 0.0 && ++stalls >= 5) break;
        } else {
            stalls = 0;
        }
    }

    result.x = x;
    result.value = fx;
    return result;
}

}  // namespace netgames
