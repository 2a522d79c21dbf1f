#include "netgames/inference.hpp"

#include <cmath>
#include <random>

#include "netgames/qp.hpp"
#include "netgames/rng.hpp"
#include "netgames/simplex.hpp"

namespace netgames {

namespace {

void check_problem(const ActionMatrix& a, const SolverParams& params) {
    if (a.rows() < 2) throw ParamError("solver: need at least 2 players");
    if (a.cols() < 1) throw ParamError("solver: need at least 1 game");
    if (params.theta1 < 0.0 || params.theta2 < 0.0) {
        throw ParamError("solver: theta1 and theta2 must be nonnegative");
    }
    if (params.inner_tol <= 0.0 || params.bcd_tol <= 0.0) {
        throw ParamError("solver: tolerances must be positive");
    }
    if (params.inner_max_iter < 1 || params.bcd_max_iter < 1 || params.restarts < 1) {
        throw ParamError("solver: iteration caps must be >= 1");
    }
}

Eigen::MatrixXd fit_residual(const Graph& g, const BenefitMatrix& b, const ActionMatrix& a,
                             double beta) {
    if (b.rows() != a.rows() || b.cols() != a.cols() || a.rows() != g.n()) {
        throw ParamError("objective: dimension mismatch between G, B and A");
    }
    return a - beta * (g.weights() * a) - b;
}

QpOptions inner_options(const SolverParams& params) {
    QpOptions options;
    options.rel_tol = params.inner_tol;
    options.pg_tol = params.inner_pg_tol;
    options.max_iter = params.inner_max_iter;
    return options;
}

// Squared row-distance matrix C_ij = ||B_i,: - B_j,:||^2, the coefficients of
// the Laplacian quadratic form as a linear function of G.
Eigen::MatrixXd row_distance_sq(const BenefitMatrix& b) {
    const int n = static_cast<int>(b.rows());
    Eigen::VectorXd sq = b.rowwise().squaredNorm();
    Eigen::MatrixXd c = sq.replicate(1, n) + sq.transpose().replicate(n, 1) -
                        2.0 * (b * b.transpose());
    return c.cwiseMax(0.0);
}

}  // namespace

double objective_f(const Graph& g, const BenefitMatrix& b, const ActionMatrix& a,
                   const SolverParams& params) {
    return fit_residual(g, b, a, params.beta).squaredNorm() +
           params.theta1 * g.weights().squaredNorm() + params.theta2 * b.squaredNorm();
}

double objective_h(const Graph& g, const BenefitMatrix& b, const ActionMatrix& a,
                   const SolverParams& params) {
    Eigen::MatrixXd lap = graph_laplacian(g);
    return fit_residual(g, b, a, params.beta).squaredNorm() +
           params.theta1 * g.weights().squaredNorm() +
           params.theta2 * (b.transpose() * lap * b).trace();
}

double reduced_objective(const Graph& g, const ActionMatrix& a, const SolverParams& params) {
    if (a.rows() != g.n()) throw ParamError("reduced_objective: dimension mismatch");
    double shrink = params.theta2 / (1.0 + params.theta2);
    Eigen::MatrixXd m = a - params.beta * (g.weights() * a);
    return shrink * m.squaredNorm() + params.theta1 * g.weights().squaredNorm();
}

BenefitMatrix benefits_closed_form(const Graph& g, const ActionMatrix& a,
                                   const SolverParams& params) {
    if (a.rows() != g.n()) throw ParamError("benefits_closed_form: dimension mismatch");
    if (params.theta2 < 0.0) throw ParamError("benefits_closed_form: theta2 must be >= 0");
    Eigen::MatrixXd rhs = a - params.beta * (g.weights() * a);
    if (params.theta2 == 0.0) return rhs;
    Eigen::MatrixXd system = Eigen::MatrixXd::Identity(g.n(), g.n()) +
                             params.theta2 * graph_laplacian(g);
    Eigen::LLT<Eigen::MatrixXd> llt(system);
    if (llt.info() != Eigen::Success) {
        throw NumericalError("benefits_closed_form: factorization failed");
    }
    return llt.solve(rhs);
}

LearnedModel solve_independent(const ActionMatrix& a, const SolverParams& params) {
    check_problem(a, params);
    const int n = static_cast<int>(a.rows());
    const double beta = params.beta;
    const double shrink = params.theta2 / (1.0 + params.theta2);

    GraphQuadratic problem;
    problem.p = a * a.transpose();
    problem.c0 = shrink * a.squaredNorm();
    problem.lin = (-2.0 * shrink * beta) * problem.p;
    problem.q = shrink * beta * beta;
    problem.t1 = params.theta1;

    QpResult qp = minimize_feasible_qp(problem, n, uniform_feasible_graph(n).upper(),
                                       inner_options(params));

    LearnedModel model;
    model.graph = Graph::from_upper(n, qp.x);
    model.benefits =
        (a - beta * (model.graph.weights() * a)) / (1.0 + params.theta2);
    model.objective_trace = std::move(qp.trace);
    model.converged = qp.converged;
    model.iterations = qp.iterations;
    return model;
}

LearnedModel solve_homophilous(const ActionMatrix& a, const SolverParams& params) {
    check_problem(a, params);
    const int n = static_cast<int>(a.rows());
    const int k_games = static_cast<int>(a.cols());
    const double beta = params.beta;

    LearnedModel best;
    bool have_best = false;

    for (int restart = 0; restart < params.restarts; ++restart) {
        Rng rng = make_rng(derive_seed(params.seed, restart));
        std::normal_distribution<double> gauss(0.0, 1.0);
        BenefitMatrix b(n, k_games);
        for (int k = 0; k < k_games; ++k)
            for (int i = 0; i < n; ++i) b(i, k) = gauss(rng);

        Graph g = uniform_feasible_graph(n);
        LearnedModel model;
        model.objective_trace.push_back(objective_h(g, b, a, params));

        Eigen::VectorXd warm = g.upper();
        double h_prev = 0.0;
        for (int outer = 1; outer <= params.bcd_max_iter; ++outer) {
            // G-step: quadratic in G with B fixed; the homophily term is
            // linear in G through the row-distance coefficients.
            Eigen::MatrixXd residual_base = a - b;  // E = A - B
            GraphQuadratic problem;
            problem.p = a * a.transpose();
            problem.c0 = residual_base.squaredNorm();
            Eigen::MatrixXd cross = residual_base * a.transpose();
            problem.lin = -beta * (cross + cross.transpose()) +
                          (0.5 * params.theta2) * row_distance_sq(b);
            problem.q = beta * beta;
            problem.t1 = params.theta1;

            QpResult qp = minimize_feasible_qp(problem, n, warm, inner_options(params));
            warm = qp.x;
            g = Graph::from_upper(n, qp.x);

            b = benefits_closed_form(g, a, params);

            double h = objective_h(g, b, a, params);
            model.objective_trace.push_back(h);
            model.iterations = outer;
            if (outer > 1 && std::abs(h - h_prev) < params.bcd_tol) {
                model.converged = true;
                h_prev = h;
                break;
            }
            h_prev = h;
        }

        model.graph = std::move(g);
        model.benefits = std::move(b);
        if (!have_best || model.objective_trace.back() < best.objective_trace.back()) {
            best = std::move(model);
            have_best = true;
        }
    }
    return best;
}

}  // namespace netgames
