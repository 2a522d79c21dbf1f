#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "netgames/games.hpp"
#include "netgames/graph.hpp"

namespace netgames {

/// Hyperparameters and termination controls shared by both learning
/// algorithms. beta is the network-effect strength, supplied by the caller
/// (known in simulation, grid-searched on real data).
struct SolverParams {
    double beta = 0.0;
    double theta1 = 0.0;   // Frobenius penalty on G
    double theta2 = 0.0;   // benefit penalty (alg 1) / smoothness weight (alg 2)
    double inner_tol = 1e-8;
    int inner_max_iter = 20000;
    double inner_pg_tol = 1e-7;
    double bcd_tol = 1e-4;
    int bcd_max_iter = 50;
    int restarts = 1;       // random B0 restarts for solve_homophilous
    std::uint64_t seed = 0;
};

/// Result of a learning run: recovered graph and benefits plus the recorded
/// objective values (non-increasing), convergence flag and iteration count.
struct LearnedModel {
    Graph graph;
    BenefitMatrix benefits;
    std::vector<double> objective_trace;
    bool converged = false;
    int iterations = 0;
};

/// ||(I - beta G)A - B||_F^2 + theta1 ||G||_F^2 + theta2 ||B||_F^2
double objective_f(const Graph& g, const BenefitMatrix& b, const ActionMatrix& a,
                   const SolverParams& params);

/// ||(I - beta G)A - B||_F^2 + theta1 ||G||_F^2 + theta2 tr(B' L B)
double objective_h(const Graph& g, const BenefitMatrix& b, const ActionMatrix& a,
                   const SolverParams& params);

/// The jointly convex objective with B eliminated at its optimum
/// B = (I - beta G)A / (1 + theta2):
///   theta2/(1+theta2) ||(I - beta G)A||_F^2 + theta1 ||G||_F^2
double reduced_objective(const Graph& g, const ActionMatrix& a, const SolverParams& params);

/// Closed-form B-step of the homophilous algorithm:
/// B = (I + theta2 L)^{-1} (I - beta G) A. The system is SPD for theta2 >= 0.
BenefitMatrix benefits_closed_form(const Graph& g, const ActionMatrix& a,
                                   const SolverParams& params);

/// Learning with independent marginal benefits: minimizes the jointly convex
/// objective over the feasible graph set, with B eliminated analytically and
/// the reduced QP solved by accelerated projected gradient.
LearnedModel solve_independent(const ActionMatrix& a, const SolverParams& params);

/// Learning with homophilous marginal benefits: block coordinate descent
/// alternating a feasible-set QP in G with the closed-form B-step, from a
/// seeded random B0, until |delta h| < bcd_tol or bcd_max_iter.
LearnedModel solve_homophilous(const ActionMatrix& a, const SolverParams& params);

}  // namespace netgames
