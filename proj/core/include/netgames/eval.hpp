#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "netgames/games.hpp"
#include "netgames/graph.hpp"

namespace netgames {

struct EvalReport {
    double auc = 0.0;
    double r2 = 0.0;
    int n_pos = 0;
    int n_neg = 0;
};

/// Edge-recovery AUC over the n(n-1)/2 unordered node pairs: truth pairs are
/// positive where the groundtruth weight is > 0, and scores are ranked with
/// average ranks for ties (Mann-Whitney form). Throws ParamError when the
/// truth has no positive or no negative pairs.
double auc_edges(const Eigen::MatrixXd& scores, const Graph& truth);

/// R^2 of the simple regression of vec(truth) on vec(learned), equal to their
/// squared Pearson correlation. Throws ParamError for a constant learned
/// matrix.
double r2_benefits(const BenefitMatrix& truth, const BenefitMatrix& learned);

/// Pair counts used by auc_edges.
void count_edge_labels(const Graph& truth, int* n_pos, int* n_neg);

/// Spectral clustering on the symmetric normalized Laplacian: embed nodes in
/// the k smallest eigenvectors, row-normalize, then seeded k-means with 20
/// restarts (best inertia). Labels are in {0..k-1}. Deterministic given seed.
std::vector<int> spectral_cluster(const Graph& g, int k, std::uint64_t seed);

}  // namespace netgames
