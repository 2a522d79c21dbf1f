#include "netgames/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "netgames/rng.hpp"

namespace netgames {

void count_edge_labels(const Graph& truth, int* n_pos, int* n_neg) {
    int pos = 0;
    const auto& w = truth.weights();
    for (int i = 0; i < truth.n(); ++i)
        for (int j = i + 1; j < truth.n(); ++j)
            if (w(i, j) > 0.0) ++pos;
    *n_pos = pos;
    *n_neg = upper_size(truth.n()) - pos;
}

double auc_edges(const Eigen::MatrixXd& scores, const Graph& truth) {
    const int n = truth.n();
    if (scores.rows() != n || scores.cols() != n) {
        throw ParamError("auc_edges: score matrix size does not match truth");
    }
    int n_pos = 0, n_neg = 0;
    count_edge_labels(truth, &n_pos, &n_neg);
    if (n_pos == 0 || n_neg == 0) {
        throw ParamError("auc_edges: AUC undefined, truth has only one class");
    }

    struct Pair {
        double score;
        bool positive;
    };
    std::vector<Pair> pairs;
    pairs.reserve(upper_size(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.push_back({scores(i, j), truth.weights()(i, j) > 0.0});

    std::sort(pairs.begin(), pairs.end(),
              [](const Pair& a, const Pair& b) { return a.score < b.score; });

    // rank sum of positives with average ranks over tied scores
    double rank_sum_pos = 0.0;
    std::size_t i = 0;
    while (i < pairs.size()) {
        std::size_t j = i;
        while (j < pairs.size() && pairs[j].score == pairs[i].score) ++j;
        double avg_rank = 0.5 * static_cast<double>(i + 1 + j);  // ranks are 1-based
        for (std::size_t t = i; t < j; ++t) {
            if (pairs[t].positive) rank_sum_pos += avg_rank;
        }
        i = j;
    }
    double np = n_pos, nn = n_neg;
    return (rank_sum_pos - np * (np + 1.0) / 2.0) / (np * nn);
}

double r2_benefits(const BenefitMatrix& truth, const BenefitMatrix& learned) {
    if (truth.rows() != learned.rows() || truth.cols() != learned.cols()) {
        throw ParamError("r2_benefits: shape mismatch");
    }
    const auto t = truth.reshaped();
    const auto l = learned.reshaped();
    double mt = t.mean();
    double ml = l.mean();
    double var_l = (l.array() - ml).square().sum();
    if (var_l <= 0.0) throw ParamError("r2_benefits: learned benefits are constant");
    double var_t = (t.array() - mt).square().sum();
    if (var_t <= 0.0) throw ParamError("r2_benefits: groundtruth benefits are constant");
    double cov = ((t.array() - mt) * (l.array() - ml)).sum();
    return (cov * cov) / (var_t * var_l);
}

namespace {

// Lloyd iterations from a k-means++ seeding; returns inertia.
double kmeans_once(const Eigen::MatrixXd& points, int k, Rng& rng, std::vector<int>* labels) {
    const int n = static_cast<int>(points.rows());
    std::uniform_int_distribution<int> pick(0, n - 1);
    Eigen::MatrixXd centers(k, points.cols());

    // k-means++ seeding
    centers.row(0) = points.row(pick(rng));
    Eigen::VectorXd dist2 = (points.rowwise() - centers.row(0)).rowwise().squaredNorm();
    for (int c = 1; c < k; ++c) {
        double total = dist2.sum();
        int chosen = 0;
        if (total > 0.0) {
            std::uniform_real_distribution<double> unif(0.0, total);
            double target = unif(rng);
            double acc = 0.0;
            for (int i = 0; i < n; ++i) {
                acc += dist2[i];
                if (acc >= target) {
                    chosen = i;
                    break;
                }
            }
        } else {
            chosen = pick(rng);
        }
        centers.row(c) = points.row(chosen);
        dist2 = dist2.cwiseMin(
            (points.rowwise() - centers.row(c)).rowwise().squaredNorm());
    }

    labels->assign(n, 0);
    double inertia = 0.0;
    for (int it = 0; it < 100; ++it) {
        bool changed = false;
        inertia = 0.0;
        for (int i = 0; i < n; ++i) {
            int best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (int c = 0; c < k; ++c) {
                double d = (points.row(i) - centers.row(c)).squaredNorm();
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            if ((*labels)[i] != best) {
                (*labels)[i] = best;
                changed = true;
            }
            inertia += best_d;
        }
        if (!changed && it > 0) break;
        for (int c = 0; c < k; ++c) {
            Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(points.cols());
            int count = 0;
            for (int i = 0; i < n; ++i) {
                if ((*labels)[i] == c) {
                    mean += points.row(i);
                    ++count;
                }
            }
            if (count > 0) centers.row(c) = mean / count;
        }
    }
    return inertia;
}

}  // namespace

std::vector<int> spectral_cluster(const Graph& g, int k, std::uint64_t seed) {
    const int n = g.n();
    if (k < 2 || k > n) throw ParamError("spectral_cluster: k must satisfy 2 <= k <= n");

    // L_sym = I - D^{-1/2} G D^{-1/2}; isolated nodes keep a zero row in the
    // normalized adjacency
    Eigen::VectorXd deg = g.weights().rowwise().sum();
    Eigen::VectorXd dinv_sqrt(n);
    for (int i = 0; i < n; ++i) dinv_sqrt[i] = deg[i] > 0.0 ? 1.0 / std::sqrt(deg[i]) : 0.0;
    Eigen::MatrixXd norm_adj =
        dinv_sqrt.asDiagonal() * g.weights() * dinv_sqrt.asDiagonal();
    Eigen::MatrixXd lap_sym = Eigen::MatrixXd::Identity(n, n) - norm_adj;

    SpectralInfo spec = spectral_decompose(lap_sym);
    Eigen::MatrixXd embedding = spec.eigenvectors.leftCols(k);
    for (int i = 0; i < n; ++i) {
        double norm = embedding.row(i).norm();
        if (norm > 0.0) embedding.row(i) /= norm;
    }

    Rng rng = make_rng(seed);
    std::vector<int> best_labels;
    double best_inertia = std::numeric_limits<double>::infinity();
    for (int restart = 0; restart < 20; ++restart) {
        std::vector<int> labels;
        double inertia = kmeans_once(embedding, k, rng, &labels);
        if (inertia < best_inertia) {
            best_inertia = inertia;
            best_labels = labels;
        }
    }
    return best_labels;
}

}  // namespace netgames
