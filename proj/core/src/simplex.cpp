#include "netgames/simplex.hpp"

#include <algorithm>
#include <vector>

namespace netgames {

Eigen::VectorXd project_simplex(const Eigen::VectorXd& v, double total) {
    const int m = static_cast<int>(v.size());
    if (m == 0) throw ParamError("project_simplex: empty input");

    std::vector<double> u(v.data(), v.data() + m);
    std::sort(u.begin(), u.end(), std::greater<double>());

    // largest j with u_j - (sum_{r<=j} u_r - total)/j > 0
    double cumsum = 0.0;
    double tau = 0.0;
    for (int j = 0; j < m; ++j) {
        cumsum += u[j];
        double candidate = (cumsum - total) / (j + 1);
        if (u[j] - candidate > 0.0) {
            tau = candidate;
        }
    }
    return (v.array() - tau).max(0.0);
}

Graph project_feasible(const Eigen::MatrixXd& candidate) {
    const int n = static_cast<int>(candidate.rows());
    if (candidate.cols() != n) throw ParamError("project_feasible: matrix must be square");
    if (n < 2) throw ParamError("project_feasible: n must be >= 2");

    Eigen::VectorXd upper(upper_size(n));
    int e = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++e)
            upper[e] = 0.5 * (candidate(i, j) + candidate(j, i));

    // full-matrix sum n means the free upper entries sum to n/2
    return Graph::from_upper(n, project_simplex(upper, 0.5 * n));
}

Graph uniform_feasible_graph(int n) {
    if (n < 2) throw ParamError("uniform_feasible_graph: n must be >= 2");
    Eigen::VectorXd upper =
        Eigen::VectorXd::Constant(upper_size(n), 1.0 / static_cast<double>(n - 1));
    return Graph::from_upper(n, upper);
}

}  // namespace netgames
