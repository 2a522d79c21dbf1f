#include "netgames/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace netgames {

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Eigen::MatrixXd read_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);

    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t used = 0;
                double v = std::stod(cell, &used);
                row.push_back(v);
            } catch (const std::exception&) {
                throw DataError(path + ": cannot parse '" + cell + "' at row " +
                                std::to_string(rows.size() + 1));
            }
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw DataError(path + ": row " + std::to_string(rows.size() + 1) + " has " +
                            std::to_string(row.size()) + " columns, expected " +
                            std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty() || rows.front().empty()) throw DataError(path + ": empty matrix");

    Eigen::MatrixXd m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

void write_matrix_csv(const std::string& path, const Eigen::MatrixXd& m) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

Graph load_graph_csv(const std::string& path) {
    Eigen::MatrixXd m = read_matrix_csv(path);
    if (m.rows() != m.cols()) {
        throw DataError(path + ": adjacency must be square, got " +
                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
        throw DataError(path + ": adjacency is not symmetric to 1e-9");
    }
    Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
    for (Eigen::Index i = 0; i < sym.rows(); ++i) {
        if (std::abs(sym(i, i)) > 1e-9 * scale) {
            throw DataError(path + ": adjacency has a nonzero diagonal");
        }
        sym(i, i) = 0.0;
        for (Eigen::Index j = 0; j < sym.cols(); ++j) {
            if (sym(i, j) < -1e-9 * scale) {
                throw DataError(path + ": adjacency has negative weights");
            }
            if (sym(i, j) < 0.0) sym(i, j) = 0.0;
        }
    }
    return Graph(std::move(sym));
}

void write_labels_csv(const std::string& path, const std::vector<int>& labels) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    for (int label : labels) out << label << '\n';
}

std::string model_metadata_json(const LearnedModel& model, const SolverParams& params) {
    nlohmann::json j;
    j["converged"] = model.converged;
    j["iterations"] = model.iterations;
    j["objective_trace"] = model.objective_trace;
    j["final_objective"] =
        model.objective_trace.empty() ? 0.0 : model.objective_trace.back();
    j["params"] = {
        {"beta", params.beta},
        {"theta1", params.theta1},
        {"theta2", params.theta2},
        {"inner_tol", params.inner_tol},
        {"inner_max_iter", params.inner_max_iter},
        {"inner_pg_tol", params.inner_pg_tol},
        {"bcd_tol", params.bcd_tol},
        {"bcd_max_iter", params.bcd_max_iter},
        {"restarts", params.restarts},
        {"seed", params.seed},
    };
    return j.dump(2);
}

std::string eval_report_json(const EvalReport& report) {
    nlohmann::json j;
    j["auc"] = report.auc;
    j["r2"] = report.r2;
    j["n_pos"] = report.n_pos;
    j["n_neg"] = report.n_neg;
    return j.dump(2);
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    out << contents;
}

}  // namespace netgames
