#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "netgames/eval.hpp"
#include "netgames/graph.hpp"
#include "netgames/inference.hpp"

namespace netgames {

/// Reads a headerless CSV of reals into a dense matrix. Throws DataError
/// with row/column counts on ragged or empty input.
Eigen::MatrixXd read_matrix_csv(const std::string& path);

/// Writes a matrix as headerless CSV with round-trip-exact precision.
void write_matrix_csv(const std::string& path, const Eigen::MatrixXd& m);

/// Loads an adjacency CSV: validates squareness and symmetry to 1e-9
/// (relative to the largest entry), symmetrizes by averaging, zeroes a
/// near-zero diagonal, and clamps tiny negative entries.
Graph load_graph_csv(const std::string& path);

/// Writes labels as a single-column CSV.
void write_labels_csv(const std::string& path, const std::vector<int>& labels);

/// LearnedModel metadata (objective trace, iterations, convergence, params)
/// as a JSON document.
std::string model_metadata_json(const LearnedModel& model, const SolverParams& params);

std::string eval_report_json(const EvalReport& report);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace netgames
