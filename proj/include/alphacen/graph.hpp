#pragma once

#include <Eigen/Dense>
#include <string>
#include <unordered_map>
#include <vector>

#include "alphacen/errors.hpp"

namespace alphacen {

struct Edge {
    int src = 0;
    int dst = 0;
    double weight = 1.0;
};

/// Weighted adjacency structure shared by every other module.
///
/// `edges` keeps one entry per input record; `adjacency` accumulates them
/// (both directions for undirected graphs). Weights are nonnegative and
/// labels are unique. Immutable after construction.
class Graph {
  public:
    std::vector<std::string> labels;
    std::vector<std::string> node_values;  // GML "value" metadata, "" if absent
    std::vector<Edge> edges;
    bool directed = false;
    Eigen::MatrixXd adjacency;

    Graph() = default;
    static Graph build(std::vector<std::string> labels, std::vector<Edge> edges,
                       bool directed,
                       std::vector<std::string> node_values = {});

    int node_count() const { return static_cast<int>(labels.size()); }
    // -1 if the label is unknown
    int index_of(const std::string& label) const;

  private:
    std::unordered_map<std::string, int> index_;
};

struct DegreeSummary {
    Eigen::VectorXd in_degree;
    Eigen::VectorXd out_degree;
    double max_in = 0.0;
    double max_out = 0.0;
};

/// Parse "src dst [weight]" lines; '#' starts a comment, labels are arbitrary
/// whitespace-free tokens in first-appearance order. Duplicate edges
/// accumulate weight. With weighted=false a third token is a parse error.
Graph load_edge_list(const std::string& text, bool directed, bool weighted = true);

/// GML subset: graph/node/edge blocks with id, label, source, target and an
/// optional value (node values kept as metadata, edge values as weights).
/// Unknown keys are skipped with a warning on stderr.
Graph load_gml(const std::string& text);

/// Canonical edge-list serialization; load_edge_list(to_edge_list(g), ...)
/// reproduces the adjacency exactly.
std::string to_edge_list(const Graph& g);

/// A + A^T, marked undirected.
Graph symmetrize(const Graph& g);

DegreeSummary degree_summary(const Graph& g);

}  // namespace alphacen
