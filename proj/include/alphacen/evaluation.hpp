#pragma once

#include <Eigen/Dense>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "alphacen/community.hpp"
#include "alphacen/graph.hpp"

namespace alphacen {

struct GroundTruth {
    std::map<std::string, std::string> labels;  // node label -> class label
    std::vector<std::string> classes;           // distinct classes, first appearance
    std::set<std::string> excluded;             // nodes dropped from purity
};

/// "node<TAB>class" per line, '#' comments. Optional exclusion text lists one
/// node label per line.
GroundTruth load_ground_truth(const std::string& label_text,
                              const std::string& exclusion_text = "");

/// Classes from the graph's per-node "value" metadata.
GroundTruth ground_truth_from_metadata(const Graph& g);

/// Fraction of same-class node pairs (labeled, not excluded) that share a
/// discovered community. Errors when no same-class pair exists.
double purity(const Graph& g, const Partition& p, const GroundTruth& truth);

struct SweepRecord {
    double alpha = 0.0;
    int group_count = 0;
    double purity = 0.0;
    Eigen::VectorXd node_scores;
    double q_value = 0.0;
};

/// Detect communities and score them for each alpha; records come back
/// sorted by alpha ascending.
std::vector<SweepRecord> sweep(const Graph& g, const GroundTruth& truth,
                               const std::vector<double>& alphas,
                               const CommunityOptions& options = {});

/// Descending by score, ties broken by node label ascending.
std::vector<std::pair<std::string, double>> rank_nodes(
    const Eigen::VectorXd& scores, const std::vector<std::string>& labels);

/// True iff both vectors induce the same ordering: for every pair,
/// sign(a_i - a_j) matches sign(b_i - b_j), with |diff| < tol read as a tie.
bool ordering_equal(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                    double tol);

enum class NodeRole {
    ultra_peripheral,
    peripheral,
    connector,
    kinless,
    provincial_hub,
    connector_hub,
    global_hub,
};

const char* role_name(NodeRole role);

struct RoleCoordinates {
    Eigen::VectorXd z;  // within-community degree z-score (0 for singletons)
    Eigen::VectorXd p;  // participation coefficient in [0, 1 - 1/k]
    std::vector<NodeRole> roles;  // hub iff z >= 2.5
};

RoleCoordinates role_coordinates(const Graph& g, const Partition& p);

}  // namespace alphacen
