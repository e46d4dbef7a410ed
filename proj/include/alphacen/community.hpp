#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "alphacen/graph.hpp"

namespace alphacen {

struct CommunityOptions {
    double beta = 1.0;  // factors out of the division; kept for invariance tests
    // feed the grand-sum-normalized matrix to the null model instead of the
    // raw path counts (identical division either way)
    bool use_normalized = false;
    // round path counts and strength sums to nearest integers before building
    // the null model; only meaningful on the unnormalized route
    bool integer_rounding = false;
    double tol = 1e-9;
    int max_iter = 10000;
};

struct NullModel {
    double total = 0.0;             // W
    Eigen::VectorXd out_strength;   // W_i^out
    Eigen::VectorXd in_strength;    // W_j^in
    Eigen::MatrixXd expected;       // W_i^out * W_j^in / W
};

struct ModularityMatrix {
    double alpha = 0.0;
    Eigen::MatrixXd matrix;     // connectivity - expected, symmetrized
    bool symmetrized = false;   // true when built from a directed graph
};

struct BisectionOutcome {
    bool split = false;
    double eigenvalue = 0.0;   // leading eigenvalue of the (corrected) matrix
    double delta_q = 0.0;      // modularity gain of the proposed split
    std::vector<std::uint8_t> side;  // 1 = first group, 0 = second
    int iterations = 0;
    bool used_dense_fallback = false;
};

struct BisectionRecord {
    int first_node = 0;   // smallest node index of the split group
    int group_size = 0;
    int left_size = 0;
    int right_size = 0;
    double delta_q = 0.0;
};

struct Partition {
    std::vector<int> assignment;  // community index per node, contiguous 0..k-1
    double q_value = 0.0;         // Eq.-style modularity on the normalized matrix
    double alpha = 0.0;
    std::vector<BisectionRecord> history;
    int group_count() const;
};

/// Attenuated path-count matrix at beta = 1 (unnormalized by default, the
/// normalized variant behind options.use_normalized, optional integer
/// rounding per options.integer_rounding).
Eigen::MatrixXd connectivity_matrix(const Graph& g, double alpha,
                                    const CommunityOptions& options = {});

/// Strength-preserving random null model of a nonnegative connectivity
/// matrix: expected_ij = W_i^out W_j^in / W.
NullModel null_model(const Eigen::MatrixXd& connectivity);

ModularityMatrix modularity_matrix(const Graph& g, double alpha,
                                   const CommunityOptions& options = {});

/// Sign-split along the leading eigenvector of an (already diagonal-
/// corrected) symmetric modularity matrix. No split when the leading
/// eigenvalue is nonpositive or the gain is not strictly positive.
/// Near-zero eigenvector entries are placed greedily, in index order, on the
/// side that yields the higher gain.
BisectionOutcome leading_eigenvector_bisect(const Eigen::MatrixXd& b_sub);

/// Recursive leading-eigenvector division maximizing the path-based
/// modularity at the given alpha. Subgroup matrices carry the standard
/// diagonal correction B_ij - delta_ij * sum_k B_ik so gains are exact;
/// every accepted split strictly increases Q. Deterministic.
Partition detect_communities(const Graph& g, double alpha,
                             const CommunityOptions& options = {});

/// Modularity of an assignment, evaluated on the normalized connectivity.
double modularity_value(const Graph& g, const std::vector<int>& assignment,
                        double alpha, double tol = 1e-9, int max_iter = 10000);

}  // namespace alphacen
