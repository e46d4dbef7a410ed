#pragma once

#include <Eigen/Dense>
#include <optional>

#include "alphacen/graph.hpp"

namespace alphacen {

/// Normalized attenuated-path-count matrix at a given (alpha, beta), plus
/// convergence diagnostics. `matrix` grand-sums to 1; `node_scores` are its
/// row sums. `scale` is the grand sum of the unnormalized series, so
/// scale * matrix recovers C(alpha, beta); infinite once the series diverges
/// (alpha >= 1/lambda1).
struct CentralityField {
    double alpha = 0.0;
    double beta = 1.0;
    Eigen::MatrixXd matrix;
    Eigen::VectorXd node_scores;
    int iterations = 0;
    bool converged = false;
    double residual = 0.0;
    double scale = 0.0;
};

struct SpectralInfo {
    double lambda1 = 0.0;
    Eigen::VectorXd vector;  // unit L2 norm, largest-magnitude entry positive
    int iterations = 0;
    bool tolerance_met = false;
    bool degenerate = false;  // zero matrix: lambda1 = 0, vector undefined
};

enum class ScoreSums { rows, columns };

/// Power iteration from a strictly positive start vector.
SpectralInfo dominant_eigenpair(const Graph& g, double tol = 1e-10,
                                int max_iter = 10000);

/// Fixed point of C <- beta*A + alpha*C*A with the iterate renormalized to
/// unit grand sum every step (the scale is carried alongside, so the limit is
/// the true normalized matrix for every alpha in [0, 1], finite even past
/// 1/lambda1). Stops when the L-inf change of the normalized matrix drops
/// below tol. alpha = 0 returns A / sum(A) in one step.
CentralityField alpha_centrality_iterative(const Graph& g, double alpha,
                                           double beta = 1.0, double tol = 1e-9,
                                           int max_iter = 10000);

/// Direct solve of C = beta*A*(I - alpha*A)^-1, normalized afterwards.
/// Valid strictly below 1/lambda1; the oracle for the iterative path.
CentralityField alpha_centrality_closed_form(const Graph& g, double alpha,
                                             double beta = 1.0);

/// Normalized node scores only, via vector recurrences on the edge list
/// (O(M) per iteration). Row sums count paths from each node, column sums
/// paths into it; identical for symmetric adjacency.
Eigen::VectorXd alpha_centrality_scores(const Graph& g, double alpha,
                                        double beta = 1.0, double tol = 1e-9,
                                        int max_iter = 10000,
                                        ScoreSums sums = ScoreSums::rows);

/// Dominant eigenvector, unit L2 norm, nonnegative orientation.
Eigen::VectorXd eigenvector_centrality(const Graph& g, double tol = 1e-10);

/// Katz status scores: row sums of alpha*A*(I - alpha*A)^-1 (beta = alpha),
/// unnormalized. Requires alpha < 1/lambda1.
Eigen::VectorXd katz_scores(const Graph& g, double alpha);

/// Random-walk proximity: sum_k c^k T^k with T the row-stochastic transition
/// matrix, iterated to tolerance. Errors on any node with zero out-degree.
Eigen::MatrixXd random_walk_proximity(const Graph& g, double c,
                                      double tol = 1e-9);

/// Out-degree vector (row sums of A).
Eigen::VectorXd degree_centrality(const Graph& g);

/// Expected interaction length scale (1 - alpha)^-1; alpha = 1 is an error.
double centrality_radius(double alpha);

/// Parameter bundle for the unified path-count proximity family.
struct ProximityConfig {
    enum class Scheme { alpha_centrality, katz, random_walk, degree };
    Scheme scheme = Scheme::alpha_centrality;
    std::optional<double> alpha;    // attenuation (alpha_centrality, katz)
    std::optional<double> beta;     // first-edge factor (alpha_centrality)
    std::optional<double> restart;  // c in (0,1) (random_walk)

    // parameters must be present exactly when the scheme requires them
    void validate() const;
};

/// Node scores under the scheme picked by the config.
Eigen::VectorXd proximity_scores(const Graph& g, const ProximityConfig& config,
                                 double tol = 1e-9, int max_iter = 10000);

}  // namespace alphacen
