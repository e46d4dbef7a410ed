#pragma once

// Shared test scaffolding: small graph builders, random connected graphs,
// and the truncated-series oracle the centrality paths are checked against.

#include <random>
#include <string>
#include <vector>

#include "alphacen/centrality.hpp"
#include "alphacen/datasets.hpp"
#include "alphacen/graph.hpp"

namespace testsupport {

inline alphacen::Graph make_graph(int n,
                                  const std::vector<std::tuple<int, int, double>>& edges,
                                  bool directed) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("n" + std::to_string(i));
    std::vector<alphacen::Edge> es;
    for (auto [s, t, w] : edges) es.push_back({s, t, w});
    return alphacen::Graph::build(labels, es, directed);
}

/// Random connected undirected (or directed-with-connected-skeleton) graph:
/// random spanning tree plus extra edges.
inline alphacen::Graph random_connected_graph(std::mt19937& rng, int n,
                                              double extra_prob,
                                              bool directed = false,
                                              bool weighted = false) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::uniform_real_distribution<double> wdist(0.5, 2.0);
    std::vector<std::tuple<int, int, double>> edges;
    for (int v = 1; v < n; ++v) {
        int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
        edges.emplace_back(u, v, weighted ? wdist(rng) : 1.0);
        if (directed) edges.emplace_back(v, u, weighted ? wdist(rng) : 1.0);
    }
    for (int i = 0; i < n; ++i)
        for (int j = directed ? 0 : i + 1; j < n; ++j) {
            if (i == j) continue;
            if (uni(rng) < extra_prob)
                edges.emplace_back(i, j, weighted ? wdist(rng) : 1.0);
        }
    return make_graph(n, edges, directed);
}

/// Brute-force partial sum  sum_{k=0..terms} beta * alpha^k * A^{k+1} —
/// the independent oracle for every attenuated-path implementation. Powers
/// are accumulated pre-attenuated ((alpha*A) per step) so long sums stay in
/// range below 1/lambda1.
inline Eigen::MatrixXd truncated_series(const Eigen::MatrixXd& A, double alpha,
                                        double beta, int terms) {
    Eigen::MatrixXd total = beta * A;
    Eigen::MatrixXd attenuated = A;  // alpha^k * A^(k+1)
    for (int k = 1; k <= terms; ++k) {
        attenuated = (attenuated * (alpha * A)).eval();
        total += beta * attenuated;
    }
    return total;
}

/// |second eigenvalue| of a symmetric adjacency via deflated power iteration.
inline double second_eigen_magnitude(const Eigen::MatrixXd& A, double lambda1,
                                     const Eigen::VectorXd& x1) {
    Eigen::MatrixXd deflated = A - lambda1 * (x1 * x1.transpose());
    Eigen::VectorXd v = Eigen::VectorXd::LinSpaced(A.rows(), 1.0, 2.0).normalized();
    double mu = 0.0;
    for (int it = 0; it < 20000; ++it) {
        Eigen::VectorXd w = deflated * v;
        double norm = w.norm();
        if (norm == 0.0) return 0.0;
        w /= norm;
        double next = w.dot(deflated * w);
        if (std::abs(next - mu) < 1e-12 * std::max(1.0, std::abs(next))) {
            mu = next;
            break;
        }
        mu = next;
        v = std::move(w);
    }
    return std::abs(mu);
}

inline std::string data_dir() { return alphacen::default_data_dir(); }

}  // namespace testsupport
