// Smoke-sized versions of the limit-theorem property suites; the acceptance
// binary runs the same checks over the full 50-graph batches.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "alphacen/centrality.hpp"
#include "alphacen/evaluation.hpp"
#include "test_support.hpp"

using namespace alphacen;
using testsupport::random_connected_graph;
using testsupport::second_eigen_magnitude;

TEST_CASE("ordering preserved between normalized and unnormalized scores "
          "below 1/lambda1") {
    std::mt19937 rng(101);
    for (int rep = 0; rep < 8; ++rep) {
        Graph g = random_connected_graph(rng, 12, 0.3, rep % 2 == 1, false);
        SpectralInfo s = dominant_eigenpair(g, 1e-12);
        double alpha = 0.7 / s.lambda1;
        Eigen::VectorXd normalized =
            alpha_centrality_iterative(g, alpha, 1.0, 1e-12, 30000).node_scores;
        CentralityField cf = alpha_centrality_closed_form(g, alpha);
        Eigen::VectorXd unnormalized = cf.scale * cf.node_scores;
        CHECK(ordering_equal(normalized / normalized.lpNorm<1>(),
                             unnormalized / unnormalized.lpNorm<1>(), 1e-12));
    }
}

TEST_CASE("plateau: the normalized matrix stops depending on alpha past "
          "1/lambda1") {
    std::mt19937 rng(202);
    int done = 0;
    while (done < 6) {
        Graph g = random_connected_graph(rng, 14, 0.35, false, false);
        SpectralInfo s = dominant_eigenpair(g, 1e-12);
        if (s.lambda1 < 1.5) continue;
        double mu2 = second_eigen_magnitude(g.adjacency, s.lambda1, s.vector);
        if (s.lambda1 - mu2 < 0.05 * s.lambda1) continue;  // need a clear gap
        double a1 = std::min(1.0, 1.1 / s.lambda1);
        if (a1 * s.lambda1 <= 1.0) continue;
        CentralityField f1 = alpha_centrality_iterative(g, a1, 1.0, 1e-11, 20000);
        CentralityField f2 = alpha_centrality_iterative(g, 1.0, 1.0, 1e-11, 20000);
        REQUIRE(f1.converged);
        REQUIRE(f2.converged);
        CHECK((f1.matrix - f2.matrix).cwiseAbs().maxCoeff() < 1e-6);
        ++done;
    }
}

TEST_CASE("continuity across the 1/lambda1 boundary") {
    std::mt19937 rng(303);
    int done = 0;
    while (done < 5) {
        Graph g = random_connected_graph(rng, 12, 0.3, false, false);
        SpectralInfo s = dominant_eigenpair(g, 1e-12);
        if (s.lambda1 < 1.5) continue;
        double mu2 = second_eigen_magnitude(g.adjacency, s.lambda1, s.vector);
        if (s.lambda1 - mu2 < 0.05 * s.lambda1) continue;
        double inv = 1.0 / s.lambda1;
        double eps = 1e-3 / s.lambda1;
        CentralityField below =
            alpha_centrality_iterative(g, inv - eps, 1.0, 1e-10, 80000);
        CentralityField above =
            alpha_centrality_iterative(g, inv + eps, 1.0, 1e-10, 80000);
        CHECK((below.matrix - above.matrix).cwiseAbs().maxCoeff() < 1e-4);
        ++done;
    }
}

TEST_CASE("symmetric limit: converged ranking equals eigenvector centrality") {
    std::mt19937 rng(404);
    int done = 0;
    while (done < 8) {
        Graph g = random_connected_graph(rng, 13, 0.3, false, false);
        SpectralInfo s = dominant_eigenpair(g, 1e-12);
        if (s.lambda1 < 1.5) continue;
        double mu2 = second_eigen_magnitude(g.adjacency, s.lambda1, s.vector);
        if (s.lambda1 - mu2 < 0.05 * s.lambda1) continue;
        double alpha = std::min(1.0, 1.1 / s.lambda1);
        if (alpha * s.lambda1 <= 1.0) continue;
        Eigen::VectorXd conv =
            alpha_centrality_scores(g, alpha, 1.0, 1e-11, 30000);
        Eigen::VectorXd eig = eigenvector_centrality(g, 1e-12);
        CHECK(ordering_equal(conv / conv.lpNorm<1>(), eig / eig.lpNorm<1>(),
                             1e-8));
        ++done;
    }
}

TEST_CASE("oracle equivalence: iterative, closed form, truncated series") {
    std::mt19937 rng(505);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = random_connected_graph(rng, 10, 0.3, rep % 2 == 1, true);
        SpectralInfo s = dominant_eigenpair(g, 1e-12);
        double alpha = 0.9 / s.lambda1;
        CentralityField it = alpha_centrality_iterative(g, alpha, 1.0, 1e-13,
                                                        60000);
        CentralityField cf = alpha_centrality_closed_form(g, alpha);
        Eigen::MatrixXd series =
            testsupport::truncated_series(g.adjacency, alpha, 1.0, 400);
        series /= series.sum();
        CHECK((it.matrix - cf.matrix).cwiseAbs().maxCoeff() < 1e-8);
        CHECK((it.matrix - series).cwiseAbs().maxCoeff() < 1e-8);
    }
}
