#include "alphacen/centrality.hpp"

#include <Eigen/LU>
#include <cmath>
#include <limits>

namespace alphacen {

namespace {

void check_alpha_range(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in [0, 1]");
}

void check_beta(double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
}

// A * m restricted to the edge list, so the score-only path stays O(M).
Eigen::VectorXd edge_matvec(const Graph& g, const Eigen::VectorXd& m,
                            bool transpose) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(g.node_count());
    for (const Edge& e : g.edges) {
        int i = transpose ? e.dst : e.src;
        int j = transpose ? e.src : e.dst;
        out[i] += e.weight * m[j];
        if (!g.directed && e.src != e.dst) out[j] += e.weight * m[i];
    }
    return out;
}

}  // namespace

SpectralInfo dominant_eigenpair(const Graph& g, double tol, int max_iter) {
    if (g.node_count() < 1) throw std::invalid_argument("empty graph");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const int n = g.node_count();
    const Eigen::MatrixXd& A = g.adjacency;

    SpectralInfo info;
    auto degenerate_result = [&] {
        info.degenerate = true;
        info.lambda1 = 0.0;
        info.vector = Eigen::VectorXd::Zero(n);
        info.tolerance_met = true;
        return info;
    };
    if (A.cwiseAbs().sum() == 0.0) return degenerate_result();
    // a cycle-free directed graph has a nilpotent adjacency: spectral radius
    // zero, no dominant direction (Kahn peel on the support)
    if (g.directed) {
        std::vector<int> indeg(n, 0);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                if (A(i, j) != 0.0) ++indeg[j];
        std::vector<int> stack;
        for (int j = 0; j < n; ++j)
            if (indeg[j] == 0) stack.push_back(j);
        int peeled = 0;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            ++peeled;
            for (int j = 0; j < n; ++j)
                if (A(i, j) != 0.0 && --indeg[j] == 0) stack.push_back(j);
        }
        if (peeled == n) return degenerate_result();
    }

    // a positive shift keeps the iteration off the -lambda1 eigendirection of
    // bipartite graphs while leaving the Perron vector untouched
    DegreeSummary deg = degree_summary(g);
    const double shift = std::min(deg.max_out, deg.max_in) / 8.0 + 1e-12;

    Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
    double lambda = 0.0;
    for (int iter = 1; iter <= max_iter; ++iter) {
        Eigen::VectorXd w = A * v;
        info.iterations = iter;
        lambda = v.dot(w);
        bool done = (w - lambda * v).lpNorm<Eigen::Infinity>() <=
                    tol * std::max(std::abs(lambda), 1e-300);
        w += shift * v;
        double norm = w.norm();
        if (norm == 0.0) {  // start vector fell into the null space
            info.degenerate = true;
            info.lambda1 = 0.0;
            info.vector = Eigen::VectorXd::Zero(n);
            info.tolerance_met = true;
            return info;
        }
        v = w / norm;
        if (done) {
            info.tolerance_met = true;
            break;
        }
    }
    // orient so the largest-magnitude entry is positive
    int argmax = 0;
    for (int i = 1; i < n; ++i)
        if (std::abs(v[i]) > std::abs(v[argmax])) argmax = i;
    if (v[argmax] < 0.0) v = -v;
    info.vector = v;
    info.lambda1 = v.dot(A * v);
    return info;
}

CentralityField alpha_centrality_iterative(const Graph& g, double alpha,
                                           double beta, double tol,
                                           int max_iter) {
    check_alpha_range(alpha);
    check_beta(beta);
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const int n = g.node_count();
    if (n < 1) throw std::invalid_argument("empty graph");
    const Eigen::MatrixXd& A = g.adjacency;
    const double grand = A.sum();
    if (grand <= 0.0)
        throw NumericalError("graph has no edges: grand sum is zero, "
                             "normalization undefined");

    CentralityField field;
    field.alpha = alpha;
    field.beta = beta;

    // state: M = C / sum(C), r = beta / sum(C); start from C0 = beta*A
    Eigen::MatrixXd M = A / grand;
    double r = 1.0 / grand;
    field.iterations = 1;
    field.residual = 0.0;
    field.converged = true;
    if (alpha > 0.0) {
        field.converged = false;
        for (int iter = 1; iter <= max_iter; ++iter) {
            Eigen::MatrixXd T = r * A + alpha * (M * A);
            double t = T.sum();
            T /= t;
            r /= t;
            double change = (T - M).lpNorm<Eigen::Infinity>();
            M = std::move(T);
            field.iterations = iter;
            field.residual = change;
            if (change < tol) {
                field.converged = true;
                break;
            }
        }
    }
    field.matrix = std::move(M);
    field.node_scores = field.matrix.rowwise().sum();
    field.scale = (r > 1e-280) ? beta / r
                               : std::numeric_limits<double>::infinity();
    return field;
}

CentralityField alpha_centrality_closed_form(const Graph& g, double alpha,
                                             double beta) {
    if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be nonnegative");
    check_beta(beta);
    const int n = g.node_count();
    if (n < 1) throw std::invalid_argument("empty graph");
    const Eigen::MatrixXd& A = g.adjacency;
    if (A.sum() <= 0.0)
        throw NumericalError("graph has no edges: normalization undefined");

    Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n) - alpha * A;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(system.transpose());
    Eigen::MatrixXd C = beta * lu.solve(A.transpose()).transpose();

    // the series is nonnegative and solves the system; both checks fail when
    // alpha reaches 1/lambda1 and the resolvent flips sign or blows up
    double magnitude = C.cwiseAbs().maxCoeff();
    double residual = (C * system - beta * A).cwiseAbs().maxCoeff();
    if (!std::isfinite(magnitude) || residual > 1e-8 * std::max(1.0, magnitude) ||
        C.minCoeff() < -1e-9 * std::max(1.0, magnitude))
        throw NumericalError(
            "closed form invalid: alpha is at or beyond 1/lambda1 "
            "(I - alpha*A is numerically singular or sign-indefinite)");

    CentralityField field;
    field.alpha = alpha;
    field.beta = beta;
    field.scale = C.sum();
    field.matrix = C / field.scale;
    field.node_scores = field.matrix.rowwise().sum();
    field.iterations = 0;
    field.converged = true;
    field.residual = 0.0;
    return field;
}

Eigen::VectorXd alpha_centrality_scores(const Graph& g, double alpha,
                                        double beta, double tol, int max_iter,
                                        ScoreSums sums) {
    check_alpha_range(alpha);
    check_beta(beta);
    const int n = g.node_count();
    if (n < 1) throw std::invalid_argument("empty graph");
    const bool cols = (sums == ScoreSums::columns);
    // d = A*1 (row path) or A^T*1 (column path)
    Eigen::VectorXd d = edge_matvec(g, Eigen::VectorXd::Ones(n), cols);
    double grand = d.sum();
    if (grand <= 0.0)
        throw NumericalError("graph has no edges: normalization undefined");

    Eigen::VectorXd m = d / grand;
    double r = 1.0 / grand;
    if (alpha == 0.0) return m;
    for (int iter = 1; iter <= max_iter; ++iter) {
        Eigen::VectorXd T = r * d + alpha * edge_matvec(g, m, cols);
        double t = T.sum();
        T /= t;
        r /= t;
        double change = (T - m).lpNorm<Eigen::Infinity>();
        m = std::move(T);
        if (change < tol) break;
    }
    return m;
}

Eigen::VectorXd eigenvector_centrality(const Graph& g, double tol) {
    SpectralInfo info = dominant_eigenpair(g, tol);
    if (info.degenerate)
        throw NumericalError("eigenvector centrality undefined on a zero matrix");
    return info.vector;
}

Eigen::VectorXd katz_scores(const Graph& g, double alpha) {
    if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be nonnegative");
    const int n = g.node_count();
    if (n < 1) throw std::invalid_argument("empty graph");
    const Eigen::MatrixXd& A = g.adjacency;

    Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n) - alpha * A;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
    Eigen::VectorXd y = lu.solve(Eigen::VectorXd::Ones(n));
    Eigen::VectorXd katz = alpha * (A * y);

    double magnitude = katz.cwiseAbs().maxCoeff();
    double residual = (system * y - Eigen::VectorXd::Ones(n))
                          .lpNorm<Eigen::Infinity>();
    if (!std::isfinite(magnitude) || residual > 1e-8 * std::max(1.0, y.cwiseAbs().maxCoeff()) ||
        katz.minCoeff() < -1e-9 * std::max(1.0, magnitude))
        throw NumericalError("Katz series diverges: alpha >= 1/lambda1");
    return katz;
}

Eigen::MatrixXd random_walk_proximity(const Graph& g, double c, double tol) {
    if (!(c > 0.0 && c < 1.0))
        throw std::invalid_argument("restart constant c must lie in (0, 1)");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const int n = g.node_count();
    const Eigen::MatrixXd& A = g.adjacency;
    Eigen::VectorXd out_deg = A.rowwise().sum();
    for (int i = 0; i < n; ++i)
        if (out_deg[i] <= 0.0)
            throw NumericalError("random-walk proximity undefined: node '" +
                                 g.labels[i] + "' has zero out-degree");

    Eigen::MatrixXd T = out_deg.cwiseInverse().asDiagonal() * A;
    // P = sum_{k>=1} c^k T^k via P <- c*T + c*T*P; contraction factor c
    Eigen::MatrixXd cT = c * T;
    Eigen::MatrixXd P = cT;
    int max_iter = static_cast<int>(std::log(tol) / std::log(c)) + 2;
    for (int iter = 0; iter < max_iter; ++iter) {
        Eigen::MatrixXd next = cT + cT * P;
        double change = (next - P).lpNorm<Eigen::Infinity>();
        P = std::move(next);
        if (change < tol) break;
    }
    return P;
}

Eigen::VectorXd degree_centrality(const Graph& g) {
    return g.adjacency.rowwise().sum();
}

double centrality_radius(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument(
            "centrality radius defined for alpha in [0, 1): radius diverges "
            "at alpha = 1");
    return 1.0 / (1.0 - alpha);
}

void ProximityConfig::validate() const {
    auto need = [](bool present, const char* what, bool required) {
        if (required && !present)
            throw std::invalid_argument(std::string("missing parameter: ") + what);
        if (!required && present)
            throw std::invalid_argument(std::string("unexpected parameter: ") + what);
    };
    switch (scheme) {
        case Scheme::alpha_centrality:
            need(alpha.has_value(), "alpha", true);
            need(beta.has_value(), "beta", true);
            need(restart.has_value(), "restart", false);
            break;
        case Scheme::katz:
            need(alpha.has_value(), "alpha", true);
            need(beta.has_value(), "beta", false);
            need(restart.has_value(), "restart", false);
            break;
        case Scheme::random_walk:
            need(restart.has_value(), "restart", true);
            need(alpha.has_value(), "alpha", false);
            need(beta.has_value(), "beta", false);
            break;
        case Scheme::degree:
            need(alpha.has_value(), "alpha", false);
            need(beta.has_value(), "beta", false);
            need(restart.has_value(), "restart", false);
            break;
    }
}

Eigen::VectorXd proximity_scores(const Graph& g, const ProximityConfig& config,
                                 double tol, int max_iter) {
    config.validate();
    switch (config.scheme) {
        case ProximityConfig::Scheme::alpha_centrality:
            return alpha_centrality_scores(g, *config.alpha, *config.beta, tol,
                                           max_iter);
        case ProximityConfig::Scheme::katz:
            return katz_scores(g, *config.alpha);
        case ProximityConfig::Scheme::random_walk:
            return random_walk_proximity(g, *config.restart, tol).rowwise().sum();
        case ProximityConfig::Scheme::degree:
            return degree_centrality(g);
    }
    throw std::logic_error("unreachable");
}

}  // namespace alphacen
