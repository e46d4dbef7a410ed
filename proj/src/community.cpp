#include "alphacen/community.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <deque>
#include <random>

#include "alphacen/centrality.hpp"

namespace alphacen {

int Partition::group_count() const {
    int k = 0;
    for (int c : assignment) k = std::max(k, c + 1);
    return k;
}

namespace {

bool series_diverged(const CentralityField& field) {
    return !std::isfinite(field.scale) || field.scale > 1e12;
}

Eigen::MatrixXd conn_from_field(const CentralityField& field,
                                const CommunityOptions& options) {
    if (options.integer_rounding && options.use_normalized)
        throw std::invalid_argument(
            "integer rounding applies to raw path counts, not the normalized "
            "matrix");
    if (options.use_normalized) return field.matrix;
    if (series_diverged(field)) {
        if (options.integer_rounding)
            throw NumericalError(
                "integer rounding needs finite path counts; alpha is at or "
                "beyond 1/lambda1");
        // divergent series: the normalized matrix carries the same division
        return field.matrix;
    }
    Eigen::MatrixXd conn = field.scale * field.matrix;
    if (options.integer_rounding)
        conn = conn.unaryExpr([](double x) { return std::round(x); });
    return conn;
}

}  // namespace

Eigen::MatrixXd connectivity_matrix(const Graph& g, double alpha,
                                    const CommunityOptions& options) {
    CentralityField field = alpha_centrality_iterative(g, alpha, options.beta,
                                                       options.tol,
                                                       options.max_iter);
    return conn_from_field(field, options);
}

NullModel null_model(const Eigen::MatrixXd& connectivity) {
    if (connectivity.rows() != connectivity.cols())
        throw std::invalid_argument("connectivity matrix must be square");
    NullModel nm;
    nm.total = connectivity.sum();
    if (!(nm.total > 0.0))
        throw NumericalError("null model undefined: connectivity grand sum is "
                             "not positive");
    nm.out_strength = connectivity.rowwise().sum();
    nm.in_strength = connectivity.colwise().sum().transpose();
    nm.expected = nm.out_strength * nm.in_strength.transpose() / nm.total;
    return nm;
}

ModularityMatrix modularity_matrix(const Graph& g, double alpha,
                                   const CommunityOptions& options) {
    Eigen::MatrixXd conn = connectivity_matrix(g, alpha, options);
    NullModel nm = null_model(conn);
    ModularityMatrix mm;
    mm.alpha = alpha;
    mm.matrix = conn - nm.expected;
    mm.symmetrized = g.directed;
    mm.matrix = ((mm.matrix + mm.matrix.transpose()) / 2.0).eval();
    return mm;
}

namespace {

constexpr double kTieEps = 1e-12;

double split_gain(const Eigen::MatrixXd& b, const std::vector<double>& s) {
    const int n = static_cast<int>(s.size());
    double q = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += b(i, j) * s[j];
        q += s[i] * row;
    }
    return q / 2.0;
}

// leading (algebraically largest) eigenpair of a symmetric matrix via
// shifted power iteration; falls back to a dense solve on stagnation
std::pair<double, Eigen::VectorXd> leading_symmetric_eigenpair(
    const Eigen::MatrixXd& b, int max_iter, bool& used_dense, int& iterations) {
    const int n = static_cast<int>(b.rows());
    used_dense = false;
    iterations = 0;
    const double shift =
        b.cwiseAbs().rowwise().sum().maxCoeff() + 1e-12;  // Gershgorin bound

    std::mt19937 rng(0x5eed);  // fixed seed: deterministic output contract
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = uni(rng);
    v.normalize();

    double mu = 0.0;
    for (int iter = 1; iter <= max_iter; ++iter) {
        Eigen::VectorXd w = b * v + shift * v;
        double norm = w.norm();
        iterations = iter;
        if (norm == 0.0) break;  // b = -shift*I, handled by the fallback
        w /= norm;
        mu = w.dot(b * w);
        if ((v - w).lpNorm<Eigen::Infinity>() < 1e-13 ||
            (v + w).lpNorm<Eigen::Infinity>() < 1e-13) {
            return {mu, w};
        }
        v = std::move(w);
    }
    if (n > 512)
        throw NumericalError(
            "leading-eigenvector power iteration failed to converge and the "
            "block is too large for a dense fallback");
    used_dense = true;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
    if (solver.info() != Eigen::Success)
        throw NumericalError("dense symmetric eigensolve failed");
    return {solver.eigenvalues()(n - 1), solver.eigenvectors().col(n - 1)};
}

}  // namespace

BisectionOutcome leading_eigenvector_bisect(const Eigen::MatrixXd& b_sub) {
    const int n = static_cast<int>(b_sub.rows());
    BisectionOutcome out;
    if (n < 2) return out;

    const double scale = b_sub.cwiseAbs().sum();
    const double eps = 1e-12 * std::max(scale, 1e-30);

    auto [mu, vec] = leading_symmetric_eigenpair(b_sub, 10000, out.used_dense_fallback,
                                                 out.iterations);
    out.eigenvalue = mu;
    if (mu <= eps) return out;  // no positive direction: indivisible

    std::vector<double> s(n, 0.0);
    for (int i = 0; i < n; ++i) {
        if (vec[i] > kTieEps)
            s[i] = 1.0;
        else if (vec[i] < -kTieEps)
            s[i] = -1.0;
    }
    // near-zero entries: index order, whichever side gains more
    for (int i = 0; i < n; ++i) {
        if (s[i] != 0.0) continue;
        s[i] = 1.0;
        double plus = split_gain(b_sub, s);
        s[i] = -1.0;
        double minus = split_gain(b_sub, s);
        s[i] = (plus >= minus) ? 1.0 : -1.0;
    }
    double gain = split_gain(b_sub, s);
    bool has_plus = false, has_minus = false;
    for (double x : s) (x > 0 ? has_plus : has_minus) = true;
    if (gain <= eps || !has_plus || !has_minus) {
        out.delta_q = gain;
        return out;
    }
    out.split = true;
    out.delta_q = gain;
    out.side.resize(n);
    // canonical orientation: the side holding the first node is "1"
    double lead = s[0];
    for (int i = 0; i < n; ++i) out.side[i] = (s[i] == lead) ? 1 : 0;
    return out;
}

Partition detect_communities(const Graph& g, double alpha,
                             const CommunityOptions& options) {
    const int n = g.node_count();
    if (n < 1) throw std::invalid_argument("empty graph");

    Partition part;
    part.alpha = alpha;

    CentralityField field = alpha_centrality_iterative(g, alpha, options.beta,
                                                       options.tol,
                                                       options.max_iter);
    // Past 1/lambda1 the normalized matrix sits on its rank-one plateau and
    // the modularity matrix vanishes identically; what is left numerically is
    // iteration noise, so the division is the trivial one.
    if (series_diverged(field)) {
        if (options.integer_rounding)
            throw NumericalError(
                "integer rounding needs finite path counts; alpha is at or "
                "beyond 1/lambda1");
        part.assignment.assign(n, 0);
        part.q_value = 0.0;
        return part;
    }

    Eigen::MatrixXd conn = conn_from_field(field, options);
    NullModel nm = null_model(conn);
    Eigen::MatrixXd B = conn - nm.expected;
    B = ((B + B.transpose()) / 2.0).eval();

    std::deque<std::vector<int>> queue;
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    queue.push_back(std::move(all));
    std::vector<std::vector<int>> final_groups;

    while (!queue.empty()) {
        // canonical processing order: group with the smallest node first
        std::sort(queue.begin(), queue.end(),
                  [](const auto& a, const auto& b) { return a[0] < b[0]; });
        std::vector<int> group = std::move(queue.front());
        queue.pop_front();
        const int m = static_cast<int>(group.size());
        if (m < 2) {
            final_groups.push_back(std::move(group));
            continue;
        }
        Eigen::MatrixXd bg(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) bg(i, j) = B(group[i], group[j]);
        // generalized subdivision correction keeps Q changes exact
        Eigen::VectorXd row_sums = bg.rowwise().sum();
        bg.diagonal() -= row_sums;

        BisectionOutcome outcome = leading_eigenvector_bisect(bg);
        if (!outcome.split) {
            final_groups.push_back(std::move(group));
            continue;
        }
        std::vector<int> left, right;
        for (int i = 0; i < m; ++i)
            (outcome.side[i] ? left : right).push_back(group[i]);
        part.history.push_back({group[0], m, static_cast<int>(left.size()),
                                static_cast<int>(right.size()),
                                outcome.delta_q});
        queue.push_back(std::move(left));
        queue.push_back(std::move(right));
    }

    std::sort(final_groups.begin(), final_groups.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    part.assignment.assign(n, -1);
    for (int c = 0; c < static_cast<int>(final_groups.size()); ++c)
        for (int node : final_groups[c]) part.assignment[node] = c;

    // reported Q always uses the normalized matrix (beta factors out of it)
    NullModel nm_norm = null_model(field.matrix);
    part.q_value = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (part.assignment[i] == part.assignment[j])
                part.q_value += field.matrix(i, j) - nm_norm.expected(i, j);
    return part;
}

double modularity_value(const Graph& g, const std::vector<int>& assignment,
                        double alpha, double tol, int max_iter) {
    const int n = g.node_count();
    if (static_cast<int>(assignment.size()) != n)
        throw std::invalid_argument("assignment size must match node count");
    for (int c : assignment)
        if (c < 0) throw std::invalid_argument("negative community index");

    CentralityField field =
        alpha_centrality_iterative(g, alpha, 1.0, tol, max_iter);
    NullModel nm = null_model(field.matrix);
    double q = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (assignment[i] == assignment[j])
                q += field.matrix(i, j) - nm.expected(i, j);
    return q;
}

}  // namespace alphacen
