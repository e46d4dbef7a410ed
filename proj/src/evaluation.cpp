#include "alphacen/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "alphacen/centrality.hpp"

namespace alphacen {

namespace {

std::vector<std::string> nonblank_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto end = line.find_last_not_of(" \t");
        if (end == std::string::npos) continue;
        out.push_back(line.substr(0, end + 1));
    }
    return out;
}

}  // namespace

GroundTruth load_ground_truth(const std::string& label_text,
                              const std::string& exclusion_text) {
    GroundTruth truth;
    int lineno = 0;
    for (const std::string& line : nonblank_lines(label_text)) {
        ++lineno;
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
            throw ParseError("label line " + std::to_string(lineno) +
                             ": expected 'node<TAB>class'");
        std::string node = line.substr(0, tab);
        std::string cls = line.substr(tab + 1);
        if (truth.labels.count(node))
            throw ParseError("duplicate ground-truth entry for '" + node + "'");
        truth.labels[node] = cls;
        if (std::find(truth.classes.begin(), truth.classes.end(), cls) ==
            truth.classes.end())
            truth.classes.push_back(cls);
    }
    for (const std::string& line : nonblank_lines(exclusion_text))
        truth.excluded.insert(line);
    return truth;
}

GroundTruth ground_truth_from_metadata(const Graph& g) {
    GroundTruth truth;
    for (int i = 0; i < g.node_count(); ++i) {
        const std::string& v = g.node_values[i];
        if (v.empty()) continue;
        truth.labels[g.labels[i]] = v;
        if (std::find(truth.classes.begin(), truth.classes.end(), v) ==
            truth.classes.end())
            truth.classes.push_back(v);
    }
    return truth;
}

double purity(const Graph& g, const Partition& p, const GroundTruth& truth) {
    const int n = g.node_count();
    if (static_cast<int>(p.assignment.size()) != n)
        throw std::invalid_argument("partition does not cover the graph");
    std::vector<int> nodes;
    std::vector<const std::string*> cls;
    for (int i = 0; i < n; ++i) {
        if (truth.excluded.count(g.labels[i])) continue;
        auto it = truth.labels.find(g.labels[i]);
        if (it == truth.labels.end())
            throw DataError("node '" + g.labels[i] +
                            "' has no ground-truth class and is not excluded");
        nodes.push_back(i);
        cls.push_back(&it->second);
    }
    long long same = 0, together = 0;
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b) {
            if (*cls[a] != *cls[b]) continue;
            ++same;
            if (p.assignment[nodes[a]] == p.assignment[nodes[b]]) ++together;
        }
    if (same == 0)
        throw DataError("purity undefined: no same-class pair among labeled, "
                        "non-excluded nodes");
    return static_cast<double>(together) / static_cast<double>(same);
}

std::vector<SweepRecord> sweep(const Graph& g, const GroundTruth& truth,
                               const std::vector<double>& alphas,
                               const CommunityOptions& options) {
    std::vector<SweepRecord> records;
    records.reserve(alphas.size());
    for (double alpha : alphas) {
        Partition part = detect_communities(g, alpha, options);
        SweepRecord rec;
        rec.alpha = alpha;
        rec.group_count = part.group_count();
        rec.purity = purity(g, part, truth);
        rec.q_value = part.q_value;
        rec.node_scores = alpha_centrality_scores(g, alpha, 1.0, options.tol,
                                                  options.max_iter);
        records.push_back(std::move(rec));
    }
    std::stable_sort(records.begin(), records.end(),
                     [](const SweepRecord& a, const SweepRecord& b) {
                         return a.alpha < b.alpha;
                     });
    return records;
}

std::vector<std::pair<std::string, double>> rank_nodes(
    const Eigen::VectorXd& scores, const std::vector<std::string>& labels) {
    if (scores.size() != static_cast<Eigen::Index>(labels.size()))
        throw std::invalid_argument("scores/labels size mismatch");
    for (Eigen::Index i = 0; i < scores.size(); ++i)
        if (std::isnan(scores[i]))
            throw std::invalid_argument("NaN score for node '" + labels[i] + "'");
    std::vector<std::pair<std::string, double>> ranked;
    ranked.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        ranked.emplace_back(labels[i], scores[static_cast<Eigen::Index>(i)]);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return ranked;
}

bool ordering_equal(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                    double tol) {
    if (a.size() != b.size())
        throw std::invalid_argument("ordering_equal: size mismatch");
    auto sgn = [tol](double d) { return std::abs(d) < tol ? 0 : (d > 0 ? 1 : -1); };
    for (Eigen::Index i = 0; i < a.size(); ++i)
        for (Eigen::Index j = i + 1; j < a.size(); ++j)
            if (sgn(a[i] - a[j]) != sgn(b[i] - b[j])) return false;
    return true;
}

const char* role_name(NodeRole role) {
    switch (role) {
        case NodeRole::ultra_peripheral: return "ultra-peripheral";
        case NodeRole::peripheral: return "peripheral";
        case NodeRole::connector: return "connector";
        case NodeRole::kinless: return "kinless";
        case NodeRole::provincial_hub: return "provincial-hub";
        case NodeRole::connector_hub: return "connector-hub";
        case NodeRole::global_hub: return "global-hub";
    }
    return "?";
}

RoleCoordinates role_coordinates(const Graph& g, const Partition& p) {
    const int n = g.node_count();
    if (static_cast<int>(p.assignment.size()) != n)
        throw std::invalid_argument("partition does not cover the graph");
    const int k = p.group_count();
    const Eigen::MatrixXd& A = g.adjacency;

    // kappa(i, c): weighted degree of i into community c
    Eigen::MatrixXd kappa = Eigen::MatrixXd::Zero(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (A(i, j) != 0.0) kappa(i, p.assignment[j]) += A(i, j);

    RoleCoordinates rc;
    rc.z = Eigen::VectorXd::Zero(n);
    rc.p = Eigen::VectorXd::Zero(n);
    for (int c = 0; c < k; ++c) {
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (p.assignment[i] == c) members.push_back(i);
        if (members.size() < 2) continue;  // singleton community: z stays 0
        double mean = 0.0;
        for (int i : members) mean += kappa(i, c);
        mean /= static_cast<double>(members.size());
        double var = 0.0;
        for (int i : members) {
            double d = kappa(i, c) - mean;
            var += d * d;
        }
        double sd = std::sqrt(var / static_cast<double>(members.size()));
        if (sd > 1e-12)
            for (int i : members) rc.z[i] = (kappa(i, c) - mean) / sd;
    }
    for (int i = 0; i < n; ++i) {
        double deg = kappa.row(i).sum();
        if (deg <= 0.0) continue;
        double sum_sq = 0.0;
        for (int c = 0; c < k; ++c) {
            double frac = kappa(i, c) / deg;
            sum_sq += frac * frac;
        }
        rc.p[i] = 1.0 - sum_sq;
    }
    rc.roles.resize(n);
    for (int i = 0; i < n; ++i) {
        double z = rc.z[i], pp = rc.p[i];
        if (z >= 2.5) {
            rc.roles[i] = pp < 0.30 ? NodeRole::provincial_hub
                          : pp < 0.75 ? NodeRole::connector_hub
                                      : NodeRole::global_hub;
        } else {
            rc.roles[i] = pp < 0.05   ? NodeRole::ultra_peripheral
                          : pp < 0.62 ? NodeRole::peripheral
                          : pp < 0.80 ? NodeRole::connector
                                      : NodeRole::kinless;
        }
    }
    return rc;
}

}  // namespace alphacen
