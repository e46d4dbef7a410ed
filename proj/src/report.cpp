#include "alphacen/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace alphacen {

using nlohmann::json;

std::string format_number(double value, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
    return buf;
}

std::string scores_csv(const std::vector<std::pair<std::string, double>>& ranked) {
    std::ostringstream out;
    out << "node_label,score\n";
    for (const auto& [label, score] : ranked)
        out << label << ',' << format_number(score) << '\n';
    return out.str();
}

std::string scores_json(const CentralityField& field,
                        const std::vector<std::pair<std::string, double>>& ranked) {
    json j;
    j["alpha"] = field.alpha;
    j["beta"] = field.beta;
    j["iterations"] = field.iterations;
    j["converged"] = field.converged;
    j["residual"] = field.residual;
    j["scores"] = json::array();
    for (const auto& [label, score] : ranked)
        j["scores"].push_back({{"node", label}, {"score", score}});
    return j.dump(2) + "\n";
}

std::string partition_csv(const Graph& g, const Partition& p) {
    std::ostringstream out;
    out << "node_label,community\n";
    for (int i = 0; i < g.node_count(); ++i)
        out << g.labels[i] << ',' << p.assignment[i] << '\n';
    return out.str();
}

std::string partition_json(const Graph& g, const Partition& p) {
    json j;
    j["alpha"] = p.alpha;
    j["q_value"] = p.q_value;
    j["groups"] = p.group_count();
    json assign = json::object();
    for (int i = 0; i < g.node_count(); ++i)
        assign[g.labels[i]] = p.assignment[i];
    j["assignment"] = std::move(assign);
    j["history"] = json::array();
    for (const BisectionRecord& rec : p.history)
        j["history"].push_back({{"first_node", g.labels[rec.first_node]},
                                {"group_size", rec.group_size},
                                {"left_size", rec.left_size},
                                {"right_size", rec.right_size},
                                {"delta_q", rec.delta_q}});
    return j.dump(2) + "\n";
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
    std::ostringstream out;
    out << "alpha,groups,purity,q_value\n";
    for (const SweepRecord& rec : records)
        out << format_number(rec.alpha) << ',' << rec.group_count << ','
            << format_number(rec.purity) << ',' << format_number(rec.q_value)
            << '\n';
    return out.str();
}

std::string sweep_json(const std::vector<SweepRecord>& records) {
    json j = json::array();
    for (const SweepRecord& rec : records) {
        json scores = json::array();
        for (Eigen::Index i = 0; i < rec.node_scores.size(); ++i)
            scores.push_back(rec.node_scores[i]);
        j.push_back({{"alpha", rec.alpha},
                     {"groups", rec.group_count},
                     {"purity", rec.purity},
                     {"q_value", rec.q_value},
                     {"node_scores", std::move(scores)}});
    }
    return j.dump(2) + "\n";
}

std::string spectrum_csv(const SpectralInfo& info, double gershgorin_bound) {
    std::ostringstream out;
    out << "lambda1,inv_lambda1,iterations,tolerance_met,gershgorin_bound\n";
    out << format_number(info.lambda1) << ','
        << (info.lambda1 > 0 ? format_number(1.0 / info.lambda1) : "inf") << ','
        << info.iterations << ',' << (info.tolerance_met ? 1 : 0) << ','
        << format_number(gershgorin_bound) << '\n';
    return out.str();
}

std::string spectrum_json(const SpectralInfo& info, double gershgorin_bound) {
    json j;
    j["lambda1"] = info.lambda1;
    if (info.lambda1 > 0) j["inv_lambda1"] = 1.0 / info.lambda1;
    j["iterations"] = info.iterations;
    j["tolerance_met"] = info.tolerance_met;
    j["degenerate"] = info.degenerate;
    j["gershgorin_bound"] = gershgorin_bound;
    return j.dump(2) + "\n";
}

std::string roles_csv(const Graph& g, const RoleCoordinates& rc) {
    std::ostringstream out;
    out << "node_label,z,participation,role\n";
    for (int i = 0; i < g.node_count(); ++i)
        out << g.labels[i] << ',' << format_number(rc.z[i]) << ','
            << format_number(rc.p[i]) << ',' << role_name(rc.roles[i]) << '\n';
    return out.str();
}

std::string roles_json(const Graph& g, const RoleCoordinates& rc) {
    json j = json::array();
    for (int i = 0; i < g.node_count(); ++i)
        j.push_back({{"node", g.labels[i]},
                     {"z", rc.z[i]},
                     {"participation", rc.p[i]},
                     {"role", role_name(rc.roles[i])}});
    return j.dump(2) + "\n";
}

}  // namespace alphacen
