#include "alphacen/graph.hpp"

#include <cctype>
#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

namespace alphacen {

Graph Graph::build(std::vector<std::string> labels, std::vector<Edge> edges,
                   bool directed, std::vector<std::string> node_values) {
    Graph g;
    g.labels = std::move(labels);
    g.edges = std::move(edges);
    g.directed = directed;
    g.node_values = std::move(node_values);
    const int n = g.node_count();
    if (g.node_values.empty()) g.node_values.assign(n, "");
    if (static_cast<int>(g.node_values.size()) != n)
        throw DataError("node metadata size does not match node count");
    for (int i = 0; i < n; ++i) {
        auto [it, fresh] = g.index_.emplace(g.labels[i], i);
        if (!fresh) throw ParseError("duplicate node label '" + g.labels[i] + "'");
    }
    g.adjacency = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : g.edges) {
        if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
            throw DataError("edge endpoint out of range");
        if (e.weight < 0.0)
            throw ParseError("negative edge weight");
        g.adjacency(e.src, e.dst) += e.weight;
        if (!directed && e.src != e.dst)
            g.adjacency(e.dst, e.src) += e.weight;
    }
    return g;
}

int Graph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

Graph load_edge_list(const std::string& text, bool directed, bool weighted) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    std::vector<Edge> edges;
    auto intern = [&](const std::string& tok) {
        auto it = index.find(tok);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(labels.size());
        index.emplace(tok, id);
        labels.push_back(tok);
        return id;
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string src, dst, rest;
        if (!(ls >> src)) continue;  // blank or comment-only line
        if (!(ls >> dst))
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected 'src dst [weight]'");
        double w = 1.0;
        std::string wtok;
        if (ls >> wtok) {
            if (!weighted)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": unexpected third column in unweighted input");
            try {
                std::size_t used = 0;
                w = std::stod(wtok, &used);
                if (used != wtok.size()) throw std::invalid_argument(wtok);
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) +
                                 ": bad weight '" + wtok + "'");
            }
        }
        if (ls >> rest)
            throw ParseError("line " + std::to_string(lineno) +
                             ": trailing tokens after weight");
        if (w < 0.0)
            throw ParseError("line " + std::to_string(lineno) +
                             ": negative weight");
        edges.push_back({intern(src), intern(dst), w});
    }
    return Graph::build(std::move(labels), std::move(edges), directed);
}

namespace {

// GML token stream: brackets, bare words/numbers, quoted strings.
struct GmlLexer {
    const std::string& text;
    std::size_t pos = 0;

    explicit GmlLexer(const std::string& t) : text(t) {}

    std::optional<std::string> next() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos >= text.size()) return std::nullopt;
        char c = text[pos];
        if (c == '[' || c == ']') {
            ++pos;
            return std::string(1, c);
        }
        if (c == '"') {
            std::size_t end = text.find('"', pos + 1);
            if (end == std::string::npos)
                throw ParseError("GML: unterminated string literal");
            std::string tok = text.substr(pos + 1, end - pos - 1);
            pos = end + 1;
            return tok;
        }
        std::size_t start = pos;
        while (pos < text.size() &&
               !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '[' && text[pos] != ']')
            ++pos;
        return text.substr(start, pos - start);
    }
};

void warn_unknown_key(const std::string& context, const std::string& key,
                      std::set<std::string>& warned) {
    if (warned.insert(context + "." + key).second)
        std::cerr << "warning: ignoring GML key '" << key << "' in " << context
                  << " block\n";
}

}  // namespace

Graph load_gml(const std::string& text) {
    GmlLexer lex(text);
    std::set<std::string> warned;

    struct NodeRec {
        std::string id, label, value;
        bool has_id = false;
    };
    struct EdgeRec {
        std::string source, target;
        double weight = 1.0;
        bool has_source = false, has_target = false;
    };
    std::vector<NodeRec> nodes;
    std::vector<EdgeRec> edges;
    bool directed = false;
    bool saw_graph = false;

    auto expect = [&](const char* what) {
        auto tok = lex.next();
        if (!tok) throw ParseError(std::string("GML: unexpected end, expected ") + what);
        return *tok;
    };

    // skip a possibly-nested bracketed block whose key we do not understand
    auto skip_value = [&](const std::string& first) {
        if (first != "[") return;
        int depth = 1;
        while (depth > 0) {
            std::string tok = expect("']'");
            if (tok == "[") ++depth;
            if (tok == "]") --depth;
        }
    };

    std::optional<std::string> tok;
    while ((tok = lex.next())) {
        if (*tok != "graph") {
            // Creator and similar top-level keys carry one value
            std::string val = expect("value");
            skip_value(val);
            continue;
        }
        saw_graph = true;
        if (expect("'['") != "[") throw ParseError("GML: expected '[' after graph");
        while (true) {
            std::string key = expect("graph key");
            if (key == "]") break;
            if (key == "directed") {
                directed = expect("0 or 1") == "1";
            } else if (key == "node") {
                if (expect("'['") != "[") throw ParseError("GML: expected '[' after node");
                NodeRec rec;
                while (true) {
                    std::string k = expect("node key");
                    if (k == "]") break;
                    std::string v = expect("node value");
                    if (k == "id") {
                        rec.id = v;
                        rec.has_id = true;
                    } else if (k == "label") {
                        rec.label = v;
                    } else if (k == "value") {
                        rec.value = v;
                    } else {
                        warn_unknown_key("node", k, warned);
                        skip_value(v);
                    }
                }
                if (!rec.has_id) throw ParseError("GML: node block without id");
                nodes.push_back(std::move(rec));
            } else if (key == "edge") {
                if (expect("'['") != "[") throw ParseError("GML: expected '[' after edge");
                EdgeRec rec;
                while (true) {
                    std::string k = expect("edge key");
                    if (k == "]") break;
                    std::string v = expect("edge value");
                    if (k == "source") {
                        rec.source = v;
                        rec.has_source = true;
                    } else if (k == "target") {
                        rec.target = v;
                        rec.has_target = true;
                    } else if (k == "value" || k == "weight") {
                        try {
                            rec.weight = std::stod(v);
                        } catch (const std::exception&) {
                            throw ParseError("GML: bad edge value '" + v + "'");
                        }
                    } else {
                        warn_unknown_key("edge", k, warned);
                        skip_value(v);
                    }
                }
                if (!rec.has_source || !rec.has_target)
                    throw ParseError("GML: edge block without source/target");
                edges.push_back(std::move(rec));
            } else {
                std::string v = expect("value");
                warn_unknown_key("graph", key, warned);
                skip_value(v);
            }
        }
    }
    if (!saw_graph) throw ParseError("GML: no graph block found");

    std::vector<std::string> labels, values;
    std::unordered_map<std::string, int> by_id;
    for (auto& rec : nodes) {
        if (!by_id.emplace(rec.id, static_cast<int>(labels.size())).second)
            throw ParseError("GML: duplicate node id " + rec.id);
        labels.push_back(rec.label.empty() ? rec.id : rec.label);
        values.push_back(rec.value);
    }
    std::vector<Edge> built;
    built.reserve(edges.size());
    for (auto& rec : edges) {
        auto s = by_id.find(rec.source), t = by_id.find(rec.target);
        if (s == by_id.end())
            throw ParseError("GML: edge references unknown id " + rec.source);
        if (t == by_id.end())
            throw ParseError("GML: edge references unknown id " + rec.target);
        built.push_back({s->second, t->second, rec.weight});
    }
    return Graph::build(std::move(labels), std::move(built), directed,
                        std::move(values));
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# " << (g.directed ? "directed" : "undirected") << "\n";
    char buf[64];
    for (const Edge& e : g.edges) {
        std::snprintf(buf, sizeof buf, "%.17g", e.weight);
        out << g.labels[e.src] << ' ' << g.labels[e.dst] << ' ' << buf << '\n';
    }
    return out.str();
}

Graph symmetrize(const Graph& g) {
    const int n = g.node_count();
    Eigen::MatrixXd sym = g.adjacency + g.adjacency.transpose();
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (sym(i, j) != 0.0) edges.push_back({i, j, sym(i, j)});
    return Graph::build(g.labels, std::move(edges), /*directed=*/false,
                        g.node_values);
}

DegreeSummary degree_summary(const Graph& g) {
    DegreeSummary s;
    s.out_degree = g.adjacency.rowwise().sum();
    s.in_degree = g.adjacency.colwise().sum().transpose();
    s.max_out = g.node_count() ? s.out_degree.maxCoeff() : 0.0;
    s.max_in = g.node_count() ? s.in_degree.maxCoeff() : 0.0;
    return s;
}

}  // namespace alphacen
