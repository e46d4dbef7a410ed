// Command-line front end: load a bundled or user graph, rank nodes, divide
// into communities, sweep alpha, or report spectral and role data as CSV/JSON.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "alphacen/centrality.hpp"
#include "alphacen/community.hpp"
#include "alphacen/datasets.hpp"
#include "alphacen/evaluation.hpp"
#include "alphacen/graph.hpp"
#include "alphacen/report.hpp"

using namespace alphacen;

namespace {

struct CommonOpts {
    std::string dataset;
    std::string input;
    std::string input_format = "edgelist";
    bool directed = false;
    bool unweighted = false;
    bool symmetrize_flag = false;
    std::string labels_path;
    std::string exclusions_path;
    std::string output;
    std::string format = "csv";
    std::string data_dir;
    double beta = 1.0;
    double tol = 1e-9;
    int max_iter = 10000;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_truth = false) {
    auto* ds = cmd->add_option("--dataset", o.dataset,
                               "bundled dataset name (karate, florentine, "
                               "football, polbooks)");
    auto* in = cmd->add_option("--input", o.input, "path to a graph file");
    ds->excludes(in);
    cmd->add_option("--input-format", o.input_format, "edgelist or gml")
        ->check(CLI::IsMember({"edgelist", "gml"}));
    cmd->add_flag("--directed", o.directed, "treat edge-list input as directed");
    cmd->add_flag("--unweighted", o.unweighted,
                  "reject weight columns in edge-list input");
    cmd->add_flag("--symmetrize", o.symmetrize_flag,
                  "replace the adjacency with A + A^T before analysis");
    cmd->add_option("--output", o.output, "write here instead of stdout");
    cmd->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--data-dir", o.data_dir,
                    "bundled dataset directory (or ALPHACEN_DATA_DIR)");
    cmd->add_option("--beta", o.beta, "first-edge attenuation factor");
    cmd->add_option("--tol", o.tol, "iteration tolerance");
    cmd->add_option("--max-iter", o.max_iter, "iteration cap");
    if (with_truth) {
        cmd->add_option("--labels", o.labels_path,
                        "ground-truth label file (node<TAB>class)");
        cmd->add_option("--exclusions", o.exclusions_path,
                        "node labels excluded from purity, one per line");
    }
}

struct LoadedInput {
    Graph graph;
    std::optional<GroundTruth> truth;
};

LoadedInput load_input(const CommonOpts& o) {
    LoadedInput li;
    if (!o.dataset.empty()) {
        std::string dir = o.data_dir.empty() ? default_data_dir() : o.data_dir;
        LoadedDataset ds = load_dataset(o.dataset, dir);
        li.graph = std::move(ds.graph);
        li.truth = std::move(ds.truth);
    } else if (!o.input.empty()) {
        std::string text = read_text_file(o.input);
        li.graph = (o.input_format == "gml")
                       ? load_gml(text)
                       : load_edge_list(text, o.directed, !o.unweighted);
        GroundTruth meta = ground_truth_from_metadata(li.graph);
        if (!meta.labels.empty()) li.truth = std::move(meta);
    } else {
        throw CLI::ValidationError("one of --dataset or --input is required");
    }
    if (!o.labels_path.empty()) {
        std::string excl = o.exclusions_path.empty()
                               ? std::string()
                               : read_text_file(o.exclusions_path);
        li.truth = load_ground_truth(read_text_file(o.labels_path), excl);
    }
    if (o.symmetrize_flag) li.graph = symmetrize(li.graph);
    return li;
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw DataError("cannot write output file: " + o.output);
    out << text;
}

// "--alpha converged" runs the spectrum first and evaluates on the plateau
double resolve_alpha(const std::string& spec, const Graph& g) {
    if (spec == "converged") {
        SpectralInfo s = dominant_eigenpair(g);
        if (s.degenerate || s.lambda1 <= 0.0)
            throw NumericalError("cannot resolve converged alpha: lambda1 is 0");
        return std::min(1.0, 1.05 / s.lambda1);
    }
    try {
        std::size_t used = 0;
        double a = std::stod(spec, &used);
        if (used != spec.size()) throw std::invalid_argument(spec);
        return a;
    } catch (const std::exception&) {
        throw CLI::ValidationError("--alpha expects a number or 'converged'");
    }
}

std::vector<double> parse_alpha_list(const std::string& list,
                                     const std::string& range) {
    std::vector<double> alphas;
    if (!list.empty()) {
        std::size_t pos = 0;
        while (pos <= list.size()) {
            auto comma = list.find(',', pos);
            std::string tok = list.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (!tok.empty()) alphas.push_back(std::stod(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    if (!range.empty()) {
        double start, stop, step;
        if (std::sscanf(range.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 ||
            step <= 0.0)
            throw CLI::ValidationError("--alpha-range expects start:stop:step");
        for (double a = start; a <= stop + 1e-12; a += step)
            alphas.push_back(a);
    }
    for (double a : alphas)
        if (a < 0.0 || a > 1.0)
            throw CLI::ValidationError("alpha values must lie in [0, 1]");
    return alphas;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"normalized attenuated-path centrality and path-based "
                 "community analysis"};
    app.require_subcommand(1);

    CommonOpts rank_o, comm_o, sweep_o, spec_o, roles_o, conv_o;
    std::string rank_alpha = "converged", comm_alpha, roles_alpha;
    std::string sweep_list, sweep_range;
    std::string score_sums = "rows";
    bool rounding = false, use_normalized = false, roles_from_labels = false;
    std::string datasets_dir;

    auto* rank = app.add_subcommand("rank", "rank nodes by normalized "
                                            "attenuated-path centrality");
    add_common(rank, rank_o);
    rank->add_option("--alpha", rank_alpha, "attenuation in [0,1] or 'converged'");
    rank->add_option("--score-sums", score_sums,
                     "rows (paths from a node) or columns (paths into it)")
        ->check(CLI::IsMember({"rows", "columns"}));

    auto* comm = app.add_subcommand("communities",
                                    "divide the network by leading-eigenvector "
                                    "modularity maximization");
    add_common(comm, comm_o);
    comm->add_option("--alpha", comm_alpha, "attenuation in [0,1]")->required();
    comm->add_flag("--rounding", rounding,
                   "round path counts to integers before the null model");
    comm->add_flag("--use-normalized", use_normalized,
                   "build the null model from the normalized matrix");

    auto* sw = app.add_subcommand("sweep", "communities + purity across alphas");
    std::string sweep_scores_dir;
    add_common(sw, sweep_o, /*with_truth=*/true);
    sw->add_option("--alphas", sweep_list, "comma-separated alpha values");
    sw->add_option("--alpha-range", sweep_range, "start:stop:step");
    sw->add_option("--scores-dir", sweep_scores_dir,
                   "also write one node-score CSV per alpha into this directory");
    // default grid: step 1/min(max out-degree, max in-degree), up to 1/lambda1

    auto* spec = app.add_subcommand("spectrum",
                                    "dominant eigenvalue and its reciprocal");
    add_common(spec, spec_o);

    auto* roles = app.add_subcommand("roles", "z-P role coordinates per node");
    add_common(roles, roles_o, /*with_truth=*/true);
    roles->add_option("--alpha", roles_alpha,
                      "attenuation for the community division")->default_val("0");
    roles->add_flag("--from-labels", roles_from_labels,
                    "use ground-truth classes as the partition");

    auto* conv = app.add_subcommand("convert",
                                    "rewrite a graph as a canonical edge list");
    add_common(conv, conv_o);

    auto* dsets = app.add_subcommand("datasets", "bundled datasets and provenance");
    dsets->add_option("--data-dir", datasets_dir, "dataset directory override");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rank->parsed()) {
            LoadedInput li = load_input(rank_o);
            double alpha = resolve_alpha(rank_alpha, li.graph);
            CentralityField field = alpha_centrality_iterative(
                li.graph, alpha, rank_o.beta, rank_o.tol, rank_o.max_iter);
            Eigen::VectorXd scores =
                score_sums == "columns"
                    ? Eigen::VectorXd(field.matrix.colwise().sum().transpose())
                    : field.node_scores;
            auto ranked = rank_nodes(scores, li.graph.labels);
            emit(rank_o, rank_o.format == "json" ? scores_json(field, ranked)
                                                 : scores_csv(ranked));
        } else if (comm->parsed()) {
            LoadedInput li = load_input(comm_o);
            double alpha = resolve_alpha(comm_alpha, li.graph);
            CommunityOptions opts;
            opts.beta = comm_o.beta;
            opts.tol = comm_o.tol;
            opts.max_iter = comm_o.max_iter;
            opts.integer_rounding = rounding;
            opts.use_normalized = use_normalized;
            Partition part = detect_communities(li.graph, alpha, opts);
            emit(comm_o, comm_o.format == "json" ? partition_json(li.graph, part)
                                                 : partition_csv(li.graph, part));
        } else if (sw->parsed()) {
            LoadedInput li = load_input(sweep_o);
            if (!li.truth)
                throw DataError("sweep needs ground truth: bundled labels or "
                                "--labels FILE");
            std::vector<double> alphas = parse_alpha_list(sweep_list, sweep_range);
            if (alphas.empty()) {
                DegreeSummary deg = degree_summary(li.graph);
                double dmax = std::min(deg.max_out, deg.max_in);
                SpectralInfo s = dominant_eigenpair(li.graph);
                if (dmax <= 0.0 || s.degenerate)
                    throw DataError("cannot derive a default alpha grid for an "
                                    "edgeless graph; pass --alphas");
                double step = 1.0 / dmax;
                for (double a = 0.0; a <= 1.0 / s.lambda1 && a <= 1.0; a += step)
                    alphas.push_back(a);
            }
            CommunityOptions opts;
            opts.beta = sweep_o.beta;
            opts.tol = sweep_o.tol;
            opts.max_iter = sweep_o.max_iter;
            auto records = sweep(li.graph, *li.truth, alphas, opts);
            if (!sweep_scores_dir.empty()) {
                std::filesystem::create_directories(sweep_scores_dir);
                for (const SweepRecord& rec : records) {
                    auto ranked = rank_nodes(rec.node_scores, li.graph.labels);
                    std::string path = sweep_scores_dir + "/scores_alpha_" +
                                       format_number(rec.alpha) + ".csv";
                    std::ofstream out(path, std::ios::binary);
                    if (!out) throw DataError("cannot write " + path);
                    out << scores_csv(ranked);
                }
            }
            emit(sweep_o, sweep_o.format == "json" ? sweep_json(records)
                                                   : sweep_csv(records));
        } else if (spec->parsed()) {
            LoadedInput li = load_input(spec_o);
            // the spectrum drives alpha resolution, so keep it tight
            SpectralInfo info = dominant_eigenpair(
                li.graph, std::min(spec_o.tol, 1e-10), spec_o.max_iter);
            DegreeSummary deg = degree_summary(li.graph);
            double bound = std::min(deg.max_out, deg.max_in);
            emit(spec_o, spec_o.format == "json" ? spectrum_json(info, bound)
                                                 : spectrum_csv(info, bound));
        } else if (roles->parsed()) {
            LoadedInput li = load_input(roles_o);
            Partition part;
            if (roles_from_labels) {
                if (!li.truth)
                    throw DataError("--from-labels needs ground-truth classes");
                part.assignment.resize(li.graph.node_count());
                for (int i = 0; i < li.graph.node_count(); ++i) {
                    auto it = li.truth->labels.find(li.graph.labels[i]);
                    if (it == li.truth->labels.end())
                        throw DataError("node '" + li.graph.labels[i] +
                                        "' has no ground-truth class");
                    auto pos = std::find(li.truth->classes.begin(),
                                         li.truth->classes.end(), it->second);
                    part.assignment[i] = static_cast<int>(
                        pos - li.truth->classes.begin());
                }
            } else {
                double alpha = resolve_alpha(roles_alpha, li.graph);
                CommunityOptions opts;
                opts.beta = roles_o.beta;
                opts.tol = roles_o.tol;
                opts.max_iter = roles_o.max_iter;
                part = detect_communities(li.graph, alpha, opts);
            }
            RoleCoordinates rc = role_coordinates(li.graph, part);
            emit(roles_o, roles_o.format == "json" ? roles_json(li.graph, rc)
                                                   : roles_csv(li.graph, rc));
        } else if (conv->parsed()) {
            LoadedInput li = load_input(conv_o);
            emit(conv_o, to_edge_list(li.graph));
        } else if (dsets->parsed()) {
            std::string dir =
                datasets_dir.empty() ? default_data_dir() : datasets_dir;
            std::ostringstream out;
            out << "name,nodes,edges,has_labels,provenance\n";
            for (const DatasetInfo& info : list_datasets(dir))
                out << info.name << ',' << info.nodes << ',' << info.edges << ','
                    << (info.has_labels ? 1 : 0) << ",\"" << info.provenance
                    << "\"\n";
            std::cout << out.str();
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
