#include "alphacen/datasets.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef ALPHACEN_BUNDLED_DATA_DIR
#define ALPHACEN_BUNDLED_DATA_DIR "data"
#endif

namespace alphacen {

std::string default_data_dir() {
    if (const char* env = std::getenv("ALPHACEN_DATA_DIR"); env && *env)
        return env;
    return ALPHACEN_BUNDLED_DATA_DIR;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> dataset_names() {
    return {"karate", "florentine", "football", "polbooks"};
}

LoadedDataset load_dataset(const std::string& name,
                           const std::string& data_dir) {
    auto path = [&](const std::string& file) { return data_dir + "/" + file; };
    LoadedDataset ds;
    if (name == "karate") {
        ds.graph = load_edge_list(read_text_file(path("karate.edges")),
                                  /*directed=*/false);
        ds.truth = load_ground_truth(read_text_file(path("karate_labels.tsv")));
        ds.provenance =
            "Zachary (1977) karate club friendship network; labels give the "
            "faction alignment during the club conflict";
    } else if (name == "florentine") {
        ds.graph = load_edge_list(read_text_file(path("florentine.edges")),
                                  /*directed=*/true);
        ds.truth = load_ground_truth(
            read_text_file(path("florentine_labels.tsv")),
            read_text_file(path("florentine_excluded.txt")));
        ds.provenance =
            "Marriage and business ties among 33 elite families of "
            "renaissance Florence (reconstruction after Padgett); directed "
            "raw ties, symmetrize before analysis";
    } else if (name == "football") {
        ds.graph = load_gml(read_text_file(path("football.gml")));
        ds.truth = ground_truth_from_metadata(ds.graph);
        ds.provenance =
            "Synthetic Division I-A style 2001 football schedule (reduced "
            "density); node values name the conference";
    } else if (name == "polbooks") {
        ds.graph = load_gml(read_text_file(path("polbooks.gml")));
        ds.truth = ground_truth_from_metadata(ds.graph);
        ds.provenance =
            "Synthetic political-book co-purchase benchmark; node values "
            "mark liberal/neutral/conservative";
    } else {
        throw DataError("unknown dataset '" + name +
                        "' (available: karate, florentine, football, polbooks)");
    }
    return ds;
}

std::vector<DatasetInfo> list_datasets(const std::string& data_dir) {
    std::vector<DatasetInfo> out;
    for (const std::string& name : dataset_names()) {
        LoadedDataset ds = load_dataset(name, data_dir);
        DatasetInfo info;
        info.name = name;
        info.provenance = ds.provenance;
        info.nodes = ds.graph.node_count();
        info.edges = static_cast<int>(ds.graph.edges.size());
        info.has_labels = ds.truth.has_value() && !ds.truth->labels.empty();
        out.push_back(std::move(info));
    }
    return out;
}

}  // namespace alphacen
