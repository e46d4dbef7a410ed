#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alphacen/evaluation.hpp"
#include "alphacen/graph.hpp"

namespace alphacen {

struct DatasetInfo {
    std::string name;
    std::string provenance;
    int nodes = 0;
    int edges = 0;
    bool has_labels = false;
};

struct LoadedDataset {
    Graph graph;
    std::optional<GroundTruth> truth;
    std::string provenance;
};

/// ALPHACEN_DATA_DIR environment override, falling back to the bundled
/// data directory.
std::string default_data_dir();

std::string read_text_file(const std::string& path);

/// Bundled benchmark names: karate, florentine, football, polbooks.
std::vector<std::string> dataset_names();

LoadedDataset load_dataset(const std::string& name,
                           const std::string& data_dir = default_data_dir());

std::vector<DatasetInfo> list_datasets(
    const std::string& data_dir = default_data_dir());

}  // namespace alphacen
