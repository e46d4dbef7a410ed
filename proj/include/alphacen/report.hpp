#pragma once

#include <string>
#include <vector>

#include "alphacen/centrality.hpp"
#include "alphacen/community.hpp"
#include "alphacen/evaluation.hpp"

namespace alphacen {

/// Fixed-width significant-digit formatting ('.' decimal separator) so CSV
/// output is byte-stable across runs.
std::string format_number(double value, int significant_digits = 6);

std::string scores_csv(const std::vector<std::pair<std::string, double>>& ranked);
std::string scores_json(const CentralityField& field,
                        const std::vector<std::pair<std::string, double>>& ranked);

std::string partition_csv(const Graph& g, const Partition& p);
std::string partition_json(const Graph& g, const Partition& p);

std::string sweep_csv(const std::vector<SweepRecord>& records);
std::string sweep_json(const std::vector<SweepRecord>& records);

std::string spectrum_csv(const SpectralInfo& info, double gershgorin_bound);
std::string spectrum_json(const SpectralInfo& info, double gershgorin_bound);

std::string roles_csv(const Graph& g, const RoleCoordinates& rc);
std::string roles_json(const Graph& g, const RoleCoordinates& rc);

}  // namespace alphacen
