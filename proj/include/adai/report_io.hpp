#pragma once

#include <filesystem>
#include <ostream>
#include <string>

#include <json.hpp>

#include "adai/training.hpp"

namespace adai {

enum class OnExists { Refuse, Version };

/// Returns the directory to write into and creates it. An existing non-empty `path` is
/// refused (ConfigError) or replaced by the first free "<path>-vN", N >= 2.
std::filesystem::path prepare_output_dir(const std::filesystem::path& path, OnExists policy);

/// "# config: {...}" line that CSV outputs start with.
std::string config_comment(const TrainConfig& config);

void write_loss_csv(std::ostream& out, const TrainReport& report);
void write_slopes_csv(std::ostream& out, const TrainReport& report);
nlohmann::json report_to_json(const TrainReport& report);

/// run.json, loss.csv, params.json and (AdaI only) slopes.csv inside `dir`.
void write_run_outputs(const TrainReport& report, const std::filesystem::path& dir);

}  // namespace adai
