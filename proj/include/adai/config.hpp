#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "adai/training.hpp"

namespace adai {

nlohmann::json config_to_json(const TrainConfig& config);

/// Strict: unknown keys and wrong types raise ConfigError naming the field.
TrainConfig config_from_json(const nlohmann::json& j);

/// Field-level checks; throws ConfigError with the offending key in the message.
void validate_config(const TrainConfig& config, int num_subdomains);

/// Parses a dotted override "a.b=value". The value is read as JSON when possible
/// (numbers, true/false, lists) and as a plain string otherwise.
void apply_override(nlohmann::json& target, const std::string& assignment);

/// Resolution order: problem defaults, then the config file, then overrides.
/// `file` may be null. Unknown problem names raise ConfigError.
nlohmann::json resolve_config_json(const nlohmann::json& file,
                                   const std::vector<std::string>& overrides);

nlohmann::json read_json_file(const std::string& path);

int subdomain_count(const std::string& problem);

}  // namespace adai
