#include "adai/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace adai {

using nlohmann::json;

namespace {

const std::vector<std::string>& problem_names() {
    static const std::vector<std::string> names{"poisson1d", "letters2d", "spheres3d"};
    return names;
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
        out += (out.empty() ? "" : ", ") + s;
    }
    return out;
}

ActivationKind kind_from(const json& v, const std::string& field) {
    if (!v.is_string()) {
        throw ConfigError(field + ": expected an activation name");
    }
    const auto name = v.get<std::string>();
    const auto kind = parse_activation(name);
    if (!kind) {
        std::vector<std::string> valid;
        for (auto k : kAllActivations) {
            valid.emplace_back(to_string(k));
        }
        throw ConfigError(field + ": unknown activation '" + name + "'; valid kinds: " +
                          join(valid));
    }
    return *kind;
}

int int_from(const json& v, const std::string& field) {
    if (!v.is_number_integer()) {
        throw ConfigError(field + ": expected an integer");
    }
    return v.get<int>();
}

double real_from(const json& v, const std::string& field) {
    if (!v.is_number()) {
        throw ConfigError(field + ": expected a number");
    }
    return v.get<double>();
}

std::string string_from(const json& v, const std::string& field) {
    if (!v.is_string()) {
        throw ConfigError(field + ": expected a string");
    }
    return v.get<std::string>();
}

json parse_scalar(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error&) {
        return text;
    }
}

}  // namespace

int subdomain_count(const std::string& problem) {
    if (problem == "poisson1d" || problem == "letters2d") {
        return 5;
    }
    if (problem == "spheres3d") {
        return 9;
    }
    throw ConfigError("problem: unknown benchmark '" + problem + "'; valid: " +
                      join(problem_names()));
}

json config_to_json(const TrainConfig& c) {
    json acts = json::array();
    for (auto k : c.activations) {
        acts.push_back(std::string(to_string(k)));
    }
    return {
        {"problem", c.problem},
        {"mode", c.mode},
        {"activation", std::string(to_string(c.activation))},
        {"activations", acts},
        {"hidden_layers", c.hidden_layers},
        {"neurons", c.neurons},
        {"iterations", c.iterations},
        {"seed", c.seed},
        {"scale_n", c.scale_n},
        {"lr", c.lr},
        {"lr_decay_rate", c.lr_decay_rate},
        {"lr_decay_steps", c.lr_decay_steps},
        {"alpha_int", c.alpha_int},
        {"alpha_bc_d", c.alpha_bc_d},
        {"alpha_bc_n", c.alpha_bc_n},
        {"sampling",
         {{"interior_total", c.sampling.interior_total},
          {"min_per_subdomain", c.sampling.min_per_subdomain},
          {"per_interface", c.sampling.per_interface},
          {"per_boundary_face", c.sampling.per_boundary_face}}},
        {"log_interval", c.log_interval},
        {"eval_grid", c.eval_grid},
        {"layout_file", c.layout_file},
        {"output_dir", c.output_dir},
        {"stop_on_nonfinite", c.stop_on_nonfinite},
        {"threads", c.threads},
    };
}

TrainConfig config_from_json(const json& j) {
    if (!j.is_object()) {
        throw ConfigError("config: expected a JSON object");
    }
    TrainConfig c;
    for (const auto& [key, v] : j.items()) {
        if (key == "problem") {
            c.problem = string_from(v, key);
        } else if (key == "mode") {
            c.mode = string_from(v, key);
        } else if (key == "activation") {
            c.activation = kind_from(v, key);
        } else if (key == "activations") {
            if (!v.is_array()) {
                throw ConfigError("activations: expected a list of activation names");
            }
            c.activations.clear();
            for (std::size_t i = 0; i < v.size(); ++i) {
                c.activations.push_back(kind_from(v[i], "activations[" + std::to_string(i) + "]"));
            }
        } else if (key == "hidden_layers") {
            c.hidden_layers = int_from(v, key);
        } else if (key == "neurons") {
            c.neurons = int_from(v, key);
        } else if (key == "iterations") {
            c.iterations = int_from(v, key);
        } else if (key == "seed") {
            if (!v.is_number_unsigned()) {
                throw ConfigError("seed: expected a non-negative integer");
            }
            c.seed = v.get<std::uint64_t>();
        } else if (key == "scale_n") {
            c.scale_n = real_from(v, key);
        } else if (key == "lr") {
            c.lr = real_from(v, key);
        } else if (key == "lr_decay_rate") {
            c.lr_decay_rate = real_from(v, key);
        } else if (key == "lr_decay_steps") {
            c.lr_decay_steps = int_from(v, key);
        } else if (key == "alpha_int") {
            c.alpha_int = real_from(v, key);
        } else if (key == "alpha_bc_d") {
            c.alpha_bc_d = real_from(v, key);
        } else if (key == "alpha_bc_n") {
            c.alpha_bc_n = real_from(v, key);
        } else if (key == "sampling") {
            if (!v.is_object()) {
                throw ConfigError("sampling: expected an object");
            }
            for (const auto& [sk, sv] : v.items()) {
                const std::string field = "sampling." + sk;
                if (sk == "interior_total") {
                    c.sampling.interior_total = int_from(sv, field);
                } else if (sk == "min_per_subdomain") {
                    c.sampling.min_per_subdomain = int_from(sv, field);
                } else if (sk == "per_interface") {
                    c.sampling.per_interface = int_from(sv, field);
                } else if (sk == "per_boundary_face") {
                    c.sampling.per_boundary_face = int_from(sv, field);
                } else {
                    throw ConfigError(field + ": unknown field");
                }
            }
        } else if (key == "log_interval") {
            c.log_interval = int_from(v, key);
        } else if (key == "eval_grid") {
            if (!v.is_array()) {
                throw ConfigError("eval_grid: expected a list of integers");
            }
            c.eval_grid.clear();
            for (std::size_t i = 0; i < v.size(); ++i) {
                c.eval_grid.push_back(int_from(v[i], "eval_grid[" + std::to_string(i) + "]"));
            }
        } else if (key == "layout_file") {
            c.layout_file = string_from(v, key);
        } else if (key == "output_dir") {
            c.output_dir = string_from(v, key);
        } else if (key == "stop_on_nonfinite") {
            if (!v.is_boolean()) {
                throw ConfigError("stop_on_nonfinite: expected true or false");
            }
            c.stop_on_nonfinite = v.get<bool>();
        } else if (key == "threads") {
            c.threads = int_from(v, key);
        } else {
            throw ConfigError(key + ": unknown field");
        }
    }
    return c;
}

void validate_config(const TrainConfig& c, int num_subdomains) {
    auto require = [](bool ok, const std::string& msg) {
        if (!ok) {
            throw ConfigError(msg);
        }
    };
    require(c.mode == "adai" || c.mode == "ipinn", "mode: expected 'adai' or 'ipinn', got '" + c.mode + "'");
    if (c.mode == "ipinn") {
        require(static_cast<int>(c.activations.size()) == num_subdomains,
                "activations: " + c.problem + " needs " + std::to_string(num_subdomains) +
                    " kinds in ipinn mode, got " + std::to_string(c.activations.size()));
    }
    require(c.hidden_layers >= 1, "hidden_layers: must be >= 1");
    require(c.neurons >= 1, "neurons: must be >= 1");
    require(c.iterations >= 0, "iterations: must be >= 0");
    require(std::isfinite(c.scale_n) && c.scale_n > 0.0, "scale_n: must be positive");
    require(std::isfinite(c.lr) && c.lr >= 0.0, "lr: must be >= 0");
    require(c.lr_decay_rate > 0.0 && c.lr_decay_rate <= 1.0, "lr_decay_rate: must be in (0, 1]");
    require(c.lr_decay_steps >= 1, "lr_decay_steps: must be >= 1");
    require(std::isfinite(c.alpha_int) && c.alpha_int >= 0.0, "alpha_int: must be >= 0");
    require(std::isfinite(c.alpha_bc_d) && c.alpha_bc_d >= 0.0, "alpha_bc_d: must be >= 0");
    require(std::isfinite(c.alpha_bc_n) && c.alpha_bc_n >= 0.0, "alpha_bc_n: must be >= 0");
    require(c.sampling.interior_total >= 1, "sampling.interior_total: must be >= 1");
    require(c.sampling.min_per_subdomain >= 1, "sampling.min_per_subdomain: must be >= 1");
    require(c.sampling.per_interface >= 1, "sampling.per_interface: must be >= 1");
    require(c.sampling.per_boundary_face >= 1, "sampling.per_boundary_face: must be >= 1");
    require(c.log_interval >= 1, "log_interval: must be >= 1");
    const int dim = c.problem == "poisson1d" ? 1 : (c.problem == "letters2d" ? 2 : 3);
    require(c.eval_grid.empty() || static_cast<int>(c.eval_grid.size()) == dim,
            "eval_grid: needs " + std::to_string(dim) + " counts for " + c.problem);
    for (int n : c.eval_grid) {
        require(n >= 2, "eval_grid: every count must be >= 2");
    }
    require(c.layout_file.empty() || c.problem == "letters2d",
            "layout_file: only used by letters2d");
    require(!c.output_dir.empty(), "output_dir: must not be empty");
    require(c.threads >= 0, "threads: must be >= 0");
}

void apply_override(json& target, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ConfigError("override '" + assignment + "': expected key=value");
    }
    const std::string key = assignment.substr(0, eq);
    const std::string text = assignment.substr(eq + 1);

    json value = parse_scalar(text);
    if (value.is_string() && text.find(',') != std::string::npos) {
        value = json::array();
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            value.push_back(parse_scalar(item));
        }
    }
    json* node = &target;
    std::stringstream path(key);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(path, part, '.')) {
        if (part.empty()) {
            throw ConfigError("override '" + assignment + "': empty key segment");
        }
        parts.push_back(part);
    }
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        json& next = (*node)[parts[i]];
        if (!next.is_object()) {
            next = json::object();
        }
        node = &next;
    }
    (*node)[parts.back()] = value;
}

json resolve_config_json(const json& file, const std::vector<std::string>& overrides) {
    if (!file.is_null() && !file.is_object()) {
        throw ConfigError("config: expected a JSON object");
    }
    json patch = json::object();
    for (const auto& o : overrides) {
        apply_override(patch, o);
    }
    std::string problem = "poisson1d";
    if (!file.is_null() && file.contains("problem")) {
        problem = string_from(file["problem"], "problem");
    }
    if (patch.contains("problem")) {
        problem = string_from(patch["problem"], "problem");
    }
    subdomain_count(problem);  // rejects unknown names

    json merged = config_to_json(TrainConfig::defaults_for(problem));
    if (!file.is_null()) {
        merged.merge_patch(file);
    }
    merged.merge_patch(patch);
    return merged;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

}  // namespace adai
