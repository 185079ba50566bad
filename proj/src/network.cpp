#include "adai/network.hpp"

#include <cmath>
#include <random>

#include "adai/jet.hpp"

namespace adai {

ActivationKind Architecture::activation(int m) const {
    if (const auto* fixed = std::get_if<FixedMode>(&mode)) {
        return fixed->kinds.at(static_cast<std::size_t>(m));
    }
    return std::get<AdaptiveMode>(mode).kind;
}

void Architecture::validate() const {
    if (input_dim < 1 || input_dim > 3) {
        throw ConfigError("input_dim must be 1, 2 or 3 (got " + std::to_string(input_dim) + ")");
    }
    if (hidden_sizes.empty()) {
        throw ConfigError("at least one hidden layer is required");
    }
    for (int width : hidden_sizes) {
        if (width < 1) {
            throw ConfigError("hidden layer widths must be >= 1");
        }
    }
    if (num_subdomains < 2) {
        throw ConfigError("num_subdomains must be >= 2");
    }
    if (!std::isfinite(scale_n) || scale_n == 0.0) {
        throw ConfigError("scale_n must be finite and nonzero");
    }
    if (const auto* fixed = std::get_if<FixedMode>(&mode)) {
        if (static_cast<int>(fixed->kinds.size()) != num_subdomains) {
            throw ConfigError("ipinn mode needs one activation per subdomain: got " +
                              std::to_string(fixed->kinds.size()) + ", expected " +
                              std::to_string(num_subdomains));
        }
    }
}

ParamLayout::ParamLayout(const Architecture& arch) : num_subdomains(arch.num_subdomains) {
    std::size_t offset = 0;
    int in = arch.input_dim;
    auto add_layer = [&](int out) {
        LayerSlot slot{in, out, offset, offset + static_cast<std::size_t>(in * out)};
        offset = slot.bias_offset + static_cast<std::size_t>(out);
        layers.push_back(slot);
        in = out;
    };
    for (int width : arch.hidden_sizes) {
        add_layer(width);
    }
    add_layer(1);
    slope_offset = offset;
    size = offset + static_cast<std::size_t>(arch.num_subdomains);
}

MLPParams init_xavier(const Architecture& arch, std::uint64_t seed) {
    arch.validate();
    const ParamLayout layout(arch);
    MLPParams params{std::vector<double>(layout.size, 0.0)};
    std::mt19937_64 rng(seed);
    for (const auto& layer : layout.layers) {
        const double bound = std::sqrt(6.0 / static_cast<double>(layer.in + layer.out));
        std::uniform_real_distribution<double> dist(-bound, bound);
        for (int k = 0; k < layer.in * layer.out; ++k) {
            params.values[layer.weight_offset + static_cast<std::size_t>(k)] = dist(rng);
        }
    }
    const double slope = arch.adaptive() ? 0.5 : 1.0;
    for (double& a : params.slopes(layout)) {
        a = slope;
    }
    return params;
}

double effective_scale(const Architecture& arch, const ParamLayout& layout,
                       const MLPParams& params, int m) {
    if (!arch.adaptive()) {
        return 1.0;
    }
    return arch.scale_n * params.values[layout.slope_offset + static_cast<std::size_t>(m)];
}

double forward(const MLPParams& params, const Architecture& arch, int m, const Point& x) {
    const ParamLayout layout(arch);
    const ActivationKind kind = arch.activation(m);
    const double scale = effective_scale(arch, layout, params, m);
    std::vector<double> in(x.begin(), x.begin() + arch.input_dim);
    std::vector<double> out;
    for (std::size_t l = 0; l < layout.layers.size(); ++l) {
        const auto& slot = layout.layers[l];
        out.assign(static_cast<std::size_t>(slot.out), 0.0);
        for (int j = 0; j < slot.out; ++j) {
            double z = params.values[slot.bias_offset + static_cast<std::size_t>(j)];
            const double* row = params.values.data() + slot.weight_offset +
                                static_cast<std::size_t>(j * slot.in);
            for (int k = 0; k < slot.in; ++k) {
                z += row[k] * in[static_cast<std::size_t>(k)];
            }
            const bool hidden = l + 1 < layout.layers.size();
            out[static_cast<std::size_t>(j)] = hidden ? act_eval2(kind, scale * z).value : z;
        }
        in.swap(out);
    }
    return in[0];
}

FieldValue forward_with_derivs(const MLPParams& params, const Architecture& arch, int m,
                               const Point& x) {
    const ParamLayout layout(arch);
    const ActivationKind kind = arch.activation(m);
    const double scale = effective_scale(arch, layout, params, m);
    const std::span<const double> theta(params.values);
    FieldValue result;
    for (int dir = 0; dir < arch.input_dim; ++dir) {
        auto jets = seed_jets(std::span<const double>(x.data(), arch.input_dim), dir);
        for (std::size_t l = 0; l < layout.layers.size(); ++l) {
            const auto& slot = layout.layers[l];
            jets = jet_affine(theta.subspan(slot.weight_offset,
                                            static_cast<std::size_t>(slot.in * slot.out)),
                              theta.subspan(slot.bias_offset, static_cast<std::size_t>(slot.out)),
                              jets);
            if (l + 1 < layout.layers.size()) {
                for (auto& jet : jets) {
                    jet = jet_activation(kind, scale, jet);
                }
            }
        }
        result.u = jets[0].val;
        result.grad[static_cast<std::size_t>(dir)] = jets[0].d1;
        result.laplacian += jets[0].d2;
    }
    return result;
}

nlohmann::json architecture_to_json(const Architecture& arch) {
    nlohmann::json j;
    j["input_dim"] = arch.input_dim;
    j["hidden_sizes"] = arch.hidden_sizes;
    j["num_subdomains"] = arch.num_subdomains;
    j["scale_n"] = arch.scale_n;
    if (const auto* fixed = std::get_if<FixedMode>(&arch.mode)) {
        j["mode"] = "ipinn";
        auto kinds = nlohmann::json::array();
        for (auto k : fixed->kinds) {
            kinds.push_back(std::string(to_string(k)));
        }
        j["kinds"] = kinds;
    } else {
        j["mode"] = "adai";
        j["kind"] = std::string(to_string(std::get<AdaptiveMode>(arch.mode).kind));
    }
    return j;
}

namespace {

ActivationKind kind_from_json(const nlohmann::json& j) {
    const auto name = j.get<std::string>();
    auto kind = parse_activation(name);
    if (!kind) {
        throw ConfigError("unknown activation '" + name + "'; valid kinds: " +
                          valid_activation_names());
    }
    return *kind;
}

}  // namespace

Architecture architecture_from_json(const nlohmann::json& j) {
    Architecture arch;
    arch.input_dim = j.at("input_dim").get<int>();
    arch.hidden_sizes = j.at("hidden_sizes").get<std::vector<int>>();
    arch.num_subdomains = j.at("num_subdomains").get<int>();
    arch.scale_n = j.at("scale_n").get<double>();
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "ipinn") {
        FixedMode fixed;
        for (const auto& k : j.at("kinds")) {
            fixed.kinds.push_back(kind_from_json(k));
        }
        arch.mode = fixed;
    } else if (mode == "adai") {
        arch.mode = AdaptiveMode{kind_from_json(j.at("kind"))};
    } else {
        throw ConfigError("mode must be 'adai' or 'ipinn' (got '" + mode + "')");
    }
    arch.validate();
    return arch;
}

nlohmann::json params_to_json(const Architecture& arch, const MLPParams& params) {
    return {{"architecture", architecture_to_json(arch)}, {"params", params.values}};
}

MLPParams params_from_json(const nlohmann::json& j, Architecture* arch_out) {
    const Architecture arch = architecture_from_json(j.at("architecture"));
    MLPParams params{j.at("params").get<std::vector<double>>()};
    if (params.values.size() != ParamLayout(arch).size) {
        throw ConfigError("parameter snapshot has " + std::to_string(params.values.size()) +
                          " values, architecture expects " +
                          std::to_string(ParamLayout(arch).size));
    }
    if (arch_out != nullptr) {
        *arch_out = arch;
    }
    return params;
}

}  // namespace adai
