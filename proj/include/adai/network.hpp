#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "adai/activations.hpp"
#include "adai/common.hpp"

namespace adai {

/// adai mode: one activation kind everywhere, slope n * a_m trained per subdomain.
struct AdaptiveMode {
    ActivationKind kind = ActivationKind::Tanh;
};

/// ipinn mode: a fixed activation kind per subdomain, unit slope.
struct FixedMode {
    std::vector<ActivationKind> kinds;
};

using NetworkMode = std::variant<AdaptiveMode, FixedMode>;

struct Architecture {
    int input_dim = 1;
    std::vector<int> hidden_sizes;
    int num_subdomains = 2;
    double scale_n = 10.0;
    NetworkMode mode = AdaptiveMode{};

    bool adaptive() const { return std::holds_alternative<AdaptiveMode>(mode); }

    /// Activation used by the hidden layers of subdomain m (0-based).
    ActivationKind activation(int m) const;

    /// Throws ConfigError when the invariants do not hold.
    void validate() const;
};

/// Offsets of each layer's weights (row-major, out x in) and biases inside the flat vector.
struct LayerSlot {
    int in = 0;
    int out = 0;
    std::size_t weight_offset = 0;
    std::size_t bias_offset = 0;
};

struct ParamLayout {
    std::vector<LayerSlot> layers;  // hidden layers followed by the affine output layer
    std::size_t slope_offset = 0;   // a_1..a_M live at the tail
    std::size_t size = 0;
    int num_subdomains = 0;

    explicit ParamLayout(const Architecture& arch);

    /// Weights and biases only.
    std::size_t network_size() const { return slope_offset; }

    /// Entries the optimizer updates: the slopes are frozen in I-PINN mode.
    std::size_t trainable_size(const Architecture& arch) const {
        return arch.adaptive() ? size : slope_offset;
    }
};

/// Shared weights/biases for every subdomain plus the per-subdomain slopes.
struct MLPParams {
    std::vector<double> values;

    std::span<const double> slopes(const ParamLayout& layout) const {
        return std::span<const double>(values).subspan(layout.slope_offset);
    }
    std::span<double> slopes(const ParamLayout& layout) {
        return std::span<double>(values).subspan(layout.slope_offset);
    }
};

/// Xavier-uniform weights, zero biases, a_m = 0.5 (I-PINN slopes are 1).
MLPParams init_xavier(const Architecture& arch, std::uint64_t seed);

/// Multiplier applied to every hidden pre-activation of subdomain m.
double effective_scale(const Architecture& arch, const ParamLayout& layout,
                       const MLPParams& params, int m);

/// Output of the subdomain-m network at x.
double forward(const MLPParams& params, const Architecture& arch, int m, const Point& x);

struct FieldValue {
    double u = 0.0;
    Point grad{};
    double laplacian = 0.0;
};

/// u, grad u and the Laplacian from one seeded Jet2 pass per input coordinate.
FieldValue forward_with_derivs(const MLPParams& params, const Architecture& arch, int m,
                               const Point& x);

nlohmann::json architecture_to_json(const Architecture& arch);
Architecture architecture_from_json(const nlohmann::json& j);

/// {"architecture": {...}, "params": [...]}
nlohmann::json params_to_json(const Architecture& arch, const MLPParams& params);
MLPParams params_from_json(const nlohmann::json& j, Architecture* arch_out = nullptr);

}  // namespace adai
