#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace adai {

// Smooth (C-infinity) activations only: the PDE residual differentiates the
// network twice with respect to its inputs, and the parameter gradient of that
// residual needs one more derivative.
enum class ActivationKind { Tanh, Sigmoid, Swish, Softplus, Gelu, Mish };

inline constexpr std::array<ActivationKind, 6> kAllActivations{
    ActivationKind::Tanh, ActivationKind::Swish,    ActivationKind::Sigmoid,
    ActivationKind::Softplus, ActivationKind::Gelu, ActivationKind::Mish};

struct ActivationValues2 {
    double value;
    double first;
    double second;
};

struct ActivationValues3 {
    double value;
    double first;
    double second;
    double third;
};

/// sigma(z), sigma'(z), sigma''(z). Stable for |z| <= 700.
ActivationValues2 act_eval2(ActivationKind kind, double z);

/// Same as act_eval2 plus sigma'''(z), which the reverse pass over a
/// second-order jet requires.
ActivationValues3 act_eval3(ActivationKind kind, double z);

/// Lower-case name used in configs and CSV headers ("tanh", "gelu", ...).
std::string_view to_string(ActivationKind kind);

std::optional<ActivationKind> parse_activation(std::string_view name);

/// "tanh, sigmoid, swish, softplus, gelu, mish"
std::string valid_activation_names();

}  // namespace adai
