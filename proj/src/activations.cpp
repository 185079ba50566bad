#include "adai/activations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace adai {

namespace {

// log(1 + e^z) without overflow for large positive z.
double softplus(double z) { return std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z))); }

struct LogisticDerivs {
    double s, d1, d2, d3;
};

// s = 1/(1+e^-z) and sm = s(-z) = 1 - s, both from exp(-|z|) so neither overflows.
LogisticDerivs logistic_derivs(double z) {
    const double e = std::exp(-std::abs(z));
    const double big = 1.0 / (1.0 + e);
    const double small = e * big;
    const double s = z >= 0.0 ? big : small;
    const double sm = z >= 0.0 ? small : big;
    const double d1 = s * sm;
    return {s, d1, d1 * (sm - s), d1 * (1.0 - 6.0 * s * sm)};
}

ActivationValues3 tanh3(double z) {
    const double t = std::tanh(z);
    const double u = 1.0 - t * t;
    return {t, u, -2.0 * t * u, (6.0 * t * t - 2.0) * u};
}

ActivationValues3 sigmoid3(double z) {
    const auto l = logistic_derivs(z);
    return {l.s, l.d1, l.d2, l.d3};
}

ActivationValues3 swish3(double z) {
    const auto l = logistic_derivs(z);
    return {z * l.s, l.s + z * l.d1, 2.0 * l.d1 + z * l.d2, 3.0 * l.d2 + z * l.d3};
}

ActivationValues3 softplus3(double z) {
    const auto l = logistic_derivs(z);
    return {softplus(z), l.s, l.d1, l.d2};
}

ActivationValues3 gelu3(double z) {
    constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    const double cdf = 0.5 * std::erfc(-z * inv_sqrt2);
    const double pdf = inv_sqrt_2pi * std::exp(-0.5 * z * z);
    return {z * cdf, cdf + z * pdf, pdf * (2.0 - z * z), pdf * (z * z * z - 4.0 * z)};
}

// mish(z) = z * tanh(g(z)), g = softplus, g' = s, g'' = s', g''' = s''.
ActivationValues3 mish3(double z) {
    const auto l = logistic_derivs(z);
    const double g1 = l.s;
    const double g2 = l.d1;
    const double g3 = l.d2;
    const double t = std::tanh(softplus(z));
    const double u = 1.0 - t * t;
    const double t1 = u * g1;
    const double u1 = -2.0 * t * t1;
    const double t2 = u * g2 - 2.0 * t * u * g1 * g1;
    const double t3 = u1 * g2 + u * g3 - 2.0 * t1 * u * g1 * g1 - 2.0 * t * u1 * g1 * g1 -
                      4.0 * t * u * g1 * g2;
    return {z * t, t + z * t1, 2.0 * t1 + z * t2, 3.0 * t2 + z * t3};
}

}  // namespace

ActivationValues3 act_eval3(ActivationKind kind, double z) {
    switch (kind) {
        case ActivationKind::Tanh:
            return tanh3(z);
        case ActivationKind::Sigmoid:
            return sigmoid3(z);
        case ActivationKind::Swish:
            return swish3(z);
        case ActivationKind::Softplus:
            return softplus3(z);
        case ActivationKind::Gelu:
            return gelu3(z);
        case ActivationKind::Mish:
            return mish3(z);
    }
    return tanh3(z);
}

ActivationValues2 act_eval2(ActivationKind kind, double z) {
    const auto v = act_eval3(kind, z);
    return {v.value, v.first, v.second};
}

std::string_view to_string(ActivationKind kind) {
    switch (kind) {
        case ActivationKind::Tanh:
            return "tanh";
        case ActivationKind::Sigmoid:
            return "sigmoid";
        case ActivationKind::Swish:
            return "swish";
        case ActivationKind::Softplus:
            return "softplus";
        case ActivationKind::Gelu:
            return "gelu";
        case ActivationKind::Mish:
            return "mish";
    }
    return "tanh";
}

std::optional<ActivationKind> parse_activation(std::string_view name) {
    for (auto kind : kAllActivations) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

std::string valid_activation_names() {
    return "tanh, sigmoid, swish, softplus, gelu, mish";
}

}  // namespace adai
