#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "adai/gradient.hpp"
#include "adai/sampling.hpp"

namespace testing {

inline double rel_err(double a, double b, double floor = 1.0) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

/// f'(x), f''(x) by 4th-order central differences.
inline double fd1(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

inline double fd2(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) /
           (12 * h * h);
}

// 1D solution from the flux balance: kappa u' = C - x (source -1), so
// u(x) = int_0^x (C - t) / kappa dt with C fixed by u(1) = 0.
inline double flux_oracle(const std::vector<double>& kappa, double x) {
    const auto n = static_cast<int>(kappa.size());
    auto integrate = [&](double upto, double c) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            const double a = static_cast<double>(i) / n;
            const double b = std::min(upto, static_cast<double>(i + 1) / n);
            if (b <= a) break;
            s += (c * (b - a) - 0.5 * (b * b - a * a)) / kappa[static_cast<std::size_t>(i)];
        }
        return s;
    };
    // linear in c
    const double at0 = integrate(1.0, 0.0);
    const double slope = integrate(1.0, 1.0) - at0;
    const double c = -at0 / slope;
    return integrate(x, c);
}

/// Small collocation sets so finite-difference sweeps over all parameters stay cheap.
inline adai::SamplingCounts tiny_counts(const adai::ProblemSpec& p) {
    if (p.dim == 1) {
        return {21, 1, 1, 1};
    }
    if (p.dim == 2) {
        return {40, 4, 3, 2};
    }
    return {45, 4, 2, 1};
}

inline adai::Architecture random_arch(std::mt19937_64& rng, const adai::ProblemSpec& p) {
    using adai::ActivationKind;
    std::uniform_int_distribution<int> layers(1, 2);
    std::uniform_int_distribution<int> width(2, 5);
    std::uniform_int_distribution<int> kind(0, 5);
    std::bernoulli_distribution adaptive(0.6);
    adai::Architecture a;
    a.input_dim = p.dim;
    a.num_subdomains = p.num_subdomains;
    const int nl = layers(rng);
    for (int i = 0; i < nl; ++i) {
        a.hidden_sizes.push_back(width(rng));
    }
    if (adaptive(rng)) {
        a.scale_n = 2.0;
        a.mode = adai::AdaptiveMode{adai::kAllActivations[static_cast<std::size_t>(kind(rng))]};
    } else {
        a.scale_n = 1.0;
        std::vector<ActivationKind> kinds;
        for (int m = 0; m < p.num_subdomains; ++m) {
            kinds.push_back(adai::kAllActivations[static_cast<std::size_t>(kind(rng))]);
        }
        a.mode = adai::FixedMode{kinds};
    }
    return a;
}

/// Xavier draw plus random biases and slopes, so every parameter has a nonzero effect.
inline adai::MLPParams random_params(const adai::Architecture& a, std::mt19937_64& rng) {
    auto params = adai::init_xavier(a, rng());
    const adai::ParamLayout layout(a);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (const auto& slot : layout.layers) {
        for (int i = 0; i < slot.out; ++i) {
            params.values[slot.bias_offset + static_cast<std::size_t>(i)] = u(rng);
        }
    }
    if (a.adaptive()) {
        for (auto& s : params.slopes(layout)) {
            s = 0.5 + 0.5 * u(rng);
        }
    }
    return params;
}

}  // namespace testing
