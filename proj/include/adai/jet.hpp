#pragma once

#include <span>
#include <vector>

#include "adai/activations.hpp"

namespace adai {

/// Second-order jet along one direction e: (f, df/dt, d2f/dt2) of t -> f(x + t e) at t = 0.
struct Jet2 {
    double val = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;

    static constexpr Jet2 constant(double v) { return {v, 0.0, 0.0}; }
    static constexpr Jet2 variable(double v) { return {v, 1.0, 0.0}; }
};

/// Seeds for coordinate `direction` of `x`: that coordinate gets d1 = 1, the rest are constants.
std::vector<Jet2> seed_jets(std::span<const double> x, int direction);

/// out = W in + b with W stored row-major (out_dim x in_dim).
/// Throws std::invalid_argument on a shape mismatch.
std::vector<Jet2> jet_affine(std::span<const double> weights, std::span<const double> bias,
                             std::span<const Jet2> in);

/// out = sigma(scale * in), chained to second order.
Jet2 jet_activation(ActivationKind kind, double scale, Jet2 in);

}  // namespace adai
