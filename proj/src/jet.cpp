#include "adai/jet.hpp"

#include <stdexcept>
#include <string>

namespace adai {

std::vector<Jet2> seed_jets(std::span<const double> x, int direction) {
    std::vector<Jet2> jets;
    jets.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        jets.push_back(static_cast<int>(i) == direction ? Jet2::variable(x[i])
                                                        : Jet2::constant(x[i]));
    }
    return jets;
}

std::vector<Jet2> jet_affine(std::span<const double> weights, std::span<const double> bias,
                             std::span<const Jet2> in) {
    const std::size_t out_dim = bias.size();
    const std::size_t in_dim = in.size();
    if (weights.size() != out_dim * in_dim) {
        throw std::invalid_argument("jet_affine: weight matrix has " +
                                    std::to_string(weights.size()) + " entries, expected " +
                                    std::to_string(out_dim) + "x" + std::to_string(in_dim));
    }
    std::vector<Jet2> out(out_dim);
    for (std::size_t j = 0; j < out_dim; ++j) {
        Jet2 acc = Jet2::constant(bias[j]);
        const double* row = weights.data() + j * in_dim;
        for (std::size_t k = 0; k < in_dim; ++k) {
            acc.val += row[k] * in[k].val;
            acc.d1 += row[k] * in[k].d1;
            acc.d2 += row[k] * in[k].d2;
        }
        out[j] = acc;
    }
    return out;
}

Jet2 jet_activation(ActivationKind kind, double scale, Jet2 in) {
    const auto s = act_eval2(kind, scale * in.val);
    return {s.value, scale * s.first * in.d1,
            scale * scale * s.second * in.d1 * in.d1 + scale * s.first * in.d2};
}

}  // namespace adai
