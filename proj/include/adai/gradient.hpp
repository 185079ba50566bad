#pragma once

#include <memory>
#include <vector>

#include "adai/loss.hpp"

namespace adai {

/// d(loss)/d(parameter), same layout as MLPParams::values. Slots of frozen slopes stay 0.
struct GradBuffer {
    std::vector<double> values;
};

struct LossAndGrad {
    LossBreakdown loss;
    GradBuffer grad;
};

/// Worker count from IPINN_THREADS (default: hardware concurrency, at least 1).
int default_thread_count();

/// Full-batch loss and exact gradient for a fixed (problem, batch, weights) triple.
///
/// Points are split into fixed-size work items independent of the worker count; per-item
/// results are reduced in item order, so the output is bit-identical for any `threads`.
class LossGradEngine {
public:
    LossGradEngine(const Architecture& arch, const ProblemSpec& problem, const Batch& batch,
                   const LossWeights& weights, int threads = 1);
    ~LossGradEngine();
    LossGradEngine(const LossGradEngine&) = delete;
    LossGradEngine& operator=(const LossGradEngine&) = delete;

    /// Throws NumericalError if any loss term is non-finite.
    LossAndGrad evaluate(const MLPParams& params);

    static constexpr int kBlockSize = 64;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

LossAndGrad loss_and_grad(const MLPParams& params, const Architecture& arch, const Batch& batch,
                          const ProblemSpec& problem, const LossWeights& weights, int threads = 1);

}  // namespace adai
