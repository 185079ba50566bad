#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adai/gradient.hpp"
#include "adai/loss.hpp"
#include "adai/network.hpp"
#include "adai/problems.hpp"
#include "adai/sampling.hpp"

namespace adai {

/// Adam over the trainable prefix of the parameter vector.
struct AdamState {
    long step = 0;
    std::vector<double> m;
    std::vector<double> v;
    double lr = 5e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;

    static AdamState create(std::size_t trainable, double lr);
};

/// One bias-corrected Adam update of params.values[0 .. state.m.size()).
/// Throws NumericalError on a non-finite gradient entry.
void adam_step(AdamState& state, MLPParams& params, const GradBuffer& grads);

/// Uniform tensor grid over the problem domain, endpoints included.
struct GridSpec {
    std::vector<int> counts;

    static GridSpec defaults_for(const ProblemSpec& problem);
};

/// sqrt(mean (u_{m(x)}(x) - u_exact(x))^2) over the grid, each point in its own subdomain.
double evaluate_rmse(const FieldEvaluator& field, const ProblemSpec& problem,
                     const GridSpec& grid);
double evaluate_rmse(const MLPParams& params, const Architecture& arch,
                     const ProblemSpec& problem, const GridSpec& grid);

/// t_method / t_adai. Throws std::invalid_argument unless both are positive.
double cost_ratio(double t_method, double t_adai);

struct TrainConfig {
    std::string problem = "poisson1d";
    std::string mode = "adai";
    ActivationKind activation = ActivationKind::Tanh;
    std::vector<ActivationKind> activations;  // ipinn: one per subdomain
    int hidden_layers = 3;
    int neurons = 10;
    int iterations = 60000;
    std::uint64_t seed = 1;
    double scale_n = 10.0;
    double lr = 5e-3;
    double lr_decay_rate = 1.0;  // lr * rate^(step / lr_decay_steps); 1 keeps lr constant
    int lr_decay_steps = 1000;
    double alpha_int = 5.0;
    double alpha_bc_d = 10.0;
    double alpha_bc_n = 10.0;
    SamplingCounts sampling;
    int log_interval = 100;
    std::vector<int> eval_grid;
    std::string layout_file;  // 2D only; empty = built-in layout
    std::string output_dir = "runs/poisson1d";
    bool stop_on_nonfinite = true;
    int threads = 0;  // 0 = IPINN_THREADS or hardware concurrency

    /// Reference settings of each benchmark.
    static TrainConfig defaults_for(const std::string& problem);

    Architecture architecture(const ProblemSpec& problem) const;
    LossWeights loss_weights() const { return {alpha_bc_d, alpha_bc_n, alpha_int}; }
};

struct LogEntry {
    int iteration = 0;
    LossBreakdown loss;
};

struct SlopeEntry {
    int iteration = 0;
    std::vector<double> slopes;
};

struct TrainReport {
    std::vector<LogEntry> loss_history;
    std::optional<std::vector<SlopeEntry>> a_history;  // AdaI mode only
    double final_rmse = 0.0;
    double wall_time_seconds = 0.0;
    int iterations = 0;  // completed optimizer steps
    std::optional<std::string> early_stop;
    TrainConfig config_echo;
    Architecture architecture;
    MLPParams final_params;
};

using ProgressCallback = std::function<void(int iteration, const LossBreakdown& loss)>;

/// Full-batch Adam on a fixed collocation set. Logs every log_interval iterations and at
/// the last one; loss_history[0] is the loss of the freshly initialized network.
TrainReport train(const TrainConfig& config, const ProgressCallback& progress = {});

/// Same, on an already constructed problem (the config's problem name is not reloaded).
TrainReport train(const TrainConfig& config, const ProblemSpec& problem,
                  const ProgressCallback& progress = {});

}  // namespace adai
