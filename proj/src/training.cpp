#include "adai/training.hpp"

#include <chrono>
#include <cmath>

#include "adai/summation.hpp"

namespace adai {

AdamState AdamState::create(std::size_t trainable, double lr) {
    AdamState s;
    s.m.assign(trainable, 0.0);
    s.v.assign(trainable, 0.0);
    s.lr = lr;
    return s;
}

void adam_step(AdamState& state, MLPParams& params, const GradBuffer& grads) {
    const std::size_t n = state.m.size();
    if (state.v.size() != n || grads.values.size() < n || params.values.size() < n) {
        throw std::invalid_argument("adam_step: optimizer state does not match the parameters");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(grads.values[i])) {
            throw NumericalError("gradient", "non-finite gradient at parameter " +
                                                 std::to_string(i) + " (step " +
                                                 std::to_string(state.step + 1) + ")");
        }
    }
    ++state.step;
    const double c1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.step));
    const double c2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.step));
    for (std::size_t i = 0; i < n; ++i) {
        const double g = grads.values[i];
        state.m[i] = state.beta1 * state.m[i] + (1.0 - state.beta1) * g;
        state.v[i] = state.beta2 * state.v[i] + (1.0 - state.beta2) * g * g;
        const double m_hat = state.m[i] / c1;
        const double v_hat = state.v[i] / c2;
        params.values[i] -= state.lr * m_hat / (std::sqrt(v_hat) + state.eps);
    }
}

GridSpec GridSpec::defaults_for(const ProblemSpec& problem) {
    switch (problem.dim) {
        case 1:
            return {{1001}};
        case 2:
            return {{171, 101}};
        default:
            return {{41, 41, 41}};
    }
}

double evaluate_rmse(const FieldEvaluator& field, const ProblemSpec& problem,
                     const GridSpec& grid) {
    if (static_cast<int>(grid.counts.size()) != problem.dim) {
        throw std::invalid_argument("evaluation grid needs one count per dimension");
    }
    for (int c : grid.counts) {
        if (c < 2) {
            throw std::invalid_argument("evaluation grid needs at least 2 points per axis");
        }
    }
    CompensatedSum sum;
    std::size_t total = 1;
    for (int c : grid.counts) {
        total *= static_cast<std::size_t>(c);
    }
    std::array<int, 3> idx{};
    for (std::size_t k = 0; k < total; ++k) {
        std::size_t rest = k;
        Point x{};
        for (int i = 0; i < problem.dim; ++i) {
            const auto ii = static_cast<std::size_t>(i);
            const auto c = static_cast<std::size_t>(grid.counts[ii]);
            idx[ii] = static_cast<int>(rest % c);
            rest /= c;
            x[ii] = problem.domain.lo[ii] + (problem.domain.hi[ii] - problem.domain.lo[ii]) *
                                                static_cast<double>(idx[ii]) /
                                                static_cast<double>(c - 1);
        }
        const int m = problem.membership(x);
        const double diff = field.value(m, x) - problem.analytical(m, x);
        sum.add(diff * diff);
    }
    return std::sqrt(sum.value() / static_cast<double>(total));
}

double evaluate_rmse(const MLPParams& params, const Architecture& arch,
                     const ProblemSpec& problem, const GridSpec& grid) {
    return evaluate_rmse(NetworkField(arch, params), problem, grid);
}

double cost_ratio(double t_method, double t_adai) {
    if (!(t_method > 0.0) || !(t_adai > 0.0)) {
        throw std::invalid_argument("cost_ratio: training times must be positive");
    }
    return t_method / t_adai;
}

TrainConfig TrainConfig::defaults_for(const std::string& problem) {
    using K = ActivationKind;
    TrainConfig c;
    c.problem = problem;
    c.output_dir = "runs/" + problem;
    c.sampling = SamplingCounts::defaults_for(problem);
    if (problem == "letters2d") {
        c.hidden_layers = 3;
        c.neurons = 20;
        c.alpha_int = 25.0;
        c.alpha_bc_d = c.alpha_bc_n = 20.0;
        c.activation = K::Tanh;
        c.activations = {K::Tanh, K::Swish, K::Swish, K::Swish, K::Swish};
        c.iterations = 60000;
        c.eval_grid = {171, 101};
    } else if (problem == "spheres3d") {
        c.hidden_layers = 2;
        c.neurons = 50;
        c.alpha_int = 50.0;
        c.alpha_bc_d = c.alpha_bc_n = 40.0;
        c.activation = K::Sigmoid;
        c.activations = {K::Swish,   K::Sigmoid, K::Sigmoid, K::Sigmoid, K::Sigmoid,
                         K::Sigmoid, K::Sigmoid, K::Sigmoid, K::Sigmoid};
        c.iterations = 20000;
        c.eval_grid = {41, 41, 41};
    } else {
        c.hidden_layers = 3;
        c.neurons = 10;
        c.alpha_int = 5.0;
        c.alpha_bc_d = c.alpha_bc_n = 10.0;
        c.activation = K::Tanh;
        c.activations = {K::Tanh, K::Swish, K::Tanh, K::Swish, K::Tanh};
        c.iterations = 60000;
        c.eval_grid = {1001};
    }
    return c;
}

Architecture TrainConfig::architecture(const ProblemSpec& problem) const {
    Architecture arch;
    arch.input_dim = problem.dim;
    arch.hidden_sizes.assign(static_cast<std::size_t>(std::max(hidden_layers, 0)), neurons);
    arch.num_subdomains = problem.num_subdomains;
    arch.scale_n = scale_n;
    if (mode == "ipinn") {
        arch.mode = FixedMode{activations};
        arch.scale_n = 1.0;
    } else {
        arch.mode = AdaptiveMode{activation};
    }
    arch.validate();
    return arch;
}

TrainReport train(const TrainConfig& config, const ProgressCallback& progress) {
    const ProblemSpec problem = make_problem(config.problem, read_layout_file(config.layout_file));
    return train(config, problem, progress);
}

TrainReport train(const TrainConfig& config, const ProblemSpec& problem,
                  const ProgressCallback& progress) {
    if (config.iterations < 0 || config.log_interval < 1) {
        throw ConfigError("iterations must be >= 0 and log_interval >= 1");
    }
    const Architecture arch = config.architecture(problem);
    const ParamLayout layout(arch);
    const Batch batch = build_batch(problem, config.sampling, config.seed);
    const int threads = config.threads > 0 ? config.threads : default_thread_count();
    LossGradEngine engine(arch, problem, batch, config.loss_weights(), threads);

    TrainReport report;
    report.config_echo = config;
    report.architecture = arch;
    if (arch.adaptive()) {
        report.a_history.emplace();
    }
    MLPParams params = init_xavier(arch, config.seed);
    AdamState adam = AdamState::create(layout.trainable_size(arch), config.lr);

    const auto start = std::chrono::steady_clock::now();
    for (int it = 0;; ++it) {
        LossAndGrad lg;
        try {
            lg = engine.evaluate(params);
        } catch (const NumericalError& e) {
            if (!config.stop_on_nonfinite) {
                throw;
            }
            report.early_stop = "iteration " + std::to_string(it) + ": " + e.what();
            break;
        }
        if (it % config.log_interval == 0 || it == config.iterations) {
            report.loss_history.push_back({it, lg.loss});
            if (report.a_history) {
                const auto a = params.slopes(layout);
                report.a_history->push_back({it, {a.begin(), a.end()}});
            }
            if (progress) {
                progress(it, lg.loss);
            }
        }
        if (it == config.iterations) {
            break;
        }
        if (config.lr_decay_rate != 1.0) {
            adam.lr = config.lr * std::pow(config.lr_decay_rate,
                                           static_cast<double>(adam.step) /
                                               static_cast<double>(config.lr_decay_steps));
        }
        try {
            adam_step(adam, params, lg.grad);
        } catch (const NumericalError& e) {
            if (!config.stop_on_nonfinite) {
                throw;
            }
            report.early_stop = "iteration " + std::to_string(it) + ": " + e.what();
            break;
        }
        report.iterations = it + 1;
    }
    const auto stop = std::chrono::steady_clock::now();
    report.wall_time_seconds = std::chrono::duration<double>(stop - start).count();

    GridSpec grid{config.eval_grid};
    if (grid.counts.empty()) {
        grid = GridSpec::defaults_for(problem);
    }
    report.final_rmse = evaluate_rmse(params, arch, problem, grid);
    report.final_params = std::move(params);
    return report;
}

}  // namespace adai
