#include "adai/gradient.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

#include <tbb/blocked_range.h>
#include <tbb/enumerable_thread_specific.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

#include "adai/jet_tape.hpp"
#include "adai/summation.hpp"

namespace adai {

int default_thread_count() {
    if (const char* env = std::getenv("IPINN_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) {
            return n;
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

enum class ItemKind { Interior, Dirichlet, Neumann, Interface };
enum Term { kEq = 0, kBcD, kBcN, kIcD, kIcN, kTermCount };

struct WorkItem {
    ItemKind kind;
    int set;
    std::size_t begin;
    std::size_t end;
};

struct ItemResult {
    std::array<CompensatedSum, kTermCount> sums;  // raw sums of squared residuals
    std::vector<double> grad;
};

struct Workspace {
    Workspace(const Architecture& arch, const ParamLayout& layout)
        : second(arch, layout), first(arch, layout) {}

    JetTape second;
    JetTape first;
    std::vector<double> seed_u, seed_grad, seed_lap;
    std::vector<double> seed_u1, seed_grad1;
};

}  // namespace

struct LossGradEngine::Impl {
    Impl(const Architecture& a, const ProblemSpec& p, const Batch& bt, const LossWeights& w,
         int t)
        : arch(a),
          layout(a),
          problem(p),
          batch(bt),
          weights(w),
          threads(std::max(1, t)),
          workspaces([this] { return Workspace(arch, layout); }) {
        weights.validate();
        auto split = [&](ItemKind kind, int set, std::size_t n) {
            for (std::size_t begin = 0; begin < n; begin += kBlockSize) {
                items.push_back({kind, set, begin, std::min(n, begin + kBlockSize)});
            }
        };
        for (std::size_t m = 0; m < batch.interior.size(); ++m) {
            if (batch.interior[m].empty()) {
                throw std::invalid_argument("no interior points in subdomain " +
                                            std::to_string(m + 1));
            }
            split(ItemKind::Interior, static_cast<int>(m), batch.interior[m].size());
        }
        for (std::size_t k = 0; k < batch.dirichlet.size(); ++k) {
            split(ItemKind::Dirichlet, static_cast<int>(k), batch.dirichlet[k].points.size());
        }
        for (std::size_t k = 0; k < batch.neumann.size(); ++k) {
            split(ItemKind::Neumann, static_cast<int>(k), batch.neumann[k].points.size());
        }
        for (std::size_t k = 0; k < batch.interfaces.size(); ++k) {
            if (batch.interfaces[k].points.empty()) {
                throw std::invalid_argument("no points on interface " + std::to_string(k + 1));
            }
            split(ItemKind::Interface, static_cast<int>(k), batch.interfaces[k].points.size());
        }
        results.resize(items.size());
        for (auto& r : results) {
            r.grad.assign(layout.size, 0.0);
        }
    }

    void run_item(const MLPParams& params, const WorkItem& item, Workspace& ws,
                  ItemResult& out) const;

    Architecture arch;
    ParamLayout layout;
    const ProblemSpec& problem;
    const Batch& batch;
    LossWeights weights;
    int threads;
    std::vector<WorkItem> items;
    std::vector<ItemResult> results;
    tbb::enumerable_thread_specific<Workspace> workspaces;
};

void LossGradEngine::Impl::run_item(const MLPParams& params, const WorkItem& item,
                                    Workspace& ws, ItemResult& out) const {
    std::fill(out.grad.begin(), out.grad.end(), 0.0);
    out.sums = {};
    const int dim = arch.input_dim;
    const std::size_t b = item.end - item.begin;
    const auto d = static_cast<std::size_t>(dim);
    ws.seed_u.assign(b, 0.0);
    ws.seed_grad.assign(b * d, 0.0);
    ws.seed_lap.assign(b, 0.0);

    switch (item.kind) {
        case ItemKind::Interior: {
            const auto m = static_cast<std::size_t>(item.set);
            const auto& pts = batch.interior[m];
            const double w = 1.0 / static_cast<double>(pts.size());
            const double kappa = problem.kappa[m];
            ws.second.forward(params, item.set,
                              std::span<const Point>(pts).subspan(item.begin, b),
                              JetOrder::Laplacian);
            for (std::size_t p = 0; p < b; ++p) {
                const double r = residual::pde(kappa, problem.source[m],
                                               ws.second.laplacian(static_cast<int>(p)));
                out.sums[kEq].add(r * r);
                ws.seed_lap[p] = 2.0 * w * r * kappa;
            }
            ws.second.backward(params, ws.seed_u, ws.seed_grad, ws.seed_lap, out.grad);
            break;
        }
        case ItemKind::Dirichlet: {
            const auto& set = batch.dirichlet[static_cast<std::size_t>(item.set)];
            const double w = weights.alpha_bc_d / static_cast<double>(set.points.size());
            ws.second.forward(params, set.subdomain,
                              std::span<const Point>(set.points).subspan(item.begin, b),
                              JetOrder::Value);
            for (std::size_t p = 0; p < b; ++p) {
                const double r =
                    residual::dirichlet(ws.second.u(static_cast<int>(p)), set.values[item.begin + p]);
                out.sums[kBcD].add(r * r);
                ws.seed_u[p] = 2.0 * w * r;
            }
            ws.second.backward(params, ws.seed_u, {}, {}, out.grad);
            break;
        }
        case ItemKind::Neumann: {
            const auto& set = batch.neumann[static_cast<std::size_t>(item.set)];
            const double w = weights.alpha_bc_n / static_cast<double>(set.points.size());
            const double kappa = problem.kappa[static_cast<std::size_t>(set.subdomain)];
            ws.second.forward(params, set.subdomain,
                              std::span<const Point>(set.points).subspan(item.begin, b),
                              JetOrder::Gradient);
            for (std::size_t p = 0; p < b; ++p) {
                const auto& n = set.normals[item.begin + p];
                Point g{};
                for (int i = 0; i < dim; ++i) {
                    g[static_cast<std::size_t>(i)] = ws.second.grad(static_cast<int>(p), i);
                }
                const double r = residual::normal_flux(kappa, g, n) - set.values[item.begin + p];
                out.sums[kBcN].add(r * r);
                for (std::size_t i = 0; i < d; ++i) {
                    ws.seed_grad[p * d + i] = 2.0 * w * r * kappa * n[i];
                }
            }
            ws.second.backward(params, ws.seed_u, ws.seed_grad, {}, out.grad);
            break;
        }
        case ItemKind::Interface: {
            const auto& set = batch.interfaces[static_cast<std::size_t>(item.set)];
            const double w = weights.alpha_int / static_cast<double>(set.points.size());
            const double k2 = problem.kappa[static_cast<std::size_t>(set.second)];
            const double k1 = problem.kappa[static_cast<std::size_t>(set.first)];
            const auto pts = std::span<const Point>(set.points).subspan(item.begin, b);
            ws.second.forward(params, set.second, pts, JetOrder::Gradient);
            ws.first.forward(params, set.first, pts, JetOrder::Gradient);
            ws.seed_u1.assign(b, 0.0);
            ws.seed_grad1.assign(b * d, 0.0);
            for (std::size_t p = 0; p < b; ++p) {
                const auto pi = static_cast<int>(p);
                const auto& n = set.normals[item.begin + p];
                Point g2{};
                Point g1{};
                for (int i = 0; i < dim; ++i) {
                    g2[static_cast<std::size_t>(i)] = ws.second.grad(pi, i);
                    g1[static_cast<std::size_t>(i)] = ws.first.grad(pi, i);
                }
                const double rd = residual::jump_u(ws.second.u(pi), ws.first.u(pi),
                                                   set.jump_u[item.begin + p]);
                const double rn = residual::jump_flux(residual::normal_flux(k2, g2, n),
                                                      residual::normal_flux(k1, g1, n),
                                                      set.jump_flux[item.begin + p]);
                out.sums[kIcD].add(rd * rd);
                out.sums[kIcN].add(rn * rn);
                ws.seed_u[p] = 2.0 * w * rd;
                ws.seed_u1[p] = -2.0 * w * rd;
                for (std::size_t i = 0; i < d; ++i) {
                    ws.seed_grad[p * d + i] = 2.0 * w * rn * k2 * n[i];
                    ws.seed_grad1[p * d + i] = -2.0 * w * rn * k1 * n[i];
                }
            }
            ws.second.backward(params, ws.seed_u, ws.seed_grad, {}, out.grad);
            ws.first.backward(params, ws.seed_u1, ws.seed_grad1, {}, out.grad);
            break;
        }
    }
}

LossGradEngine::LossGradEngine(const Architecture& arch, const ProblemSpec& problem,
                               const Batch& batch, const LossWeights& weights, int threads)
    : impl_(std::make_unique<Impl>(arch, problem, batch, weights, threads)) {}

LossGradEngine::~LossGradEngine() = default;

LossAndGrad LossGradEngine::evaluate(const MLPParams& params) {
    Impl& im = *impl_;
    if (params.values.size() != im.layout.size) {
        throw std::invalid_argument("parameter vector does not match the architecture");
    }
    const std::size_t n_items = im.items.size();
    if (im.threads == 1) {
        auto& ws = im.workspaces.local();
        for (std::size_t k = 0; k < n_items; ++k) {
            im.run_item(params, im.items[k], ws, im.results[k]);
        }
    } else {
        tbb::task_arena arena(im.threads);
        arena.execute([&] {
            tbb::parallel_for(tbb::blocked_range<std::size_t>(0, n_items, 1),
                              [&](const tbb::blocked_range<std::size_t>& range) {
                                  auto& ws = im.workspaces.local();
                                  for (std::size_t k = range.begin(); k != range.end(); ++k) {
                                      im.run_item(params, im.items[k], ws, im.results[k]);
                                  }
                              });
        });
    }

    // Ordered reduction: identical for any worker count.
    std::array<CompensatedSum, kTermCount> terms;
    LossAndGrad out;
    out.grad.values.assign(im.layout.size, 0.0);
    for (std::size_t k = 0; k < n_items; ++k) {
        const auto& item = im.items[k];
        const auto& res = im.results[k];
        double count = 1.0;
        switch (item.kind) {
            case ItemKind::Interior:
                count = static_cast<double>(im.batch.interior[static_cast<std::size_t>(item.set)].size());
                break;
            case ItemKind::Dirichlet:
                count = static_cast<double>(
                    im.batch.dirichlet[static_cast<std::size_t>(item.set)].points.size());
                break;
            case ItemKind::Neumann:
                count = static_cast<double>(
                    im.batch.neumann[static_cast<std::size_t>(item.set)].points.size());
                break;
            case ItemKind::Interface:
                count = static_cast<double>(
                    im.batch.interfaces[static_cast<std::size_t>(item.set)].points.size());
                break;
        }
        for (int t = 0; t < kTermCount; ++t) {
            terms[static_cast<std::size_t>(t)].add(res.sums[static_cast<std::size_t>(t)].value() / count);
        }
        for (std::size_t i = 0; i < out.grad.values.size(); ++i) {
            out.grad.values[i] += res.grad[i];
        }
    }
    out.loss.mse_eq = terms[kEq].value();
    out.loss.mse_bc_d = terms[kBcD].value();
    out.loss.mse_bc_n = terms[kBcN].value();
    out.loss.mse_ic_d = terms[kIcD].value();
    out.loss.mse_ic_n = terms[kIcN].value();
    out.loss.total = compose_total(out.loss, im.weights);
    check_finite(out.loss);
    return out;
}

LossAndGrad loss_and_grad(const MLPParams& params, const Architecture& arch, const Batch& batch,
                          const ProblemSpec& problem, const LossWeights& weights, int threads) {
    LossGradEngine engine(arch, problem, batch, weights, threads);
    return engine.evaluate(params);
}

}  // namespace adai
