#include "adai/loss.hpp"

#include <cmath>
#include <string>

#include "adai/summation.hpp"

namespace adai {

void LossWeights::validate() const {
    for (double a : {alpha_bc_d, alpha_bc_n, alpha_int}) {
        if (!std::isfinite(a) || a < 0.0) {
            throw ConfigError("loss weights must be finite and non-negative");
        }
    }
}

double compose_total(const LossBreakdown& t, const LossWeights& w) {
    return t.mse_eq + w.alpha_bc_d * t.mse_bc_d + w.alpha_bc_n * t.mse_bc_n +
           w.alpha_int * (t.mse_ic_d + t.mse_ic_n);
}

void check_finite(const LossBreakdown& loss) {
    const std::pair<const char*, double> terms[] = {
        {"mse_eq", loss.mse_eq},     {"mse_bc_d", loss.mse_bc_d}, {"mse_bc_n", loss.mse_bc_n},
        {"mse_ic_d", loss.mse_ic_d}, {"mse_ic_n", loss.mse_ic_n}, {"total", loss.total}};
    for (const auto& [name, value] : terms) {
        if (!std::isfinite(value)) {
            throw NumericalError(name, std::string("non-finite loss term ") + name);
        }
    }
}

FieldValue AnalyticalField::evaluate(int m, const Point& x) const {
    return {problem_.analytical(m, x), problem_.analytical_grad(m, x),
            problem_.analytical_laplacian(m)};
}

LossBreakdown evaluate_loss(const FieldEvaluator& field, const ProblemSpec& problem,
                            const Batch& batch, const LossWeights& weights) {
    weights.validate();
    LossBreakdown out;

    CompensatedSum eq;
    for (std::size_t m = 0; m < batch.interior.size(); ++m) {
        const auto& pts = batch.interior[m];
        if (pts.empty()) {
            throw std::invalid_argument("no interior points in subdomain " + std::to_string(m + 1));
        }
        CompensatedSum s;
        for (const auto& x : pts) {
            const auto f = field.evaluate(static_cast<int>(m), x);
            const double r = residual::pde(problem.kappa[m], problem.source[m], f.laplacian);
            s.add(r * r);
        }
        eq.add(s.value() / static_cast<double>(pts.size()));
    }
    out.mse_eq = eq.value();

    auto boundary_mse = [&](const std::vector<BoundarySet>& sets, bool neumann) {
        CompensatedSum total;
        for (const auto& set : sets) {
            if (set.points.empty()) {
                continue;
            }
            CompensatedSum s;
            for (std::size_t j = 0; j < set.points.size(); ++j) {
                double r = 0.0;
                if (neumann) {
                    const auto f = field.evaluate(set.subdomain, set.points[j]);
                    r = residual::normal_flux(problem.kappa[static_cast<std::size_t>(set.subdomain)],
                                              f.grad, set.normals[j]) -
                        set.values[j];
                } else {
                    r = residual::dirichlet(field.value(set.subdomain, set.points[j]),
                                            set.values[j]);
                }
                s.add(r * r);
            }
            total.add(s.value() / static_cast<double>(set.points.size()));
        }
        return total.value();
    };
    out.mse_bc_d = boundary_mse(batch.dirichlet, false);
    out.mse_bc_n = boundary_mse(batch.neumann, true);

    CompensatedSum ic_d;
    CompensatedSum ic_n;
    for (const auto& set : batch.interfaces) {
        if (set.points.empty()) {
            throw std::invalid_argument("no points on interface " +
                                        std::to_string(set.interface_index + 1));
        }
        const double k2 = problem.kappa[static_cast<std::size_t>(set.second)];
        const double k1 = problem.kappa[static_cast<std::size_t>(set.first)];
        CompensatedSum sd;
        CompensatedSum sn;
        for (std::size_t j = 0; j < set.points.size(); ++j) {
            const auto& x = set.points[j];
            const auto f2 = field.evaluate(set.second, x);
            const auto f1 = field.evaluate(set.first, x);
            const double rd = residual::jump_u(f2.u, f1.u, set.jump_u[j]);
            const double rn = residual::jump_flux(residual::normal_flux(k2, f2.grad, set.normals[j]),
                                                  residual::normal_flux(k1, f1.grad, set.normals[j]),
                                                  set.jump_flux[j]);
            sd.add(rd * rd);
            sn.add(rn * rn);
        }
        const auto n = static_cast<double>(set.points.size());
        ic_d.add(sd.value() / n);
        ic_n.add(sn.value() / n);
    }
    out.mse_ic_d = ic_d.value();
    out.mse_ic_n = ic_n.value();
    out.total = compose_total(out, weights);
    check_finite(out);
    return out;
}

}  // namespace adai
