#pragma once

#include "adai/network.hpp"
#include "adai/problems.hpp"
#include "adai/sampling.hpp"

namespace adai {

/// Penalties on the boundary and interface terms; the PDE term has weight 1.
/// One alpha_int scales both interface terms.
struct LossWeights {
    double alpha_bc_d = 1.0;
    double alpha_bc_n = 1.0;
    double alpha_int = 1.0;

    void validate() const;
};

struct LossBreakdown {
    double mse_eq = 0.0;
    double mse_bc_d = 0.0;
    double mse_bc_n = 0.0;
    double mse_ic_d = 0.0;
    double mse_ic_n = 0.0;
    double total = 0.0;
};

/// total = mse_eq + a_d mse_bc_d + a_n mse_bc_n + a_int (mse_ic_d + mse_ic_n)
double compose_total(const LossBreakdown& terms, const LossWeights& weights);

/// Throws NumericalError naming the first non-finite component.
void check_finite(const LossBreakdown& loss);

/// Anything that can report u, grad u and the Laplacian of subdomain m's field at x.
class FieldEvaluator {
public:
    virtual ~FieldEvaluator() = default;
    virtual FieldValue evaluate(int m, const Point& x) const = 0;
    virtual double value(int m, const Point& x) const { return evaluate(m, x).u; }
};

/// The exact piecewise solution of a benchmark.
class AnalyticalField final : public FieldEvaluator {
public:
    explicit AnalyticalField(const ProblemSpec& problem) : problem_(problem) {}
    FieldValue evaluate(int m, const Point& x) const override;
    double value(int m, const Point& x) const override { return problem_.analytical(m, x); }

private:
    const ProblemSpec& problem_;
};

class NetworkField final : public FieldEvaluator {
public:
    NetworkField(const Architecture& arch, const MLPParams& params)
        : arch_(arch), params_(params) {}
    FieldValue evaluate(int m, const Point& x) const override {
        return forward_with_derivs(params_, arch_, m, x);
    }
    double value(int m, const Point& x) const override { return forward(params_, arch_, m, x); }

private:
    const Architecture& arch_;
    const MLPParams& params_;
};

/// Residual definitions shared by the field-based loss and the gradient engine.
namespace residual {

inline double pde(double kappa, double source, double laplacian) {
    return kappa * laplacian - source;
}

inline double dirichlet(double u, double target) { return u - target; }

inline double normal_flux(double kappa, const Point& grad, const Point& n) {
    return kappa * (grad[0] * n[0] + grad[1] * n[1] + grad[2] * n[2]);
}

inline double jump_u(double u_second, double u_first, double p) {
    return u_second - u_first - p;
}

inline double jump_flux(double flux_second, double flux_first, double q) {
    return flux_second - flux_first - q;
}

}  // namespace residual

/// Mean-squared residuals of the PDE, boundary and interface conditions. Means are taken
/// per subdomain / boundary partition / interface and then summed.
LossBreakdown evaluate_loss(const FieldEvaluator& field, const ProblemSpec& problem,
                            const Batch& batch, const LossWeights& weights);

}  // namespace adai
