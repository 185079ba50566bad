#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "adai/network.hpp"

namespace adai {

/// Derivative content of a jet pass: value only, value + gradient, or value + gradient +
/// Laplacian.
enum class JetOrder { Value = 0, Gradient = 1, Laplacian = 2 };

/// Records the jet operations (affine layer, scaled activation) of one subdomain network
/// evaluated on a block of points, and replays them backwards to accumulate exact
/// parameter gradients of any linear functional of (u, grad u, Laplacian u).
///
/// Column layout of every recorded matrix: [value | d1 per direction | d2 per direction],
/// each block B columns wide (one column per point). Direction i is seeded with e_i.
class JetTape {
public:
    JetTape(const Architecture& arch, const ParamLayout& layout);

    void forward(const MLPParams& params, int subdomain, std::span<const Point> points,
                 JetOrder order);

    int block_size() const { return block_; }
    double u(int p) const { return output_(0, p); }
    double grad(int p, int dir) const;
    double laplacian(int p) const;

    /// Seeds: adjoint of u per point, of each gradient component (point-major, dim per
    /// point; ignored for JetOrder::Value), and of the Laplacian (JetOrder::Laplacian only).
    /// Adds d(sum of seeds * outputs)/d(theta, a) into `grad_out` (length layout.size).
    void backward(const MLPParams& params, std::span<const double> seed_u,
                  std::span<const double> seed_grad, std::span<const double> seed_lap,
                  std::span<double> grad_out);

private:
    using Matrix = Eigen::MatrixXd;
    using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

    int channels() const;

    const Architecture& arch_;
    const ParamLayout& layout_;
    int dim_ = 1;
    int block_ = 0;
    int subdomain_ = 0;
    JetOrder order_ = JetOrder::Value;
    double scale_ = 1.0;
    ActivationKind kind_ = ActivationKind::Tanh;

    // Owned copies keep every Eigen kernel on aligned storage, so results do not depend on
    // where the caller's vectors happen to live.
    std::vector<RowMatrix> weights_;
    RowMatrix weight_grad_;
    std::vector<Matrix> inputs_;   // input jets of every layer
    std::vector<Matrix> pre_;      // hidden pre-activation jets
    std::vector<Matrix> sigma1_;   // sigma', sigma'', sigma''' at scale * pre (value block)
    std::vector<Matrix> sigma2_;
    std::vector<Matrix> sigma3_;
    Matrix output_;
    Matrix adj_out_;
    Matrix adj_in_;
    Matrix adj_pre_;
};

}  // namespace adai
