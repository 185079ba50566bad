#include "adai/jet_tape.hpp"

#include <stdexcept>

namespace adai {

namespace {

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstWeights = Eigen::Map<const RowMajor>;
using ConstVector = Eigen::Map<const Eigen::VectorXd>;

void add_into(std::span<double> out, std::size_t offset, const double* src, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        out[offset + k] += src[k];
    }
}

}  // namespace

JetTape::JetTape(const Architecture& arch, const ParamLayout& layout)
    : arch_(arch), layout_(layout), dim_(arch.input_dim) {
    const std::size_t n = layout.layers.size();
    inputs_.resize(n);
    weights_.resize(n);
    pre_.resize(n - 1);
    sigma1_.resize(n - 1);
    sigma2_.resize(n - 1);
    sigma3_.resize(n - 1);
}

int JetTape::channels() const {
    switch (order_) {
        case JetOrder::Value:
            return 1;
        case JetOrder::Gradient:
            return 1 + dim_;
        case JetOrder::Laplacian:
            return 1 + 2 * dim_;
    }
    return 1;
}

double JetTape::grad(int p, int dir) const { return output_(0, (1 + dir) * block_ + p); }

double JetTape::laplacian(int p) const {
    double lap = 0.0;
    for (int i = 0; i < dim_; ++i) {
        lap += output_(0, (1 + dim_ + i) * block_ + p);
    }
    return lap;
}

void JetTape::forward(const MLPParams& params, int subdomain, std::span<const Point> points,
                      JetOrder order) {
    block_ = static_cast<int>(points.size());
    subdomain_ = subdomain;
    order_ = order;
    kind_ = arch_.activation(subdomain);
    scale_ = effective_scale(arch_, layout_, params, subdomain);
    const int b = block_;
    const int cols = channels() * b;
    const bool first_order = order != JetOrder::Value;
    const bool second_order = order == JetOrder::Laplacian;

    Matrix& x = inputs_[0];
    x.setZero(dim_, cols);
    for (int p = 0; p < b; ++p) {
        for (int i = 0; i < dim_; ++i) {
            x(i, p) = points[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)];
            if (first_order) {
                x(i, (1 + i) * b + p) = 1.0;
            }
        }
    }

    const double s = scale_;
    const std::size_t hidden = layout_.layers.size() - 1;
    for (std::size_t l = 0; l <= hidden; ++l) {
        const auto& slot = layout_.layers[l];
        weights_[l] = ConstWeights(params.values.data() + slot.weight_offset, slot.out, slot.in);
        const RowMatrix& w = weights_[l];
        const ConstVector bias(params.values.data() + slot.bias_offset, slot.out);
        if (l == hidden) {
            output_.noalias() = w * inputs_[l];
            output_.leftCols(b).colwise() += bias;
            break;
        }
        Matrix& z = pre_[l];
        z.noalias() = w * inputs_[l];
        z.leftCols(b).colwise() += bias;

        const int n = slot.out * b;
        sigma1_[l].resize(slot.out, b);
        sigma2_[l].resize(slot.out, b);
        sigma3_[l].resize(slot.out, b);
        Matrix& next = inputs_[l + 1];
        next.resize(slot.out, cols);
        const double* zv = z.data();
        double* s1 = sigma1_[l].data();
        double* s2 = sigma2_[l].data();
        double* s3 = sigma3_[l].data();
        double* hv = next.data();
        for (int e = 0; e < n; ++e) {
            const auto a = act_eval3(kind_, s * zv[e]);
            hv[e] = a.value;
            s1[e] = a.first;
            s2[e] = a.second;
            s3[e] = a.third;
        }
        if (!first_order) {
            continue;
        }
        for (int i = 0; i < dim_; ++i) {
            const double* z1 = zv + static_cast<std::ptrdiff_t>(1 + i) * n;
            double* h1 = hv + static_cast<std::ptrdiff_t>(1 + i) * n;
            for (int e = 0; e < n; ++e) {
                h1[e] = s * s1[e] * z1[e];
            }
            if (second_order) {
                const double* z2 = zv + static_cast<std::ptrdiff_t>(1 + dim_ + i) * n;
                double* h2 = hv + static_cast<std::ptrdiff_t>(1 + dim_ + i) * n;
                for (int e = 0; e < n; ++e) {
                    h2[e] = s * s * s2[e] * z1[e] * z1[e] + s * s1[e] * z2[e];
                }
            }
        }
    }
}

void JetTape::backward(const MLPParams& /*params*/, std::span<const double> seed_u,
                       std::span<const double> seed_grad, std::span<const double> seed_lap,
                       std::span<double> grad_out) {
    const int b = block_;
    const int cols = channels() * b;
    const bool first_order = order_ != JetOrder::Value;
    const bool second_order = order_ == JetOrder::Laplacian;
    if (seed_u.size() != static_cast<std::size_t>(b) ||
        (first_order && seed_grad.size() != static_cast<std::size_t>(b * dim_)) ||
        (second_order && seed_lap.size() != static_cast<std::size_t>(b)) ||
        grad_out.size() != layout_.size) {
        throw std::invalid_argument("JetTape::backward: seed or gradient size mismatch");
    }

    adj_out_.setZero(1, cols);
    for (int p = 0; p < b; ++p) {
        adj_out_(0, p) = seed_u[static_cast<std::size_t>(p)];
        if (first_order) {
            for (int i = 0; i < dim_; ++i) {
                adj_out_(0, (1 + i) * b + p) = seed_grad[static_cast<std::size_t>(p * dim_ + i)];
            }
        }
        if (second_order) {
            for (int i = 0; i < dim_; ++i) {
                adj_out_(0, (1 + dim_ + i) * b + p) = seed_lap[static_cast<std::size_t>(p)];
            }
        }
    }

    const std::size_t hidden = layout_.layers.size() - 1;
    {
        const auto& slot = layout_.layers[hidden];
        weight_grad_.noalias() = adj_out_ * inputs_[hidden].transpose();
        add_into(grad_out, slot.weight_offset, weight_grad_.data(),
                 static_cast<std::size_t>(weight_grad_.size()));
        grad_out[slot.bias_offset] += adj_out_.leftCols(b).sum();
        adj_in_.noalias() = weights_[hidden].transpose() * adj_out_;
    }

    const double s = scale_;
    double slope_adj = 0.0;
    for (std::size_t l = hidden; l-- > 0;) {
        const auto& slot = layout_.layers[l];
        const int n = slot.out * b;
        adj_pre_.resize(slot.out, cols);
        const double* zv = pre_[l].data();
        const double* s1 = sigma1_[l].data();
        const double* s2 = sigma2_[l].data();
        const double* s3 = sigma3_[l].data();
        const double* hb = adj_in_.data();
        double* zb = adj_pre_.data();
        for (int e = 0; e < n; ++e) {
            const double z = zv[e];
            double zbar = hb[e] * s * s1[e];
            double sbar = hb[e] * z * s1[e];
            for (int i = 0; i < dim_ && first_order; ++i) {
                const std::ptrdiff_t o1 = static_cast<std::ptrdiff_t>(1 + i) * n + e;
                const double z1 = zv[o1];
                const double hb1 = hb[o1];
                double zbar1 = hb1 * s * s1[e];
                zbar += hb1 * s * s * s2[e] * z1;
                sbar += hb1 * (s1[e] * z1 + s * z * s2[e] * z1);
                if (second_order) {
                    const std::ptrdiff_t o2 = static_cast<std::ptrdiff_t>(1 + dim_ + i) * n + e;
                    const double z2 = zv[o2];
                    const double hb2 = hb[o2];
                    zbar1 += hb2 * 2.0 * s * s * s2[e] * z1;
                    zb[o2] = hb2 * s * s1[e];
                    zbar += hb2 * (s * s * s * s3[e] * z1 * z1 + s * s * s2[e] * z2);
                    sbar += hb2 * (2.0 * s * s2[e] * z1 * z1 + s * s * z * s3[e] * z1 * z1 +
                                   s1[e] * z2 + s * z * s2[e] * z2);
                }
                zb[o1] = zbar1;
            }
            zb[e] = zbar;
            slope_adj += sbar;
        }

        weight_grad_.noalias() = adj_pre_ * inputs_[l].transpose();
        add_into(grad_out, slot.weight_offset, weight_grad_.data(),
                 static_cast<std::size_t>(weight_grad_.size()));
        const Eigen::VectorXd gb = adj_pre_.leftCols(b).rowwise().sum();
        add_into(grad_out, slot.bias_offset, gb.data(), static_cast<std::size_t>(slot.out));
        if (l > 0) {
            adj_in_.noalias() = weights_[l].transpose() * adj_pre_;
        }
    }
    if (arch_.adaptive()) {
        grad_out[layout_.slope_offset + static_cast<std::size_t>(subdomain_)] +=
            arch_.scale_n * slope_adj;
    }
}

}  // namespace adai
