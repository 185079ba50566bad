#include <doctest.h>

#include <random>

#include "adai/jet.hpp"
#include "adai/jet_tape.hpp"
#include "adai/loss.hpp"
#include "helpers.hpp"

using namespace adai;

namespace {

// Forward-mode dual number; nesting it gives exact second derivatives.
template <class T>
struct Dual {
    T v;
    T d;
};

template <class T>
Dual<T> operator+(Dual<T> a, Dual<T> b) { return {a.v + b.v, a.d + b.d}; }
template <class T>
Dual<T> operator*(Dual<T> a, Dual<T> b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
template <class T>
Dual<T> operator*(double c, Dual<T> a) { return {c * a.v, c * a.d}; }
template <class T>
Dual<T> operator+(double c, Dual<T> a) { return {c + a.v, a.d}; }

double dtanh(double x) { return std::tanh(x); }
template <class T>
Dual<T> dtanh(Dual<T> x) {
    const T t = dtanh(x.v);
    return {t, (1.0 + (-1.0) * (t * t)) * x.d};
}

template <class T>
T toy_net(const std::vector<double>& p, const ParamLayout& layout, double s, T x0, T x1) {
    const auto& h = layout.layers[0];
    const auto& o = layout.layers[1];
    T out = p[o.bias_offset] + T{};
    for (int j = 0; j < h.out; ++j) {
        const auto r = h.weight_offset + static_cast<std::size_t>(j * 2);
        T z = p[h.bias_offset + static_cast<std::size_t>(j)] + (p[r] * x0 + p[r + 1] * x1);
        out = out + p[o.weight_offset + static_cast<std::size_t>(j)] * dtanh(s * z);
    }
    return out;
}

}  // namespace

TEST_SUITE("autodiff") {
    TEST_CASE("jet_affine examples") {
        const std::vector<double> w1{2.0}, b1{1.0};
        const std::vector<Jet2> in1{{3.0, 1.0, 0.0}};
        auto o1 = jet_affine(w1, b1, in1);
        CHECK(o1[0].val == 7.0);
        CHECK(o1[0].d1 == 2.0);
        CHECK(o1[0].d2 == 0.0);

        const std::vector<double> w2{1.0, 1.0}, b2{0.0};
        const std::vector<Jet2> in2{{1.0, 1.0, 0.0}, {2.0, 0.0, 0.0}};
        auto o2 = jet_affine(w2, b2, in2);
        CHECK(o2[0].val == 3.0);
        CHECK(o2[0].d1 == 1.0);
        CHECK(o2[0].d2 == 0.0);

        const std::vector<double> w3{0.0}, b3{5.0};
        const std::vector<Jet2> in3{{-4.0, 3.0, 2.0}};
        auto o3 = jet_affine(w3, b3, in3);
        CHECK(o3[0].val == 5.0);
        CHECK(o3[0].d1 == 0.0);
        CHECK(o3[0].d2 == 0.0);

        CHECK_THROWS_AS(jet_affine(w2, b2, in1), std::invalid_argument);
    }

    TEST_CASE("jet seeds and constants") {
        const std::vector<double> x{0.3, -0.2, 0.9};
        auto s = seed_jets(x, 1);
        REQUIRE(s.size() == 3);
        CHECK(s[1].val == -0.2);
        CHECK(s[1].d1 == 1.0);
        CHECK(s[0].d1 == 0.0);
        CHECK(s[2].d2 == 0.0);
        constexpr auto c = Jet2::constant(4.0);
        CHECK(c.d1 == 0.0);
        CHECK(c.d2 == 0.0);
    }

    TEST_CASE("jet_activation examples") {
        auto t = jet_activation(ActivationKind::Tanh, 1.0, {0.0, 1.0, 0.0});
        CHECK(t.val == 0.0);
        CHECK(t.d1 == 1.0);
        CHECK(t.d2 == 0.0);
        auto s = jet_activation(ActivationKind::Sigmoid, 1.0, {0.0, 1.0, 0.0});
        CHECK(s.val == 0.5);
        CHECK(s.d1 == 0.25);
        CHECK(s.d2 == 0.0);

        const auto f = [](double t) { return std::tanh(2.0 * (0.3 + t)); };
        auto j = jet_activation(ActivationKind::Tanh, 2.0, {0.3, 1.0, 0.0});
        const double h = 1e-5;
        const double fd1 = (f(h) - f(-h)) / (2 * h);
        const double fd2 = (f(h) - 2 * f(0) + f(-h)) / (h * h);
        CHECK(testing::rel_err(j.val, f(0.0), 0.0) < 1e-8);
        CHECK(testing::rel_err(j.d1, fd1, 0.0) < 1e-8);
        // the second difference carries ~eps/h^2 rounding, about 1e-6 here
        CHECK(testing::rel_err(j.d2, fd2, 0.0) < 1e-5);
        CHECK(testing::rel_err(j.d2, testing::fd2(f, 0.0, 1e-3), 0.0) < 1e-8);
    }

    TEST_CASE("random jet compositions match 4th-order differences") {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int trial = 0; trial < 100; ++trial) {
            const auto kind = kAllActivations[static_cast<std::size_t>(trial % 6)];
            const int width = 3;
            std::vector<double> w1(width * 2), b1(width), w2(width), b2(1);
            for (auto* v : {&w1, &b1, &w2, &b2}) {
                for (auto& e : *v) e = u(rng);
            }
            const double scale = 1.0 + u(rng);
            const std::vector<double> x{u(rng), u(rng)};
            const std::vector<double> e{u(rng), u(rng)};
            auto run = [&](std::vector<Jet2> in) {
                auto h = jet_affine(w1, b1, in);
                for (auto& j : h) j = jet_activation(kind, scale, j);
                return jet_affine(w2, b2, h)[0];
            };
            const auto F = [&](double t) {
                return run({Jet2::constant(x[0] + t * e[0]), Jet2::constant(x[1] + t * e[1])}).val;
            };
            const Jet2 j = run({{x[0], e[0], 0.0}, {x[1], e[1], 0.0}});
            CHECK(testing::rel_err(j.d1, testing::fd1(F, 0.0, 1e-3)) < 1e-7);
            CHECK(testing::rel_err(j.d2, testing::fd2(F, 0.0, 5e-3)) < 1e-7);

            // linear in the seeds
            const Jet2 j2 = run({{x[0], 2 * e[0], 0.0}, {x[1], 2 * e[1], 0.0}});
            CHECK(j2.val == j.val);
            CHECK(testing::rel_err(j2.d1, 2 * j.d1, 1e-12) < 1e-14);
            CHECK(testing::rel_err(j2.d2, 4 * j.d2, 1e-12) < 1e-14);
        }
    }

    TEST_CASE("Laplacian equals the nested-dual Hessian trace") {
        Architecture arch;
        arch.input_dim = 2;
        arch.hidden_sizes = {4};
        arch.num_subdomains = 2;
        arch.scale_n = 3.0;
        arch.mode = AdaptiveMode{ActivationKind::Tanh};
        const ParamLayout layout(arch);
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 20; ++trial) {
            const auto params = testing::random_params(arch, rng);
            const double s = effective_scale(arch, layout, params, 1);
            const Point x{0.3 - 0.02 * trial, 0.1 + 0.03 * trial, 0.0};
            using DD = Dual<Dual<double>>;
            double trace = 0.0;
            for (int i = 0; i < 2; ++i) {
                const DD x0{{x[0], i == 0 ? 1.0 : 0.0}, {i == 0 ? 1.0 : 0.0, 0.0}};
                const DD x1{{x[1], i == 1 ? 1.0 : 0.0}, {i == 1 ? 1.0 : 0.0, 0.0}};
                trace += toy_net(params.values, layout, s, x0, x1).d.d;
            }
            const auto fv = forward_with_derivs(params, arch, 1, x);
            CHECK(testing::rel_err(fv.laplacian, trace) < 1e-10);
            CHECK(testing::rel_err(fv.u, toy_net(params.values, layout, s, x[0], x[1]), 0.0) <
                  1e-13);
        }
    }

    TEST_CASE("jet tape matches the per-point jets") {
        const auto problem = problem_3d_spheres();
        std::mt19937_64 rng(3);
        const auto arch = testing::random_arch(rng, problem);
        const ParamLayout layout(arch);
        const auto params = testing::random_params(arch, rng);
        std::vector<Point> pts;
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int i = 0; i < 9; ++i) pts.push_back({u(rng), u(rng), u(rng)});
        JetTape tape(arch, layout);
        tape.forward(params, 4, pts, JetOrder::Laplacian);
        for (int p = 0; p < 9; ++p) {
            const auto fv = forward_with_derivs(params, arch, 4, pts[static_cast<std::size_t>(p)]);
            CHECK(testing::rel_err(tape.u(p), fv.u) < 1e-14);
            for (int d = 0; d < 3; ++d) {
                CHECK(testing::rel_err(tape.grad(p, d), fv.grad[static_cast<std::size_t>(d)]) < 1e-13);
            }
            CHECK(testing::rel_err(tape.laplacian(p), fv.laplacian) < 1e-13);
        }
    }

    TEST_CASE("parameter gradient of a 1x4 network over 8 points") {
        const auto problem = problem_1d();
        Architecture arch;
        arch.input_dim = 1;
        arch.hidden_sizes = {4};
        arch.num_subdomains = 5;
        arch.mode = AdaptiveMode{ActivationKind::Tanh};
        const auto batch = build_batch(problem, {8, 1, 1, 1}, 1);
        const LossWeights w{10.0, 10.0, 5.0};
        for (double n : {1.0, 10.0}) {
            CAPTURE(n);
            arch.scale_n = n;
            const ParamLayout layout(arch);
            std::mt19937_64 rng(2);
            auto params = testing::random_params(arch, rng);
            const auto lg = loss_and_grad(params, arch, batch, problem, w);
            REQUIRE(lg.grad.values.size() == layout.size);
            auto total = [&](std::size_t k, double shift) {
                auto p = params;
                p.values[k] += shift;
                return loss_and_grad(p, arch, batch, problem, w).loss.total;
            };
            for (std::size_t k = 0; k < layout.size; ++k) {
                CAPTURE(k);
                const double h = 1e-4 * std::max(1.0, std::abs(params.values[k]));
                const double fd = (total(k, h) - total(k, -h)) / (2 * h);
                // n = 10 multiplies third derivatives in a_m by 1e3, which puts the plain
                // central difference's h^2 error near 1e-6; one Richardson step removes it
                const double fd_half = (total(k, h / 2) - total(k, -h / 2)) / h;
                const double oracle = n == 1.0 ? fd : (4 * fd_half - fd) / 3;
                CHECK(testing::rel_err(lg.grad.values[k], oracle, 1e-6 * lg.loss.total) < 1e-6);
            }
        }
    }

    TEST_CASE("zero network on the 1D problem") {
        const auto problem = problem_1d();
        Architecture arch;
        arch.input_dim = 1;
        arch.hidden_sizes = {6, 6};
        arch.num_subdomains = 5;
        arch.mode = AdaptiveMode{ActivationKind::Swish};
        auto params = init_xavier(arch, 1);
        std::fill(params.values.begin(), params.values.end(), 0.0);
        const auto batch = build_batch(problem, SamplingCounts::defaults_for("poisson1d"), 1);
        const auto lg = loss_and_grad(params, arch, batch, problem, {10.0, 10.0, 5.0});
        CHECK(lg.loss.mse_eq == doctest::Approx(5.0).epsilon(1e-15));
        CHECK(lg.loss.mse_bc_d == 0.0);
        CHECK(lg.loss.mse_ic_d == 0.0);
        CHECK(lg.loss.mse_ic_n == 0.0);
        CHECK(lg.loss.total == doctest::Approx(5.0).epsilon(1e-15));
    }

    TEST_CASE("frozen slopes get zero gradient") {
        const auto problem = problem_1d();
        Architecture arch;
        arch.input_dim = 1;
        arch.hidden_sizes = {5};
        arch.num_subdomains = 5;
        arch.scale_n = 1.0;
        arch.mode = FixedMode{{ActivationKind::Tanh, ActivationKind::Swish, ActivationKind::Tanh,
                               ActivationKind::Swish, ActivationKind::Tanh}};
        const ParamLayout layout(arch);
        const auto params = init_xavier(arch, 4);
        const auto batch = build_batch(problem, SamplingCounts::defaults_for("poisson1d"), 1);
        const auto lg = loss_and_grad(params, arch, batch, problem, {10.0, 10.0, 5.0});
        for (std::size_t k = layout.slope_offset; k < layout.size; ++k) {
            CHECK(lg.grad.values[k] == 0.0);
        }
    }

    TEST_CASE("engine loss equals the field-based loss") {
        for (const std::string name : {"poisson1d", "letters2d", "spheres3d"}) {
            CAPTURE(name);
            const auto problem = make_problem(name, LetterLayout::default_layout());
            std::mt19937_64 rng(8);
            const auto arch = testing::random_arch(rng, problem);
            const auto params = testing::random_params(arch, rng);
            const auto batch = build_batch(problem, testing::tiny_counts(problem), 2);
            const LossWeights w{3.0, 2.0, 7.0};
            const auto a = loss_and_grad(params, arch, batch, problem, w).loss;
            const auto b = evaluate_loss(NetworkField(arch, params), problem, batch, w);
            CHECK(testing::rel_err(a.mse_eq, b.mse_eq) < 1e-12);
            CHECK(testing::rel_err(a.mse_bc_d, b.mse_bc_d) < 1e-12);
            CHECK(testing::rel_err(a.mse_ic_d, b.mse_ic_d) < 1e-12);
            CHECK(testing::rel_err(a.mse_ic_n, b.mse_ic_n) < 1e-12);
            CHECK(testing::rel_err(a.total, b.total) < 1e-12);
        }
    }

    TEST_CASE("bit-identical for any worker count") {
        const auto problem = problem_2d_letters();
        const auto cfg_counts = SamplingCounts::defaults_for("letters2d");
        const auto batch = build_batch(problem, cfg_counts, 3);
        Architecture arch;
        arch.input_dim = 2;
        arch.hidden_sizes = {8, 8};
        arch.num_subdomains = 5;
        arch.mode = AdaptiveMode{ActivationKind::Tanh};
        const auto params = init_xavier(arch, 9);
        const LossWeights w{20.0, 20.0, 25.0};
        const auto a = loss_and_grad(params, arch, batch, problem, w, 1);
        const auto b = loss_and_grad(params, arch, batch, problem, w, 4);
        const auto c = loss_and_grad(params, arch, batch, problem, w, 3);
        CHECK(a.loss.total == b.loss.total);
        CHECK(a.loss.total == c.loss.total);
        CHECK(a.grad.values == b.grad.values);
        CHECK(a.grad.values == c.grad.values);
    }

    TEST_CASE("non-finite loss names the term") {
        const auto problem = problem_1d();
        Architecture arch;
        arch.input_dim = 1;
        arch.hidden_sizes = {3};
        arch.num_subdomains = 5;
        arch.mode = AdaptiveMode{ActivationKind::Tanh};
        auto params = init_xavier(arch, 1);
        params.values[0] = std::numeric_limits<double>::quiet_NaN();
        const auto batch = build_batch(problem, SamplingCounts::defaults_for("poisson1d"), 1);
        try {
            loss_and_grad(params, arch, batch, problem, {1.0, 1.0, 1.0});
            FAIL("expected NumericalError");
        } catch (const NumericalError& e) {
            CHECK(e.term() == "mse_eq");
        }
    }
}
