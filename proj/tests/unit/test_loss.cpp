#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "adai/loss.hpp"
#include "helpers.hpp"

using namespace adai;

namespace {

// Hand-made field used to exercise residual families that the benchmarks leave empty.
class LinearField final : public FieldEvaluator {
public:
    FieldValue evaluate(int m, const Point& x) const override {
        FieldValue v;
        v.u = (m + 1) * x[0];
        v.grad = {static_cast<double>(m + 1), 0.0, 0.0};
        return v;
    }
};

double interface_part(const LossBreakdown& l) { return l.mse_ic_d + l.mse_ic_n; }

}  // namespace

TEST_SUITE("loss") {
    TEST_CASE("the exact solution annihilates the loss") {
        for (const std::string name : {"poisson1d", "letters2d", "spheres3d"}) {
            CAPTURE(name);
            const auto p = make_problem(name);
            const auto b = build_batch(p, SamplingCounts::defaults_for(name), 1);
            const auto l = evaluate_loss(AnalyticalField(p), p, b, {10, 10, 5});
            CHECK(l.mse_eq < 1e-20);
            CHECK(l.mse_bc_d < 1e-20);
            CHECK(l.mse_ic_d < 1e-20);
            CHECK(l.mse_ic_n < 1e-20);
            CHECK(l.total < 1e-18);
        }
    }

    TEST_CASE("zero field on the 1D problem") {
        const auto p = problem_1d();
        Architecture a;
        a.input_dim = 1;
        a.hidden_sizes = {3};
        a.num_subdomains = 5;
        auto params = init_xavier(a, 1);
        std::fill(params.values.begin(), params.values.end(), 0.0);
        const auto b = build_batch(p, SamplingCounts::defaults_for("poisson1d"), 1);
        const auto l = evaluate_loss(NetworkField(a, params), p, b, {10, 10, 5});
        CHECK(l.mse_eq == doctest::Approx(5.0).epsilon(1e-15));
        CHECK(l.mse_bc_d == 0.0);
        CHECK(l.mse_bc_n == 0.0);
        CHECK(l.mse_ic_d == 0.0);
        CHECK(l.mse_ic_n == 0.0);
        CHECK(l.total == doctest::Approx(5.0).epsilon(1e-15));
    }

    TEST_CASE("penalty weights") {
        const auto p = problem_2d_letters();
        const auto b = build_batch(p, SamplingCounts::defaults_for("letters2d"), 1);
        std::mt19937_64 rng(3);
        const auto arch = testing::random_arch(rng, p);
        const auto params = testing::random_params(arch, rng);
        const NetworkField f(arch, params);
        const auto l1 = evaluate_loss(f, p, b, {20, 20, 25});
        const auto l2 = evaluate_loss(f, p, b, {20, 20, 50});
        CHECK(l1.mse_eq == l2.mse_eq);
        CHECK(l1.mse_bc_d == l2.mse_bc_d);
        CHECK(l1.mse_ic_d == l2.mse_ic_d);
        CHECK(l1.mse_ic_n == l2.mse_ic_n);
        CHECK(testing::rel_err(l2.total - l1.total, 25 * interface_part(l1)) < 1e-12);
        CHECK(compose_total(l1, {20, 20, 25}) == l1.total);

        double last = -1.0;
        for (double a : {0.0, 1.0, 2.0, 10.0, 100.0}) {
            const double t = compose_total(l1, {a, 20, 25});
            CHECK(t >= last);
            last = t;
        }
        last = -1.0;
        for (double a : {0.0, 1.0, 2.0, 10.0, 100.0}) {
            const double t = compose_total(l1, {20, 20, a});
            CHECK(t >= last);
            last = t;
        }
    }

    TEST_CASE("point order does not matter") {
        const auto p = problem_3d_spheres();
        auto b = build_batch(p, SamplingCounts::defaults_for("spheres3d"), 1);
        std::mt19937_64 rng(4);
        const auto arch = testing::random_arch(rng, p);
        const auto params = testing::random_params(arch, rng);
        const NetworkField f(arch, params);
        const auto l1 = evaluate_loss(f, p, b, {40, 40, 50});
        for (auto& pts : b.interior) std::shuffle(pts.begin(), pts.end(), rng);
        for (auto& s : b.interfaces) {
            std::vector<std::size_t> idx(s.points.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::shuffle(idx.begin(), idx.end(), rng);
            auto perm = [&](auto& v) {
                auto copy = v;
                for (std::size_t i = 0; i < idx.size(); ++i) v[i] = copy[idx[i]];
            };
            perm(s.points);
            perm(s.normals);
            perm(s.jump_u);
            perm(s.jump_flux);
        }
        const auto l2 = evaluate_loss(f, p, b, {40, 40, 50});
        CHECK(testing::rel_err(l1.mse_eq, l2.mse_eq, 0.0) < 1e-15);
        CHECK(testing::rel_err(l1.mse_ic_d, l2.mse_ic_d, 0.0) < 1e-15);
        CHECK(testing::rel_err(l1.mse_ic_n, l2.mse_ic_n, 0.0) < 1e-15);
    }

    TEST_CASE("swapping the interface sides") {
        const auto p = problem_2d_letters();
        auto b = build_batch(p, SamplingCounts::defaults_for("letters2d"), 1);
        std::mt19937_64 rng(5);
        const auto arch = testing::random_arch(rng, p);
        const auto params = testing::random_params(arch, rng);
        const NetworkField f(arch, params);
        const auto l1 = evaluate_loss(f, p, b, {1, 1, 1});
        for (auto& s : b.interfaces) {
            std::swap(s.first, s.second);
            for (auto& n : s.normals) n = {-n[0], -n[1], -n[2]};
            // [[u]] changes sign; [[k du/dn]] keeps it (both the bracket and n flip)
            for (auto& v : s.jump_u) v = -v;
        }
        const auto l2 = evaluate_loss(f, p, b, {1, 1, 1});
        CHECK(testing::rel_err(l1.mse_ic_d, l2.mse_ic_d, 0.0) < 1e-14);
        CHECK(testing::rel_err(l1.mse_ic_n, l2.mse_ic_n, 0.0) < 1e-14);
    }

    TEST_CASE("Neumann residual on synthetic data") {
        const auto p = problem_1d();
        Batch b;
        b.dim = 1;
        for (int m = 0; m < 5; ++m) b.interior.push_back({{0.1 + 0.2 * m, 0, 0}});
        BoundarySet s;
        s.subdomain = 1;
        s.points = {{0.25, 0, 0}, {0.3, 0, 0}};
        s.normals = {{1, 0, 0}, {-1, 0, 0}};
        s.values = {0.0, 0.0};
        b.neumann.push_back(s);
        const auto l = evaluate_loss(LinearField{}, p, b, {1, 3, 1});
        // kappa_2 = 0.25, flux 0.25 * 2 * n = +-0.5
        CHECK(l.mse_bc_n == doctest::Approx(0.25).epsilon(1e-15));
        CHECK(l.mse_eq == 5.0);
        CHECK(l.total == doctest::Approx(5.75).epsilon(1e-15));
    }

    TEST_CASE("non-finite terms are reported") {
        LossBreakdown l;
        CHECK_NOTHROW(check_finite(l));
        l.mse_ic_n = std::numeric_limits<double>::infinity();
        try {
            check_finite(l);
            FAIL("expected NumericalError");
        } catch (const NumericalError& e) {
            CHECK(e.term() == "mse_ic_n");
        }
    }

    TEST_CASE("negative weights are rejected") {
        CHECK_THROWS(LossWeights{-1, 1, 1}.validate());
        CHECK_NOTHROW(LossWeights{0, 0, 0}.validate());
    }
}
