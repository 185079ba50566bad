#include <doctest.h>

#include "adai/training.hpp"
#include "helpers.hpp"

using namespace adai;

namespace {

TrainConfig small_1d(int iterations) {
    auto c = TrainConfig::defaults_for("poisson1d");
    c.iterations = iterations;
    c.log_interval = 10;
    c.threads = 1;
    return c;
}

}  // namespace

TEST_SUITE("training") {
    TEST_CASE("first Adam step") {
        MLPParams p{{1.0, -2.0, 3.0}};
        auto s = AdamState::create(3, 5e-3);
        adam_step(s, p, GradBuffer{{1.0, 0.0, -4.0}});
        CHECK(p.values[0] == doctest::Approx(1.0 - 5e-3 / (1 + 1e-8)).epsilon(1e-15));
        CHECK(p.values[1] == -2.0);
        CHECK(p.values[2] == doctest::Approx(3.0 + 5e-3 * 4 / (4 + 1e-8)).epsilon(1e-15));
        CHECK(s.step == 1);
    }

    TEST_CASE("zero gradient leaves parameters alone") {
        MLPParams p{{0.5, 0.25}};
        auto s = AdamState::create(2, 5e-3);
        adam_step(s, p, GradBuffer{{1.0, 1.0}});
        const auto after_one = p.values;
        const auto m = s.m;
        adam_step(s, p, GradBuffer{{0.0, 0.0}});
        // the first moment still carries the old gradient, so check the moments instead
        CHECK(s.m[0] == doctest::Approx(0.9 * m[0]).epsilon(1e-15));
        MLPParams q{{0.5, 0.25}};
        auto t = AdamState::create(2, 5e-3);
        for (int i = 0; i < 5; ++i) adam_step(t, q, GradBuffer{{0.0, 0.0}});
        CHECK(q.values == std::vector<double>{0.5, 0.25});
        CHECK(after_one != p.values);
    }

    TEST_CASE("Adam only touches the trainable prefix") {
        MLPParams p{{1.0, 1.0, 7.0}};
        auto s = AdamState::create(2, 0.1);
        adam_step(s, p, GradBuffer{{1.0, 1.0, 1.0}});
        CHECK(p.values[2] == 7.0);
        CHECK_THROWS_AS(adam_step(s, p, GradBuffer{{1.0}}), std::invalid_argument);
        CHECK_THROWS_AS(adam_step(s, p, GradBuffer{{1.0, NAN, 0.0}}), NumericalError);
    }

    TEST_CASE("cost ratio") {
        CHECK(cost_ratio(194, 100) == doctest::Approx(1.94));
        CHECK(cost_ratio(65, 100) == doctest::Approx(0.65));
        CHECK(cost_ratio(3.5, 3.5) == 1.0);
        CHECK_THROWS_AS(cost_ratio(0, 1), std::invalid_argument);
        CHECK_THROWS_AS(cost_ratio(1, -1), std::invalid_argument);
    }

    TEST_CASE("RMSE oracles") {
        for (const std::string name : {"poisson1d", "letters2d", "spheres3d"}) {
            const auto p = make_problem(name);
            GridSpec g = GridSpec::defaults_for(p);
            if (p.dim == 3) g.counts = {21, 21, 21};
            CHECK(evaluate_rmse(AnalyticalField(p), p, g) < 1e-15);
        }
        const auto p = problem_1d();
        Architecture a;
        a.input_dim = 1;
        a.hidden_sizes = {4};
        a.num_subdomains = 5;
        auto params = init_xavier(a, 1);
        std::fill(params.values.begin(), params.values.end(), 0.0);
        double sq = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double u = testing::flux_oracle(p.kappa, i / 1000.0);
            sq += u * u;
        }
        CHECK(testing::rel_err(evaluate_rmse(params, a, p, {{1001}}), std::sqrt(sq / 1001), 0.0) < 1e-12);
        CHECK_THROWS_AS(evaluate_rmse(params, a, p, {{1001, 3}}), std::invalid_argument);
    }

    TEST_CASE("zero iterations") {
        const auto c = small_1d(0);
        const auto r = train(c);
        REQUIRE(r.loss_history.size() == 1);
        CHECK(r.loss_history[0].iteration == 0);
        CHECK(r.iterations == 0);
        const auto p = problem_1d();
        const auto arch = c.architecture(p);
        const auto init = init_xavier(arch, c.seed);
        CHECK(r.final_rmse == evaluate_rmse(init, arch, p, {{1001}}));
        const auto batch = build_batch(p, c.sampling, c.seed);
        const auto l = evaluate_loss(NetworkField(arch, init), p, batch, c.loss_weights());
        CHECK(testing::rel_err(r.loss_history[0].loss.total, l.total, 0.0) < 1e-12);
    }

    TEST_CASE("zero learning rate keeps the loss") {
        auto c = small_1d(30);
        c.lr = 0.0;
        const auto r = train(c);
        REQUIRE(r.loss_history.size() == 4);
        for (const auto& e : r.loss_history) CHECK(e.loss.total == r.loss_history[0].loss.total);
    }

    TEST_CASE("loss drops tenfold in 200 iterations") {
        auto c = small_1d(200);
        const auto r = train(c);
        CHECK(r.loss_history.back().iteration == 200);
        CHECK(r.loss_history.back().loss.total * 10 <= r.loss_history.front().loss.total);
        REQUIRE(r.a_history);
        CHECK(r.a_history->size() == r.loss_history.size());
        for (const auto& s : *r.a_history) {
            CHECK(s.slopes.size() == 5);
            for (double a : s.slopes) CHECK(std::isfinite(a));
        }
        CHECK(r.a_history->front().slopes == std::vector<double>(5, 0.5));
    }

    TEST_CASE("ipinn mode has no slope history") {
        auto c = small_1d(20);
        c.mode = "ipinn";
        const auto r = train(c);
        CHECK_FALSE(r.a_history);
        CHECK(r.architecture.scale_n == 1.0);
        const ParamLayout l(r.architecture);
        for (double a : r.final_params.slopes(l)) CHECK(a == 1.0);
    }

    TEST_CASE("training is deterministic") {
        for (const std::string name : {"poisson1d", "letters2d"}) {
            auto c = TrainConfig::defaults_for(name);
            c.iterations = 20;
            c.log_interval = 5;
            c.hidden_layers = 1;
            c.neurons = 6;
            c.eval_grid = name == "poisson1d" ? std::vector<int>{101} : std::vector<int>{18, 11};
            c.threads = 1;
            const auto a = train(c);
            c.threads = 3;
            const auto b = train(c);
            REQUIRE(a.loss_history.size() == b.loss_history.size());
            for (std::size_t i = 0; i < a.loss_history.size(); ++i) {
                CHECK(a.loss_history[i].loss.total == b.loss_history[i].loss.total);
                CHECK(a.loss_history[i].loss.mse_ic_n == b.loss_history[i].loss.mse_ic_n);
            }
            CHECK(a.final_rmse == b.final_rmse);
            CHECK(a.final_params.values == b.final_params.values);
        }
    }

    TEST_CASE("learning-rate decay changes the trajectory") {
        auto c = small_1d(40);
        const auto a = train(c);
        c.lr_decay_rate = 0.5;
        c.lr_decay_steps = 10;
        const auto b = train(c);
        CHECK(a.loss_history[0].loss.total == b.loss_history[0].loss.total);
        CHECK(a.loss_history.back().loss.total != b.loss_history.back().loss.total);
    }

    TEST_CASE("non-finite loss stops early") {
        auto c = small_1d(50);
        c.lr = 1e308;
        const auto r = train(c);
        REQUIRE(r.early_stop);
        CHECK(r.iterations < 50);
        c.stop_on_nonfinite = false;
        CHECK_THROWS_AS(train(c), NumericalError);
    }
}
