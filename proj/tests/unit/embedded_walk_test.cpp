#include <doctest.h>

#include <random>

#include "support/instances.hpp"
#include "support/window_oracle.hpp"
#include "wordruin/embedded_walk.hpp"
#include "wordruin/linear_core.hpp"

using namespace wordruin;
using testsupport::binary_iid_chain;
using testsupport::coin_chain;
using testsupport::WindowOracle;
using testsupport::word;

TEST_CASE("hitting probabilities for the coin instance") {
    const auto zc = build_z_chain(coin_chain(), word({1, 1}), word({0, 1}));
    const auto p = hitting_probabilities(zc);  // canonical order 0, 1, 11, 01
    Eigen::VectorXd expected(4);
    expected << 0.0, 0.5, 0.5, 0.5;
    CHECK((p - expected).cwiseAbs().maxCoeff() < 1e-12);

    const WindowOracle oracle(coin_chain(), word({1, 1}), word({0, 1}));
    for (int z = 0; z < zc.size(); ++z) {
        CHECK(p(z) == doctest::Approx(oracle.win_probability(zc.states[z].text))
                          .epsilon(1e-12));
    }
}

TEST_CASE("expected hitting times for the coin instance") {
    const auto zc = build_z_chain(coin_chain(), word({1, 1}), word({0, 1}));
    const auto e = expected_hitting_times(zc);
    CHECK((e - Eigen::VectorXd::Constant(4, 3.0)).cwiseAbs().maxCoeff() < 1e-12);

    const WindowOracle oracle(coin_chain(), word({1, 1}), word({0, 1}));
    for (int z = 0; z < zc.size(); ++z) {
        const double want = 1.0 + oracle.expected_letters(zc.states[z].text);
        CHECK(e(z) == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("event-chain parameters for the coin instance") {
    const auto zc = build_z_chain(coin_chain(), word({1, 1}), word({0, 1}));
    const auto params = x_chain_params(zc, hitting_probabilities(zc));
    CHECK(params.q1 == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(params.t11 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(params.tm1 == doctest::Approx(0.5).epsilon(1e-12));

    const auto moments = gamma_moments(zc, expected_hitting_times(zc));
    CHECK(moments.e_gamma1 == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(moments.e2_plus == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(moments.e2_minus == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(moments.a == doctest::Approx(0.0));
    CHECK(moments.b == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("single-letter words make every step score") {
    const auto chain = binary_iid_chain(0.3);
    const auto zc = build_z_chain(chain, word({1}), word({0}));
    REQUIRE(zc.size() == 2);
    CHECK(zc.idx_u == 1);
    CHECK(zc.idx_d == 0);

    const auto p = hitting_probabilities(zc);
    CHECK(p(0) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(p(1) == doctest::Approx(0.3).epsilon(1e-12));

    const auto e = expected_hitting_times(zc);
    CHECK(e(0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(e(1) == doctest::Approx(2.0).epsilon(1e-12));

    const auto params = x_chain_params(zc, p);
    CHECK(params.q1 == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(params.t11 == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(params.tm1 == doctest::Approx(0.3).epsilon(1e-12));

    const auto moments = gamma_moments(zc, e);
    CHECK(moments.e_gamma1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(moments.e2_plus == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(moments.e2_minus == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(moments.a == doctest::Approx(0.0));
    CHECK(moments.b == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("11 vs 00 on the coin: hand-solved hitting vector") {
    const auto zc = build_z_chain(coin_chain(), word({1, 1}), word({0, 0}));
    const auto p = hitting_probabilities(zc);  // canonical order 0, 1, 11, 00
    Eigen::VectorXd expected(4);
    expected << 1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0;
    CHECK((p - expected).cwiseAbs().maxCoeff() < 1e-12);

    const WindowOracle oracle(coin_chain(), word({1, 1}), word({0, 0}));
    for (int z = 0; z < zc.size(); ++z) {
        CHECK(p(z) == doctest::Approx(oracle.win_probability(zc.states[z].text))
                          .epsilon(1e-12));
    }

    // 0 <-> 1 symmetry forces equal gap moments after wins and losses.
    const auto moments = gamma_moments(zc, expected_hitting_times(zc));
    CHECK(moments.a == doctest::Approx(0.0));
    CHECK(moments.e2_plus == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(moments.e2_minus == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(moments.e_gamma1 == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("10 vs 01 alternates: degenerate event transitions") {
    const auto zc = build_z_chain(coin_chain(), word({1, 0}), word({0, 1}));
    const auto p = hitting_probabilities(zc);
    const auto params = x_chain_params(zc, p);
    CHECK(params.t11 == doctest::Approx(0.0));
    CHECK(params.tm1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(params.q1 == doctest::Approx(0.5).epsilon(1e-12));

    const WindowOracle oracle(coin_chain(), word({1, 0}), word({0, 1}));
    CHECK(params.q1 ==
          doctest::Approx(oracle.first_event_win_probability()).epsilon(1e-12));
}

TEST_CASE("aperiodicity decisions") {
    CHECK(is_aperiodic(build_z_chain(coin_chain(), word({1, 1}), word({0, 1}))));
    CHECK_FALSE(is_aperiodic(build_z_chain(coin_chain(), word({1, 0}), word({0, 1}))));
    CHECK(is_aperiodic(build_z_chain(binary_iid_chain(0.3), word({1}), word({0}))));
}

TEST_CASE("alternating-pair classifier") {
    CHECK(classify_binary_alternating(2, word({1, 0}), word({0, 1})));
    CHECK(classify_binary_alternating(2, word({1, 1, 0}), word({0, 1, 1})));
    CHECK(classify_binary_alternating(2, word({0, 1}), word({1, 0})));
    CHECK_FALSE(classify_binary_alternating(2, word({1, 1}), word({0, 0})));
    CHECK_FALSE(classify_binary_alternating(2, word({1, 1, 0, 0}), word({0, 0, 1, 1})));
    CHECK_FALSE(classify_binary_alternating(2, word({1}), word({0})));

    try {
        classify_binary_alternating(3, word({1, 0}), word({0, 1}));
        FAIL("expected NOT_BINARY");
    } catch (const Error& e) {
        CHECK(e.code() == "NOT_BINARY");
    }
}

TEST_CASE("classifier matches structural periodicity, short binary words") {
    std::mt19937_64 rng(603);
    const auto chain = testsupport::random_positive_chain(rng, 2);
    const auto words = testsupport::all_words(2, 4);
    int pairs = 0;
    for (const auto& u : words) {
        for (const auto& d : words) {
            const GameSpec spec{u, d, 2, 2};
            if (!validate_game(chain, spec).ok()) continue;
            ++pairs;
            const auto zc = build_z_chain(chain, u, d);
            CHECK(is_aperiodic(zc) == !classify_binary_alternating(2, u, d));
        }
    }
    CHECK(pairs > 500);
}

TEST_CASE("probability and time vectors stay in range, randomized") {
    std::mt19937_64 rng(8080);
    for (int iter = 0; iter < 300; ++iter) {
        const auto chain = testsupport::random_positive_chain(rng, 2 + iter % 2);
        const auto spec = testsupport::random_game(rng, chain, 4, 2);
        const auto zc = build_z_chain(chain, spec.word_u, spec.word_d);
        const auto p = hitting_probabilities(zc);
        const auto e = expected_hitting_times(zc);
        CHECK(p.minCoeff() >= -1e-9);
        CHECK(p.maxCoeff() <= 1.0 + 1e-9);
        CHECK(e.minCoeff() >= 2.0 - 1e-9);

        const auto moments = gamma_moments(zc, e);
        CHECK(std::abs((moments.b - std::abs(moments.a)) -
                       std::min(moments.e2_plus, moments.e2_minus)) <= 1e-12);
        CHECK(moments.b - std::abs(moments.a) >= 1.0 - 1e-9);
    }
}

TEST_CASE("single-letter hitting times are 2 on any strictly positive chain") {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 20; ++iter) {
        const auto chain = testsupport::random_positive_chain(rng, 2);
        const auto e = expected_hitting_times(build_z_chain(chain, word({1}), word({0})));
        CHECK((e - Eigen::VectorXd::Constant(2, 2.0)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("win and loss hitting probabilities are complementary") {
    // Solving the same system with the loss column as right-hand side must
    // give exactly the complements: the next event is one word or the other.
    std::mt19937_64 rng(1212);
    for (int iter = 0; iter < 100; ++iter) {
        const auto chain = testsupport::random_positive_chain(rng, 2 + iter % 2);
        const auto spec = testsupport::random_game(rng, chain, 4, 2);
        const auto zc = build_z_chain(chain, spec.word_u, spec.word_d);
        const auto p = hitting_probabilities(zc);

        wordruin::QSystem sys;
        sys.q = zc.trans_z;
        sys.q.col(zc.idx_u).setZero();
        sys.q.col(zc.idx_d).setZero();
        sys.rhs = zc.trans_z.col(zc.idx_d);
        const auto p_loss = wordruin::solve_fundamental(sys);

        CHECK((p + p_loss - Eigen::VectorXd::Ones(zc.size())).cwiseAbs().maxCoeff() <
              1e-9);
        const auto params = x_chain_params(zc, p);
        CHECK(std::abs(p_loss(zc.idx_u) - (1.0 - params.t11)) < 1e-9);
        CHECK(std::abs(p_loss(zc.idx_d) - (1.0 - params.tm1)) < 1e-9);
    }
}

TEST_CASE("event probabilities match the raw-window oracle, randomized") {
    std::mt19937_64 rng(940);
    for (int iter = 0; iter < 60; ++iter) {
        const auto chain = testsupport::random_positive_chain(rng, 2 + iter % 2);
        const auto spec = testsupport::random_game(rng, chain, 3, 2);
        const auto zc = build_z_chain(chain, spec.word_u, spec.word_d);
        const auto p = hitting_probabilities(zc);
        const auto e = expected_hitting_times(zc);
        const WindowOracle oracle(chain, spec.word_u, spec.word_d);
        for (int z = 0; z < zc.size(); ++z) {
            CHECK(p(z) == doctest::Approx(oracle.win_probability(zc.states[z].text))
                              .epsilon(1e-9));
            CHECK(e(z) == doctest::Approx(1.0 + oracle.expected_letters(zc.states[z].text))
                              .epsilon(1e-9));
        }
        const auto params = x_chain_params(zc, p);
        const auto moments = gamma_moments(zc, e);
        CHECK(params.q1 == doctest::Approx(oracle.first_event_win_probability())
                               .epsilon(1e-9));
        CHECK(moments.e_gamma1 == doctest::Approx(oracle.expected_first_event_time())
                                      .epsilon(1e-9));
    }
}
