#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cdrw/graph.hpp"
#include "cdrw/random_walk.hpp"
#include "cdrw/rng.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace cdrw;

TEST_CASE("walk_step on a path") {
    auto path = testutil::path_graph(3);
    auto p0 = ProbVector::delta(path, 0);
    auto p1 = walk_step(path, p0);
    CHECK(p1.step == 1);
    CHECK(p1.values[1] == doctest::Approx(1.0));
    CHECK(p1.values[0] == doctest::Approx(0.0));
    auto p2 = walk_step(path, p1);
    CHECK(p2.values[0] == doctest::Approx(0.5));
    CHECK(p2.values[2] == doctest::Approx(0.5));
}

TEST_CASE("walk_step rejects mass on isolated vertices") {
    auto g = Graph::from_edges(3, {{0, 1}});  // vertex 2 isolated
    auto p = ProbVector::delta(g, 2);
    CHECK_THROWS_AS(walk_step(g, p), std::domain_error);
}

TEST_CASE("walk_step matches dense matrix-power oracle on K4") {
    auto k4 = testutil::complete_graph(4);
    oracle::DenseWalk dense(k4);
    auto p = ProbVector::delta(k4, 0);
    for (int t = 0; t < 3; ++t) p = walk_step(k4, p);
    auto expected = dense.distribution(0, 3);
    for (Vertex u = 0; u < 4; ++u) CHECK(std::abs(p.values[u] - expected(u)) < 1e-12);
}

TEST_CASE("mass conservation and support containment") {
    auto g = generate_gnp(150, 0.05, 8);
    Vertex s = 0;
    while (g.degree(s) == 0) ++s;
    auto p = ProbVector::delta(g, s);
    for (std::size_t l = 1; l <= 10; ++l) {
        p = walk_step(g, p);
        CHECK(std::abs(p.total_mass() - 1.0) < 1e-9);
        auto ball = bfs_ball(g, s, l);
        std::vector<char> inside(g.num_vertices(), 0);
        for (Vertex v : ball) inside[v] = 1;
        for (Vertex u = 0; u < g.num_vertices(); ++u)
            if (p.values[u] != 0.0) CHECK(inside[u] == 1);
    }
}

TEST_CASE("restrict_to examples") {
    auto k4 = testutil::complete_graph(4);
    ProbVector p;
    p.values = {0.5, 0.3, 0.2, 0.0};
    std::vector<Vertex> all{0, 1, 2, 3};
    CHECK(restrict_to(p, all) == p.values);
    std::vector<Vertex> none;
    auto zero = restrict_to(p, none);
    CHECK(std::all_of(zero.begin(), zero.end(), [](double x) { return x == 0.0; }));
    std::vector<Vertex> pick{0, 2};
    auto r = restrict_to(p, pick);
    CHECK(r[0] == doctest::Approx(0.5));
    CHECK(r[1] == doctest::Approx(0.0));
    CHECK(r[2] == doctest::Approx(0.2));
    double sum = 0.0;
    for (double x : r) sum += x;
    CHECK(sum == doctest::Approx(0.7));
}

TEST_CASE("l1_to_stationary examples") {
    auto k2 = testutil::complete_graph(2);
    auto p = ProbVector::delta(k2, 0);
    CHECK(l1_to_stationary(k2, p) == doctest::Approx(1.0));

    // p equal to the stationary distribution gives 0.
    auto k5 = testutil::complete_graph(5);
    ProbVector pi;
    pi.values.assign(5, 0.0);
    for (Vertex u = 0; u < 5; ++u)
        pi.values[u] = static_cast<double>(k5.degree(u)) / static_cast<double>(k5.volume());
    CHECK(l1_to_stationary(k5, pi) == doctest::Approx(0.0));
}

TEST_CASE("l1_to_stationary matches dense oracle distance") {
    auto g = generate_gnp(64, 0.3, 5);
    REQUIRE(connected_components(g).size() == 1);
    oracle::DenseWalk dense(g);
    auto p = ProbVector::delta(g, 0);
    for (int t = 0; t < 10; ++t) p = walk_step(g, p);
    auto q = dense.distribution(0, 10);
    double expected = 0.0;
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        expected += std::abs(q(u) - static_cast<double>(g.degree(u)) / static_cast<double>(g.volume()));
    CHECK(std::abs(l1_to_stationary(g, p) - expected) < 1e-10);
}

TEST_CASE("reversibility: pi(s) p_l(s,u) = pi(u) p_l(u,s)") {
    auto g = generate_gnp(40, 0.2, 12);
    REQUIRE(connected_components(g).size() == 1);
    oracle::DenseWalk dense(g);
    const std::size_t l = 5;
    auto from0 = dense.distribution(0, l);
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        auto from_u = dense.distribution(u, l);
        const double lhs = static_cast<double>(g.degree(0)) * from0(u);
        const double rhs = static_cast<double>(g.degree(u)) * from_u(0);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("mixing_time on complete graphs is at most 2") {
    for (std::size_t n : {8, 32, 128}) {
        auto g = testutil::complete_graph(n);
        auto t = mixing_time(g, 0, 0.5, 10);
        REQUIRE(t.has_value());
        CHECK(*t <= 2);
    }
}

TEST_CASE("bipartite cycle never mixes") {
    auto c4 = testutil::cycle_graph(4);
    CHECK(!mixing_time(c4, 0, 0.1, 100).has_value());
}

TEST_CASE("lazy walk breaks bipartite oscillation but defaults off") {
    auto c4 = testutil::cycle_graph(4);
    auto lazy = mixing_time(c4, 0, 0.1, 100, 0.5);
    REQUIRE(lazy.has_value());
    CHECK(*lazy >= 1);
    // Laziness keeps the stated fraction of mass in place.
    auto p = ProbVector::delta(c4, 0);
    auto p1 = walk_step(c4, p, 0.5);
    CHECK(p1.values[0] == doctest::Approx(0.5));
    CHECK(p1.values[1] == doctest::Approx(0.25));
    CHECK(std::abs(p1.total_mass() - 1.0) < 1e-12);
    CHECK_THROWS_AS(walk_step(c4, p, 1.0), std::invalid_argument);
}

TEST_CASE("gnp mixing time is O(log n)") {
    const std::size_t n = 1024;
    const double p = 2.0 * std::log2(static_cast<double>(n)) / static_cast<double>(n);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = generate_gnp(n, p, seed);
        if (connected_components(g).size() != 1) continue;
        auto t = mixing_time(g, 0, 1.0 / (2.0 * std::numbers::e), 200);
        REQUIRE(t.has_value());
        CHECK(*t <= 4 * ceil_log2(n));
    }
}

TEST_CASE("lambda2 estimate: complete graph spectrum is 1/(n-1)") {
    auto k4 = testutil::complete_graph(4);
    CHECK(std::abs(estimate_lambda2(k4, 200, 1) - 1.0 / 3.0) < 1e-6);
    auto spectrum = oracle::transition_spectrum(k4);
    CHECK(spectrum[1] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("lambda2 estimate: bipartite cycle has |lambda2| = 1") {
    auto c4 = testutil::cycle_graph(4);
    CHECK(std::abs(estimate_lambda2(c4, 300, 2) - 1.0) < 1e-6);
    auto spectrum = oracle::transition_spectrum(c4);
    CHECK(spectrum[1] == doctest::Approx(1.0));
}

TEST_CASE("lambda2 estimate agrees with dense eigensolver on random graphs") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto g = generate_gnp(48, 0.3, 100 + seed);
        if (connected_components(g).size() != 1) continue;
        const double est = estimate_lambda2(g, 600, seed);
        const double truth = oracle::transition_spectrum(g)[1];
        CHECK(std::abs(est - truth) < 1e-3);
    }
}

TEST_CASE("lambda2 bound on near-regular random graphs") {
    const std::size_t n = 2048;
    const double p = 2.0 * std::log2(static_cast<double>(n)) / static_cast<double>(n);
    const double dbar = static_cast<double>(n - 1) * p;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = generate_gnp(n, p, 3000 + seed);
        if (connected_components(g).size() != 1) continue;
        CHECK(estimate_lambda2(g, 150, seed) <= 2.0 / std::sqrt(dbar));
    }
}
