#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include <doctest.h>

#include "cluscomp/builders.hpp"
#include "cluscomp/random_walk.hpp"

using namespace cluscomp;

namespace {

double edge_weight(const SimilarityGraph& g, std::uint32_t a, std::uint32_t b) {
    for (const WeightedEdge& e : g.edges()) {
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) {
            return e.weight;
        }
    }
    return -1.0;
}

}  // namespace

TEST_CASE("chain graphs") {
    SUBCASE("adjacent unit weights") {
        const SimilarityGraph g = chain_graph(3, ChainMode::adjacent_unit);
        CHECK(g.edges().size() == 2);
        CHECK(edge_weight(g, 0, 1) == 1.0);
        CHECK(edge_weight(g, 1, 2) == 1.0);
    }
    SUBCASE("all pairs with gaussian decay") {
        const SimilarityGraph g = chain_graph(3, ChainMode::all_pairs_decay);
        CHECK(g.edges().size() == 3);
        CHECK(edge_weight(g, 0, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
        CHECK(edge_weight(g, 1, 2) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
        CHECK(edge_weight(g, 0, 2) == doctest::Approx(std::exp(-4.0)).epsilon(1e-15));
    }
    SUBCASE("all pairs with inverse decay") {
        const SimilarityGraph g = chain_graph(3, ChainMode::all_pairs_decay, ChainDecay::inverse);
        CHECK(edge_weight(g, 0, 1) == 1.0);
        CHECK(edge_weight(g, 0, 2) == 0.5);
    }
    SUBCASE("two points") {
        const TransitionModel tm(chain_graph(2, ChainMode::adjacent_unit));
        CHECK(tm.stationary()[0] == 0.5);
        CHECK(tm.stationary()[1] == 0.5);
    }
    SUBCASE("too short") {
        CHECK_THROWS_AS(chain_graph(1, ChainMode::adjacent_unit), std::invalid_argument);
        CHECK_THROWS_AS(chain_adjacency(1), std::invalid_argument);
    }
}

TEST_CASE("gaussian similarity") {
    PointSet p;
    p.points = {{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}};
    const SimilarityGraph g = gaussian_similarity(p);
    CHECK(edge_weight(g, 0, 1) == 1.0);  // duplicate points
    CHECK(edge_weight(g, 0, 2) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    for (const WeightedEdge& e : g.edges()) {
        CHECK(e.weight <= 1.0);
        CHECK(e.u != e.v);
    }

    PointSet bad;
    bad.points = {{0.0, 0.0}, {std::nan(""), 1.0}};
    CHECK_THROWS_AS(gaussian_similarity(bad), std::invalid_argument);
}

TEST_CASE("threshold adjacency") {
    SimilarityGraph g(4);
    g.add_edge(0, 1, 0.2);
    g.add_edge(1, 2, 0.5);
    g.add_edge(2, 3, 0.9);

    SUBCASE("zero threshold keeps every positive edge") {
        const AdjacencyGraph a = threshold_adjacency(g, 0.0);
        CHECK(a.num_edges() == 3);
    }
    SUBCASE("threshold above the maximum keeps nothing") {
        const AdjacencyGraph a = threshold_adjacency(g, 0.9);
        CHECK(a.num_edges() == 0);
    }
    SUBCASE("strict comparison") {
        const AdjacencyGraph a = threshold_adjacency(g, 0.4);
        CHECK(a.num_edges() == 2);
        CHECK(a.degree(0) == 0);
    }
    SUBCASE("negative threshold rejected") {
        CHECK_THROWS_AS(threshold_adjacency(g, -0.1), std::invalid_argument);
    }
}

TEST_CASE("epsilon neighborhood equivalence") {
    std::mt19937_64 rng(29);
    const PointSet p = sample_gaussian(40, 29);
    const SimilarityGraph g = gaussian_similarity(p);
    for (double eps : {0.9, 0.5, std::exp(-1.0), 0.05}) {
        const AdjacencyGraph adj = threshold_adjacency(g, eps);
        const double radius = std::sqrt(-std::log(eps));
        for (std::uint32_t i = 0; i < p.size(); ++i) {
            for (std::uint32_t j = i + 1; j < p.size(); ++j) {
                const double dx = p.points[i][0] - p.points[j][0];
                const double dy = p.points[i][1] - p.points[j][1];
                const bool within = std::sqrt(dx * dx + dy * dy) < radius;
                const auto nb = adj.neighbors(i);
                const bool edge = std::find(nb.begin(), nb.end(), j) != nb.end();
                CHECK(edge == within);
            }
        }
    }
}

TEST_CASE("grid graphs") {
    SUBCASE("1x3 grid with window 3") {
        const GridGraphs g = grid_graphs(1, 3, 3);
        CHECK(g.similarity.edges().size() == 2);
        CHECK(edge_weight(g.similarity, 0, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
        CHECK(edge_weight(g.similarity, 0, 2) == -1.0);  // outside the window
        CHECK(g.adjacency.num_edges() == 2);
    }
    SUBCASE("5x5 grid with window 5: corner and interior degrees") {
        const GridGraphs g = grid_graphs(5, 5, 5);
        CHECK(g.adjacency.degree(0) == 8);    // corner: clipped 3x3 box minus self
        CHECK(g.adjacency.degree(12) == 24);  // center: full box minus self
    }
    SUBCASE("adjacency mirrors the similarity support") {
        const GridGraphs g = grid_graphs(4, 6, 3);
        CHECK(g.similarity.edges().size() == g.adjacency.num_edges());
        for (const WeightedEdge& e : g.similarity.edges()) {
            const auto nb = g.adjacency.neighbors(e.u);
            CHECK(std::find(nb.begin(), nb.end(), e.v) != nb.end());
        }
    }
    SUBCASE("neighbor lists are symmetric") {
        const GridGraphs g = grid_graphs(6, 6, 5);
        for (std::uint32_t i = 0; i < 36; ++i) {
            for (std::uint32_t j : g.adjacency.neighbors(i)) {
                const auto back = g.adjacency.neighbors(j);
                CHECK(std::find(back.begin(), back.end(), i) != back.end());
            }
        }
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(grid_graphs(3, 3, 4), std::invalid_argument);
        CHECK_THROWS_AS(grid_graphs(3, 3, 1), std::invalid_argument);
        CHECK_THROWS_AS(grid_graphs(0, 3, 3), std::invalid_argument);
        CHECK_THROWS_AS(grid_graphs(1u << 20, 1u << 20, 3), std::invalid_argument);
    }
}

TEST_CASE("gaussian sampling") {
    SUBCASE("same seed, same points") {
        const PointSet a = sample_gaussian(200, 99);
        const PointSet b = sample_gaussian(200, 99);
        CHECK(a.points == b.points);
        const PointSet c = sample_gaussian(200, 100);
        CHECK(a.points != c.points);
    }
    SUBCASE("single point is finite") {
        const PointSet p = sample_gaussian(1, 0);
        CHECK(std::isfinite(p.points[0][0]));
        CHECK(std::isfinite(p.points[0][1]));
    }
    SUBCASE("sample moments at n = 10000") {
        const PointSet p = sample_gaussian(10000, 12345);
        double mx = 0.0, my = 0.0;
        for (const auto& pt : p.points) {
            mx += pt[0];
            my += pt[1];
        }
        mx /= 10000.0;
        my /= 10000.0;
        CHECK(std::abs(mx) < 0.05);
        CHECK(std::abs(my) < 0.05);
        double vx = 0.0, vy = 0.0;
        for (const auto& pt : p.points) {
            vx += (pt[0] - mx) * (pt[0] - mx);
            vy += (pt[1] - my) * (pt[1] - my);
        }
        vx /= 10000.0;
        vy /= 10000.0;
        CHECK(std::abs(vx - 1.0) < 0.05);
        CHECK(std::abs(vy - 1.0) < 0.05);
    }
}

TEST_CASE("derived trial seeds are deterministic and spread out") {
    CHECK(derive_seed(0, 0) == derive_seed(0, 0));
    std::set<std::uint64_t> seen;
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        for (std::uint64_t t = 0; t < 50; ++t) {
            seen.insert(derive_seed(seed, t));
        }
    }
    CHECK(seen.size() == 200);
}
