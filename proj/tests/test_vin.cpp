#include <chrono>
#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "cluscomp/builders.hpp"
#include "cluscomp/vin.hpp"
#include "test_support.hpp"

using namespace cluscomp;
using test_support::complete_adjacency;
using test_support::random_adjacency;
using test_support::random_clustering;
using test_support::random_split;

TEST_CASE("neighborhood refinement") {
    SUBCASE("no edges: the refinement is the clustering itself") {
        std::mt19937_64 rng(1);
        const Clustering c = random_clustering(rng, 9, 3);
        const AdjacencyGraph empty(9);
        CHECK(refine(c, empty) == c);
    }
    SUBCASE("endpoints of a path share a class, the midpoint does not") {
        const Clustering zero = Clustering::single_cluster(3);
        const Clustering refined = refine(zero, chain_adjacency(3));
        CHECK(refined == Clustering::from_labels({1, 2, 1}));
    }
    SUBCASE("equal neighbor counts per cluster, different central labels") {
        // Three hubs with five private leaves each, leaf labels a,a,b,b,c.
        // Hubs 0 and 1 are labeled a, hub 2 is labeled c.
        std::vector<int> labels = {1, 1, 3};
        AdjacencyGraph adj(18);
        for (std::uint32_t hub = 0; hub < 3; ++hub) {
            for (int leaf_label : {1, 1, 2, 2, 3}) {
                labels.push_back(leaf_label);
                adj.add_edge(hub, static_cast<std::uint32_t>(labels.size() - 1));
            }
        }
        const Clustering refined = refine(Clustering::from_labels(labels), adj);
        CHECK(refined.label(0) == refined.label(1));
        CHECK(refined.label(0) != refined.label(2));
    }
    SUBCASE("signature layout: central label first, neighbors sorted") {
        AdjacencyGraph adj(4);
        adj.add_edge(0, 3);
        adj.add_edge(0, 1);
        adj.add_edge(0, 2);
        const Clustering c = Clustering::from_labels({1, 3, 2, 3});
        // Canonical labels are [1,2,3,2]; neighbors 1,2,3 carry 2,3,2.
        CHECK(neighborhood_signature(c, adj, 0) == std::vector<Label>{1, 2, 2, 3});
    }
    SUBCASE("refinement never merges across source clusters") {
        std::mt19937_64 rng(2);
        for (int iter = 0; iter < 100; ++iter) {
            const std::size_t n = 3 + static_cast<std::size_t>(rng() % 10);
            const Clustering c = random_clustering(rng, n, 4);
            const AdjacencyGraph adj = random_adjacency(rng, n, 0.4);
            const ConfusionMatrix m(refine(c, adj), c);
            for (std::size_t r = 0; r < m.rows(); ++r) {
                int nonzero = 0;
                for (std::size_t col = 0; col < m.cols(); ++col) {
                    nonzero += m.count(r, col) > 0 ? 1 : 0;
                }
                CHECK(nonzero == 1);
            }
        }
    }
    SUBCASE("size mismatch") {
        CHECK_THROWS_AS(refine(Clustering::single_cluster(3), AdjacencyGraph(4)),
                        std::invalid_argument);
    }
}

TEST_CASE("vin limit cases") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng() % 9);
        const Clustering a = random_clustering(rng, n, 4);
        const Clustering b = random_clustering(rng, n, 4);
        const double direct = vi(a, b);
        CHECK(std::abs(vin(a, b, AdjacencyGraph(n)) - direct) <= 1e-12);
        CHECK(std::abs(vin(a, b, complete_adjacency(n)) - direct) <= 1e-12);
    }
}

TEST_CASE("vin metric axioms") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t n = 3 + static_cast<std::size_t>(rng() % 8);
        const AdjacencyGraph adj = random_adjacency(rng, n, 0.4);
        const Clustering a = random_clustering(rng, n, 4);
        const Clustering b = random_clustering(rng, n, 4);
        const Clustering c = random_clustering(rng, n, 4);

        const double ab = vin(a, b, adj);
        CHECK(ab >= 0.0);
        CHECK(ab == vin(b, a, adj));
        CHECK(vin(a, a, adj) == 0.0);
        // Zero distance exactly when the refinements coincide.
        CHECK((ab == 0.0) == (refine(a, adj) == refine(b, adj)));
        CHECK(ab + vin(b, c, adj) >= vin(a, c, adj) - 1e-10);
    }
}

TEST_CASE("vin collage identity") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng() % 9);
        const AdjacencyGraph adj = random_adjacency(rng, n, 0.4);
        const Clustering c = random_clustering(rng, n, 4);
        const Clustering ones = Clustering::singletons(n);
        const Clustering zero = Clustering::single_cluster(n);
        CHECK(std::abs(vin(ones, c, adj) + vin(c, zero, adj) - vin(ones, zero, adj)) <= 1e-10);
    }
}

TEST_CASE("vin weak additivity for an edgeless isolated cluster") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t isolated = 2 + static_cast<std::size_t>(rng() % 4);
        const std::size_t rest = 4 + static_cast<std::size_t>(rng() % 6);
        const std::size_t n = isolated + rest;

        // Points [0, isolated) form cluster 1 with no edges at all; the rest
        // get arbitrary labels and arbitrary edges among themselves.
        std::vector<int> labels(n);
        std::uniform_int_distribution<int> pick(2, 4);
        for (std::size_t i = 0; i < n; ++i) {
            labels[i] = i < isolated ? 1 : pick(rng);
        }
        const Clustering c = Clustering::from_labels(labels);
        AdjacencyGraph adj(n);
        std::bernoulli_distribution edge(0.5);
        for (std::uint32_t i = static_cast<std::uint32_t>(isolated); i < n; ++i) {
            for (std::uint32_t j = i + 1; j < n; ++j) {
                if (edge(rng)) {
                    adj.add_edge(i, j);
                }
            }
        }

        SplitSpec split{c.label(0), std::vector<Label>(n, 0)};
        std::uniform_int_distribution<int> piece(1, 2);
        for (std::size_t i = 0; i < isolated; ++i) {
            split.sublabels[i] = static_cast<Label>(piece(rng));
        }

        const Clustering split_applied = apply_split(c, split);
        CHECK(std::abs(vin(c, split_applied, adj) - split_entropy(c, split)) <= 1e-10);
    }
}

TEST_CASE("vin scales to a hundred thousand points" * doctest::timeout(30)) {
    const GridGraphs graphs = grid_graphs(250, 400, 5);  // n = 100000, max degree 24
    const std::size_t n = 250 * 400;
    std::mt19937_64 rng(13);
    std::vector<int> labels(n);
    std::uniform_int_distribution<int> pick(1, 5);
    for (int& l : labels) {
        l = pick(rng);
    }
    const Clustering a = Clustering::from_labels(labels);
    for (int& l : labels) {
        l = pick(rng);
    }
    const Clustering b = Clustering::from_labels(labels);

    const auto start = std::chrono::steady_clock::now();
    const double value = vin(a, b, graphs.adjacency);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(value >= 0.0);
    CHECK(elapsed < 5.0);
}
