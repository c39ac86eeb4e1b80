#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "cluscomp/metrics.hpp"
#include "test_support.hpp"

using namespace cluscomp;
using test_support::random_clustering;
using test_support::random_split;

TEST_CASE("labels canonicalize by first occurrence") {
    const Clustering c = Clustering::from_labels({7, 7, -3, 7, 12});
    CHECK(c.num_clusters() == 2 + 1);
    CHECK(c.labels()[0] == 1);
    CHECK(c.labels()[2] == 2);
    CHECK(c.labels()[4] == 3);
    CHECK(c.cluster_sizes() == std::vector<std::size_t>{3, 1, 1});
    CHECK(c == Clustering::from_labels({1, 1, 2, 1, 3}));

    CHECK_THROWS_AS(Clustering::from_labels(std::vector<int>{}), std::invalid_argument);
    CHECK(Clustering::singletons(4).num_clusters() == 4);
    CHECK(Clustering::single_cluster(4).num_clusters() == 1);
}

TEST_CASE("confusion matrix counts intersections") {
    SUBCASE("identical clusterings give diagonal counts") {
        const ConfusionMatrix m(Clustering::from_labels({1, 1, 2}),
                                Clustering::from_labels({1, 1, 2}));
        CHECK(m.count(0, 0) == 2);
        CHECK(m.count(0, 1) == 0);
        CHECK(m.count(1, 0) == 0);
        CHECK(m.count(1, 1) == 1);
    }
    SUBCASE("crossed pair") {
        const ConfusionMatrix m(Clustering::from_labels({1, 1, 2, 2}),
                                Clustering::from_labels({1, 2, 1, 2}));
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 2; ++c) {
                CHECK(m.count(r, c) == 1);
            }
        }
    }
    SUBCASE("single cluster against singletons") {
        const ConfusionMatrix m(Clustering::single_cluster(3), Clustering::singletons(3));
        CHECK(m.rows() == 1);
        CHECK(m.cols() == 3);
        for (std::size_t c = 0; c < 3; ++c) {
            CHECK(m.count(0, c) == 1);
        }
    }
    SUBCASE("size mismatch") {
        CHECK_THROWS_WITH_AS(
            ConfusionMatrix(Clustering::single_cluster(3), Clustering::single_cluster(4)),
            "clustering size mismatch", std::invalid_argument);
    }
    SUBCASE("marginals match cluster sizes") {
        std::mt19937_64 rng(7);
        const Clustering a = random_clustering(rng, 40, 5);
        const Clustering b = random_clustering(rng, 40, 4);
        const ConfusionMatrix m(a, b);
        std::uint64_t total = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            CHECK(m.row_sum(r) == a.cluster_sizes()[r]);
            for (std::size_t c = 0; c < m.cols(); ++c) {
                total += m.count(r, c);
            }
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            CHECK(m.col_sum(c) == b.cluster_sizes()[c]);
        }
        CHECK(total == 40);
    }
}

TEST_CASE("entropy") {
    const std::vector<double> single{1.0};
    CHECK(entropy(single) == 0.0);

    const std::vector<double> half{0.5, 0.5};
    CHECK(entropy(half) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(entropy(half, LogBase::two) == doctest::Approx(1.0).epsilon(1e-15));

    const std::vector<double> skewed{0.75, 0.25};
    CHECK(entropy(skewed) == doctest::Approx(0.5623351446188083).epsilon(1e-14));

    const std::vector<double> negative{1.25, -0.25};
    CHECK_THROWS_AS(entropy(negative), std::invalid_argument);
    const std::vector<double> short_sum{0.5, 0.4};
    CHECK_THROWS_AS(entropy(short_sum), std::invalid_argument);
}

TEST_CASE("vi closed forms") {
    const Clustering any = Clustering::from_labels({1, 2, 2, 3, 1});
    CHECK(vi(any, any) == 0.0);

    CHECK(vi(Clustering::singletons(10), Clustering::single_cluster(10)) ==
          doctest::Approx(std::log(10.0)).epsilon(1e-13));

    const Clustering a = Clustering::from_labels({1, 1, 2, 2});
    const Clustering b = Clustering::from_labels({1, 2, 1, 2});
    CHECK(vi(a, b) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-13));
    CHECK(vi(a, b, LogBase::two) == doctest::Approx(2.0).epsilon(1e-13));

    CHECK_THROWS_WITH_AS(vi(a, Clustering::single_cluster(3)), "clustering size mismatch",
                         std::invalid_argument);
}

TEST_CASE("vi is a metric and matches its mutual-information form") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 400; ++iter) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng() % 9);
        const Clustering a = random_clustering(rng, n, 4);
        const Clustering b = random_clustering(rng, n, 4);
        const Clustering c = random_clustering(rng, n, 4);

        const double ab = vi(a, b);
        CHECK(ab >= 0.0);
        CHECK(ab == vi(b, a));  // bitwise, by canonical argument ordering
        if (a == b) {
            CHECK(ab == 0.0);
        } else {
            CHECK(ab > 0.0);
        }
        CHECK(ab + vi(b, c) >= vi(a, c) - 1e-10);

        CHECK(ab == doctest::Approx(vi_from_mutual_information(a, b)).epsilon(1e-10));
    }
}

TEST_CASE("vi collage identity") {
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng() % 11);
        const Clustering c = random_clustering(rng, n, 5);
        const Clustering ones = Clustering::singletons(n);
        const Clustering zero = Clustering::single_cluster(n);
        CHECK(vi(ones, c) + vi(c, zero) ==
              doctest::Approx(vi(ones, zero)).epsilon(1e-10));
    }
}

TEST_CASE("weighted vi") {
    SUBCASE("uniform weights reduce to vi") {
        std::mt19937_64 rng(17);
        for (int iter = 0; iter < 200; ++iter) {
            const std::size_t n = 2 + static_cast<std::size_t>(rng() % 15);
            const Clustering a = random_clustering(rng, n, 4);
            const Clustering b = random_clustering(rng, n, 4);
            const double direct = vi(a, b);
            const double weighted = weighted_vi(a, b, PointWeights::uniform(n));
            CHECK(weighted == doctest::Approx(direct).epsilon(1e-12));
        }
    }
    SUBCASE("identical clusterings have zero distance under any weights") {
        const Clustering c = Clustering::from_labels({1, 2, 1, 3});
        const PointWeights w{{0.4, 0.1, 0.3, 0.2}};
        CHECK(weighted_vi(c, c, w) == 0.0);
    }
    SUBCASE("two-point example") {
        const Clustering a = Clustering::from_labels({1, 2});
        const Clustering b = Clustering::from_labels({1, 1});
        const PointWeights w{{0.25, 0.75}};
        CHECK(weighted_vi(a, b, w) == doctest::Approx(0.5623351446188083).epsilon(1e-14));
    }
    SUBCASE("invalid weights") {
        const Clustering c = Clustering::from_labels({1, 2});
        CHECK_THROWS_AS(weighted_vi(c, c, PointWeights{{0.5, 0.4}}), std::invalid_argument);
        CHECK_THROWS_AS(weighted_vi(c, c, PointWeights{{1.5, -0.5}}), std::invalid_argument);
        CHECK_THROWS_AS(weighted_vi(c, c, PointWeights{{1.0}}), std::invalid_argument);
    }
}

TEST_CASE("split entropy") {
    SUBCASE("one-piece split costs nothing") {
        const Clustering c = Clustering::from_labels({1, 1, 2, 2});
        SplitSpec split{1, {1, 1, 0, 0}};
        CHECK(split_entropy(c, split) == 0.0);
    }
    SUBCASE("halving a four-point cluster") {
        const Clustering c = Clustering::from_labels({1, 1, 1, 1, 2, 2});
        SplitSpec split{1, {1, 1, 2, 2, 0, 0}};
        CHECK(split_entropy(c, split) ==
              doctest::Approx(4.0 / 6.0 * std::log(2.0)).epsilon(1e-12));
    }
    SUBCASE("splitting the single cluster into singletons") {
        const Clustering c = Clustering::single_cluster(4);
        SplitSpec split{1, {1, 2, 3, 4}};
        CHECK(split_entropy(c, split) == doctest::Approx(std::log(4.0)).epsilon(1e-13));
        CHECK(apply_split(c, split) == Clustering::singletons(4));
    }
    SUBCASE("split outside the parent cluster is rejected") {
        const Clustering c = Clustering::from_labels({1, 1, 2, 2});
        SplitSpec touches_outside{1, {1, 1, 2, 0}};
        CHECK_THROWS_AS(split_entropy(c, touches_outside), std::invalid_argument);
        SplitSpec misses_member{1, {1, 0, 0, 0}};
        CHECK_THROWS_AS(split_entropy(c, misses_member), std::invalid_argument);
    }
    SUBCASE("equals vi against the applied split") {
        std::mt19937_64 rng(23);
        for (int iter = 0; iter < 200; ++iter) {
            const std::size_t n = 3 + static_cast<std::size_t>(rng() % 12);
            const Clustering c = random_clustering(rng, n, 3);
            const SplitSpec split = random_split(rng, c);
            CHECK(split_entropy(c, split) ==
                  doctest::Approx(vi(c, apply_split(c, split))).epsilon(1e-10));
        }
    }
}
