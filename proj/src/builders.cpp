#include "cluscomp/builders.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace cluscomp {

SimilarityGraph chain_graph(std::size_t n, ChainMode mode, ChainDecay decay) {
    if (n < 2) {
        throw std::invalid_argument("chain needs at least two points");
    }
    SimilarityGraph g(n);
    if (mode == ChainMode::adjacent_unit) {
        for (std::uint32_t i = 0; i + 1 < n; ++i) {
            g.add_edge(i, i + 1, 1.0);
        }
        return g;
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const double dist = static_cast<double>(j - i);
            const double w =
                decay == ChainDecay::gauss ? std::exp(-dist * dist) : 1.0 / dist;
            g.add_edge(i, j, w);
        }
    }
    return g;
}

AdjacencyGraph chain_adjacency(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("chain needs at least two points");
    }
    AdjacencyGraph a(n);
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
        a.add_edge(i, i + 1);
    }
    return a;
}

SimilarityGraph gaussian_similarity(const PointSet& points) {
    const std::size_t n = points.size();
    if (n < 2) {
        throw std::invalid_argument("need at least two points");
    }
    for (const auto& p : points.points) {
        if (!std::isfinite(p[0]) || !std::isfinite(p[1])) {
            throw std::invalid_argument("point coordinates must be finite");
        }
    }
    SimilarityGraph g(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const double dx = points.points[i][0] - points.points[j][0];
            const double dy = points.points[i][1] - points.points[j][1];
            g.add_edge(i, j, std::exp(-(dx * dx + dy * dy)));
        }
    }
    return g;
}

AdjacencyGraph threshold_adjacency(const SimilarityGraph& s, double eps) {
    if (!(eps >= 0.0)) {
        throw std::invalid_argument("epsilon must be nonnegative");
    }
    AdjacencyGraph a(s.size());
    for (const WeightedEdge& e : s.edges()) {
        if (e.u != e.v && e.weight > eps) {
            a.add_edge(e.u, e.v);
        }
    }
    return a;
}

GridGraphs grid_graphs(std::size_t height, std::size_t width, std::size_t window) {
    if (window < 3 || window % 2 == 0) {
        throw std::invalid_argument("window must be odd and at least 3");
    }
    if (height == 0 || width == 0) {
        throw std::invalid_argument("grid needs at least one pixel");
    }
    if (height > std::numeric_limits<std::uint32_t>::max() / width) {
        throw std::invalid_argument("grid too large");
    }
    const std::size_t n = height * width;
    const std::ptrdiff_t r = static_cast<std::ptrdiff_t>(window - 1) / 2;
    GridGraphs out{SimilarityGraph(n), AdjacencyGraph(n)};
    for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t x = 0; x < width; ++x) {
            const std::uint32_t from = static_cast<std::uint32_t>(y * width + x);
            // Each unordered pair inside the window box is visited once:
            // dy > 0 with any dx, or dy == 0 with dx > 0.
            for (std::ptrdiff_t dy = 0; dy <= r; ++dy) {
                const std::ptrdiff_t dx_begin = dy == 0 ? 1 : -r;
                for (std::ptrdiff_t dx = dx_begin; dx <= r; ++dx) {
                    const std::ptrdiff_t ny = static_cast<std::ptrdiff_t>(y) + dy;
                    const std::ptrdiff_t nx = static_cast<std::ptrdiff_t>(x) + dx;
                    if (ny < 0 || ny >= static_cast<std::ptrdiff_t>(height) || nx < 0 ||
                        nx >= static_cast<std::ptrdiff_t>(width)) {
                        continue;
                    }
                    const std::uint32_t to =
                        static_cast<std::uint32_t>(ny * static_cast<std::ptrdiff_t>(width) + nx);
                    const double d2 = static_cast<double>(dy * dy + dx * dx);
                    out.similarity.add_edge(from, to, std::exp(-d2));
                    out.adjacency.add_edge(from, to);
                }
            }
        }
    }
    return out;
}

PointSet sample_gaussian(std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("need at least one point");
    }
    std::mt19937_64 rng(seed);
    auto unit = [&rng]() {
        // 53-bit mantissa draw in [0, 1).
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    PointSet out;
    out.points.resize(n);
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (auto& p : out.points) {
        const double u1 = 1.0 - unit();  // (0, 1], keeps the log finite
        const double u2 = unit();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        p[0] = radius * std::cos(two_pi * u2);
        p[1] = radius * std::sin(two_pi * u2);
    }
    return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    auto mix = [](std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    };
    return mix(mix(seed) ^ (index + 1));
}

}  // namespace cluscomp
