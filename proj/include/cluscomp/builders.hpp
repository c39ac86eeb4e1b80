#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cluscomp/adjacency_graph.hpp"
#include "cluscomp/similarity_graph.hpp"

namespace cluscomp {

struct PointSet {
    std::vector<std::array<double, 2>> points;

    std::size_t size() const { return points.size(); }
};

enum class ChainMode { adjacent_unit, all_pairs_decay };

/// Weight law for the all-pairs chain: exp(-(i-j)^2) or 1/|i-j|.
enum class ChainDecay { gauss, inverse };

/// Evenly spaced 1-D chain. adjacent_unit connects consecutive points with
/// unit weight; all_pairs_decay connects every pair with a distance-decaying
/// weight.
SimilarityGraph chain_graph(std::size_t n, ChainMode mode,
                            ChainDecay decay = ChainDecay::gauss);

/// Binary adjacency of the chain: edges (i, i+1).
AdjacencyGraph chain_adjacency(std::size_t n);

/// Full similarity graph over 2-D points with s_ij = exp(-d_ij^2)
/// (Euclidean d); no self-weights.
SimilarityGraph gaussian_similarity(const PointSet& points);

/// Keep exactly the edges with weight strictly above eps, as binary
/// adjacency. For Gaussian-kernel weights this is the epsilon-neighborhood
/// graph of radius sqrt(-ln eps).
AdjacencyGraph threshold_adjacency(const SimilarityGraph& s, double eps);

struct GridGraphs {
    SimilarityGraph similarity;
    AdjacencyGraph adjacency;
};

/// Pixel grid in row-major order. Every pair of pixels within the
/// window x window box around a pixel is connected: similarity weight
/// exp(-d^2) with d the Euclidean pixel distance, adjacency binary.
GridGraphs grid_graphs(std::size_t height, std::size_t width, std::size_t window);

/// n i.i.d. standard 2-D normal points; mt19937_64 stream, Box-Muller
/// variates. Bit-identical results for equal seeds.
PointSet sample_gaussian(std::size_t n, std::uint64_t seed);

/// Deterministic per-trial sub-seed (splitmix64 mix of seed and index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace cluscomp
