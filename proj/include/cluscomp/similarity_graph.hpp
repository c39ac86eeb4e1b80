#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace cluscomp {

struct WeightedEdge {
    std::uint32_t u;
    std::uint32_t v;  // u <= v
    double weight;
};

/// Symmetric nonnegative weighted graph over n points, stored as a sparse
/// edge list with implied symmetry. Self-weights (u == v) are permitted.
/// Repeated add_edge calls on the same pair accumulate.
class SimilarityGraph {
public:
    explicit SimilarityGraph(std::size_t n);

    std::size_t size() const { return n_; }

    void add_edge(std::uint32_t i, std::uint32_t j, double weight);

    /// Unique edges in insertion order, endpoints normalized to u <= v.
    std::span<const WeightedEdge> edges() const { return edges_; }

    /// Node degrees d_i = sum_j S_ij (a self-weight counts once).
    std::vector<double> degrees() const;

    /// Copy of the graph with `weight` added to every self-weight S_ii.
    SimilarityGraph with_uniform_self_loops(double weight) const;

private:
    std::size_t n_;
    std::vector<WeightedEdge> edges_;
    std::unordered_map<std::uint64_t, std::size_t> edge_index_;
};

}  // namespace cluscomp
