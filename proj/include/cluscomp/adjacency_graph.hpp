#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cluscomp {

/// Symmetric binary adjacency over n points, stored as sorted neighbor lists.
/// Self-edges are ignored on input; duplicate edges are ignored.
class AdjacencyGraph {
public:
    explicit AdjacencyGraph(std::size_t n);

    std::size_t size() const { return adj_.size(); }

    void add_edge(std::uint32_t i, std::uint32_t j);

    /// Neighbors of i, sorted ascending, never containing i itself.
    std::span<const std::uint32_t> neighbors(std::uint32_t i) const { return adj_[i]; }

    std::size_t degree(std::uint32_t i) const { return adj_[i].size(); }

    std::size_t num_edges() const { return num_edges_; }

private:
    std::vector<std::vector<std::uint32_t>> adj_;
    std::size_t num_edges_ = 0;
};

}  // namespace cluscomp
