#include "cluscomp/adjacency_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cluscomp {

AdjacencyGraph::AdjacencyGraph(std::size_t n) : adj_(n) {
    if (n == 0) {
        throw std::invalid_argument("graph needs at least one node");
    }
}

void AdjacencyGraph::add_edge(std::uint32_t i, std::uint32_t j) {
    if (i >= adj_.size() || j >= adj_.size()) {
        throw std::invalid_argument("edge endpoint out of range");
    }
    if (i == j) {
        return;
    }
    auto insert_sorted = [](std::vector<std::uint32_t>& list, std::uint32_t value) {
        auto it = std::lower_bound(list.begin(), list.end(), value);
        if (it != list.end() && *it == value) {
            return false;
        }
        list.insert(it, value);
        return true;
    };
    if (insert_sorted(adj_[i], j)) {
        insert_sorted(adj_[j], i);
        ++num_edges_;
    }
}

}  // namespace cluscomp
