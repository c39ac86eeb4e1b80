#include "cluscomp/similarity_graph.hpp"

#include <stdexcept>
#include <string>

namespace cluscomp {

namespace {

std::uint64_t pair_key(std::uint32_t u, std::uint32_t v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

SimilarityGraph::SimilarityGraph(std::size_t n) : n_(n) {
    if (n == 0) {
        throw std::invalid_argument("graph needs at least one node");
    }
}

void SimilarityGraph::add_edge(std::uint32_t i, std::uint32_t j, double weight) {
    if (i >= n_ || j >= n_) {
        throw std::invalid_argument("edge endpoint out of range");
    }
    if (!(weight >= 0.0)) {
        throw std::invalid_argument("edge weight must be nonnegative");
    }
    const std::uint32_t u = i < j ? i : j;
    const std::uint32_t v = i < j ? j : i;
    auto [it, inserted] = edge_index_.try_emplace(pair_key(u, v), edges_.size());
    if (inserted) {
        edges_.push_back({u, v, weight});
    } else {
        edges_[it->second].weight += weight;
    }
}

std::vector<double> SimilarityGraph::degrees() const {
    std::vector<double> d(n_, 0.0);
    for (const WeightedEdge& e : edges_) {
        d[e.u] += e.weight;
        if (e.u != e.v) {
            d[e.v] += e.weight;
        }
    }
    return d;
}

SimilarityGraph SimilarityGraph::with_uniform_self_loops(double weight) const {
    SimilarityGraph out = *this;
    for (std::uint32_t i = 0; i < n_; ++i) {
        out.add_edge(i, i, weight);
    }
    return out;
}

}  // namespace cluscomp
