#pragma once

#include <cstdint>
#include <vector>

#include "cluscomp/adjacency_graph.hpp"
#include "cluscomp/clustering.hpp"
#include "cluscomp/metrics.hpp"

namespace cluscomp {

/// Canonical neighborhood descriptor of one point: its own label first, then
/// the sorted multiset of its neighbors' labels. Two points belong to the
/// same neighborhood class iff their signatures are equal.
std::vector<Label> neighborhood_signature(const Clustering& c, const AdjacencyGraph& a,
                                          std::uint32_t point);

/// Relabel every point by its neighborhood-signature class (classes numbered
/// by first occurrence). The result refines c: points with different labels
/// in c never share a refined label. Signatures are hashed with a full
/// equality check on collision; sorting each neighbor list makes the whole
/// pass O(n d log d) for maximum degree d.
Clustering refine(const Clustering& c, const AdjacencyGraph& a);

/// Variation of information with neighbors: VI between the neighborhood
/// refinements of the two clusterings over the same adjacency graph.
double vin(const Clustering& a, const Clustering& b, const AdjacencyGraph& adj,
           LogBase base = LogBase::e);

}  // namespace cluscomp
