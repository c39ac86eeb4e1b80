#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cluscomp/adjacency_graph.hpp"
#include "cluscomp/builders.hpp"
#include "cluscomp/similarity_graph.hpp"

namespace cluscomp {

/// Label file: one integer label per line (or several, whitespace-separated);
/// the i-th value is the label of point i. Parse errors report "path:line:".
std::vector<long long> read_labels(const std::string& path);

/// Edge list "i j w" (0-based node ids, nonnegative weight), one undirected
/// edge per line, '#' lines and blank lines ignored. Node ids must be < n.
SimilarityGraph read_similarity(const std::string& path, std::size_t n);

/// Edge list "i j" (a trailing weight column is ignored).
AdjacencyGraph read_adjacency(const std::string& path, std::size_t n);

/// Point file: one "x y" pair per line, '#' lines ignored.
PointSet read_points(const std::string& path);

void write_similarity(const SimilarityGraph& s, std::ostream& out);
void write_adjacency(const AdjacencyGraph& a, std::ostream& out);
void write_points(const PointSet& p, std::ostream& out, const std::string& header_comment = "");

}  // namespace cluscomp
