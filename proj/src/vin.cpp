#include "cluscomp/vin.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <unordered_map>

namespace cluscomp {

namespace {

struct SignatureHash {
    std::size_t operator()(const std::vector<Label>& sig) const {
        // FNV-1a over the label sequence; the map's key equality resolves
        // collisions with a full comparison.
        std::size_t h = 1469598103934665603ull;
        for (Label l : sig) {
            h ^= l;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

std::vector<Label> neighborhood_signature(const Clustering& c, const AdjacencyGraph& a,
                                          std::uint32_t point) {
    const auto neighbors = a.neighbors(point);
    std::vector<Label> sig;
    sig.reserve(neighbors.size() + 1);
    sig.push_back(c.label(point));
    for (std::uint32_t j : neighbors) {
        sig.push_back(c.label(j));
    }
    std::sort(sig.begin() + 1, sig.end());
    return sig;
}

Clustering refine(const Clustering& c, const AdjacencyGraph& a) {
    if (c.size() != a.size()) {
        throw std::invalid_argument("clustering size does not match graph");
    }
    std::vector<Label> refined(c.size());
    std::unordered_map<std::vector<Label>, Label, SignatureHash> classes;
    classes.reserve(c.size());
    for (std::uint32_t i = 0; i < c.size(); ++i) {
        auto [it, inserted] = classes.try_emplace(neighborhood_signature(c, a, i),
                                                  static_cast<Label>(classes.size() + 1));
        (void)inserted;
        refined[i] = it->second;
    }
    return Clustering::from_labels(refined);
}

double vin(const Clustering& a, const Clustering& b, const AdjacencyGraph& adj, LogBase base) {
    return vi(refine(a, adj), refine(b, adj), base);
}

}  // namespace cluscomp
