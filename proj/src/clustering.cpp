#include "cluscomp/clustering.hpp"

#include <limits>

namespace cluscomp {

Clustering Clustering::singletons(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("clustering needs at least one point");
    }
    if (n > std::numeric_limits<Label>::max()) {
        throw std::invalid_argument("too many points for singleton labels");
    }
    Clustering c;
    c.labels_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        c.labels_[i] = static_cast<Label>(i + 1);
    }
    c.sizes_.assign(n, 1);
    c.k_ = static_cast<Label>(n);
    return c;
}

Clustering Clustering::single_cluster(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("clustering needs at least one point");
    }
    Clustering c;
    c.labels_.assign(n, 1);
    c.sizes_.assign(1, n);
    c.k_ = 1;
    return c;
}

}  // namespace cluscomp
