#pragma once

#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace cluscomp {

using Label = std::uint32_t;

/// A partition of n points into K clusters.
///
/// Labels are stored in canonical form: clusters are renumbered by order of
/// first occurrence, so the label values are exactly 1..K and every value
/// occurs at least once. Input labels may be arbitrary integers; two label
/// vectors describe the same clustering iff their canonical forms are equal.
class Clustering {
public:
    Clustering() = default;

    template <std::integral T>
    static Clustering from_labels(std::span<const T> raw) {
        if (raw.empty()) {
            throw std::invalid_argument("clustering needs at least one point");
        }
        Clustering c;
        c.labels_.reserve(raw.size());
        std::unordered_map<long long, Label> ids;
        for (const T& value : raw) {
            auto [it, inserted] =
                ids.try_emplace(static_cast<long long>(value), static_cast<Label>(ids.size() + 1));
            (void)inserted;
            c.labels_.push_back(it->second);
        }
        c.k_ = static_cast<Label>(ids.size());
        c.sizes_.assign(c.k_, 0);
        for (Label l : c.labels_) {
            ++c.sizes_[l - 1];
        }
        return c;
    }

    template <std::integral T>
    static Clustering from_labels(const std::vector<T>& raw) {
        return from_labels(std::span<const T>(raw.data(), raw.size()));
    }

    static Clustering from_labels(std::initializer_list<int> raw) {
        return from_labels(std::span<const int>(raw.begin(), raw.size()));
    }

    /// The all-singletons partition (every point its own cluster).
    static Clustering singletons(std::size_t n);

    /// The one-cluster partition (every point the same label).
    static Clustering single_cluster(std::size_t n);

    std::size_t size() const { return labels_.size(); }
    Label num_clusters() const { return k_; }
    std::span<const Label> labels() const { return labels_; }
    Label label(std::size_t i) const { return labels_[i]; }

    /// Cluster sizes n_k, indexed by label-1.
    const std::vector<std::size_t>& cluster_sizes() const { return sizes_; }

    friend bool operator==(const Clustering& a, const Clustering& b) {
        return a.labels_ == b.labels_;
    }

private:
    std::vector<Label> labels_;
    std::vector<std::size_t> sizes_;
    Label k_ = 0;
};

}  // namespace cluscomp
