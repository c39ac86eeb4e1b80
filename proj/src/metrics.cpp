#include "cluscomp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cluscomp {

namespace detail {

double in_base(double nats, LogBase base) {
    return base == LogBase::two ? nats / std::log(2.0) : nats;
}

}  // namespace detail

double entropy(std::span<const double> p, LogBase base) {
    double sum = 0.0;
    for (double x : p) {
        if (!(x >= 0.0)) {
            throw std::invalid_argument("probabilities must be nonnegative");
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > kProbSumTol) {
        throw std::invalid_argument("probabilities must sum to one");
    }
    double h = 0.0;
    for (double x : p) {
        if (x > 0.0) {
            h -= x * std::log(x);
        }
    }
    return detail::in_base(h, base);
}

ConfusionMatrix::ConfusionMatrix(const Clustering& a, const Clustering& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("clustering size mismatch");
    }
    rows_ = a.num_clusters();
    cols_ = b.num_clusters();
    n_ = a.size();
    row_sums_.assign(rows_, 0);
    col_sums_.assign(cols_, 0);
    cell_index_.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::uint32_t r = a.label(i) - 1;
        const std::uint32_t c = b.label(i) - 1;
        const std::uint64_t key = (static_cast<std::uint64_t>(r) << 32) | c;
        auto [it, inserted] = cell_index_.try_emplace(key, cells_.size());
        if (inserted) {
            cells_.push_back({r, c, 0});
        }
        ++cells_[it->second].count;
        ++row_sums_[r];
        ++col_sums_[c];
    }
    // Canonical cell order: equal tables always accumulate identically, so
    // scenarios built to tie under vi really do tie bitwise.
    std::sort(cells_.begin(), cells_.end(), [](const ConfusionCell& a, const ConfusionCell& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        cell_index_[(static_cast<std::uint64_t>(cells_[i].row) << 32) | cells_[i].col] = i;
    }
}

std::uint64_t ConfusionMatrix::count(std::size_t row, std::size_t col) const {
    const std::uint64_t key = (static_cast<std::uint64_t>(row) << 32) | col;
    const auto it = cell_index_.find(key);
    return it == cell_index_.end() ? 0 : cells_[it->second].count;
}

double clustering_entropy(const Clustering& c, LogBase base) {
    const double n = static_cast<double>(c.size());
    double h = 0.0;
    for (std::size_t nk : c.cluster_sizes()) {
        const double p = static_cast<double>(nk) / n;
        h -= p * std::log(p);
    }
    return detail::in_base(h, base);
}

double mutual_information(const ConfusionMatrix& m, LogBase base) {
    const double n = static_cast<double>(m.total());
    double info = 0.0;
    for (const ConfusionCell& cell : m.cells()) {
        const double p = static_cast<double>(cell.count) / n;
        info += p * std::log(p / (m.row_prob(cell.row) * m.col_prob(cell.col)));
    }
    return detail::in_base(info, base);
}

namespace {

// H(A|B) + H(B|A) accumulated cell by cell. Every term is nonnegative (a
// cell count never exceeds its marginal) and identical clusterings yield an
// exact zero.
double conditional_vi_sum(const ConfusionMatrix& m) {
    const double n = static_cast<double>(m.total());
    double h = 0.0;
    for (const ConfusionCell& cell : m.cells()) {
        const double p = static_cast<double>(cell.count) / n;
        h -= p * std::log(p / m.col_prob(cell.col));
        h -= p * std::log(p / m.row_prob(cell.row));
    }
    return h;
}

}  // namespace

double vi(const Clustering& a, const Clustering& b, LogBase base) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("clustering size mismatch");
    }
    // Evaluate with the arguments in a canonical order so the result is
    // bitwise symmetric.
    const Clustering* first = &a;
    const Clustering* second = &b;
    if (std::ranges::lexicographical_compare(b.labels(), a.labels())) {
        std::swap(first, second);
    }
    const ConfusionMatrix m(*first, *second);
    return detail::in_base(conditional_vi_sum(m), base);
}

double vi_from_mutual_information(const Clustering& a, const Clustering& b, LogBase base) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("clustering size mismatch");
    }
    const ConfusionMatrix m(a, b);
    const double nats = clustering_entropy(a, LogBase::e) + clustering_entropy(b, LogBase::e) -
                        2.0 * mutual_information(m, LogBase::e);
    return detail::in_base(nats, base);
}

PointWeights PointWeights::uniform(std::size_t n) {
    PointWeights w;
    w.values.assign(n, 1.0 / static_cast<double>(n));
    return w;
}

double weighted_vi(const Clustering& a, const Clustering& b, const PointWeights& w,
                   LogBase base) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("clustering size mismatch");
    }
    if (w.values.size() != a.size()) {
        throw std::invalid_argument("point weights length mismatch");
    }
    double sum = 0.0;
    for (double x : w.values) {
        if (!(x >= 0.0)) {
            throw std::invalid_argument("point weights must be nonnegative");
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > kProbSumTol) {
        throw std::invalid_argument("point weights must sum to one");
    }

    const std::size_t rows = a.num_clusters();
    const std::size_t cols = b.num_clusters();
    std::vector<double> joint(rows * cols, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        joint[(a.label(i) - 1) * cols + (b.label(i) - 1)] += w.values[i];
    }
    // Marginals are accumulated from the joint so that a diagonal table gives
    // an exact zero.
    std::vector<double> row_mass(rows, 0.0);
    std::vector<double> col_mass(cols, 0.0);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            row_mass[r] += joint[r * cols + c];
            col_mass[c] += joint[r * cols + c];
        }
    }
    double h = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const double p = joint[r * cols + c];
            if (p > 0.0) {
                h -= p * std::log(p / col_mass[c]);
                h -= p * std::log(p / row_mass[r]);
            }
        }
    }
    return detail::in_base(h, base);
}

namespace {

// Sub-cluster sizes of a split, in first-occurrence order. Validates that the
// sublabels are nonzero exactly on the parent cluster's members.
std::vector<std::size_t> split_part_sizes(const Clustering& c, const SplitSpec& split) {
    if (split.parent < 1 || split.parent > c.num_clusters()) {
        throw std::invalid_argument("split parent cluster out of range");
    }
    if (split.sublabels.size() != c.size()) {
        throw std::invalid_argument("split sublabels length mismatch");
    }
    std::vector<std::size_t> sizes;
    std::unordered_map<Label, std::size_t> ids;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const bool in_parent = c.label(i) == split.parent;
        const Label sub = split.sublabels[i];
        if (!in_parent) {
            if (sub != 0) {
                throw std::invalid_argument("split touches points outside the parent cluster");
            }
            continue;
        }
        if (sub == 0) {
            throw std::invalid_argument("split does not cover the parent cluster");
        }
        auto [it, inserted] = ids.try_emplace(sub, sizes.size());
        if (inserted) {
            sizes.push_back(0);
        }
        ++sizes[it->second];
    }
    return sizes;
}

}  // namespace

double split_entropy(const Clustering& c, const SplitSpec& split, LogBase base) {
    const std::vector<std::size_t> sizes = split_part_sizes(c, split);
    const double nk = static_cast<double>(c.cluster_sizes()[split.parent - 1]);
    double h = 0.0;
    for (std::size_t sz : sizes) {
        const double p = static_cast<double>(sz) / nk;
        h -= p * std::log(p);
    }
    const double pk = nk / static_cast<double>(c.size());
    return detail::in_base(pk * h, base);
}

Clustering apply_split(const Clustering& c, const SplitSpec& split) {
    split_part_sizes(c, split);  // validation
    const Label k = c.num_clusters();
    std::vector<long long> raw(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c.label(i) == split.parent) {
            raw[i] = static_cast<long long>(k) + static_cast<long long>(split.sublabels[i]);
        } else {
            raw[i] = c.label(i);
        }
    }
    return Clustering::from_labels(raw);
}

}  // namespace cluscomp
