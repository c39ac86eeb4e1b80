#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cluscomp/clustering.hpp"

namespace cluscomp {

/// Unit of all entropies and indices: natural log (nats) or log2 (bits).
enum class LogBase { e, two };

/// Tolerance for "these values are probabilities summing to one" checks.
inline constexpr double kProbSumTol = 1e-12;

namespace detail {
double in_base(double nats, LogBase base);
}

/// Shannon entropy of a discrete distribution, with 0*log(0) := 0.
/// Entries must be nonnegative and sum to one within kProbSumTol.
double entropy(std::span<const double> p, LogBase base = LogBase::e);

/// One nonzero entry of a contingency table (0-based row and column).
struct ConfusionCell {
    std::uint32_t row;
    std::uint32_t col;
    std::uint64_t count;
};

/// Contingency table between two clusterings of the same points:
/// count(r, c) = |A_{r+1} n B_{c+1}|. Rows follow the first clustering.
/// Stored sparsely (at most n nonzero cells, in first-occurrence order), so
/// tables between fine partitions stay cheap.
class ConfusionMatrix {
public:
    ConfusionMatrix(const Clustering& a, const Clustering& b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t total() const { return n_; }

    std::span<const ConfusionCell> cells() const { return cells_; }

    std::uint64_t count(std::size_t row, std::size_t col) const;
    std::uint64_t row_sum(std::size_t row) const { return row_sums_[row]; }
    std::uint64_t col_sum(std::size_t col) const { return col_sums_[col]; }

    double joint(std::size_t row, std::size_t col) const {
        return static_cast<double>(count(row, col)) / static_cast<double>(n_);
    }
    double row_prob(std::size_t row) const {
        return static_cast<double>(row_sums_[row]) / static_cast<double>(n_);
    }
    double col_prob(std::size_t col) const {
        return static_cast<double>(col_sums_[col]) / static_cast<double>(n_);
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint64_t n_ = 0;
    std::vector<ConfusionCell> cells_;
    std::unordered_map<std::uint64_t, std::size_t> cell_index_;
    std::vector<std::uint64_t> row_sums_;
    std::vector<std::uint64_t> col_sums_;
};

inline ConfusionMatrix confusion_matrix(const Clustering& a, const Clustering& b) {
    return ConfusionMatrix(a, b);
}

/// Entropy H(C) of the cluster-size distribution.
double clustering_entropy(const Clustering& c, LogBase base = LogBase::e);

/// Mutual information between the two clusterings of a contingency table.
double mutual_information(const ConfusionMatrix& m, LogBase base = LogBase::e);

/// Variation of information, accumulated as H(A|B) + H(B|A) directly from the
/// contingency table. Exactly symmetric and exactly zero for equal clusterings.
double vi(const Clustering& a, const Clustering& b, LogBase base = LogBase::e);

/// Variation of information via the algebraic route H(A) + H(B) - 2 I(A,B).
/// Agrees with vi() up to floating-point noise; kept as an independent route.
double vi_from_mutual_information(const Clustering& a, const Clustering& b,
                                  LogBase base = LogBase::e);

/// Per-point probability weights (nonnegative, summing to one).
struct PointWeights {
    std::vector<double> values;

    static PointWeights uniform(std::size_t n);
};

/// VI with point masses given by w instead of uniform 1/n. Reduces to vi()
/// when the weights are uniform.
double weighted_vi(const Clustering& a, const Clustering& b, const PointWeights& w,
                   LogBase base = LogBase::e);

/// A split of one cluster of a clustering into sub-clusters. sublabels has one
/// entry per point: nonzero sub-cluster ids exactly on the members of the
/// parent cluster, zero everywhere else.
struct SplitSpec {
    Label parent = 0;
    std::vector<Label> sublabels;
};

/// P(k) * H_k for the split of cluster k: the VI distance incurred by
/// replacing the parent cluster with its sub-clusters.
double split_entropy(const Clustering& c, const SplitSpec& split, LogBase base = LogBase::e);

/// The clustering obtained from c by applying the split.
Clustering apply_split(const Clustering& c, const SplitSpec& split);

}  // namespace cluscomp
