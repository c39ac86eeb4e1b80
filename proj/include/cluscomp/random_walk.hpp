#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cluscomp/clustering.hpp"
#include "cluscomp/metrics.hpp"
#include "cluscomp/similarity_graph.hpp"

namespace cluscomp {

/// Degree-normalized Markov random walk on a similarity graph: transition
/// probabilities T_ij = S_ij / d_i (kept implicit on the sparse edge list)
/// and the stationary distribution pi_i = d_i / sum_j d_j.
///
/// Construction fails on any zero-degree node: the walk is undefined there
/// and no self-loop is injected silently (see SimilarityGraph::
/// with_uniform_self_loops for the explicit escape hatch).
class TransitionModel {
public:
    explicit TransitionModel(SimilarityGraph graph);

    const SimilarityGraph& graph() const { return graph_; }
    std::size_t size() const { return graph_.size(); }
    std::span<const double> degrees() const { return degrees_; }
    std::span<const double> stationary() const { return stationary_; }
    double total_weight() const { return total_weight_; }

private:
    SimilarityGraph graph_;
    std::vector<double> degrees_;
    std::vector<double> stationary_;
    double total_weight_ = 0.0;
};

inline TransitionModel transition_model(SimilarityGraph graph) {
    return TransitionModel(std::move(graph));
}

/// Joint law of (cluster at t-1 in A, cluster at t in A, cluster at t in B)
/// for one step of the stationary walk: a K x K x K' array.
class TripleDistribution {
public:
    TripleDistribution(std::size_t prev_clusters, std::size_t cur_clusters,
                       std::size_t other_clusters);

    std::size_t prev_clusters() const { return ka_; }
    std::size_t cur_clusters() const { return kb_; }
    std::size_t other_clusters() const { return kc_; }

    double at(std::size_t k, std::size_t l, std::size_t m) const {
        return p_[(k * kb_ + l) * kc_ + m];
    }
    double& at(std::size_t k, std::size_t l, std::size_t m) {
        return p_[(k * kb_ + l) * kc_ + m];
    }

    double total() const;

    /// Marginal over the other-clustering axis: Pr(prev cluster, cur cluster).
    std::vector<double> cluster_transition_joint() const;

private:
    std::size_t ka_, kb_, kc_;
    std::vector<double> p_;
};

/// P[k][l][m] = sum over points i in A_k and j in A_l n B_m of pi_i T_ij,
/// accumulated in one pass over the edge list.
TripleDistribution triple_joint(const TransitionModel& tm, const Clustering& a,
                                const Clustering& b);

/// H(cluster at t | other-clustering label at t, cluster at t-1), in nats.
double conditional_step_entropy(const TripleDistribution& t);

/// Random walk index: H(k_t | k'_t, k_{t-1}) + H(k'_t | k_t, k'_{t-1}) under
/// the stationary one-step walk. Symmetric; zero for identical clusterings.
/// Cost: one pass over the edge list plus entropy sums over the K x K x K'
/// tables, i.e. O(E + K K' (K + K')) and cubic in the cluster counts.
double rwi(const TransitionModel& tm, const Clustering& a, const Clustering& b,
           LogBase base = LogBase::e);

double rwi(const SimilarityGraph& s, const Clustering& a, const Clustering& b,
           LogBase base = LogBase::e);

}  // namespace cluscomp
