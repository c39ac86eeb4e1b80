#include "cluscomp/random_walk.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cluscomp {

TransitionModel::TransitionModel(SimilarityGraph graph)
    : graph_(std::move(graph)), degrees_(graph_.degrees()) {
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (degrees_[i] <= 0.0) {
            throw std::invalid_argument("isolated node " + std::to_string(i) +
                                        " has zero degree; RWI undefined");
        }
        total_weight_ += degrees_[i];
    }
    stationary_.resize(degrees_.size());
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        stationary_[i] = degrees_[i] / total_weight_;
    }
}

TripleDistribution::TripleDistribution(std::size_t prev_clusters, std::size_t cur_clusters,
                                       std::size_t other_clusters)
    : ka_(prev_clusters), kb_(cur_clusters), kc_(other_clusters), p_(ka_ * kb_ * kc_, 0.0) {}

double TripleDistribution::total() const {
    double sum = 0.0;
    for (double x : p_) {
        sum += x;
    }
    return sum;
}

std::vector<double> TripleDistribution::cluster_transition_joint() const {
    std::vector<double> joint(ka_ * kb_, 0.0);
    for (std::size_t k = 0; k < ka_; ++k) {
        for (std::size_t l = 0; l < kb_; ++l) {
            for (std::size_t m = 0; m < kc_; ++m) {
                joint[k * kb_ + l] += at(k, l, m);
            }
        }
    }
    return joint;
}

TripleDistribution triple_joint(const TransitionModel& tm, const Clustering& a,
                                const Clustering& b) {
    if (a.size() != tm.size() || b.size() != tm.size()) {
        throw std::invalid_argument("clustering size does not match graph");
    }
    TripleDistribution t(a.num_clusters(), a.num_clusters(), b.num_clusters());
    // pi_i * T_ij collapses to S_ij / W, so one pass over the edge list
    // aggregates the full joint; a self-loop is a single ordered step.
    const double w_total = tm.total_weight();
    for (const WeightedEdge& e : tm.graph().edges()) {
        const double mass = e.weight / w_total;
        t.at(a.label(e.u) - 1, a.label(e.v) - 1, b.label(e.v) - 1) += mass;
        if (e.u != e.v) {
            t.at(a.label(e.v) - 1, a.label(e.u) - 1, b.label(e.u) - 1) += mass;
        }
    }
    return t;
}

double conditional_step_entropy(const TripleDistribution& t) {
    double h = 0.0;
    for (std::size_t k = 0; k < t.prev_clusters(); ++k) {
        for (std::size_t m = 0; m < t.other_clusters(); ++m) {
            double cond_mass = 0.0;
            for (std::size_t l = 0; l < t.cur_clusters(); ++l) {
                cond_mass += t.at(k, l, m);
            }
            if (cond_mass <= 0.0) {
                continue;
            }
            for (std::size_t l = 0; l < t.cur_clusters(); ++l) {
                const double p = t.at(k, l, m);
                if (p > 0.0) {
                    h -= p * std::log(p / cond_mass);
                }
            }
        }
    }
    return h;
}

double rwi(const TransitionModel& tm, const Clustering& a, const Clustering& b, LogBase base) {
    const double forward = conditional_step_entropy(triple_joint(tm, a, b));
    const double backward = conditional_step_entropy(triple_joint(tm, b, a));
    return detail::in_base(forward + backward, base);
}

double rwi(const SimilarityGraph& s, const Clustering& a, const Clustering& b, LogBase base) {
    return rwi(TransitionModel(s), a, b, base);
}

}  // namespace cluscomp
