#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cluscomp/metrics.hpp"

namespace cluscomp {

enum class Verdict { b_closer, c_closer, tie };

/// One index evaluated against the two perturbations of a scenario.
struct IndexComparison {
    std::string index;
    double d_ab = 0.0;
    double d_ac = 0.0;
};

Verdict verdict(const IndexComparison& row);
const char* verdict_name(Verdict v);

struct ScenarioResult {
    std::vector<IndexComparison> rows;
};

/// Chain of n points, one cluster. B relabels the middle point, C the last
/// point. RWI uses the unit-weight chain, VIN the chain adjacency.
ScenarioResult scenario_chain_single(std::size_t n, LogBase base = LogBase::e);

/// Chain of n points split into two halves. B relabels the m points of the
/// second cluster at the boundary, C the m points at the far end. RWI is
/// reported for both chain similarity modes.
ScenarioResult scenario_chain_block(std::size_t n, std::size_t m, LogBase base = LogBase::e);

struct GaussianTrialValues {
    double vi_ab, vi_ac;
    double rwi_ab, rwi_ac;
    double vin_ab, vin_ac;
};

struct TrialSummaryRow {
    std::string index;
    double mean_ab = 0.0;
    double mean_ac = 0.0;
    std::size_t errors = 0;  // trials with d(A,B) >= d(A,C)
};

struct TrialSummary {
    std::size_t trials = 0;
    std::vector<TrialSummaryRow> rows;
    std::vector<GaussianTrialValues> per_trial;
};

/// Repeated 2-D Gaussian study: per trial, sample n points, relabel the point
/// farthest from the sample mean (B) and the one closest to it (C), and
/// compare against the unperturbed clustering with all three indices. VIN
/// uses the eps-thresholded kernel graph. Trials are seeded independently
/// from (seed, trial index), so results do not depend on the thread count.
TrialSummary scenario_gaussian(std::size_t trials, std::size_t n, double eps,
                               std::uint64_t seed, LogBase base = LogBase::e,
                               unsigned threads = 1);

enum class GridVariant { square_block, boundary_strip, distant_line };

/// Two-region pixel grid (vertical split). The variant picks the pair of
/// 100-pixel relabelings compared: a 10x10 block near vs far from the
/// boundary, a boundary-hugging strip vs its far-edge mirror, or the
/// boundary strip vs a line-shaped patch in the far half of the region.
/// All indices use window-5 grid graphs.
ScenarioResult scenario_grid(std::size_t height, std::size_t width, GridVariant variant,
                             LogBase base = LogBase::e);

enum class OutputFormat { table, tsv };

/// Ordered key=value pairs echoed in the report header.
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

/// Fixed-precision value formatting used by all reports (9 decimal places).
std::string format_value(double v);

std::string format_scenario_report(const ScenarioResult& result, const ConfigEcho& config,
                                   OutputFormat format);

std::string format_summary_report(const TrialSummary& summary, const ConfigEcho& config,
                                  OutputFormat format, bool per_trial_columns = false);

}  // namespace cluscomp
