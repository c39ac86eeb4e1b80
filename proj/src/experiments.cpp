#include "cluscomp/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>

#include "cluscomp/builders.hpp"
#include "cluscomp/random_walk.hpp"
#include "cluscomp/vin.hpp"

namespace cluscomp {

Verdict verdict(const IndexComparison& row) {
    if (row.d_ab < row.d_ac) {
        return Verdict::b_closer;
    }
    if (row.d_ac < row.d_ab) {
        return Verdict::c_closer;
    }
    return Verdict::tie;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::b_closer: return "B";
        case Verdict::c_closer: return "C";
        default: return "tie";
    }
}

namespace {

Clustering relabel_points(const Clustering& c, std::span<const std::size_t> points,
                          long long new_label) {
    std::vector<long long> raw(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        raw[i] = c.label(i);
    }
    for (std::size_t p : points) {
        raw[p] = new_label;
    }
    return Clustering::from_labels(raw);
}

Clustering relabel_point(const Clustering& c, std::size_t point, long long new_label) {
    const std::size_t pts[1] = {point};
    return relabel_points(c, pts, new_label);
}

}  // namespace

ScenarioResult scenario_chain_single(std::size_t n, LogBase base) {
    if (n < 4) {
        throw std::invalid_argument("chain scenario needs at least four points");
    }
    const Clustering a = Clustering::single_cluster(n);
    const Clustering b = relabel_point(a, n / 2, 2);
    const Clustering c = relabel_point(a, n - 1, 2);

    const TransitionModel tm(chain_graph(n, ChainMode::adjacent_unit));
    const AdjacencyGraph adj = chain_adjacency(n);

    ScenarioResult result;
    result.rows.push_back({"vi", vi(a, b, base), vi(a, c, base)});
    result.rows.push_back({"rwi", rwi(tm, a, b, base), rwi(tm, a, c, base)});
    result.rows.push_back({"vin", vin(a, b, adj, base), vin(a, c, adj, base)});
    return result;
}

ScenarioResult scenario_chain_block(std::size_t n, std::size_t m, LogBase base) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("chain block scenario needs an even point count >= 4");
    }
    if (m < 1 || m >= n / 2) {
        throw std::invalid_argument("block size must satisfy 1 <= m < n/2");
    }
    std::vector<long long> raw(n, 1);
    for (std::size_t i = n / 2; i < n; ++i) {
        raw[i] = 2;
    }
    const Clustering a = Clustering::from_labels(raw);

    std::vector<std::size_t> boundary(m);
    std::vector<std::size_t> far_end(m);
    for (std::size_t i = 0; i < m; ++i) {
        boundary[i] = n / 2 + i;
        far_end[i] = n - m + i;
    }
    const Clustering b = relabel_points(a, boundary, 1);
    const Clustering c = relabel_points(a, far_end, 1);

    const TransitionModel tm_adjacent(chain_graph(n, ChainMode::adjacent_unit));
    const TransitionModel tm_decay(chain_graph(n, ChainMode::all_pairs_decay));
    const AdjacencyGraph adj = chain_adjacency(n);

    ScenarioResult result;
    result.rows.push_back({"vi", vi(a, b, base), vi(a, c, base)});
    result.rows.push_back(
        {"rwi[adjacent-unit]", rwi(tm_adjacent, a, b, base), rwi(tm_adjacent, a, c, base)});
    result.rows.push_back(
        {"rwi[all-pairs-decay]", rwi(tm_decay, a, b, base), rwi(tm_decay, a, c, base)});
    result.rows.push_back({"vin", vin(a, b, adj, base), vin(a, c, adj, base)});
    return result;
}

namespace {

GaussianTrialValues run_gaussian_trial(std::size_t n, double eps, std::uint64_t trial_seed,
                                       LogBase base) {
    const PointSet pts = sample_gaussian(n, trial_seed);
    double mx = 0.0, my = 0.0;
    for (const auto& p : pts.points) {
        mx += p[0];
        my += p[1];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    // Farthest/closest point from the sample mean; ties break to the lowest
    // index via strict comparisons.
    std::size_t far = 0, near = 0;
    double far_d2 = -1.0, near_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = pts.points[i][0] - mx;
        const double dy = pts.points[i][1] - my;
        const double d2 = dx * dx + dy * dy;
        if (d2 > far_d2) {
            far_d2 = d2;
            far = i;
        }
        if (d2 < near_d2) {
            near_d2 = d2;
            near = i;
        }
    }

    const Clustering a = Clustering::single_cluster(n);
    const Clustering b = relabel_point(a, far, 2);
    const Clustering c = relabel_point(a, near, 2);

    const SimilarityGraph sim = gaussian_similarity(pts);
    const AdjacencyGraph adj = threshold_adjacency(sim, eps);
    const TransitionModel tm(std::move(sim));

    GaussianTrialValues v{};
    v.vi_ab = vi(a, b, base);
    v.vi_ac = vi(a, c, base);
    v.rwi_ab = rwi(tm, a, b, base);
    v.rwi_ac = rwi(tm, a, c, base);
    v.vin_ab = vin(a, b, adj, base);
    v.vin_ac = vin(a, c, adj, base);
    return v;
}

}  // namespace

TrialSummary scenario_gaussian(std::size_t trials, std::size_t n, double eps,
                               std::uint64_t seed, LogBase base, unsigned threads) {
    if (trials < 1) {
        throw std::invalid_argument("need at least one trial");
    }
    if (n < 3) {
        throw std::invalid_argument("need at least three points per trial");
    }
    if (!(eps >= 0.0)) {
        throw std::invalid_argument("epsilon must be nonnegative");
    }

    TrialSummary summary;
    summary.trials = trials;
    summary.per_trial.resize(trials);

    // Every trial owns an independent RNG stream, so the partition across
    // threads cannot change any value; the reduction below runs in trial
    // order either way.
    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            summary.per_trial[t] = run_gaussian_trial(n, eps, derive_seed(seed, t), base);
        }
    };
    if (threads <= 1 || trials == 1) {
        run_range(0, trials);
    } else {
        const std::size_t workers = std::min<std::size_t>(threads, trials);
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> failures(workers);
        const std::size_t chunk = (trials + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                try {
                    run_range(w * chunk, std::min(trials, (w + 1) * chunk));
                } catch (...) {
                    failures[w] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
        for (const auto& failure : failures) {
            if (failure) {
                std::rethrow_exception(failure);
            }
        }
    }

    summary.rows.assign({{"vi", 0, 0, 0}, {"rwi", 0, 0, 0}, {"vin", 0, 0, 0}});
    for (const GaussianTrialValues& v : summary.per_trial) {
        const double ab[3] = {v.vi_ab, v.rwi_ab, v.vin_ab};
        const double ac[3] = {v.vi_ac, v.rwi_ac, v.vin_ac};
        for (std::size_t i = 0; i < 3; ++i) {
            summary.rows[i].mean_ab += ab[i];
            summary.rows[i].mean_ac += ac[i];
            if (ab[i] >= ac[i]) {
                ++summary.rows[i].errors;
            }
        }
    }
    for (TrialSummaryRow& row : summary.rows) {
        row.mean_ab /= static_cast<double>(trials);
        row.mean_ac /= static_cast<double>(trials);
    }
    return summary;
}

namespace {

constexpr std::size_t kGridRelabelCount = 100;

std::vector<std::size_t> grid_block(std::size_t width, std::size_t row0, std::size_t col0,
                                    std::size_t side) {
    std::vector<std::size_t> pixels;
    pixels.reserve(side * side);
    for (std::size_t r = row0; r < row0 + side; ++r) {
        for (std::size_t c = col0; c < col0 + side; ++c) {
            pixels.push_back(r * width + c);
        }
    }
    return pixels;
}

// Column-major fill starting at col0, stepping by +1 or -1 column.
std::vector<std::size_t> grid_column_strip(std::size_t height, std::size_t width,
                                           std::size_t col0, int col_step, std::size_t count) {
    std::vector<std::size_t> pixels;
    pixels.reserve(count);
    std::size_t col = col0;
    while (pixels.size() < count) {
        for (std::size_t r = 0; r < height && pixels.size() < count; ++r) {
            pixels.push_back(r * width + col);
        }
        col = static_cast<std::size_t>(static_cast<long long>(col) + col_step);
    }
    return pixels;
}

// Row-major fill of the columns [col0, width), starting at row0. Degenerates
// to a single horizontal line when the span is wide enough.
std::vector<std::size_t> grid_line(std::size_t width, std::size_t row0, std::size_t col0,
                                   std::size_t count) {
    std::vector<std::size_t> pixels;
    pixels.reserve(count);
    std::size_t row = row0;
    while (pixels.size() < count) {
        for (std::size_t c = col0; c < width && pixels.size() < count; ++c) {
            pixels.push_back(row * width + c);
        }
        ++row;
    }
    return pixels;
}

}  // namespace

ScenarioResult scenario_grid(std::size_t height, std::size_t width, GridVariant variant,
                             LogBase base) {
    const std::size_t boundary_col = width / 2;          // first column of region 2
    const std::size_t region_width = width - boundary_col;
    const std::size_t strip_cols = (kGridRelabelCount + height - 1) / height;
    const std::size_t line_col = boundary_col + region_width / 2;

    // Enough room for two disjoint 100-pixel perturbations inside region 2.
    bool fits = height * region_width >= 2 * kGridRelabelCount;
    switch (variant) {
        case GridVariant::square_block:
            fits = fits && height >= 10 && region_width >= 20;
            break;
        case GridVariant::boundary_strip:
            fits = fits && boundary_col + strip_cols <= width - strip_cols;
            break;
        case GridVariant::distant_line:
            fits = fits && boundary_col + strip_cols <= line_col &&
                   (width - line_col) * (height - height / 2) >= kGridRelabelCount;
            break;
    }
    if (!fits) {
        throw std::invalid_argument("grid too small for the 100-pixel perturbation");
    }

    std::vector<long long> raw(height * width);
    for (std::size_t r = 0; r < height; ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            raw[r * width + c] = c < boundary_col ? 1 : 2;
        }
    }
    const Clustering a = Clustering::from_labels(raw);

    std::vector<std::size_t> b_pixels;
    std::vector<std::size_t> c_pixels;
    switch (variant) {
        case GridVariant::square_block:
            b_pixels = grid_block(width, height / 2 - 5, boundary_col, 10);
            c_pixels = grid_block(width, height / 2 - 5, width - 10, 10);
            break;
        case GridVariant::boundary_strip:
            b_pixels = grid_column_strip(height, width, boundary_col, +1, kGridRelabelCount);
            c_pixels = grid_column_strip(height, width, width - 1, -1, kGridRelabelCount);
            break;
        case GridVariant::distant_line:
            b_pixels = grid_column_strip(height, width, boundary_col, +1, kGridRelabelCount);
            c_pixels = grid_line(width, height / 2, line_col, kGridRelabelCount);
            break;
    }
    const Clustering b = relabel_points(a, b_pixels, 1);
    const Clustering c = relabel_points(a, c_pixels, 1);

    GridGraphs graphs = grid_graphs(height, width, 5);
    const AdjacencyGraph adj = std::move(graphs.adjacency);
    const TransitionModel tm(std::move(graphs.similarity));

    ScenarioResult result;
    result.rows.push_back({"vi", vi(a, b, base), vi(a, c, base)});
    result.rows.push_back({"rwi", rwi(tm, a, b, base), rwi(tm, a, c, base)});
    result.rows.push_back({"vin", vin(a, b, adj, base), vin(a, c, adj, base)});
    return result;
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

namespace {

std::string header_line(const ConfigEcho& config) {
    std::string line = "#";
    for (const auto& [key, value] : config) {
        line += " " + key + "=" + value;
    }
    line += "\n";
    return line;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string format_rows(const std::vector<std::vector<std::string>>& rows, OutputFormat format) {
    std::string out;
    if (format == OutputFormat::tsv) {
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out += i == 0 ? row[i] : "\t" + row[i];
            }
            out += "\n";
        }
        return out;
    }
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            const bool last = i + 1 == row.size();
            out += last ? row[i] : pad(row[i], widths[i] + 2);
        }
        out += "\n";
    }
    return out;
}

}  // namespace

std::string format_scenario_report(const ScenarioResult& result, const ConfigEcho& config,
                                   OutputFormat format) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"index", "d(A,B)", "d(A,C)", "closer"});
    for (const IndexComparison& row : result.rows) {
        rows.push_back({row.index, format_value(row.d_ab), format_value(row.d_ac),
                        verdict_name(verdict(row))});
    }
    return header_line(config) + format_rows(rows, format);
}

std::string format_summary_report(const TrialSummary& summary, const ConfigEcho& config,
                                  OutputFormat format, bool per_trial_columns) {
    std::vector<std::vector<std::string>> rows;
    if (per_trial_columns) {
        rows.push_back({"trial", "vi_ab", "vi_ac", "rwi_ab", "rwi_ac", "vin_ab", "vin_ac"});
        for (std::size_t t = 0; t < summary.per_trial.size(); ++t) {
            const GaussianTrialValues& v = summary.per_trial[t];
            rows.push_back({std::to_string(t), format_value(v.vi_ab), format_value(v.vi_ac),
                            format_value(v.rwi_ab), format_value(v.rwi_ac),
                            format_value(v.vin_ab), format_value(v.vin_ac)});
        }
    } else {
        rows.push_back({"index", "mean d(A,B)", "mean d(A,C)", "errors"});
        for (const TrialSummaryRow& row : summary.rows) {
            rows.push_back({row.index, format_value(row.mean_ab), format_value(row.mean_ac),
                            std::to_string(row.errors)});
        }
    }
    return header_line(config) + format_rows(rows, format);
}

}  // namespace cluscomp
