#include "rrt/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "rrt/centrality.hpp"
#include "rrt/parallel.hpp"

namespace rrt {

namespace {

// Exact integer tallies; the mean and standard error are derived at the end,
// so the result does not depend on summation order.
class Moments {
public:
    void add(std::uint64_t x) noexcept {
        ++count_;
        sum_ += x;
        sum_sq_ += static_cast<unsigned __int128>(x) * x;
    }
    double mean() const noexcept { return static_cast<double>(sum_) / static_cast<double>(count_); }
    /// Sample standard deviation over sqrt(count).
    double std_error() const noexcept {
        if (count_ < 2) return 0.0;
        const auto n = static_cast<unsigned __int128>(count_);
        const unsigned __int128 numerator = n * sum_sq_ - sum_ * sum_;
        const long double var =
            static_cast<long double>(numerator) / (static_cast<long double>(count_) * static_cast<long double>(count_ - 1));
        return static_cast<double>(std::sqrt(var / static_cast<long double>(count_)));
    }
    std::uint64_t count() const noexcept { return count_; }

private:
    std::uint64_t count_ = 0;
    unsigned __int128 sum_ = 0;
    unsigned __int128 sum_sq_ = 0;
};

template <class Value>
Moments moments_over(const RankSample& sample, Value&& value) {
    Moments m;
    for (std::uint64_t r = 0; r < sample.reps(); ++r) m.add(value(r));
    return m;
}

ResultRecord record(const RankSample& sample, std::size_t m, std::string statistic, std::string param,
                    double estimate, double std_error, std::uint64_t seed) {
    return {sample.measures()[m].name(), sample.n(), std::move(statistic), std::move(param), estimate, std_error,
            sample.reps(), seed};
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t k = values.size();
    return k % 2 ? values[k / 2] : 0.5 * (values[k / 2 - 1] + values[k / 2]);
}

bool is_betweenness(const Measure& m) {
    return m.kind == MeasureKind::BetweennessSq || m.kind == MeasureKind::BetweennessPairs ||
           m.kind == MeasureKind::BetweennessQ;
}

std::uint64_t require_seed(const ExperimentConfig& config) {
    if (!config.seed) throw ConfigError("missing required key 'seed'");
    return *config.seed;
}

using Summarizer = std::function<void(const RankSample&, std::uint64_t, std::vector<ResultRecord>&)>;

ExperimentResult run_static(const ExperimentConfig& config, const std::vector<Summarizer>& summarizers) {
    validate(config);
    const std::uint64_t seed = require_seed(config);
    const auto start = std::chrono::steady_clock::now();
    ExperimentResult result;
    result.config = config;
    result.hash = config_hash(config);
    for (const auto n : config.n_values) {
        const RankSample sample = simulate_ranks(n, config.measures, config.reps, seed, config.workers);
        for (const auto& summarize : summarizers) summarize(sample, seed, result.records);
    }
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace

const ResultRecord& ExperimentResult::find(const std::string& measure, std::uint64_t n, const std::string& statistic,
                                           const std::string& param) const {
    for (const auto& r : records) {
        if (r.measure == measure && r.n == n && r.statistic == statistic && r.param == param) return r;
    }
    throw std::out_of_range("no record " + measure + "/" + std::to_string(n) + "/" + statistic + "/" + param);
}

void run_replicate(RankSample& sample, std::uint64_t rep, std::uint64_t seed) {
    RngStream rng(seed, replicate_stream(sample.n(), rep));
    const RecursiveTree tree = grow_urrt(sample.n(), rng);
    const SubtreeSizes sizes = subtree_sizes(tree);
    for (std::size_t m = 0; m < sample.measures().size(); ++m) {
        const CentralityProfile profile = compute_profile(tree, sizes, sample.measures()[m]);
        const CenterReport report = center_report(profile);
        sample.root_rank(rep, m) = report.root_rank;
        sample.center_index(rep, m) = report.center_index;
    }
}

RankSample simulate_ranks_serial(std::uint64_t n, const std::vector<Measure>& measures, std::uint64_t reps,
                                 std::uint64_t seed) {
    RankSample sample(n, measures, reps);
    for (std::uint64_t r = 0; r < reps; ++r) run_replicate(sample, r, seed);
    return sample;
}

RankSample simulate_ranks(std::uint64_t n, const std::vector<Measure>& measures, std::uint64_t reps,
                          std::uint64_t seed, unsigned workers) {
    if (workers <= 1) return simulate_ranks_serial(n, measures, reps, seed);
    RankSample sample(n, measures, reps);
    parallel_for(reps, workers, [&](std::uint64_t r) { run_replicate(sample, r, seed); });
    return sample;
}

void summarize_root_center_probability(const RankSample& sample, std::uint64_t seed, std::vector<ResultRecord>& out) {
    for (std::size_t m = 0; m < sample.measures().size(); ++m) {
        const auto mom = moments_over(sample, [&](std::uint64_t r) { return sample.root_rank(r, m) == 1 ? 1u : 0u; });
        out.push_back(record(sample, m, "root_is_center", "", mom.mean(), mom.std_error(), seed));
    }
}

void summarize_expected_rank(const RankSample& sample, std::uint64_t seed, std::vector<ResultRecord>& out) {
    for (std::size_t m = 0; m < sample.measures().size(); ++m) {
        const auto mom = moments_over(sample, [&](std::uint64_t r) { return sample.root_rank(r, m); });
        out.push_back(record(sample, m, "mean_root_rank", "", mom.mean(), mom.std_error(), seed));
    }
}

void summarize_expected_center_index(const RankSample& sample, std::uint64_t seed, std::vector<ResultRecord>& out) {
    for (std::size_t m = 0; m < sample.measures().size(); ++m) {
        const auto mom = moments_over(sample, [&](std::uint64_t r) { return sample.center_index(r, m); });
        out.push_back(record(sample, m, "mean_center_index", "", mom.mean(), mom.std_error(), seed));
    }
}

void summarize_rank_tail(const RankSample& sample, const std::vector<std::uint64_t>& x_grid, std::uint64_t seed,
                         std::vector<ResultRecord>& out) {
    for (std::size_t m = 0; m < sample.measures().size(); ++m) {
        for (const auto x : x_grid) {
            if (x > sample.n()) break;
            const auto mom = moments_over(sample, [&](std::uint64_t r) { return sample.root_rank(r, m) > x ? 1u : 0u; });
            const auto scale = static_cast<double>(x);
            out.push_back(record(sample, m, "rank_tail", std::to_string(x), mom.mean(), mom.std_error(), seed));
            out.push_back(record(sample, m, "x_times_rank_tail", std::to_string(x), scale * mom.mean(),
                                 scale * mom.std_error(), seed));
        }
    }
}

double betweenness_index_envelope(std::uint64_t k) {
    const auto kd = static_cast<double>(k);
    return 16.0 * (kd / 3.0 + 1.0) * std::pow(0.75, kd);
}

void summarize_index_tail(const RankSample& sample, const std::vector<std::uint64_t>& k_grid, std::uint64_t seed,
                          std::vector<ResultRecord>& out) {
    constexpr std::uint64_t kBatches = 20;
    for (std::size_t m = 0; m < sample.measures().size(); ++m) {
        for (const auto k : k_grid) {
            if (k > sample.n()) break;
            const auto mom =
                moments_over(sample, [&](std::uint64_t r) { return sample.center_index(r, m) >= k ? 1u : 0u; });
            out.push_back(record(sample, m, "index_tail", std::to_string(k), mom.mean(), mom.std_error(), seed));
            if (is_betweenness(sample.measures()[m])) {
                out.push_back(record(sample, m, "index_tail_envelope", std::to_string(k),
                                     betweenness_index_envelope(k), 0.0, seed));
            }
        }
        if (sample.n() < 2) continue;
        const double log_n = std::log(static_cast<double>(sample.n()));
        std::vector<double> ratio(sample.reps());
        for (std::uint64_t r = 0; r < sample.reps(); ++r) {
            ratio[r] = std::log(static_cast<double>(sample.center_index(r, m))) / log_n;
        }
        // Standard error of the median from the spread of batch medians.
        double std_error = 0.0;
        if (sample.reps() >= 2 * kBatches) {
            const std::uint64_t per = sample.reps() / kBatches;
            std::vector<double> batch_medians;
            for (std::uint64_t b = 0; b < kBatches; ++b) {
                batch_medians.push_back(median({ratio.begin() + static_cast<std::ptrdiff_t>(b * per),
                                                ratio.begin() + static_cast<std::ptrdiff_t>((b + 1) * per)}));
            }
            double mean = 0.0;
            for (double x : batch_medians) mean += x;
            mean /= kBatches;
            double ss = 0.0;
            for (double x : batch_medians) ss += (x - mean) * (x - mean);
            std_error = std::sqrt(ss / (kBatches - 1) / kBatches);
        }
        out.push_back(record(sample, m, "median_log_index_ratio", "", median(ratio), std_error, seed));
    }
}

void summarize_confidence_coverage(const RankSample& sample, const std::vector<std::uint64_t>& k_grid,
                                   std::uint64_t seed, std::vector<ResultRecord>& out) {
    for (std::size_t m = 0; m < sample.measures().size(); ++m) {
        for (const auto k : k_grid) {
            if (k > sample.n()) break;
            const auto mom = moments_over(sample, [&](std::uint64_t r) { return sample.root_rank(r, m) <= k ? 1u : 0u; });
            out.push_back(record(sample, m, "root_coverage", std::to_string(k), mom.mean(), mom.std_error(), seed));
        }
    }
}

ExperimentResult estimate_root_center_probability(const ExperimentConfig& config) {
    return run_static(config, {summarize_root_center_probability});
}

ExperimentResult estimate_expected_rank(const ExperimentConfig& config) {
    return run_static(config, {summarize_expected_rank});
}

ExperimentResult estimate_expected_center_index(const ExperimentConfig& config) {
    return run_static(config, {summarize_expected_center_index});
}

ExperimentResult estimate_rank_tail(const ExperimentConfig& config) {
    return run_static(config, {[&](const RankSample& s, std::uint64_t seed, std::vector<ResultRecord>& out) {
                          summarize_rank_tail(s, config.x_grid, seed, out);
                      }});
}

ExperimentResult estimate_index_tail(const ExperimentConfig& config) {
    return run_static(config, {[&](const RankSample& s, std::uint64_t seed, std::vector<ResultRecord>& out) {
                          summarize_index_tail(s, config.k_grid, seed, out);
                      }});
}

ExperimentResult confidence_coverage(const ExperimentConfig& config) {
    return run_static(config, {[&](const RankSample& s, std::uint64_t seed, std::vector<ResultRecord>& out) {
                          summarize_confidence_coverage(s, config.coverage_grid, seed, out);
                      }});
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    switch (config.experiment) {
        case ExperimentKind::RootCenterProbability: return estimate_root_center_probability(config);
        case ExperimentKind::ExpectedRank: return estimate_expected_rank(config);
        case ExperimentKind::ExpectedCenterIndex: return estimate_expected_center_index(config);
        case ExperimentKind::RankTail: return estimate_rank_tail(config);
        case ExperimentKind::IndexTail: return estimate_index_tail(config);
        case ExperimentKind::ConfidenceCoverage: return confidence_coverage(config);
        case ExperimentKind::Survey:
            return run_static(
                config, {summarize_root_center_probability, summarize_expected_rank, summarize_expected_center_index,
                         [&](const RankSample& s, std::uint64_t seed, std::vector<ResultRecord>& out) {
                             summarize_rank_tail(s, config.x_grid, seed, out);
                             summarize_index_tail(s, config.k_grid, seed, out);
                             summarize_confidence_coverage(s, config.coverage_grid, seed, out);
                         }});
        case ExperimentKind::Persistence: return run_persistence(config).summary;
    }
    throw ConfigError("unknown experiment");
}

}  // namespace rrt
