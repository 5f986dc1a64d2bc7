#include <algorithm>
#include <chrono>
#include <cmath>

#include "rrt/experiments.hpp"
#include "rrt/incremental.hpp"
#include "rrt/parallel.hpp"

namespace rrt {

namespace {

bool centroid_based(MeasureKind kind) {
    return kind == MeasureKind::Jordan || kind == MeasureKind::Closeness || kind == MeasureKind::Rumor;
}

bool in_last_half(std::uint64_t change, std::uint64_t checkpoint) { return change != 0 && 2 * change > checkpoint; }

}  // namespace

bool PersistenceRecord::center_changed_in_last_half(std::size_t measure, std::size_t checkpoint,
                                                    const std::vector<std::uint64_t>& checkpoints) const {
    return in_last_half(tracks[measure].center_change_at_checkpoint[checkpoint], checkpoints[checkpoint]);
}

bool PersistenceRecord::rank_changed_in_last_half(std::size_t measure, std::size_t checkpoint,
                                                  const std::vector<std::uint64_t>& checkpoints) const {
    return in_last_half(tracks[measure].rank_change_at_checkpoint[checkpoint], checkpoints[checkpoint]);
}

PersistenceRecord run_trajectory(const ExperimentConfig& config, std::uint64_t trajectory, bool keep_sequence) {
    if (!config.seed) throw ConfigError("missing required key 'seed'");
    const std::uint64_t stride = config.effective_stride();
    const auto& measures = config.measures;

    PersistenceRecord record;
    record.trajectory = trajectory;
    record.horizon = config.horizon;
    record.tracks.resize(measures.size());

    IncrementalCentrality tracker;
    RngStream rng(*config.seed, trajectory);
    std::size_t next_checkpoint = 0;

    for (std::uint64_t n = 2; n <= config.horizon; ++n) {
        tracker.grow(rng);
        const bool full = n % stride == 0;
        for (std::size_t m = 0; m < measures.size(); ++m) {
            const MeasureKind kind = measures[m].kind;
            MeasureTrack& track = record.tracks[m];
            const bool cheap = kind == MeasureKind::Degree;
            if (full || cheap || centroid_based(kind)) {
                const std::uint64_t center = tracker.center_index(kind);
                if (center != track.center_index) {
                    track.center_index = center;
                    track.last_center_change = n;
                }
            }
            if (full || cheap) {
                const std::uint64_t rank = tracker.root_rank(kind);
                if (rank != track.root_rank) {
                    track.root_rank = rank;
                    track.last_rank_change = n;
                }
            }
            if (keep_sequence && full) {
                record.sequence.push_back({n, static_cast<std::uint32_t>(m), track.center_index, track.root_rank});
            }
        }
        if (next_checkpoint < config.checkpoints.size() && n == config.checkpoints[next_checkpoint]) {
            for (auto& track : record.tracks) {
                track.center_change_at_checkpoint.push_back(track.last_center_change);
                track.rank_change_at_checkpoint.push_back(track.last_rank_change);
            }
            ++next_checkpoint;
        }
    }
    return record;
}

PersistenceOutcome run_persistence(const ExperimentConfig& config, bool keep_sequences) {
    validate(config);
    if (config.experiment != ExperimentKind::Persistence) throw ConfigError("key 'experiment': expected persistence");
    if (!config.seed) throw ConfigError("missing required key 'seed'");
    const auto start = std::chrono::steady_clock::now();

    PersistenceOutcome outcome;
    outcome.records.resize(config.reps);
    parallel_for(config.reps, config.workers, [&](std::uint64_t t) {
        outcome.records[t] = run_trajectory(config, t, keep_sequences);
    });

    ExperimentResult& summary = outcome.summary;
    summary.config = config;
    summary.hash = config_hash(config);
    const auto reps = static_cast<double>(config.reps);
    for (std::size_t c = 0; c < config.checkpoints.size(); ++c) {
        const std::uint64_t checkpoint = config.checkpoints[c];
        for (std::size_t m = 0; m < config.measures.size(); ++m) {
            std::uint64_t center_changes = 0;
            std::uint64_t rank_changes = 0;
            double center_time = 0.0;
            double rank_time = 0.0;
            double center_time_sq = 0.0;
            double rank_time_sq = 0.0;
            for (const auto& rec : outcome.records) {
                center_changes += rec.center_changed_in_last_half(m, c, config.checkpoints) ? 1 : 0;
                rank_changes += rec.rank_changed_in_last_half(m, c, config.checkpoints) ? 1 : 0;
                const auto ct = static_cast<double>(rec.tracks[m].center_change_at_checkpoint[c]);
                const auto rt = static_cast<double>(rec.tracks[m].rank_change_at_checkpoint[c]);
                center_time += ct;
                rank_time += rt;
                center_time_sq += ct * ct;
                rank_time_sq += rt * rt;
            }
            auto proportion = [&](std::uint64_t count, const char* statistic) {
                const double p = static_cast<double>(count) / reps;
                const double se = config.reps > 1 ? std::sqrt(p * (1 - p) / (reps - 1)) : 0.0;
                summary.records.push_back({config.measures[m].name(), checkpoint, statistic, "", p, se, config.reps,
                                           *config.seed});
            };
            proportion(center_changes, "center_change_last_half");
            proportion(rank_changes, "rank_change_last_half");
            auto mean = [&](double sum, double sum_sq, const char* statistic) {
                const double mu = sum / reps;
                const double var = config.reps > 1 ? std::max(0.0, (sum_sq - reps * mu * mu) / (reps - 1)) : 0.0;
                summary.records.push_back({config.measures[m].name(), checkpoint, statistic, "", mu,
                                           std::sqrt(var / reps), config.reps, *config.seed});
            };
            mean(center_time, center_time_sq, "mean_last_center_change");
            mean(rank_time, rank_time_sq, "mean_last_rank_change");
        }
    }
    summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return outcome;
}

}  // namespace rrt
