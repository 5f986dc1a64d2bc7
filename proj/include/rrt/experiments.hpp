#ifndef RRT_EXPERIMENTS_HPP
#define RRT_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rrt/measure.hpp"
#include "rrt/tree.hpp"

namespace rrt {

/// Raised for invalid or incomplete experiment configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ExperimentKind {
    RootCenterProbability,
    ExpectedRank,
    ExpectedCenterIndex,
    RankTail,
    IndexTail,
    ConfidenceCoverage,
    Survey,  // every static statistic from one set of trees
    Persistence,
};

std::string experiment_name(ExperimentKind kind);
ExperimentKind parse_experiment(const std::string& name);

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::Survey;
    std::vector<Measure> measures = standard_measures();
    std::vector<std::uint64_t> n_values;
    std::uint64_t reps = 0;
    std::optional<std::uint64_t> seed;
    unsigned workers = 1;
    std::vector<std::uint64_t> x_grid{1, 2, 5, 10, 20, 50, 100, 200, 500, 1000, 10000, 100000};
    std::vector<std::uint64_t> k_grid{1, 2, 3, 5, 10, 15, 20, 50, 100};
    std::vector<std::uint64_t> coverage_grid{1, 2, 5, 10, 20, 50, 100, 330, 1000};
    // Persistence only.
    std::uint64_t horizon = 0;
    std::vector<std::uint64_t> checkpoints;  // parse_config fills in {horizon}
    std::uint64_t stride = 0;                // 0 = 1 when horizon <= 10^4, else 16
    std::string output;
    std::string trajectory_output;

    std::uint64_t effective_stride() const noexcept {
        return stride != 0 ? stride : (horizon <= 10'000 ? 1 : 16);
    }
};

/// Parses flat "key = value" text. '#' starts a comment. Unknown keys,
/// malformed values and missing required keys raise ConfigError naming the key.
/// The seed may be absent here and supplied later; run_experiment rejects a
/// config without one.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// Checks cross-field constraints (required keys, grid order, stride).
void validate(const ExperimentConfig& config);

/// Every key with its resolved value, in a fixed order. Workers and output
/// paths are left out because they do not influence results.
std::vector<std::pair<std::string, std::string>> resolved_entries(const ExperimentConfig& config);

/// FNV-1a over the resolved entries.
std::uint64_t config_hash(const ExperimentConfig& config);

struct ResultRecord {
    std::string measure;
    std::uint64_t n = 0;
    std::string statistic;
    std::string param;
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t reps = 0;
    std::uint64_t seed = 0;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<ResultRecord> records;
    std::uint64_t hash = 0;
    double wall_seconds = 0.0;

    /// First record matching all given fields; throws std::out_of_range if none.
    const ResultRecord& find(const std::string& measure, std::uint64_t n, const std::string& statistic,
                             const std::string& param = "") const;
};

// ---------------------------------------------------------------------------
// Replicate kernels.

/// Stream id of replicate `rep` for tree size n.
constexpr std::uint64_t replicate_stream(std::uint64_t n, std::uint64_t rep) noexcept { return (n << 32) | rep; }

/// Center index and root rank for each measure over `reps` independent trees.
class RankSample {
public:
    RankSample(std::uint64_t n, std::vector<Measure> measures, std::uint64_t reps)
        : n_(n), measures_(std::move(measures)), reps_(reps), root_rank_(reps * measures_.size()),
          center_index_(reps * measures_.size()) {}

    std::uint64_t n() const noexcept { return n_; }
    std::uint64_t reps() const noexcept { return reps_; }
    const std::vector<Measure>& measures() const noexcept { return measures_; }

    std::uint64_t& root_rank(std::uint64_t rep, std::size_t m) { return root_rank_[rep * measures_.size() + m]; }
    std::uint64_t root_rank(std::uint64_t rep, std::size_t m) const { return root_rank_[rep * measures_.size() + m]; }
    std::uint64_t& center_index(std::uint64_t rep, std::size_t m) { return center_index_[rep * measures_.size() + m]; }
    std::uint64_t center_index(std::uint64_t rep, std::size_t m) const {
        return center_index_[rep * measures_.size() + m];
    }

    friend bool operator==(const RankSample&, const RankSample&) = default;

private:
    std::uint64_t n_;
    std::vector<Measure> measures_;
    std::uint64_t reps_;
    std::vector<std::uint64_t> root_rank_;
    std::vector<std::uint64_t> center_index_;
};

/// Fills one replicate slot from a freshly grown tree.
void run_replicate(RankSample& sample, std::uint64_t rep, std::uint64_t seed);

/// Plain loop over replicates; the reference the parallel kernel must match.
RankSample simulate_ranks_serial(std::uint64_t n, const std::vector<Measure>& measures, std::uint64_t reps,
                                 std::uint64_t seed);

/// OpenMP loop over replicates. Identical output to the serial kernel.
RankSample simulate_ranks(std::uint64_t n, const std::vector<Measure>& measures, std::uint64_t reps,
                          std::uint64_t seed, unsigned workers);

// Statistics over a RankSample; each appends records for every measure.
void summarize_root_center_probability(const RankSample& sample, std::uint64_t seed, std::vector<ResultRecord>& out);
void summarize_expected_rank(const RankSample& sample, std::uint64_t seed, std::vector<ResultRecord>& out);
void summarize_expected_center_index(const RankSample& sample, std::uint64_t seed, std::vector<ResultRecord>& out);
void summarize_rank_tail(const RankSample& sample, const std::vector<std::uint64_t>& x_grid, std::uint64_t seed,
                         std::vector<ResultRecord>& out);
void summarize_index_tail(const RankSample& sample, const std::vector<std::uint64_t>& k_grid, std::uint64_t seed,
                          std::vector<ResultRecord>& out);
void summarize_confidence_coverage(const RankSample& sample, const std::vector<std::uint64_t>& k_grid,
                                   std::uint64_t seed, std::vector<ResultRecord>& out);

/// Upper envelope 16 (k/3 + 1) (3/4)^k on P(I_n >= k) for the betweenness center.
double betweenness_index_envelope(std::uint64_t k);

ExperimentResult estimate_root_center_probability(const ExperimentConfig& config);
ExperimentResult estimate_expected_rank(const ExperimentConfig& config);
ExperimentResult estimate_expected_center_index(const ExperimentConfig& config);
ExperimentResult estimate_rank_tail(const ExperimentConfig& config);
ExperimentResult estimate_index_tail(const ExperimentConfig& config);
ExperimentResult confidence_coverage(const ExperimentConfig& config);

// ---------------------------------------------------------------------------
// Persistence.

struct TrajectoryPoint {
    std::uint64_t n = 0;
    std::uint32_t measure = 0;  // index into the config's measure list
    std::uint64_t center_index = 0;
    std::uint64_t root_rank = 0;
};

struct MeasureTrack {
    std::uint64_t center_index = 1;
    std::uint64_t root_rank = 1;
    std::uint64_t last_center_change = 0;  // 0 when never changed
    std::uint64_t last_rank_change = 0;
    // Last change observed up to each checkpoint, in checkpoint order.
    std::vector<std::uint64_t> center_change_at_checkpoint;
    std::vector<std::uint64_t> rank_change_at_checkpoint;
};

struct PersistenceRecord {
    std::uint64_t trajectory = 0;
    std::uint64_t horizon = 0;
    std::vector<MeasureTrack> tracks;      // one per measure
    std::vector<TrajectoryPoint> sequence; // filled only when requested

    /// Whether the last change up to checkpoint N falls in (N/2, N].
    bool center_changed_in_last_half(std::size_t measure, std::size_t checkpoint,
                                     const std::vector<std::uint64_t>& checkpoints) const;
    bool rank_changed_in_last_half(std::size_t measure, std::size_t checkpoint,
                                   const std::vector<std::uint64_t>& checkpoints) const;
};

/// Grows one tree from n = 1 to the horizon. Centroid and degree statistics are
/// read every step; other root ranks and the betweenness center every `stride`
/// steps.
PersistenceRecord run_trajectory(const ExperimentConfig& config, std::uint64_t trajectory, bool keep_sequence);

struct PersistenceOutcome {
    ExperimentResult summary;
    std::vector<PersistenceRecord> records;
};

PersistenceOutcome run_persistence(const ExperimentConfig& config, bool keep_sequences = false);

/// Dispatches on config.experiment.
ExperimentResult run_experiment(const ExperimentConfig& config);

// ---------------------------------------------------------------------------
// Output.

/// CSV with '#' metadata lines echoing the resolved config, then
/// measure,n,statistic,param,estimate,stderr,reps,seed.  Depends only on the
/// config (not worker count or timing), so reruns are byte-identical.
void write_result_csv(std::ostream& out, const ExperimentResult& result);

/// JSON mirror including workers, wall time and the config hash.
void write_result_json(std::ostream& out, const ExperimentResult& result);

/// replicate,n,measure,I,R rows for every recorded trajectory point.
void write_trajectory_csv(std::ostream& out, const ExperimentConfig& config,
                          const std::vector<PersistenceRecord>& records);

/// %.12g formatting used by every numeric output.
std::string format_number(double value);

}  // namespace rrt

#endif  // RRT_EXPERIMENTS_HPP
