#ifndef RRT_CENTRALITY_HPP
#define RRT_CENTRALITY_HPP

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "rrt/measure.hpp"
#include "rrt/tree.hpp"

namespace rrt {

// All score arrays are indexed by label; entry 0 is unused and zero.

/// Size of the largest component left after deleting each vertex.
std::vector<std::int64_t> jordan_scores(const RecursiveTree& tree, const SubtreeSizes& sizes);

/// Sum of distances to all other vertices, by rerooting from vertex 1.
std::vector<std::int64_t> closeness_scores(const RecursiveTree& tree, const SubtreeSizes& sizes);

/// Sum over the components of T minus v of (component size)^q.
/// Throws NumericGuardError when n^q does not fit in 64 bits, and
/// std::invalid_argument for q < 2.
std::vector<std::int64_t> betweenness_q_scores(const RecursiveTree& tree, const SubtreeSizes& sizes,
                                               unsigned q = 2);

/// Number of unordered pairs {s, t} whose path passes through v as an interior vertex.
std::vector<std::int64_t> betweenness_pairs_scores(const RecursiveTree& tree, const SubtreeSizes& sizes);

std::vector<std::int64_t> degree_scores(const RecursiveTree& tree);

/// Rumor centrality kept as log(phi), with exact comparison on near ties.
///
/// phi(v) is the product of subtree sizes of the tree rooted at v.  Moving the
/// root across an edge (p, u) multiplies phi by (n - size[u]) / size[u], so the
/// ratio phi(a) / phi(b) is a telescoping product along the a-b path and can be
/// compared exactly with big integers.
class RumorScores {
public:
    RumorScores(const RecursiveTree& tree, const SubtreeSizes& sizes);

    std::span<const double> log_scores() const noexcept { return log_phi_; }
    double log_score(Vertex v) const noexcept { return log_phi_[v]; }
    std::size_t size() const noexcept { return parent_.size() - 1; }

    /// Log differences below this are re-checked exactly.
    double tie_tolerance() const noexcept { return tie_tolerance_; }

    /// Sign of phi(a) - phi(b): the log-space answer when it is unambiguous,
    /// the exact telescoping comparison otherwise.
    int compare(Vertex a, Vertex b) const;

    /// Sign of phi(a) - phi(b), always by exact integer arithmetic.
    int compare_exact(Vertex a, Vertex b) const;

private:
    std::int64_t n_;
    double tie_tolerance_;
    std::vector<Vertex> parent_;
    std::vector<std::int64_t> size_;
    std::vector<std::int64_t> depth_;
    std::vector<double> log_phi_;
};

RumorScores rumor_scores(const RecursiveTree& tree, const SubtreeSizes& sizes);

/// Natural log of k, served from a per-thread table.
double log_of(std::int64_t k);

/// Per-vertex scores for one measure with a centrality comparison.
class CentralityProfile {
public:
    CentralityProfile(Measure measure, std::vector<std::int64_t> scores)
        : measure_(measure), scores_(std::move(scores)) {}
    explicit CentralityProfile(RumorScores rumor) : measure_{MeasureKind::Rumor}, scores_(std::move(rumor)) {}

    const Measure& measure() const noexcept { return measure_; }
    std::size_t size() const noexcept;

    /// Negative if u is strictly more central than v, zero on an exact tie of
    /// raw scores, positive otherwise.  Labels play no part here.
    int compare(Vertex u, Vertex v) const;

    bool has_integer_scores() const noexcept { return std::holds_alternative<std::vector<std::int64_t>>(scores_); }
    std::span<const std::int64_t> integer_scores() const { return std::get<std::vector<std::int64_t>>(scores_); }
    const RumorScores& rumor() const { return std::get<RumorScores>(scores_); }

private:
    Measure measure_;
    std::variant<std::vector<std::int64_t>, RumorScores> scores_;
};

CentralityProfile compute_profile(const RecursiveTree& tree, const SubtreeSizes& sizes, Measure measure);

struct CenterReport {
    Vertex center_index = kNoVertex;     // I_n, the rank-1 vertex
    std::uint64_t root_rank = 0;         // R_n, position of vertex 1
    std::vector<Vertex> tied_center_set; // vertices sharing the best raw score, ascending
};

/// rank[v] for every label: central-first, ties ordered by descending label.
/// The returned vector has length n + 1 and rank[0] = 0.
std::vector<std::uint32_t> rank_vertices(const CentralityProfile& profile);

/// Same center and root rank as rank_vertices would give, in one linear scan.
CenterReport center_report(const CentralityProfile& profile);

/// The K vertices of rank at most K, listed by rank.
std::vector<Vertex> confidence_set(std::span<const std::uint32_t> rank, std::size_t k);

}  // namespace rrt

#endif  // RRT_CENTRALITY_HPP
