#ifndef RRT_URNS_HPP
#define RRT_URNS_HPP

#include <cstdint>
#include <vector>

#include "rrt/rng.hpp"
#include "rrt/tree.hpp"

namespace rrt {

// ---------------------------------------------------------------------------
// Two-colour Polya-Eggenberger urn started from (a, 1).

struct PolyaState {
    std::int64_t x = 1;
    std::int64_t y = 1;
    std::int64_t t = 0;

    friend bool operator==(const PolyaState&, const PolyaState&) = default;
};

/// Draws a ball with probability proportional to its colour count and
/// returns it together with a new ball of the same colour.
PolyaState polya_step(PolyaState state, RngStream& rng);

/// States at t = 0..steps (steps + 1 entries). Throws for a < 1.
std::vector<PolyaState> polya_run(std::int64_t a, std::int64_t steps, RngStream& rng);

/// True if x_t / (a + 1 + t) < threshold for some t in [0, horizon].
bool polya_hits_diagonal(std::int64_t a, double threshold, std::int64_t horizon, RngStream& rng);

struct HitEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t hits = 0;
    std::uint64_t reps = 0;
    std::int64_t horizon = 0;  // a finite horizon only lower-bounds the all-time event
};

/// Monte Carlo estimate of the diagonal-hitting probability; replicate r
/// uses stream (seed, r).
HitEstimate polya_diagonal_hit_estimate(std::int64_t a, double threshold, std::int64_t horizon,
                                        std::uint64_t reps, std::uint64_t seed, unsigned workers = 1);

// ---------------------------------------------------------------------------
// Hoppe urn: one black ball; drawing it adds a ball of a brand-new colour.

struct HoppeSnapshot {
    std::int64_t t = 0;
    std::int64_t num_colors = 0;
    std::int64_t leader = -1;  // colour index in birth order, -1 before the first draw
    std::int64_t leader_count = 0;
};

class HoppeUrn {
public:
    HoppeUrn() = default;

    /// One draw; returns the colour that received a ball.
    std::int64_t step(RngStream& rng);

    std::int64_t t() const noexcept { return t_; }
    const std::vector<std::int64_t>& colors() const noexcept { return counts_; }
    const std::vector<std::int64_t>& birth_times() const noexcept { return births_; }
    std::int64_t leader() const noexcept { return leader_; }
    HoppeSnapshot snapshot() const;

private:
    std::int64_t t_ = 0;
    std::vector<std::int64_t> counts_;
    std::vector<std::int64_t> births_;
    std::vector<std::int64_t> ball_color_;  // colour of each non-black ball
    std::int64_t leader_ = -1;
};

struct HoppeRun {
    std::vector<HoppeSnapshot> trajectory;  // t = 1..steps, empty unless requested
    std::vector<std::int64_t> leader_changes;  // times at which the leading colour switched
    std::int64_t steps = 0;
    std::int64_t final_colors = 0;
};

/// Leader ties go to the earliest-born colour. Throws for steps < 1.
HoppeRun hoppe_run(std::int64_t steps, RngStream& rng, bool record_trajectory = true);

// ---------------------------------------------------------------------------
// max-Dickman-Goncharov law: max{U1, (1-U1)U2, (1-U1)(1-U2)U3, ...}

struct DickmanSample {
    double value = 0.0;
    std::int64_t draws = 0;
    double remainder = 0.0;  // prefix product left when sampling stopped, < value
};

/// Exact sampler: stops once the remaining prefix product is below the running
/// maximum, since no later term can exceed it.
DickmanSample sample_dickman(RngStream& rng);

/// Largest subtree hanging off the root, as a fraction of n. Throws for n < 2.
double max_subtree_fraction(const RecursiveTree& tree, const SubtreeSizes& sizes);

}  // namespace rrt

#endif  // RRT_URNS_HPP
