#include "rrt/urns.hpp"

#include <cmath>
#include <stdexcept>

#include "rrt/parallel.hpp"

namespace rrt {

PolyaState polya_step(PolyaState state, RngStream& rng) {
    if (static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(state.x + state.y))) < state.x) {
        ++state.x;
    } else {
        ++state.y;
    }
    ++state.t;
    return state;
}

std::vector<PolyaState> polya_run(std::int64_t a, std::int64_t steps, RngStream& rng) {
    if (a < 1) throw std::invalid_argument("Polya urn needs a >= 1");
    if (steps < 0) throw std::invalid_argument("steps must be non-negative");
    std::vector<PolyaState> out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    PolyaState state{a, 1, 0};
    out.push_back(state);
    for (std::int64_t i = 0; i < steps; ++i) {
        state = polya_step(state, rng);
        out.push_back(state);
    }
    return out;
}

bool polya_hits_diagonal(std::int64_t a, double threshold, std::int64_t horizon, RngStream& rng) {
    if (a < 1) throw std::invalid_argument("Polya urn needs a >= 1");
    PolyaState state{a, 1, 0};
    while (true) {
        if (static_cast<double>(state.x) < threshold * static_cast<double>(state.x + state.y)) return true;
        if (state.t >= horizon) return false;
        state = polya_step(state, rng);
    }
}

HitEstimate polya_diagonal_hit_estimate(std::int64_t a, double threshold, std::int64_t horizon,
                                        std::uint64_t reps, std::uint64_t seed, unsigned workers) {
    if (!(threshold > 0.0 && threshold < 1.0)) throw std::invalid_argument("threshold must lie in (0, 1)");
    if (horizon < 1 || reps < 1) throw std::invalid_argument("horizon and reps must be positive");
    std::vector<std::uint8_t> hit(reps, 0);
    parallel_for(reps, workers, [&](std::uint64_t r) {
        RngStream rng(seed, r);
        hit[r] = polya_hits_diagonal(a, threshold, horizon, rng) ? 1 : 0;
    });
    HitEstimate out;
    out.reps = reps;
    out.horizon = horizon;
    for (auto h : hit) out.hits += h;
    const double p = static_cast<double>(out.hits) / static_cast<double>(reps);
    out.estimate = p;
    out.std_error = reps > 1 ? std::sqrt(p * (1 - p) / static_cast<double>(reps - 1)) : 0.0;
    return out;
}

std::int64_t HoppeUrn::step(RngStream& rng) {
    // t_ + 1 balls in the urn: the black one (index 0) plus t_ coloured balls.
    const auto pick = rng.below(static_cast<std::uint64_t>(t_) + 1);
    ++t_;
    std::int64_t color;
    if (pick == 0) {
        color = static_cast<std::int64_t>(counts_.size());
        counts_.push_back(1);
        births_.push_back(t_);
    } else {
        color = ball_color_[pick - 1];
        ++counts_[color];
    }
    ball_color_.push_back(color);
    if (leader_ < 0 || counts_[color] > counts_[leader_] ||
        (counts_[color] == counts_[leader_] && color < leader_)) {
        leader_ = color;
    }
    return color;
}

HoppeSnapshot HoppeUrn::snapshot() const {
    return {t_, static_cast<std::int64_t>(counts_.size()), leader_, leader_ < 0 ? 0 : counts_[leader_]};
}

HoppeRun hoppe_run(std::int64_t steps, RngStream& rng, bool record_trajectory) {
    if (steps < 1) throw std::invalid_argument("Hoppe run needs at least one step");
    HoppeUrn urn;
    HoppeRun run;
    run.steps = steps;
    if (record_trajectory) run.trajectory.reserve(static_cast<std::size_t>(steps));
    for (std::int64_t i = 0; i < steps; ++i) {
        const std::int64_t before = urn.leader();
        urn.step(rng);
        if (before >= 0 && urn.leader() != before) run.leader_changes.push_back(urn.t());
        if (record_trajectory) run.trajectory.push_back(urn.snapshot());
    }
    run.final_colors = static_cast<std::int64_t>(urn.colors().size());
    return run;
}

DickmanSample sample_dickman(RngStream& rng) {
    DickmanSample out;
    double remainder = 1.0;
    double best = 0.0;
    do {
        const double u = rng.uniform_open_closed();
        ++out.draws;
        best = std::max(best, remainder * u);
        remainder *= 1.0 - u;
    } while (remainder >= best);
    out.value = best;
    out.remainder = remainder;
    return out;
}

double max_subtree_fraction(const RecursiveTree& tree, const SubtreeSizes& sizes) {
    if (tree.size() < 2) throw std::invalid_argument("max subtree fraction needs n >= 2");
    std::int64_t best = 0;
    for (Vertex v = 2; v <= tree.size(); ++v) {
        if (tree.parent(v) == kRoot) best = std::max(best, sizes[v]);
    }
    return static_cast<double>(best) / static_cast<double>(tree.size());
}

}  // namespace rrt
