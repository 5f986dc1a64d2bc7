#ifndef RRT_INCREMENTAL_HPP
#define RRT_INCREMENTAL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "rrt/measure.hpp"
#include "rrt/rng.hpp"
#include "rrt/tree.hpp"

namespace rrt {

/// A recursive tree grown one vertex at a time, keeping enough state to read
/// off the center index and root rank of every standard measure without a
/// full recomputation.
///
/// Per insertion, subtree sizes, largest-child sizes and sums of squared child
/// sizes are updated along the new vertex's root path, the centroid moves by
/// at most one edge, and degree statistics are updated in O(1).  Root ranks
/// and the betweenness center are found by top-down searches from vertex 1
/// that prune a subtree as soon as no vertex inside it can be at least as
/// central as the reference.  The results are exact and match
/// center_report() on the same tree.
///
/// Queries reuse an internal scratch stack, so one instance must not be
/// queried from several threads at once.
class IncrementalCentrality {
public:
    IncrementalCentrality();

    /// Attaches a new vertex to a uniform existing vertex, using the same draw
    /// as grow_step. Returns the new label.
    Vertex grow(RngStream& rng);
    void attach(Vertex parent);

    std::size_t size() const noexcept { return parent_.size() - 1; }
    std::span<const Vertex> parents() const noexcept { return parent_; }
    std::span<const std::int64_t> sizes() const noexcept { return size_; }
    RecursiveTree tree() const;

    /// Centroids in increasing label order (one or two).
    std::vector<Vertex> centroids() const;

    Vertex center_index(MeasureKind kind) const;
    std::uint64_t root_rank(MeasureKind kind) const;

    Vertex centroid_center() const noexcept { return twin_ > centroid_ ? twin_ : centroid_; }
    Vertex degree_center() const noexcept { return degree_center_; }
    std::uint64_t degree_root_rank() const noexcept { return 1 + degree_ahead_of_root_; }

    Vertex betweenness_center() const;
    std::uint64_t jordan_root_rank() const;
    std::uint64_t closeness_root_rank() const;
    std::uint64_t rumor_root_rank() const;
    std::uint64_t betweenness_root_rank() const;

private:
    std::int64_t n() const noexcept { return static_cast<std::int64_t>(parent_.size()) - 1; }
    std::int64_t betweenness_sq(Vertex v) const noexcept {
        const std::int64_t up = v == kRoot ? 0 : n() - size_[v];
        return sum_sq_children_[v] + up * up;
    }
    int rumor_sign_vs_root(Vertex v, double log_diff) const;

    std::vector<Vertex> parent_;
    std::vector<std::int64_t> size_;
    std::vector<std::int64_t> max_child_;
    std::vector<std::int64_t> sum_sq_children_;
    std::vector<Vertex> first_child_;
    std::vector<Vertex> next_sibling_;

    Vertex centroid_ = kRoot;
    Vertex twin_ = kNoVertex;  // second centroid, adjacent to centroid_, if any

    std::vector<std::int64_t> degree_;
    std::vector<std::int64_t> degree_count_;  // non-root vertices per degree value
    std::int64_t degree_ahead_of_root_ = 0;   // non-root vertices with degree >= deg(1)
    std::int64_t max_degree_ = 0;
    Vertex degree_center_ = kRoot;

    struct Frame {
        Vertex v;
        std::int64_t acc;
        double log_acc;
    };
    mutable std::vector<Frame> stack_;
};

}  // namespace rrt

#endif  // RRT_INCREMENTAL_HPP
