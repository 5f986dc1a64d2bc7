#include "rrt/incremental.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "rrt/centrality.hpp"

namespace rrt {

IncrementalCentrality::IncrementalCentrality()
    : parent_(2, kNoVertex),
      size_{0, 1},
      max_child_(2, 0),
      sum_sq_children_(2, 0),
      first_child_(2, kNoVertex),
      next_sibling_(2, kNoVertex),
      degree_(2, 0),
      degree_count_(2, 0) {}

Vertex IncrementalCentrality::grow(RngStream& rng) {
    attach(static_cast<Vertex>(1 + rng.below(size())));
    return static_cast<Vertex>(size());
}

void IncrementalCentrality::attach(Vertex p) {
    if (p == kNoVertex || p > size()) throw std::invalid_argument("attachment target out of range");
    const auto x = static_cast<Vertex>(size() + 1);
    parent_.push_back(p);
    size_.push_back(1);
    max_child_.push_back(0);
    sum_sq_children_.push_back(0);
    first_child_.push_back(kNoVertex);
    next_sibling_.push_back(first_child_[p]);
    first_child_[p] = x;
    const std::int64_t n = this->n();

    // Walk to the root, growing every ancestor by one.  Remember the neighbour
    // of the centroid on this path, if the path runs through the centroid.
    Vertex toward_new = kNoVertex;
    for (Vertex u = x; u != kRoot;) {
        const Vertex w = parent_[u];
        const std::int64_t s = size_[u];
        sum_sq_children_[w] += 2 * s - 1;
        max_child_[w] = std::max(max_child_[w], s);
        ++size_[w];
        if (w == centroid_) toward_new = u;
        u = w;
    }

    // The component of T - centroid that received x is the only one that grew.
    Vertex neighbour;
    std::int64_t component;
    if (toward_new != kNoVertex) {
        neighbour = toward_new;
        component = size_[toward_new];
    } else {
        neighbour = parent_[centroid_];
        component = n - size_[centroid_];
    }
    twin_ = kNoVertex;
    if (2 * component > n) {
        centroid_ = neighbour;
    } else if (2 * component == n) {
        twin_ = neighbour;
    }

    // Degrees: p gains one, x arrives with one.
    degree_.push_back(0);
    if (degree_count_.size() < static_cast<std::size_t>(n) + 2) degree_count_.resize(static_cast<std::size_t>(n) + 2, 0);
    const std::int64_t root_degree = degree_[kRoot];
    if (p == kRoot) {
        degree_ahead_of_root_ -= degree_count_[root_degree];
        ++degree_[kRoot];
    } else {
        const std::int64_t d = degree_[p]++;
        --degree_count_[d];
        ++degree_count_[d + 1];
        if (d + 1 == root_degree) ++degree_ahead_of_root_;
    }
    degree_[x] = 1;
    ++degree_count_[1];
    if (1 >= degree_[kRoot]) ++degree_ahead_of_root_;

    for (Vertex v : {p, x}) {
        if (degree_[v] > max_degree_) {
            max_degree_ = degree_[v];
            degree_center_ = v;
        } else if (degree_[v] == max_degree_ && v > degree_center_) {
            degree_center_ = v;
        }
    }
}

RecursiveTree IncrementalCentrality::tree() const {
    return RecursiveTree::from_parents(std::vector<Vertex>(parent_.begin(), parent_.end()));
}

std::vector<Vertex> IncrementalCentrality::centroids() const {
    if (twin_ == kNoVertex) return {centroid_};
    return {std::min(centroid_, twin_), std::max(centroid_, twin_)};
}

Vertex IncrementalCentrality::center_index(MeasureKind kind) const {
    switch (kind) {
        case MeasureKind::Jordan:
        case MeasureKind::Closeness:
        case MeasureKind::Rumor: return centroid_center();
        case MeasureKind::BetweennessSq:
        case MeasureKind::BetweennessPairs: return betweenness_center();
        case MeasureKind::Degree: return degree_center();
        case MeasureKind::BetweennessQ: break;
    }
    throw std::invalid_argument("incremental tracking supports q = 2 betweenness only");
}

std::uint64_t IncrementalCentrality::root_rank(MeasureKind kind) const {
    switch (kind) {
        case MeasureKind::Jordan: return jordan_root_rank();
        case MeasureKind::Closeness: return closeness_root_rank();
        case MeasureKind::Rumor: return rumor_root_rank();
        case MeasureKind::BetweennessSq:
        case MeasureKind::BetweennessPairs: return betweenness_root_rank();
        case MeasureKind::Degree: return degree_root_rank();
        case MeasureKind::BetweennessQ: break;
    }
    throw std::invalid_argument("incremental tracking supports q = 2 betweenness only");
}

std::uint64_t IncrementalCentrality::jordan_root_rank() const {
    const std::int64_t n = this->n();
    const std::int64_t root_score = max_child_[kRoot];
    std::uint64_t ahead = 0;
    stack_.clear();
    for (Vertex c = first_child_[kRoot]; c != kNoVertex; c = next_sibling_[c]) stack_.push_back({c, 0, 0.0});
    while (!stack_.empty()) {
        const Vertex v = stack_.back().v;
        stack_.pop_back();
        // psi(w) >= n - size[w] >= n - size[v] for every w below v.
        if (n - size_[v] > root_score) continue;
        if (max_child_[v] <= root_score) ++ahead;
        for (Vertex c = first_child_[v]; c != kNoVertex; c = next_sibling_[c]) stack_.push_back({c, 0, 0.0});
    }
    return 1 + ahead;
}

std::uint64_t IncrementalCentrality::closeness_root_rank() const {
    // C(v) - C(1) is the sum of n - 2 size[u] over the path 1 -> v (excluding 1).
    // Terms are negative only while size[u] > n/2.
    const std::int64_t n = this->n();
    std::uint64_t ahead = 0;
    stack_.clear();
    for (Vertex c = first_child_[kRoot]; c != kNoVertex; c = next_sibling_[c]) stack_.push_back({c, 0, 0.0});
    while (!stack_.empty()) {
        const Frame f = stack_.back();
        stack_.pop_back();
        const std::int64_t diff = f.acc + n - 2 * size_[f.v];
        if (diff <= 0) ++ahead;
        if (diff > 0 && 2 * size_[f.v] <= n) continue;
        for (Vertex c = first_child_[f.v]; c != kNoVertex; c = next_sibling_[c]) stack_.push_back({c, diff, 0.0});
    }
    return 1 + ahead;
}

int IncrementalCentrality::rumor_sign_vs_root(Vertex v, double log_diff) const {
    const double tolerance = 1e-7 * static_cast<double>(n());
    if (log_diff > tolerance) return 1;
    if (log_diff < -tolerance) return -1;
    using boost::multiprecision::cpp_int;
    cpp_int lhs = 1;
    cpp_int rhs = 1;
    for (Vertex u = v; u != kRoot; u = parent_[u]) {
        lhs *= n() - size_[u];
        rhs *= size_[u];
    }
    return lhs > rhs ? 1 : (lhs == rhs ? 0 : -1);
}

std::uint64_t IncrementalCentrality::rumor_root_rank() const {
    // log phi(v) - log phi(1) accumulates log(n - size[u]) - log(size[u]) down the path.
    const std::int64_t n = this->n();
    std::uint64_t ahead = 0;
    stack_.clear();
    for (Vertex c = first_child_[kRoot]; c != kNoVertex; c = next_sibling_[c]) stack_.push_back({c, 0, 0.0});
    while (!stack_.empty()) {
        const Frame f = stack_.back();
        stack_.pop_back();
        const double diff = f.log_acc + log_of(n - size_[f.v]) - log_of(size_[f.v]);
        const int s = rumor_sign_vs_root(f.v, diff);
        if (s <= 0) ++ahead;
        if (s > 0 && 2 * size_[f.v] <= n) continue;
        for (Vertex c = first_child_[f.v]; c != kNoVertex; c = next_sibling_[c]) stack_.push_back({c, 0, diff});
    }
    return 1 + ahead;
}

std::uint64_t IncrementalCentrality::betweenness_root_rank() const {
    const std::int64_t n = this->n();
    const std::int64_t root_score = sum_sq_children_[kRoot];
    std::uint64_t ahead = 0;
    stack_.clear();
    for (Vertex c = first_child_[kRoot]; c != kNoVertex; c = next_sibling_[c]) stack_.push_back({c, 0, 0.0});
    while (!stack_.empty()) {
        const Vertex v = stack_.back().v;
        stack_.pop_back();
        const std::int64_t up = n - size_[v];
        if (up * up > root_score) continue;
        if (betweenness_sq(v) <= root_score) ++ahead;
        for (Vertex c = first_child_[v]; c != kNoVertex; c = next_sibling_[c]) stack_.push_back({c, 0, 0.0});
    }
    return 1 + ahead;
}

Vertex IncrementalCentrality::betweenness_center() const {
    const std::int64_t n = this->n();
    Vertex best = centroid_;
    std::int64_t best_score = betweenness_sq(centroid_);
    stack_.clear();
    stack_.push_back({kRoot, 0, 0.0});
    while (!stack_.empty()) {
        const Vertex v = stack_.back().v;
        stack_.pop_back();
        const std::int64_t score = betweenness_sq(v);
        if (score < best_score || (score == best_score && v > best)) {
            best = v;
            best_score = score;
        }
        for (Vertex c = first_child_[v]; c != kNoVertex; c = next_sibling_[c]) {
            const std::int64_t up = n - size_[c];
            if (up * up <= best_score) stack_.push_back({c, 0, 0.0});
        }
    }
    return best;
}

}  // namespace rrt
