#include "rrt/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace rrt {

namespace {

constexpr std::int64_t kMaxBetweennessSquareN = 100'000'000;

int sign(std::int64_t x) noexcept { return (x > 0) - (x < 0); }

std::int64_t checked_pow(std::int64_t base, unsigned q) {
    std::int64_t out = 1;
    for (unsigned i = 0; i < q; ++i) {
        if (__builtin_mul_overflow(out, base, &out)) {
            throw NumericGuardError("n^" + std::to_string(q) + " overflows 64-bit scores");
        }
    }
    return out;
}

std::int64_t ipow(std::int64_t base, unsigned q) noexcept {
    std::int64_t out = 1;
    for (unsigned i = 0; i < q; ++i) out *= base;
    return out;
}

}  // namespace

double log_of(std::int64_t k) {
    thread_local std::vector<double> table{0.0};
    if (static_cast<std::size_t>(k) >= table.size()) {
        std::size_t old = table.size();
        table.resize(std::max<std::size_t>(static_cast<std::size_t>(k) + 1, 2 * old));
        for (std::size_t i = old; i < table.size(); ++i) table[i] = std::log(static_cast<double>(i));
    }
    return table[static_cast<std::size_t>(k)];
}

std::vector<std::int64_t> jordan_scores(const RecursiveTree& tree, const SubtreeSizes& sizes) {
    const auto n = static_cast<std::int64_t>(tree.size());
    std::vector<std::int64_t> psi(tree.size() + 1, 0);
    for (Vertex v = 2; v <= n; ++v) {
        auto& best = psi[tree.parent(v)];
        best = std::max(best, sizes[v]);
    }
    for (Vertex v = 2; v <= n; ++v) psi[v] = std::max(psi[v], n - sizes[v]);
    return psi;
}

std::vector<std::int64_t> closeness_scores(const RecursiveTree& tree, const SubtreeSizes& sizes) {
    const auto n = static_cast<std::int64_t>(tree.size());
    std::vector<std::int64_t> c(tree.size() + 1, 0);
    // Sum of depths equals the sum of subtree sizes below the root.
    for (Vertex v = 2; v <= n; ++v) c[kRoot] += sizes[v];
    for (Vertex v = 2; v <= n; ++v) c[v] = c[tree.parent(v)] + n - 2 * sizes[v];
    return c;
}

std::vector<std::int64_t> betweenness_q_scores(const RecursiveTree& tree, const SubtreeSizes& sizes, unsigned q) {
    if (q < 2) throw std::invalid_argument("betweenness exponent q must be at least 2");
    const auto n = static_cast<std::int64_t>(tree.size());
    if (q == 2 && n > kMaxBetweennessSquareN) {
        throw NumericGuardError("squared betweenness limited to n <= 10^8");
    }
    checked_pow(n, q);
    std::vector<std::int64_t> b(tree.size() + 1, 0);
    for (Vertex v = 2; v <= n; ++v) {
        b[tree.parent(v)] += ipow(sizes[v], q);
        b[v] += ipow(n - sizes[v], q);
    }
    return b;
}

std::vector<std::int64_t> betweenness_pairs_scores(const RecursiveTree& tree, const SubtreeSizes& sizes) {
    const auto n = static_cast<std::int64_t>(tree.size());
    auto b = betweenness_q_scores(tree, sizes, 2);
    // Pairs through v = pairs of vertices in different components of T - v.
    for (Vertex v = 1; v <= n; ++v) b[v] = ((n - 1) * (n - 1) - b[v]) / 2;
    return b;
}

std::vector<std::int64_t> degree_scores(const RecursiveTree& tree) {
    std::vector<std::int64_t> d(tree.size() + 1, 0);
    for (Vertex v = 2; v <= tree.size(); ++v) {
        ++d[tree.parent(v)];
        ++d[v];
    }
    return d;
}

RumorScores::RumorScores(const RecursiveTree& tree, const SubtreeSizes& sizes)
    : n_(static_cast<std::int64_t>(tree.size())),
      tie_tolerance_(1e-7 * static_cast<double>(tree.size())),
      parent_(tree.parents().begin(), tree.parents().end()),
      size_(sizes.size),
      depth_(depths(tree)),
      log_phi_(tree.size() + 1, 0.0) {
    double root = 0.0;
    for (Vertex v = 2; v <= n_; ++v) root += log_of(size_[v]);
    log_phi_[kRoot] = root;
    for (Vertex v = 2; v <= n_; ++v) {
        log_phi_[v] = log_phi_[parent_[v]] + log_of(n_ - size_[v]) - log_of(size_[v]);
    }
}

int RumorScores::compare(Vertex a, Vertex b) const {
    const double diff = log_phi_[a] - log_phi_[b];
    if (diff > tie_tolerance_) return 1;
    if (diff < -tie_tolerance_) return -1;
    return compare_exact(a, b);
}

int RumorScores::compare_exact(Vertex a, Vertex b) const {
    using boost::multiprecision::cpp_int;
    // phi(a) / phi(b) = prod_{u on a side} (n - s_u) / s_u * prod_{u on b side} s_u / (n - s_u)
    cpp_int lhs = 1;
    cpp_int rhs = 1;
    while (a != b) {
        if (depth_[a] >= depth_[b]) {
            lhs *= n_ - size_[a];
            rhs *= size_[a];
            a = parent_[a];
        } else {
            lhs *= size_[b];
            rhs *= n_ - size_[b];
            b = parent_[b];
        }
    }
    return lhs.compare(rhs) > 0 ? 1 : (lhs == rhs ? 0 : -1);
}

RumorScores rumor_scores(const RecursiveTree& tree, const SubtreeSizes& sizes) { return RumorScores(tree, sizes); }

std::size_t CentralityProfile::size() const noexcept {
    if (const auto* ints = std::get_if<std::vector<std::int64_t>>(&scores_)) return ints->size() - 1;
    return std::get<RumorScores>(scores_).size();
}

int CentralityProfile::compare(Vertex u, Vertex v) const {
    if (const auto* ints = std::get_if<std::vector<std::int64_t>>(&scores_)) {
        const int s = sign((*ints)[u] - (*ints)[v]);
        return measure_.direction() == Direction::SmallerIsCentral ? s : -s;
    }
    return std::get<RumorScores>(scores_).compare(u, v);
}

CentralityProfile compute_profile(const RecursiveTree& tree, const SubtreeSizes& sizes, Measure measure) {
    switch (measure.kind) {
        case MeasureKind::Jordan: return {measure, jordan_scores(tree, sizes)};
        case MeasureKind::Closeness: return {measure, closeness_scores(tree, sizes)};
        case MeasureKind::Rumor: return CentralityProfile(rumor_scores(tree, sizes));
        case MeasureKind::BetweennessSq: return {measure, betweenness_q_scores(tree, sizes, 2)};
        case MeasureKind::BetweennessQ: return {measure, betweenness_q_scores(tree, sizes, measure.q)};
        case MeasureKind::BetweennessPairs: return {measure, betweenness_pairs_scores(tree, sizes)};
        case MeasureKind::Degree: return {measure, degree_scores(tree)};
    }
    throw std::invalid_argument("unknown measure");
}

std::vector<std::uint32_t> rank_vertices(const CentralityProfile& profile) {
    const std::size_t n = profile.size();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{1});
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        const int c = profile.compare(a, b);
        return c < 0 || (c == 0 && a > b);
    });
    std::vector<std::uint32_t> rank(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<std::uint32_t>(i + 1);
    return rank;
}

CenterReport center_report(const CentralityProfile& profile) {
    const auto n = static_cast<Vertex>(profile.size());
    CenterReport report;
    Vertex best = kRoot;
    std::uint64_t ahead_of_root = 0;
    for (Vertex v = 2; v <= n; ++v) {
        // Later labels win ties, so "at least as central" is enough to lead.
        if (profile.compare(v, best) <= 0) best = v;
        if (profile.compare(v, kRoot) <= 0) ++ahead_of_root;
    }
    report.center_index = best;
    report.root_rank = 1 + ahead_of_root;
    for (Vertex v = 1; v <= n; ++v) {
        if (v == best || profile.compare(v, best) == 0) report.tied_center_set.push_back(v);
    }
    return report;
}

std::vector<Vertex> confidence_set(std::span<const std::uint32_t> rank, std::size_t k) {
    const std::size_t n = rank.size() - 1;
    if (k < 1 || k > n) throw std::invalid_argument("confidence set size must lie in [1, n]");
    std::vector<Vertex> out(k, kNoVertex);
    for (Vertex v = 1; v <= n; ++v) {
        if (rank[v] <= k) out[rank[v] - 1] = v;
    }
    return out;
}

}  // namespace rrt
