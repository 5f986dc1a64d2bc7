#include <algorithm>
#include <cmath>
#include <numeric>

#include "rrt/centrality.hpp"
#include "rrt/oracle.hpp"

namespace rrt {

namespace {

int big_sign(const BigInt& a, const BigInt& b) { return a < b ? -1 : (a == b ? 0 : 1); }

// Ranking straight from oracle scores with the descending-label tie rule.
std::vector<std::uint32_t> oracle_rank(const std::vector<BigInt>& score, Direction direction) {
    const std::size_t n = score.size() - 1;
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{1});
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        int c = big_sign(score[a], score[b]);
        if (direction == Direction::LargerIsCentral) c = -c;
        return c < 0 || (c == 0 && a > b);
    });
    std::vector<std::uint32_t> rank(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<std::uint32_t>(i + 1);
    return rank;
}

bool check_tree(const RecursiveTree& tree, bool corrupt) {
    const std::size_t n = tree.size();
    const SubtreeSizes sizes = subtree_sizes(tree);
    const std::vector<Measure> measures = {{MeasureKind::Jordan},           {MeasureKind::Closeness},
                                           {MeasureKind::Rumor},            {MeasureKind::BetweennessSq},
                                           {MeasureKind::BetweennessPairs}, {MeasureKind::BetweennessQ, 3},
                                           {MeasureKind::Degree}};
    bool ok = true;
    for (const auto& measure : measures) {
        const auto expected = oracle_scores(tree, measure);
        const CentralityProfile profile = compute_profile(tree, sizes, measure);
        if (profile.has_integer_scores()) {
            auto scores = std::vector<std::int64_t>(profile.integer_scores().begin(), profile.integer_scores().end());
            if (corrupt && measure.kind == MeasureKind::Closeness) scores[kRoot] += 1;
            for (Vertex v = 1; v <= n; ++v) ok = ok && BigInt(scores[v]) == expected[v];
        } else {
            const RumorScores& rumor = profile.rumor();
            for (Vertex a = 1; a <= n; ++a) {
                const double exact_log = std::log(expected[a].convert_to<double>());
                ok = ok && std::abs(rumor.log_score(a) - exact_log) <= 1e-9 * std::max(1.0, exact_log);
                for (Vertex b = 1; b <= n; ++b) {
                    const int truth = big_sign(expected[a], expected[b]);
                    ok = ok && rumor.compare_exact(a, b) == truth && rumor.compare(a, b) == truth;
                }
            }
        }
        ok = ok && rank_vertices(profile) == oracle_rank(expected, measure.direction());
    }
    const auto pairs_rank = rank_vertices(compute_profile(tree, sizes, {MeasureKind::BetweennessPairs}));
    const auto square_rank = rank_vertices(compute_profile(tree, sizes, {MeasureKind::BetweennessSq}));
    return ok && pairs_rank == square_rank;
}

}  // namespace

std::vector<VerifyLevel> verify_against_oracles(std::size_t max_n, bool inject_fault) {
    std::vector<VerifyLevel> levels;
    bool corrupt_next = inject_fault;
    for (std::size_t n = 1; n <= max_n; ++n) {
        VerifyLevel level{n, 0, 0};
        for_each_recursive_tree(n, [&](const RecursiveTree& tree) {
            ++level.trees;
            const bool corrupt = corrupt_next && n >= 2;
            if (corrupt) corrupt_next = false;
            if (!check_tree(tree, corrupt)) ++level.mismatches;
        });
        levels.push_back(level);
    }
    return levels;
}

}  // namespace rrt
