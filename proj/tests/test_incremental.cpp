#include "doctest.h"
#include "rrt/centrality.hpp"
#include "rrt/incremental.hpp"

using namespace rrt;

namespace {

void check_against_full(const IncrementalCentrality& inc) {
    const RecursiveTree tree = inc.tree();
    const SubtreeSizes sizes = subtree_sizes(tree);
    REQUIRE(inc.size() == tree.size());
    for (Vertex v = 1; v <= tree.size(); ++v) REQUIRE(inc.sizes()[v] == sizes[v]);

    const auto jordan = center_report(compute_profile(tree, sizes, {MeasureKind::Jordan}));
    REQUIRE(inc.centroids() == jordan.tied_center_set);
    for (const auto& m : standard_measures()) {
        INFO("n = " << tree.size() << ", measure = " << m.name());
        const CenterReport full = center_report(compute_profile(tree, sizes, m));
        REQUIRE(inc.center_index(m.kind) == full.center_index);
        REQUIRE(inc.root_rank(m.kind) == full.root_rank);
    }
    REQUIRE(inc.root_rank(MeasureKind::BetweennessPairs) == inc.root_rank(MeasureKind::BetweennessSq));
}

}  // namespace

TEST_CASE("starts as a single vertex") {
    IncrementalCentrality inc;
    CHECK(inc.size() == 1);
    check_against_full(inc);
    CHECK_THROWS_AS(inc.root_rank(MeasureKind::BetweennessQ), std::invalid_argument);
}

TEST_CASE("every step of small trajectories") {
    for (std::uint64_t t = 0; t < 300; ++t) {
        RngStream rng(5, t);
        IncrementalCentrality inc;
        while (inc.size() < 150) {
            inc.grow(rng);
            check_against_full(inc);
        }
    }
}

TEST_CASE("grow uses the same draws as grow_urrt") {
    RngStream a(6, 1), b(6, 1);
    IncrementalCentrality inc;
    while (inc.size() < 5000) inc.grow(a);
    CHECK(inc.tree() == grow_urrt(5000, b));
}

TEST_CASE("hand-built trees with twin centroids") {
    IncrementalCentrality inc;
    for (Vertex p : {1u, 1u, 3u}) inc.attach(p);  // T4
    CHECK(inc.centroids() == std::vector<Vertex>{1, 3});
    CHECK(inc.center_index(MeasureKind::Jordan) == 3);
    CHECK(inc.root_rank(MeasureKind::Jordan) == 2);
    CHECK(inc.center_index(MeasureKind::Degree) == 3);
    check_against_full(inc);

    IncrementalCentrality path;
    for (Vertex v = 1; v < 40; ++v) {
        path.attach(v);
        check_against_full(path);
    }
    CHECK_THROWS_AS(path.attach(0), std::invalid_argument);
    CHECK_THROWS_AS(path.attach(41), std::invalid_argument);
}

TEST_CASE("100 trajectories to n=10^4 agree with full recomputation at checkpoints") {
    std::vector<std::size_t> checkpoints;
    for (std::size_t n = 2; n <= 100; ++n) checkpoints.push_back(n);
    for (std::size_t n = 125; n <= 10'000; n += 125) checkpoints.push_back(n);
    for (std::uint64_t t = 0; t < 100; ++t) {
        RngStream rng(7, t);
        IncrementalCentrality inc;
        for (std::size_t target : checkpoints) {
            while (inc.size() < target) inc.grow(rng);
            check_against_full(inc);
        }
    }
}
