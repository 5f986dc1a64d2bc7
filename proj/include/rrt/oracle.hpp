#ifndef RRT_ORACLE_HPP
#define RRT_ORACLE_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rrt/measure.hpp"
#include "rrt/tree.hpp"

namespace rrt {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kOracleMaxN = 2000;

/// Brute-force scores straight from the definitions, for cross-checking the
/// linear-time routines.  Works on an undirected adjacency list and never
/// touches subtree sizes rooted at 1:
///   jordan      delete v, measure every component by BFS
///   closeness   BFS from every vertex
///   rumor       reroot at v, multiply all subtree sizes exactly
///   betweenness enumerate all components of T - v, sum size^q
///   pairs       enumerate all pairs {s, t}, walk the path, count interior hits
///   degree      adjacency size
/// Throws std::invalid_argument when n exceeds kOracleMaxN.
std::vector<BigInt> oracle_scores(const RecursiveTree& tree, Measure measure);

/// Calls visit once for each of the (n-1)! recursive trees on n vertices.
void for_each_recursive_tree(std::size_t n, const std::function<void(const RecursiveTree&)>& visit);

struct VerifyLevel {
    std::size_t n = 0;
    std::size_t trees = 0;
    std::size_t mismatches = 0;
};

/// Exhaustive check over every recursive tree with 1..max_n vertices: fast
/// scores equal the oracle for every measure (rumor compared pairwise and
/// exactly), rankings built from oracle scores equal rank_vertices, and the
/// pairs and squared forms of betweenness rank identically.  With
/// inject_fault set, one fast score is deliberately corrupted.
std::vector<VerifyLevel> verify_against_oracles(std::size_t max_n, bool inject_fault = false);

}  // namespace rrt

#endif  // RRT_ORACLE_HPP
