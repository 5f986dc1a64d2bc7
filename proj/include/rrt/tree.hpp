#ifndef RRT_TREE_HPP
#define RRT_TREE_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrt/rng.hpp"

namespace rrt {

/// Vertex labels are arrival times 1..n; 0 means "no vertex".
using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = 0;
inline constexpr Vertex kRoot = 1;

/// Raised when an edge-list file cannot be parsed. line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Increasing tree stored as a parent array.
///
/// Storage is indexed by label, so parents()[v] is the parent of v for
/// 2 <= v <= n, and slots 0 and 1 hold kNoVertex.  Every parent is strictly
/// smaller than its child, which makes label order a valid top-down order.
class RecursiveTree {
public:
    /// The single-vertex tree.
    RecursiveTree() : parent_(2, kNoVertex) {}

    /// Validates and adopts a label-indexed parent array of length n + 1.
    static RecursiveTree from_parents(std::vector<Vertex> parents);

    std::size_t size() const noexcept { return parent_.size() - 1; }
    Vertex parent(Vertex v) const noexcept { return parent_[v]; }
    std::span<const Vertex> parents() const noexcept { return parent_; }

    /// Appends vertex size() + 1 below `parent`.
    void attach(Vertex parent);

    friend bool operator==(const RecursiveTree&, const RecursiveTree&) = default;

private:
    explicit RecursiveTree(std::vector<Vertex> parents) : parent_(std::move(parents)) {}
    std::vector<Vertex> parent_;
};

/// Children lists in compressed form, derived from a parent array.
/// Children of v are listed in increasing label order.
class ChildLists {
public:
    explicit ChildLists(const RecursiveTree& tree);

    std::span<const Vertex> of(Vertex v) const noexcept {
        return {children_.data() + offset_[v], children_.data() + offset_[v + 1]};
    }
    std::size_t degree(Vertex v) const noexcept { return offset_[v + 1] - offset_[v]; }

private:
    std::vector<std::size_t> offset_;
    std::vector<Vertex> children_;
};

/// size[v] = number of vertices in the subtree of v when rooted at 1.
struct SubtreeSizes {
    std::vector<std::int64_t> size;  // indexed by label, size[0] unused

    std::int64_t operator[](Vertex v) const noexcept { return size[v]; }
    std::int64_t n() const noexcept { return size[kRoot]; }
};

SubtreeSizes subtree_sizes(const RecursiveTree& tree);

/// Uniform random recursive tree on n vertices. Throws std::invalid_argument for n == 0.
RecursiveTree grow_urrt(std::size_t n, RngStream& rng);

/// Attaches one new vertex to a uniformly chosen existing vertex.
/// Consumes exactly the draw grow_urrt would use for that vertex.
RecursiveTree grow_step(RecursiveTree tree, RngStream& rng);

/// Edge-list text: "n\n" then "v parent\n" for v = 2..n.
std::string serialize(const RecursiveTree& tree);
void write_edge_list(std::ostream& out, const RecursiveTree& tree);
RecursiveTree deserialize(const std::string& text);
RecursiveTree read_edge_list(std::istream& in);

/// Depth of each vertex below the root (depth[1] = 0).
std::vector<std::int64_t> depths(const RecursiveTree& tree);

}  // namespace rrt

#endif  // RRT_TREE_HPP
