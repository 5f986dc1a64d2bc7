#include "rrt/tree.hpp"

#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace rrt {

RecursiveTree RecursiveTree::from_parents(std::vector<Vertex> parents) {
    if (parents.size() < 2) {
        throw std::invalid_argument("parent array must describe at least one vertex");
    }
    if (parents[0] != kNoVertex || parents[1] != kNoVertex) {
        throw std::invalid_argument("root must not have a parent");
    }
    for (std::size_t v = 2; v < parents.size(); ++v) {
        if (parents[v] == kNoVertex || parents[v] >= v) {
            throw std::invalid_argument("parent of vertex " + std::to_string(v) + " must lie in [1, " +
                                        std::to_string(v - 1) + "]");
        }
    }
    return RecursiveTree(std::move(parents));
}

void RecursiveTree::attach(Vertex parent) {
    if (parent == kNoVertex || parent > size()) {
        throw std::invalid_argument("attachment target out of range");
    }
    parent_.push_back(parent);
}

ChildLists::ChildLists(const RecursiveTree& tree) {
    const std::size_t n = tree.size();
    offset_.assign(n + 2, 0);
    for (Vertex v = 2; v <= n; ++v) ++offset_[tree.parent(v) + 1];
    for (std::size_t v = 1; v <= n + 1; ++v) offset_[v] += offset_[v - 1];
    children_.resize(n > 0 ? n - 1 : 0);
    std::vector<std::size_t> cursor(offset_.begin(), offset_.end() - 1);
    for (Vertex v = 2; v <= n; ++v) children_[cursor[tree.parent(v)]++] = v;
}

SubtreeSizes subtree_sizes(const RecursiveTree& tree) {
    const std::size_t n = tree.size();
    SubtreeSizes out;
    out.size.assign(n + 1, 1);
    out.size[0] = 0;
    // Children carry larger labels, so one reverse sweep finishes every subtree
    // before its parent is read.
    for (Vertex v = static_cast<Vertex>(n); v >= 2; --v) out.size[tree.parent(v)] += out.size[v];
    return out;
}

RecursiveTree grow_urrt(std::size_t n, RngStream& rng) {
    if (n == 0) throw std::invalid_argument("a recursive tree needs at least one vertex");
    std::vector<Vertex> parents(n + 1, kNoVertex);
    for (std::size_t v = 2; v <= n; ++v) parents[v] = static_cast<Vertex>(1 + rng.below(v - 1));
    return RecursiveTree::from_parents(std::move(parents));
}

RecursiveTree grow_step(RecursiveTree tree, RngStream& rng) {
    tree.attach(static_cast<Vertex>(1 + rng.below(tree.size())));
    return tree;
}

std::vector<std::int64_t> depths(const RecursiveTree& tree) {
    std::vector<std::int64_t> depth(tree.size() + 1, 0);
    for (Vertex v = 2; v <= tree.size(); ++v) depth[v] = depth[tree.parent(v)] + 1;
    return depth;
}

void write_edge_list(std::ostream& out, const RecursiveTree& tree) {
    out << tree.size() << '\n';
    for (Vertex v = 2; v <= tree.size(); ++v) out << v << ' ' << tree.parent(v) << '\n';
}

std::string serialize(const RecursiveTree& tree) {
    std::ostringstream out;
    write_edge_list(out, tree);
    return out.str();
}

namespace {

// Parses a non-negative decimal token; rejects signs, blanks and trailing junk.
bool parse_count(std::string_view token, std::uint64_t& value) {
    if (token.empty()) return false;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ') ++j;
        if (j > i) fields.push_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

}  // namespace

RecursiveTree read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) throw ParseError(line_no, "missing vertex count");
    if (!line.empty() && line.back() == '\r') throw ParseError(line_no, "CR line ending");
    std::uint64_t n = 0;
    if (!parse_count(line, n) || n == 0) throw ParseError(line_no, "expected a positive vertex count");
    if (n >= std::numeric_limits<Vertex>::max()) throw ParseError(line_no, "vertex count too large");

    std::vector<Vertex> parents(n + 1, kNoVertex);
    std::uint64_t expected = 2;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') throw ParseError(line_no, "CR line ending");
        const auto fields = split_fields(line);
        if (fields.empty() && in.peek() == std::char_traits<char>::eof()) break;
        std::uint64_t v = 0;
        std::uint64_t p = 0;
        if (fields.size() != 2 || !parse_count(fields[0], v) || !parse_count(fields[1], p)) {
            throw ParseError(line_no, "expected \"<vertex> <parent>\"");
        }
        if (v < 2 || v > n) throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
        if (v < expected) throw ParseError(line_no, "duplicate vertex " + std::to_string(v));
        if (v != expected) {
            throw ParseError(line_no, "expected vertex " + std::to_string(expected) + ", found " + std::to_string(v));
        }
        if (p == 0 || p >= v) {
            throw ParseError(line_no, "parent " + std::to_string(p) + " of vertex " + std::to_string(v) +
                                          " is not an earlier vertex");
        }
        parents[v] = static_cast<Vertex>(p);
        ++expected;
    }
    if (expected != n + 1) {
        throw ParseError(line_no + 1, "missing vertex " + std::to_string(expected));
    }
    return RecursiveTree::from_parents(std::move(parents));
}

RecursiveTree deserialize(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

}  // namespace rrt
