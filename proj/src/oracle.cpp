#include "rrt/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace rrt {

namespace {

using Adjacency = std::vector<std::vector<Vertex>>;

Adjacency adjacency(const RecursiveTree& tree) {
    Adjacency adj(tree.size() + 1);
    for (Vertex v = 2; v <= tree.size(); ++v) {
        adj[v].push_back(tree.parent(v));
        adj[tree.parent(v)].push_back(v);
    }
    return adj;
}

// BFS from `start` avoiding `blocked`; returns visit order and fills `from`.
std::vector<Vertex> bfs(const Adjacency& adj, Vertex start, Vertex blocked, std::vector<Vertex>& from,
                        std::vector<std::int64_t>* dist = nullptr) {
    std::vector<Vertex> order{start};
    from[start] = start;
    if (dist) (*dist)[start] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const Vertex u = order[head];
        for (Vertex w : adj[u]) {
            if (w == blocked || from[w] != kNoVertex) continue;
            from[w] = u;
            if (dist) (*dist)[w] = (*dist)[u] + 1;
            order.push_back(w);
        }
    }
    return order;
}

// Sizes of the components of T - v.
std::vector<std::int64_t> components_without(const Adjacency& adj, Vertex v) {
    std::vector<std::int64_t> sizes;
    std::vector<Vertex> from(adj.size(), kNoVertex);
    from[v] = v;
    for (Vertex w : adj[v]) {
        if (from[w] != kNoVertex) continue;
        sizes.push_back(static_cast<std::int64_t>(bfs(adj, w, v, from).size()));
    }
    return sizes;
}

BigInt rumor_product(const Adjacency& adj, Vertex v) {
    std::vector<Vertex> from(adj.size(), kNoVertex);
    const auto order = bfs(adj, v, kNoVertex, from);
    std::vector<std::int64_t> size(adj.size(), 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (*it != v) size[from[*it]] += size[*it];
    }
    BigInt product = 1;
    for (Vertex u : order) {
        if (u != v) product *= size[u];
    }
    return product;
}

}  // namespace

std::vector<BigInt> oracle_scores(const RecursiveTree& tree, Measure measure) {
    const std::size_t n = tree.size();
    if (n > kOracleMaxN) throw std::invalid_argument("oracle limited to n <= 2000");
    const Adjacency adj = adjacency(tree);
    std::vector<BigInt> score(n + 1, 0);

    switch (measure.kind) {
        case MeasureKind::Jordan:
            for (Vertex v = 1; v <= n; ++v) {
                const auto parts = components_without(adj, v);
                score[v] = parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
            }
            break;
        case MeasureKind::Closeness:
            for (Vertex v = 1; v <= n; ++v) {
                std::vector<Vertex> from(n + 1, kNoVertex);
                std::vector<std::int64_t> dist(n + 1, 0);
                bfs(adj, v, kNoVertex, from, &dist);
                std::int64_t total = 0;
                for (Vertex u = 1; u <= n; ++u) total += dist[u];
                score[v] = total;
            }
            break;
        case MeasureKind::Rumor:
            for (Vertex v = 1; v <= n; ++v) score[v] = rumor_product(adj, v);
            break;
        case MeasureKind::BetweennessSq:
        case MeasureKind::BetweennessQ: {
            const unsigned q = measure.kind == MeasureKind::BetweennessSq ? 2 : measure.q;
            for (Vertex v = 1; v <= n; ++v) {
                BigInt total = 0;
                for (auto part : components_without(adj, v)) total += boost::multiprecision::pow(BigInt(part), q);
                score[v] = total;
            }
            break;
        }
        case MeasureKind::BetweennessPairs: {
            std::vector<std::int64_t> hits(n + 1, 0);
            for (Vertex s = 1; s <= n; ++s) {
                std::vector<Vertex> from(n + 1, kNoVertex);
                bfs(adj, s, kNoVertex, from);
                for (Vertex t = s + 1; t <= n; ++t) {
                    for (Vertex w = from[t]; w != s; w = from[w]) ++hits[w];
                }
            }
            for (Vertex v = 1; v <= n; ++v) score[v] = hits[v];
            break;
        }
        case MeasureKind::Degree:
            for (Vertex v = 1; v <= n; ++v) score[v] = static_cast<std::int64_t>(adj[v].size());
            break;
    }
    return score;
}

void for_each_recursive_tree(std::size_t n, const std::function<void(const RecursiveTree&)>& visit) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    // Odometer over parent[v] in [1, v-1].
    std::vector<Vertex> parents(n + 1, kNoVertex);
    for (std::size_t v = 2; v <= n; ++v) parents[v] = 1;
    while (true) {
        visit(RecursiveTree::from_parents(parents));
        std::size_t v = n;
        while (v >= 2 && parents[v] == v - 1) {
            parents[v] = 1;
            --v;
        }
        if (v < 2) return;
        ++parents[v];
    }
}

}  // namespace rrt
