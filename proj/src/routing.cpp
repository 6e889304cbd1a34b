#include "roadgeom/routing.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

namespace roadgeom {

namespace {

struct Arc {
    VertexId target;
    double weight;
};

inline constexpr std::int64_t kFree = std::numeric_limits<std::int64_t>::max();

/// Dijkstra on lexicographic (distance, tag) keys. Anchored vertices carry a fixed tag; every
/// other vertex inherits the tag of its parent. With non-negative weights the order is
/// monotone along paths, so each vertex ends with the smallest (distance, tag) over all paths.
struct TaggedSearch {
    std::vector<double> dist;
    std::vector<std::int64_t> tag;
    std::vector<VertexId> parent;

    TaggedSearch(const std::vector<std::vector<Arc>>& adj, const std::vector<std::pair<VertexId, std::int64_t>>& seeds,
                 const std::vector<std::int64_t>& anchor) {
        const std::size_t n = adj.size();
        dist.assign(n, kUnreachable);
        tag.assign(n, kFree);
        parent.assign(n, kNoVertex);
        std::vector<char> settled(n, 0);

        using Key = std::tuple<double, std::int64_t, VertexId>;
        std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
        for (const auto& [v, t] : seeds) {
            if (std::pair{0.0, t} < std::pair{dist[v], tag[v]}) {
                dist[v] = 0.0;
                tag[v] = t;
            }
            heap.push({dist[v], tag[v], v});
        }
        while (!heap.empty()) {
            const auto [d, t, u] = heap.top();
            heap.pop();
            if (settled[u] || d != dist[u] || t != tag[u]) continue;
            settled[u] = 1;
            for (const Arc& a : adj[u]) {
                const VertexId w = a.target;
                if (settled[w]) continue;
                const double nd = d + a.weight;
                const std::int64_t nt = anchor[w] != kFree ? anchor[w] : t;
                if (std::pair{nd, nt} < std::pair{dist[w], tag[w]}) {
                    dist[w] = nd;
                    tag[w] = nt;
                    parent[w] = u;
                    heap.push({nd, nt, w});
                }
            }
        }
    }
};

std::vector<std::vector<Arc>> arcs_of(const GeometricGraph& g, std::size_t extra = 0) {
    std::vector<std::vector<Arc>> adj(g.num_vertices() + extra);
    for (const Edge& e : g.edges()) {
        adj[e.u].push_back({e.v, e.weight});
        adj[e.v].push_back({e.u, e.weight});
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end(), [](const Arc& a, const Arc& b) { return a.target < b.target; });
    }
    return adj;
}

std::vector<VertexId> canonical_sites(const GeometricGraph& g, std::vector<VertexId> sites) {
    if (sites.empty()) throw std::invalid_argument("at least one site is required");
    for (VertexId s : sites) {
        if (s >= g.num_vertices()) throw std::out_of_range("site " + std::to_string(s) + " is not a vertex");
    }
    std::sort(sites.begin(), sites.end());
    sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
    return sites;
}

}  // namespace

ShortestPathResult sssp(const GeometricGraph& g, VertexId source) {
    if (source >= g.num_vertices()) {
        throw std::out_of_range("source " + std::to_string(source) + " is not a vertex");
    }
    const std::vector<std::int64_t> anchor(g.num_vertices(), kFree);
    TaggedSearch search(arcs_of(g), {{source, 0}}, anchor);
    return {source, std::move(search.dist), std::move(search.parent)};
}

VoronoiLabeling voronoi_direct(const GeometricGraph& g, const std::vector<VertexId>& input) {
    VoronoiLabeling out;
    out.sites = canonical_sites(g, input);
    std::vector<std::int64_t> anchor(g.num_vertices(), kFree);
    std::vector<std::pair<VertexId, std::int64_t>> seeds;
    for (VertexId s : out.sites) {
        anchor[s] = s;
        seeds.push_back({s, s});
    }
    TaggedSearch search(arcs_of(g), seeds, anchor);
    out.dist = std::move(search.dist);
    out.label.assign(g.num_vertices(), kNoVertex);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (out.dist[v] != kUnreachable) out.label[v] = static_cast<VertexId>(search.tag[v]);
    }
    return out;
}

VoronoiLabeling voronoi_via_tree(const GeometricGraph& g, const SeparatorTree& tree,
                                 const std::vector<VertexId>& input) {
    VoronoiLabeling out;
    out.sites = canonical_sites(g, input);
    const std::size_t n = g.num_vertices();
    if (tree.label.size() != n) throw std::invalid_argument("tree labels do not cover the graph");

    // B': tree nodes on some root-to-label(site) path, numbered n + rank in node-id order.
    std::vector<char> in_subtree(tree.nodes.size(), 0);
    for (VertexId s : out.sites) {
        for (std::size_t v = tree.label[s]; v != SeparatorNode::kNoNode && !in_subtree[v]; v = tree.nodes[v].parent) {
            in_subtree[v] = 1;
        }
    }
    std::vector<VertexId> fresh(tree.nodes.size(), kNoVertex);
    std::size_t count = 0;
    for (std::size_t v = 0; v < tree.nodes.size(); ++v) {
        if (in_subtree[v]) fresh[v] = static_cast<VertexId>(n + count++);
    }

    auto adj = arcs_of(g, count);
    auto link = [&](VertexId a, VertexId b) {
        adj[a].push_back({b, 0.0});
        adj[b].push_back({a, 0.0});
    };
    for (std::size_t v = 0; v < tree.nodes.size(); ++v) {
        if (in_subtree[v] && tree.nodes[v].parent != SeparatorNode::kNoNode) link(fresh[tree.nodes[v].parent], fresh[v]);
    }
    for (VertexId s : out.sites) link(fresh[tree.label[s]], s);

    // Sites are anchors tagged with their own index; B' carries a tag below every site.
    std::vector<std::int64_t> anchor(n + count, kFree);
    for (VertexId s : out.sites) anchor[s] = s;
    TaggedSearch search(adj, {{fresh[0], -1}}, anchor);

    out.dist.assign(search.dist.begin(), search.dist.begin() + static_cast<std::ptrdiff_t>(n));
    out.label.assign(n, kNoVertex);
    for (VertexId v = 0; v < n; ++v) {
        if (out.dist[v] == kUnreachable) continue;
        VertexId w = v;
        while (w != kNoVertex && anchor[w] == kFree) w = search.parent[w];
        out.label[v] = w;
    }
    return out;
}

}  // namespace roadgeom
