#pragma once

#include "roadgeom/geometry.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace roadgeom {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct Vertex {
    std::int64_t id = 0;  // external id (DIMACS / CSV)
    Point2d position = Point2d::Zero();

    bool operator==(const Vertex& o) const { return id == o.id && position == o.position; }
};

/// Undirected edge between vertex indices, stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    double weight = 0.0;
    int level = 4;

    bool operator==(const Edge&) const = default;
    VertexId other(VertexId x) const { return x == u ? v : u; }
};

/// Road network: vertices with planar positions, weighted undirected edges with hierarchy
/// levels 1..4. Vertices are held in ascending external-id order, so index order and id order
/// agree. Immutable after construction.
class GeometricGraph {
public:
    GeometricGraph() = default;

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Point2d& position(VertexId v) const { return vertices_[v].position; }
    std::int64_t external_id(VertexId v) const { return vertices_[v].id; }
    std::optional<VertexId> index_of(std::int64_t external_id) const;

    double length(EdgeId e) const {
        return distance(position(edges_[e].u), position(edges_[e].v));
    }

    /// Parallel edges folded into their minimum-weight representative during construction.
    std::size_t collapsed_duplicates() const { return collapsed_duplicates_; }
    /// Vertices sharing their exact coordinates with a lower-index vertex.
    std::size_t coincident_vertices() const { return coincident_vertices_; }

    bool operator==(const GeometricGraph& o) const {
        return vertices_ == o.vertices_ && edges_ == o.edges_;
    }

private:
    friend class GraphBuilder;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::size_t collapsed_duplicates_ = 0;
    std::size_t coincident_vertices_ = 0;
};

/// Accumulates vertices (by external id) and edges (by external ids), then validates.
class GraphBuilder {
public:
    void add_vertex(std::int64_t id, double x, double y);
    void add_edge(std::int64_t u, std::int64_t v, double weight, int level = 4);
    void reserve(std::size_t vertices, std::size_t edges);

    /// Throws ValidationError on duplicate ids, dangling endpoints, self-loops, negative or
    /// non-finite values, or levels outside 1..4.
    GeometricGraph build() &&;

private:
    struct PendingEdge {
        std::int64_t u, v;
        double weight;
        int level;
    };
    std::vector<Vertex> vertices_;
    std::vector<PendingEdge> edges_;
};

/// Compressed undirected adjacency over a GeometricGraph.
class Adjacency {
public:
    struct Arc {
        VertexId target;
        EdgeId edge;
        double weight;
    };

    Adjacency() = default;
    explicit Adjacency(const GeometricGraph& g);

    std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::span<const Arc> neighbors(VertexId v) const {
        return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

private:
    std::vector<std::size_t> offsets_;
    std::vector<Arc> arcs_;
};

struct NetworkStats {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t max_degree = 0;
    std::map<std::size_t, std::size_t> degree_histogram;
};

NetworkStats stats(const GeometricGraph& g);

}  // namespace roadgeom
