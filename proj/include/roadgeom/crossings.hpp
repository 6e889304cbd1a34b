#pragma once

#include "roadgeom/disks.hpp"
#include "roadgeom/graph.hpp"

#include <map>
#include <utility>
#include <vector>

namespace roadgeom {

enum class CrossingKind : std::uint8_t { proper, endpoint_touch, collinear_overlap };

const char* to_string(CrossingKind kind);

/// One contact between two edges, e1 < e2.
struct CrossingRecord {
    EdgeId e1 = 0;
    EdgeId e2 = 0;
    Point2d point = Point2d::Zero();
    std::pair<int, int> level_pair{4, 4};  // (level of e1, level of e2)
    CrossingKind kind = CrossingKind::proper;

    bool operator==(const CrossingRecord&) const = default;
};

/// All edge pairs whose segments meet, sorted by (e1, e2). Proper crossings are interior to
/// both segments; edges sharing a vertex are reported only when they overlap collinearly.
std::vector<CrossingRecord> find_crossings(const GeometricGraph& g);

std::size_t count_proper(const std::vector<CrossingRecord>& crossings);

/// Counts by unordered level pair (smaller level first).
std::map<std::pair<int, int>, std::size_t> crossing_histogram(
    const std::vector<CrossingRecord>& crossings);

/// Indices of proper crossings whose nearer endpoints (one per edge, lower index on ties) have
/// disjoint natural disks. Empty on every valid input.
std::vector<std::size_t> crossing_charge_violations(const GeometricGraph& g,
                                                    const std::vector<CrossingRecord>& crossings,
                                                    const DiskSystem& s);

/// G' with every proper crossing promoted to a vertex. Crossing vertices get external ids
/// after the largest input id; sub-edges inherit the level and a length-proportional share of
/// the original weight.
struct PlanarizedGraph {
    struct CrossingVertex {
        VertexId vertex;  // index in `graph`
        Point2d point;
        EdgeId e1;
        EdgeId e2;
    };

    GeometricGraph base;
    GeometricGraph graph;
    std::vector<CrossingVertex> crossing_vertices;
    /// split_edges[e] = sub-edge ids of `graph`, in order from base edge e's u to its v.
    std::vector<std::vector<EdgeId>> split_edges;
};

/// Throws DegeneracyError on collinear overlaps or coincident crossing points along an edge,
/// and InvariantError if the re-check still finds a proper crossing.
PlanarizedGraph planarize(const GeometricGraph& g, const std::vector<CrossingRecord>& crossings);

}  // namespace roadgeom
