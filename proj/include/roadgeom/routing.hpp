#pragma once

#include "roadgeom/graph.hpp"
#include "roadgeom/separator.hpp"

#include <limits>
#include <vector>

namespace roadgeom {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

struct ShortestPathResult {
    VertexId source = 0;
    std::vector<double> dist;      // kUnreachable where no path exists
    std::vector<VertexId> parent;  // kNoVertex at the source and at unreachable vertices
};

/// Heap Dijkstra over vertex indices. Equal keys are settled in vertex-index order and a
/// parent changes only on strict improvement. Throws std::out_of_range for an unknown source.
ShortestPathResult sssp(const GeometricGraph& g, VertexId source);

struct VoronoiLabeling {
    std::vector<VertexId> sites;  // sorted, distinct
    std::vector<VertexId> label;  // nearest site, lower site index on ties; kNoVertex if unreachable
    std::vector<double> dist;
};

/// Multi-source Dijkstra on (distance, site) keys.
VoronoiLabeling voronoi_direct(const GeometricGraph& g, const std::vector<VertexId>& sites);

/// Voronoi labels through the decomposition tree: the subtree B' of root-to-label(site) paths
/// is attached to g with zero-weight edges (tree edges, plus one edge from each site's tree
/// node to the site), a single search runs from the root of B', and each vertex takes the
/// first site on its parent chain. `tree.label` must be indexed by vertex index of g.
VoronoiLabeling voronoi_via_tree(const GeometricGraph& g, const SeparatorTree& tree,
                                 const std::vector<VertexId>& sites);

}  // namespace roadgeom
