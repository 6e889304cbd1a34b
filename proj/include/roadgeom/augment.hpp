#pragma once

#include "roadgeom/crossings.hpp"
#include "roadgeom/disks.hpp"

#include <optional>
#include <vector>

namespace roadgeom {

enum class Direction : std::uint8_t { up, down, left, right };

const char* to_string(Direction d);

struct Shortcut {
    VertexId origin = 0;
    VertexId target = 0;
    Direction direction = Direction::up;

    bool operator==(const Shortcut&) const = default;
};

/// Base edges (usable both ways) plus directed axis shortcuts, sorted by (origin, direction).
struct MixedAugmentedGraph {
    GeometricGraph base;
    std::vector<Shortcut> shortcuts;
};

/// Ray parameter t >= 0 at which the axis ray from p meets segment a-b, if any.
std::optional<double> axis_ray_parameter(const Point2d& p, Direction d, const Point2d& a, const Point2d& b);

/// Shoots four axis rays from every vertex of `p.base` against the base edges not incident to
/// it, marching a uniform segment grid. Rays through a vertex or along a collinear edge hit at
/// the first common point; the target is the endpoint nearer the hit point (lower index on
/// ties), and equal-parameter hits prefer the nearer, then lower, target. Only original
/// vertices and edges take part, so targets index the base graph and its natural disk system.
MixedAugmentedGraph grid_augment(const PlanarizedGraph& p);
MixedAugmentedGraph grid_augment(const GeometricGraph& g);

struct HopRecord {
    VertexId from = 0;
    VertexId to = 0;
    std::size_t hops = 0;
};

struct NeighborlyReport {
    std::size_t cutoff = 250;
    std::size_t pairs_checked = 0;  // directed pairs
    std::size_t max_hops_augmented = 0;
    std::size_t max_hops_plain = 0;
    bool augmented_truncated = false;  // some pair unreachable within cutoff
    bool plain_truncated = false;
    std::vector<HopRecord> worst_augmented;  // at most 10, hops descending
    std::vector<HopRecord> worst_plain;
};

/// For every intersecting disk pair (v, w), the BFS hop distance v -> w and w -> v over out-arcs
/// (base edges both ways, plus shortcuts for the augmented variant). Pairs not reached within
/// the cutoff count as `cutoff` hops and set the truncation flag. Disk indices must be base
/// vertex indices.
NeighborlyReport neighborly_check(const MixedAugmentedGraph& a, const DiskSystem& s,
                                  std::size_t cutoff = 250);

struct ClusteringReport {
    std::vector<std::size_t> components;  // per disk: components of R(v)
    std::size_t max_components = 0;
};

/// R(v) = intersecting disks smaller than v in (radius, index) order; counts the connected
/// components of the intersection graph induced on R(v).
ClusteringReport clustering_check(const DiskSystem& s);

}  // namespace roadgeom
