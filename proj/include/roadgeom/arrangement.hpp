#pragma once

#include "roadgeom/augment.hpp"
#include "roadgeom/disks.hpp"

#include <string>
#include <vector>

namespace roadgeom {

struct ArrangementVertex {
    Point2d point = Point2d::Zero();
    VertexId c1 = 0;          // circle indices, c1 < c2
    VertexId c2 = kNoVertex;  // kNoVertex for a sentinel
    std::uint8_t slot = 0;    // which of the pair's intersection points
    bool tangent = false;

    bool sentinel() const { return c2 == kNoVertex; }
};

/// Arrangement of the circles bounding a disk system. Zero-radius disks have no circle and are
/// left out (inactive). Vertices are listed by (c1, c2, slot), then sentinels by circle.
struct CircleArrangement {
    std::vector<Circle2d> circles;
    std::vector<char> active;
    std::vector<ArrangementVertex> vertices;
    /// sequence[c] = vertices on circle c, counterclockwise from angle 0.
    std::vector<std::vector<std::uint32_t>> sequence;
    std::size_t intersection_vertices = 0;  // V without sentinels
    std::size_t num_vertices = 0;           // V with sentinels
    std::size_t num_edges = 0;              // arcs
    std::size_t components = 0;             // C
    std::size_t face_cycles = 0;            // boundary cycles found by tracing
    std::size_t faces = 0;                  // F = face_cycles - C + 1

    bool euler_holds() const { return num_vertices + faces == num_edges + 1 + components; }
};

/// All pairwise intersections over s.pairs, each circle's vertices sorted by angle. Throws
/// DegeneracyError on duplicate circles or on three circles meeting in one point.
CircleArrangement build_naive(const DiskSystem& s);

/// Splice builder: circles in (radius, index) order; each one is threaded radially through the
/// components of R(v) with per-component traversals and sorted insertion into the existing
/// sequences. Throws InvariantError when the component structure disagrees with `clustering`.
CircleArrangement build_inductive(const DiskSystem& s, const ClusteringReport& clustering);

/// Same vertices (points within `tolerance`) and identical per-circle sequences. On mismatch,
/// `why` (if given) receives a description.
bool arrangements_equivalent(const CircleArrangement& a, const CircleArrangement& b, double tolerance,
                             std::string* why = nullptr);

struct ComplexityAudit {
    std::size_t vertices = 0;  // intersection vertices
    std::size_t pairs = 0;
    double ratio_to_n = 0.0;
};

/// Throws InvariantError unless V <= 2 * |pairs|.
ComplexityAudit complexity_audit(const CircleArrangement& a, const DiskSystem& s);

/// Number of disks covering arrangement vertex `v`.
std::size_t depth_at_vertex(const CircleArrangement& a, const DiskSystem& s, std::size_t v);

}  // namespace roadgeom
