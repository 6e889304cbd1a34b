#pragma once

#include "roadgeom/graph.hpp"

#include <span>
#include <utility>
#include <vector>

namespace roadgeom {

struct Disk {
    VertexId vertex = 0;
    Point2d center = Point2d::Zero();
    double radius = 0.0;

    Circle2d circle() const { return {center, radius}; }
};

/// Closed-disk intersection; tangent disks intersect.
inline bool disks_intersect(const Disk& a, const Disk& b) {
    return distance(a.center, b.center) <= a.radius + b.radius;
}

/// Closed containment of a point.
inline bool disk_covers(const Disk& d, const Point2d& p) {
    return distance(d.center, p) <= d.radius;
}

/// Strict (radius, index) order used for "smaller disk" everywhere.
inline bool smaller_disk(const Disk& a, VertexId ia, const Disk& b, VertexId ib) {
    return a.radius < b.radius || (a.radius == b.radius && ia < ib);
}

/// A set of disks together with every intersecting pair (i < j) and the matching adjacency.
class DiskSystem {
public:
    DiskSystem() = default;
    /// Enumerates intersecting pairs with a grid per doubling radius band.
    explicit DiskSystem(std::vector<Disk> disks);

    std::size_t size() const { return disks_.size(); }
    const std::vector<Disk>& disks() const { return disks_; }
    const Disk& disk(VertexId i) const { return disks_[i]; }
    const std::vector<std::pair<VertexId, VertexId>>& pairs() const { return pairs_; }
    std::span<const VertexId> neighbors(VertexId i) const {
        return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
    }
    std::size_t degree(VertexId i) const { return offsets_[i + 1] - offsets_[i]; }
    bool intersecting(VertexId i, VertexId j) const;

    /// System restricted to `members` (indices into this system). The result is re-indexed
    /// 0..k-1 in the order given; Disk::vertex keeps the original vertex id.
    DiskSystem restrict_to(std::span<const VertexId> members) const;

private:
    void build_adjacency();

    std::vector<Disk> disks_;
    std::vector<std::pair<VertexId, VertexId>> pairs_;
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> adjacency_;
};

/// Natural neighborhood system: a disk at each vertex with radius half the longest incident
/// edge (geometric length); isolated vertices get radius 0.
DiskSystem build_disk_system(const GeometricGraph& g);

struct PlyReport {
    std::vector<std::size_t> center_ply;
    std::size_t max_center_ply = 0;
    std::size_t kth_largest_center_ply = 0;  // k = floor(sqrt(n))
    std::size_t max_disk_degree = 0;
};

PlyReport ply_report(const DiskSystem& s);

/// Number of disks covering point p, by scanning every disk.
std::size_t depth_at(const DiskSystem& s, const Point2d& p);

/// Greedy exceptional set: repeatedly removes the highest-degree disk (ties: lower index)
/// among those covering a center whose residual ply exceeds k.
struct ExceptionalDecomposition {
    std::vector<VertexId> exceptional;  // indices into the system, in removal order
    std::size_t residual_max_center_ply = 0;
    std::size_t max_exceptional_degree = 0;
    bool size_certified = false;    // |T| <= ceil(sqrt n)
    bool degree_certified = false;  // every disk in T meets <= ceil(sqrt n) disks
};

ExceptionalDecomposition exceptional_decomposition(const DiskSystem& s, std::size_t k);

/// Charges of the pair-counting argument: every intersecting pair is charged once, either
/// to a disk whose center lies in the other (containment) or, failing that, to the smaller
/// disk (tall).
struct ChargeAudit {
    std::vector<std::size_t> containment;
    std::vector<std::size_t> tall;
    std::size_t max_containment_charges = 0;
    std::size_t max_tall_charges = 0;
};

ChargeAudit charge_audit(const DiskSystem& s);

}  // namespace roadgeom
