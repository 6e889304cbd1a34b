#include "roadgeom/disks.hpp"

#include "roadgeom/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

namespace roadgeom {

namespace {

/// Disks of one doubling radius band, bucketed in a grid with cells twice the band's
/// largest radius, sorted by (row, column).
struct RadiusBand {
    double max_radius = 0.0;
    double cell = 1.0;
    struct Entry {
        std::int64_t row;
        std::int64_t col;
        VertexId disk;
        bool operator<(const Entry& o) const {
            return std::tie(row, col, disk) < std::tie(o.row, o.col, o.disk);
        }
    };
    std::vector<Entry> entries;

    std::int64_t cell_of(double v) const { return static_cast<std::int64_t>(std::floor(v / cell)); }
};

}  // namespace

DiskSystem::DiskSystem(std::vector<Disk> disks) : disks_(std::move(disks)) {
    const std::size_t n = disks_.size();
    if (n == 0) {
        offsets_.assign(1, 0);
        return;
    }
    double rmin = 0.0;
    double rmax = 0.0;
    Point2d lo = disks_[0].center;
    Point2d hi = lo;
    for (const Disk& d : disks_) {
        if (d.radius > 0.0 && (rmin == 0.0 || d.radius < rmin)) rmin = d.radius;
        rmax = std::max(rmax, d.radius);
        lo = lo.cwiseMin(d.center);
        hi = hi.cwiseMax(d.center);
    }
    std::vector<int> band_of(n, 0);
    int bands = 1;
    if (rmin > 0.0) {
        for (std::size_t i = 0; i < n; ++i) {
            if (disks_[i].radius > 0.0) {
                band_of[i] = std::max(0, static_cast<int>(std::floor(std::log2(disks_[i].radius / rmin))));
            }
            bands = std::max(bands, band_of[i] + 1);
        }
    }
    std::vector<RadiusBand> band(bands);
    for (std::size_t i = 0; i < n; ++i) {
        band[band_of[i]].max_radius = std::max(band[band_of[i]].max_radius, disks_[i].radius);
    }
    const double extent = std::max((hi - lo).maxCoeff(), 0.0);
    const double fallback = extent > 0.0 ? extent / std::sqrt(static_cast<double>(n)) : 1.0;
    for (auto& b : band) b.cell = b.max_radius > 0.0 ? 2.0 * b.max_radius : fallback;
    for (VertexId i = 0; i < n; ++i) {
        RadiusBand& b = band[band_of[i]];
        b.entries.push_back({b.cell_of(disks_[i].center.y()), b.cell_of(disks_[i].center.x()), i});
    }
    for (auto& b : band) std::sort(b.entries.begin(), b.entries.end());

    // Each disk queries its own band and every larger band; equal bands keep j > i only.
    std::vector<std::vector<std::pair<VertexId, VertexId>>> found(n);
    parallel_for(n, [&](std::size_t idx) {
        const auto i = static_cast<VertexId>(idx);
        const Disk& di = disks_[i];
        for (int c = band_of[i]; c < bands; ++c) {
            const RadiusBand& b = band[c];
            if (b.entries.empty()) continue;
            const double reach = di.radius + b.max_radius;
            const std::int64_t r0 = b.cell_of(di.center.y() - reach);
            const std::int64_t r1 = b.cell_of(di.center.y() + reach);
            const std::int64_t c0 = b.cell_of(di.center.x() - reach);
            const std::int64_t c1 = b.cell_of(di.center.x() + reach);
            for (std::int64_t r = r0; r <= r1; ++r) {
                auto it = std::lower_bound(b.entries.begin(), b.entries.end(),
                                           RadiusBand::Entry{r, c0, 0});
                for (; it != b.entries.end() && it->row == r && it->col <= c1; ++it) {
                    const VertexId j = it->disk;
                    if (j == i || (c == band_of[i] && j < i)) continue;
                    if (disks_intersect(di, disks_[j])) found[i].push_back({std::min(i, j), std::max(i, j)});
                }
            }
        }
    });
    for (auto& f : found) pairs_.insert(pairs_.end(), f.begin(), f.end());
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    build_adjacency();
}

void DiskSystem::build_adjacency() {
    const std::size_t n = disks_.size();
    offsets_.assign(n + 1, 0);
    for (const auto& [i, j] : pairs_) {
        ++offsets_[i + 1];
        ++offsets_[j + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.resize(offsets_[n]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [i, j] : pairs_) {
        adjacency_[cursor[i]++] = j;
        adjacency_[cursor[j]++] = i;
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
    }
}

bool DiskSystem::intersecting(VertexId i, VertexId j) const {
    const auto nb = neighbors(i);
    return std::binary_search(nb.begin(), nb.end(), j);
}

DiskSystem DiskSystem::restrict_to(std::span<const VertexId> members) const {
    DiskSystem out;
    out.disks_.reserve(members.size());
    std::vector<VertexId> local(disks_.size(), kNoVertex);
    for (VertexId k = 0; k < members.size(); ++k) {
        local[members[k]] = k;
        out.disks_.push_back(disks_[members[k]]);
    }
    for (VertexId k = 0; k < members.size(); ++k) {
        for (VertexId j : neighbors(members[k])) {
            const VertexId lj = local[j];
            if (lj != kNoVertex && k < lj) out.pairs_.push_back({k, lj});
        }
    }
    std::sort(out.pairs_.begin(), out.pairs_.end());
    out.build_adjacency();
    return out;
}

DiskSystem build_disk_system(const GeometricGraph& g) {
    std::vector<Disk> disks(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) disks[v] = {v, g.position(v), 0.0};
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& edge = g.edges()[e];
        const double half = 0.5 * g.length(e);
        disks[edge.u].radius = std::max(disks[edge.u].radius, half);
        disks[edge.v].radius = std::max(disks[edge.v].radius, half);
    }
    return DiskSystem(std::move(disks));
}

PlyReport ply_report(const DiskSystem& s) {
    PlyReport r;
    const std::size_t n = s.size();
    r.center_ply.assign(n, 1);
    for (const auto& [i, j] : s.pairs()) {
        if (disk_covers(s.disk(i), s.disk(j).center)) ++r.center_ply[j];
        if (disk_covers(s.disk(j), s.disk(i).center)) ++r.center_ply[i];
    }
    if (n == 0) {
        r.center_ply.clear();
        return r;
    }
    std::vector<std::size_t> sorted = r.center_ply;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    r.max_center_ply = sorted.front();
    const auto k = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n))));
    r.kth_largest_center_ply = sorted[std::max<std::size_t>(k, 1) - 1];
    for (VertexId i = 0; i < n; ++i) r.max_disk_degree = std::max(r.max_disk_degree, s.degree(i));
    return r;
}

std::size_t depth_at(const DiskSystem& s, const Point2d& p) {
    return static_cast<std::size_t>(std::count_if(s.disks().begin(), s.disks().end(),
                                                  [&](const Disk& d) { return disk_covers(d, p); }));
}

ExceptionalDecomposition exceptional_decomposition(const DiskSystem& s, std::size_t k) {
    ExceptionalDecomposition out;
    const std::size_t n = s.size();
    const PlyReport ply = ply_report(s);
    std::vector<std::size_t> residual = ply.center_ply;
    std::vector<char> removed(n, 0);

    // covers[i] = other centers lying in disk i.
    auto covers_violation = [&](VertexId i) {
        if (residual[i] > k) return true;
        for (VertexId j : s.neighbors(i)) {
            if (!removed[j] && residual[j] > k && disk_covers(s.disk(i), s.disk(j).center)) return true;
        }
        return false;
    };

    using Key = std::pair<std::size_t, VertexId>;  // (degree, -index) via comparator below
    auto cmp = [](const Key& a, const Key& b) {
        return a.first < b.first || (a.first == b.first && a.second > b.second);
    };
    std::priority_queue<Key, std::vector<Key>, decltype(cmp)> queue(cmp);
    std::size_t violations = 0;
    for (VertexId i = 0; i < n; ++i) {
        queue.push({s.degree(i), i});
        if (residual[i] > k) ++violations;
    }
    while (violations > 0 && !queue.empty()) {
        const VertexId i = queue.top().second;
        queue.pop();
        // Plies only decrease, so a disk that covers no violating center never will again.
        if (!covers_violation(i)) continue;
        removed[i] = 1;
        out.exceptional.push_back(i);
        if (residual[i] > k) --violations;
        for (VertexId j : s.neighbors(i)) {
            if (removed[j] || !disk_covers(s.disk(i), s.disk(j).center)) continue;
            if (residual[j] == k + 1) --violations;
            --residual[j];
        }
    }
    for (VertexId i = 0; i < n; ++i) {
        if (!removed[i]) out.residual_max_center_ply = std::max(out.residual_max_center_ply, residual[i]);
    }
    for (VertexId i : out.exceptional) out.max_exceptional_degree = std::max(out.max_exceptional_degree, s.degree(i));
    const auto bound = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    out.size_certified = out.exceptional.size() <= bound;
    out.degree_certified = out.max_exceptional_degree <= bound;
    return out;
}

ChargeAudit charge_audit(const DiskSystem& s) {
    ChargeAudit a;
    a.containment.assign(s.size(), 0);
    a.tall.assign(s.size(), 0);
    for (const auto& [i, j] : s.pairs()) {
        const Disk& di = s.disk(i);
        const Disk& dj = s.disk(j);
        const bool j_holds_i = disk_covers(dj, di.center);
        const bool i_holds_j = disk_covers(di, dj.center);
        const VertexId smaller = smaller_disk(di, i, dj, j) ? i : j;
        if (j_holds_i && i_holds_j) {
            ++a.containment[smaller];
        } else if (j_holds_i) {
            ++a.containment[i];
        } else if (i_holds_j) {
            ++a.containment[j];
        } else {
            ++a.tall[smaller];
        }
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        a.max_containment_charges = std::max(a.max_containment_charges, a.containment[i]);
        a.max_tall_charges = std::max(a.max_tall_charges, a.tall[i]);
    }
    return a;
}

}  // namespace roadgeom
