#include "roadgeom/augment.hpp"

#include "roadgeom/parallel.hpp"
#include "roadgeom/segment_grid.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <numeric>
#include <tuple>

namespace roadgeom {

const char* to_string(Direction d) {
    switch (d) {
        case Direction::up: return "up";
        case Direction::down: return "down";
        case Direction::left: return "left";
        case Direction::right: return "right";
    }
    return "?";
}

namespace {

constexpr Direction kDirections[] = {Direction::up, Direction::down, Direction::left, Direction::right};

bool vertical(Direction d) { return d == Direction::up || d == Direction::down; }
double sign_of(Direction d) { return d == Direction::up || d == Direction::right ? 1.0 : -1.0; }

/// Coordinates (along the ray axis, across it).
std::pair<double, double> axes(const Point2d& p, Direction d) {
    return vertical(d) ? std::pair{p.y(), p.x()} : std::pair{p.x(), p.y()};
}

Point2d hit_point(const Point2d& p, Direction d, double t) {
    const double s = sign_of(d);
    return vertical(d) ? Point2d(p.x(), p.y() + s * t) : Point2d(p.x() + s * t, p.y());
}

}  // namespace

std::optional<double> axis_ray_parameter(const Point2d& p, Direction d, const Point2d& a, const Point2d& b) {
    const double s = sign_of(d);
    const auto [pa, pc] = axes(p, d);
    const auto [aa, ac] = axes(a, d);
    const auto [ba, bc] = axes(b, d);
    if (pc < std::min(ac, bc) || pc > std::max(ac, bc)) return std::nullopt;
    if (ac == bc) {
        // Segment lies on the ray's line.
        const double lo = std::min(s * (aa - pa), s * (ba - pa));
        const double hi = std::max(s * (aa - pa), s * (ba - pa));
        if (hi < 0.0) return std::nullopt;
        return std::max(lo, 0.0);
    }
    double along;
    if (pc == ac) {
        along = aa;
    } else if (pc == bc) {
        along = ba;
    } else {
        along = aa + (ba - aa) * (pc - ac) / (bc - ac);
    }
    const double t = s * (along - pa);
    if (t < 0.0) return std::nullopt;
    return t;
}

namespace {

struct Candidate {
    double t;
    double target_distance;
    VertexId target;
    EdgeId edge;
    bool operator<(const Candidate& o) const {
        return std::tie(t, target_distance, target, edge) < std::tie(o.t, o.target_distance, o.target, o.edge);
    }
};

std::optional<Candidate> test_edge(const GeometricGraph& g, VertexId v, Direction d, EdgeId e) {
    const Edge& edge = g.edges()[e];
    if (edge.u == v || edge.v == v) return std::nullopt;
    const Point2d& p = g.position(v);
    const auto t = axis_ray_parameter(p, d, g.position(edge.u), g.position(edge.v));
    if (!t) return std::nullopt;
    const Point2d h = hit_point(p, d, *t);
    const double du = distance(h, g.position(edge.u));
    const double dv = distance(h, g.position(edge.v));
    // edge.u < edge.v, so ties go to u.
    const bool take_u = du <= dv;
    return Candidate{*t, take_u ? du : dv, take_u ? edge.u : edge.v, e};
}

std::optional<Candidate> shoot(const GeometricGraph& g, const SegmentGrid& grid, VertexId v, Direction d) {
    const Point2d& p = g.position(v);
    std::optional<Candidate> best;
    const bool vert = vertical(d);
    const double s = sign_of(d);
    const std::int64_t fixed = vert ? grid.column_of(p.x()) : grid.row_of(p.y());
    const std::int64_t start = vert ? grid.row_of(p.y()) : grid.column_of(p.x());
    const auto limit = static_cast<std::int64_t>(vert ? grid.rows() : grid.columns());
    const double origin_along = vert ? grid.origin().y() : grid.origin().x();
    const double p_along = vert ? p.y() : p.x();
    for (std::int64_t k = start; k >= 0 && k < limit; k += static_cast<std::int64_t>(s)) {
        const auto items = vert ? grid.cell(static_cast<std::size_t>(fixed), static_cast<std::size_t>(k))
                                : grid.cell(static_cast<std::size_t>(k), static_cast<std::size_t>(fixed));
        for (std::uint32_t e : items) {
            const auto c = test_edge(g, v, d, e);
            if (c && (!best || *c < *best)) best = c;
        }
        if (best) {
            // Stop once the best hit lies strictly inside the cells already scanned.
            const double hit = p_along + s * best->t;
            const double boundary = origin_along + static_cast<double>(s > 0 ? k + 1 : k) * grid.cell_size();
            if (s > 0 ? hit < boundary : hit > boundary) break;
        }
    }
    return best;
}

}  // namespace

MixedAugmentedGraph grid_augment(const GeometricGraph& g) {
    MixedAugmentedGraph out;
    out.base = g;
    if (g.num_edges() == 0) return out;
    std::vector<SegmentGrid::Segment> segs;
    segs.reserve(g.num_edges());
    for (const Edge& e : g.edges()) segs.push_back({g.position(e.u), g.position(e.v)});
    const SegmentGrid grid(std::move(segs));

    std::vector<std::array<std::optional<Candidate>, 4>> hits(g.num_vertices());
    parallel_for(g.num_vertices(), [&](std::size_t v) {
        for (int k = 0; k < 4; ++k) hits[v][k] = shoot(g, grid, static_cast<VertexId>(v), kDirections[k]);
    });
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        for (int k = 0; k < 4; ++k) {
            if (hits[v][k]) out.shortcuts.push_back({v, hits[v][k]->target, kDirections[k]});
        }
    }
    return out;
}

MixedAugmentedGraph grid_augment(const PlanarizedGraph& p) { return grid_augment(p.base); }

namespace {

struct OutArcs {
    std::vector<std::size_t> offsets;
    std::vector<VertexId> targets;
};

OutArcs out_arcs(const MixedAugmentedGraph& a, bool with_shortcuts) {
    const std::size_t n = a.base.num_vertices();
    std::vector<std::vector<VertexId>> lists(n);
    for (const Edge& e : a.base.edges()) {
        lists[e.u].push_back(e.v);
        lists[e.v].push_back(e.u);
    }
    if (with_shortcuts) {
        for (const Shortcut& s : a.shortcuts) lists[s.origin].push_back(s.target);
    }
    OutArcs out;
    out.offsets.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(lists[v].begin(), lists[v].end());
        lists[v].erase(std::unique(lists[v].begin(), lists[v].end()), lists[v].end());
        out.offsets[v + 1] = out.offsets[v] + lists[v].size();
    }
    out.targets.reserve(out.offsets[n]);
    for (auto& l : lists) out.targets.insert(out.targets.end(), l.begin(), l.end());
    return out;
}

struct HopSummary {
    std::size_t max_hops = 0;
    bool truncated = false;
    std::vector<HopRecord> worst;
};

bool worse(const HopRecord& a, const HopRecord& b) {
    return std::tie(b.hops, a.from, a.to) < std::tie(a.hops, b.from, b.to);
}

HopSummary hop_summary(const OutArcs& arcs, const DiskSystem& s, std::size_t cutoff) {
    const std::size_t n = s.size();
    std::vector<std::vector<HopRecord>> per_source(n);
    std::vector<char> any_truncated(n, 0);
    parallel_chunks(n, [&](std::size_t begin, std::size_t end) {
        std::vector<std::size_t> depth(n, 0);
        std::vector<std::size_t> stamp(n, 0);
        std::vector<char> wanted(n, 0);
        std::vector<VertexId> frontier;
        std::vector<VertexId> next;
        std::size_t epoch = 0;
        for (std::size_t src = begin; src < end; ++src) {
            const auto v = static_cast<VertexId>(src);
            const auto targets = s.neighbors(v);
            if (targets.empty()) continue;
            ++epoch;
            std::size_t remaining = 0;
            for (VertexId w : targets) {
                if (!wanted[w]) ++remaining;
                wanted[w] = 1;
            }
            stamp[v] = epoch;
            depth[v] = 0;
            frontier.assign(1, v);
            for (std::size_t level = 1; level <= cutoff && remaining > 0 && !frontier.empty(); ++level) {
                next.clear();
                for (VertexId x : frontier) {
                    for (std::size_t k = arcs.offsets[x]; k < arcs.offsets[x + 1]; ++k) {
                        const VertexId y = arcs.targets[k];
                        if (stamp[y] == epoch) continue;
                        stamp[y] = epoch;
                        depth[y] = level;
                        if (wanted[y]) --remaining;
                        next.push_back(y);
                    }
                }
                frontier.swap(next);
            }
            HopRecord worst{v, v, 0};
            for (VertexId w : targets) {
                wanted[w] = 0;
                std::size_t hops = cutoff;
                if (stamp[w] == epoch) {
                    hops = depth[w];
                } else {
                    any_truncated[src] = 1;
                }
                per_source[src].push_back({v, w, hops});
                if (hops > worst.hops) worst = {v, w, hops};
            }
            // Keep only this source's ten worst pairs.
            auto& list = per_source[src];
            std::sort(list.begin(), list.end(), worse);
            if (list.size() > 10) list.resize(10);
        }
    });
    HopSummary out;
    std::vector<HopRecord> all;
    for (std::size_t v = 0; v < n; ++v) {
        out.truncated = out.truncated || any_truncated[v];
        for (const HopRecord& r : per_source[v]) out.max_hops = std::max(out.max_hops, r.hops);
        all.insert(all.end(), per_source[v].begin(), per_source[v].end());
    }
    std::sort(all.begin(), all.end(), worse);
    if (all.size() > 10) all.resize(10);
    out.worst = std::move(all);
    return out;
}

}  // namespace

NeighborlyReport neighborly_check(const MixedAugmentedGraph& a, const DiskSystem& s, std::size_t cutoff) {
    if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
    if (s.size() != a.base.num_vertices()) {
        throw std::invalid_argument("disk system and graph have different vertex counts");
    }
    NeighborlyReport r;
    r.cutoff = cutoff;
    r.pairs_checked = 2 * s.pairs().size();
    auto aug = hop_summary(out_arcs(a, true), s, cutoff);
    auto plain = hop_summary(out_arcs(a, false), s, cutoff);
    r.max_hops_augmented = aug.max_hops;
    r.augmented_truncated = aug.truncated;
    r.worst_augmented = std::move(aug.worst);
    r.max_hops_plain = plain.max_hops;
    r.plain_truncated = plain.truncated;
    r.worst_plain = std::move(plain.worst);
    return r;
}

ClusteringReport clustering_check(const DiskSystem& s) {
    const std::size_t n = s.size();
    ClusteringReport r;
    r.components.assign(n, 0);
    parallel_chunks(n, [&](std::size_t begin, std::size_t end) {
        std::vector<VertexId> slot(n, kNoVertex);  // position of a disk within the current R(v)
        std::vector<VertexId> parent;
        std::vector<VertexId> members;
        for (std::size_t idx = begin; idx < end; ++idx) {
            const auto v = static_cast<VertexId>(idx);
            members.clear();
            for (VertexId w : s.neighbors(v)) {
                if (smaller_disk(s.disk(w), w, s.disk(v), v)) {
                    slot[w] = static_cast<VertexId>(members.size());
                    members.push_back(w);
                }
            }
            parent.resize(members.size());
            std::iota(parent.begin(), parent.end(), VertexId{0});
            auto find = [&](VertexId x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            std::size_t components = members.size();
            for (VertexId k = 0; k < members.size(); ++k) {
                for (VertexId y : s.neighbors(members[k])) {
                    if (slot[y] == kNoVertex || slot[y] <= k) continue;
                    const VertexId a = find(k);
                    const VertexId b = find(slot[y]);
                    if (a != b) {
                        parent[std::max(a, b)] = std::min(a, b);
                        --components;
                    }
                }
            }
            for (VertexId w : members) slot[w] = kNoVertex;
            r.components[v] = components;
        }
    });
    for (std::size_t c : r.components) r.max_components = std::max(r.max_components, c);
    return r;
}

}  // namespace roadgeom
