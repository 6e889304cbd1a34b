#include "roadgeom/crossings.hpp"

#include "roadgeom/errors.hpp"
#include "roadgeom/parallel.hpp"
#include "roadgeom/segment_grid.hpp"

#include <algorithm>
#include <optional>

namespace roadgeom {

const char* to_string(CrossingKind kind) {
    switch (kind) {
        case CrossingKind::proper: return "proper";
        case CrossingKind::endpoint_touch: return "endpoint-touch";
        case CrossingKind::collinear_overlap: return "collinear-overlap";
    }
    return "?";
}

namespace {

bool boxes_overlap(const SegmentGrid::Segment& s, const SegmentGrid::Segment& t) {
    return std::max(std::min(s.a.x(), s.b.x()), std::min(t.a.x(), t.b.x())) <=
               std::min(std::max(s.a.x(), s.b.x()), std::max(t.a.x(), t.b.x())) &&
           std::max(std::min(s.a.y(), s.b.y()), std::min(t.a.y(), t.b.y())) <=
               std::min(std::max(s.a.y(), s.b.y()), std::max(t.a.y(), t.b.y()));
}

std::optional<CrossingRecord> classify_pair(const GeometricGraph& g, EdgeId i, EdgeId j) {
    const Edge& e = g.edges()[i];
    const Edge& f = g.edges()[j];
    const bool shared = e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
    const auto contact =
        classify_segments(g.position(e.u), g.position(e.v), g.position(f.u), g.position(f.v), shared);
    if (contact.kind == ContactKind::none) return std::nullopt;
    CrossingRecord rec;
    rec.e1 = i;
    rec.e2 = j;
    rec.point = contact.point;
    rec.level_pair = {e.level, f.level};
    rec.kind = contact.kind == ContactKind::proper         ? CrossingKind::proper
               : contact.kind == ContactKind::endpoint_touch ? CrossingKind::endpoint_touch
                                                             : CrossingKind::collinear_overlap;
    return rec;
}

}  // namespace

std::vector<CrossingRecord> find_crossings(const GeometricGraph& g) {
    std::vector<SegmentGrid::Segment> segs;
    segs.reserve(g.num_edges());
    for (const Edge& e : g.edges()) segs.push_back({g.position(e.u), g.position(e.v)});
    const SegmentGrid grid(std::move(segs));

    // Candidate pairs per cell chunk, merged and de-duplicated.
    const std::size_t cells = grid.num_cells();
    std::vector<std::vector<std::uint64_t>> partial(std::max<std::size_t>(1, cells / 1024 + 1));
    const std::size_t per = (cells + partial.size() - 1) / partial.size();
    parallel_for(partial.size(), [&](std::size_t chunk) {
        auto& out = partial[chunk];
        const std::size_t end = std::min(cells, (chunk + 1) * per);
        for (std::size_t c = chunk * per; c < end; ++c) {
            const auto items = grid.cell(c);
            for (std::size_t a = 0; a < items.size(); ++a) {
                for (std::size_t b = a + 1; b < items.size(); ++b) {
                    const std::uint32_t i = std::min(items[a], items[b]);
                    const std::uint32_t j = std::max(items[a], items[b]);
                    if (boxes_overlap(grid.segments()[i], grid.segments()[j])) {
                        out.push_back((static_cast<std::uint64_t>(i) << 32) | j);
                    }
                }
            }
        }
    });
    std::vector<std::uint64_t> candidates;
    for (auto& p : partial) candidates.insert(candidates.end(), p.begin(), p.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<std::optional<CrossingRecord>> slots(candidates.size());
    parallel_for(candidates.size(), [&](std::size_t k) {
        slots[k] = classify_pair(g, static_cast<EdgeId>(candidates[k] >> 32),
                                 static_cast<EdgeId>(candidates[k] & 0xffffffffu));
    });
    std::vector<CrossingRecord> out;
    for (auto& s : slots) {
        if (s) out.push_back(*s);
    }
    return out;
}

std::size_t count_proper(const std::vector<CrossingRecord>& crossings) {
    return static_cast<std::size_t>(std::count_if(crossings.begin(), crossings.end(), [](const auto& c) {
        return c.kind == CrossingKind::proper;
    }));
}

std::map<std::pair<int, int>, std::size_t> crossing_histogram(
    const std::vector<CrossingRecord>& crossings) {
    std::map<std::pair<int, int>, std::size_t> hist;
    for (const CrossingRecord& c : crossings) {
        const auto [a, b] = c.level_pair;
        ++hist[{std::min(a, b), std::max(a, b)}];
    }
    return hist;
}

std::vector<std::size_t> crossing_charge_violations(const GeometricGraph& g,
                                                    const std::vector<CrossingRecord>& crossings,
                                                    const DiskSystem& s) {
    auto nearer = [&](EdgeId e, const Point2d& p) {
        const Edge& edge = g.edges()[e];
        return distance(g.position(edge.u), p) <= distance(g.position(edge.v), p) ? edge.u : edge.v;
    };
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < crossings.size(); ++k) {
        const CrossingRecord& c = crossings[k];
        if (c.kind != CrossingKind::proper) continue;
        const VertexId u = nearer(c.e1, c.point);
        const VertexId w = nearer(c.e2, c.point);
        if (!disks_intersect(s.disk(u), s.disk(w))) out.push_back(k);
    }
    return out;
}

PlanarizedGraph planarize(const GeometricGraph& g, const std::vector<CrossingRecord>& crossings) {
    PlanarizedGraph out;
    out.base = g;

    std::int64_t next_id = g.num_vertices() == 0 ? 0 : g.vertices().back().id + 1;
    GraphBuilder b;
    for (const Vertex& v : g.vertices()) b.add_vertex(v.id, v.position.x(), v.position.y());

    // Per edge: (parameter along u->v, external id of the crossing vertex).
    std::vector<std::vector<std::pair<double, std::int64_t>>> cuts(g.num_edges());
    auto param = [&](EdgeId e, const Point2d& p) {
        const Point2d a = g.position(g.edges()[e].u);
        const Point2d d = g.position(g.edges()[e].v) - a;
        return (p - a).dot(d) / d.squaredNorm();
    };
    for (const CrossingRecord& c : crossings) {
        if (c.kind == CrossingKind::collinear_overlap) {
            throw DegeneracyError("collinear overlap between edges " + std::to_string(c.e1) +
                                  " and " + std::to_string(c.e2) + " cannot be planarized");
        }
        if (c.kind != CrossingKind::proper) continue;
        const std::int64_t id = next_id++;
        b.add_vertex(id, c.point.x(), c.point.y());
        out.crossing_vertices.push_back(
            {static_cast<VertexId>(g.num_vertices() + out.crossing_vertices.size()), c.point, c.e1, c.e2});
        cuts[c.e1].push_back({param(c.e1, c.point), id});
        cuts[c.e2].push_back({param(c.e2, c.point), id});
    }

    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto& list = cuts[e];
        std::sort(list.begin(), list.end());
        const Edge& edge = g.edges()[e];
        std::int64_t prev = g.external_id(edge.u);
        double prev_t = 0.0;
        for (std::size_t k = 0; k < list.size(); ++k) {
            if (list[k].first <= prev_t || (k > 0 && list[k].first == list[k - 1].first)) {
                throw DegeneracyError("coincident crossing points along edge " + std::to_string(e));
            }
            b.add_edge(prev, list[k].second, edge.weight * (list[k].first - prev_t), edge.level);
            prev = list[k].second;
            prev_t = list[k].first;
        }
        b.add_edge(prev, g.external_id(edge.v), edge.weight * (1.0 - prev_t), edge.level);
    }
    out.graph = std::move(b).build();

    auto find_edge = [&](std::int64_t a, std::int64_t c) {
        VertexId u = *out.graph.index_of(a);
        VertexId v = *out.graph.index_of(c);
        if (u > v) std::swap(u, v);
        const auto& edges = out.graph.edges();
        const auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{u, v},
                                         [](const Edge& x, const std::pair<VertexId, VertexId>& key) {
                                             return std::pair{x.u, x.v} < key;
                                         });
        return static_cast<EdgeId>(it - edges.begin());
    };
    out.split_edges.resize(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        std::int64_t prev = g.external_id(g.edges()[e].u);
        for (const auto& [t, id] : cuts[e]) {
            out.split_edges[e].push_back(find_edge(prev, id));
            prev = id;
        }
        out.split_edges[e].push_back(find_edge(prev, g.external_id(g.edges()[e].v)));
    }

    if (out.graph.collapsed_duplicates() != 0) {
        throw DegeneracyError("planarization produced parallel sub-edges");
    }
    if (count_proper(find_crossings(out.graph)) != 0) {
        throw InvariantError("planarization still has proper crossings");
    }
    return out;
}

}  // namespace roadgeom
