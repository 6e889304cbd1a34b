#include "roadgeom/arrangement.hpp"

#include "roadgeom/errors.hpp"
#include "roadgeom/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>

namespace roadgeom {

namespace {

CircleArrangement empty_arrangement(const DiskSystem& s) {
    CircleArrangement a;
    a.circles.reserve(s.size());
    a.active.reserve(s.size());
    for (const Disk& d : s.disks()) {
        a.circles.push_back(d.circle());
        a.active.push_back(d.radius > 0.0 ? 1 : 0);
    }
    a.sequence.resize(s.size());
    return a;
}

void reject_duplicate(const CircleArrangement& a, VertexId i, VertexId j) {
    if (a.circles[i].center == a.circles[j].center && a.circles[i].radius == a.circles[j].radius) {
        throw DegeneracyError("circles " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
    }
}

/// Appends the intersection vertices of circles i < j; returns how many were added.
std::size_t add_pair(CircleArrangement& a, VertexId i, VertexId j) {
    reject_duplicate(a, i, j);
    const auto hit = intersect_circles(a.circles[i], a.circles[j]);
    for (int k = 0; k < hit.count; ++k) {
        a.vertices.push_back({hit.points[k], i, j, static_cast<std::uint8_t>(k), hit.tangent()});
    }
    return static_cast<std::size_t>(hit.count);
}

struct ByAngle {
    const CircleArrangement& a;
    AngularLess<double> less;
    ByAngle(const CircleArrangement& arr, VertexId c) : a(arr), less{arr.circles[c].center} {}
    bool operator()(std::uint32_t x, std::uint32_t y) const { return less(a.vertices[x].point, a.vertices[y].point); }
};

/// Outgoing tangent direction of the circle `c` at vertex `x`, counterclockwise along c.
Point2d ccw_tangent(const CircleArrangement& a, std::uint32_t x, VertexId c) {
    const ArrangementVertex& v = a.vertices[x];
    const Circle2d& circle = a.circles[c];
    Point2d normal;
    if (v.tangent) {
        // Both circles share the normal line through their centers; use it verbatim so the two
        // tangent directions compare equal.
        const Point2d& p = a.circles[v.c1].center;
        const Point2d& q = a.circles[v.c2].center;
        const Point2d u = (q - p) / distance(p, q);
        normal = (v.point - circle.center).dot(u) >= 0.0 ? u : Point2d(-u);
    } else {
        normal = (v.point - circle.center) / circle.radius;
    }
    return Point2d(-normal.y(), normal.x());
}

void finalize(CircleArrangement& a) {
    const std::size_t circles = a.circles.size();

    // Canonical vertex order, then sentinels.
    std::vector<std::uint32_t> order(a.vertices.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        const auto& p = a.vertices[x];
        const auto& q = a.vertices[y];
        return std::tie(p.c1, p.c2, p.slot) < std::tie(q.c1, q.c2, q.slot);
    });
    std::vector<std::uint32_t> rank(order.size());
    std::vector<ArrangementVertex> sorted;
    sorted.reserve(order.size());
    for (std::uint32_t k = 0; k < order.size(); ++k) {
        rank[order[k]] = k;
        sorted.push_back(a.vertices[order[k]]);
    }
    a.vertices = std::move(sorted);
    for (auto& seq : a.sequence) {
        for (auto& x : seq) x = rank[x];
    }
    a.intersection_vertices = a.vertices.size();
    for (VertexId c = 0; c < circles; ++c) {
        if (!a.active[c] || !a.sequence[c].empty()) continue;
        a.sequence[c].push_back(static_cast<std::uint32_t>(a.vertices.size()));
        const Circle2d& circle = a.circles[c];
        a.vertices.push_back({circle.center + Point2d(circle.radius, 0.0), c, kNoVertex, 0, false});
    }
    a.num_vertices = a.vertices.size();

    for (VertexId c = 0; c < circles; ++c) {
        const auto& seq = a.sequence[c];
        for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
            if (a.vertices[seq[k]].point == a.vertices[seq[k + 1]].point) {
                throw DegeneracyError("more than two circles meet at a point on circle " + std::to_string(c));
            }
        }
    }

    // Components through shared vertices.
    std::vector<VertexId> parent(circles);
    std::iota(parent.begin(), parent.end(), VertexId{0});
    auto find = [&](VertexId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t x = 0; x < a.intersection_vertices; ++x) {
        const VertexId r1 = find(a.vertices[x].c1);
        const VertexId r2 = find(a.vertices[x].c2);
        if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
    }
    a.components = 0;
    a.num_edges = 0;
    for (VertexId c = 0; c < circles; ++c) {
        if (!a.active[c]) continue;
        if (find(c) == c) ++a.components;
        a.num_edges += a.sequence[c].size();
    }

    // Half-edges: arc k of circle c runs counterclockwise from seq[k] to seq[k+1]; half-edge
    // 2*arc follows it, 2*arc+1 runs back.
    std::vector<std::size_t> arc_base(circles + 1, 0);
    for (VertexId c = 0; c < circles; ++c) arc_base[c + 1] = arc_base[c] + a.sequence[c].size();
    const std::size_t arcs = arc_base[circles];
    std::vector<std::uint32_t> origin(2 * arcs);
    struct Outgoing {
        double angle;
        double curvature;
        std::size_t half_edge;
    };
    std::vector<std::vector<Outgoing>> around(a.num_vertices);
    for (VertexId c = 0; c < circles; ++c) {
        const auto& seq = a.sequence[c];
        const std::size_t k = seq.size();
        const double curvature = 1.0 / a.circles[c].radius;
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t arc = arc_base[c] + i;
            const std::uint32_t from = seq[i];
            const std::uint32_t to = seq[(i + 1) % k];
            origin[2 * arc] = from;
            origin[2 * arc + 1] = to;
            const Point2d t_from = from < a.intersection_vertices ? ccw_tangent(a, from, c) : Point2d(0.0, 1.0);
            const Point2d t_to = to < a.intersection_vertices ? ccw_tangent(a, to, c) : Point2d(0.0, 1.0);
            // Adding 0.0 turns -0.0 into +0.0 so equal directions get equal angles.
            around[from].push_back({std::atan2(t_from.y() + 0.0, t_from.x() + 0.0), curvature, 2 * arc});
            around[to].push_back({std::atan2(-t_to.y() + 0.0, -t_to.x() + 0.0), -curvature, 2 * arc + 1});
        }
    }
    std::vector<std::size_t> position(2 * arcs);
    for (auto& list : around) {
        std::sort(list.begin(), list.end(), [](const Outgoing& x, const Outgoing& y) {
            return std::tie(x.angle, x.curvature, x.half_edge) < std::tie(y.angle, y.curvature, y.half_edge);
        });
        for (std::size_t k = 0; k < list.size(); ++k) position[list[k].half_edge] = k;
    }
    auto twin = [](std::size_t h) { return h ^ 1u; };
    auto next = [&](std::size_t h) {
        const std::size_t t = twin(h);
        const auto& list = around[origin[t]];
        return list[(position[t] + list.size() - 1) % list.size()].half_edge;
    };
    std::vector<char> seen(2 * arcs, 0);
    a.face_cycles = 0;
    for (std::size_t h = 0; h < 2 * arcs; ++h) {
        if (seen[h]) continue;
        ++a.face_cycles;
        for (std::size_t g = h; !seen[g]; g = next(g)) seen[g] = 1;
    }
    a.faces = a.face_cycles + 1 - a.components;
}

}  // namespace

CircleArrangement build_naive(const DiskSystem& s) {
    CircleArrangement a = empty_arrangement(s);
    for (const auto& [i, j] : s.pairs()) {
        if (a.active[i] && a.active[j]) add_pair(a, i, j);
    }
    for (std::uint32_t x = 0; x < a.vertices.size(); ++x) {
        a.sequence[a.vertices[x].c1].push_back(x);
        a.sequence[a.vertices[x].c2].push_back(x);
    }
    parallel_for(a.sequence.size(), [&](std::size_t c) {
        std::sort(a.sequence[c].begin(), a.sequence[c].end(), ByAngle(a, static_cast<VertexId>(c)));
    });
    finalize(a);
    return a;
}

CircleArrangement build_inductive(const DiskSystem& s, const ClusteringReport& clustering) {
    const std::size_t n = s.size();
    if (clustering.components.size() != n) {
        throw InvariantError("clustering report does not match the disk system");
    }
    CircleArrangement a = empty_arrangement(s);

    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::sort(order.begin(), order.end(),
              [&](VertexId x, VertexId y) { return smaller_disk(s.disk(x), x, s.disk(y), y); });

    std::vector<VertexId> component_of(n, kNoVertex);
    std::vector<VertexId> uf;
    for (VertexId v : order) {
        // R(v) and its components (union-find), checked against the clustering report.
        std::vector<VertexId> members;
        for (VertexId w : s.neighbors(v)) {
            if (smaller_disk(s.disk(w), w, s.disk(v), v)) members.push_back(w);
        }
        uf.resize(members.size());
        std::iota(uf.begin(), uf.end(), VertexId{0});
        auto find = [&](VertexId x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (VertexId k = 0; k < members.size(); ++k) component_of[members[k]] = k;
        for (VertexId k = 0; k < members.size(); ++k) {
            for (VertexId y : s.neighbors(members[k])) {
                if (component_of[y] == kNoVertex) continue;
                const VertexId r1 = find(k);
                const VertexId r2 = find(component_of[y]);
                if (r1 != r2) uf[std::max(r1, r2)] = std::min(r1, r2);
            }
        }
        std::vector<std::vector<VertexId>> groups;
        std::vector<VertexId> group_of_root(members.size(), kNoVertex);
        for (VertexId k = 0; k < members.size(); ++k) {
            const VertexId r = find(k);
            if (group_of_root[r] == kNoVertex) {
                group_of_root[r] = static_cast<VertexId>(groups.size());
                groups.emplace_back();
            }
            groups[group_of_root[r]].push_back(members[k]);
        }
        for (VertexId k = 0; k < members.size(); ++k) component_of[members[k]] = group_of_root[find(k)];
        if (groups.size() != clustering.components[v]) {
            throw InvariantError("R(" + std::to_string(v) + ") has " + std::to_string(groups.size()) +
                                 " components, clustering report says " +
                                 std::to_string(clustering.components[v]));
        }

        if (a.active[v]) {
            // Entry of each component: the member whose center comes first around v's center.
            const AngularLess<double> around_v{s.disk(v).center};
            std::vector<VertexId> entry(groups.size());
            for (std::size_t g = 0; g < groups.size(); ++g) {
                entry[g] = *std::min_element(groups[g].begin(), groups[g].end(), [&](VertexId x, VertexId y) {
                    const Point2d& px = s.disk(x).center;
                    const Point2d& py = s.disk(y).center;
                    if (around_v(px, py)) return true;
                    if (around_v(py, px)) return false;
                    return x < y;
                });
            }
            std::vector<std::size_t> radial(groups.size());
            std::iota(radial.begin(), radial.end(), std::size_t{0});
            std::sort(radial.begin(), radial.end(), [&](std::size_t x, std::size_t y) {
                const Point2d& px = s.disk(entry[x]).center;
                const Point2d& py = s.disk(entry[y]).center;
                if (around_v(px, py)) return true;
                if (around_v(py, px)) return false;
                return entry[x] < entry[y];
            });

            std::vector<std::vector<std::uint32_t>> pieces;
            std::vector<char> visited;
            for (std::size_t g : radial) {
                const VertexId label = static_cast<VertexId>(g);
                std::vector<std::uint32_t> piece;
                std::queue<VertexId> queue;
                std::vector<VertexId> seen_members;
                queue.push(entry[g]);
                component_of[entry[g]] = kNoVertex - 1;  // marks visited
                seen_members.push_back(entry[g]);
                while (!queue.empty()) {
                    const VertexId u = queue.front();
                    queue.pop();
                    for (VertexId y : s.neighbors(u)) {
                        if (component_of[y] == kNoVertex || y == v) continue;
                        if (component_of[y] == kNoVertex - 1) continue;
                        if (component_of[y] != label) {
                            throw InvariantError("components of R(" + std::to_string(v) + ") intersect");
                        }
                        component_of[y] = kNoVertex - 1;
                        seen_members.push_back(y);
                        queue.push(y);
                    }
                    if (!a.active[u]) continue;
                    const std::size_t first = a.vertices.size();
                    add_pair(a, std::min(u, v), std::max(u, v));
                    auto& seq_u = a.sequence[u];
                    const ByAngle around_u(a, u);
                    for (std::size_t x = first; x < a.vertices.size(); ++x) {
                        const auto id = static_cast<std::uint32_t>(x);
                        seq_u.insert(std::upper_bound(seq_u.begin(), seq_u.end(), id, around_u), id);
                        piece.push_back(id);
                    }
                }
                if (seen_members.size() != groups[g].size()) {
                    throw InvariantError("traversal of a component of R(" + std::to_string(v) + ") is incomplete");
                }
                std::sort(piece.begin(), piece.end(), ByAngle(a, v));
                pieces.push_back(std::move(piece));
            }

            // k-way merge of the per-component runs into v's sequence.
            const ByAngle by_v(a, v);
            using Head = std::pair<std::uint32_t, std::size_t>;
            auto later = [&](const Head& x, const Head& y) {
                if (by_v(y.first, x.first)) return true;
                if (by_v(x.first, y.first)) return false;
                return x.second > y.second;
            };
            std::priority_queue<Head, std::vector<Head>, decltype(later)> heads(later);
            std::vector<std::size_t> cursor(pieces.size(), 0);
            for (std::size_t p = 0; p < pieces.size(); ++p) {
                if (!pieces[p].empty()) heads.push({pieces[p][0], p});
            }
            auto& seq_v = a.sequence[v];
            while (!heads.empty()) {
                const auto [x, p] = heads.top();
                heads.pop();
                seq_v.push_back(x);
                if (++cursor[p] < pieces[p].size()) heads.push({pieces[p][cursor[p]], p});
            }
        }
        for (VertexId w : members) component_of[w] = kNoVertex;
    }
    finalize(a);
    return a;
}

bool arrangements_equivalent(const CircleArrangement& a, const CircleArrangement& b, double tolerance,
                             std::string* why) {
    auto fail = [&](const std::string& message) {
        if (why) *why = message;
        return false;
    };
    if (a.circles.size() != b.circles.size()) return fail("different circle counts");
    if (a.vertices.size() != b.vertices.size()) {
        return fail("vertex counts " + std::to_string(a.vertices.size()) + " vs " + std::to_string(b.vertices.size()));
    }
    for (std::size_t x = 0; x < a.vertices.size(); ++x) {
        const auto& p = a.vertices[x];
        const auto& q = b.vertices[x];
        if (p.c1 != q.c1 || p.c2 != q.c2 || p.tangent != q.tangent) {
            return fail("vertex " + std::to_string(x) + " lies on different circles");
        }
        if ((p.point - q.point).lpNorm<Eigen::Infinity>() > tolerance) {
            return fail("vertex " + std::to_string(x) + " differs beyond tolerance");
        }
    }
    for (std::size_t c = 0; c < a.sequence.size(); ++c) {
        if (a.sequence[c] != b.sequence[c]) return fail("cyclic order differs on circle " + std::to_string(c));
    }
    if (a.num_edges != b.num_edges || a.components != b.components || a.faces != b.faces) {
        return fail("different E, C or F");
    }
    return true;
}

ComplexityAudit complexity_audit(const CircleArrangement& a, const DiskSystem& s) {
    ComplexityAudit audit;
    audit.vertices = a.intersection_vertices;
    audit.pairs = s.pairs().size();
    if (audit.vertices > 2 * audit.pairs) {
        throw InvariantError("arrangement has " + std::to_string(audit.vertices) + " vertices but only " +
                             std::to_string(audit.pairs) + " intersecting pairs");
    }
    audit.ratio_to_n = s.size() == 0 ? 0.0 : static_cast<double>(audit.vertices) / static_cast<double>(s.size());
    return audit;
}

std::size_t depth_at_vertex(const CircleArrangement& a, const DiskSystem& s, std::size_t v) {
    const ArrangementVertex& x = a.vertices.at(v);
    // Any disk covering a point of circle c1 intersects disk c1.
    std::size_t depth = x.sentinel() ? 1 : 2;
    for (VertexId w : s.neighbors(x.c1)) {
        if (w == x.c2) continue;
        if (disk_covers(s.disk(w), x.point)) ++depth;
    }
    return depth;
}

}  // namespace roadgeom
