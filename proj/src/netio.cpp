#include "roadgeom/netio.hpp"

#include "roadgeom/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string_view>
#include <tuple>
#include <unordered_map>

namespace roadgeom {

// ---------------------------------------------------------------------------------------------
// Graph model

std::optional<VertexId> GeometricGraph::index_of(std::int64_t external_id) const {
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), external_id,
                                     [](const Vertex& v, std::int64_t id) { return v.id < id; });
    if (it == vertices_.end() || it->id != external_id) return std::nullopt;
    return static_cast<VertexId>(it - vertices_.begin());
}

void GraphBuilder::reserve(std::size_t vertices, std::size_t edges) {
    vertices_.reserve(vertices);
    edges_.reserve(edges);
}

void GraphBuilder::add_vertex(std::int64_t id, double x, double y) {
    vertices_.push_back({id, Point2d(x, y)});
}

void GraphBuilder::add_edge(std::int64_t u, std::int64_t v, double weight, int level) {
    edges_.push_back({u, v, weight, level});
}

GeometricGraph GraphBuilder::build() && {
    GeometricGraph g;
    std::sort(vertices_.begin(), vertices_.end(),
              [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Vertex& v = vertices_[i];
        if (i > 0 && vertices_[i - 1].id == v.id) {
            throw ValidationError("duplicate vertex id " + std::to_string(v.id));
        }
        if (!std::isfinite(v.position.x()) || !std::isfinite(v.position.y())) {
            throw ValidationError("non-finite coordinate at vertex " + std::to_string(v.id));
        }
    }
    if (vertices_.size() >= kNoVertex) throw ValidationError("too many vertices");
    g.vertices_ = std::move(vertices_);

    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const PendingEdge& pe : edges_) {
        const auto u = g.index_of(pe.u);
        const auto v = g.index_of(pe.v);
        if (!u || !v) {
            throw ValidationError("edge (" + std::to_string(pe.u) + "," + std::to_string(pe.v) +
                                  ") references an unknown vertex");
        }
        if (*u == *v) throw ValidationError("self-loop at vertex " + std::to_string(pe.u));
        if (!(pe.weight >= 0.0) || !std::isfinite(pe.weight)) {
            throw ValidationError("invalid weight on edge (" + std::to_string(pe.u) + "," +
                                  std::to_string(pe.v) + ")");
        }
        if (pe.level < 1 || pe.level > 4) {
            throw ValidationError("level out of range 1..4 on edge (" + std::to_string(pe.u) +
                                  "," + std::to_string(pe.v) + ")");
        }
        edges.push_back({std::min(*u, *v), std::max(*u, *v), pe.weight, pe.level});
    }
    edges_.clear();

    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.level < b.level;
    });
    for (const Edge& e : edges) {
        if (!g.edges_.empty() && g.edges_.back().u == e.u && g.edges_.back().v == e.v) {
            ++g.collapsed_duplicates_;
            continue;
        }
        g.edges_.push_back(e);
    }
    if (g.edges_.size() >= std::numeric_limits<EdgeId>::max()) {
        throw ValidationError("too many edges");
    }

    std::vector<VertexId> order(g.vertices_.size());
    for (VertexId i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        const auto& pa = g.vertices_[a].position;
        const auto& pb = g.vertices_[b].position;
        if (pa.x() != pb.x()) return pa.x() < pb.x();
        if (pa.y() != pb.y()) return pa.y() < pb.y();
        return a < b;
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (g.vertices_[order[i]].position == g.vertices_[order[i - 1]].position) {
            ++g.coincident_vertices_;
        }
    }
    return g;
}

Adjacency::Adjacency(const GeometricGraph& g) {
    const std::size_t n = g.num_vertices();
    offsets_.assign(n + 1, 0);
    for (const Edge& e : g.edges()) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
    arcs_.resize(offsets_[n]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
        const Edge& e = g.edges()[id];
        arcs_[cursor[e.u]++] = {e.v, id, e.weight};
        arcs_[cursor[e.v]++] = {e.u, id, e.weight};
    }
}

NetworkStats stats(const GeometricGraph& g) {
    NetworkStats s;
    s.n = g.num_vertices();
    s.m = g.num_edges();
    std::vector<std::size_t> degree(s.n, 0);
    for (const Edge& e : g.edges()) {
        ++degree[e.u];
        ++degree[e.v];
    }
    for (std::size_t d : degree) {
        ++s.degree_histogram[d];
        s.max_degree = std::max(s.max_degree, d);
    }
    return s;
}

// ---------------------------------------------------------------------------------------------
// Text parsing helpers

namespace {

std::vector<std::string_view> split_tokens(std::string_view line, char sep = ' ') {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (sep == ' ') {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            if (i >= line.size()) break;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            out.push_back(line.substr(i, j - i));
            i = j;
        } else {
            std::size_t j = line.find(sep, i);
            if (j == std::string_view::npos) j = line.size();
            std::string_view tok = line.substr(i, j - i);
            while (!tok.empty() && (tok.back() == '\r' || tok.back() == ' ')) tok.remove_suffix(1);
            while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
            out.push_back(tok);
            i = j + 1;
            if (j == line.size()) break;
        }
    }
    return out;
}

template <typename T>
T parse_number(std::string_view tok, const std::string& name, std::size_t line) {
    T value{};
    const auto* end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(name, line, "expected a number, got '" + std::string(tok) + "'");
    }
    return value;
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

std::string format_weight(double w) {
    if (std::floor(w) == w && std::abs(w) < 9.0e15) {
        return std::to_string(static_cast<long long>(w));
    }
    return format_double(w);
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// DIMACS

GeometricGraph parse_dimacs(std::istream& graph_in, std::istream& coord_in,
                            const std::string& graph_name, const std::string& coord_name) {
    GraphBuilder builder;

    std::string line;
    std::size_t line_no = 0;
    std::int64_t declared_n = -1;
    std::int64_t coord_n = -1;
    std::size_t coords_seen = 0;
    while (std::getline(coord_in, line)) {
        ++line_no;
        if (is_blank(line) || line[0] == 'c') continue;
        const auto tok = split_tokens(line);
        if (tok[0] == "p") {
            // "p aux sp co <n>"
            if (tok.size() != 5 || tok[1] != "aux" || tok[2] != "sp" || tok[3] != "co") {
                throw ParseError(coord_name, line_no, "malformed problem line");
            }
            coord_n = parse_number<std::int64_t>(tok[4], coord_name, line_no);
        } else if (tok[0] == "v") {
            if (tok.size() != 4) throw ParseError(coord_name, line_no, "malformed vertex line");
            const auto id = parse_number<std::int64_t>(tok[1], coord_name, line_no);
            const auto x = parse_number<std::int64_t>(tok[2], coord_name, line_no);
            const auto y = parse_number<std::int64_t>(tok[3], coord_name, line_no);
            builder.add_vertex(id, static_cast<double>(x) * kMicroDegree,
                               static_cast<double>(y) * kMicroDegree);
            ++coords_seen;
        } else {
            throw ParseError(coord_name, line_no, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }

    struct Arc {
        std::int64_t u, v;
        double w;
    };
    std::vector<Arc> arcs;
    std::int64_t declared_m = -1;
    line_no = 0;
    while (std::getline(graph_in, line)) {
        ++line_no;
        if (is_blank(line) || line[0] == 'c') continue;
        const auto tok = split_tokens(line);
        if (tok[0] == "p") {
            if (tok.size() != 4 || tok[1] != "sp") {
                throw ParseError(graph_name, line_no, "malformed problem line");
            }
            declared_n = parse_number<std::int64_t>(tok[2], graph_name, line_no);
            declared_m = parse_number<std::int64_t>(tok[3], graph_name, line_no);
        } else if (tok[0] == "a") {
            if (tok.size() != 4) throw ParseError(graph_name, line_no, "malformed arc line");
            if (declared_n < 0) throw ParseError(graph_name, line_no, "arc before problem line");
            const auto u = parse_number<std::int64_t>(tok[1], graph_name, line_no);
            const auto v = parse_number<std::int64_t>(tok[2], graph_name, line_no);
            const auto w = parse_number<double>(tok[3], graph_name, line_no);
            if (u < 1 || u > declared_n || v < 1 || v > declared_n) {
                throw ValidationError(graph_name + ":" + std::to_string(line_no) + ": arc (" +
                                      std::to_string(u) + "," + std::to_string(v) +
                                      ") references an unknown vertex");
            }
            arcs.push_back({u, v, w});
        } else {
            throw ParseError(graph_name, line_no, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (declared_n < 0) throw ValidationError(graph_name + ": missing problem line");
    if (static_cast<std::int64_t>(arcs.size()) != declared_m) {
        throw ValidationError(graph_name + ": header declares " + std::to_string(declared_m) +
                              " arcs, found " + std::to_string(arcs.size()));
    }
    if (coord_n >= 0 && coord_n != declared_n) {
        throw ValidationError(coord_name + ": declares " + std::to_string(coord_n) +
                              " vertices, graph declares " + std::to_string(declared_n));
    }
    if (static_cast<std::int64_t>(coords_seen) != declared_n) {
        throw ValidationError(coord_name + ": " + std::to_string(coords_seen) +
                              " coordinates for " + std::to_string(declared_n) + " vertices");
    }

    // A road is normally listed as the reciprocal pair (u,v,w)/(v,u,w); such pairs fold to one
    // edge here, so the builder's duplicate count sees only genuinely parallel roads.
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
        return std::tuple(std::min(a.u, a.v), std::max(a.u, a.v), a.w, a.u) <
               std::tuple(std::min(b.u, b.v), std::max(b.u, b.v), b.w, b.u);
    });
    for (std::size_t i = 0; i < arcs.size();) {
        std::size_t j = i, forward = 0, backward = 0;
        for (; j < arcs.size() && std::min(arcs[j].u, arcs[j].v) == std::min(arcs[i].u, arcs[i].v) &&
               std::max(arcs[j].u, arcs[j].v) == std::max(arcs[i].u, arcs[i].v) && arcs[j].w == arcs[i].w;
             ++j) {
            (arcs[j].u <= arcs[j].v ? forward : backward) += 1;
        }
        for (std::size_t k = 0; k < std::max(forward, backward); ++k) {
            builder.add_edge(arcs[i].u, arcs[i].v, arcs[i].w, 4);
        }
        i = j;
    }
    GeometricGraph g = std::move(builder).build();
    return g;
}

GeometricGraph load_dimacs(const std::filesystem::path& graph_path,
                           const std::filesystem::path& coord_path) {
    std::ifstream gin(graph_path);
    if (!gin) throw ValidationError("cannot open " + graph_path.string());
    std::ifstream cin(coord_path);
    if (!cin) throw ValidationError("cannot open " + coord_path.string());
    return parse_dimacs(gin, cin, graph_path.string(), coord_path.string());
}

void write_dimacs(const GeometricGraph& g, std::ostream& graph_out, std::ostream& coord_out) {
    graph_out << "p sp " << g.num_vertices() << ' ' << 2 * g.num_edges() << '\n';
    for (const Edge& e : g.edges()) {
        const std::string w = format_weight(e.weight);
        graph_out << "a " << e.u + 1 << ' ' << e.v + 1 << ' ' << w << '\n';
        graph_out << "a " << e.v + 1 << ' ' << e.u + 1 << ' ' << w << '\n';
    }
    coord_out << "p aux sp co " << g.num_vertices() << '\n';
    for (VertexId i = 0; i < g.num_vertices(); ++i) {
        const Vertex& v = g.vertices()[i];
        coord_out << "v " << i + 1 << ' ' << std::llround(v.position.x() / kMicroDegree) << ' '
                  << std::llround(v.position.y() / kMicroDegree) << '\n';
    }
}

void save_dimacs(const GeometricGraph& g, const std::filesystem::path& graph_path,
                 const std::filesystem::path& coord_path) {
    std::ofstream gout(graph_path);
    std::ofstream cout(coord_path);
    if (!gout || !cout) throw ValidationError("cannot write " + graph_path.string());
    write_dimacs(g, gout, cout);
}

// ---------------------------------------------------------------------------------------------
// CSV

GeometricGraph parse_csv(std::istream& vertices_in, std::istream& edges_in) {
    GraphBuilder builder;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(vertices_in, line)) {
        ++line_no;
        if (is_blank(line)) continue;
        const auto tok = split_tokens(line, ',');
        if (line_no == 1 && !tok.empty() && tok[0] == "id") continue;
        if (tok.size() != 3) throw ParseError("vertices.csv", line_no, "expected id,x,y");
        builder.add_vertex(parse_number<std::int64_t>(tok[0], "vertices.csv", line_no),
                           parse_number<double>(tok[1], "vertices.csv", line_no),
                           parse_number<double>(tok[2], "vertices.csv", line_no));
    }
    line_no = 0;
    while (std::getline(edges_in, line)) {
        ++line_no;
        if (is_blank(line)) continue;
        const auto tok = split_tokens(line, ',');
        if (line_no == 1 && !tok.empty() && tok[0] == "u") continue;
        if (tok.size() != 4) throw ParseError("edges.csv", line_no, "expected u,v,weight,level");
        builder.add_edge(parse_number<std::int64_t>(tok[0], "edges.csv", line_no),
                         parse_number<std::int64_t>(tok[1], "edges.csv", line_no),
                         parse_number<double>(tok[2], "edges.csv", line_no),
                         parse_number<int>(tok[3], "edges.csv", line_no));
    }
    return std::move(builder).build();
}

GeometricGraph load_csv(const std::filesystem::path& vertices_path,
                        const std::filesystem::path& edges_path) {
    std::ifstream vin(vertices_path);
    if (!vin) throw ValidationError("cannot open " + vertices_path.string());
    std::ifstream ein(edges_path);
    if (!ein) throw ValidationError("cannot open " + edges_path.string());
    return parse_csv(vin, ein);
}

void write_csv(const GeometricGraph& g, std::ostream& vertices_out, std::ostream& edges_out) {
    vertices_out << "id,x,y\n";
    for (const Vertex& v : g.vertices()) {
        vertices_out << v.id << ',' << format_double(v.position.x()) << ','
                     << format_double(v.position.y()) << '\n';
    }
    edges_out << "u,v,weight,level\n";
    for (const Edge& e : g.edges()) {
        edges_out << g.external_id(e.u) << ',' << g.external_id(e.v) << ','
                  << format_double(e.weight) << ',' << e.level << '\n';
    }
}

void save_csv(const GeometricGraph& g, const std::filesystem::path& directory) {
    std::filesystem::create_directories(directory);
    std::ofstream vout(directory / "vertices.csv");
    std::ofstream eout(directory / "edges.csv");
    if (!vout || !eout) throw ValidationError("cannot write into " + directory.string());
    write_csv(g, vout, eout);
}

GeometricGraph load_graph(const std::filesystem::path& path) {
    if (std::filesystem::is_directory(path)) {
        return load_csv(path / "vertices.csv", path / "edges.csv");
    }
    if (path.extension() == ".gr") {
        auto coords = path;
        coords.replace_extension(".co");
        return load_dimacs(path, coords);
    }
    throw ValidationError("unrecognized graph input " + path.string() +
                          " (expected a .gr file or a directory with vertices.csv/edges.csv)");
}

// ---------------------------------------------------------------------------------------------
// Generators

GeometricGraph gen_gotham(int side, int expressways, std::uint64_t seed) {
    if (side < 2) throw ValidationError("gotham side must be >= 2");
    if (expressways < 0) throw ValidationError("gotham expressways must be >= 0");
    std::mt19937_64 rng(seed);
    GraphBuilder b;
    const std::int64_t grid = static_cast<std::int64_t>(side) * side;
    b.reserve(grid + 2 * expressways, 2 * grid + expressways);
    auto id = [side](int i, int j) { return static_cast<std::int64_t>(j) * side + i; };
    for (int j = 0; j < side; ++j) {
        for (int i = 0; i < side; ++i) b.add_vertex(id(i, j), i, j);
    }
    for (int j = 0; j < side; ++j) {
        for (int i = 0; i < side; ++i) {
            if (i + 1 < side) b.add_edge(id(i, j), id(i + 1, j), 1.0, 4);
            if (j + 1 < side) b.add_edge(id(i, j), id(i, j + 1), 1.0, 4);
        }
    }

    const double span = side - 1;
    const double lo = -0.5;
    const double hi = span + 0.5;
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    std::uniform_real_distribution<double> jitter(-0.25, 0.25);
    std::int64_t next = grid;
    for (int k = 0; k < expressways; ++k) {
        const Point2d c(span / 2 + jitter(rng), span / 2 + jitter(rng));
        const double theta = angle(rng);
        const Point2d d(std::cos(theta), std::sin(theta));
        // Clip the line c + t d against the expanded box [lo, hi]^2.
        double t_max = std::numeric_limits<double>::infinity();
        double t_min = -t_max;
        for (int axis = 0; axis < 2; ++axis) {
            if (d[axis] == 0.0) continue;
            const double t0 = (lo - c[axis]) / d[axis];
            const double t1 = (hi - c[axis]) / d[axis];
            t_min = std::max(t_min, std::min(t0, t1));
            t_max = std::min(t_max, std::max(t0, t1));
        }
        const Point2d a = c + t_min * d;
        const Point2d e = c + t_max * d;
        b.add_vertex(next, a.x(), a.y());
        b.add_vertex(next + 1, e.x(), e.y());
        b.add_edge(next, next + 1, distance(a, e), 1);
        next += 2;
    }
    return std::move(b).build();
}

GeometricGraph gen_random_geometric(std::size_t n, double radius, std::uint64_t seed) {
    if (n < 1) throw ValidationError("random geometric graph needs n >= 1");
    if (!(radius > 0.0)) throw ValidationError("random geometric graph needs radius > 0");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point2d> pts(n);
    for (auto& p : pts) {
        const double x = unit(rng);
        p = Point2d(x, unit(rng));
    }
    GraphBuilder b;
    for (std::size_t i = 0; i < n; ++i) b.add_vertex(static_cast<std::int64_t>(i), pts[i].x(), pts[i].y());

    const auto cells = static_cast<std::int64_t>(std::max(1.0, std::floor(1.0 / radius)));
    const double cell = 1.0 / static_cast<double>(cells);
    auto cell_of = [&](double v) {
        return std::clamp<std::int64_t>(static_cast<std::int64_t>(v / cell), 0, cells - 1);
    };
    std::unordered_map<std::int64_t, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < n; ++i) {
        buckets[cell_of(pts[i].x()) * cells + cell_of(pts[i].y())].push_back(i);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t cx = cell_of(pts[i].x());
        const std::int64_t cy = cell_of(pts[i].y());
        for (std::int64_t gx = std::max<std::int64_t>(0, cx - 1); gx <= std::min(cells - 1, cx + 1); ++gx) {
            for (std::int64_t gy = std::max<std::int64_t>(0, cy - 1); gy <= std::min(cells - 1, cy + 1); ++gy) {
                const auto it = buckets.find(gx * cells + gy);
                if (it == buckets.end()) continue;
                for (std::size_t j : it->second) {
                    if (j <= i) continue;
                    const double d = distance(pts[i], pts[j]);
                    if (d <= radius) {
                        b.add_edge(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), d, 4);
                    }
                }
            }
        }
    }
    return std::move(b).build();
}

GeometricGraph gen_interchange_city(int side, int interchanges, int ramps, double ramp_length,
                                    std::uint64_t seed) {
    if (side < 2) throw ValidationError("city side must be >= 2");
    if (interchanges < 0 || ramps < 1 || !(ramp_length > 0.0)) {
        throw ValidationError("invalid interchange parameters");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    GraphBuilder b;
    auto id = [side](int i, int j) { return static_cast<std::int64_t>(j) * side + i; };
    for (int j = 0; j < side; ++j) {
        for (int i = 0; i < side; ++i) b.add_vertex(id(i, j), i, j);
    }
    for (int j = 0; j < side; ++j) {
        for (int i = 0; i < side; ++i) {
            if (i + 1 < side) b.add_edge(id(i, j), id(i + 1, j), 1.0, 4);
            if (j + 1 < side) b.add_edge(id(i, j), id(i, j + 1), 1.0, 4);
        }
    }
    const double span = side - 1;
    const double margin = std::min(span / 2, ramp_length + 1.0);
    auto nearest_grid = [&](const Point2d& p) {
        const int i = std::clamp(static_cast<int>(std::lround(p.x())), 0, side - 1);
        const int j = std::clamp(static_cast<int>(std::lround(p.y())), 0, side - 1);
        return id(i, j);
    };
    std::int64_t next = static_cast<std::int64_t>(side) * side;
    for (int h = 0; h < interchanges; ++h) {
        const Point2d hub(margin + unit(rng) * (span - 2 * margin),
                          margin + unit(rng) * (span - 2 * margin));
        const double phase = unit(rng) * 2 * std::numbers::pi;
        const std::int64_t first_ramp = next;
        for (int r = 0; r < ramps; ++r) {
            const double theta = phase + 2 * std::numbers::pi * (r + 0.3 * unit(rng)) / ramps;
            const double rho = 0.15 * unit(rng);
            const Point2d near = hub + rho * Point2d(std::cos(theta), std::sin(theta));
            const double len = ramp_length * (0.9 + 0.2 * unit(rng));
            Point2d far = near + len * Point2d(std::cos(theta), std::sin(theta));
            far = far.cwiseMax(Point2d(0.0, 0.0)).cwiseMin(Point2d(span, span));
            const std::int64_t near_id = next++;
            const std::int64_t far_id = next++;
            b.add_vertex(near_id, near.x(), near.y());
            b.add_vertex(far_id, far.x(), far.y());
            b.add_edge(near_id, far_id, distance(near, far), 2);
            const std::int64_t grid_v = nearest_grid(far);
            const Point2d gp(static_cast<double>(grid_v % side), static_cast<double>(grid_v / side));
            const double to_grid = distance(far, gp);
            if (to_grid > 0.0) b.add_edge(far_id, grid_v, to_grid, 3);
            if (r > 0) b.add_edge(near_id - 2, near_id, 0.05, 2);
        }
        if (ramps > 2) b.add_edge(next - 2, first_ramp, 0.05, 2);
    }
    return std::move(b).build();
}

}  // namespace roadgeom
