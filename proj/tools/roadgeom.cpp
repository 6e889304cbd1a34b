// roadgeom: command-line front end over the roadgeom library.

#include "roadgeom/arrangement.hpp"
#include "roadgeom/augment.hpp"
#include "roadgeom/crossings.hpp"
#include "roadgeom/disks.hpp"
#include "roadgeom/errors.hpp"
#include "roadgeom/netio.hpp"
#include "roadgeom/report.hpp"
#include "roadgeom/routing.hpp"
#include "roadgeom/separator.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

using namespace roadgeom;

namespace {

struct Common {
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string format = "csv";
};

std::string num(double x) {
    if (std::isinf(x)) return "inf";
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

std::uint64_t need_seed(const Common& c) {
    if (!c.seed) throw ValidationError("--seed is required for generated or randomized runs");
    return *c.seed;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, sep);) parts.push_back(item);
    return parts;
}

template <typename T>
T parse_number(const std::string& text, const std::string& what) {
    T value{};
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) {
        throw ValidationError("bad " + what + " '" + text + "'");
    }
    return value;
}

/// A path (.gr file or CSV directory) or a generator spec: gotham:SIDE:EXPRESSWAYS,
/// rgg:N:RADIUS, interchange:SIDE:HUBS:RAMPS:LENGTH.
GeometricGraph open_graph(const std::string& spec, const Common& c) {
    const auto parts = split(spec, ':');
    if (parts.size() > 1 && parts[0] == "gotham" && parts.size() == 3) {
        return gen_gotham(parse_number<int>(parts[1], "side"), parse_number<int>(parts[2], "expressways"),
                          need_seed(c));
    }
    if (parts.size() > 1 && parts[0] == "rgg" && parts.size() == 3) {
        return gen_random_geometric(parse_number<std::size_t>(parts[1], "n"), parse_number<double>(parts[2], "radius"),
                                    need_seed(c));
    }
    if (parts.size() > 1 && parts[0] == "interchange" && parts.size() == 5) {
        return gen_interchange_city(parse_number<int>(parts[1], "side"), parse_number<int>(parts[2], "hubs"),
                                    parse_number<int>(parts[3], "ramps"), parse_number<double>(parts[4], "length"),
                                    need_seed(c));
    }
    if (!std::filesystem::exists(spec)) throw ValidationError("no such graph: " + spec);
    return load_graph(spec);
}

VertexId vertex_of(const GeometricGraph& g, std::int64_t external) {
    const auto v = g.index_of(external);
    if (!v) throw ValidationError("unknown vertex id " + std::to_string(external));
    return *v;
}

/// Runs `body` against the output stream selected by --out.
template <typename Body>
void emit(const Common& c, Body&& body) {
    if (c.format != "csv") throw ValidationError("unsupported format " + c.format);
    if (c.out.empty()) {
        body(std::cout);
        return;
    }
    std::ofstream file(c.out);
    if (!file) throw ValidationError("cannot write " + c.out);
    body(file);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Road networks as multiscale-dispersed geometric graphs"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", common.seed, "RNG seed");
        sub->add_option("--out", common.out, "Output file (default stdout)");
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv"}));
    };

    std::string graph_spec;
    auto graph_command = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("graph", graph_spec, "Graph path or generator spec")->required();
        add_common(sub);
        return sub;
    };

    auto* stats_cmd = graph_command("stats", "Vertex, edge and degree counts");
    auto* crossings_cmd = graph_command("crossings", "List edge crossings");
    auto* ply_cmd = graph_command("ply", "Center ply and disk degree statistics");

    double delta = 2.0 / 3.0;
    std::size_t leaf = 64;
    auto* decompose_cmd = graph_command("decompose", "Recursive circle-separator decomposition");
    decompose_cmd->add_option("--delta", delta, "Balance bound")->check(CLI::Range(2.0 / 3.0 - 1e-9, 0.75 + 1e-9));
    decompose_cmd->add_option("--leaf", leaf, "Leaf threshold")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 40));

    std::int64_t source = 0;
    auto* sssp_cmd = graph_command("sssp", "Single-source shortest paths");
    sssp_cmd->add_option("--source", source, "Source vertex id")->required();

    std::string sites_spec;
    std::string method = "tree";
    auto* voronoi_cmd = graph_command("voronoi", "Graph Voronoi labeling");
    voronoi_cmd->add_option("--sites", sites_spec, "Comma-separated vertex ids or random:K")->required();
    voronoi_cmd->add_option("--method", method, "tree or direct")->check(CLI::IsMember({"tree", "direct"}));
    voronoi_cmd->add_option("--delta", delta, "Balance bound of the decomposition");
    voronoi_cmd->add_option("--leaf", leaf, "Leaf threshold of the decomposition");

    std::size_t cutoff = 250;
    auto* neighborly_cmd = graph_command("neighborly", "Hop distances between intersecting disks");
    neighborly_cmd->add_option("--cutoff", cutoff, "BFS depth cutoff")->check(CLI::PositiveNumber);

    auto* clustering_cmd = graph_command("clustering", "Components of R(v) per disk");

    bool naive = false;
    bool inductive = false;
    auto* arrangement_cmd = graph_command("arrangement", "Circle arrangement of the disk system");
    auto* naive_flag = arrangement_cmd->add_flag("--naive", naive, "All-pairs builder");
    arrangement_cmd->add_flag("--inductive", inductive, "Splice builder (default)")->excludes(naive_flag);

    std::string to_path;
    auto* convert_cmd = graph_command("convert", "Write a graph as CSV directory or DIMACS .gr/.co");
    convert_cmd->add_option("--to", to_path, "Directory, or path ending in .gr")->required();

    ExperimentConfig config;
    std::string sizes_text;
    std::string metric_text;
    auto* report_cmd = app.add_subcommand("report", "Scaled experiment over a generated family");
    report_cmd->add_option("--gen", config.generator, "gotham, rgg or interchange");
    report_cmd->add_option("--sizes", sizes_text, "Comma-separated vertex counts");
    report_cmd->add_option("--metric", metric_text, "Comma-separated metrics");
    report_cmd->add_option("--delta", config.delta, "Balance bound for the separator metric");
    report_cmd->add_option("--leaf", config.leaf_threshold, "Leaf threshold for the separator metric");
    report_cmd->add_option("--cutoff", config.cutoff, "BFS cutoff for hop metrics");
    add_common(report_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (report_cmd->parsed()) {
            config.seed = common.seed;
            for (const auto& s : split(sizes_text, ',')) {
                if (!s.empty()) config.sizes.push_back(parse_number<std::size_t>(s, "size"));
            }
            for (const auto& m : split(metric_text, ',')) {
                if (!m.empty()) config.metrics.push_back(m);
            }
            const auto csvs = run_report(config);
            if (csvs.size() == 1 || common.out.empty()) {
                emit(common, [&](std::ostream& os) {
                    for (const auto& csv : csvs) os << csv;
                });
            } else {
                std::filesystem::create_directories(common.out);
                for (std::size_t k = 0; k < csvs.size(); ++k) {
                    std::ofstream file(std::filesystem::path(common.out) / (config.metrics[k] + ".csv"));
                    if (!file) throw ValidationError("cannot write into " + common.out);
                    file << csvs[k];
                }
            }
            return 0;
        }

        const GeometricGraph g = open_graph(graph_spec, common);

        if (stats_cmd->parsed()) {
            const NetworkStats st = stats(g);
            emit(common, [&](std::ostream& os) {
                os << "n,m,max_degree,collapsed_duplicates,coincident_vertices\n"
                   << st.n << ',' << st.m << ',' << st.max_degree << ',' << g.collapsed_duplicates() << ','
                   << g.coincident_vertices() << '\n';
            });
        } else if (crossings_cmd->parsed()) {
            const auto crossings = find_crossings(g);
            const auto violations = crossing_charge_violations(g, crossings, build_disk_system(g));
            if (!violations.empty()) throw InvariantError("crossing charge violated");
            emit(common, [&](std::ostream& os) {
                os << "e1,e2,x,y,level1,level2,kind\n";
                for (const auto& c : crossings) {
                    os << c.e1 << ',' << c.e2 << ',' << num(c.point.x()) << ',' << num(c.point.y()) << ','
                       << c.level_pair.first << ',' << c.level_pair.second << ',' << to_string(c.kind) << '\n';
                }
            });
            std::vector<CrossingRecord> proper;
            std::copy_if(crossings.begin(), crossings.end(), std::back_inserter(proper),
                         [](const auto& c) { return c.kind == CrossingKind::proper; });
            std::cerr << "proper " << proper.size() << ", degenerate " << crossings.size() - proper.size();
            for (const auto& [levels, count] : crossing_histogram(proper)) {
                std::cerr << ", (" << levels.first << ',' << levels.second << ")=" << count;
            }
            std::cerr << '\n';
        } else if (ply_cmd->parsed()) {
            const PlyReport r = ply_report(build_disk_system(g));
            emit(common, [&](std::ostream& os) {
                os << "n,max_center_ply,sqrt_n_th_ply,max_disk_degree\n"
                   << g.num_vertices() << ',' << r.max_center_ply << ',' << r.kth_largest_center_ply << ','
                   << r.max_disk_degree << '\n';
            });
        } else if (decompose_cmd->parsed()) {
            const DiskSystem s = build_disk_system(g);
            SeparatorOptions options;
            options.delta = delta;
            const SeparatorTree tree = build_decomposition(s, options, leaf, need_seed(common));
            const auto problems = validate_decomposition(tree, s);
            if (!problems.empty()) throw InvariantError(problems.front());
            emit(common, [&](std::ostream& os) {
                os << "node,depth,n,cut,balance\n";
                for (const auto& node : tree.nodes) {
                    const std::size_t n = node.members.size();
                    os << node.id << ',' << node.depth << ',' << n << ',' << (node.separator ? node.separator->cut.size() : 0)
                       << ',' << num(node.separator ? node.separator->balance(n) : 0.0) << '\n';
                }
            });
        } else if (sssp_cmd->parsed()) {
            const auto r = sssp(g, vertex_of(g, source));
            emit(common, [&](std::ostream& os) {
                os << "vertex,dist,parent\n";
                for (VertexId v = 0; v < g.num_vertices(); ++v) {
                    os << g.external_id(v) << ',' << num(r.dist[v]) << ',';
                    if (r.parent[v] != kNoVertex) os << g.external_id(r.parent[v]);
                    os << '\n';
                }
            });
        } else if (voronoi_cmd->parsed()) {
            std::vector<VertexId> sites;
            if (sites_spec.rfind("random:", 0) == 0) {
                const auto k = parse_number<std::size_t>(sites_spec.substr(7), "site count");
                if (k == 0 || k > g.num_vertices()) throw ValidationError("site count out of range");
                std::vector<VertexId> all(g.num_vertices());
                for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
                std::mt19937_64 rng(need_seed(common));
                std::shuffle(all.begin(), all.end(), rng);
                sites.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
            } else {
                for (const auto& id : split(sites_spec, ',')) sites.push_back(vertex_of(g, parse_number<std::int64_t>(id, "site")));
            }
            VoronoiLabeling r;
            if (method == "direct") {
                r = voronoi_direct(g, sites);
            } else {
                const DiskSystem s = build_disk_system(g);
                SeparatorOptions options;
                options.delta = delta;
                const SeparatorTree tree = build_decomposition(s, options, leaf, common.seed.value_or(1));
                r = voronoi_via_tree(g, tree, sites);
            }
            emit(common, [&](std::ostream& os) {
                os << "vertex,label,dist\n";
                for (VertexId v = 0; v < g.num_vertices(); ++v) {
                    os << g.external_id(v) << ',';
                    if (r.label[v] != kNoVertex) os << g.external_id(r.label[v]);
                    os << ',' << num(r.dist[v]) << '\n';
                }
            });
        } else if (neighborly_cmd->parsed()) {
            const auto aug = grid_augment(g);
            const NeighborlyReport r = neighborly_check(aug, build_disk_system(g), cutoff);
            emit(common, [&](std::ostream& os) {
                os << "n,max_hops_augmented,max_hops_plain,augmented_truncated,plain_truncated,pairs,shortcuts\n"
                   << g.num_vertices() << ',' << r.max_hops_augmented << ',' << r.max_hops_plain << ','
                   << r.augmented_truncated << ',' << r.plain_truncated << ',' << r.pairs_checked / 2 << ','
                   << aug.shortcuts.size() << '\n';
            });
        } else if (clustering_cmd->parsed()) {
            const ClusteringReport r = clustering_check(build_disk_system(g));
            emit(common, [&](std::ostream& os) { os << "n,max_components\n" << g.num_vertices() << ',' << r.max_components << '\n'; });
        } else if (arrangement_cmd->parsed()) {
            const DiskSystem s = build_disk_system(g);
            const CircleArrangement a = naive ? build_naive(s) : build_inductive(s, clustering_check(s));
            if (!a.euler_holds()) throw InvariantError("Euler relation fails on the arrangement");
            const ComplexityAudit audit = complexity_audit(a, s);
            emit(common, [&](std::ostream& os) {
                os << "V,E,F,C,ratio,mode\n"
                   << a.num_vertices << ',' << a.num_edges << ',' << a.faces << ',' << a.components << ','
                   << num(audit.ratio_to_n) << ',' << (naive ? "naive" : "inductive") << '\n';
            });
        } else if (convert_cmd->parsed()) {
            const std::filesystem::path to(to_path);
            if (to.extension() == ".gr") {
                auto co = to;
                co.replace_extension(".co");
                save_dimacs(g, to, co);
            } else {
                save_csv(g, to);
            }
        }
        return 0;
    } catch (const InvariantError& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 3;
    } catch (const SeparatorFailure& e) {
        std::cerr << "separator failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
