#include "roadgeom/report.hpp"

#include "roadgeom/arrangement.hpp"
#include "roadgeom/augment.hpp"
#include "roadgeom/crossings.hpp"
#include "roadgeom/disks.hpp"
#include "roadgeom/errors.hpp"
#include "roadgeom/netio.hpp"
#include "roadgeom/separator.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace roadgeom {

const std::vector<std::string>& report_metrics() {
    static const std::vector<std::string> metrics = {
        "crossings", "ply", "kth_ply", "degree", "pairs", "neighborly", "plain_hops", "clustering",
        "arrangement", "separator"};
    return metrics;
}

namespace {

std::size_t exact_side(std::size_t n) {
    const auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    return side * side == n ? side : 0;
}

std::string format_number(double x) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

void require(bool ok, const std::string& what) {
    if (!ok) throw InvariantError(what);
}

void check_subgraph(const GeometricGraph& g, const DiskSystem& s) {
    for (const Edge& e : g.edges()) require(s.intersecting(e.u, e.v), "an edge is missing from the disk pairs");
}

double measure(const std::string& metric, const GeometricGraph& g, const ExperimentConfig& config,
               std::uint64_t seed) {
    const DiskSystem s = build_disk_system(g);
    check_subgraph(g, s);
    if (metric == "crossings") {
        const auto crossings = find_crossings(g);
        require(crossing_charge_violations(g, crossings, s).empty(), "crossing charge violated");
        return static_cast<double>(count_proper(crossings));
    }
    if (metric == "ply" || metric == "kth_ply" || metric == "degree") {
        const PlyReport ply = ply_report(s);
        require(ply.kth_largest_center_ply <= ply.max_center_ply, "ply order statistic exceeds maximum");
        if (metric == "ply") return static_cast<double>(ply.max_center_ply);
        if (metric == "kth_ply") return static_cast<double>(ply.kth_largest_center_ply);
        return static_cast<double>(ply.max_disk_degree);
    }
    if (metric == "pairs") return static_cast<double>(s.pairs().size()) / static_cast<double>(g.num_vertices());
    if (metric == "neighborly" || metric == "plain_hops") {
        const auto aug = grid_augment(g);
        std::vector<std::size_t> out_degree(g.num_vertices(), 0);
        for (const Shortcut& sc : aug.shortcuts) require(++out_degree[sc.origin] <= 4, "more than 4 shortcuts");
        const NeighborlyReport r = neighborly_check(aug, s, config.cutoff);
        return static_cast<double>(metric == "neighborly" ? r.max_hops_augmented : r.max_hops_plain);
    }
    if (metric == "clustering") return static_cast<double>(clustering_check(s).max_components);
    if (metric == "arrangement") {
        const CircleArrangement a = build_naive(s);
        require(a.euler_holds(), "Euler relation fails on the arrangement");
        return static_cast<double>(complexity_audit(a, s).vertices);
    }
    if (metric == "separator") {
        SeparatorOptions options;
        options.delta = config.delta;
        const SeparatorTree tree = build_decomposition(s, options, config.leaf_threshold, seed);
        require(validate_decomposition(tree, s).empty(), "separator decomposition invariant violated");
        std::size_t cut = tree.nodes[0].separator ? tree.nodes[0].separator->cut.size() : 0;
        return static_cast<double>(cut);
    }
    throw ValidationError("unknown metric " + metric);
}

}  // namespace

std::vector<std::string> validate(const ExperimentConfig& config) {
    std::vector<std::string> errors;
    if (config.generator != "gotham" && config.generator != "rgg" && config.generator != "interchange") {
        errors.push_back("generator: expected gotham, rgg or interchange, got '" + config.generator + "'");
    }
    if (config.sizes.empty()) errors.push_back("sizes: at least one size is required");
    for (std::size_t n : config.sizes) {
        if (n < 4) errors.push_back("sizes: " + std::to_string(n) + " is below 4");
        if (config.generator != "rgg" && exact_side(n) == 0) {
            errors.push_back("sizes: " + std::to_string(n) + " is not a perfect square");
        }
    }
    if (config.metrics.empty()) errors.push_back("metric: at least one metric is required");
    for (const auto& m : config.metrics) {
        const auto& known = report_metrics();
        if (std::find(known.begin(), known.end(), m) == known.end()) errors.push_back("metric: unknown '" + m + "'");
    }
    if (!config.seed) errors.push_back("seed: generator configs need an explicit seed");
    if (!(config.delta >= 2.0 / 3.0 - 1e-9 && config.delta <= 0.75 + 1e-9)) {
        errors.push_back("delta: must lie in [2/3, 3/4]");
    }
    if (config.leaf_threshold < 2) errors.push_back("leaf: must be >= 2");
    if (config.cutoff < 1) errors.push_back("cutoff: must be >= 1");
    return errors;
}

GeometricGraph generate_network(const std::string& generator, std::size_t n, std::uint64_t seed) {
    if (generator == "rgg") {
        return gen_random_geometric(n, std::sqrt(8.0 / (std::numbers::pi * static_cast<double>(n))), seed);
    }
    const std::size_t side = exact_side(n);
    if (side < 2) throw ValidationError("size " + std::to_string(n) + " is not a square of side >= 2");
    const int iside = static_cast<int>(side);
    if (generator == "gotham") {
        return gen_gotham(iside, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(side)))), seed);
    }
    if (generator == "interchange") return gen_interchange_city(iside, std::max(1, iside / 64), 24, 5.5, seed);
    throw ValidationError("unknown generator " + generator);
}

std::vector<std::string> run_report(const ExperimentConfig& config) {
    const auto errors = validate(config);
    if (!errors.empty()) {
        std::string message = "invalid report config:";
        for (const auto& e : errors) message += "\n  " + e;
        throw ValidationError(message);
    }
    const std::uint64_t seed = *config.seed;
    std::vector<GeometricGraph> networks(config.sizes.size());
    for (std::size_t k = 0; k < config.sizes.size(); ++k) {
        networks[k] = generate_network(config.generator, config.sizes[k], seed + k);
    }
    std::vector<std::string> out;
    for (const std::string& metric : config.metrics) {
        std::vector<double> values(networks.size());
        for (std::size_t k = 0; k < networks.size(); ++k) values[k] = measure(metric, networks[k], config, seed + k);
        std::ostringstream csv;
        csv << "network,n,metric,sqrt_n\n";
        for (std::size_t k = 0; k < networks.size(); ++k) {
            const std::size_t n = networks[k].num_vertices();
            csv << config.generator << '-' << config.sizes[k] << ',' << n << ',' << format_number(values[k]) << ','
                << format_number(std::sqrt(static_cast<double>(n))) << '\n';
        }
        out.push_back(csv.str());
    }
    return out;
}

}  // namespace roadgeom
