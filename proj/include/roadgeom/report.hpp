#pragma once

#include "roadgeom/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace roadgeom {

/// Scaled experiment over one generated network family.
struct ExperimentConfig {
    std::string generator = "gotham";  // gotham | rgg | interchange
    std::vector<std::size_t> sizes;    // vertex counts; gotham and interchange need squares
    std::vector<std::string> metrics;
    std::optional<std::uint64_t> seed;  // required
    double delta = 2.0 / 3.0;
    std::size_t leaf_threshold = 64;
    std::size_t cutoff = 250;
};

const std::vector<std::string>& report_metrics();

/// Offending fields, one message each; empty when the config is usable.
std::vector<std::string> validate(const ExperimentConfig& config);

/// The family member of `n` vertices (before any extra vertices the generator adds).
GeometricGraph generate_network(const std::string& generator, std::size_t n, std::uint64_t seed);

/// One CSV per metric with header `network,n,metric,sqrt_n`, one row per size. Throws
/// ValidationError on a bad config and InvariantError when any module invariant fails.
std::vector<std::string> run_report(const ExperimentConfig& config);

}  // namespace roadgeom
