#pragma once

#include "roadgeom/disks.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace roadgeom {

struct SeparatorOptions {
    double delta = 0.75;
    /// Center-ply target for the exceptional split.
    std::size_t exceptional_k = 1;
    /// Accepted cut: at most cut_constant * sqrt(n) residual disks plus at most as many
    /// exceptional ones. Zero selects 4 * sqrt(exceptional_k).
    double cut_constant = 0.0;
    std::size_t candidates_per_round = 16;
    std::size_t max_rounds = 64;
    std::size_t sample_size = 1000;

    double effective_cut_constant() const;
};

/// Circle with the induced partition of a disk system. Vertex sets hold Disk::vertex ids.
struct CircleSeparator {
    Circle2d circle;
    std::vector<VertexId> cut;
    std::vector<VertexId> inside;
    std::vector<VertexId> outside;
    std::vector<VertexId> exceptional;
    std::size_t exceptional_cut = 0;  // |cut ∩ exceptional|
    std::size_t retries = 0;          // rounds beyond the first

    double balance(std::size_t n) const {
        return n == 0 ? 0.0 : static_cast<double>(std::max(inside.size(), outside.size())) / n;
    }
};

class SeparatorFailure : public std::runtime_error {
public:
    SeparatorFailure(const std::string& what, std::optional<CircleSeparator> best,
                     std::size_t exceptional_count, bool exceptional_dominated)
        : std::runtime_error(what),
          best_(std::move(best)),
          exceptional_count_(exceptional_count),
          exceptional_dominated_(exceptional_dominated) {}

    const std::optional<CircleSeparator>& best() const { return best_; }
    std::size_t exceptional_count() const { return exceptional_count_; }
    /// True when the exceptional set alone exceeds the cut allowance.
    bool exceptional_dominated() const { return exceptional_dominated_; }
    /// Tree node ids from the root to the failing node (set by build_decomposition).
    const std::vector<std::size_t>& path() const { return path_; }
    void set_path(std::vector<std::size_t> path) { path_ = std::move(path); }

private:
    std::optional<CircleSeparator> best_;
    std::size_t exceptional_count_;
    bool exceptional_dominated_;
    std::vector<std::size_t> path_;
};

enum class DiskSide : std::uint8_t { inside, outside, cut };

/// Strictly interior / strictly exterior / touching the circle (tangency counts as cut).
DiskSide classify_disk(const Disk& d, const Circle2d& c);

// Sphere machinery, exposed for testing.
namespace sphere {

/// Inverse stereographic projection of the plane onto the unit sphere.
Eigen::Vector3d lift(const Point2d& p);
Point2d project(const Eigen::Vector3d& q);

/// Approximate centerpoint by iterated Radon points of groups of five.
Eigen::Vector3d centerpoint(std::vector<Eigen::Vector3d> points, std::mt19937_64& rng);

/// Conformal map of the sphere (rotation then plane dilation) that sends `center` (a point
/// inside the ball) to the origin. `inverse_circle` maps a great circle of the image sphere,
/// given by its normal, back to a circle in the original plane; nullopt when it is a line.
class ConformalCentering {
public:
    explicit ConformalCentering(const Eigen::Vector3d& center);

    Eigen::Vector3d forward(const Eigen::Vector3d& q) const;
    std::optional<Circle2d> inverse_circle(const Eigen::Vector3d& normal) const;

private:
    Eigen::Matrix3d rotation_;
    double alpha_ = 1.0;
};

}  // namespace sphere

/// One circle separator: exceptional split, lift to the sphere, centerpoint, conformal
/// centering, random great circles, best balanced candidate by cut size.
CircleSeparator find_separator(const DiskSystem& s, const SeparatorOptions& options,
                               std::uint64_t seed);
CircleSeparator find_separator(const DiskSystem& s, double delta, std::size_t exceptional_k,
                               std::uint64_t seed);

struct SeparatorNode {
    std::size_t id = 0;
    std::size_t parent = kNoNode;
    std::size_t depth = 0;
    std::vector<VertexId> members;  // vertex ids of this node's subproblem
    std::optional<CircleSeparator> separator;
    std::size_t inside_child = kNoNode;
    std::size_t outside_child = kNoNode;

    static constexpr std::size_t kNoNode = static_cast<std::size_t>(-1);
    bool leaf() const { return !separator.has_value(); }
};

struct SeparatorTree {
    std::vector<SeparatorNode> nodes;  // nodes[0] is the root; ids in breadth-first order
    std::size_t leaf_threshold = 0;
    double delta = 0.0;
    SeparatorOptions options;
    /// label[v] = node where v's disk was cut, or the leaf holding it.
    std::vector<std::size_t> label;

    std::size_t depth() const;
};

/// Recursive decomposition; children are built level by level with per-node seeds, so the tree
/// is identical for a given seed regardless of thread count.
SeparatorTree build_decomposition(const DiskSystem& s, const SeparatorOptions& options,
                                  std::size_t leaf_threshold, std::uint64_t seed);
SeparatorTree build_decomposition(const DiskSystem& s, double delta, std::size_t leaf_threshold,
                                  std::uint64_t seed);

/// Checks partition, geometry, balance, cut size and labelling at every node; returns one
/// message per violation.
std::vector<std::string> validate_decomposition(const SeparatorTree& tree, const DiskSystem& s);
std::vector<std::string> validate_separator(const CircleSeparator& sep, const DiskSystem& s,
                                            const SeparatorOptions& options);

}  // namespace roadgeom
