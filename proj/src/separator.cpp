#include "roadgeom/separator.hpp"

#include "roadgeom/parallel.hpp"

#include <Eigen/Geometry>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>

namespace roadgeom {

double SeparatorOptions::effective_cut_constant() const {
    if (cut_constant > 0.0) return cut_constant;
    return 4.0 * std::sqrt(static_cast<double>(std::max<std::size_t>(exceptional_k, 1)));
}

DiskSide classify_disk(const Disk& d, const Circle2d& c) {
    const double dist = distance(d.center, c.center);
    if (dist + d.radius < c.radius) return DiskSide::inside;
    if (dist - d.radius > c.radius) return DiskSide::outside;
    return DiskSide::cut;
}

namespace sphere {

Eigen::Vector3d lift(const Point2d& p) {
    const double s = p.squaredNorm();
    return Eigen::Vector3d(2 * p.x(), 2 * p.y(), s - 1) / (s + 1);
}

Point2d project(const Eigen::Vector3d& q) {
    return Point2d(q.x(), q.y()) / (1 - q.z());
}

namespace {

Eigen::Vector3d radon_point(const std::array<Eigen::Vector3d, 5>& pts) {
    Eigen::Matrix<double, 4, 5> m;
    for (int i = 0; i < 5; ++i) m.col(i) << pts[i], 1.0;
    const Eigen::FullPivLU<Eigen::Matrix<double, 4, 5>> lu(m);
    const Eigen::MatrixXd kernel = lu.kernel();
    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    for (const auto& p : pts) mean += p;
    mean /= 5.0;
    if (kernel.cols() == 0) return mean;
    const Eigen::VectorXd lambda = kernel.col(0);
    Eigen::Vector3d acc = Eigen::Vector3d::Zero();
    double weight = 0.0;
    for (int i = 0; i < 5; ++i) {
        if (lambda[i] > 0) {
            acc += lambda[i] * pts[i];
            weight += lambda[i];
        }
    }
    return weight > 0.0 ? Eigen::Vector3d(acc / weight) : mean;
}

}  // namespace

Eigen::Vector3d centerpoint(std::vector<Eigen::Vector3d> points, std::mt19937_64& rng) {
    if (points.empty()) return Eigen::Vector3d::Zero();
    while (points.size() >= 5) {
        std::shuffle(points.begin(), points.end(), rng);
        std::vector<Eigen::Vector3d> next;
        next.reserve(points.size() / 5);
        for (std::size_t i = 0; i + 5 <= points.size(); i += 5) {
            next.push_back(radon_point({points[i], points[i + 1], points[i + 2], points[i + 3], points[i + 4]}));
        }
        points = std::move(next);
    }
    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    for (const auto& p : points) mean += p;
    return mean / static_cast<double>(points.size());
}

ConformalCentering::ConformalCentering(const Eigen::Vector3d& center) {
    const double norm = center.norm();
    if (norm < 1e-12) {
        rotation_.setIdentity();
        alpha_ = 1.0;
        return;
    }
    rotation_ = Eigen::Quaterniond::FromTwoVectors(center / norm, Eigen::Vector3d::UnitZ()).toRotationMatrix();
    const double r = std::min(norm, 1.0 - 1e-9);
    alpha_ = std::sqrt((1 - r) / (1 + r));
}

Eigen::Vector3d ConformalCentering::forward(const Eigen::Vector3d& q) const {
    return lift(alpha_ * project(rotation_ * q));
}

std::optional<Circle2d> ConformalCentering::inverse_circle(const Eigen::Vector3d& normal) const {
    // Generalized circle a|w|^2 + 2 b.w + c = 0 in the dilated plane; its sphere image is the
    // plane m.q = h with m = (2b, a - c), h = -(a + c).
    double a = normal.z() / 2;
    Eigen::Vector2d b(normal.x() / 2, normal.y() / 2);
    double c = -normal.z() / 2;
    a *= alpha_ * alpha_;
    b *= alpha_;
    Eigen::Vector3d m(2 * b.x(), 2 * b.y(), a - c);
    const double h = -(a + c);
    m = rotation_.transpose() * m;
    a = (m.z() - h) / 2;
    b = Eigen::Vector2d(m.x() / 2, m.y() / 2);
    c = (-h - m.z()) / 2;
    if (std::abs(a) <= 1e-12 * (b.norm() + std::abs(c))) return std::nullopt;
    const Point2d center = -b / a;
    const double r2 = b.squaredNorm() / (a * a) - c / a;
    if (!(r2 > 0.0)) return std::nullopt;
    return Circle2d{center, std::sqrt(r2)};
}

}  // namespace sphere

namespace {

struct CandidateCounts {
    std::size_t inside = 0;
    std::size_t outside = 0;
    std::size_t residual_cut = 0;
    std::size_t exceptional_cut = 0;
    std::size_t cut() const { return residual_cut + exceptional_cut; }
};

CandidateCounts count_sides(const DiskSystem& s, const std::vector<char>& exceptional,
                            const Circle2d& circle) {
    CandidateCounts out;
    for (VertexId i = 0; i < s.size(); ++i) {
        switch (classify_disk(s.disk(i), circle)) {
            case DiskSide::inside: ++out.inside; break;
            case DiskSide::outside: ++out.outside; break;
            case DiskSide::cut: ++(exceptional[i] ? out.exceptional_cut : out.residual_cut); break;
        }
    }
    return out;
}

CircleSeparator materialize(const DiskSystem& s, const ExceptionalDecomposition& split,
                            const std::vector<char>& exceptional, const Circle2d& circle,
                            std::size_t retries) {
    CircleSeparator sep;
    sep.circle = circle;
    sep.retries = retries;
    for (VertexId i = 0; i < s.size(); ++i) {
        const VertexId v = s.disk(i).vertex;
        switch (classify_disk(s.disk(i), circle)) {
            case DiskSide::inside: sep.inside.push_back(v); break;
            case DiskSide::outside: sep.outside.push_back(v); break;
            case DiskSide::cut:
                sep.cut.push_back(v);
                if (exceptional[i]) ++sep.exceptional_cut;
                break;
        }
    }
    for (VertexId i : split.exceptional) sep.exceptional.push_back(s.disk(i).vertex);
    std::sort(sep.exceptional.begin(), sep.exceptional.end());
    return sep;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

CircleSeparator find_separator(const DiskSystem& s, const SeparatorOptions& options,
                               std::uint64_t seed) {
    const std::size_t n = s.size();
    if (n < 2) throw std::invalid_argument("find_separator needs at least two disks");
    if (!(options.delta >= 2.0 / 3.0 - 1e-12 && options.delta <= 0.75 + 1e-12)) {
        throw std::invalid_argument("delta must lie in [2/3, 3/4]");
    }
    std::mt19937_64 rng(seed);

    const ExceptionalDecomposition split = exceptional_decomposition(s, options.exceptional_k);
    std::vector<char> exceptional(n, 0);
    for (VertexId i : split.exceptional) exceptional[i] = 1;
    std::vector<VertexId> residual;
    for (VertexId i = 0; i < n; ++i) {
        if (!exceptional[i]) residual.push_back(i);
    }
    if (residual.empty()) {
        residual.resize(n);
        std::iota(residual.begin(), residual.end(), VertexId{0});
    }

    const double limit = options.delta * static_cast<double>(n);
    const double allowance = options.effective_cut_constant() * std::sqrt(static_cast<double>(n));
    const bool dominated = static_cast<double>(split.exceptional.size()) > allowance;

    std::optional<Circle2d> best_balanced;
    CandidateCounts best_balanced_counts;
    std::optional<Circle2d> best_any;
    std::size_t best_any_side = n + 1;

    std::normal_distribution<double> gauss(0.0, 1.0);
    for (std::size_t round = 0; round < options.max_rounds; ++round) {
        // Sample residual centers, normalize, lift.
        std::vector<VertexId> sample = residual;
        if (sample.size() > options.sample_size) {
            std::shuffle(sample.begin(), sample.end(), rng);
            sample.resize(options.sample_size);
        }
        Point2d mu = Point2d::Zero();
        for (VertexId i : sample) mu += s.disk(i).center;
        mu /= static_cast<double>(sample.size());
        double spread = 0.0;
        for (VertexId i : sample) spread += (s.disk(i).center - mu).squaredNorm();
        spread = std::sqrt(spread / static_cast<double>(sample.size()));
        if (!(spread > 0.0)) spread = 1.0;
        std::vector<Eigen::Vector3d> lifted;
        lifted.reserve(sample.size());
        for (VertexId i : sample) lifted.push_back(sphere::lift((s.disk(i).center - mu) / spread));

        const sphere::ConformalCentering centering(sphere::centerpoint(std::move(lifted), rng));

        std::optional<Circle2d> round_best;
        CandidateCounts round_counts;
        for (std::size_t k = 0; k < options.candidates_per_round; ++k) {
            Eigen::Vector3d normal(gauss(rng), gauss(rng), gauss(rng));
            if (normal.norm() < 1e-12) continue;
            normal.normalize();
            const auto local = centering.inverse_circle(normal);
            if (!local) continue;
            const Circle2d circle{mu + spread * local->center, spread * local->radius};
            const CandidateCounts counts = count_sides(s, exceptional, circle);
            const std::size_t side = std::max(counts.inside, counts.outside);
            if (side < best_any_side) {
                best_any_side = side;
                best_any = circle;
            }
            if (static_cast<double>(side) > limit) continue;
            if (!best_balanced || counts.cut() < best_balanced_counts.cut()) {
                best_balanced = circle;
                best_balanced_counts = counts;
            }
            const bool small = static_cast<double>(counts.residual_cut) <= allowance &&
                               static_cast<double>(counts.exceptional_cut) <= allowance;
            if (!small) continue;
            if (!round_best || counts.cut() < round_counts.cut() ||
                (counts.cut() == round_counts.cut() &&
                 side < std::max(round_counts.inside, round_counts.outside))) {
                round_best = circle;
                round_counts = counts;
            }
        }
        if (round_best) return materialize(s, split, exceptional, *round_best, round);
    }

    std::optional<CircleSeparator> best;
    if (best_balanced) {
        best = materialize(s, split, exceptional, *best_balanced, options.max_rounds);
    } else if (best_any) {
        best = materialize(s, split, exceptional, *best_any, options.max_rounds);
    }
    throw SeparatorFailure(best_balanced ? "no balanced candidate within the cut allowance"
                                         : "no balanced candidate found",
                           std::move(best), split.exceptional.size(), dominated);
}

CircleSeparator find_separator(const DiskSystem& s, double delta, std::size_t exceptional_k,
                               std::uint64_t seed) {
    SeparatorOptions options;
    options.delta = delta;
    options.exceptional_k = exceptional_k;
    return find_separator(s, options, seed);
}

std::size_t SeparatorTree::depth() const {
    std::size_t d = 0;
    for (const auto& node : nodes) d = std::max(d, node.depth);
    return d;
}

SeparatorTree build_decomposition(const DiskSystem& input, const SeparatorOptions& options,
                                  std::size_t leaf_threshold, std::uint64_t seed) {
    if (leaf_threshold < 2) throw std::invalid_argument("leaf_threshold must be >= 2");

    // Work on a system whose Disk::vertex equals its index.
    bool indexed = true;
    for (VertexId i = 0; i < input.size(); ++i) indexed = indexed && input.disk(i).vertex == i;
    DiskSystem relabeled;
    if (!indexed) {
        std::vector<Disk> disks = input.disks();
        for (VertexId i = 0; i < disks.size(); ++i) disks[i].vertex = i;
        relabeled = DiskSystem(std::move(disks));
    }
    const DiskSystem& s = indexed ? input : relabeled;

    SeparatorTree tree;
    tree.leaf_threshold = leaf_threshold;
    tree.delta = options.delta;
    tree.options = options;
    tree.label.assign(s.size(), SeparatorNode::kNoNode);

    SeparatorNode root;
    root.members.resize(s.size());
    std::iota(root.members.begin(), root.members.end(), VertexId{0});
    tree.nodes.push_back(std::move(root));

    std::vector<std::size_t> level{0};
    while (!level.empty()) {
        std::vector<std::optional<CircleSeparator>> results(level.size());
        std::vector<std::exception_ptr> errors(level.size());
        parallel_for(level.size(), [&](std::size_t k) {
            const SeparatorNode& node = tree.nodes[level[k]];
            if (node.members.size() <= leaf_threshold) return;
            try {
                const DiskSystem sub = s.restrict_to(node.members);
                results[k] = find_separator(sub, options, splitmix64(seed ^ splitmix64(node.id)));
            } catch (...) {
                errors[k] = std::current_exception();
            }
        });
        for (std::size_t k = 0; k < level.size(); ++k) {
            if (!errors[k]) continue;
            std::vector<std::size_t> path;
            for (std::size_t v = level[k]; v != SeparatorNode::kNoNode; v = tree.nodes[v].parent) path.push_back(v);
            std::reverse(path.begin(), path.end());
            try {
                std::rethrow_exception(errors[k]);
            } catch (SeparatorFailure& failure) {
                failure.set_path(path);
                throw;
            }
        }

        std::vector<std::size_t> next;
        for (std::size_t k = 0; k < level.size(); ++k) {
            const std::size_t id = level[k];
            if (!results[k]) {
                for (VertexId v : tree.nodes[id].members) tree.label[v] = id;
                continue;
            }
            CircleSeparator& sep = *results[k];
            for (VertexId v : sep.cut) tree.label[v] = id;
            auto add_child = [&](std::vector<VertexId> members) {
                SeparatorNode child;
                child.id = tree.nodes.size();
                child.parent = id;
                child.depth = tree.nodes[id].depth + 1;
                child.members = std::move(members);
                next.push_back(child.id);
                tree.nodes.push_back(std::move(child));
                return tree.nodes.back().id;
            };
            if (!sep.inside.empty()) {
                const std::size_t c = add_child(sep.inside);
                tree.nodes[id].inside_child = c;
            }
            if (!sep.outside.empty()) {
                const std::size_t c = add_child(sep.outside);
                tree.nodes[id].outside_child = c;
            }
            tree.nodes[id].separator = std::move(sep);
        }
        level = std::move(next);
    }
    return tree;
}

SeparatorTree build_decomposition(const DiskSystem& s, double delta, std::size_t leaf_threshold,
                                  std::uint64_t seed) {
    SeparatorOptions options;
    options.delta = delta;
    return build_decomposition(s, options, leaf_threshold, seed);
}

namespace {

void check_partition(const CircleSeparator& sep, const DiskSystem& s, std::vector<VertexId> members,
                     const SeparatorOptions& options, const std::string& where,
                     std::vector<std::string>& out) {
    std::vector<VertexId> all;
    all.insert(all.end(), sep.cut.begin(), sep.cut.end());
    all.insert(all.end(), sep.inside.begin(), sep.inside.end());
    all.insert(all.end(), sep.outside.begin(), sep.outside.end());
    std::sort(all.begin(), all.end());
    std::sort(members.begin(), members.end());
    if (all != members) out.push_back(where + ": cut/inside/outside do not partition the vertices");

    auto expect = [&](const std::vector<VertexId>& set, DiskSide side, const char* name) {
        for (VertexId v : set) {
            if (v >= s.size() || classify_disk(s.disk(v), sep.circle) != side) {
                out.push_back(where + ": vertex " + std::to_string(v) + " misplaced in " + name);
            }
        }
    };
    expect(sep.cut, DiskSide::cut, "cut");
    expect(sep.inside, DiskSide::inside, "inside");
    expect(sep.outside, DiskSide::outside, "outside");

    const double n = static_cast<double>(members.size());
    const double limit = options.delta * n;
    if (static_cast<double>(sep.inside.size()) > limit || static_cast<double>(sep.outside.size()) > limit) {
        out.push_back(where + ": balance " + std::to_string(sep.balance(members.size())) + " exceeds delta");
    }
    const double allowance = options.effective_cut_constant() * std::sqrt(n);
    const double residual_cut = static_cast<double>(sep.cut.size() - sep.exceptional_cut);
    if (residual_cut > allowance || static_cast<double>(sep.exceptional_cut) > allowance) {
        out.push_back(where + ": cut of " + std::to_string(sep.cut.size()) + " exceeds the allowance");
    }
}

}  // namespace

std::vector<std::string> validate_separator(const CircleSeparator& sep, const DiskSystem& s,
                                            const SeparatorOptions& options) {
    std::vector<std::string> out;
    std::vector<VertexId> members(s.size());
    std::iota(members.begin(), members.end(), VertexId{0});
    check_partition(sep, s, std::move(members), options, "separator", out);
    return out;
}

std::vector<std::string> validate_decomposition(const SeparatorTree& tree, const DiskSystem& s) {
    std::vector<std::string> out;
    std::vector<std::size_t> times_labeled(s.size(), 0);
    for (const SeparatorNode& node : tree.nodes) {
        const std::string where = "node " + std::to_string(node.id);
        if (node.leaf()) {
            if (node.members.size() > tree.leaf_threshold) out.push_back(where + ": oversized leaf");
            for (VertexId v : node.members) {
                ++times_labeled[v];
                if (tree.label[v] != node.id) out.push_back(where + ": leaf vertex mislabeled");
            }
            continue;
        }
        const CircleSeparator& sep = *node.separator;
        check_partition(sep, s, node.members, tree.options, where, out);
        for (VertexId v : sep.cut) {
            ++times_labeled[v];
            if (tree.label[v] != node.id) out.push_back(where + ": cut vertex mislabeled");
        }
        auto check_child = [&](std::size_t child, const std::vector<VertexId>& expected) {
            if (expected.empty()) {
                if (child != SeparatorNode::kNoNode) out.push_back(where + ": child for an empty side");
                return;
            }
            if (child == SeparatorNode::kNoNode || tree.nodes[child].members != expected) {
                out.push_back(where + ": child does not hold its side");
                return;
            }
            if (static_cast<double>(expected.size()) > tree.delta * static_cast<double>(node.members.size())) {
                out.push_back(where + ": child exceeds delta of parent");
            }
        };
        check_child(node.inside_child, sep.inside);
        check_child(node.outside_child, sep.outside);
    }
    for (VertexId v = 0; v < s.size(); ++v) {
        if (times_labeled[v] != 1) {
            out.push_back("vertex " + std::to_string(v) + " labeled " + std::to_string(times_labeled[v]) + " times");
        }
    }
    return out;
}

}  // namespace roadgeom
