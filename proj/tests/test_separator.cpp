#include "roadgeom/netio.hpp"
#include "roadgeom/separator.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace roadgeom;

namespace {

DiskSystem grid_disks(int side) { return build_disk_system(gen_gotham(side, 0, 1)); }

}  // namespace

TEST(Sphere, LiftProjectRoundTrip) {
    for (const Point2d p : {Point2d(0, 0), Point2d(3, -2), Point2d(-0.25, 0.5)}) {
        const auto q = sphere::lift(p);
        EXPECT_NEAR(q.norm(), 1.0, 1e-15);
        EXPECT_NEAR((sphere::project(q) - p).norm(), 0.0, 1e-12);
    }
}

TEST(Sphere, CenteringSendsCenterpointToOrigin) {
    std::mt19937_64 rng(5);
    std::vector<Eigen::Vector3d> pts;
    std::normal_distribution<double> g(0.0, 0.3);
    for (int i = 0; i < 500; ++i) pts.push_back(sphere::lift(Point2d(2 + g(rng), -1 + g(rng))));
    const Eigen::Vector3d c = sphere::centerpoint(pts, rng);
    ASSERT_LT(c.norm(), 1.0);
    const sphere::ConformalCentering m(c);
    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    for (const auto& p : pts) {
        const Eigen::Vector3d q = m.forward(p);
        EXPECT_NEAR(q.norm(), 1.0, 1e-9);
        mean += q;
    }
    // After centering the lifted cloud is roughly balanced about the origin.
    EXPECT_LT((mean / pts.size()).norm(), 0.5);
}

TEST(Sphere, InverseCircleMatchesForwardMap) {
    std::mt19937_64 rng(9);
    const sphere::ConformalCentering m(Eigen::Vector3d(0.3, -0.2, 0.4));
    std::normal_distribution<double> g(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::Vector3d n(g(rng), g(rng), g(rng));
        n.normalize();
        const auto circle = m.inverse_circle(n);
        if (!circle) continue;
        // Points of the plane circle land on the great circle with normal n.
        for (int k = 0; k < 8; ++k) {
            const double a = 2 * M_PI * k / 8;
            const Point2d p = circle->center + circle->radius * Point2d(std::cos(a), std::sin(a));
            EXPECT_NEAR(m.forward(sphere::lift(p)).dot(n), 0.0, 1e-7);
        }
    }
}

TEST(ClassifyDisk, TangencyIsCut) {
    const Circle2d c{Point2d(0, 0), 2.0};
    EXPECT_EQ(classify_disk({0, Point2d(0, 0), 1.0}, c), DiskSide::inside);
    EXPECT_EQ(classify_disk({0, Point2d(1, 0), 1.0}, c), DiskSide::cut);
    EXPECT_EQ(classify_disk({0, Point2d(3, 0), 1.0}, c), DiskSide::cut);
    EXPECT_EQ(classify_disk({0, Point2d(3.5, 0), 1.0}, c), DiskSide::outside);
}

TEST(Separator, TwoFarDisks) {
    const DiskSystem s({{0, Point2d(0, 0), 1.0}, {1, Point2d(100, 0), 1.0}});
    const auto sep = find_separator(s, 0.75, 1, 3);
    EXPECT_TRUE(sep.cut.empty());
    EXPECT_EQ(sep.inside.size(), 1u);
    EXPECT_EQ(sep.outside.size(), 1u);
}

TEST(Separator, GridContract) {
    const auto s = grid_disks(32);
    SeparatorOptions options;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto sep = find_separator(s, options, seed);
        EXPECT_LE(sep.cut.size(), 128u);
        EXPECT_LE(sep.balance(s.size()), 0.75);
        EXPECT_TRUE(validate_separator(sep, s, options).empty());
    }
}

TEST(Separator, ConcentricIsExceptionalDominated) {
    std::vector<Disk> d;
    for (VertexId i = 0; i < 400; ++i) d.push_back({i, Point2d(0, 0), 1.0 + i});
    try {
        find_separator(DiskSystem(d), 0.75, 1, 1);
        FAIL() << "expected SeparatorFailure";
    } catch (const SeparatorFailure& f) {
        EXPECT_TRUE(f.exceptional_dominated());
        EXPECT_EQ(f.exceptional_count(), 399u);
    }
}

TEST(Separator, RejectsBadArguments) {
    const auto s = grid_disks(4);
    EXPECT_THROW(find_separator(s, 0.5, 1, 1), std::invalid_argument);
    EXPECT_THROW(find_separator(DiskSystem({{0, Point2d(0, 0), 1.0}}), 0.75, 1, 1), std::invalid_argument);
}

TEST(Decomposition, SmallInputIsSingleLeaf) {
    const auto s = grid_disks(4);
    const auto tree = build_decomposition(s, 2.0 / 3.0, 16, 1);
    ASSERT_EQ(tree.nodes.size(), 1u);
    EXPECT_TRUE(tree.nodes[0].leaf());
    EXPECT_TRUE(validate_decomposition(tree, s).empty());
}

TEST(Decomposition, GridDepthAndInvariants) {
    const auto s = grid_disks(64);
    const double delta = 2.0 / 3.0;
    const std::size_t leaf = 32;
    const auto tree = build_decomposition(s, delta, leaf, 7);
    const auto problems = validate_decomposition(tree, s);
    EXPECT_TRUE(problems.empty()) << problems.front();
    const double n = static_cast<double>(s.size());
    const auto bound = static_cast<std::size_t>(std::ceil(std::log(n / leaf) / std::log(1 / delta))) + 2;
    EXPECT_LE(tree.depth(), bound);
    // Total cut mass stays within the geometric series of per-level allowances.
    double mass = 0;
    for (const auto& node : tree.nodes) {
        if (node.separator) mass += static_cast<double>(node.separator->cut.size());
    }
    double series = 0;
    for (std::size_t i = 0; i <= tree.depth(); ++i) series += std::pow(delta, i / 2.0) * std::pow(1 / delta, i);
    EXPECT_LE(mass, 4 * std::sqrt(n) * series);
}

TEST(Decomposition, SameSeedSameTree) {
    const auto s = grid_disks(40);
    const auto a = build_decomposition(s, 2.0 / 3.0, 20, 11);
    const auto b = build_decomposition(s, 2.0 / 3.0, 20, 11);
    ASSERT_EQ(a.nodes.size(), b.nodes.size());
    EXPECT_EQ(a.label, b.label);
    for (std::size_t k = 0; k < a.nodes.size(); ++k) {
        EXPECT_EQ(a.nodes[k].members, b.nodes[k].members);
        EXPECT_EQ(a.nodes[k].leaf(), b.nodes[k].leaf());
    }
}

TEST(Decomposition, FailureCarriesPath) {
    std::vector<Disk> d;
    for (VertexId i = 0; i < 100; ++i) d.push_back({i, Point2d(0, 0), 1.0 + i});
    SeparatorOptions options;
    options.delta = 2.0 / 3.0;
    options.max_rounds = 4;
    try {
        build_decomposition(DiskSystem(d), options, 8, 1);
        FAIL() << "expected SeparatorFailure";
    } catch (const SeparatorFailure& f) {
        ASSERT_FALSE(f.path().empty());
        EXPECT_EQ(f.path().front(), 0u);
    }
}
