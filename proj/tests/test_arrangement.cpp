#include "oracles.hpp"

#include "roadgeom/arrangement.hpp"
#include "roadgeom/errors.hpp"
#include "roadgeom/netio.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace roadgeom;

namespace {

DiskSystem random_circles(std::size_t n, double extent, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> pos(0.0, extent);
    std::uniform_real_distribution<double> rad(0.2, 1.5);
    std::vector<Disk> d(n);
    for (VertexId i = 0; i < n; ++i) d[i] = {i, Point2d(pos(rng), pos(rng)), rad(rng)};
    return DiskSystem(d);
}

void expect_counts(const CircleArrangement& a, std::size_t v, std::size_t e, std::size_t f, std::size_t c) {
    EXPECT_EQ(a.num_vertices, v);
    EXPECT_EQ(a.num_edges, e);
    EXPECT_EQ(a.faces, f);
    EXPECT_EQ(a.components, c);
    EXPECT_TRUE(a.euler_holds());
}

}  // namespace

TEST(Arrangement, SingleCircle) {
    const DiskSystem s({{0, Point2d(0, 0), 1.0}});
    const auto a = build_naive(s);
    expect_counts(a, 1, 1, 2, 1);
    EXPECT_EQ(a.intersection_vertices, 0u);
    EXPECT_TRUE(a.vertices[0].sentinel());
}

TEST(Arrangement, Lens) {
    const DiskSystem s({{0, Point2d(0, 0), 1.0}, {1, Point2d(1, 0), 1.0}});
    for (const auto& a : {build_naive(s), build_inductive(s, clustering_check(s))}) {
        expect_counts(a, 2, 4, 4, 1);
    }
}

TEST(Arrangement, Kissing) {
    const DiskSystem s({{0, Point2d(0, 0), 1.0}, {1, Point2d(2, 0), 1.0}});
    const auto a = build_naive(s);
    expect_counts(a, 1, 2, 3, 1);
    EXPECT_TRUE(a.vertices[0].tangent);
    EXPECT_EQ(complexity_audit(a, s).vertices, 1u);
}

TEST(Arrangement, DisjointCircles) {
    const DiskSystem s({{0, Point2d(0, 0), 1.0}, {1, Point2d(5, 0), 1.0}, {2, Point2d(10, 0), 2.0}});
    expect_counts(build_naive(s), 3, 3, 4, 3);
}

TEST(Arrangement, ChainOfThree) {
    const DiskSystem s({{0, Point2d(0, 0), 1.0}, {1, Point2d(1.5, 0), 1.0}, {2, Point2d(3, 0), 1.0}});
    const auto a = build_naive(s);
    expect_counts(a, 4, 8, 6, 1);
    EXPECT_TRUE(arrangements_equivalent(a, build_inductive(s, clustering_check(s)), 1e-12));
}

TEST(Arrangement, ZeroRadiusIsInactive) {
    const DiskSystem s({{0, Point2d(0, 0), 1.0}, {1, Point2d(1, 0), 0.0}});
    const auto a = build_naive(s);
    EXPECT_FALSE(a.active[1]);
    expect_counts(a, 1, 1, 2, 1);
}

TEST(Arrangement, SequencesMatchAngularOracle) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto s = random_circles(30, 6.0, seed);
        const auto a = build_naive(s);
        ASSERT_TRUE(a.euler_holds());
        std::size_t expected_points = 0;
        for (VertexId c = 0; c < s.size(); ++c) {
            const auto center = s.disk(c).center;
            // Oracle: every intersection point with another circle, sorted by atan2 angle.
            std::vector<std::pair<double, Point2d>> want;
            for (VertexId o = 0; o < s.size(); ++o) {
                if (o == c) continue;
                const auto x = intersect_circles(s.disk(c).circle(), s.disk(o).circle());
                for (int k = 0; k < x.count; ++k) want.push_back({oracle::angle_about(center, x.points[k]), x.points[k]});
            }
            std::sort(want.begin(), want.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
            const auto& seq = a.sequence[c];
            if (want.empty()) {
                ASSERT_EQ(seq.size(), 1u);
                EXPECT_TRUE(a.vertices[seq[0]].sentinel());
                continue;
            }
            ASSERT_EQ(seq.size(), want.size()) << "circle " << c;
            expected_points += want.size();
            for (std::size_t k = 0; k < seq.size(); ++k) {
                EXPECT_NEAR((a.vertices[seq[k]].point - want[k].second).norm(), 0.0, 1e-9);
            }
        }
        std::size_t listed = 0;
        for (const auto& seq : a.sequence) listed += seq.size();
        EXPECT_EQ(listed, a.num_edges);
        EXPECT_GE(listed, expected_points);
    }
}

TEST(Arrangement, InductiveMatchesNaive) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const auto s = random_circles(100, 12.0, seed);
        const auto naive = build_naive(s);
        const auto inductive = build_inductive(s, clustering_check(s));
        std::string why;
        EXPECT_TRUE(arrangements_equivalent(naive, inductive, 1e-9, &why)) << why;
        EXPECT_TRUE(inductive.euler_holds());
        EXPECT_EQ(naive.faces, inductive.faces);
    }
    const auto s = build_disk_system(gen_gotham(16, 2, 3));
    std::string why;
    EXPECT_TRUE(arrangements_equivalent(build_naive(s), build_inductive(s, clustering_check(s)), 1e-9, &why)) << why;
}

TEST(Arrangement, InductiveRejectsWrongClustering) {
    const DiskSystem s({{0, Point2d(0, 0), 3.0}, {1, Point2d(2, 0), 0.5}, {2, Point2d(-2, 0), 0.5}});
    auto clustering = clustering_check(s);
    clustering.components[0] = 1;
    EXPECT_THROW(build_inductive(s, clustering), InvariantError);
}

TEST(Arrangement, DuplicateCirclesAreDegenerate) {
    const DiskSystem s({{0, Point2d(0, 0), 1.0}, {1, Point2d(0, 0), 1.0}});
    EXPECT_THROW(build_naive(s), DegeneracyError);
}

TEST(Arrangement, ComplexityWithinPairBound) {
    const auto s = build_disk_system(gen_random_geometric(300, 0.09, 4));
    const auto a = build_naive(s);
    const auto audit = complexity_audit(a, s);
    EXPECT_LE(audit.vertices, 2 * audit.pairs);
    EXPECT_EQ(audit.pairs, s.pairs().size());
    EXPECT_TRUE(a.euler_holds());
    for (std::size_t v = 0; v < a.vertices.size(); ++v) {
        if (!a.vertices[v].sentinel()) EXPECT_GE(depth_at_vertex(a, s, v), 2u);
    }
}
