#include "roadgeom/errors.hpp"
#include "roadgeom/netio.hpp"
#include "roadgeom/report.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

using namespace roadgeom;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(ROADGEOM_CLI) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("roadgeom_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST(Report, DeterministicForSeed) {
    ExperimentConfig c;
    c.sizes = {64, 256};
    c.metrics = {"crossings", "ply", "clustering"};
    c.seed = 3;
    const auto a = run_report(c);
    const auto b = run_report(c);
    ASSERT_EQ(a.size(), 3u);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a[0].substr(0, a[0].find('\n')), "network,n,metric,sqrt_n");
}

TEST(Report, AllMetricsRun) {
    ExperimentConfig c;
    c.sizes = {256};
    c.metrics = report_metrics();
    c.seed = 1;
    const auto out = run_report(c);
    EXPECT_EQ(out.size(), report_metrics().size());
}

TEST(Report, RejectsBadConfig) {
    ExperimentConfig c;
    c.metrics = {"crossings"};
    c.seed = 1;
    EXPECT_FALSE(validate(c).empty());
    EXPECT_THROW(run_report(c), ValidationError);
    c.sizes = {100, 101};
    EXPECT_EQ(validate(c).size(), 1u);
    c.sizes = {100};
    c.seed.reset();
    EXPECT_THROW(run_report(c), ValidationError);
    c.seed = 1;
    c.metrics = {"volume"};
    EXPECT_THROW(run_report(c), ValidationError);
}

TEST(Cli, ExitCodes) {
    const auto dir = scratch("cli");
    const auto g = gen_gotham(8, 1, 2);
    save_dimacs(g, dir / "g.gr", dir / "g.co");
    const std::string gr = (dir / "g.gr").string();
    EXPECT_EQ(run("stats " + gr), 0);
    EXPECT_EQ(run("crossings gotham:8:1 --seed 2"), 0);
    EXPECT_EQ(run("decompose " + gr + " --seed 1 --leaf 8"), 0);
    EXPECT_EQ(run("sssp " + gr + " --source 3"), 0);
    EXPECT_EQ(run("voronoi " + gr + " --sites random:4 --seed 1"), 0);
    EXPECT_EQ(run("arrangement " + gr + " --naive"), 0);
    EXPECT_EQ(run("report --gen gotham --sizes 64 --metric ply --seed 1"), 0);
    EXPECT_EQ(run("--help"), 0);

    EXPECT_EQ(run(""), 1);
    EXPECT_EQ(run("stats"), 1);
    EXPECT_EQ(run("decompose " + gr + " --delta 0.9"), 1);
    EXPECT_EQ(run("frobnicate " + gr), 1);

    EXPECT_EQ(run("stats " + (dir / "missing.gr").string()), 2);
    EXPECT_EQ(run("stats gotham:8:1"), 2);  // generator without --seed
    EXPECT_EQ(run("sssp " + gr + " --source 99999"), 2);
    EXPECT_EQ(run("report --gen gotham --sizes 100,101 --metric ply --seed 1"), 2);
    std::ofstream(dir / "bad.gr") << "p sp 2 1\na 1 7 1.0\n";
    std::ofstream(dir / "bad.co") << "p aux sp co 2\nv 1 0 0\nv 2 1 0\n";
    EXPECT_EQ(run("stats " + (dir / "bad.gr").string()), 2);
}

TEST(Cli, ConvertRoundTrip) {
    const auto dir = scratch("convert");
    const auto g = gen_gotham(6, 1, 4);
    save_csv(g, dir / "src");
    ASSERT_EQ(run("convert " + (dir / "src").string() + " --to " + (dir / "csv").string()), 0);
    EXPECT_EQ(load_graph(dir / "csv"), g);
}

TEST(Cli, ReportDirectory) {
    const auto dir = scratch("report");
    ASSERT_EQ(run("report --gen rgg --sizes 64,128 --metric crossings,degree --seed 2 --out " + (dir / "r").string()), 0);
    EXPECT_TRUE(std::filesystem::exists(dir / "r" / "crossings.csv"));
    EXPECT_TRUE(std::filesystem::exists(dir / "r" / "degree.csv"));
}
