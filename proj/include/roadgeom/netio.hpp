#pragma once

#include "roadgeom/graph.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

namespace roadgeom {

/// Micro-degree scale of DIMACS coordinate files.
inline constexpr double kMicroDegree = 1e-6;

/// Reads a DIMACS `.gr` arc file and its `.co` coordinate file. Reciprocal arcs collapse to a
/// single undirected edge; all loaded edges get hierarchy level 4 (the format carries none).
GeometricGraph load_dimacs(const std::filesystem::path& graph_path,
                           const std::filesystem::path& coord_path);
GeometricGraph parse_dimacs(std::istream& graph_in, std::istream& coord_in,
                            const std::string& graph_name = "<graph>",
                            const std::string& coord_name = "<coords>");

/// Writes both arc directions per edge, with vertices renumbered 1..n in index order (ids that
/// are already 1..n are unchanged). Coordinates are rounded to integer micro-degrees and
/// integral weights are written as integers.
void write_dimacs(const GeometricGraph& g, std::ostream& graph_out, std::ostream& coord_out);
void save_dimacs(const GeometricGraph& g, const std::filesystem::path& graph_path,
                 const std::filesystem::path& coord_path);

/// Native interchange: `vertices.csv` (id,x,y) and `edges.csv` (u,v,weight,level), with
/// shortest round-trip decimal representations.
GeometricGraph load_csv(const std::filesystem::path& vertices_path,
                        const std::filesystem::path& edges_path);
GeometricGraph parse_csv(std::istream& vertices_in, std::istream& edges_in);
void write_csv(const GeometricGraph& g, std::ostream& vertices_out, std::ostream& edges_out);
void save_csv(const GeometricGraph& g, const std::filesystem::path& directory);

/// Loads `<dir>/vertices.csv` + `<dir>/edges.csv`, or a `.gr` file with its sibling `.co`.
GeometricGraph load_graph(const std::filesystem::path& path);

/// side x side unit grid of level-4 roads, plus `expressways` straight level-1 chords through
/// the middle of the grid at random angles. Each chord is a single edge whose endpoints sit
/// half a unit outside the grid boundary.
GeometricGraph gen_gotham(int side, int expressways, std::uint64_t seed);

/// n uniform points in the unit square; an edge of weight = length joins points at distance
/// at most `radius`.
GeometricGraph gen_random_geometric(std::size_t n, double radius, std::uint64_t seed);

/// Unit grid city with highway interchanges: each interchange is a tight cluster of `ramps`
/// vertices whose ramps (level-2 edges of length about `ramp_length`) fan out radially to the
/// grid. Produces many overlapping mid-size disks over very few vertices.
GeometricGraph gen_interchange_city(int side, int interchanges, int ramps, double ramp_length,
                                    std::uint64_t seed);

}  // namespace roadgeom
