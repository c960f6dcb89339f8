#pragma once

#include <istream>
#include <string>

#include "maghom/space.hpp"

namespace maghom {

/// Edge list: first line `n [directed|undirected]`, then `u v` per line.
/// Blank lines and text after `#` are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Square CSV of `p/q`, integers or `inf`. Zero off-diagonal entries are
/// accepted (a pseudo space); consumers that need a positive minimum refuse it.
QuasiMetricSpace read_metric_csv(std::istream& in);
QuasiMetricSpace read_metric_csv_file(const std::string& path);
std::string write_metric_csv(const QuasiMetricSpace& X);

/// Built-in graphs: `kN` complete, `pN` path on N vertices, `cN` cycle,
/// `kP_Q` / `kPxQ` complete bipartite (also `kPQ` for two nonzero digits),
/// `dcN` directed cycle, `petersen`, `icosahedron`. Throws ParseError for unknown names.
Graph named_graph(const std::string& name);

/// A file path if one exists, otherwise a built-in name.
Graph load_graph(const std::string& name_or_path);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph directed_cycle(std::size_t n);
Graph complete_bipartite(std::size_t p, std::size_t q);
Graph petersen_graph();
Graph icosahedral_graph();

}  // namespace maghom
