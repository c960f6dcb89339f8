#include "maghom/io.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "maghom/errors.hpp"

namespace maghom {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

std::size_t parse_index(const std::string& token, const std::string& what) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("expected a nonnegative integer for " + what + ", got '" + token + "'");
  }
  try {
    return std::stoul(token);
  } catch (const std::exception&) {
    throw ParseError(what + " out of range: " + token);
  }
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::optional<Graph> g;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(trim(strip_comment(line)));
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;
    const std::string where = "line " + std::to_string(lineno);
    if (!g) {
      if (words.size() > 2) throw ParseError(where + ": expected `n [directed|undirected]`");
      bool directed = false;
      if (words.size() == 2) {
        if (words[1] == "directed") {
          directed = true;
        } else if (words[1] != "undirected") {
          throw ParseError(where + ": unknown graph kind '" + words[1] + "'");
        }
      }
      g.emplace(parse_index(words[0], "vertex count"), directed);
      continue;
    }
    if (words.size() != 2) throw ParseError(where + ": expected `u v`");
    try {
      g->add_edge(parse_index(words[0], "vertex"), parse_index(words[1], "vertex"));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (!g) throw ParseError("edge list is empty");
  return *g;
}

Graph read_edge_list_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_edge_list(in);
}

QuasiMetricSpace read_metric_csv(std::istream& in) {
  DistanceMatrix d;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    std::vector<ExtendedRational> row;
    std::stringstream cells(line);
    for (std::string cell; std::getline(cells, cell, ',');) {
      try {
        row.push_back(ExtendedRational::parse(trim(cell)));
      } catch (const Error& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    if (!line.empty() && line.back() == ',') {
      throw ParseError("line " + std::to_string(lineno) + ": trailing comma");
    }
    d.push_back(std::move(row));
  }
  try {
    return QuasiMetricSpace(std::move(d), /*allow_pseudo=*/true);
  } catch (const Error& e) {
    throw ParseError(std::string("invalid metric: ") + e.what());
  }
}

QuasiMetricSpace read_metric_csv_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_metric_csv(in);
}

std::string write_metric_csv(const QuasiMetricSpace& X) {
  std::string out;
  for (std::size_t x = 0; x < X.size(); ++x) {
    for (std::size_t y = 0; y < X.size(); ++y) {
      if (y > 0) out += ',';
      out += X.d(x, y).to_string();
    }
    out += '\n';
  }
  return out;
}

Graph complete_graph(std::size_t n) {
  Graph g(n, false);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n, false);
  for (std::size_t u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ParseError("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph directed_cycle(std::size_t n) {
  if (n < 2) throw ParseError("a directed cycle needs at least 2 vertices");
  Graph g(n, true);
  for (std::size_t u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

Graph complete_bipartite(std::size_t p, std::size_t q) {
  Graph g(p + q, false);
  for (std::size_t u = 0; u < p; ++u) {
    for (std::size_t v = 0; v < q; ++v) g.add_edge(u, p + v);
  }
  return g;
}

Graph petersen_graph() {
  Graph g(10, false);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph icosahedral_graph() {
  // Apex 0, upper ring 1..5, lower ring 6..10, apex 11.
  Graph g(12, false);
  for (std::size_t i = 0; i < 5; ++i) {
    const std::size_t up = 1 + i;
    const std::size_t up_next = 1 + (i + 1) % 5;
    const std::size_t low = 6 + i;
    const std::size_t low_next = 6 + (i + 1) % 5;
    g.add_edge(0, up);
    g.add_edge(up, up_next);
    g.add_edge(11, low);
    g.add_edge(low, low_next);
    g.add_edge(up, low);
    g.add_edge(up_next, low);
  }
  return g;
}

Graph named_graph(const std::string& name) {
  static const std::regex bipartite_sep(R"(k(\d+)[_x](\d+))");
  static const std::regex bipartite_digits(R"(k([1-9])([1-9]))");
  static const std::regex single(R"((k|p|c|dc)(\d+))");
  std::smatch m;
  auto number = [](const std::string& s) { return parse_index(s, "graph size"); };
  if (name == "petersen") return petersen_graph();
  if (name == "icosahedron") return icosahedral_graph();
  if (std::regex_match(name, m, bipartite_sep) || std::regex_match(name, m, bipartite_digits)) {
    return complete_bipartite(number(m[1]), number(m[2]));
  }
  if (std::regex_match(name, m, single)) {
    const std::size_t n = number(m[2]);
    if (m[1] == "k") return complete_graph(n);
    if (m[1] == "p") return path_graph(n);
    if (m[1] == "c") return cycle_graph(n);
    return directed_cycle(n);
  }
  throw ParseError("unknown graph name '" + name + "'");
}

Graph load_graph(const std::string& name_or_path) {
  if (std::filesystem::is_regular_file(name_or_path)) return read_edge_list_file(name_or_path);
  return named_graph(name_or_path);
}

}  // namespace maghom
