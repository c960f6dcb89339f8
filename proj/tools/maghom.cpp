// maghom: magnitude homology, cohomology rings, recovery and verification
// from the command line. Exit codes: 0 success, 1 failed verification,
// 2 bad input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "maghom/cyclic.hpp"
#include "maghom/errors.hpp"
#include "maghom/graph_algebra.hpp"
#include "maghom/io.hpp"
#include "maghom/poset.hpp"
#include "maghom/presentation.hpp"
#include "maghom/recovery.hpp"
#include "maghom/series.hpp"

namespace {

using namespace maghom;
using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string graph;
  std::string metric;
  std::string poset;
  std::string ring;
  std::optional<std::size_t> kmax;
  std::string lmax;
  std::optional<std::uint64_t> seed;
  std::size_t n = 0;
  std::string format = "json";
  std::string out;
};

/// Verification failures that should exit with 1.
struct VerificationFailed {
  std::string output;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw ParseError("cannot write " + cfg.out);
  f << text;
}

QuasiMetricSpace load_space(const RunConfig& cfg) {
  if (!cfg.graph.empty() && !cfg.metric.empty()) throw ParseError("give either --graph or --metric");
  if (!cfg.graph.empty()) return space_from_graph(load_graph(cfg.graph));
  if (!cfg.metric.empty()) return read_metric_csv_file(cfg.metric);
  throw ParseError("an input space is required (--graph or --metric)");
}

Rational require_lmax(const RunConfig& cfg) {
  if (cfg.lmax.empty()) throw ParseError("--lmax is required");
  auto value = ExtendedRational::parse(cfg.lmax);
  if (value.is_infinite()) throw ParseError("--lmax must be finite");
  return value.value();
}

std::size_t require_kmax(const RunConfig& cfg) {
  if (!cfg.kmax) throw ParseError("--kmax is required");
  return *cfg.kmax;
}

Json group_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion) torsion.push_back(t.get_str());
  return {{"rank", g.rank}, {"torsion", torsion}, {"group", g.to_string()}};
}

std::string torsion_text(const AbelianGroup& g) {
  std::string s;
  for (const auto& t : g.torsion) s += (s.empty() ? "" : ",") + t.get_str();
  return s.empty() ? "-" : s;
}

std::string report_text(const RunConfig& cfg, const std::string& check, const Report& report,
                        Json extra = Json::object()) {
  if (cfg.format == "tsv") {
    std::ostringstream os;
    os << "check\t" << check << "\n";
    os << "passed\t" << (report.passed ? "true" : "false") << "\n";
    for (const auto& [key, value] : extra.items()) {
      os << key << "\t" << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    for (const auto& f : report.failures) os << "failure\t" << f << "\n";
    for (const auto& n : report.notes) os << "note\t" << n << "\n";
    return os.str();
  }
  Json j;
  j["check"] = check;
  j["passed"] = report.passed;
  for (const auto& [key, value] : extra.items()) j[key] = value;
  j["failures"] = report.failures;
  j["notes"] = report.notes;
  return j.dump(2) + "\n";
}

void finish_report(const RunConfig& cfg, const std::string& check, const Report& report,
                   Json extra = Json::object()) {
  auto text = report_text(cfg, check, report, std::move(extra));
  if (!report.passed) throw VerificationFailed{text};
  emit(cfg, text);
}

void cmd_groups(const RunConfig& cfg, bool cohomological) {
  const auto X = load_space(cfg);
  const auto kmax = require_kmax(cfg);
  const auto lmax = require_lmax(cfg);
  Json rows = Json::array();
  std::ostringstream tsv;
  tsv << "k\tgrade\trank\ttorsion\tgroup" << (cohomological ? "\tuct" : "") << "\n";
  bool uct_ok = true;
  for (const auto& grade : realizable_grades(X, lmax)) {
    auto block = build_block(X, grade, kmax);
    for (std::size_t k = 0; k <= kmax; ++k) {
      AbelianGroup g = cohomological ? cohomology_group(block, k) : homology(block, k);
      bool uct = true;
      if (cohomological) {
        uct = uct_check(g, homology(block, k), k == 0 ? AbelianGroup{} : homology(block, k - 1));
        uct_ok = uct_ok && uct;
      }
      if (g.is_zero() && uct) continue;
      Json row = {{"k", k}, {"grade", rational_to_string(grade)}};
      row.update(group_json(g));
      if (cohomological) row["uct"] = uct;
      rows.push_back(row);
      tsv << k << "\t" << rational_to_string(grade) << "\t" << g.rank << "\t" << torsion_text(g)
          << "\t" << g.to_string();
      if (cohomological) tsv << "\t" << (uct ? "true" : "false");
      tsv << "\n";
    }
  }
  std::string text;
  if (cfg.format == "tsv") {
    text = tsv.str();
  } else {
    Json j;
    j["kind"] = cohomological ? "cohomology" : "homology";
    j["points"] = X.size();
    j["kmax"] = kmax;
    j["lmax"] = rational_to_string(lmax);
    j["blocks"] = rows;
    text = j.dump(2) + "\n";
  }
  if (!uct_ok) throw VerificationFailed{text};
  emit(cfg, text);
}

void cmd_ring(const RunConfig& cfg) {
  const auto X = load_space(cfg);
  require_positive_min(X);
  auto P = export_presentation(X, require_kmax(cfg), require_lmax(cfg), cfg.seed);
  if (cfg.format == "tsv") {
    std::ostringstream os;
    os << "block\tk\tgrade\trank\ttorsion\toffset\n";
    for (std::size_t i = 0; i < P.blocks.size(); ++i) {
      const auto& b = P.blocks[i];
      AbelianGroup g{b.free_rank, b.torsion};
      os << i << "\t" << b.bidegree.k << "\t" << rational_to_string(b.bidegree.grade) << "\t"
         << b.free_rank << "\t" << torsion_text(g) << "\t" << b.offset << "\n";
    }
    os << "unit";
    for (const auto& u : P.unit) os << "\t" << u.get_str();
    os << "\nleft\tright\ttarget\tvalue\n";
    for (const auto& c : P.products) {
      os << c.left << "\t" << c.right << "\t" << c.target << "\t" << c.value.get_str() << "\n";
    }
    emit(cfg, os.str());
    return;
  }
  emit(cfg, P.to_json());
}

Json metric_json(const QuasiMetricSpace& X) {
  Json rows = Json::array();
  for (std::size_t x = 0; x < X.size(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < X.size(); ++y) row.push_back(X.d(x, y).to_string());
    rows.push_back(row);
  }
  return rows;
}

void cmd_recover(const RunConfig& cfg) {
  if (!cfg.ring.empty()) {
    if (!cfg.graph.empty() || !cfg.metric.empty()) throw ParseError("--ring excludes --graph/--metric");
    std::ifstream in(cfg.ring);
    if (!in) throw ParseError("cannot open " + cfg.ring);
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto recovered = recover_space(RingPresentation::from_json(buffer.str()));
    emit(cfg, write_metric_csv(recovered.space));
    return;
  }
  const auto X = load_space(cfg);
  auto report = recovery_roundtrip_report(X, cfg.seed);
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    if (!f) throw ParseError("cannot write " + cfg.out);
    f << write_metric_csv(report.recovered.space);
  }
  std::string text;
  if (cfg.format == "tsv") {
    text = "isometric\t" + std::string(report.isometric ? "true" : "false") + "\npoints\t" +
           std::to_string(report.recovered.points.size()) + "\n" +
           write_metric_csv(report.recovered.space);
  } else {
    Json j;
    j["isometric"] = report.isometric;
    j["points"] = report.recovered.points.size();
    j["seed"] = cfg.seed ? Json(*cfg.seed) : Json(nullptr);
    j["recovered_metric"] = metric_json(report.recovered.space);
    text = j.dump(2) + "\n";
  }
  if (!report.isometric) throw VerificationFailed{text};
  std::cout << text;
}

void cmd_verify_diagonal(const RunConfig& cfg) {
  if (!cfg.metric.empty() || cfg.graph.empty()) throw ParseError("verify diagonal needs --graph");
  const Graph G = load_graph(cfg.graph);
  const auto lmax = require_lmax(cfg);
  const std::size_t kmax =
      cfg.kmax ? *cfg.kmax : static_cast<std::size_t>(Integer(lmax.get_num() / lmax.get_den()).get_ui());
  Report report = verify_diagonal_theorem(G, kmax);
  auto diag = is_diagonal(G, lmax);
  Json offending = Json::array();
  for (const auto& [b, g] : diag.offending) {
    offending.push_back({{"k", b.k}, {"grade", rational_to_string(b.grade)}, {"group", g.to_string()}});
  }
  report.note(diag.diagonal ? "no off-diagonal homology up to lmax (truncated certificate)"
                            : "not diagonal: off-diagonal homology found");
  Json extra;
  extra["diagonal"] = diag.diagonal;
  extra["lmax"] = rational_to_string(lmax);
  extra["kmax"] = kmax;
  extra["torsion_free"] = diag.torsion_free;
  extra["off_diagonal"] = offending;
  finish_report(cfg, "diagonal", report, extra);
}

void cmd_verify_cyclic(const RunConfig& cfg) {
  if (cfg.n == 0) throw ParseError("verify cyclic needs --n");
  const auto kmax = require_kmax(cfg);
  cycle_half(cfg.n);
  Report report = verify_admissible_basis(cfg.n, kmax);
  report.merge(verify_presentation(cfg.n, kmax));
  finish_report(cfg, "cyclic", report, {{"n", cfg.n}, {"kmax", kmax}});
}

FinitePoset load_poset(const std::string& name) {
  static const std::regex chain(R"(chain(\d+))");
  static const std::regex antichain(R"(antichain(\d+))");
  std::smatch m;
  if (name == "circle") return FinitePoset::circle();
  if (std::regex_match(name, m, chain)) return FinitePoset::chain(std::stoul(m[1]));
  if (std::regex_match(name, m, antichain)) return FinitePoset::antichain(std::stoul(m[1]));
  return read_poset_file(name);
}

void cmd_verify_poset(const RunConfig& cfg) {
  if (cfg.poset.empty()) throw ParseError("verify poset needs --poset");
  const auto P = load_poset(cfg.poset);
  const auto kmax = require_kmax(cfg);
  auto C = order_complex_blocks(P, kmax);
  Json groups = Json::array();
  for (std::size_t k = 0; k <= kmax; ++k) {
    groups.push_back({{"k", k}, {"homology", C.homology(k).to_string()},
                      {"cohomology", C.cohomology(k).to_string()}});
  }
  Report report = check_graded_commutativity(P, kmax);
  finish_report(cfg, "poset", report, {{"elements", P.size()}, {"kmax", kmax}, {"groups", groups}});
}

void cmd_verify_series(const RunConfig& cfg) {
  const auto X = load_space(cfg);
  const auto lmax = require_lmax(cfg);
  auto euler = euler_series(X, lmax);
  auto inverse = inversion_series(X, lmax);
  Report report;
  if (!(euler == inverse)) report.fail("the two series differ");
  Json extra;
  extra["lmax"] = rational_to_string(lmax);
  extra["euler_series"] = Json::parse(euler.to_json());
  extra["inversion_series"] = Json::parse(inverse.to_json());
  extra["series"] = euler.to_string();
  finish_report(cfg, "series", report, extra);
}

void add_common(CLI::App* app, RunConfig& cfg, bool space, bool bounds) {
  if (space) {
    app->add_option("--graph", cfg.graph, "edge-list file or built-in name (kN, pN, cN, kP_Q, dcN, petersen)");
    app->add_option("--metric", cfg.metric, "distance matrix CSV");
  }
  if (bounds) {
    app->add_option("--kmax", cfg.kmax, "largest degree");
    app->add_option("--lmax", cfg.lmax, "largest grade (rational)");
  }
  app->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
  app->add_option("--out", cfg.out, "output file (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Magnitude homology and cohomology of finite graphs and quasi-metric spaces"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* homology_cmd = app.add_subcommand("homology", "table of MH_{k,l}");
  add_common(homology_cmd, cfg, true, true);
  auto* cohomology_cmd = app.add_subcommand("cohomology", "table of MH^k_l with UCT checks");
  add_common(cohomology_cmd, cfg, true, true);
  auto* ring_cmd = app.add_subcommand("ring", "export the cohomology ring presentation");
  add_common(ring_cmd, cfg, true, true);
  ring_cmd->add_option("--seed", cfg.seed, "scramble each block with this seed");
  auto* recover_cmd = app.add_subcommand("recover", "recover a space from its cohomology ring");
  add_common(recover_cmd, cfg, true, false);
  recover_cmd->add_option("--ring", cfg.ring, "presentation file to recover from");
  recover_cmd->add_option("--seed", cfg.seed, "scramble seed for the round trip");

  auto* verify_cmd = app.add_subcommand("verify", "check a theorem on concrete input");
  verify_cmd->require_subcommand(1);
  auto* v_diag = verify_cmd->add_subcommand("diagonal", "path-algebra description of the diagonal");
  add_common(v_diag, cfg, true, true);
  auto* v_cyc = verify_cmd->add_subcommand("cyclic", "odd cycle basis and ring presentation");
  add_common(v_cyc, cfg, false, true);
  v_cyc->add_option("--n", cfg.n, "cycle length (odd, at least 5)");
  auto* v_poset = verify_cmd->add_subcommand("poset", "graded commutativity of a poset's cohomology");
  add_common(v_poset, cfg, false, true);
  v_poset->add_option("--poset", cfg.poset, "poset file, `circle`, `chainN` or `antichainN`");
  auto* v_series = verify_cmd->add_subcommand("series", "Euler series against the inverse similarity matrix");
  add_common(v_series, cfg, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*homology_cmd) cmd_groups(cfg, false);
    if (*cohomology_cmd) cmd_groups(cfg, true);
    if (*ring_cmd) cmd_ring(cfg);
    if (*recover_cmd) cmd_recover(cfg);
    if (*v_diag) cmd_verify_diagonal(cfg);
    if (*v_cyc) cmd_verify_cyclic(cfg);
    if (*v_poset) cmd_verify_poset(cfg);
    if (*v_series) cmd_verify_series(cfg);
  } catch (const VerificationFailed& f) {
    if (cfg.out.empty()) {
      std::cout << f.output;
    } else {
      std::ofstream(cfg.out) << f.output;
    }
    return 1;
  } catch (const maghom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
