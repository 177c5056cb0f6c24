// Copyright 2026 The LayerScope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. run_cli() takes the arguments after the program
// name and writes to the given streams, so tests can drive it in-process.
//
// Exit status: 0 success, 1 usage or input error, 2 vertex cap exceeded,
// 3 verification mismatch.

#ifndef LAYERSCOPE_CLI_HPP_
#define LAYERSCOPE_CLI_HPP_

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "layerscope/alphabet_graph.hpp"
#include "layerscope/class_partition.hpp"
#include "layerscope/error.hpp"
#include "layerscope/layer_algebra.hpp"
#include "layerscope/oracle.hpp"
#include "layerscope/poly_rational.hpp"
#include "layerscope/probabilities.hpp"

namespace layerscope {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCap = 2;
inline constexpr int kExitMismatch = 3;

enum class OutputFormat { kTable, kJson, kCsv };

struct CommandConfig {
  std::string subcommand;
  std::optional<Family> family;
  std::optional<int> d;
  std::optional<int> D;
  std::optional<std::string> vertex;
  std::optional<std::string> w;
  std::optional<std::string> pattern;
  std::optional<int> i;
  std::optional<int> j;
  std::optional<BigRational> deflect_prob;
  OutputFormat format = OutputFormat::kTable;
  bool symbolic = false;
  std::optional<std::uint64_t> monte_carlo;
  std::uint64_t seed = 1;
  std::uint64_t cap = kDefaultVertexCap;
  std::optional<TransitionModel> model;
};

namespace cli_detail {

inline Error usage(const std::string& what) { return Error(ErrorCode::kInvalidParams, what); }

inline Family need_family(const CommandConfig& c) {
  if (!c.family) throw usage("--family is required");
  return *c.family;
}

inline int need_diameter(const CommandConfig& c) {
  if (!c.D) throw usage("--D is required");
  return *c.D;
}

inline int need_degree(const CommandConfig& c) {
  if (!c.d) throw usage("--d is required for this command");
  return *c.d;
}

inline std::string graph_name(Family f, std::optional<int> d, int D) {
  return std::string(1, family_tag(f)) + "(" + (d ? std::to_string(*d) : std::string("d")) + "," +
         std::to_string(D) + ")";
}

// Inclusive index range, narrowed to a single value when given.
inline std::pair<int, int> index_range(std::optional<int> pick, int lo, int hi, const char* name) {
  if (!pick) return {lo, hi};
  if (*pick < lo || *pick > hi) {
    throw Error(ErrorCode::kInvalidRange, std::string(name) + " must lie in [" + std::to_string(lo) + ", " +
                                              std::to_string(hi) + "]");
  }
  return {*pick, *pick};
}

inline std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

inline GraphParams graph_params(const CommandConfig& c) {
  const Family f = need_family(c);
  const int D = need_diameter(c);
  if (c.symbolic && c.d) throw usage("--symbolic cannot be combined with --d");
  return c.d ? GraphParams::concrete(f, *c.d, D) : GraphParams::symbolic(f, D);
}

// The vertex named by --vertex or --class.
inline Vertex selected_vertex(const CommandConfig& c, const GraphParams& params) {
  if (c.vertex && c.pattern) throw usage("give either --vertex or --class, not both");
  if (c.vertex) return parse_vertex(params, *c.vertex);
  if (c.pattern) {
    const VertexClass vc = class_of(params.family(), parse_pattern(params.family(), *c.pattern));
    if (static_cast<int>(vc.pattern.code.size()) != params.diameter()) {
      throw Error(ErrorCode::kLengthMismatch, "pattern length differs from D");
    }
    return representative(vc, params);
  }
  throw usage("--vertex or --class is required");
}

inline void cmd_layers(const CommandConfig& c, std::ostream& out) {
  const GraphParams params = graph_params(c);
  const Vertex v = selected_vertex(c, params);
  const auto [lo, hi] = index_range(c.i, 0, params.diameter(), "i");
  const auto alphabet = params.alphabet_size();
  nlohmann::json rows = nlohmann::json::array();
  if (c.format == OutputFormat::kCsv) out << "i,layer" << (c.d ? ",value_at_d" : "") << "\n";
  if (c.format == OutputFormat::kTable) {
    out << "# " << graph_name(params.family(), c.d, params.diameter()) << " vertex "
        << format_vertex(v, alphabet) << "\n";
  }
  for (int i = lo; i <= hi; ++i) {
    const auto layer = layer_star_poly(params, v, i);
    const std::string text = format_layer(layer);
    switch (c.format) {
      case OutputFormat::kTable:
        out << i << "\t" << text;
        if (c.d) out << "\t" << layer.eval(*c.d).str();
        out << "\n";
        break;
      case OutputFormat::kCsv:
        out << i << "," << csv_quote(text);
        if (c.d) out << "," << layer.eval(*c.d).str();
        out << "\n";
        break;
      case OutputFormat::kJson: {
        nlohmann::json row{{"i", i}, {"layer", text}, {"coeffs", poly_to_json(layer.to_poly())}};
        if (c.d) row["value_at_d"] = layer.eval(*c.d).str();
        rows.push_back(std::move(row));
        break;
      }
    }
  }
  if (c.format == OutputFormat::kJson) {
    out << nlohmann::json{{"graph", graph_name(params.family(), c.d, params.diameter())},
                          {"vertex", format_vertex(v, alphabet)},
                          {"layers", rows}}
               .dump(2)
        << "\n";
  }
}

inline void print_table(const ProbabilityTable& t, const CommandConfig& c, const std::string& label,
                        std::ostream& out) {
  if (c.format == OutputFormat::kCsv) {
    out << table_to_csv(t);
    return;
  }
  if (c.format == OutputFormat::kJson) {
    out << table_to_json(t).dump(2) << "\n";
    return;
  }
  out << "# " << label << " " << graph_name(t.family, c.d, t.D) << ", valid for " << t.regime.tag();
  if (!t.transition.empty()) out << ", " << model_name(t.model) << " model";
  out << "\n";
  auto value = [&](const RationalFunction& f) {
    return t.regime.is_concrete() ? "\t" + to_string(rf_eval(f, t.regime.d)) : std::string();
  };
  for (const auto& [i, f] : t.input) out << i << "\t" << rf_format(f) << value(f) << "\n";
  for (const auto& [ij, f] : t.transition) {
    out << ij.first << "\t" << ij.second << "\t" << rf_format(f) << value(f) << "\n";
  }
}

inline void cmd_pin(const CommandConfig& c, std::ostream& out) {
  const Family f = need_family(c);
  const int D = need_diameter(c);
  if (c.symbolic && c.d) throw usage("--symbolic cannot be combined with --d");
  const auto [lo, hi] = index_range(c.i, 1, D, "i");
  ProbabilityTable t{f, D, c.d ? Regime::concrete(*c.d) : Regime::all_d(), TransitionModel::kFactorized, {}, {}};
  for (int i = lo; i <= hi; ++i) t.input[i] = p_in(f, D, i);
  print_table(t, c, "P_in", out);
}

inline void cmd_pt(const CommandConfig& c, std::ostream& out) {
  const Family f = need_family(c);
  const int D = need_diameter(c);
  if (c.symbolic && c.d) throw usage("--symbolic cannot be combined with --d");
  const Regime regime = c.d ? Regime::concrete(*c.d) : Regime::generic();
  const TransitionModel model = c.model.value_or(TransitionModel::kFactorized);
  const auto [ilo, ihi] = index_range(c.i, 1, D, "i");
  if (c.j && c.i && *c.j < *c.i) throw Error(ErrorCode::kInvalidRange, "need i <= j");
  ProbabilityTable t{f, D, regime, model, {}, {}};
  for (int i = ilo; i <= ihi; ++i) {
    const auto [jlo, jhi] = index_range(c.j, i, D, "j");
    if (jlo > jhi) continue;
    const auto row = p_t_row(f, D, i, regime, model);
    for (int j = jlo; j <= jhi; ++j) t.transition[{i, j}] = row[j - i];
  }
  print_table(t, c, "P_t", out);
}

inline void cmd_meandist(const CommandConfig& c, std::ostream& out) {
  const Family f = need_family(c);
  const int D = need_diameter(c);
  const RationalFunction m = mean_distance(f, D);
  switch (c.format) {
    case OutputFormat::kTable:
      out << rf_format(m);
      if (c.d) out << "\t" << to_string(rf_eval(m, *c.d));
      out << "\n";
      break;
    case OutputFormat::kCsv:
      out << "formula" << (c.d ? ",value_at_d" : "") << "\n" << csv_quote(rf_format(m));
      if (c.d) out << "," << to_string(rf_eval(m, *c.d));
      out << "\n";
      break;
    case OutputFormat::kJson: {
      nlohmann::json j{{"formula", rf_format(m)}, {"value", rf_to_json(m)}};
      if (c.d) j["value_at_d"] = to_string(rf_eval(m, *c.d));
      out << j.dump(2) << "\n";
      break;
    }
  }
}

inline void cmd_classes(const CommandConfig& c, std::ostream& out) {
  const auto classes = enumerate_classes(need_family(c), need_diameter(c));
  switch (c.format) {
    case OutputFormat::kTable:
      for (const auto& vc : classes) {
        out << format_pattern(vc.pattern) << "\t" << vc.pattern.s << "\t" << poly_format(vc.cardinality);
        if (c.d) out << "\t" << vc.cardinality.eval(*c.d).str();
        out << "\n";
      }
      break;
    case OutputFormat::kCsv:
      out << classes_to_csv(classes);
      break;
    case OutputFormat::kJson:
      out << classes_to_json(classes).dump(2) << "\n";
      break;
  }
}

inline void cmd_intersect(const CommandConfig& c, std::ostream& out) {
  const GraphParams params = graph_params(c);
  const Vertex v = selected_vertex(c, params);
  std::vector<Vertex> targets;
  if (c.w) {
    targets.push_back(parse_vertex(params, *c.w));
  } else if (params.is_symbolic()) {
    throw usage("--w is required without --d");
  } else {
    targets = successors(params, v);
  }
  const auto [lo, hi] = index_range(c.i, 1, params.diameter(), "i");
  const auto alphabet = params.alphabet_size();
  nlohmann::json all = nlohmann::json::array();
  if (c.format == OutputFormat::kCsv) out << "v,w,i,case,j0,back,forward\n";
  for (const auto& w : targets) {
    for (int i = lo; i <= hi; ++i) {
      const auto r = intersection_report(params, v, w, i);
      const std::string back = r.back ? format_layer(*r.back) : "-";
      const std::string fwd = r.forward ? format_layer(*r.forward) : "-";
      const std::string j0 = r.forward_j ? std::to_string(*r.forward_j) : "-";
      switch (c.format) {
        case OutputFormat::kTable:
          out << format_vertex(v, alphabet) << " -> " << format_vertex(w, alphabet) << "\ti=" << i << "\t"
              << intersection_case_name(r.kind) << "\tback=" << back << "\tj0=" << j0 << "\tforward=" << fwd
              << "\n";
          break;
        case OutputFormat::kCsv:
          out << format_vertex(v, alphabet) << "," << format_vertex(w, alphabet) << "," << i << ","
              << intersection_case_name(r.kind) << "," << j0 << "," << csv_quote(back) << "," << csv_quote(fwd)
              << "\n";
          break;
        case OutputFormat::kJson:
          all.push_back(to_json(r, alphabet));
          break;
      }
    }
  }
  if (c.format == OutputFormat::kJson) out << all.dump(2) << "\n";
}

inline int cmd_verify(const CommandConfig& c, std::ostream& out) {
  std::vector<Family> families = c.family ? std::vector<Family>{*c.family}
                                          : std::vector<Family>{Family::kDeBruijn, Family::kKautz};
  std::vector<int> degrees = c.d ? std::vector<int>{*c.d} : std::vector<int>{2, 3, 4};
  std::vector<int> diameters = c.D ? std::vector<int>{*c.D} : std::vector<int>{2, 3, 4, 5};
  VerifyOptions options;
  options.cap = c.cap;
  const VerifySummary s = verify_grid(families, degrees, diameters, options);
  if (c.format == OutputFormat::kJson) {
    out << to_json_lines(s);
    out << nlohmann::json{{"graphs", s.graphs}, {"checks", s.checks}, {"mismatches", s.mismatches}}.dump()
        << "\n";
  } else {
    for (const auto& r : s.reports) {
      out << "MISMATCH " << r.quantity << " formula=" << r.formula << " oracle=" << r.oracle << " "
          << r.context.dump() << "\n";
    }
    out << "verified " << s.graphs.size() << " graphs, " << s.checks << " checks, " << s.mismatches
        << " mismatches\n";
  }
  return s.ok() ? kExitOk : kExitMismatch;
}

inline std::string decimal(const BigRational& x) {
  std::ostringstream os;
  os << std::setprecision(10) << to_double(x);
  return os.str();
}

inline void cmd_markov(const CommandConfig& c, std::ostream& out) {
  if (c.symbolic) throw usage("markov needs a concrete --d");
  const Family f = need_family(c);
  const int d = need_degree(c);
  const int D = need_diameter(c);
  if (!c.deflect_prob) throw usage("-p is required");
  const TransitionModel model = c.model.value_or(TransitionModel::kJoint);
  const DeflectionChain chain = build_chain(f, d, D, *c.deflect_prob, model);

  std::optional<std::vector<BigRational>> hops;
  std::optional<BigRational> expected;
  try {
    hops = expected_hops_by_state(chain);
    expected = expected_hops(chain);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDiverges) throw;
  }
  std::optional<MonteCarloResult> mc;
  if (c.monte_carlo && expected) {
    mc = simulate_packet_walks(build_explicit(GraphParams::concrete(f, d, D), c.cap), *c.deflect_prob,
                               *c.monte_carlo, c.seed);
  }

  if (c.format == OutputFormat::kJson) {
    nlohmann::json j;
    j["graph"] = graph_name(f, d, D);
    j["p"] = to_string(*c.deflect_prob);
    j["model"] = std::string(model_name(model));
    nlohmann::json m = nlohmann::json::array();
    for (const auto& row : chain.matrix) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& x : row) r.push_back(to_string(x));
      m.push_back(r);
    }
    j["matrix"] = m;
    if (expected) {
      j["expected_hops"] = to_string(*expected);
      nlohmann::json per = nlohmann::json::object();
      for (int i = 1; i <= D; ++i) per[std::to_string(i)] = to_string((*hops)[i]);
      j["expected_hops_by_state"] = per;
    } else {
      j["expected_hops"] = "diverges";
    }
    if (mc) {
      j["monte_carlo"] = {{"packets", mc->packets}, {"seed", c.seed}, {"mean", mc->mean},
                          {"std_error", mc->std_error}};
    }
    out << j.dump(2) << "\n";
    return;
  }
  if (c.format == OutputFormat::kCsv) {
    out << "from,to,probability\n";
    for (int i = 0; i <= D; ++i) {
      for (int j = 0; j <= D; ++j) {
        if (chain.matrix[i][j] != 0) out << i << "," << j << "," << to_string(chain.matrix[i][j]) << "\n";
      }
    }
    out << "start,expected_hops\n";
    if (expected) {
      out << "P_in," << to_string(*expected) << "\n";
      for (int i = 1; i <= D; ++i) out << i << "," << to_string((*hops)[i]) << "\n";
    } else {
      out << "P_in,diverges\n";
    }
    return;
  }
  out << "# " << graph_name(f, d, D) << " deflection chain, p = " << to_string(*c.deflect_prob) << ", "
      << model_name(model) << " model\n";
  for (int i = 0; i <= D; ++i) {
    out << i << ":";
    for (int j = 0; j <= D; ++j) out << "\t" << to_string(chain.matrix[i][j]);
    out << "\n";
  }
  if (!expected) {
    out << "expected hops: diverges\n";
    return;
  }
  out << "expected hops: " << to_string(*expected) << " (" << decimal(*expected) << ")\n";
  for (int i = 1; i <= D; ++i) {
    out << "from distance " << i << ": " << to_string((*hops)[i]) << " (" << decimal((*hops)[i]) << ")\n";
  }
  if (mc) {
    const double gap = std::abs(mc->mean - to_double(*expected));
    out << "monte carlo: " << mc->packets << " packets, seed " << c.seed << ", mean " << mc->mean
        << ", std error " << mc->std_error << ", |gap| / std error " << (mc->std_error > 0 ? gap / mc->std_error : 0.0)
        << "\n";
  }
}

inline std::uint64_t default_cap() {
  if (const char* env = std::getenv("LAYERSCOPE_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::kParse, "LAYERSCOPE_CAP must be a nonnegative integer");
  }
  return kDefaultVertexCap;
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact distance-layer and deflection-routing analysis of De Bruijn and Kautz digraphs",
               "layerscope"};
  app.require_subcommand(1);
  app.fallthrough();

  CommandConfig c;
  std::string family, format = "table", prob, model;
  std::optional<std::uint64_t> cap;
  app.add_option("-f,--family", family, "Graph family, B or K");
  app.add_option("-d,--d", c.d, "Degree d (concrete mode)")->check(CLI::Range(2, 1 << 20));
  app.add_option("-D,--D", c.D, "Diameter D")->check(CLI::Range(1, 64));
  app.add_option("--vertex", c.vertex, "Vertex, e.g. 0102 or 0.1.10.2");
  app.add_option("--w", c.w, "Successor vertex for intersect");
  app.add_option("--class", c.pattern, "Class pattern, e.g. 0102");
  app.add_option("-i", c.i, "Distance i");
  app.add_option("-j", c.j, "Distance j");
  app.add_option("-p", prob, "Deflection probability a/b");
  app.add_option("--format", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_flag("--symbolic", c.symbolic, "Symbolic d (d >= 3 regime for transitions)");
  app.add_option("--monte-carlo", c.monte_carlo, "Packets for the simulation cross-check");
  app.add_option("--seed", c.seed, "Simulation seed");
  app.add_option("--cap", cap, "Vertex cap for explicit graphs");
  app.add_option("--model", model, "Transition model: factorized or joint")
      ->check(CLI::IsMember({"factorized", "joint"}));

  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"layers", "Layer polynomials |S_i*(v)|"},
           {"pin", "Input probabilities P_in(i)"},
           {"pt", "Transition probabilities P_t(i,j)"},
           {"meandist", "Mean distance"},
           {"verify", "Compare every formula with the brute-force oracle"},
           {"markov", "Deflection chain and expected hops"},
           {"classes", "Vertex classes and their sizes"},
           {"intersect", "How S_i*(v) splits across the layers of a successor"}}) {
    app.add_subcommand(name, help);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    c.subcommand = app.get_subcommands().front()->get_name();
    if (!family.empty()) c.family = parse_family(family);
    c.format = format == "json" ? OutputFormat::kJson : format == "csv" ? OutputFormat::kCsv : OutputFormat::kTable;
    if (!prob.empty()) c.deflect_prob = parse_rational(prob);
    if (!model.empty()) c.model = parse_model(model);
    c.cap = cap ? *cap : cli_detail::default_cap();

    if (c.subcommand == "layers") cli_detail::cmd_layers(c, out);
    else if (c.subcommand == "pin") cli_detail::cmd_pin(c, out);
    else if (c.subcommand == "pt") cli_detail::cmd_pt(c, out);
    else if (c.subcommand == "meandist") cli_detail::cmd_meandist(c, out);
    else if (c.subcommand == "classes") cli_detail::cmd_classes(c, out);
    else if (c.subcommand == "intersect") cli_detail::cmd_intersect(c, out);
    else if (c.subcommand == "markov") cli_detail::cmd_markov(c, out);
    else if (c.subcommand == "verify") return cli_detail::cmd_verify(c, out);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kTooLarge ? kExitCap : kExitUsage;
  }
}

}  // namespace layerscope

#endif  // LAYERSCOPE_CLI_HPP_
