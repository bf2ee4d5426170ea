// Copyright 2026 The ghzpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The ghzpoly command-line front end. run_cli() is kept separate from main()
// so the test suites can drive it with in-memory streams.

#pragma once

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"

#include "ghzpoly/ghzpoly.hpp"
#include "ghzpoly/report.hpp"
#include "ghzpoly/serialize.hpp"

namespace ghzpoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitUnsupported = 3;

inline constexpr std::uint64_t kDefaultSeed = 20260101;
inline constexpr const char* kSeedEnv = "GHZPOLY_SEED";

/// Effective configuration of one invocation.
struct CliConfig {
  std::string subcommand;
  std::string format;  // json | csv | text; empty picks the subcommand default
  int n = 0;
  std::string p;       // inline list or file path
  std::string family;
  std::optional<std::uint64_t> limit;
  bool exact = false;
  bool mc = false;
  bool table = false;
  bool ppt = false;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  int n_min = 2;
  int n_max = 20;
  double boundary_tol = kBoundaryTol;
  std::string pair;
  std::vector<std::string> sigma;
  std::vector<int> bipartition;
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline double parse_entry(const std::string& text, std::size_t k) {
  double x = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, x);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw InvalidArgument("p[" + std::to_string(k) + "]: cannot parse '" + text +
                          "' as a decimal");
  }
  return x;
}

/// An existing file holds one decimal per line; anything else is read as a
/// comma-separated list.
inline std::vector<double> read_probabilities(const std::string& arg) {
  std::vector<std::string> fields;
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw InvalidArgument("cannot open probability file '" + arg + "'");
    std::string line;
    while (std::getline(in, line)) {
      auto t = trim(line);
      if (!t.empty()) fields.push_back(std::move(t));
    }
  } else {
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) fields.push_back(trim(item));
    if (!arg.empty() && arg.back() == ',') fields.emplace_back();
  }
  std::vector<double> p;
  p.reserve(fields.size());
  for (std::size_t k = 0; k < fields.size(); ++k) p.push_back(parse_entry(fields[k], k));
  return p;
}

inline GhzDiagonalState load_state(const CliConfig& c) {
  check_qubits(c.n, 1, kMaxQubits, c.subcommand.c_str());
  return GhzDiagonalState::from_probabilities(c.n, read_probabilities(c.p));
}

inline Json config_json(const CliConfig& c) {
  Json j;
  j["subcommand"] = c.subcommand;
  j["format"] = c.format;
  if (c.subcommand != "report" && !c.table) j["n"] = c.n;
  if (!c.p.empty()) j["p"] = c.p;
  if (!c.family.empty()) j["family"] = c.family;
  if (c.limit) j["limit"] = *c.limit;
  if (c.subcommand == "volume" || c.subcommand == "report") {
    if (c.subcommand == "volume") j["exact"] = c.exact;
    j["mc"] = c.mc;
    if (c.table || c.subcommand == "report") {
      j["n_min"] = c.n_min;
      j["n_max"] = c.n_max;
    }
  }
  if (c.subcommand == "classify") j["ppt"] = c.ppt;
  if (!c.pair.empty()) j["pair"] = c.pair;
  if (!c.sigma.empty()) j["sigma"] = c.sigma;
  if (!c.bipartition.empty()) j["bipartition"] = c.bipartition;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["generator"] = kGeneratorName;
  Json tol;
  tol["norm"] = kNormTol;
  tol["psd"] = kPsdTol;
  tol["class"] = kClassTol;
  tol["boundary"] = c.boundary_tol;
  tol["renormalization"] = kRenormTol;
  j["tolerances"] = std::move(tol);
  return j;
}

/// Flattens JSON into "path: value" lines.
inline void write_text(std::ostream& out, const Json& j, const std::string& path) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) write_text(out, v, path.empty() ? k : path + "." + k);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t k = 0; k < j.size(); ++k) {
      write_text(out, j[k], path + "[" + std::to_string(k) + "]");
    }
  } else {
    out << path << ": " << j.dump() << '\n';
  }
}

inline void emit(std::ostream& out, const CliConfig& c, Json result) {
  Json doc;
  doc["config"] = config_json(c);
  doc["result"] = std::move(result);
  if (c.format == "text") {
    write_text(out, doc, "");
  } else {
    out << doc.dump(2) << '\n';
  }
}

// --- subcommands ------------------------------------------------------------

inline Json run_classify(const CliConfig& c) {
  const auto rho = load_state(c);
  Json j = to_json(classify(rho, c.boundary_tol));
  if (c.ppt) j["ppt_all_bipartitions"] = is_ppt_all_bipartitions(rho);
  return j;
}

inline Json run_extremes(const CliConfig& c) {
  const Family f = parse_family(c.family);
  Json j;
  j["family"] = to_string(f);
  j["n"] = c.n;
  Json vertices = Json::array();
  auto take_all = [&](const std::vector<GhzDiagonalState>& vs) {
    for (const auto& v : vs) {
      if (c.limit && vertices.size() >= *c.limit) break;
      vertices.push_back(to_json(v));
    }
  };
  auto take_stream = [&](auto& stream) {
    while (!c.limit || vertices.size() < *c.limit) {
      auto v = stream.next();
      if (!v) break;
      vertices.push_back(to_json(*v));
    }
  };
  switch (f) {
    case Family::Ghz: take_all(vertices_ghz(c.n)); break;
    case Family::Mermin: take_all(vertices_mermin(c.n)); break;
    case Family::Bisep:
      if (c.limit) {
        BisepVertexStream s(c.n);
        take_stream(s);
      } else {
        take_all(extreme_points_bisep(c.n));
      }
      break;
    case Family::Fbi:
      if (c.limit) {
        FbiVertexStream s(c.n);
        take_stream(s);
      } else {
        take_all(extreme_points_fbi(c.n));
      }
      break;
  }
  j["count"] = vertices.size();
  j["total"] = vertex_count_string(f, c.n);
  j["vertices"] = std::move(vertices);
  return j;
}

inline Json run_facets(const CliConfig& c) {
  const Family f = parse_family(c.family);
  Json j;
  j["family"] = to_string(f);
  j["n"] = c.n;
  Json facets = Json::array();
  auto room = [&] { return !c.limit || facets.size() < *c.limit; };
  auto take_all = [&](const std::vector<AffineFacet>& fs) {
    for (const auto& x : fs) {
      if (!room()) break;
      facets.push_back(to_json(x));
    }
  };
  switch (f) {
    case Family::Ghz: take_all(facets_ghz(c.n)); break;
    case Family::Bisep: take_all(facets_bisep(c.n)); break;
    case Family::Mermin: take_all(facets_mermin(c.n)); break;
    case Family::Fbi:
      if (c.limit) {
        for_each_fbi_facet(c.n, [&](const AffineFacet& x) {
          if (!room()) return false;
          facets.push_back(to_json(x));
          return true;
        });
      } else {
        take_all(facets_fbi(c.n));
      }
      break;
  }
  j["count"] = facets.size();
  j["total"] = facet_count(f, c.n);
  j["facets"] = std::move(facets);
  return j;
}

inline ReportOptions report_options(const CliConfig& c) {
  ReportOptions o;
  o.n_min = c.n_min;
  o.n_max = c.n_max;
  o.monte_carlo = c.mc;
  o.samples = c.samples;
  o.seed = c.seed;
  o.threads = c.threads;
  return o;
}

inline Json run_volume(const CliConfig& c) {
  const VolumeFamily f = parse_volume_family(c.family);
  if (c.mc) return to_json(mc_relative_volume(f, c.n, c.samples, c.seed, c.threads));
  return to_json(exact_volume_report(f, c.n));
}

inline Json run_mermin(const CliConfig& c) {
  return to_json(violates_mermin(load_state(c), c.boundary_tol));
}

inline Json run_ball(const CliConfig& c) {
  const Family f = parse_family(c.family);
  const Ball b = inscribed_ball(f, c.n);
  Json j;
  j["family"] = to_string(f);
  j["n"] = c.n;
  j["center"] = to_json(b.center);
  j["radius"] = b.radius;
  j["min_facet_distance"] =
      c.n <= kMaxFbiFacetListQubits ? Json(min_facet_distance(b.center, f)) : Json(nullptr);
  return j;
}

inline Json run_certify(const CliConfig& c) {
  if (!c.pair.empty()) {
    if (!c.sigma.empty() || !c.bipartition.empty()) {
      throw InvalidArgument("certify: give either --pair or --sigma with --bipartition");
    }
    const auto comma = c.pair.find(',');
    if (comma == std::string::npos) {
      throw InvalidArgument("certify: --pair expects two indices 'i,j', got '" + c.pair + "'");
    }
    const auto i = BitIndex::parse(trim(std::string_view(c.pair).substr(0, comma)));
    const auto j = BitIndex::parse(trim(std::string_view(c.pair).substr(comma + 1)));
    if (i.size() != c.n || j.size() != c.n) {
      throw InvalidArgument("certify: --pair indices must have " + std::to_string(c.n) +
                            " bits");
    }
    return to_json(certify_midpoint(i, j));
  }
  if (c.sigma.empty() || c.bipartition.empty()) {
    throw InvalidArgument("certify: give either --pair or --sigma with --bipartition");
  }
  std::vector<BitIndex> members;
  members.reserve(c.sigma.size());
  for (const auto& s : c.sigma) members.push_back(BitIndex::parse(trim(s)));
  const auto sigma = IndexSelection::from_members(c.n, std::move(members));
  const auto cut = BipartitionMask::from_positions(c.n, c.bipartition);
  return to_json(cube_vertex_decomposition(sigma, cut));
}

inline void run_report(const CliConfig& c, std::ostream& out) {
  const auto opt = report_options(c);
  const auto rows = report_rows(opt);
  if (c.format == "csv") {
    out << report_csv(opt, rows);
    return;
  }
  Json doc = report_json(opt, rows);
  Json result = std::move(doc["rows"]);
  emit(out, c, std::move(result));
}

inline void dispatch(const CliConfig& c, std::ostream& out) {
  const std::string& s = c.subcommand;
  const bool tabular = s == "report" || (s == "volume" && c.table);
  if (c.format == "csv" && !tabular) {
    throw InvalidArgument(s + ": csv output is available for report and volume --table only");
  }
  if (tabular) return run_report(c, out);
  Json result;
  if (s == "classify") result = run_classify(c);
  else if (s == "extremes") result = run_extremes(c);
  else if (s == "facets") result = run_facets(c);
  else if (s == "volume") result = run_volume(c);
  else if (s == "mermin") result = run_mermin(c);
  else if (s == "ball") result = run_ball(c);
  else if (s == "certify") result = run_certify(c);
  else throw InvalidArgument("unknown subcommand '" + s + "'");
  emit(out, c, std::move(result));
}

inline std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnv);
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  std::uint64_t v = 0;
  const std::string_view text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument(std::string(kSeedEnv) + ": not an unsigned integer: '" + env + "'");
  }
  return v;
}

}  // namespace detail

/// Parses argv, runs one subcommand and returns the process exit status.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig c;
  try {
    c.seed = detail::default_seed();
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  CLI::App app{"Polytope geometry of GHZ-diagonal states", "ghzpoly"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", c.format, "Output format (default: csv for report, json otherwise)")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", c.seed, std::string("Monte-Carlo seed (default from ") + kSeedEnv + ")");
  app.add_option("--boundary-tol", c.boundary_tol, "Band that raises the boundary flag")
      ->check(CLI::NonNegativeNumber);

  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "Number of qubits")->required();
  };
  auto add_p = [&](CLI::App* sub) {
    sub->add_option("--p", c.p, "Comma-separated probabilities, or a file with one per line")
        ->required();
  };
  const std::vector<std::string> families{"ghz", "bisep", "fbi", "mermin"};

  auto* classify_cmd = app.add_subcommand("classify", "Classify a GHZ-diagonal state");
  add_n(classify_cmd);
  add_p(classify_cmd);
  classify_cmd->add_flag("--ppt", c.ppt, "Also run the partial-transpose check");

  auto* extremes_cmd = app.add_subcommand("extremes", "List extreme points of a polytope");
  extremes_cmd->add_option("--family", c.family)->required()->check(CLI::IsMember(families));
  add_n(extremes_cmd);
  extremes_cmd->add_option("--limit", c.limit, "Stop after this many vertices");

  auto* facets_cmd = app.add_subcommand("facets", "List facet inequalities of a polytope");
  facets_cmd->add_option("--family", c.family)->required()->check(CLI::IsMember(families));
  add_n(facets_cmd);
  facets_cmd->add_option("--limit", c.limit, "Stop after this many facets");

  auto* volume_cmd = app.add_subcommand("volume", "Relative volume of a region");
  volume_cmd->add_option("--family", c.family,
                         "genuine, bisep_minus_fbi, fbi, mermin or ghz");
  volume_cmd->add_option("--n", c.n, "Number of qubits");
  volume_cmd->add_flag("--exact", c.exact, "Closed form (the default)");
  volume_cmd->add_flag("--mc", c.mc, "Monte-Carlo estimate next to the closed form");
  volume_cmd->add_option("--samples", c.samples, "Monte-Carlo sample count");
  volume_cmd->add_option("--threads", c.threads, "Worker threads (does not change results)")
      ->check(CLI::PositiveNumber);
  volume_cmd->add_flag("--table", c.table, "Table over --n-min..--n-max instead");
  volume_cmd->add_option("--n-min", c.n_min);
  volume_cmd->add_option("--n-max", c.n_max);

  auto* mermin_cmd = app.add_subcommand("mermin", "Mermin expectation value and verdict");
  add_n(mermin_cmd);
  add_p(mermin_cmd);

  auto* ball_cmd = app.add_subcommand("ball", "Largest inscribed ball");
  ball_cmd->add_option("--family", c.family)
      ->required()
      ->check(CLI::IsMember({"ghz", "bisep", "fbi"}));
  add_n(ball_cmd);

  auto* certify_cmd = app.add_subcommand("certify", "Separability certificate of an extreme point");
  add_n(certify_cmd);
  certify_cmd->add_option("--pair", c.pair, "Midpoint m_{i,j} as 'i,j'");
  certify_cmd->add_option("--sigma", c.sigma, "Cube vertex: one index per complementary pair")
      ->delimiter(',');
  certify_cmd->add_option("--bipartition", c.bipartition, "Qubit positions of S, 1-based")
      ->delimiter(',');

  auto* report_cmd = app.add_subcommand("report", "Per-n table of every closed-form quantity");
  report_cmd->add_option("--n-min", c.n_min);
  report_cmd->add_option("--n-max", c.n_max);
  report_cmd->add_flag("--mc", c.mc, "Add Monte-Carlo columns for n <= 6");
  report_cmd->add_option("--samples", c.samples, "Monte-Carlo sample count");
  report_cmd->add_option("--threads", c.threads, "Worker threads (does not change results)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  c.subcommand = app.get_subcommands().front()->get_name();
  if (c.format.empty()) {
    const bool tabular = c.subcommand == "report" || (c.subcommand == "volume" && c.table);
    c.format = tabular ? "csv" : "json";
  }
  if (c.subcommand == "volume" && !c.table) {
    if (c.family.empty() || c.n == 0) {
      err << "error: volume: --family and --n are required unless --table is given\n";
      return kExitInvalid;
    }
    if (!c.mc) c.exact = true;
  }

  try {
    std::ostringstream buffer;
    detail::dispatch(c, buffer);
    out << buffer.str();
    return kExitOk;
  } catch (const UnsupportedSize& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace ghzpoly::cli
