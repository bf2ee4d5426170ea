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

// Per-n tables of every closed-form quantity, optionally alongside
// Monte-Carlo estimates. Every number is taken from a module operation.

#pragma once

#include <array>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ghzpoly/mermin.hpp"
#include "ghzpoly/polytope.hpp"
#include "ghzpoly/serialize.hpp"
#include "ghzpoly/volume.hpp"

namespace ghzpoly {

inline constexpr std::array<VolumeFamily, 4> kRegionFamilies = {
    VolumeFamily::Genuine, VolumeFamily::BisepMinusFbi, VolumeFamily::Fbi,
    VolumeFamily::Mermin};

struct ReportOptions {
  int n_min = 2;
  int n_max = 20;
  bool monte_carlo = false;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
  unsigned threads = 1;  // never affects the output
};

struct ReportRow {
  int n = 0;
  std::array<double, 4> relative{};  // in kRegionFamilies order
  std::array<double, 4> radius{};    // rvr, same order
  std::array<std::optional<VolumeReport>, 4> mc{};
  double ball_radius = 0.0;
  double nu = 0.0;
  double mu = 0.0;
  std::optional<double> dist_mermin_fbi;
  std::string bisep_vertices;
  std::uint64_t bisep_facets = 0;
  std::string fbi_vertices;
  std::uint64_t fbi_facets = 0;
};

inline std::vector<ReportRow> report_rows(const ReportOptions& opt) {
  if (opt.n_min < 2 || opt.n_max < opt.n_min) {
    throw InvalidArgument("report: need 2 <= n_min <= n_max");
  }
  check_qubits(opt.n_max, 2, kMaxClosedFormQubits, "report");
  std::vector<ReportRow> rows;
  for (int n = opt.n_min; n <= opt.n_max; ++n) {
    ReportRow r;
    r.n = n;
    for (std::size_t k = 0; k < kRegionFamilies.size(); ++k) {
      r.relative[k] = rel_vol_exact(kRegionFamilies[k], n);
      r.radius[k] = rvr(kRegionFamilies[k], n);
      if (opt.monte_carlo && n <= kMaxMonteCarloQubits) {
        r.mc[k] = mc_relative_volume(kRegionFamilies[k], n, opt.samples, opt.seed, opt.threads);
      }
    }
    r.ball_radius = inscribed_radius(n);
    r.nu = mermin_threshold(n);
    r.mu = mermin_bound(n);
    if (n >= 3) r.dist_mermin_fbi = dist_mermin_to_fbi(n);
    r.bisep_vertices = vertex_count_string(Family::Bisep, n);
    r.bisep_facets = facet_count(Family::Bisep, n);
    r.fbi_vertices = vertex_count_string(Family::Fbi, n);
    r.fbi_facets = facet_count(Family::Fbi, n);
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace detail {

inline std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace detail

inline Json report_config_json(const ReportOptions& opt) {
  Json c;
  c["n_min"] = opt.n_min;
  c["n_max"] = opt.n_max;
  c["mc"] = opt.monte_carlo;
  c["samples"] = opt.samples;
  c["seed"] = opt.seed;
  c["generator"] = kGeneratorName;
  c["eps_class"] = kClassTol;
  c["eps_psd"] = kPsdTol;
  c["eps_norm"] = kNormTol;
  c["eps_boundary"] = kBoundaryTol;
  c["eps_renorm"] = kRenormTol;
  return c;
}

/// CSV with a leading "# config: {...}" comment line.
inline std::string report_csv(const ReportOptions& opt, const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  os << "# config: " << report_config_json(opt).dump() << '\n';
  os << "n,d,genuine,b_minus_f,fbi,mermin,rvr_genuine,rvr_b_minus_f,rvr_fbi,rvr_mermin,"
        "ball_radius,nu,mu,dist_mermin_fbi,bisep_vertices,bisep_facets,fbi_vertices,"
        "fbi_facets";
  if (opt.monte_carlo) {
    for (auto f : kRegionFamilies) {
      os << ",mc_" << to_string(f) << ",mc_" << to_string(f) << "_stderr";
    }
  }
  os << '\n';
  using detail::fmt_double;
  for (const auto& r : rows) {
    os << r.n << ',' << fmt_double(std::ldexp(1.0, r.n));
    for (double x : r.relative) os << ',' << fmt_double(x);
    for (double x : r.radius) os << ',' << fmt_double(x);
    os << ',' << fmt_double(r.ball_radius) << ',' << fmt_double(r.nu) << ','
       << fmt_double(r.mu) << ','
       << (r.dist_mermin_fbi ? fmt_double(*r.dist_mermin_fbi) : std::string()) << ','
       << r.bisep_vertices << ',' << r.bisep_facets << ',' << r.fbi_vertices << ','
       << r.fbi_facets;
    if (opt.monte_carlo) {
      for (const auto& m : r.mc) {
        if (m) {
          os << ',' << fmt_double(*m->mc_estimate) << ',' << fmt_double(*m->mc_stderr);
        } else {
          os << ",,";
        }
      }
    }
    os << '\n';
  }
  return os.str();
}

inline Json report_json(const ReportOptions& opt, const std::vector<ReportRow>& rows) {
  Json out;
  out["config"] = report_config_json(opt);
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["n"] = r.n;
    for (std::size_t k = 0; k < kRegionFamilies.size(); ++k) {
      const std::string name = to_string(kRegionFamilies[k]);
      j["relative"][name] = r.relative[k];
      j["rvr"][name] = r.radius[k];
      if (r.mc[k]) j["mc"][name] = to_json(*r.mc[k]);
    }
    j["ball_radius"] = r.ball_radius;
    j["nu"] = r.nu;
    j["mu"] = r.mu;
    j["dist_mermin_fbi"] = r.dist_mermin_fbi ? Json(*r.dist_mermin_fbi) : Json(nullptr);
    j["bisep_vertices"] = r.bisep_vertices;
    j["bisep_facets"] = r.bisep_facets;
    j["fbi_vertices"] = r.fbi_vertices;
    j["fbi_facets"] = r.fbi_facets;
    arr.push_back(std::move(j));
  }
  out["rows"] = std::move(arr);
  return out;
}

}  // namespace ghzpoly
