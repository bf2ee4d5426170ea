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

// JSON forms of the library's result types (nlohmann::json).

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ghzpoly/classification.hpp"
#include "ghzpoly/decomposition.hpp"
#include "ghzpoly/ghz_state.hpp"
#include "ghzpoly/mermin.hpp"
#include "ghzpoly/polytope.hpp"
#include "ghzpoly/volume.hpp"

namespace ghzpoly {

using Json = nlohmann::ordered_json;

inline Json to_json(const GhzDiagonalState& s) { return Json(s.vector()); }

inline Json to_json(const DensityMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.entries.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.entries.cols(); ++c) row.push_back(m.entries(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// {biseparable, fully_biseparable, gm_concurrence, witness, boundary, ...}.
/// witness is the violating index (genuine states), the violating pair
/// [i, j] with |z_j| > a_i (biseparable but not fully), or null.
inline Json to_json(const ClassificationResult& r) {
  Json witness = nullptr;
  if (r.bisep_witness) {
    witness = r.bisep_witness->to_string();
  } else if (r.fbi_witness) {
    witness = Json::array({r.fbi_witness->first.to_string(), r.fbi_witness->second.to_string()});
  }
  Json j;
  j["biseparable"] = r.is_biseparable;
  j["fully_biseparable"] = r.is_fully_biseparable;
  j["gm_concurrence"] = r.gm_concurrence;
  j["witness"] = witness;
  j["boundary"] = r.boundary;
  j["region"] = to_string(r.region());
  j["bisep_margin"] = r.bisep_margin;
  j["fbi_margin"] = r.fbi_margin;
  return j;
}

inline Json to_json(const MerminVerdict& v) {
  Json j;
  j["expectation"] = v.expectation;
  j["bound"] = v.bound;
  j["threshold"] = v.threshold;
  j["violates"] = v.violates;
  j["boundary"] = v.boundary;
  return j;
}

inline Json to_json(const AffineFacet& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms) terms.push_back(Json::array({t.index, t.coeff}));
  Json j;
  j["label"] = f.label;
  j["terms"] = std::move(terms);
  j["sense"] = f.sense == Sense::GreaterEqual ? ">=" : "<=";
  j["offset"] = f.offset;
  return j;
}

inline Json to_json(const VolumeReport& r) {
  Json j;
  j["n"] = r.n;
  j["family"] = to_string(r.family);
  j["exact"] = r.exact;
  j["absolute"] = r.absolute;
  j["log_absolute"] = log_vol_exact(r.family, r.n);
  j["mc_estimate"] = r.mc_estimate ? Json(*r.mc_estimate) : Json(nullptr);
  j["mc_stderr"] = r.mc_stderr ? Json(*r.mc_stderr) : Json(nullptr);
  j["mc_consistent"] = r.mc_estimate ? Json(r.mc_consistent()) : Json(nullptr);
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["generator"] = r.generator;
  return j;
}

inline Json to_json(const BipartitionMask& s) {
  Json j;
  j["S"] = s.positions();
  j["T"] = s.complement().positions();
  j["text"] = s.to_string();
  return j;
}

inline Json to_json(const SeparabilityCertificate& c) {
  Json comps = Json::array();
  for (const auto& x : c.components) {
    Json cj;
    cj["weight"] = x.weight;
    cj["pair"] = Json::array({x.first.to_string(), x.second.to_string()});
    cj["state"] = to_json(x.state);
    cj["bipartition"] = x.bipartition ? to_json(*x.bipartition) : Json(nullptr);
    cj["min_pt_eigenvalue"] = x.min_pt_eigenvalue;
    comps.push_back(std::move(cj));
  }
  Json j;
  j["kind"] = to_string(c.kind);
  j["state"] = to_json(c.state);
  j["bipartition"] = c.bipartition ? to_json(*c.bipartition) : Json(nullptr);
  j["components"] = std::move(comps);
  j["verified"] = c.verified();
  return j;
}

}  // namespace ghzpoly
