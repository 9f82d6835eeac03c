// Copyright 2026 The Toric Atlas Authors
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

/**
 * @file serialize.hpp
 * JSON schemas shared by the CLI and the HTTP service, plus the
 * comma-separated text form of states.
 *
 * Complex numbers are [re, im] pairs; vectors are arrays of pairs; matrices
 * are arrays of rows. Parsing failures surface as AtlasError("parse").
 */
#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "toric_atlas/entangle.hpp"
#include "toric_atlas/errors.hpp"
#include "toric_atlas/gates.hpp"
#include "toric_atlas/group.hpp"
#include "toric_atlas/linalg.hpp"
#include "toric_atlas/render.hpp"
#include "toric_atlas/toric.hpp"

namespace toric_atlas {

using Json = nlohmann::json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json &j);

Json to_json(const CVec &v);
Json to_json(const CMat &m);
Json to_json(const SimplexPoint &p);
Json to_json(const ToricPoint &p);
Json to_json(const OrbitGram &g);
Json to_json(const RiemannPoint &p);
Json to_json(const GateMatrix &g);
Json to_json(const ChrestensonReport &r);
Json to_json(const Eq1Report &r);
Json to_json(const EntanglementReport &r);
Json to_json(const CayleyGraph &g);
Json to_json(const SeparableSearch &s);
Json to_json(const FigureScene &s);
Json to_json(const IntMatrix &m);

CVec cvec_from_json(const Json &j);
CMat cmat_from_json(const Json &j);
SimplexPoint simplex_point_from_json(const Json &j);
ToricPoint toric_point_from_json(const Json &j);
FigureScene scene_from_json(const Json &j);

/// Parses "re,im,re,im,...". Throws AtlasError("parse").
CVec parse_state(std::string_view text);
/// Parses "x0,x1,...". Throws AtlasError("parse").
std::vector<double> parse_reals(std::string_view text);

/// Rescales a user-supplied state whose norm is within `slack` of 1 (decimal
/// input rarely meets the library tolerance). Throws AtlasError("norm").
inline constexpr double kInputNormSlack = 1e-6;
CVec normalize_input(const CVec &state, double slack = kInputNormSlack);

/// Runs `f`, translating nlohmann exceptions into AtlasError("parse").
template <typename F>
auto parse_guard(F &&f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception &e) {
    throw AtlasError("parse", e.what());
  }
}

}  // namespace toric_atlas
