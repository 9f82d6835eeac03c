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

#include "toric_atlas/service.hpp"

#include <httplib.h>

#include "toric_atlas/entangle.hpp"
#include "toric_atlas/errors.hpp"
#include "toric_atlas/render.hpp"
#include "toric_atlas/serialize.hpp"
#include "toric_atlas/toric.hpp"

namespace toric_atlas {
namespace {

ServiceResponse json_response(int status, const Json &body) { return {status, "application/json", body.dump()}; }

ServiceResponse error_response(int status, std::string_view code, std::string_view message) {
  return json_response(status, {{"code", code}, {"message", message}});
}

Json parse_body(std::string_view body) {
  try {
    Json j = Json::parse(body);
    if (!j.is_object()) throw AtlasError("parse", "request body must be a JSON object");
    return j;
  } catch (const Json::exception &e) {
    throw AtlasError("parse", std::string("malformed JSON: ") + e.what());
  }
}

Tolerances request_tolerances(const Json &req, Tolerances tol) {
  if (req.contains("tolerances")) {
    const auto &t = req.at("tolerances");
    tol.norm = t.value("norm", tol.norm);
    tol.mat = t.value("mat", tol.mat);
    tol.geom = t.value("geom", tol.geom);
    tol.zero = t.value("zero", tol.zero);
  }
  tol.validate();
  return tol;
}

Notation request_notation(const Json &req, Notation fallback) {
  return req.contains("notation") ? parse_notation(req.at("notation").get<std::string>()) : fallback;
}

// Codes describing a well-formed request whose content is unacceptable.
bool is_semantic_error(const std::string &code) {
  return code == "unitary" || code == "simplex" || code == "scene" || code == "unsupported" ||
         code == "invalid toric point";
}

constexpr std::string_view kSchema = R"json({
  "complex": "[re, im]",
  "state": "array of complex, length 2, 3 or 4",
  "matrix": "array of rows of complex",
  "tolerances": {"norm": "number", "mat": "number", "geom": "number", "zero": "number"},
  "toric_point": {"convex": "array of number", "phases": "array of number in [0, 2pi)", "defined": "array of bool", "pivot": "integer"},
  "gate": {"name": "string", "radix": "2|3|4", "tags": "array of string", "printed_scalar": "number", "entries": "matrix"},
  "entanglement_report": {"concurrence": "number", "schmidt": "[number, number]", "class": "separable|partial|maximal", "simplex_on_me_segment": "bool", "simplex_on_sep_surface": "bool", "phase_condition": "bool|null"},
  "scene": {"kind": "simplex|torus_fiber", "radix": "2|3|4", "title": "string", "marks": "array of {position, label, style, fiber_phase|null}", "segments": "array of {from, to, style}", "polylines": "array of array of barycentric points", "fiber_base": "array of number|null", "fiber_pivot": "integer", "geometry_mode": "unit|affine"},
  "endpoints": {
    "GET /api/catalog": {"query": {"radix": "2|3|4", "notation": "math|engineering"}, "response": "array of gate"},
    "POST /api/state/step": {"request": {"state": "state", "gate_name": "string", "custom_matrix": "matrix", "notation": "math|engineering", "tolerances": "tolerances", "tol_class": "number"}, "response": {"gate": "string", "new_state": "state", "toric_point": "toric_point", "entanglement_report": "entanglement_report (radix 4 only)"}},
    "POST /api/decompose": {"request": {"state": "state"}, "response": "toric_point"},
    "POST /api/classify": {"request": {"state": "state", "notation": "math|engineering", "tol_class": "number"}, "response": "entanglement_report"},
    "POST /api/render": {"request": {"scene": "scene", "width": "integer", "height": "integer"}, "response": "image/svg+xml"}
  }
})json";

}  // namespace

AtlasService::AtlasService(ServiceOptions options) : options_(std::move(options)) {
  options_.tol.validate();
  for (int radix : {2, 3, 4})
    for (Notation n : {Notation::math, Notation::engineering}) catalogs_[{radix, n}] = toric_atlas::catalog(radix, n);
}

ServiceResponse AtlasService::handle(std::string_view method, std::string_view path,
                                     const std::map<std::string, std::string> &query, std::string_view body) const {
  try {
    if (method == "GET" && path == "/api/catalog") return catalog(query);
    if (method == "GET" && path == "/api/schema") return schema();
    if (method == "POST" && path == "/api/state/step") return step(body);
    if (method == "POST" && path == "/api/decompose") return decompose_state(body);
    if (method == "POST" && path == "/api/classify") return classify_state(body);
    if (method == "POST" && path == "/api/render") return render(body);
    return error_response(404, "not found", std::string(method) + " " + std::string(path));
  } catch (const AtlasError &e) {
    return error_response(is_semantic_error(e.code()) ? 422 : 400, e.code(), e.what());
  } catch (const Json::exception &e) {
    return error_response(400, "parse", e.what());
  } catch (const std::exception &e) {
    return error_response(500, "internal", e.what());
  }
}

ServiceResponse AtlasService::catalog(const std::map<std::string, std::string> &query) const {
  const auto it = query.find("radix");
  if (it == query.end()) return error_response(400, "radix", "query parameter radix is required");
  int radix = 0;
  try {
    std::size_t used = 0;
    radix = std::stoi(it->second, &used);
    if (used != it->second.size()) radix = 0;
  } catch (const std::exception &) {
    radix = 0;
  }
  if (radix < 2 || radix > 4) return error_response(400, "radix", "radix must be 2, 3 or 4");
  const auto nit = query.find("notation");
  const Notation n = nit == query.end() ? options_.default_notation : parse_notation(nit->second);

  Json out = Json::array();
  for (const auto &g : catalogs_.at({radix, n})) out.push_back(to_json(g));
  return json_response(200, out);
}

ServiceResponse AtlasService::step(std::string_view body) const {
  const Json req = parse_body(body);
  const Tolerances tol = request_tolerances(req, options_.tol);
  const Notation n = request_notation(req, options_.default_notation);
  if (!req.contains("state")) throw AtlasError("parse", "missing field: state");
  const CVec state = normalize_input(parse_guard([&] { return cvec_from_json(req.at("state")); }));
  if (state.dim() < 2 || state.dim() > 4) throw AtlasError("shape", "state dimension must be 2, 3 or 4");
  const int radix = static_cast<int>(state.dim());

  GateMatrix gate;
  if (req.contains("custom_matrix")) {
    gate.name = req.value("gate_name", std::string("custom"));
    gate.matrix = parse_guard([&] { return cmat_from_json(req.at("custom_matrix")); });
    if (!gate.matrix.is_square() || gate.matrix.rows() != state.dim()) {
      throw AtlasError("shape", "custom matrix does not match the state dimension");
    }
    if (!is_unitary(gate.matrix, tol)) throw AtlasError("unitary", "custom matrix is not unitary");
    gate.radix = radix;
  } else if (req.contains("gate_name")) {
    const std::string name = req.at("gate_name").get<std::string>();
    const auto &gates = catalogs_.at({radix, n});
    const auto it = std::find_if(gates.begin(), gates.end(), [&](const GateMatrix &g) { return g.name == name; });
    if (it == gates.end()) {
      throw AtlasError("unknown gate", "no radix-" + std::to_string(radix) + " gate named '" + name + "'");
    }
    gate = *it;
  } else {
    throw AtlasError("parse", "one of gate_name or custom_matrix is required");
  }

  const CVec next = apply(gate, state, tol);
  Json out = {{"gate", gate.name}, {"new_state", to_json(next)}, {"toric_point", to_json(decompose(next, tol))}};
  if (radix == 4) {
    const double tol_class = req.value("tol_class", kDefaultClassTolerance);
    out["entanglement_report"] = to_json(classify(next, tol_class, tol, n));
  }
  return json_response(200, out);
}

ServiceResponse AtlasService::decompose_state(std::string_view body) const {
  const Json req = parse_body(body);
  const Tolerances tol = request_tolerances(req, options_.tol);
  const CVec state = normalize_input(parse_guard([&] { return cvec_from_json(req.at("state")); }));
  return json_response(200, to_json(decompose(state, tol)));
}

ServiceResponse AtlasService::classify_state(std::string_view body) const {
  const Json req = parse_body(body);
  const Tolerances tol = request_tolerances(req, options_.tol);
  const Notation n = request_notation(req, options_.default_notation);
  const CVec state = normalize_input(parse_guard([&] { return cvec_from_json(req.at("state")); }));
  const double tol_class = req.value("tol_class", kDefaultClassTolerance);
  return json_response(200, to_json(classify(state, tol_class, tol, n)));
}

ServiceResponse AtlasService::render(std::string_view body) const {
  const Json req = parse_body(body);
  const Json &scene_json = req.contains("scene") ? req.at("scene") : req;
  const FigureScene scene = scene_from_json(scene_json);
  scene.validate(options_.tol);
  const int width = req.value("width", 480), height = req.value("height", 480);
  return {200, "image/svg+xml", to_svg(scene, width, height)};
}

ServiceResponse AtlasService::schema() const { return {200, "application/json", std::string(kSchema)}; }

struct HttpServer::Impl {
  explicit Impl(ServiceOptions options) : service(std::move(options)) {
    auto dispatch = [this](const httplib::Request &req, httplib::Response &res) {
      std::map<std::string, std::string> query;
      for (const auto &[k, v] : req.params) query.emplace(k, v);
      const ServiceResponse out = service.handle(req.method, req.path, query, req.body);
      res.status = out.status;
      res.set_content(out.body, out.content_type);
    };
    server.set_post_routing_handler([this](const httplib::Request &, httplib::Response &res) {
      res.set_header("Access-Control-Allow-Origin", service.options().cors_origin);
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
    });
    server.Get(R"(/api/.*)", dispatch);
    server.Post(R"(/api/.*)", dispatch);
    server.Options(R"(/api/.*)", [](const httplib::Request &, httplib::Response &res) { res.status = 204; });
  }

  AtlasService service;
  httplib::Server server;
};

HttpServer::HttpServer(ServiceOptions options) : impl_(std::make_unique<Impl>(std::move(options))) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::start(const std::string &host, int port) {
  const int bound = port == 0 ? impl_->server.bind_to_any_port(host) : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) return -1;
  worker_ = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return bound;
}

bool HttpServer::listen(const std::string &host, int port) { return impl_->server.listen(host, port); }

void HttpServer::stop() {
  impl_->server.stop();
  if (worker_.joinable()) worker_.join();
}

}  // namespace toric_atlas
