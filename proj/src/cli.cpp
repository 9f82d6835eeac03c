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

#include "toric_atlas/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "toric_atlas/entangle.hpp"
#include "toric_atlas/errors.hpp"
#include "toric_atlas/gates.hpp"
#include "toric_atlas/group.hpp"
#include "toric_atlas/render.hpp"
#include "toric_atlas/serialize.hpp"
#include "toric_atlas/service.hpp"
#include "toric_atlas/toric.hpp"

namespace toric_atlas {
namespace {

enum class Format { json, text, svg, dot };

struct CliConfig {
  std::string notation = "math";
  std::string format;  // empty: the subcommand's default
  std::string output;
  std::uint64_t seed = 20260101;
  Tolerances tol;
  double tol_class = kDefaultClassTolerance;
};

// What a subcommand produces: a document in one of several formats.
struct Artifact {
  explicit Artifact(Json j, std::optional<std::string> svg_text = {}, std::optional<std::string> dot_text = {})
      : json(std::move(j)), svg(std::move(svg_text)), dot(std::move(dot_text)) {}

  std::optional<Json> json;
  std::optional<std::string> svg;
  std::optional<std::string> dot;
};

void flatten_text(const Json &j, const std::string &prefix, std::ostream &os) {
  if (j.is_object()) {
    for (const auto &[k, v] : j.items()) flatten_text(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array()) &&
             !(j.front().is_array() && j.front().size() == 2 && j.front().front().is_number())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten_text(j[i], fmt::format("{}[{}]", prefix, i), os);
  } else {
    os << (prefix.empty() ? "value" : prefix) << ": " << j.dump() << '\n';
  }
}

Format parse_format(const std::string &s) {
  if (s == "json") return Format::json;
  if (s == "text") return Format::text;
  if (s == "svg") return Format::svg;
  if (s == "dot") return Format::dot;
  throw AtlasError("format", "unknown format '" + s + "'");
}

std::string render_artifact(const Artifact &a, const std::string &requested, Format fallback) {
  const Format f = requested.empty() ? fallback : parse_format(requested);
  switch (f) {
    case Format::json:
      if (a.json) return a.json->dump(2) + "\n";
      break;
    case Format::text:
      if (a.json) {
        std::ostringstream os;
        flatten_text(*a.json, "", os);
        return os.str();
      }
      break;
    case Format::svg:
      if (a.svg) return *a.svg;
      break;
    case Format::dot:
      if (a.dot) return *a.dot;
      break;
  }
  throw AtlasError("format", "format '" + requested + "' is not available for this command");
}

CVec read_state(const std::string &text) { return normalize_input(parse_state(text)); }

Notation notation_of(const CliConfig &cfg) { return parse_notation(cfg.notation); }

bool is_input_error(const std::string &code) {
  static const char *const kInternal[] = {"not a group", "not periodic", "internal"};
  return std::none_of(std::begin(kInternal), std::end(kInternal), [&](const char *c) { return code == c; });
}

const GateMatrix &lookup_gate(const std::vector<GateMatrix> &gates, const std::string &name, int radix) {
  const auto it = std::find_if(gates.begin(), gates.end(), [&](const GateMatrix &g) { return g.name == name; });
  if (it == gates.end()) throw AtlasError("unknown gate", fmt::format("no radix-{} gate named '{}'", radix, name));
  return *it;
}

GateMatrix custom_gate(const std::string &matrix_json, const Tolerances &tol) {
  GateMatrix g;
  g.name = "custom";
  g.matrix = parse_guard([&] { return cmat_from_json(Json::parse(matrix_json)); });
  if (!g.matrix.is_square() || g.matrix.rows() < 2 || g.matrix.rows() > 4) {
    throw AtlasError("shape", "custom matrix must be square of size 2, 3 or 4");
  }
  if (!is_unitary(g.matrix, tol)) throw AtlasError("unitary", "custom matrix is not unitary");
  g.radix = static_cast<int>(g.matrix.rows());
  return g;
}

std::vector<GroupElement> generators_from_keys(const std::vector<std::string> &keys) {
  if (keys.empty()) return default_generators();
  std::vector<GroupElement> gens;
  for (const auto &k : keys) gens.push_back(GroupElement::from_key(k));
  return gens;
}

Json int_matrix_pair_json(const EprFactors &f) {
  const IntMatrix product = int_matmul(f.cnot, f.i_x_h);
  return {{"figure", 20},
          {"cnot", to_json(f.cnot)},
          {"i_x_h", to_json(f.i_x_h)},
          {"epr", to_json(f.epr)},
          {"product", to_json(product)},
          {"scalar", "1/sqrt(2)"},
          {"equal", product == f.epr}};
}

FigureScene paper_figure(int number) {
  switch (number) {
    case 13: return qft_fiber_scene();
    case 16: return max_entangled_scene();
    case 17: return separable_surface_scene();
    case 19: return bell_basis_scene();
    default: throw AtlasError("parse", fmt::format("no scene for figure {}", number));
  }
}

ToricPoint point_from_parts(std::vector<double> convex, std::vector<double> phases, const Tolerances &tol) {
  if (convex.size() != phases.size()) throw AtlasError("shape", "convex and phases must have equal length");
  double s = 0.0;
  for (double p : convex) {
    if (p < 0.0) throw AtlasError("simplex", "convex coordinates must be non-negative");
    s += p;
  }
  if (std::abs(s - 1.0) > kInputNormSlack) throw AtlasError("simplex", "convex coordinates must sum to 1");
  for (double &p : convex) p /= s;

  ToricPoint tp;
  tp.convex = convex;
  tp.phases.assign(convex.size(), 0.0);
  tp.defined.assign(convex.size(), false);
  bool found = false;
  for (std::size_t i = 0; i < convex.size(); ++i) {
    tp.defined[i] = std::sqrt(convex[i]) > tol.zero;
    if (tp.defined[i] && !found) {
      tp.pivot = i;
      found = true;
    }
  }
  if (!found) throw AtlasError("simplex", "every coordinate vanishes");
  for (std::size_t i = 0; i < convex.size(); ++i) {
    if (tp.defined[i]) tp.phases[i] = wrap_phase(phases[i] - phases[tp.pivot]);
  }
  tp.validate(tol);
  return tp;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CliConfig cfg;
  CLI::App app{"Toric geometry of few-qudit states and gates", "toric-atlas"};
  app.fallthrough();
  app.require_subcommand(1);

  app.add_option("--notation", cfg.notation, "Basis ordering for 2-qubit data: math or engineering")
      ->envname("TORIC_ATLAS_NOTATION")
      ->check(CLI::IsMember({"math", "engineering"}));
  app.add_option("--format", cfg.format, "Output format: json, text, svg or dot")
      ->check(CLI::IsMember({"json", "text", "svg", "dot"}));
  app.add_option("-o,--output", cfg.output, "Write the result to this file instead of stdout");
  app.add_option("--seed", cfg.seed, "Seed for sampling operations");
  app.add_option("--tol-norm", cfg.tol.norm, "Unit-norm tolerance");
  app.add_option("--tol-mat", cfg.tol.mat, "Matrix equality tolerance");
  app.add_option("--tol-geom", cfg.tol.geom, "Geometric tolerance");
  app.add_option("--tol-zero", cfg.tol.zero, "Amplitude modulus treated as zero");
  app.add_option("--tol-class", cfg.tol_class, "Entanglement classification tolerance");

  // Each leaf registers an action producing an artifact and its default format.
  std::function<Artifact()> action;
  Format default_format = Format::json;
  auto on = [&](CLI::App *cmd, Format fallback, std::function<Artifact()> f) {
    cmd->callback([&, fallback, f = std::move(f)] {
      action = f;
      default_format = fallback;
    });
  };

  // toric
  auto *toric = app.add_subcommand("toric", "Toric decomposition and projections");
  toric->require_subcommand(1);
  std::string state_text;
  {
    auto *cmd = toric->add_subcommand("decompose", "Convex and phase coordinates of a state");
    cmd->add_option("--state", state_text, "Interleaved re,im values")->required();
    on(cmd, Format::json, [&] { return Artifact{to_json(decompose(read_state(state_text), cfg.tol))}; });
  }
  std::string convex_text, phases_text, point_json;
  {
    auto *cmd = toric->add_subcommand("reconstruct", "State with the given toric coordinates");
    auto *pt = cmd->add_option("--point", point_json, "Toric point JSON as printed by decompose");
    cmd->add_option("--convex", convex_text, "Comma-separated probabilities")->excludes(pt);
    cmd->add_option("--phases", phases_text, "Comma-separated phases in radians")->excludes(pt);
    on(cmd, Format::json, [&] {
      ToricPoint tp;
      if (!point_json.empty()) {
        tp = parse_guard([&] { return toric_point_from_json(Json::parse(point_json)); });
      } else {
        if (convex_text.empty() || phases_text.empty()) {
          throw AtlasError("parse", "give --point, or both --convex and --phases");
        }
        tp = point_from_parts(parse_reals(convex_text), parse_reals(phases_text), cfg.tol);
      }
      return Artifact{to_json(reconstruct(tp, cfg.tol))};
    });
  }
  std::string method = "gnomonic", x_text;
  std::size_t pole = 0;
  {
    auto *cmd = toric->add_subcommand("project", "Map a point of the positive orthant sphere to the simplex");
    cmd->add_option("--method", method, "squared, gnomonic or stereographic")
        ->check(CLI::IsMember({"squared", "gnomonic", "stereographic"}));
    cmd->add_option("--x", x_text, "Comma-separated non-negative coordinates")->required();
    cmd->add_option("--pole", pole, "Stereographic tangent axis");
    on(cmd, Format::json, [&] {
      const auto x = parse_reals(x_text);
      Json j = {{"method", method}, {"input", x}};
      if (method == "squared") j["output"] = squared_map(x, cfg.tol).coords;
      else if (method == "gnomonic") j["output"] = gnomonic(x, cfg.tol).coords;
      else j["output"] = stereographic(x, pole, cfg.tol);
      return Artifact{j};
    });
  }
  {
    auto *cmd = toric->add_subcommand("hopf", "Riemann-sphere image z0/z1 of a qubit state");
    cmd->add_option("--state", state_text, "Interleaved re,im values of a qubit")->required();
    on(cmd, Format::json, [&] {
      const CVec s = read_state(state_text);
      if (s.dim() != 2) throw AtlasError("shape", "hopf needs a qubit state");
      return Artifact{to_json(hopf(s[0], s[1]))};
    });
  }
  std::size_t gram_pivot = 0;
  {
    auto *cmd = toric->add_subcommand("gram", "Metric of the torus orbit above a convex point");
    cmd->add_option("--convex", convex_text, "Comma-separated probabilities")->required();
    cmd->add_option("--pivot", gram_pivot, "Pivot coordinate");
    on(cmd, Format::json, [&] {
      return Artifact{to_json(orbit_gram(SimplexPoint{parse_reals(convex_text)}, gram_pivot, cfg.tol))};
    });
  }

  // gates
  auto *gates = app.add_subcommand("gates", "Gate catalog and gate identities");
  gates->require_subcommand(1);
  int radix = 3;
  std::string tag_text, gate_name, matrix_json;
  {
    auto *cmd = gates->add_subcommand("list", "Catalog of one radix");
    cmd->add_option("--radix", radix, "2, 3 or 4")->required()->check(CLI::Range(2, 4));
    cmd->add_option("--tag", tag_text, "Only gates carrying this tag");
    on(cmd, Format::json, [&] {
      std::optional<GateTag> tag;
      if (!tag_text.empty()) {
        tag = parse_gate_tag(tag_text);
        if (!tag) throw AtlasError("parse", "unknown tag '" + tag_text + "'");
      }
      Json j = Json::array();
      for (const auto &g : catalog(radix, notation_of(cfg)))
        if (!tag || g.has_tag(*tag)) j.push_back(to_json(g));
      return Artifact{j};
    });
  }
  {
    auto *cmd = gates->add_subcommand("apply", "Apply a catalog or custom gate to a state");
    cmd->add_option("--state", state_text, "Interleaved re,im values")->required();
    auto *g = cmd->add_option("--gate", gate_name, "Catalog gate name");
    cmd->add_option("--matrix", matrix_json, "Custom matrix as JSON rows of [re, im]")->excludes(g);
    on(cmd, Format::json, [&] {
      const CVec s = read_state(state_text);
      const int r = static_cast<int>(s.dim());
      if (r < 2 || r > 4) throw AtlasError("shape", "state dimension must be 2, 3 or 4");
      GateMatrix gate;
      if (!matrix_json.empty()) gate = custom_gate(matrix_json, cfg.tol);
      else if (!gate_name.empty()) gate = lookup_gate(catalog(r, notation_of(cfg)), gate_name, r);
      else throw AtlasError("parse", "give --gate or --matrix");
      const CVec next = apply(gate, s, cfg.tol);
      Json j = {{"gate", gate.name}, {"new_state", to_json(next)}, {"toric_point", to_json(decompose(next, cfg.tol))}};
      if (r == 4) j["entanglement_report"] = to_json(classify(next, cfg.tol_class, cfg.tol, notation_of(cfg)));
      return Artifact{j};
    });
  }
  {
    auto *cmd = gates->add_subcommand("uniform-check", "Whether a gate sends every basis state to the barycenter");
    cmd->add_option("--radix", radix, "Radix of a catalog gate")->check(CLI::Range(2, 4));
    auto *g = cmd->add_option("--gate", gate_name, "Catalog gate name");
    cmd->add_option("--matrix", matrix_json, "Custom matrix as JSON rows of [re, im]")->excludes(g);
    on(cmd, Format::json, [&] {
      GateMatrix gate;
      if (!matrix_json.empty()) {
        gate.name = "custom";
        gate.matrix = parse_guard([&] { return cmat_from_json(Json::parse(matrix_json)); });
      } else if (!gate_name.empty()) {
        gate = lookup_gate(catalog(radix, notation_of(cfg)), gate_name, radix);
      } else {
        throw AtlasError("parse", "give --gate or --matrix");
      }
      return Artifact{Json{{"gate", gate.name}, {"uniformizing", is_uniformizing(gate.matrix, cfg.tol)}}};
    });
  }
  {
    auto *cmd = gates->add_subcommand("verify-eq1", "H against S·√X·S up to global phase");
    on(cmd, Format::json, [&] { return Artifact{to_json(verify_eq1(cfg.tol))}; });
  }
  {
    auto *cmd = gates->add_subcommand("epr", "The EPR gate as CNOT·(I⊗H)");
    on(cmd, Format::json, [&] {
      const GateMatrix g = epr_compose(notation_of(cfg));
      Json j = int_matrix_pair_json(epr_printed());
      j.erase("figure");
      j["gate"] = to_json(g);
      return Artifact{j};
    });
  }
  {
    auto *cmd = gates->add_subcommand("chrestenson", "Order and square of the ternary Chrestenson gates");
    on(cmd, Format::json, [&] {
      Json j = Json::array();
      for (const auto &g : catalog(3, notation_of(cfg))) {
        if (!g.has_tag(GateTag::chrestenson)) continue;
        Json entry = to_json(chrestenson_properties(g, cfg.tol));
        entry["gate"] = g.name;
        j.push_back(entry);
      }
      return Artifact{j};
    });
  }
  std::vector<std::string> gate_names;
  {
    auto *cmd = gates->add_subcommand("barycenter", "Toric images of the ternary basis under uniformizers");
    cmd->add_option("--gate", gate_names, "Radix-3 uniformizer names (default QFT3)");
    on(cmd, Format::json, [&] {
      const auto cat = catalog(3, notation_of(cfg));
      std::vector<GateMatrix> chosen;
      for (const auto &n : gate_names.empty() ? std::vector<std::string>{"QFT3"} : gate_names)
        chosen.push_back(lookup_gate(cat, n, 3));
      const auto images = barycenter_image(chosen, cfg.tol);
      Json j = Json::array();
      for (std::size_t i = 0; i < images.size(); ++i)
        j.push_back({{"gate", chosen[i / 3].name}, {"basis", i % 3}, {"toric_point", to_json(images[i])}});
      return Artifact{j};
    });
  }

  // group
  auto *group = app.add_subcommand("group", "The 36-element diagonal group and its Cayley graphs");
  group->require_subcommand(1);
  std::vector<std::string> gen_keys;
  {
    auto *cmd = group->add_subcommand("enum", "All elements with their matrices' diagonals");
    on(cmd, Format::json, [&] {
      Json j = Json::array();
      for (const auto &g : enumerate_group()) {
        const CMat m = g.matrix();
        j.push_back({{"key", g.key()}, {"diagonal", Json::array({complex_to_json(m(0, 0)), complex_to_json(m(1, 1)),
                                                                  complex_to_json(m(2, 2))})}});
      }
      return Artifact{j};
    });
  }
  {
    auto *cmd = group->add_subcommand("cayley", "Cayley graph of the subgroup spanned by generators");
    cmd->add_option("--gen", gen_keys, "Generator key such as 1,w,w2 (repeatable)");
    on(cmd, Format::dot, [&] {
      const auto gens = generators_from_keys(gen_keys);
      const CayleyGraph g = build_cayley(gens);
      return Artifact{to_json(g), std::nullopt, export_dot(g)};
    });
  }
  std::string target_key;
  {
    auto *cmd = group->add_subcommand("word", "Shortest generator word for an element");
    cmd->add_option("--target", target_key, "Element key such as 1,-1,w")->required();
    cmd->add_option("--gen", gen_keys, "Generator key (repeatable)");
    on(cmd, Format::json, [&] {
      const auto gens = generators_from_keys(gen_keys);
      const GroupElement target = GroupElement::from_key(target_key);
      const CayleyGraph g = build_cayley(gens);
      const auto word = shortest_word(target, g);
      Json j = {{"target", target.key()}, {"reachable", word.has_value()}};
      if (word) {
        Json keys = Json::array();
        for (std::size_t i : *word) keys.push_back(gens[i].key());
        j["word"] = *word;
        j["word_keys"] = keys;
        j["length"] = word->size();
      }
      return Artifact{j};
    });
  }

  // entangle
  auto *ent = app.add_subcommand("entangle", "Two-qubit entanglement");
  ent->require_subcommand(1);
  std::size_t samples = 100000;
  {
    auto *cmd = ent->add_subcommand("classify", "Concurrence, Schmidt coefficients and class");
    cmd->add_option("--state", state_text, "Eight reals: four re,im pairs")->required();
    on(cmd, Format::json, [&] {
      return Artifact{to_json(classify(read_state(state_text), cfg.tol_class, cfg.tol, notation_of(cfg)))};
    });
  }
  {
    auto *cmd = ent->add_subcommand("min-sep-distance", "Fubini-Study distance to the separable states");
    cmd->add_option("--state", state_text, "Eight reals: four re,im pairs")->required();
    cmd->add_option("--samples", samples, "Product states sampled by the direct search (0 skips it)");
    on(cmd, Format::json, [&] {
      CVec s = read_state(state_text);
      const Notation n = notation_of(cfg);
      if (s.dim() == 4) s = to_notation(s, n);  // back to math order; the map is an involution
      Json j = {{"distance", min_distance_to_separable(s, cfg.tol)}};
      if (samples > 0) {
        const ProductStateSampler sampler(samples, cfg.seed);
        j["search"] = to_json(sampler.minimize(s, cfg.tol));
      }
      return Artifact{j};
    });
  }
  {
    auto *cmd = ent->add_subcommand("bell", "The Bell basis with toric coordinates and reports");
    on(cmd, Format::json, [&] {
      const Notation n = notation_of(cfg);
      static const char *const kNames[] = {"PHI+", "PHI-", "PSI+", "PSI-"};
      Json j = Json::array();
      const auto basis = bell_basis(n);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        j.push_back({{"name", kNames[i]},
                     {"state", to_json(basis[i])},
                     {"toric_point", to_json(decompose(basis[i], cfg.tol))},
                     {"report", to_json(classify(basis[i], cfg.tol_class, cfg.tol, n))}});
      }
      return Artifact{j};
    });
  }

  // figure
  auto *fig = app.add_subcommand("figure", "SVG figures");
  fig->require_subcommand(1);
  std::vector<std::string> states;
  std::string mode_text = "unit";
  int width = 480, height = 480;
  for (auto *c : {fig}) {
    c->add_option("--width", width, "Width in px")->check(CLI::Range(16, 8192));
    c->add_option("--height", height, "Height in px")->check(CLI::Range(16, 8192));
  }
  auto scene_artifact = [&](const FigureScene &scene) {
    scene.validate(cfg.tol);
    return Artifact{to_json(scene), to_svg(scene, width, height)};
  };
  {
    auto *cmd = fig->add_subcommand("simplex", "States marked at their convex coordinates");
    cmd->add_option("--radix", radix, "Simplex radix when no state is given")->check(CLI::Range(2, 4));
    cmd->add_option("--state", states, "State (repeatable)");
    on(cmd, Format::svg, [&] {
      std::vector<Mark> marks;
      int r = radix;
      for (std::size_t i = 0; i < states.size(); ++i) {
        const ToricPoint tp = decompose(read_state(states[i]), cfg.tol);
        r = static_cast<int>(tp.dim());
        marks.push_back({tp.convex, fmt::format("ψ{}", i + 1), "point", std::nullopt});
      }
      return scene_artifact(scene_simplex(r, std::move(marks), {}, cfg.tol));
    });
  }
  {
    auto *cmd = fig->add_subcommand("fiber", "States in the torus above their common convex point");
    cmd->add_option("--state", states, "State (repeatable; default: QFT3 images of the basis)");
    cmd->add_option("--mode", mode_text, "unit or affine")->check(CLI::IsMember({"unit", "affine"}));
    on(cmd, Format::svg, [&] {
      if (states.empty()) {
        FigureScene scene = qft_fiber_scene();
        scene.mode = parse_geometry_mode(mode_text);
        return scene_artifact(scene);
      }
      std::vector<ToricPoint> pts;
      for (const auto &s : states) pts.push_back(decompose(read_state(s), cfg.tol));
      return scene_artifact(scene_torus_fiber(pts, parse_geometry_mode(mode_text), {}, cfg.tol));
    });
  }
  int fig_number = 0;
  {
    auto *cmd = fig->add_subcommand("paper-fig", "Reproduce a standard atlas figure");
    cmd->add_option("number", fig_number, "13, 16, 17, 19 or 20")->required()->check(CLI::IsMember({13, 16, 17, 19, 20}));
    on(cmd, Format::svg, [&] {
      if (fig_number == 20) return Artifact{int_matrix_pair_json(epr_printed())};
      return scene_artifact(paper_figure(fig_number));
    });
  }

  // serve
  std::string host = "127.0.0.1", cors = "*";
  int port = 8080;
  bool serving = false;
  {
    auto *cmd = app.add_subcommand("serve", "Run the HTTP API");
    cmd->add_option("--host", host, "Bind address");
    cmd->add_option("--port", port, "Bind port")->check(CLI::Range(0, 65535));
    cmd->add_option("--cors-origin", cors, "Access-Control-Allow-Origin value");
    cmd->callback([&] { serving = true; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    cfg.tol.validate();
    const Notation n = notation_of(cfg);
    if (serving) {
      ServiceOptions opts{cfg.tol, n, cors};
      HttpServer server(opts);
      err << fmt::format("listening on http://{}:{}\n", host, port);
      if (!server.listen(host, port)) {
        err << "error: could not bind " << host << ":" << port << '\n';
        return kExitInput;
      }
      return kExitOk;
    }
    if (!action) {
      err << app.help();
      return kExitInput;
    }
    const std::string text = render_artifact(action(), cfg.format, default_format);
    if (cfg.output.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) throw AtlasError("output", "cannot open " + cfg.output);
      file << text;
      if (!file) throw AtlasError("output", "write failed: " + cfg.output);
    }
    return kExitOk;
  } catch (const AtlasError &e) {
    err << "error (" << e.code() << "): " << e.what() << '\n';
    return is_input_error(e.code()) ? kExitInput : kExitInternal;
  } catch (const Json::exception &e) {
    err << "error (parse): " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace toric_atlas
