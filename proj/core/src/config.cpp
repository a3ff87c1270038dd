#include "renorm/config.hpp"

#include <cmath>
#include <set>

#include <json.hpp>

#include "renorm/errors.hpp"

namespace renorm {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) throw InputError("unknown key '" + key + "' in " + where);
  }
}

template <class T>
void read_field(const json& obj, const char* key, T& out) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("field '") + key + "': " + e.what());
  }
}

json tolerance_to_json(const ToleranceConfig& t) {
  return {{"gauge_rel_tol", t.gauge_rel_tol},
          {"line_search_tol", t.line_search_tol},
          {"cert_gap_tol", t.cert_gap_tol}};
}

json target_to_json(const TargetSpec& t) {
  json j;
  if (t.kind == TargetSpec::Kind::kSegment) {
    j["kind"] = "segment";
    if (t.scale) j["scale"] = *t.scale;
  } else {
    j["kind"] = "polytope";
    j["vertices"] = t.vertices;
  }
  return j;
}

}  // namespace

void RunConfig::validate() const {
  if (!(rho > 0.0 && rho < 0.25)) throw ConstraintError("rho_range", "rho must lie in (0, 1/4)");
  if (levels < 1) throw ConstraintError("levels", "levels must be >= 1");
  if (dim < static_cast<std::size_t>(levels) + 3) {
    throw ConstraintError("dim", "dim must be >= levels + 3");
  }
  const std::size_t vi = resolved_v_index();
  if (vi < static_cast<std::size_t>(levels) + 2 || vi > dim) {
    throw ConstraintError("v_index", "v_index must lie in [levels + 2, dim]");
  }
  tolerance.validate();
  if (hypothesis_samples < 0) throw ConstraintError("hypothesis_samples", "must be >= 0");
  if (target.kind == TargetSpec::Kind::kSegment) {
    if (target.scale && !(*target.scale > 0.0 && std::isfinite(*target.scale))) {
      throw ConstraintError("target_scale", "segment scale must be positive");
    }
  } else {
    if (target.vertices.empty()) throw ConstraintError("target_vertices", "no vertices");
    for (const auto& v : target.vertices) {
      if (v.size() != dim) throw ConstraintError("target_vertices", "vertex dimension mismatch");
    }
  }
}

Point RunConfig::v_direction() const { return Point::unit(dim, resolved_v_index() - 1); }

RunConfig parse_run_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("config must be a JSON object");
  reject_unknown(j,
                 {"rho", "levels", "dim", "seed", "tolerance", "v_index", "target",
                  "hypothesis_samples", "json_out", "csv_out"},
                 "config");
  RunConfig c;
  read_field(j, "rho", c.rho);
  read_field(j, "levels", c.levels);
  read_field(j, "dim", c.dim);
  read_field(j, "seed", c.seed);
  read_field(j, "v_index", c.v_index);
  read_field(j, "hypothesis_samples", c.hypothesis_samples);
  read_field(j, "json_out", c.json_out);
  read_field(j, "csv_out", c.csv_out);
  if (j.contains("tolerance")) {
    const json& t = j["tolerance"];
    if (!t.is_object()) throw InputError("'tolerance' must be an object");
    reject_unknown(t, {"gauge_rel_tol", "line_search_tol", "cert_gap_tol"}, "tolerance");
    read_field(t, "gauge_rel_tol", c.tolerance.gauge_rel_tol);
    read_field(t, "line_search_tol", c.tolerance.line_search_tol);
    read_field(t, "cert_gap_tol", c.tolerance.cert_gap_tol);
  }
  if (j.contains("target")) {
    const json& t = j["target"];
    if (!t.is_object()) throw InputError("'target' must be an object");
    reject_unknown(t, {"kind", "scale", "vertices"}, "target");
    std::string kind = "segment";
    read_field(t, "kind", kind);
    if (kind == "segment") {
      c.target.kind = TargetSpec::Kind::kSegment;
      if (t.contains("scale")) {
        double s = 0.0;
        read_field(t, "scale", s);
        c.target.scale = s;
      }
    } else if (kind == "polytope") {
      c.target.kind = TargetSpec::Kind::kPolytope;
      read_field(t, "vertices", c.target.vertices);
    } else {
      throw InputError("target kind must be 'segment' or 'polytope', got '" + kind + "'");
    }
  }
  return c;
}

std::string run_config_to_json(const RunConfig& c) {
  json j = {{"rho", c.rho},
            {"levels", c.levels},
            {"dim", c.dim},
            {"seed", c.seed},
            {"tolerance", tolerance_to_json(c.tolerance)},
            {"v_index", c.v_index},
            {"target", target_to_json(c.target)},
            {"hypothesis_samples", c.hypothesis_samples},
            {"json_out", c.json_out},
            {"csv_out", c.csv_out}};
  return j.dump(2) + "\n";
}

SchemeConfig scheme_from_config(const RunConfig& cfg) {
  cfg.validate();
  return build_scheme(cfg.rho, cfg.levels, cfg.dim, cfg.v_direction());
}

CompactConvexSet target_from_config(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.target.kind == TargetSpec::Kind::kSegment) {
    return CompactConvexSet::symmetric_segment(cfg.v_direction(),
                                               cfg.target.scale.value_or(cfg.rho / 4.0));
  }
  std::vector<Point> verts;
  for (const auto& v : cfg.target.vertices) verts.emplace_back(v);
  return CompactConvexSet::polytope(std::move(verts));
}

AlphaTuple fixture_alpha_from_config(const RunConfig& cfg) {
  if (cfg.dim < 3) throw InputError("fixture tuple needs dim >= 3");
  const std::size_t d = cfg.dim;
  const Point e = Point::unit(d, 0), h = Point::unit(d, 1), v = Point::unit(d, 2);
  return make_alpha(v, as_functional(v), e, as_functional(e), h, as_functional(h), cfg.rho / 32.0,
                    cfg.rho);
}

std::string scheme_to_json(const SchemeConfig& s) {
  json j = {{"rho", s.rho},
            {"levels", s.levels},
            {"dim", s.dim},
            {"v_direction", s.v_direction.values()},
            {"level", s.level},
            {"t", s.t},
            {"eps", s.eps},
            {"eta", s.eta},
            {"base_factor", s.base_factor()}};
  return j.dump(2) + "\n";
}

}  // namespace renorm
