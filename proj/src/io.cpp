#include "sphconv/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace sphconv::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

void check_fields(const json& doc, const std::set<std::string>& allowed, const std::string& where) {
  if (!doc.is_object()) parse_error(where + ": expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.count(key)) parse_error(where + ": unknown field \"" + key + "\"");
  }
}

const json& field(const json& doc, const std::string& key, const std::string& where) {
  auto it = doc.find(key);
  if (it == doc.end()) parse_error(where + ": missing field \"" + key + "\"");
  return *it;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) parse_error(where + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) parse_error(where + ": non-finite number");
  return x;
}

void check_header(const json& doc, const std::string& kind_expected, const std::string& where) {
  const json& v = field(doc, "schema_version", where);
  if (!v.is_number_integer() || v.get<int>() != kSchemaVersion) {
    parse_error(where + ": schema_version must be " + std::to_string(kSchemaVersion));
  }
  if (!kind_expected.empty()) {
    const json& k = field(doc, "kind", where);
    if (!k.is_string() || k.get<std::string>() != kind_expected) parse_error(where + ": kind must be \"" + kind_expected + "\"");
  }
}

json vec_json(const Vec3d& v) { return json::array({v.x(), v.y(), v.z()}); }
json vec_json(const UnitVec& v) { return vec_json(v.vec()); }

/// Unit vectors are taken bit-for-bit when already unit to rounding, so that
/// saved documents load back identically.
UnitVec unit_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) parse_error(where + ": expected [x, y, z]");
  const Vec3d v(number(j[0], where), number(j[1], where), number(j[2], where));
  const double n = v.norm();
  if (std::abs(n - 1) > 1e-9) {
    std::ostringstream os;
    os.precision(17);
    os << "unit norm: " << where << " has norm " << n;
    throw Error(ErrorKind::InvariantViolation, os.str());
  }
  return std::abs(n - 1) <= 1e-14 ? UnitVec::from_normalized(v) : UnitVec(v);
}

std::vector<double> numbers(const json& j, const std::string& where) {
  if (!j.is_array()) parse_error(where + ": expected an array");
  std::vector<double> out;
  for (const auto& x : j) out.push_back(number(x, where));
  return out;
}

}  // namespace

std::string body_kind(const SphericalBody& body) {
  const auto& s = body.segments();
  if (s.size() == 1 && s[0].sweep() >= 2 * std::numbers::pi) return "cap";
  return body.is_polygon() ? "polygon" : "arc_boundary";
}

json body_to_json(const SphericalBody& body, const json& metadata) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = body_kind(body);
  doc["vertices"] = json::array();
  doc["segments"] = json::array();
  for (const auto& s : body.segments()) {
    doc["vertices"].push_back(vec_json(s.start()));
    doc["segments"].push_back(
        {{"center", vec_json(s.center())}, {"radius", s.radius()}, {"from", vec_json(s.start())}, {"to", vec_json(s.end())}});
  }
  doc["metadata"] = metadata.is_null() ? json::object() : metadata;
  return doc;
}

BodyDocument body_from_json(const json& doc) {
  const std::string where = "body";
  check_fields(doc, {"schema_version", "kind", "vertices", "segments", "metadata"}, where);
  check_header(doc, "", where);
  const json& k = field(doc, "kind", where);
  if (!k.is_string()) parse_error("body: kind must be a string");
  const std::string kind = k.get<std::string>();
  if (kind != "polygon" && kind != "arc_boundary" && kind != "cap") {
    parse_error("body: kind must be polygon, arc_boundary or cap");
  }

  std::vector<UnitVec> vertices;
  if (doc.contains("vertices")) {
    const json& vs = doc["vertices"];
    if (!vs.is_array()) parse_error("body: vertices must be an array");
    for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(unit_from_json(vs[i], "vertices[" + std::to_string(i) + "]"));
  }

  std::vector<BoundarySegment> segments;
  if (doc.contains("segments")) {
    const json& ss = doc["segments"];
    if (!ss.is_array()) parse_error("body: segments must be an array");
    for (std::size_t i = 0; i < ss.size(); ++i) {
      const std::string w = "segments[" + std::to_string(i) + "]";
      check_fields(ss[i], {"center", "radius", "from", "to"}, w);
      segments.emplace_back(unit_from_json(field(ss[i], "center", w), w + ".center"),
                            number(field(ss[i], "radius", w), w + ".radius"),
                            unit_from_json(field(ss[i], "from", w), w + ".from"),
                            unit_from_json(field(ss[i], "to", w), w + ".to"));
    }
  }

  if (!doc.contains("segments") && kind != "polygon") parse_error("body: only polygons may omit segments");
  BodyDocument out{kind, segments.empty() ? SphericalBody::polygon(vertices) : SphericalBody(std::move(segments))};
  if (doc.contains("segments") && !vertices.empty()) {
    const auto& segs = out.body.segments();
    if (vertices.size() != segs.size()) {
      throw Error(ErrorKind::InvariantViolation, "vertices must list the start of every segment");
    }
    for (std::size_t i = 0; i < segs.size(); ++i) {
      if (dist(vertices[i], segs[i].start()) > 1e-10) {
        throw Error(ErrorKind::InvariantViolation, "vertex " + std::to_string(i) + " is not the start of segment " +
                                                       std::to_string(i));
      }
    }
  }
  if (body_kind(out.body) != kind) {
    throw Error(ErrorKind::InvariantViolation, "kind \"" + kind + "\" does not match the boundary (" +
                                                   body_kind(out.body) + ")");
  }
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) parse_error("body: metadata must be an object");
    out.metadata = doc["metadata"];
  }
  return out;
}

json gamma_to_json(const GammaFn& gamma) {
  return {{"schema_version", kSchemaVersion}, {"kind", "gamma"}, {"angles", gamma.angles()}, {"values", gamma.values()}};
}

GammaFn gamma_from_json(const json& doc) {
  check_fields(doc, {"schema_version", "kind", "angles", "values", "metadata"}, "gamma");
  check_header(doc, "gamma", "gamma");
  try {
    return GammaFn(numbers(field(doc, "angles", "gamma"), "gamma.angles"),
                   numbers(field(doc, "values", "gamma"), "gamma.values"));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidSpec) throw Error(ErrorKind::InvariantViolation, e.what());
    throw;
  }
}

json wulff_to_json(const WulffShape& shape) {
  json boundary = json::array();
  for (const auto& p : shape.boundary) boundary.push_back(json::array({p.x(), p.y()}));
  json g = gamma_to_json(shape.gamma);
  g.erase("schema_version");
  g.erase("kind");
  return {{"schema_version", kSchemaVersion}, {"kind", "wulff"}, {"boundary", boundary}, {"gamma", g}};
}

WulffShape wulff_from_json(const json& doc) {
  check_fields(doc, {"schema_version", "kind", "boundary", "gamma", "metadata"}, "wulff");
  check_header(doc, "wulff", "wulff");
  std::vector<Vec2d> pts;
  const json& b = field(doc, "boundary", "wulff");
  if (!b.is_array()) parse_error("wulff: boundary must be an array");
  for (const auto& p : b) {
    if (!p.is_array() || p.size() != 2) parse_error("wulff: boundary points are [x, y]");
    pts.emplace_back(number(p[0], "wulff.boundary"), number(p[1], "wulff.boundary"));
  }
  json g = field(doc, "gamma", "wulff");
  check_fields(g, {"angles", "values"}, "wulff.gamma");
  g["schema_version"] = kSchemaVersion;
  g["kind"] = "gamma";
  const GammaFn gamma = gamma_from_json(g);

  // The stored polygon must already be its own strictly convex hull, up to
  // the choice of starting vertex.
  const auto hull = wulff_from_polygon(pts).boundary;
  const auto it = std::find(hull.begin(), hull.end(), pts.front());
  bool same = hull.size() == pts.size() && it != hull.end();
  const auto off = static_cast<std::size_t>(it - hull.begin());
  for (std::size_t k = 0; same && k < pts.size(); ++k) same = hull[(off + k) % hull.size()] == pts[k];
  if (!same) throw Error(ErrorKind::InvariantViolation, "wulff boundary is not a strictly convex counterclockwise polygon");
  return {std::move(pts), gamma};
}

json verdict_to_json(const Verdict& v) {
  json pts = json::array();
  for (const auto& p : v.witness.points) pts.push_back(vec_json(p));
  return {{"kind", to_string(v.kind)},
          {"pass", v.pass},
          {"deviation", v.deviation},
          {"tolerance", v.tolerance},
          {"value", v.value},
          {"witness", {{"description", v.witness.description}, {"points", pts}}}};
}

json report_to_json(const Classification& c, double tol, std::size_t samples) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "report";
  doc["samples"] = samples;
  doc["tolerance"] = tol;
  doc["thickness"] = c.thickness;
  doc["diameter"] = c.diameter;
  doc["thickness_witness"] = {{"support_center", vec_json(c.profile.min.support_center)},
                              {"opposing_center", vec_json(c.profile.min.opposing_center)},
                              {"dual_form_width", c.profile.min.dual_form_width}};
  doc["diameter_witness"] = {{"p", vec_json(c.diameter_witness.p)}, {"q", vec_json(c.diameter_witness.q)}};

  json reduced = verdict_to_json(c.reduced.verdict);
  reduced["necessary_excess"] = c.reduced.necessary_excess;
  if (std::isfinite(c.reduced.min_drop)) reduced["min_drop"] = c.reduced.min_drop;
  reduced["points_checked"] = c.reduced.points_checked;
  reduced["corners_probed"] = c.reduced.corners_probed;
  doc["verdicts"] = {{"constant_width", verdict_to_json(c.constant_width)},
                     {"constant_diameter", verdict_to_json(c.constant_diameter)},
                     {"reduced", reduced}};

  doc["theorem_checks"] = json::object();
  doc["applicable_checks"] = json::array();
  for (const auto& [name, check] : c.checks) {
    doc["theorem_checks"][name] = check.holds;
    if (check.applicable) doc["applicable_checks"].push_back(name);
  }
  json centers = json::array();
  for (const auto& k : c.profile.centers) centers.push_back(vec_json(k));
  doc["width_profile"] = {{"centers", centers}, {"widths", c.profile.widths}};
  return doc;
}

json duality_to_json(const DualityReport& r) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "duality_report";
  doc["tolerance"] = r.tolerance;
  doc["self_dual"] = r.self_dual;
  doc["hausdorff_gap"] = r.hausdorff_gap;
  doc["induced_thickness"] = r.thickness;
  doc["induced_diameter"] = r.diameter;
  doc["conditions"] = json::object();
  for (const auto& [name, v] : r.conditions) doc["conditions"][name] = verdict_to_json(v);
  doc["all_agree"] = r.all_agree();
  return doc;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    parse_error(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "write failed: " + path);
}

void write_json(const std::string& path, const json& doc) { write_text(path, doc.dump(2) + "\n"); }

void save_body(const std::string& path, const SphericalBody& body, const json& metadata) {
  write_json(path, body_to_json(body, metadata));
}

SphericalBody load_body(const std::string& path) { return body_from_json(read_json(path)).body; }

}  // namespace sphconv::io
