#pragma once

// JSON documents for bodies, surface energies, Wulff shapes and reports.
// Every document carries schema_version 1; unknown fields are rejected.

#include <json.hpp>

#include <string>

#include "sphconv/convex_body.hpp"
#include "sphconv/metrics.hpp"
#include "sphconv/wulff.hpp"

namespace sphconv::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct BodyDocument {
  std::string kind;  // polygon, arc_boundary or cap
  SphericalBody body;
  json metadata = json::object();
};

/// "cap" for a single full circle, "polygon" when every segment is a great edge.
std::string body_kind(const SphericalBody& body);

json body_to_json(const SphericalBody& body, const json& metadata = json::object());
BodyDocument body_from_json(const json& doc);

json gamma_to_json(const GammaFn& gamma);
GammaFn gamma_from_json(const json& doc);

json wulff_to_json(const WulffShape& shape);
WulffShape wulff_from_json(const json& doc);

json verdict_to_json(const Verdict& v);
json report_to_json(const Classification& c, double tol, std::size_t samples);
json duality_to_json(const DualityReport& r);

/// Parses a file; ParseError on malformed JSON, IoError when unreadable.
json read_json(const std::string& path);
/// Writes with 2-space indentation and a trailing newline; IoError on failure.
void write_json(const std::string& path, const json& doc);
void write_text(const std::string& path, const std::string& text);

void save_body(const std::string& path, const SphericalBody& body, const json& metadata = json::object());
SphericalBody load_body(const std::string& path);

}  // namespace sphconv::io
