#pragma once
// Canonical JSON serialization for drawings and point sets, witness
// fragments for reports, and straight-line SVG export for geometric
// instances. Serialization is byte-stable: fixed field order, two-space
// indentation, trailing newline.

#include <optional>
#include <string>

#include "holescope/drawing.hpp"
#include "holescope/geometry.hpp"
#include "holescope/holes.hpp"
#include "holescope/plane_sub.hpp"
#include "holescope/third_party/nlohmann_json.hpp"

namespace holescope {

inline constexpr const char* kToolVersion = "0.1.0";

/// A drawing plus, for geometric instances, the point set it was compiled
/// from.
struct DrawingDocument {
  Drawing drawing;
  std::optional<PointConfig> points;
};

/// Field order: n, label, crossings, rotations (when present), points (when
/// present). Crossing pairs are emitted in the drawing's canonical order;
/// each rotation starts at the vertex's smallest neighbor.
nlohmann::ordered_json document_to_json(const DrawingDocument& doc);

/// Inverse of document_to_json. Shape errors throw std::invalid_argument;
/// semantic problems (K_4 violations etc.) are left to validate().
DrawingDocument document_from_json(const nlohmann::json& j);

std::string serialize_document(const DrawingDocument& doc);
DrawingDocument parse_document_text(const std::string& text);

/// File round trip; throws std::runtime_error on I/O failure.
DrawingDocument load_document(const std::string& path);
void save_document(const DrawingDocument& doc, const std::string& path);

/// Straight-line figure of a geometric document. Throws
/// std::invalid_argument("no coordinates") when no point set is attached.
std::string render_svg(const DrawingDocument& doc);

// ── Witness fragments ───────────────────────────────────────────────────

nlohmann::ordered_json edge_to_json(Edge e);
nlohmann::ordered_json to_json(const GonCertificate& g);
nlohmann::ordered_json to_json(const CycleWitness& w);
nlohmann::ordered_json to_json(const HoleRecord& h);
nlohmann::ordered_json to_json(const TriangleRecord& t);
nlohmann::ordered_json to_json(const SideConvexityViolation& v);
nlohmann::ordered_json to_json(const PlaneSubdrawing& p);

}  // namespace holescope
