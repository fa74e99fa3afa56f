#include "holescope/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace holescope {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

VertexId as_vertex(const json& j, const char* where) {
  if (!j.is_number_integer())
    throw std::invalid_argument(std::string("expected integer in ") + where);
  return j.get<VertexId>();
}

Edge edge_from_json(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument(std::string("expected [a,b] edge in ") + where);
  return make_edge(as_vertex(j[0], where), as_vertex(j[1], where));
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

ordered_json edge_to_json(Edge e) { return ordered_json::array({e.a, e.b}); }

ordered_json document_to_json(const DrawingDocument& doc) {
  const Drawing& d = doc.drawing;
  ordered_json j;
  j["n"] = d.n();
  j["label"] = d.label();
  ordered_json xs = ordered_json::array();
  for (const CrossingPair& c : d.crossings())
    xs.push_back(ordered_json::array({edge_to_json(c.e), edge_to_json(c.f)}));
  j["crossings"] = std::move(xs);
  if (d.has_rotations()) {
    ordered_json rs = ordered_json::array();
    for (VertexId v = 1; v <= d.n(); ++v) rs.push_back(d.rotation_of(v));
    j["rotations"] = std::move(rs);
  }
  if (doc.points) {
    ordered_json ps = ordered_json::array();
    for (const Point& p : doc.points->points)
      ps.push_back(ordered_json::array({p.x, p.y}));
    j["points"] = std::move(ps);
  }
  return j;
}

DrawingDocument document_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("document is not an object");
  if (!j.contains("n")) throw std::invalid_argument("missing field: n");
  const int n = as_vertex(j["n"], "n");
  std::string label = j.value("label", std::string{});
  if (!j.contains("crossings"))
    throw std::invalid_argument("missing field: crossings");
  const json& xs = j["crossings"];
  if (!xs.is_array()) throw std::invalid_argument("crossings is not an array");
  std::vector<CrossingPair> crossings;
  crossings.reserve(xs.size());
  for (const json& c : xs) {
    if (!c.is_array() || c.size() != 2)
      throw std::invalid_argument("crossing entry is not an edge pair");
    crossings.push_back(make_crossing_pair(edge_from_json(c[0], "crossings"),
                                           edge_from_json(c[1], "crossings")));
  }
  std::optional<RotationSystem> rotations;
  if (j.contains("rotations") && !j["rotations"].is_null()) {
    const json& rs = j["rotations"];
    if (!rs.is_array() || static_cast<int>(rs.size()) != n)
      throw std::invalid_argument("rotations must list one cycle per vertex");
    RotationSystem sys;
    for (const json& r : rs) {
      if (!r.is_array())
        throw std::invalid_argument("rotation is not an array");
      Rotation rot;
      for (const json& v : r) rot.push_back(as_vertex(v, "rotations"));
      sys.push_back(std::move(rot));
    }
    rotations = std::move(sys);
  }
  DrawingDocument doc{
      Drawing(n, std::move(crossings), std::move(rotations), std::move(label)),
      std::nullopt};
  if (j.contains("points") && !j["points"].is_null()) {
    const json& ps = j["points"];
    if (!ps.is_array() || static_cast<int>(ps.size()) != n)
      throw std::invalid_argument("points must list one pair per vertex");
    PointConfig cfg;
    for (const json& p : ps) {
      if (!p.is_array() || p.size() != 2)
        throw std::invalid_argument("point is not an [x,y] pair");
      if (!p[0].is_number_integer() || !p[1].is_number_integer())
        throw std::invalid_argument("point coordinates must be integers");
      Point pt{p[0].get<long long>(), p[1].get<long long>()};
      if (std::llabs(pt.x) > kMaxCoord || std::llabs(pt.y) > kMaxCoord)
        throw std::invalid_argument("coordinate exceeds bound");
      cfg.points.push_back(pt);
    }
    doc.points = std::move(cfg);
  }
  return doc;
}

std::string serialize_document(const DrawingDocument& doc) {
  return document_to_json(doc).dump(2) + "\n";
}

DrawingDocument parse_document_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
  return document_from_json(j);
}

DrawingDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document_text(buf.str());
}

void save_document(const DrawingDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << serialize_document(doc);
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string render_svg(const DrawingDocument& doc) {
  if (!doc.points) throw std::invalid_argument("no coordinates");
  const auto& pts = doc.points->points;
  if (static_cast<int>(pts.size()) != doc.drawing.n())
    throw std::invalid_argument("point count mismatch");
  long long min_x = pts[0].x, max_x = pts[0].x;
  long long min_y = pts[0].y, max_y = pts[0].y;
  for (const Point& p : pts) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double span =
      std::max<long long>({max_x - min_x, max_y - min_y, 1});
  const double scale = 720.0 / span;
  const double margin = 40.0;
  auto sx = [&](long long x) { return margin + (x - min_x) * scale; };
  auto sy = [&](long long y) { return margin + (max_y - y) * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"800\" viewBox=\"0 0 800 800\">\n";
  svg << "  <rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  const int n = doc.drawing.n();
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b)
      svg << "  <line x1=\"" << fmt(sx(pts[a - 1].x)) << "\" y1=\""
          << fmt(sy(pts[a - 1].y)) << "\" x2=\"" << fmt(sx(pts[b - 1].x))
          << "\" y2=\"" << fmt(sy(pts[b - 1].y))
          << "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
  for (VertexId v = 1; v <= n; ++v) {
    svg << "  <circle cx=\"" << fmt(sx(pts[v - 1].x)) << "\" cy=\""
        << fmt(sy(pts[v - 1].y))
        << "\" r=\"4\" fill=\"#c22\"/>\n";
    svg << "  <text x=\"" << fmt(sx(pts[v - 1].x) + 6) << "\" y=\""
        << fmt(sy(pts[v - 1].y) - 6) << "\" font-size=\"13\">" << v
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

// ── Witness fragments ───────────────────────────────────────────────────

ordered_json to_json(const GonCertificate& g) {
  ordered_json j;
  j["order"] = g.order;
  ordered_json b = ordered_json::array();
  for (Edge e : g.boundary) b.push_back(edge_to_json(e));
  j["boundary"] = std::move(b);
  j["diagonals_verified"] = g.diagonals_verified;
  return j;
}

ordered_json to_json(const CycleWitness& w) {
  ordered_json j;
  j["cycle"] = w.cycle;
  j["plane"] = w.plane;
  j["empty"] = w.empty;
  j["empty_side"] = to_string(w.empty_side_tag);
  if (w.plane) {
    j["class_a"] = w.sides.class_a;
    j["class_b"] = w.sides.class_b;
  }
  return j;
}

ordered_json to_json(const HoleRecord& h) {
  ordered_json j;
  j["gon"] = to_json(h.gon);
  j["interior"] = h.interior;
  return j;
}

ordered_json to_json(const TriangleRecord& t) {
  ordered_json j;
  j["vertices"] = t.vertices;
  j["empty_side"] = to_string(t.empty_side_tag);
  return j;
}

ordered_json to_json(const SideConvexityViolation& v) {
  ordered_json j;
  j["triangle"] = v.triangle;
  j["reason"] = v.reason;
  return j;
}

ordered_json to_json(const PlaneSubdrawing& p) {
  ordered_json j;
  j["center"] = p.center;
  ordered_json se = ordered_json::array();
  for (Edge e : p.star_edges) se.push_back(edge_to_json(e));
  j["star_edges"] = std::move(se);
  ordered_json te = ordered_json::array();
  for (Edge e : p.tree_edges) te.push_back(edge_to_json(e));
  j["tree_edges"] = std::move(te);
  j["faces"] = p.faces;
  return j;
}

}  // namespace holescope
