#include "torvis/render.hpp"

#include <sstream>

#include "json.hpp"

namespace torvis {

using ordered_json = nlohmann::ordered_json;

std::string drawingToJson(const SurfaceDrawing& dr) {
  ordered_json j;
  j["surface"] = surfaceName(dr.surface);
  j["w"] = dr.w;
  j["h"] = dr.h;
  j["convention"] = "0-based, klein mirror x↦w-1-x";
  j["vertices"] = ordered_json::array();
  for (const auto& vs : dr.vertices) {
    ordered_json v;
    v["id"] = vs.v;
    v["y"] = vs.y;
    v["x_lo"] = vs.x_lo;
    v["x_hi"] = vs.x_hi;
    v["wraps_x"] = vs.wraps_x;
    j["vertices"].push_back(v);
  }
  j["edges"] = ordered_json::array();
  for (const auto& es : dr.edges) {
    ordered_json e;
    e["id"] = es.edge;
    e["x"] = es.x;
    e["y_lo"] = es.y_lo;
    e["y_hi"] = es.y_hi;
    e["crosses_hboundary"] = es.crosses;
    j["edges"].push_back(e);
  }
  ordered_json stats;
  stats["columns"] = dr.w;
  stats["rows"] = dr.h;
  stats["shared_vertices"] = dr.shared_vertices;
  j["stats"] = stats;
  if (!dr.path_x.empty()) {
    j["paths"] = ordered_json::array();
    for (size_t p = 0; p < dr.path_x.size(); ++p) {
      ordered_json pj;
      pj["index"] = p;
      pj["column"] = dr.path_x[p];
      pj["vertices"] = dr.path_vertices[p];
      pj["edges"] = dr.path_edges[p];
      j["paths"].push_back(pj);
    }
  }
  return j.dump(2) + "\n";
}

SurfaceDrawing drawingFromJson(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::SyntaxError, std::string("bad drawing JSON: ") + e.what());
  }
  SurfaceDrawing dr;
  try {
    std::string s = j.at("surface");
    if (s == "torus") dr.surface = Surface::torus;
    else if (s == "klein") dr.surface = Surface::klein;
    else if (s == "cylinder_plane") dr.surface = Surface::cylinder_plane;
    else fail(ErrorCode::SyntaxError, "unknown surface " + s);
    dr.w = j.at("w");
    dr.h = j.at("h");
    for (const auto& v : j.at("vertices")) {
      SurfVertexSeg vs;
      vs.v = v.at("id");
      vs.y = v.at("y");
      vs.x_lo = v.at("x_lo");
      vs.x_hi = v.at("x_hi");
      vs.wraps_x = v.at("wraps_x");
      dr.vertices.push_back(vs);
    }
    for (const auto& e : j.at("edges")) {
      SurfEdgeSeg es;
      es.edge = e.at("id");
      es.x = e.at("x");
      es.y_lo = e.at("y_lo");
      es.y_hi = e.at("y_hi");
      es.crosses = e.at("crosses_hboundary");
      dr.edges.push_back(es);
    }
    if (j.contains("stats"))
      dr.shared_vertices = j["stats"].value("shared_vertices", 0);
    if (j.contains("paths")) {
      for (const auto& pj : j["paths"]) {
        dr.path_x.push_back(pj.at("column"));
        dr.path_vertices.push_back(
            pj.at("vertices").get<std::vector<VertexId>>());
        dr.path_edges.push_back(pj.at("edges").get<std::vector<EdgeId>>());
      }
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorCode::SyntaxError, std::string("bad drawing JSON: ") + e.what());
  }
  return dr;
}

std::string orthoToJson(const OrthoDrawing& dr) {
  ordered_json j;
  j["surface"] = surfaceName(dr.surface);
  j["w"] = dr.w;
  j["h"] = dr.h;
  j["convention"] = "0-based, klein mirror x↦w-1-x";
  j["vertices"] = ordered_json::array();
  for (size_t v = 0; v < dr.points.size(); ++v) {
    ordered_json vj;
    vj["id"] = v;
    vj["x"] = dr.points[v].first;
    vj["y"] = dr.points[v].second;
    j["vertices"].push_back(vj);
  }
  j["edges"] = ordered_json::array();
  for (const auto& oe : dr.edges) {
    ordered_json ej;
    ej["id"] = oe.edge;
    ej["crosses_hboundary"] = oe.crosses;
    ej["chain"] = ordered_json::array();
    for (auto [x, y] : oe.chain_a) ej["chain"].push_back({x, y});
    if (oe.crosses) {
      ej["chain_top"] = ordered_json::array();
      for (auto [x, y] : oe.chain_b) ej["chain_top"].push_back({x, y});
    }
    j["edges"].push_back(ej);
  }
  return j.dump(2) + "\n";
}

namespace {

constexpr int kCell = 20;
constexpr int kMargin = 30;

int gx(int x) { return kMargin + kCell / 2 + x * kCell; }
int gy(int y, int h) { return kMargin + kCell / 2 + (h - 1 - y) * kCell; }

void svgHeader(std::ostringstream& out, int w, int h) {
  int W = 2 * kMargin + w * kCell;
  int H = 2 * kMargin + h * kCell;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H
      << "\">\n";
  out << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\""
      << w * kCell << "\" height=\"" << h * kCell
      << "\" fill=\"#fdfdfd\" stroke=\"#333\" stroke-width=\"1.5\" "
         "stroke-dasharray=\"6,3\"/>\n";
}

void svgIdentifications(std::ostringstream& out, Surface surface, int w,
                        int h) {
  int W = 2 * kMargin + w * kCell;
  int yb = kMargin + h * kCell;
  // arrows on the horizontal boundary show the identification direction
  auto arrow = [&](int x, int y, bool right) {
    out << "<path d=\"M" << (right ? x - 5 : x + 5) << " " << y - 4 << " L"
        << (right ? x + 5 : x - 5) << " " << y << " L"
        << (right ? x - 5 : x + 5) << " " << y + 4
        << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1.5\"/>\n";
  };
  arrow(W / 2, kMargin, true);
  arrow(W / 2, yb, surface != Surface::klein);
  if (surface == Surface::klein) {
    out << "<text x=\"" << W / 2 << "\" y=\"" << yb + 16
        << "\" font-size=\"10\" text-anchor=\"middle\" fill=\"#888\">"
           "mirror</text>\n";
  }
}

}  // namespace

std::string renderSVG(const SurfaceDrawing& dr) {
  std::ostringstream out;
  const int w = std::max(dr.w, 1), h = std::max(dr.h, 1);
  svgHeader(out, w, h);
  svgIdentifications(out, dr.surface, w, h);

  auto vline = [&](int x, int y0, int y1, const char* color) {
    out << "<line x1=\"" << gx(x) << "\" y1=\"" << gy(y0, h) << "\" x2=\""
        << gx(x) << "\" y2=\"" << gy(y1, h) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
  };
  for (const auto& es : dr.edges) {
    const char* color = es.crosses ? "#cc3311" : "#4477aa";
    if (!es.crosses) {
      vline(es.x, es.y_lo, es.y_hi, color);
    } else {
      // bottom stub then top stub, each extended to the boundary
      out << "<line x1=\"" << gx(es.x) << "\" y1=\"" << gy(es.y_lo, h)
          << "\" x2=\"" << gx(es.x) << "\" y2=\"" << (kMargin + h * kCell)
          << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
      int tx = dr.mirrorColumn(es.x);
      out << "<line x1=\"" << gx(tx) << "\" y1=\"" << gy(es.y_hi, h)
          << "\" x2=\"" << gx(tx) << "\" y2=\"" << kMargin
          << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    }
  }
  for (const auto& vs : dr.vertices) {
    auto bar = [&](int x0, int x1) {
      out << "<line x1=\"" << gx(x0) - 6 << "\" y1=\"" << gy(vs.y, h)
          << "\" x2=\"" << gx(x1) + 6 << "\" y2=\"" << gy(vs.y, h)
          << "\" stroke=\"#222\" stroke-width=\"6\"/>\n";
    };
    if (!vs.wraps_x) {
      bar(vs.x_lo, vs.x_hi);
    } else {
      bar(vs.x_lo, dr.w - 1);
      bar(0, vs.x_hi);
    }
    out << "<text x=\"" << gx(vs.x_lo) - 10 << "\" y=\"" << gy(vs.y, h) - 6
        << "\" font-size=\"9\" fill=\"#222\">" << vs.v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string renderOrthoSVG(const OrthoDrawing& dr) {
  std::ostringstream out;
  const int w = std::max(dr.w, 1), h = std::max(dr.h, 1);
  svgHeader(out, w, h);
  svgIdentifications(out, dr.surface, w, h);

  auto chain = [&](const std::vector<std::pair<int, int>>& pts,
                   const char* color) {
    if (pts.size() < 2) return;
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\" points=\"";
    for (auto [x, y] : pts) out << gx(x) << "," << gy(y, h) << " ";
    out << "\"/>\n";
  };
  for (const auto& oe : dr.edges) {
    const char* color = oe.crosses ? "#cc3311" : "#4477aa";
    if (!oe.crosses) {
      chain(oe.chain_a, color);
    } else {
      auto a = oe.chain_a;
      // extend to the boundary line itself for the picture
      chain(a, color);
      chain(oe.chain_b, color);
    }
  }
  for (size_t v = 0; v < dr.points.size(); ++v) {
    auto [x, y] = dr.points[v];
    out << "<circle cx=\"" << gx(x) << "\" cy=\"" << gy(y, h)
        << "\" r=\"4\" fill=\"#222\"/>\n";
    out << "<text x=\"" << gx(x) + 6 << "\" y=\"" << gy(y, h) - 6
        << "\" font-size=\"9\" fill=\"#222\">" << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace torvis
