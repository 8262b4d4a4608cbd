#include "torvis/surface_input.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace torvis {

void FlatInput::validate() const {
  std::vector<char> crossing(map.edgeCount(), 0);
  for (Dart d : bottom) {
    require(d.valid() && d.edge() < map.edgeCount(), ErrorCode::SyntaxError,
            "bottom list references undeclared edge");
    require(!crossing[d.edge()], ErrorCode::Condition2Violation,
            "edge " + std::to_string(d.edge()) +
                " crosses the horizontal boundary twice");
    crossing[d.edge()] = 1;
  }
  for (EdgeId e = 0; e < map.edgeCount(); ++e) {
    const bool neg = map.sign(e) < 0;
    if (map.surface() == Surface::klein) {
      require(neg == static_cast<bool>(crossing[e]), ErrorCode::SignMismatch,
              "klein signs must be -1 exactly on bottom crossings (edge " +
                  std::to_string(e) + ")");
    } else {
      require(!neg, ErrorCode::SignMismatch,
              "non-klein surfaces admit no negative edge signs");
    }
  }
}

namespace {

Dart parseDartToken(const std::string& tok, int line_no) {
  require(tok.size() >= 2, ErrorCode::SyntaxError,
          "line " + std::to_string(line_no) + ": bad dart token '" + tok + "'");
  char side = tok.back();
  require(side == '+' || side == '-', ErrorCode::SyntaxError,
          "line " + std::to_string(line_no) + ": dart token must end in + or -");
  int edge = 0;
  try {
    size_t pos = 0;
    edge = std::stoi(tok.substr(0, tok.size() - 1), &pos);
    require(pos == tok.size() - 1 && edge >= 0, ErrorCode::SyntaxError, "");
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(ErrorCode::SyntaxError,
         "line " + std::to_string(line_no) + ": bad edge id in '" + tok + "'");
  }
  return side == '+' ? Dart::forward(edge) : Dart::backward(edge);
}

}  // namespace

FlatInput parseInput(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  int n = -1, m = -1;
  Surface surface = Surface::torus;
  bool have_surface = false;
  std::map<int, std::vector<Dart>> rot_lines;
  std::vector<Dart> bottom;
  bool have_bottom = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;

    if (key == "surface") {
      std::string s;
      require(static_cast<bool>(ls >> s), ErrorCode::SyntaxError,
              "line " + std::to_string(line_no) + ": missing surface name");
      if (s == "torus") surface = Surface::torus;
      else if (s == "klein") surface = Surface::klein;
      else fail(ErrorCode::SyntaxError,
                "line " + std::to_string(line_no) + ": unknown surface '" + s + "'");
      have_surface = true;
    } else if (key == "vertices") {
      require(static_cast<bool>(ls >> n) && n >= 1, ErrorCode::SyntaxError,
              "line " + std::to_string(line_no) + ": bad vertex count");
    } else if (key == "edges") {
      require(static_cast<bool>(ls >> m) && m >= 0, ErrorCode::SyntaxError,
              "line " + std::to_string(line_no) + ": bad edge count");
    } else if (key == "rot") {
      std::string vtok;
      require(static_cast<bool>(ls >> vtok), ErrorCode::SyntaxError,
              "line " + std::to_string(line_no) + ": missing vertex id");
      if (!vtok.empty() && vtok.back() == ':') vtok.pop_back();
      int v = -1;
      try { v = std::stoi(vtok); } catch (...) {
        fail(ErrorCode::SyntaxError,
             "line " + std::to_string(line_no) + ": bad vertex id '" + vtok + "'");
      }
      std::string colon_or_dart;
      std::vector<Dart> rot;
      while (ls >> colon_or_dart) {
        if (colon_or_dart == ":") continue;
        rot.push_back(parseDartToken(colon_or_dart, line_no));
      }
      require(!rot_lines.count(v), ErrorCode::SyntaxError,
              "line " + std::to_string(line_no) + ": duplicate rot line for vertex " +
                  std::to_string(v));
      rot_lines[v] = std::move(rot);
    } else if (key == "bottom:" || key == "bottom") {
      std::string tok;
      while (ls >> tok) {
        if (tok == ":") continue;
        bottom.push_back(parseDartToken(tok, line_no));
      }
      have_bottom = true;
    } else {
      fail(ErrorCode::SyntaxError,
           "line " + std::to_string(line_no) + ": unknown directive '" + key + "'");
    }
  }

  require(have_surface, ErrorCode::SyntaxError, "missing 'surface' line");
  require(n >= 1, ErrorCode::SyntaxError, "missing 'vertices' line");
  require(m >= 0, ErrorCode::SyntaxError, "missing 'edges' line");
  require(have_bottom, ErrorCode::SyntaxError, "missing 'bottom:' line");
  require(static_cast<int>(rot_lines.size()) == n, ErrorCode::SyntaxError,
          "expected exactly one rot line per vertex");
  for (auto& [v, rot] : rot_lines) {
    require(v >= 0 && v < n, ErrorCode::SyntaxError,
            "rot line for out-of-range vertex " + std::to_string(v));
  }

  std::vector<char> crossing(m, 0);
  for (Dart d : bottom) {
    require(d.edge() < m, ErrorCode::SyntaxError,
            "bottom references edge " + std::to_string(d.edge()) +
                " >= edge count");
    crossing[d.edge()] = 1;  // duplicates detected in validate()
  }
  std::vector<int8_t> signs(m, 1);
  if (surface == Surface::klein) {
    for (EdgeId e = 0; e < m; ++e)
      if (crossing[e]) signs[e] = -1;
  }

  std::vector<std::vector<Dart>> rotations(n);
  for (auto& [v, rot] : rot_lines) rotations[v] = std::move(rot);

  FlatInput input{buildMap(n, std::move(rotations), std::move(signs), surface),
                  std::move(bottom)};
  input.validate();
  return input;
}

FlatInput loadInputFile(const std::string& path) {
  std::ifstream f(path);
  require(f.good(), ErrorCode::SyntaxError, "cannot open input file " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parseInput(buf.str());
}

std::string serializeInput(const FlatInput& input) {
  std::ostringstream out;
  out << "surface " << surfaceName(input.map.surface()) << "\n";
  out << "vertices " << input.map.vertexCount() << "\n";
  out << "edges " << input.map.edgeCount() << "\n";
  auto dartTok = [](Dart d) {
    return std::to_string(d.edge()) + (d.isForward() ? "+" : "-");
  };
  for (VertexId v = 0; v < input.map.vertexCount(); ++v) {
    out << "rot " << v << ":";
    for (Dart d : input.map.rotation(v)) out << " " << dartTok(d);
    out << "\n";
  }
  out << "bottom:";
  for (Dart d : input.bottom) out << " " << dartTok(d);
  out << "\n";
  return out.str();
}

namespace {

CutGraph cutImpl(const FlatInput& input, bool check_two_connected) {
  input.validate();
  const SurfaceMap& g = input.map;
  const int n = g.vertexCount();
  const int m = g.edgeCount();
  const int d = input.d();
  require(d >= 1, ErrorCode::NotCellular,
          "cut construction requires at least one bottom crossing");

  CutGraph cut;
  cut.s = n;
  cut.t = n + 1;
  cut.d = d;
  cut.origin_surface = g.surface();
  cut.augment_base_ = m;

  // s-stub i pairs with t-stub i on the torus and with t-stub d-1-i on the
  // Klein bottle (the top side reverses left-to-right order there).
  cut.pair_of_s_stub.resize(d);
  for (int i = 0; i < d; ++i)
    cut.pair_of_s_stub[i] = g.surface() == Surface::klein ? d - 1 - i : i;

  std::vector<std::vector<Dart>> rot(n + 2);
  for (VertexId v = 0; v < n; ++v) rot[v] = g.rotation(v);

  cut.s_vertices.resize(d);
  cut.t_vertices.resize(d);
  cut.stub_s.resize(d);
  cut.stub_t.resize(d);

  // The s-side half of crossing i keeps edge id edge(u_i); its updart u_i
  // moves to s. The t-side half is a fresh edge m+j whose forward dart takes
  // u_i's old slot at the t-side vertex.
  for (int i = 0; i < d; ++i) {
    Dart u = input.bottom[i];
    VertexId si = g.head(u);
    VertexId ti = g.tail(u);
    int j = cut.pair_of_s_stub[i];
    cut.s_vertices[i] = si;
    cut.t_vertices[j] = ti;
    cut.stub_s[i] = u.edge();
    cut.stub_t[j] = m + j;
    rot[ti][g.rotationIndex(u)] = Dart::forward(m + j);
  }
  rot[cut.s] = input.bottom;  // clockwise s_1..s_d
  rot[cut.t].resize(d);
  for (int j = 0; j < d; ++j)  // clockwise at t = t_d..t_1
    rot[cut.t][d - 1 - j] = Dart::backward(m + j);

  std::vector<int8_t> signs(m + d, 1);
  cut.plane = SurfaceMap::build(n + 2, std::move(rot), std::move(signs),
                                Surface::cylinder_plane);

  cut.origin.resize(m + d);
  cut.augmented.assign(m + d, 0);
  for (EdgeId e = 0; e < m; ++e) cut.origin[e] = e;
  for (int i = 0; i < d; ++i)  // t-stub pair_of_s_stub[i] belongs to crossing i
    cut.origin[m + cut.pair_of_s_stub[i]] = input.bottom[i].edge();

  int chi = eulerCharacteristic(cut.plane);
  require(chi == 2, ErrorCode::NotPlanarAfterCut,
          "cut data is inconsistent: cut graph has Euler characteristic " +
              std::to_string(chi) + ", expected 2");
  if (check_two_connected) {
    require(isTwoConnected(cut.plane), ErrorCode::NotTwoConnected,
            "cut graph is not 2-connected; the embedding violates the "
            "simple-face precondition");
  }
  return cut;
}

}  // namespace

CutGraph buildCutGraphRaw(const FlatInput& input) { return cutImpl(input, false); }

CutGraph buildCutGraph(const FlatInput& input) { return cutImpl(input, true); }

FlatInput uncut(const CutGraph& cut) {
  const SurfaceMap& p = cut.plane;
  const int n = p.vertexCount() - 2;
  const int m = p.edgeCount() - cut.d;

  std::vector<std::vector<Dart>> rot(n);
  for (VertexId v = 0; v < n; ++v) rot[v] = p.rotation(v);

  std::vector<Dart> bottom(cut.d);
  for (int i = 0; i < cut.d; ++i) {
    EdgeId se = cut.stub_s[i];
    Dart u = p.tail(Dart::forward(se)) == cut.s ? Dart::forward(se)
                                                : Dart::backward(se);
    int j = cut.pair_of_s_stub[i];
    Dart tfwd = Dart::forward(cut.stub_t[j]);
    Dart at_t_vertex = p.tail(tfwd) == cut.t ? tfwd.twin() : tfwd;
    rot[cut.t_vertices[j]][p.rotationIndex(at_t_vertex)] = u;
    bottom[i] = u;
  }

  std::vector<int8_t> signs(m, 1);
  if (cut.origin_surface == Surface::klein) {
    for (int i = 0; i < cut.d; ++i) signs[cut.stub_s[i]] = -1;
  }
  FlatInput input{buildMap(n, std::move(rot), std::move(signs),
                           cut.origin_surface),
                  std::move(bottom)};
  input.validate();
  return input;
}

FlatInput uncutPlaneMap(const SurfaceMap& plane, VertexId s, VertexId t,
                        Surface target_surface) {
  const int np = plane.vertexCount();
  require(s == np - 2 && t == np - 1, ErrorCode::SyntaxError,
          "terminals must be the two highest-numbered vertices");
  const int d = plane.degree(s);
  require(d >= 1 && plane.degree(t) == d, ErrorCode::SyntaxError,
          "terminals must have equal positive degree");

  std::vector<Dart> sigma = plane.rotation(s);
  std::vector<Dart> tau(d);  // t-stub darts at t, counter-clockwise t_1..t_d
  for (int j = 0; j < d; ++j) tau[j] = plane.rotation(t)[d - 1 - j];

  const int n = np - 2;
  std::vector<std::vector<Dart>> rot(n);
  for (VertexId v = 0; v < n; ++v) rot[v] = plane.rotation(v);

  std::vector<char> removed(plane.edgeCount(), 0);
  std::vector<Dart> bottom_old(d);
  for (int i = 0; i < d; ++i) {
    int j = target_surface == Surface::klein ? d - 1 - i : i;
    VertexId si = plane.head(sigma[i]);
    VertexId tj = plane.head(tau[j]);
    require(si < n && tj < n, ErrorCode::SyntaxError,
            "terminals must not be adjacent to each other");
    require(si != tj, ErrorCode::LoopPresent,
            "paired terminal neighbors coincide; crossing would be a loop");
    Dart at_tj = tau[j].twin();
    rot[tj][plane.rotationIndex(at_tj)] = sigma[i];
    removed[tau[j].edge()] = 1;
    bottom_old[i] = sigma[i];
  }

  // compact edge ids over the surviving edges
  std::vector<EdgeId> new_id(plane.edgeCount(), -1);
  int m = 0;
  for (EdgeId e = 0; e < plane.edgeCount(); ++e)
    if (!removed[e]) new_id[e] = m++;
  auto renum = [&](Dart dd) {
    return Dart(2 * new_id[dd.edge()] + (dd.isForward() ? 0 : 1));
  };
  for (auto& r : rot)
    for (auto& dd : r) dd = renum(dd);

  std::vector<int8_t> signs(m, 1);
  std::vector<Dart> bottom(d);
  for (int i = 0; i < d; ++i) {
    bottom[i] = renum(bottom_old[i]);
    if (target_surface == Surface::klein) signs[bottom[i].edge()] = -1;
  }

  FlatInput input{buildMap(n, std::move(rot), std::move(signs), target_surface),
                  std::move(bottom)};
  input.validate();
  return input;
}

namespace {

// Inserts edge (u,w) with its dart at u placed directly before `before_u` in
// the rotation and likewise at w. Sign +1.
SurfaceMap spliceChord(const SurfaceMap& g, VertexId u, Dart before_u,
                       VertexId w, Dart before_w) {
  const int m = g.edgeCount();
  std::vector<std::vector<Dart>> rot = g.rotations();
  require(u != w, ErrorCode::LoopPresent, "chord endpoints coincide");
  Dart cu = Dart::forward(m), cw = Dart::backward(m);
  rot[u].insert(rot[u].begin() + g.rotationIndex(before_u), cu);
  rot[w].insert(rot[w].begin() + g.rotationIndex(before_w), cw);
  std::vector<int8_t> signs = g.edgeSigns();
  signs.push_back(1);
  return SurfaceMap::build(g.vertexCount(), std::move(rot), std::move(signs),
                           g.surface());
}

// One chord step for the first non-simple face; corners at `skip1`/`skip2`
// (the terminals, or -1) are never used as chord endpoints. Returns false if
// every face is simple.
struct ChordPlan {
  VertexId u, w;
  Dart before_u, before_w;
};

bool planChord(const SurfaceMap& map, VertexId skip1, VertexId skip2,
               ChordPlan* plan) {
  FaceSet fs = faceCycles(map);
  for (const FaceCycle& f : fs.faces) {
    if (f.simple) continue;
    const int L = f.degree();
    std::vector<VertexId> at(L);
    for (int k = 0; k < L; ++k) at[k] = map.tail(f.darts[k]);

    for (int fst = 0; fst < L; ++fst) {
      VertexId v = at[fst];
      // consecutive occurrence pairs of v, starting at fst
      std::vector<int> occ;
      for (int k = 0; k < L; ++k)
        if (at[k] == v) occ.push_back(k);
      if (occ.size() < 2 || occ[0] != fst) continue;
      for (size_t oi = 0; oi < occ.size(); ++oi) {
        int j1 = occ[oi];
        int j2 = occ[(oi + 1) % occ.size()];
        for (int a = (j1 + 1) % L; a != j2; a = (a + 1) % L) {
          if (at[a] == v || at[a] == skip1 || at[a] == skip2) continue;
          for (int b = (j2 + 1) % L; b != j1; b = (b + 1) % L) {
            if (at[b] == v || at[b] == skip1 || at[b] == skip2) continue;
            if (at[b] == at[a]) continue;
            // corner k sits between darts k-1 and k; insert before dart k
            plan->u = at[a];
            plan->before_u = f.darts[a];
            plan->w = at[b];
            plan->before_w = f.darts[b];
            return true;
          }
        }
      }
    }
    fail(ErrorCode::NotCellular,
         "face cannot be made simple by in-face chords (repeated vertex "
         "separated only by terminal corners)");
  }
  return false;
}

}  // namespace

std::pair<FlatInput, std::vector<EdgeId>> augmentFaces(const FlatInput& input) {
  input.validate();
  const int chi = eulerCharacteristic(input.map);
  FlatInput work = input;
  std::vector<EdgeId> added;

  if (input.d() == 0) {
    require(chi == 2, ErrorCode::NotCellular,
            "no bottom crossings and Euler characteristic " +
                std::to_string(chi) + "; embedding is not cellular");
    // plane case: chord the surface map directly
    for (int guard = 0; guard <= 4 * work.map.edgeCount() + 16; ++guard) {
      ChordPlan plan;
      if (!planChord(work.map, -1, -1, &plan)) return {work, added};
      added.push_back(work.map.edgeCount());
      work.map = spliceChord(work.map, plan.u, plan.before_u, plan.w,
                             plan.before_w);
    }
    fail(ErrorCode::NotCellular, "augmentation did not converge");
  }

  require(chi == 0, ErrorCode::NotCellular,
          "surface " + std::string(surfaceName(input.map.surface())) +
              " requires Euler characteristic 0, got " + std::to_string(chi));

  // Chords are planned on the cut graph, where all signs are +1 and faces
  // straddling the boundary are already opened up, then spliced back into
  // the surface map at the same rotation positions. A chord never touches
  // s or t and so never crosses the boundary.
  int guard_limit = 4 * work.map.edgeCount() + 64;
  for (int guard = 0; guard <= guard_limit; ++guard) {
    CutGraph cut = buildCutGraphRaw(work);
    ChordPlan plan;
    if (!planChord(cut.plane, cut.s, cut.t, &plan)) {
      return {work, added};
    }
    // map cut darts back to surface darts: t-stub forward darts occupy the
    // old slot of the crossing updart; everything else keeps its id
    auto toSurface = [&](Dart dd) {
      if (dd.edge() >= cut.augment_base_) {
        int j = dd.edge() - cut.augment_base_;
        for (int i = 0; i < cut.d; ++i)
          if (cut.pair_of_s_stub[i] == j) return work.bottom[i];
        fail(ErrorCode::SyntaxError, "unmapped stub dart");
      }
      return dd;
    };
    require(plan.u < cut.s && plan.w < cut.s, ErrorCode::NotCellular,
            "chord endpoint landed on a terminal");
    Dart bu = toSurface(plan.before_u);
    Dart bw = toSurface(plan.before_w);
    added.push_back(work.map.edgeCount());
    work.map = spliceChord(work.map, plan.u, bu, plan.w, bw);
  }
  fail(ErrorCode::NotCellular, "augmentation did not converge");
}

}  // namespace torvis
