#include "fvroe/mesh2d.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace fvroe {

BoundaryMarker marker_from_token(const std::string& token) {
  if (token == "wall") return BoundaryMarker::wall;
  if (token == "fluid") return BoundaryMarker::fluid;
  if (token == "inflow") return BoundaryMarker::inflow;
  if (token == "outflow") return BoundaryMarker::outflow;
  throw MalformedMesh("unknown boundary marker: " + token);
}

namespace {

double cross(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

// Shoelace area (signed) and area centroid of a simple polygon.
void polygon_geometry(const std::vector<Vertex>& vs, const std::vector<int>& ids,
                      double& area, Vec2& centroid) {
  double a2 = 0.0, cx = 0.0, cy = 0.0;
  const std::size_t n = ids.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p = vs[static_cast<std::size_t>(ids[i])].pos;
    const Vec2& q = vs[static_cast<std::size_t>(ids[(i + 1) % n])].pos;
    const double w = cross(p, q);
    a2 += w;
    cx += (p[0] + q[0]) * w;
    cy += (p[1] + q[1]) * w;
  }
  area = 0.5 * a2;
  centroid = {cx / (3.0 * a2), cy / (3.0 * a2)};
}

bool quad_is_convex(const std::vector<Vertex>& vs, const std::vector<int>& ids) {
  for (std::size_t i = 0; i < 4; ++i) {
    const Vec2& a = vs[static_cast<std::size_t>(ids[i])].pos;
    const Vec2& b = vs[static_cast<std::size_t>(ids[(i + 1) % 4])].pos;
    const Vec2& c = vs[static_cast<std::size_t>(ids[(i + 2) % 4])].pos;
    if (cross(b - a, c - b) <= 0.0) return false;
  }
  return true;
}

// Proper intersection of segment [p0,p1] with segment [q0,q1]; returns the
// parameter along [p0,p1] or a negative value when they miss.
double segment_intersection(const Vec2& p0, const Vec2& p1, const Vec2& q0,
                            const Vec2& q1) {
  const Vec2 d = p1 - p0;
  const Vec2 e = q1 - q0;
  const double den = cross(d, e);
  if (den == 0.0) return -1.0;
  const Vec2 w = q0 - p0;
  const double t = cross(w, e) / den;  // along the barycenter segment
  const double s = cross(w, d) / den;  // along the face
  if (t <= 0.0 || t >= 1.0 || s < -1e-12 || s > 1.0 + 1e-12) return -1.0;
  return t;
}

struct Parser {
  std::istringstream in;
  int line_no = 0;

  explicit Parser(const std::string& text) : in(text) {}

  // Next non-empty line with comments stripped.
  bool next_line(std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream probe(line);
      std::string tok;
      if (probe >> tok) {
        out = line;
        return true;
      }
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw MalformedMesh("mesh line " + std::to_string(line_no) + ": " + msg);
  }
};

}  // namespace

UnstructuredMesh build_mesh(const std::string& text) {
  Parser p(text);
  UnstructuredMesh mesh;
  std::string line, word;

  if (!p.next_line(line)) p.fail("empty mesh file");
  std::istringstream hv(line);
  int nv = 0;
  if (!(hv >> word >> nv) || word != "vertices" || nv <= 0) p.fail("expected 'vertices N'");
  mesh.vertices.resize(static_cast<std::size_t>(nv));
  for (int i = 0; i < nv; ++i) {
    if (!p.next_line(line)) p.fail("missing vertex line");
    std::istringstream ls(line);
    if (!(ls >> mesh.vertices[static_cast<std::size_t>(i)].pos[0] >>
          mesh.vertices[static_cast<std::size_t>(i)].pos[1]))
      p.fail("bad vertex coordinates");
    if (!std::isfinite(mesh.vertices[static_cast<std::size_t>(i)].pos[0]) ||
        !std::isfinite(mesh.vertices[static_cast<std::size_t>(i)].pos[1]))
      p.fail("non-finite vertex coordinate");
  }

  if (!p.next_line(line)) p.fail("missing 'cells' section");
  std::istringstream hc(line);
  int nc = 0;
  if (!(hc >> word >> nc) || word != "cells" || nc <= 0) p.fail("expected 'cells M'");
  mesh.cells.resize(static_cast<std::size_t>(nc));
  for (int i = 0; i < nc; ++i) {
    if (!p.next_line(line)) p.fail("missing cell line");
    std::istringstream ls(line);
    int k = 0;
    if (!(ls >> k) || (k != 3 && k != 4)) p.fail("cells must have 3 or 4 vertices");
    Cell& cell = mesh.cells[static_cast<std::size_t>(i)];
    cell.vertices.resize(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      if (!(ls >> cell.vertices[static_cast<std::size_t>(j)])) p.fail("missing vertex index");
      if (cell.vertices[static_cast<std::size_t>(j)] < 0 ||
          cell.vertices[static_cast<std::size_t>(j)] >= nv)
        p.fail("vertex index out of range");
    }
    polygon_geometry(mesh.vertices, cell.vertices, cell.area, cell.centroid);
    if (!(cell.area > 0.0))
      p.fail("cell " + std::to_string(i) + " is not counterclockwise or has zero area");
    if (k == 4 && !quad_is_convex(mesh.vertices, cell.vertices))
      p.fail("cell " + std::to_string(i) + " is a non-convex or self-intersecting quad");
  }

  // Faces from cell edges; sorted vertex pair identifies a face.
  std::map<std::pair<int, int>, int> edge_to_face;
  for (int ci = 0; ci < nc; ++ci) {
    Cell& cell = mesh.cells[static_cast<std::size_t>(ci)];
    const int k = static_cast<int>(cell.vertices.size());
    for (int j = 0; j < k; ++j) {
      const int a = cell.vertices[static_cast<std::size_t>(j)];
      const int b = cell.vertices[static_cast<std::size_t>((j + 1) % k)];
      const std::pair<int, int> key = std::minmax(a, b);
      auto it = edge_to_face.find(key);
      if (it == edge_to_face.end()) {
        Face f;
        f.v0 = a;
        f.v1 = b;
        const Vec2 d = mesh.vertices[static_cast<std::size_t>(b)].pos -
                       mesh.vertices[static_cast<std::size_t>(a)].pos;
        f.length = std::hypot(d[0], d[1]);
        if (!(f.length > 0.0)) throw MalformedMesh("zero-length face");
        // Edge traversed CCW by the left cell: outward normal is the edge
        // direction rotated clockwise.
        f.normal = {d[1] / f.length, -d[0] / f.length};
        f.left_cell = ci;
        const int fi = static_cast<int>(mesh.faces.size());
        mesh.faces.push_back(f);
        edge_to_face.emplace(key, fi);
        cell.faces.push_back(fi);
      } else {
        Face& f = mesh.faces[static_cast<std::size_t>(it->second)];
        if (f.right_cell != -1)
          throw MalformedMesh("face shared by more than two cells");
        f.right_cell = ci;
        cell.faces.push_back(it->second);
      }
    }
  }

  if (!p.next_line(line)) p.fail("missing 'boundary' section");
  std::istringstream hb(line);
  int nb = 0;
  if (!(hb >> word >> nb) || word != "boundary" || nb < 0) p.fail("expected 'boundary B'");
  for (int i = 0; i < nb; ++i) {
    if (!p.next_line(line)) p.fail("missing boundary line");
    std::istringstream ls(line);
    int a = 0, b = 0;
    std::string marker;
    if (!(ls >> a >> b >> marker)) p.fail("bad boundary line");
    const auto it = edge_to_face.find(std::pair<int, int>(std::minmax(a, b)));
    if (it == edge_to_face.end()) p.fail("boundary edge not present in any cell");
    Face& f = mesh.faces[static_cast<std::size_t>(it->second)];
    if (f.right_cell != -1) p.fail("marked edge is internal");
    if (f.marker != BoundaryMarker::none) p.fail("duplicate boundary marker");
    f.marker = marker_from_token(marker);
  }

  // Interface points, and the check that every boundary edge got a marker.
  for (std::size_t fi = 0; fi < mesh.faces.size(); ++fi) {
    Face& f = mesh.faces[fi];
    const Vec2 a = mesh.vertices[static_cast<std::size_t>(f.v0)].pos;
    const Vec2 b = mesh.vertices[static_cast<std::size_t>(f.v1)].pos;
    if (f.right_cell == -1) {
      if (f.marker == BoundaryMarker::none)
        throw MalformedMesh("boundary edge (" + std::to_string(f.v0) + "," +
                            std::to_string(f.v1) + ") has no marker");
      f.point = 0.5 * (a + b);
      f.theta = 1.0;
      continue;
    }
    const Vec2 xl = mesh.cells[static_cast<std::size_t>(f.left_cell)].centroid;
    const Vec2 xr = mesh.cells[static_cast<std::size_t>(f.right_cell)].centroid;
    const double t = segment_intersection(xl, xr, a, b);
    if (t > 0.0) {
      f.theta = t;
      f.point = xl + t * (xr - xl);
    } else {
      // Distorted pair: fall back to the face midpoint projected onto the
      // barycenter segment.
      const Vec2 mid = 0.5 * (a + b);
      const Vec2 d = xr - xl;
      double proj = dot(mid - xl, d) / dot(d, d);
      proj = std::clamp(proj, 0.05, 0.95);
      f.theta = proj;
      f.point = mid;
      mesh.warnings.push_back("face " + std::to_string(fi) +
                              ": barycenter segment misses the face, using midpoint");
    }
  }

  return mesh;
}

UnstructuredMesh load_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedMesh("cannot open mesh file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return build_mesh(buf.str());
}

Vec2 UnstructuredMesh::outward_normal(int k, int f) const {
  const Face& face = faces[static_cast<std::size_t>(f)];
  return face.left_cell == k ? face.normal : -1.0 * face.normal;
}

int UnstructuredMesh::neighbor(int k, int f) const {
  const Face& face = faces[static_cast<std::size_t>(f)];
  return face.left_cell == k ? face.right_cell : face.left_cell;
}

std::pair<Vec2, double> UnstructuredMesh::interface_point(int k, int f) const {
  const Face& face = faces[static_cast<std::size_t>(f)];
  if (face.right_cell == -1) return {face.point, 1.0};
  const double theta = face.left_cell == k ? face.theta : 1.0 - face.theta;
  return {face.point, theta};
}

std::vector<NeighborRef> UnstructuredMesh::neighbor_set(int k, BoundaryMode mode) const {
  std::vector<NeighborRef> out;
  const Cell& cell = cells[static_cast<std::size_t>(k)];
  for (int f : cell.faces) {
    const int nb = neighbor(k, f);
    if (nb >= 0) {
      out.push_back({NeighborRef::cell, nb});
    } else if (mode == BoundaryMode::wall &&
               faces[static_cast<std::size_t>(f)].marker == BoundaryMarker::wall) {
      out.push_back({NeighborRef::face, f});
    }
  }
  return out;
}

}  // namespace fvroe
