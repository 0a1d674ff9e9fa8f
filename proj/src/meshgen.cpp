#include "qutrit/meshgen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qutrit {

std::string_view label_name(SurfaceLabel label) {
  switch (label) {
    case SurfaceLabel::SphereCap: return "sphere-cap";
    case SurfaceLabel::Cut0: return "cut-0";
    case SurfaceLabel::Cut1: return "cut-1";
    case SurfaceLabel::Cut2: return "cut-2";
    case SurfaceLabel::LowerCone0: return "lower-cone-0";
    case SurfaceLabel::LowerCone1: return "lower-cone-1";
    case SurfaceLabel::LowerCone2: return "lower-cone-2";
    case SurfaceLabel::LowerSphere: return "lower-sphere";
    case SurfaceLabel::BaseTriangle: return "base-triangle";
    case SurfaceLabel::Orbit: return "orbit";
  }
  return "?";
}

namespace {

// Barycentric coordinates with respect to the base triangle. Heights are
// lifted from these rather than from (z1, z2): with e2 = b0 b1 + b0 b2 + b1 b2
//   upper sphere  w^2 = 6 e2
//   lower sphere  w^2 = 6 e2 - 3/2
//   cone k        w^2 = 6 b_i b_j   (i, j != k)
// so a zero weight gives an exact zero height and shared edges agree bitwise.
using Bary = std::array<double, 3>;
using Lift = std::function<double(const Bary&)>;
using Outward = std::function<Vertex3(const Vertex3&)>;

struct Corner {
  PlanePoint p;
  Bary b;
};

Vertex3 sub(const Vertex3& a, const Vertex3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Vertex3 cross(const Vertex3& a, const Vertex3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vertex3& a, const Vertex3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double e2(const Bary& b) { return b[0] * b[1] + b[0] * b[2] + b[1] * b[2]; }

int even_resolution(int resolution) {
  if (resolution < kMinResolution)
    throw std::invalid_argument("mesh resolution must be at least " + std::to_string(kMinResolution));
  return resolution + (resolution % 2);
}

Corner vertex_corner(int k) {
  Bary b{};
  b[k] = 1.0;
  return {base_triangle::vertex(k), b};
}

// midpoint of the edge opposite vertex k
Corner midpoint_corner(int k) {
  Bary b{0.5, 0.5, 0.5};
  b[k] = 0.0;
  return {base_triangle::edge_midpoint(k), b};
}

const Corner kCenter{{0.0, 0.0}, {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}};

// Barycentric grid over the triangle (a, b, c), appended to `mesh`.
void add_triangle_grid(TriangleMesh& mesh, const Corner& a, const Corner& b, const Corner& c, int n,
                       const Lift& lift) {
  const auto base = static_cast<std::uint32_t>(mesh.vertices.size());
  std::vector<std::vector<std::uint32_t>> index(n + 1);
  std::uint32_t next = base;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n - i; ++j) {
      const double wb = static_cast<double>(i) / n;
      const double wc = static_cast<double>(j) / n;
      const double wa = static_cast<double>(n - i - j) / n;
      const PlanePoint p{wa * a.p.z1 + wb * b.p.z1 + wc * c.p.z1, wa * a.p.z2 + wb * b.p.z2 + wc * c.p.z2};
      Bary q;
      for (int k = 0; k < 3; ++k) q[k] = wa * a.b[k] + wb * b.b[k] + wc * c.b[k];
      mesh.vertices.push_back({p.z1, p.z2, lift(q)});
      index[i].push_back(next++);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n - i; ++j) {
      mesh.faces.push_back({index[i][j], index[i + 1][j], index[i][j + 1]});
      if (j + 1 < n - i) mesh.faces.push_back({index[i + 1][j], index[i + 1][j + 1], index[i][j + 1]});
    }
  }
}

// Fan of grids from `center` over each edge of a convex polygon. The center is
// always a vertex and each polygon edge keeps n subdivisions.
void add_fan(TriangleMesh& mesh, const Corner& center, const std::vector<Corner>& polygon, int n,
             const Lift& lift) {
  for (std::size_t i = 0; i < polygon.size(); ++i)
    add_triangle_grid(mesh, center, polygon[i], polygon[(i + 1) % polygon.size()], n, lift);
}

std::vector<Corner> triangle_corners() { return {vertex_corner(0), vertex_corner(1), vertex_corner(2)}; }

std::vector<Corner> medial_corners() { return {midpoint_corner(2), midpoint_corner(0), midpoint_corner(1)}; }

void orient(TriangleMesh& mesh, const Outward& outward) {
  for (auto& f : mesh.faces) {
    const auto& a = mesh.vertices[f[0]];
    const auto& b = mesh.vertices[f[1]];
    const auto& c = mesh.vertices[f[2]];
    const Vertex3 centroid{(a[0] + b[0] + c[0]) / 3.0, (a[1] + b[1] + c[1]) / 3.0, (a[2] + b[2] + c[2]) / 3.0};
    if (dot(cross(sub(b, a), sub(c, a)), outward(centroid)) < 0.0) std::swap(f[1], f[2]);
  }
}

double upper_lift(const Bary& b) { return std::sqrt(std::max(0.0, 6.0 * e2(b))); }

TriangleMesh sphere_cap(int n) {
  TriangleMesh m{SurfaceLabel::SphereCap, ModelVariant::Q1, {}, {}};
  add_fan(m, kCenter, triangle_corners(), n, upper_lift);
  orient(m, [](const Vertex3& c) { return c; });
  return m;
}

// Vertical half-disc over the edge opposite vertex k; columns follow the
// edge subdivision of the cap so the rim coincides with the cap boundary.
TriangleMesh cut_disc(int k, int n) {
  TriangleMesh m{static_cast<SurfaceLabel>(static_cast<int>(SurfaceLabel::Cut0) + k), ModelVariant::Q1, {}, {}};
  const Corner a = vertex_corner((k + 1) % 3);
  const Corner b = vertex_corner((k + 2) % 3);
  std::vector<std::vector<std::uint32_t>> columns(n + 1);
  for (int c = 0; c <= n; ++c) {
    const double wa = static_cast<double>(n - c) / n;
    const double wb = static_cast<double>(c) / n;
    const PlanePoint p{wa * a.p.z1 + wb * b.p.z1, wa * a.p.z2 + wb * b.p.z2};
    Bary q;
    for (int i = 0; i < 3; ++i) q[i] = wa * a.b[i] + wb * b.b[i];
    const double top = upper_lift(q);
    const int rows = top > 0.0 ? n : 0;
    for (int r = 0; r <= rows; ++r) {
      columns[c].push_back(static_cast<std::uint32_t>(m.vertices.size()));
      const double w = rows == 0 ? 0.0 : (r == rows ? top : top * r / rows);
      m.vertices.push_back({p.z1, p.z2, w});
    }
  }
  for (int c = 0; c < n; ++c) {
    const auto& left = columns[c];
    const auto& right = columns[c + 1];
    if (left.size() == 1) {
      for (std::size_t r = 0; r + 1 < right.size(); ++r) m.faces.push_back({left[0], right[r], right[r + 1]});
    } else if (right.size() == 1) {
      for (std::size_t r = 0; r + 1 < left.size(); ++r) m.faces.push_back({left[r], right[0], left[r + 1]});
    } else {
      for (std::size_t r = 0; r + 1 < left.size(); ++r) {
        m.faces.push_back({left[r], right[r], right[r + 1]});
        m.faces.push_back({left[r], right[r + 1], left[r + 1]});
      }
    }
  }
  const PlanePoint mid = base_triangle::edge_midpoint(k);
  orient(m, [mid](const Vertex3&) { return Vertex3{mid.z1, mid.z2, 0.0}; });
  return m;
}

TriangleMesh base_face(int n) {
  TriangleMesh m{SurfaceLabel::BaseTriangle, ModelVariant::Q1, {}, {}};
  add_fan(m, kCenter, triangle_corners(), n, [](const Bary&) { return 0.0; });
  orient(m, [](const Vertex3&) { return Vertex3{0.0, 0.0, -1.0}; });
  return m;
}

TriangleMesh lower_cone(int k, int half_n) {
  TriangleMesh m{static_cast<SurfaceLabel>(static_cast<int>(SurfaceLabel::LowerCone0) + k), ModelVariant::Q2, {}, {}};
  const int i = (k + 1) % 3;
  const int j = (k + 2) % 3;
  add_triangle_grid(m, vertex_corner(k), midpoint_corner(j), midpoint_corner(i), half_n,
                    [i, j](const Bary& b) { return -std::sqrt(std::max(0.0, 6.0 * b[i] * b[j])); });
  const PlanePoint v = base_triangle::vertex(k);
  orient(m, [v](const Vertex3& c) {
    const double ax = -v.z1 / std::sqrt(2.0);
    const double ay = -v.z2 / std::sqrt(2.0);
    const double s = (c[0] - v.z1) * ax + (c[1] - v.z2) * ay;
    return Vertex3{c[0] - (v.z1 + s * ax), c[1] - (v.z2 + s * ay), c[2]};
  });
  return m;
}

TriangleMesh lower_sphere(int half_n) {
  TriangleMesh m{SurfaceLabel::LowerSphere, ModelVariant::Q2, {}, {}};
  add_fan(m, kCenter, medial_corners(), half_n,
          [](const Bary& b) { return -std::sqrt(std::max(0.0, 6.0 * e2(b) - 1.5)); });
  orient(m, [](const Vertex3& c) { return c; });
  return m;
}

}  // namespace

double TriangleMesh::face_area(const Face& f) const {
  const auto& a = vertices[f[0]];
  const Vertex3 n = cross(sub(vertices[f[1]], a), sub(vertices[f[2]], a));
  return 0.5 * std::sqrt(dot(n, n));
}

std::vector<TriangleMesh> mesh_q1(int resolution) {
  const int n = even_resolution(resolution);
  return {sphere_cap(n), cut_disc(0, n), cut_disc(1, n), cut_disc(2, n), base_face(n)};
}

std::vector<TriangleMesh> mesh_q2(int resolution) {
  const int n = even_resolution(resolution);
  std::vector<TriangleMesh> out{sphere_cap(n), cut_disc(0, n), cut_disc(1, n), cut_disc(2, n),
                                lower_cone(0, n / 2), lower_cone(1, n / 2), lower_cone(2, n / 2),
                                lower_sphere(n / 2)};
  for (auto& m : out) m.model = ModelVariant::Q2;
  return out;
}

TriangleMesh mesh_orbit(const EigenvalueTriple& lambda, int resolution) {
  const int n = even_resolution(resolution);
  const PlanarPolygon poly = birkhoff_polygon(lambda);
  // |z|^2 = 2 - 6 e2, so r^2 - |z|^2 = 3 sum(l^2) - 3 + 6 e2
  const auto& l = lambda.values();
  const double offset = 3.0 * (l[0] * l[0] + l[1] * l[1] + l[2] * l[2]) - 3.0;
  const Lift lift = [offset](const Bary& b) { return std::sqrt(std::max(0.0, offset + 6.0 * e2(b))); };
  // hull vertices are permutations of lambda; recover the exact weights
  std::array<Bary, 6> perms{};
  std::array<int, 3> idx{0, 1, 2};
  for (auto& p : perms) {
    p = {l[idx[0]], l[idx[1]], l[idx[2]]};
    std::next_permutation(idx.begin(), idx.end());
  }
  std::vector<Corner> corners;
  for (const auto& v : poly.vertices) {
    Corner c{v, base_triangle::barycentric(v)};
    for (const auto& p : perms) {
      const PlanePoint q = base_triangle::from_barycentric(p);
      if (std::hypot(q.z1 - v.z1, q.z2 - v.z2) < 1e-9) {
        c.b = p;
        break;
      }
    }
    corners.push_back(c);
  }
  TriangleMesh m{SurfaceLabel::Orbit, ModelVariant::Q1, {}, {}};
  if (corners.size() == 1) {
    m.vertices.push_back({corners[0].p.z1, corners[0].p.z2, lift(corners[0].b)});
  } else {
    Corner center{{0.0, 0.0}, {0.0, 0.0, 0.0}};
    for (const auto& c : corners) {
      center.p.z1 += c.p.z1 / corners.size();
      center.p.z2 += c.p.z2 / corners.size();
      for (int k = 0; k < 3; ++k) center.b[k] += c.b[k] / corners.size();
    }
    add_fan(m, center, corners, n, lift);
  }
  orient(m, [](const Vertex3& c) { return c; });
  return m;
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "obj") return ExportFormat::Obj;
  if (name == "ply") return ExportFormat::Ply;
  if (name == "csv") return ExportFormat::Csv;
  throw std::invalid_argument("unknown export format '" + std::string(name) + "'");
}

std::string format_number(double x) {
  if (x == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

void write_obj(std::ostream& out, const std::vector<TriangleMesh>& meshes) {
  for (const auto& m : meshes)
    for (const auto& v : m.vertices)
      out << "v " << format_number(v[0]) << ' ' << format_number(v[1]) << ' ' << format_number(v[2]) << '\n';
  std::size_t offset = 1;
  for (const auto& m : meshes) {
    for (const auto& f : m.faces)
      out << "f " << f[0] + offset << ' ' << f[1] + offset << ' ' << f[2] + offset << '\n';
    offset += m.vertices.size();
  }
}

void write_ply(std::ostream& out, const std::vector<TriangleMesh>& meshes) {
  std::size_t nv = 0;
  std::size_t nf = 0;
  for (const auto& m : meshes) {
    nv += m.vertices.size();
    nf += m.faces.size();
  }
  out << "ply\nformat ascii 1.0\n"
      << "element vertex " << nv << "\nproperty double x\nproperty double y\nproperty double z\n"
      << "element face " << nf << "\nproperty list uchar uint vertex_indices\nend_header\n";
  for (const auto& m : meshes)
    for (const auto& v : m.vertices)
      out << format_number(v[0]) << ' ' << format_number(v[1]) << ' ' << format_number(v[2]) << '\n';
  std::size_t offset = 0;
  for (const auto& m : meshes) {
    for (const auto& f : m.faces) out << "3 " << f[0] + offset << ' ' << f[1] + offset << ' ' << f[2] + offset << '\n';
    offset += m.vertices.size();
  }
}

void write_csv(std::ostream& out, const std::vector<Vertex3>& points) {
  out << "z1,z2,w\n";
  for (const auto& p : points)
    out << format_number(p[0]) << ',' << format_number(p[1]) << ',' << format_number(p[2]) << '\n';
}

std::string export_meshes(const std::vector<TriangleMesh>& meshes, ExportFormat format) {
  std::ostringstream os;
  switch (format) {
    case ExportFormat::Obj: write_obj(os, meshes); break;
    case ExportFormat::Ply: write_ply(os, meshes); break;
    case ExportFormat::Csv: {
      std::vector<Vertex3> pts;
      for (const auto& m : meshes) pts.insert(pts.end(), m.vertices.begin(), m.vertices.end());
      write_csv(os, pts);
      break;
    }
  }
  return os.str();
}

std::string export_points(const std::vector<Vertex3>& points) {
  std::ostringstream os;
  write_csv(os, points);
  return os.str();
}

TriangleMesh parse_obj(std::istream& in) {
  TriangleMesh m;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      Vertex3 v{};
      if (!(ls >> v[0] >> v[1] >> v[2])) throw std::runtime_error("malformed OBJ vertex: " + line);
      m.vertices.push_back(v);
    } else if (tag == "f") {
      long long a = 0, b = 0, c = 0;
      if (!(ls >> a >> b >> c) || a < 1 || b < 1 || c < 1) throw std::runtime_error("malformed OBJ face: " + line);
      m.faces.push_back({static_cast<std::uint32_t>(a - 1), static_cast<std::uint32_t>(b - 1),
                         static_cast<std::uint32_t>(c - 1)});
    }
  }
  for (const auto& f : m.faces)
    for (auto i : f)
      if (i >= m.vertices.size()) throw std::runtime_error("OBJ face index out of range");
  return m;
}

}  // namespace qutrit
