#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "helpers.hpp"
#include "qutrit/meshgen.hpp"

using namespace qutrit;

namespace {

const double kS2 = std::sqrt(2.0);

bool has_vertex(const TriangleMesh& m, double z1, double z2, double w, double tol = 1e-12) {
  return std::any_of(m.vertices.begin(), m.vertices.end(),
                     [&](const Vertex3& v) { return std::hypot(v[0] - z1, v[1] - z2, v[2] - w) <= tol; });
}

const TriangleMesh& find(const std::vector<TriangleMesh>& ms, SurfaceLabel l) {
  for (const auto& m : ms)
    if (m.label == l) return m;
  throw std::logic_error("missing patch");
}

// Distance of a vertex from the surface it claims to lie on.
double surface_error(const TriangleMesh& m, const Vertex3& v) {
  switch (m.label) {
    case SurfaceLabel::SphereCap: return std::abs(std::hypot(v[0], v[1], v[2]) - kS2) + std::max(0.0, -v[2]);
    case SurfaceLabel::BaseTriangle: return std::abs(v[2]);
    case SurfaceLabel::LowerSphere:
      return std::abs(std::hypot(v[0], v[1], v[2]) - 1 / kS2) + std::max(0.0, v[2]);
    default: break;
  }
  if (m.label == SurfaceLabel::LowerCone0 || m.label == SurfaceLabel::LowerCone1 ||
      m.label == SurfaceLabel::LowerCone2)
  {
    const double h = oracle::hull_envelope(v[0], v[1], 100, 1e-13);
    return std::abs(v[2] * v[2] - h * h) + std::max(0.0, v[2]);
  }
  // cuts: inside the half-disc over an edge
  return std::max(0.0, v[0] * v[0] + v[1] * v[1] + v[2] * v[2] - 2.0 - 1e-12) + std::max(0.0, -v[2]);
}

void check_mesh_basics(const TriangleMesh& m) {
  CAPTURE(label_name(m.label));
  for (const auto& f : m.faces) {
    for (auto i : f) REQUIRE(i < m.vertices.size());
    CHECK(m.face_area(f) > 1e-14);
  }
  for (const auto& v : m.vertices) {
    CHECK(base_triangle::contains({v[0], v[1]}, 1e-12));
    CHECK(contains(ModelPoint{v[0], v[1], v[2], m.model}));
  }
}

}  // namespace

TEST_SUITE("meshgen") {

TEST_CASE("resolution rules") {
  CHECK_THROWS_AS(mesh_q1(7), std::invalid_argument);
  CHECK_THROWS_AS(mesh_orbit({0.6, 0.3, 0.1}, 2), std::invalid_argument);
  CHECK(mesh_q1(9)[0].vertices.size() == mesh_q1(10)[0].vertices.size());
  CHECK(mesh_q1(8).size() == 5);
  CHECK(mesh_q2(8).size() == 8);
}

TEST_CASE("Q1 mesh") {
  const auto ms = mesh_q1(16);
  for (const auto& m : ms) {
    check_mesh_basics(m);
    CHECK(m.model == ModelVariant::Q1);
  }
  const auto& cap = find(ms, SurfaceLabel::SphereCap);
  CHECK(has_vertex(cap, 0, 0, kS2, 0));
  for (const auto& v : cap.vertices) CHECK(surface_error(cap, v) <= 1e-12);
  const auto& cut = find(ms, SurfaceLabel::Cut2);
  CHECK(has_vertex(cut, 0, 1 / kS2, 0));
  CHECK(has_vertex(cut, 0, 1 / kS2, std::sqrt(1.5)));
  for (const auto& m : ms)
    for (const auto& v : m.vertices) CHECK(surface_error(m, v) <= 1e-12);
}

TEST_CASE("Q2 mesh") {
  const auto ms = mesh_q2(16);
  for (const auto& m : ms) {
    check_mesh_basics(m);
    CHECK(m.model == ModelVariant::Q2);
  }
  const auto& ls = find(ms, SurfaceLabel::LowerSphere);
  CHECK(has_vertex(ls, 0, 0, -std::sqrt(0.5), 0));
  double lowest = 0;
  for (const auto& m : ms)
    for (const auto& v : m.vertices) lowest = std::min(lowest, v[2]);
  CHECK(std::abs(lowest + 1 / kS2) <= 1e-15);
  CHECK(has_vertex(find(ms, SurfaceLabel::LowerCone2), 0, -kS2, 0));
  for (const auto& m : ms)
    for (const auto& v : m.vertices) CHECK(surface_error(m, v) <= 1e-8);
  // lower heights vanish exactly on the triangle edges
  for (const auto& m : ms) {
    if (m.label == SurfaceLabel::SphereCap || m.label == SurfaceLabel::Cut0 || m.label == SurfaceLabel::Cut1 ||
        m.label == SurfaceLabel::Cut2)
      continue;
    for (const auto& v : m.vertices) {
      const auto b = base_triangle::barycentric({v[0], v[1]});
      if (std::min({b[0], b[1], b[2]}) < 1e-14) CHECK(v[2] == 0.0);
    }
  }
  // lower sphere and cones meet along the medial edges
  const auto& c0 = find(ms, SurfaceLabel::LowerCone0);
  int shared = 0;
  for (const auto& v : c0.vertices)
    if (has_vertex(ls, v[0], v[1], v[2], 1e-15)) ++shared;
  CHECK(shared == 16 / 2 + 1);
}

TEST_CASE("patches share seams") {
  for (const auto& ms : {mesh_q1(12), mesh_q2(12)}) {
    // every vertex on the rim of the triangle (w = 0 cut boundary or cap edge)
    // that a patch puts on the boundary must be matched by some other patch
    std::vector<Vertex3> all;
    std::vector<int> owner;
    for (std::size_t k = 0; k < ms.size(); ++k)
      for (const auto& v : ms[k].vertices) {
        all.push_back(v);
        owner.push_back(static_cast<int>(k));
      }
    int unmatched = 0;
    for (std::size_t k = 0; k < ms.size(); ++k) {
      if (ms[k].label != SurfaceLabel::SphereCap) continue;
      for (const auto& v : ms[k].vertices) {
        const auto b = base_triangle::barycentric({v[0], v[1]});
        if (std::min({b[0], b[1], b[2]}) > 1e-12) continue;
        bool found = false;
        for (std::size_t i = 0; i < all.size() && !found; ++i)
          found = owner[i] != static_cast<int>(k) &&
                  std::hypot(all[i][0] - v[0], all[i][1] - v[1], all[i][2] - v[2]) <= 1e-9;
        if (!found) ++unmatched;
      }
    }
    CHECK(unmatched == 0);
  }
}

TEST_CASE("orbit meshes") {
  const TriangleMesh hex = mesh_orbit({0.6, 0.3, 0.1}, 16);
  CHECK(hex.label == SurfaceLabel::Orbit);
  CHECK(!hex.faces.empty());
  for (const auto& v : hex.vertices) {
    CHECK(std::abs(std::hypot(v[0], v[1], v[2]) - std::sqrt(0.38)) <= 1e-12);
    CHECK(birkhoff_polygon({0.6, 0.3, 0.1}).contains({v[0], v[1]}));
  }
  CHECK(has_vertex(hex, 0.3 * std::sqrt(1.5), 0.7 / kS2, 0, 1e-7));
  const TriangleMesh point = mesh_orbit({1.0 / 3, 1.0 / 3, 1.0 / 3}, 8);
  CHECK(point.vertices.size() == 1);
  CHECK(point.faces.empty());
  // pure spectrum: the orbit is the Q1 cap
  const TriangleMesh pure = mesh_orbit({1, 0, 0}, 16);
  const auto q1 = mesh_q1(16);
  const auto& cap = q1[0];
  CHECK(pure.vertices.size() == cap.vertices.size());
  for (const auto& v : pure.vertices) CHECK(has_vertex(cap, v[0], v[1], v[2], 1e-12));
  for (const auto& f : pure.faces) CHECK(pure.face_area(f) > 1e-14);
}

TEST_CASE("faces wind outward") {
  const auto q1 = mesh_q1(8);
  const auto& cap = q1[0];
  for (const auto& f : cap.faces) {
    const auto& a = cap.vertices[f[0]];
    const auto& b = cap.vertices[f[1]];
    const auto& c = cap.vertices[f[2]];
    const double nx = (b[1] - a[1]) * (c[2] - a[2]) - (b[2] - a[2]) * (c[1] - a[1]);
    const double ny = (b[2] - a[2]) * (c[0] - a[0]) - (b[0] - a[0]) * (c[2] - a[2]);
    const double nz = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    CHECK(nx * (a[0] + b[0] + c[0]) + ny * (a[1] + b[1] + c[1]) + nz * (a[2] + b[2] + c[2]) > 0);
  }
}

TEST_CASE("refinement is monotone") {
  std::size_t prev_v = 0, prev_f = 0;
  for (int n : {8, 12, 16, 24}) {
    std::size_t nv = 0, nf = 0;
    for (const auto& m : mesh_q2(n)) {
      nv += m.vertices.size();
      nf += m.faces.size();
    }
    CHECK(nv > prev_v);
    CHECK(nf > prev_f);
    prev_v = nv;
    prev_f = nf;
  }
}

TEST_CASE("export formats") {
  const auto ms = mesh_q2(8);
  std::size_t nv = 0, nf = 0;
  for (const auto& m : ms) {
    nv += m.vertices.size();
    nf += m.faces.size();
  }
  std::istringstream obj(export_meshes(ms, ExportFormat::Obj));
  const TriangleMesh back = parse_obj(obj);
  REQUIRE(back.vertices.size() == nv);
  CHECK(back.faces.size() == nf);
  std::size_t i = 0;
  double err = 0;
  for (const auto& m : ms)
    for (const auto& v : m.vertices) {
      for (int k = 0; k < 3; ++k) err = std::max(err, std::abs(v[k] - back.vertices[i][k]));
      ++i;
    }
  CHECK(err <= 1e-15);

  const std::string ply = export_meshes(ms, ExportFormat::Ply);
  CHECK(ply.rfind("ply\nformat ascii 1.0\n", 0) == 0);
  CHECK(ply.find("element vertex " + std::to_string(nv) + "\n") != std::string::npos);
  CHECK(ply.find("element face " + std::to_string(nf) + "\n") != std::string::npos);
  CHECK(std::count(ply.begin(), ply.end(), '\n') == static_cast<long>(9 + nv + nf));

  const std::string csv = export_meshes(ms, ExportFormat::Csv);
  CHECK(csv.rfind("z1,z2,w\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(1 + nv));
  CHECK(export_points({}) == "z1,z2,w\n");
  CHECK(parse_export_format("ply") == ExportFormat::Ply);
  CHECK_THROWS_AS(parse_export_format("stl"), std::invalid_argument);
  std::istringstream bad("v 1 2\n");
  CHECK_THROWS(parse_obj(bad));
  std::istringstream range("v 0 0 0\nf 1 2 3\n");
  CHECK_THROWS(parse_obj(range));
}

TEST_CASE("format_number") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_number(std::sqrt(2.0))) == std::sqrt(2.0));
}

}  // TEST_SUITE
