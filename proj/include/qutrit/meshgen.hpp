#pragma once

// Triangle meshes of the model surfaces and of unitary-orbit patches, with
// OBJ / PLY / CSV export.
//
// Every curved patch is a barycentric grid over planar triangles in the
// (z1, z2) plane. Heights are evaluated from the barycentric weights of the
// base triangle, so patches sharing an edge share vertex positions along it
// exactly and heights vanish exactly on the triangle edges. Patches over the
// base and medial triangles are fans of three grids from the origin, which
// keeps the poles as vertices.
//   sphere-cap      over the base triangle, w = sqrt(2 - |z|^2)
//   cut-k           vertical half-disc over the edge opposite vertex k
//   base-triangle   w = 0 (Q1 only)
//   lower-cone-k    over the corner triangle at vertex k (vertex + the two
//                   adjacent edge midpoints), w = -cone height
//   lower-sphere    over the medial triangle, w = -sqrt(1/2 - |z|^2)
// Faces wind counterclockwise seen from outside.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qutrit/model.hpp"
#include "qutrit/orbits.hpp"

namespace qutrit {

enum class SurfaceLabel {
  SphereCap,
  Cut0,
  Cut1,
  Cut2,
  LowerCone0,
  LowerCone1,
  LowerCone2,
  LowerSphere,
  BaseTriangle,
  Orbit,
};

std::string_view label_name(SurfaceLabel label);

using Vertex3 = std::array<double, 3>;  // (z1, z2, w)
using Face = std::array<std::uint32_t, 3>;

struct TriangleMesh {
  SurfaceLabel label = SurfaceLabel::SphereCap;
  ModelVariant model = ModelVariant::Q1;
  std::vector<Vertex3> vertices;
  std::vector<Face> faces;

  double face_area(const Face& f) const;
};

inline constexpr int kMinResolution = 8;

/// Sphere cap, three cuts and the base triangle. Odd resolutions are rounded
/// up to the next even number.
std::vector<TriangleMesh> mesh_q1(int resolution);

/// Sphere cap, three cuts, three lower cones and the lower spherical patch.
std::vector<TriangleMesh> mesh_q2(int resolution);

/// Spherical patch of radius orbit_radius(lambda) over birkhoff_polygon(lambda).
/// A fully degenerate spectrum gives a single vertex and no faces. Resolution
/// follows the same rules as the model meshes.
TriangleMesh mesh_orbit(const EigenvalueTriple& lambda, int resolution);

enum class ExportFormat { Obj, Ply, Csv };

ExportFormat parse_export_format(std::string_view name);

/// Shortest-exact-enough decimal: 17 significant digits, "-0" printed as "0".
std::string format_number(double x);

void write_obj(std::ostream& out, const std::vector<TriangleMesh>& meshes);
void write_ply(std::ostream& out, const std::vector<TriangleMesh>& meshes);
/// Header "z1,z2,w", then one row per point.
void write_csv(std::ostream& out, const std::vector<Vertex3>& points);

/// Writes meshes in the requested format; CSV emits the vertex cloud.
std::string export_meshes(const std::vector<TriangleMesh>& meshes, ExportFormat format);
std::string export_points(const std::vector<Vertex3>& points);

/// Reads `v` and `f` records of an OBJ stream into one mesh (0-based faces).
TriangleMesh parse_obj(std::istream& in);

}  // namespace qutrit
