#ifndef MINK3_POLYTOPE_HPP
#define MINK3_POLYTOPE_HPP

#include <optional>
#include <string>
#include <vector>

#include "mink3/linalg.hpp"

namespace mink3 {

/// Closed halfspace {x : <normal, x> <= offset} in canonical scaling: the
/// first nonzero coordinate of the normal is +-1 (direction preserved).
struct HalfSpace {
  Vec3 normal;
  Scalar offset;

  static HalfSpace canonical(Vec3 n, Scalar c);
  /// Halfspace of the antipodal facet -F of a centrally symmetric body.
  HalfSpace reflected() const { return canonical(-normal, offset); }

  /// sign(<normal, p> - offset): -1 inside, 0 on the plane, +1 outside.
  int side(const Point3& p) const { return (dot(normal, p) - offset).sign(); }

  friend bool operator==(const HalfSpace& a, const HalfSpace& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
};

/// Lex comparison used for canonical facet ordering and plane grouping.
int halfspace_cmp(const HalfSpace& a, const HalfSpace& b);

/// Hyperplane {x : <normal, x> = offset}; canonical with first nonzero
/// normal coordinate equal to +1.
struct Plane {
  Vec3 normal;
  Scalar offset;

  static Plane canonical(Vec3 n, Scalar c);
  int side(const Point3& p) const { return (dot(normal, p) - offset).sign(); }
  bool contains(const Point3& p) const { return side(p) == 0; }
  friend bool operator==(const Plane& a, const Plane& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
};

struct FaceRef {
  int dim = -1;  // 0 vertex, 1 edge, 2 two-face
  int index = -1;

  friend bool operator==(const FaceRef& a, const FaceRef& b) {
    return a.dim == b.dim && a.index == b.index;
  }
};

struct Edge {
  int v0, v1;      // vertex indices, v0 < v1
  int f0, f1;      // adjacent facet indices (f1 = -1 below dimension 3)
};

/// A 2-face: supporting halfspace plus its vertex cycle, counterclockwise
/// as seen from outside, rotated to start at the smallest vertex index.
struct Face2 {
  HalfSpace plane;
  std::vector<int> cycle;
};

/// Exact convex polytope of dimension 0..3 embedded in R^3.
///
/// Vertices are sorted lexicographically and are always exactly the extreme
/// points. For dim 3 `facets` are the facet halfspaces (aligned with
/// `faces2`); for dim 2 they are the edge-supporting halfspaces within the
/// affine hull (aligned with `edges`); for dim 1 the two endpoint
/// halfspaces along the line. `affine_hull` holds 3-dim equality planes.
struct Polytope3 {
  int dim = -1;
  std::vector<Point3> vertices;
  std::vector<HalfSpace> facets;
  std::vector<Plane> affine_hull;
  std::vector<Edge> edges;
  std::vector<Face2> faces2;
  std::vector<int> polygon_cycle;  // dim 2 only: ccw vertex cycle
  bool symmetric = false;
  std::string name;

  int vertex_index(const Point3& p) const;  // -1 when absent
  std::vector<int> facets_of_vertex(int vi) const;
  std::vector<int> neighbors_of_vertex(int vi) const;
  int edge_between(int va, int vb) const;  // -1 when absent
  /// Index of the facet whose halfspace is the negation of facet f
  /// (requires the symmetric flag); InternalError when missing.
  int antipodal_facet(int f) const;
  /// 3D vertex cycle of a 2-face.
  std::vector<Point3> face_points(const Face2& f) const;
};

struct Location {
  enum class Kind { Outside, Interior, OnFace } kind;
  FaceRef face;  // valid iff kind == OnFace

  bool boundary() const { return kind == Kind::OnFace; }
};

/// Exact convex hull with full face lattice. Degenerate input (coplanar,
/// collinear, repeated points) yields lower-dimensional polytopes.
Polytope3 convex_hull(std::vector<Point3> points);

/// Exact point location. Interior means relative interior of the polytope;
/// OnFace returns the unique smallest proper face containing q.
Location locate(const Polytope3& p, const Point3& q);

inline bool contains(const Polytope3& p, const Point3& q) {
  return locate(p, q).kind != Location::Kind::Outside;
}

Polytope3 difference_body(const std::vector<Point3>& points);
Polytope3 difference_body(const Polytope3& p);

/// Polar polytope; requires dim 3 and the origin interior.
Polytope3 polar(const Polytope3& p);

/// Image under x -> m x + t with det(m) != 0.
Polytope3 affine_image(const Polytope3& p, const Mat3& m, const Vec3& t);

/// Orthogonal (in the Euclidean sense) exact 2D frame spanning the plane
/// through `origin` with the given normal.
struct Frame {
  Vec3 origin, u, v;  // u . v = 0, u x v a positive multiple of the normal

  static Frame for_plane(const Vec3& normal, const Vec3& origin);
  Vec2 project(const Point3& p) const;
  Point3 lift(const Vec2& q) const;
};

/// Polygon section of a symmetric full-dimensional polytope by the plane
/// through the origin with the given normal; vertices in ccw cyclic order.
struct Section {
  Frame frame;
  std::vector<Vec2> polygon;

  std::vector<Point3> polygon3() const;
};

Section planar_section(const Polytope3& p, const Vec3& normal);

/// 2D convex hull, counterclockwise, collinear points dropped.
std::vector<Vec2> hull2d(std::vector<Vec2> pts);

/// Consistency checks (lattice closure, Euler formula, extremality);
/// throws InternalError on violation. Used by tests and generators.
void validate(const Polytope3& p);

}  // namespace mink3

#endif  // MINK3_POLYTOPE_HPP
