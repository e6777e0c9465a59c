#ifndef MINK3_NORM_HPP
#define MINK3_NORM_HPP

#include <vector>

#include "mink3/polytope.hpp"

namespace mink3 {

/// Minkowski norm whose unit ball is a centrally symmetric full-dimensional
/// polytope. Evaluation is the facet-form maximum max_f <n_f, x> / c_f.
class PolytopalNorm {
 public:
  /// Validates the ball; throws InvalidInput("not symmetric" / "not full-dimensional").
  explicit PolytopalNorm(Polytope3 ball);

  const Polytope3& ball() const { return ball_; }

  Scalar eval(const Vec3& x) const;
  Scalar distance(const Point3& p, const Point3& q) const { return eval(p - q); }

  /// Norm with the polar ball.
  PolytopalNorm dual() const;

  /// Smallest face of the ball whose relative interior contains x / ||x||.
  FaceRef unit_face(const Vec3& x) const;

  /// All 2-dimensional faces of the ball.
  std::vector<FaceRef> two_faces() const;

  /// Sum of the norm lengths of the sides of a planar polygon given as a
  /// cyclic vertex list (a 2-point "polygon" counts both directions).
  Scalar polygon_perimeter(const std::vector<Point3>& polygon) const;

 private:
  Polytope3 ball_;
};

/// Norm on a 2D subspace given by a symmetric polygon in an explicit frame;
/// used for section self-perimeters and the hexagon search.
class PlanarNorm {
 public:
  explicit PlanarNorm(Section section);

  const Section& section() const { return section_; }
  Scalar eval(const Vec2& x) const;
  /// Edge halfspaces <m_i, x> <= c_i of the unit polygon, ccw order.
  const std::vector<std::pair<Vec2, Scalar>>& edge_forms() const { return edges_; }

  /// Perimeter of the unit polygon measured in this norm itself
  /// (Golab's theorem puts it in [6, 8]).
  Scalar self_perimeter() const;

 private:
  Section section_;
  std::vector<std::pair<Vec2, Scalar>> edges_;
};

}  // namespace mink3

#endif  // MINK3_NORM_HPP
