#ifndef MINK3_CONSTRUCTIONS_HPP
#define MINK3_CONSTRUCTIONS_HPP

#include <vector>

#include "mink3/antipodal.hpp"
#include "mink3/polytope.hpp"

namespace mink3 {

// Standard bodies. Generators self-check their combinatorics
// (vertex/facet counts) and throw InternalError on mismatch.
Polytope3 make_cube();                  // [-1,1]^3
Polytope3 make_octahedron();            // conv{+-e_i}, the l1 ball
Polytope3 make_rhombic_dodecahedron();  // ball of max{|a+-b|,|a+-c|,|b+-c|}
Polytope3 make_cuboctahedron();         // conv of the 12 (+-1,+-1,0) permutations
Polytope3 make_p_lambda(const Scalar& lambda);
Polytope3 make_affine_octahedron(const Vec3& e1, const Vec3& e2, const Vec3& e3);

/// Theorem-4 seven points {(0,0,lambda), (0,1,0), (0,1,1), (1,0,0),
/// (1,0,1), (1,1,0), (1,1,1)}.
std::vector<Point3> p_lambda_seven_points(const Scalar& lambda);

/// Theorem-6 type-2 normal form: unit square, apex e = (0,0,1) and
/// f = (1, beta, 1) with beta in [0,1] (beta = 0 is the affine prism).
std::vector<Point3> skew_prism_points(const Scalar& beta);

/// Planar convex bases for truncated cones, in the plane z = 0.
std::vector<Point3> triangle_base();
std::vector<Point3> square_base();
std::vector<Point3> hexagon_base();  // rational affine regular hexagon

/// conv({e} cup D) with e = (0,0,1) and D a convex polygon in z = 0.
Polytope3 truncated_cone(const std::vector<Point3>& base);

/// Difference body of a truncated cone assembled from its pieces
/// conv((D - e) cup (e - D) cup (D - D)); must agree with the generic
/// difference body (checked).
Polytope3 truncated_cone_difference_body(const std::vector<Point3>& base);

/// The Q(sqrt 3) six-point construction: three vertices of a regular
/// dodecagon and three of the 30-degree rotated copy lifted by e_z.
struct DodecagonExample {
  PointConfig points;      // S = {p0, p4, p8, p3+e, p7+e, p11+e}
  Polytope3 hull;          // P = conv S
  Polytope3 ball;          // P - P
  int hexagon_facet_top;   // facet of `ball` holding Delta1 - Delta2 (z = 1)
  int hexagon_facet_bottom;
  std::vector<Point3> dodecagon_vertices;   // the 12 vertices of sqrt(3) D
  std::vector<Point3> facet_interior_points;  // +-(p7-p8+e), +-(p3-p4+e), +-(p11-p0+e)
};

/// Builds the example and checks the stated boundary facts exactly:
/// the hexagons are facets, the 12 dodecagon points are vertices of the
/// ball, and the three special differences sit in facet relative interiors.
DodecagonExample dodecagon_example();

}  // namespace mink3

#endif  // MINK3_CONSTRUCTIONS_HPP
