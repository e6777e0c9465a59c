#include "doctest.h"
#include "mink3/constructions.hpp"
#include "mink3/equilateral.hpp"
#include "mink3/io.hpp"
#include "mink3/norm.hpp"

using namespace mink3;

namespace {
Point3 pt(long long x, long long y, long long z) { return Point3{Scalar(x), Scalar(y), Scalar(z)}; }
Scalar q(long long n, long long d = 1) { return Scalar(BigRat(n, d)); }
}  // namespace

TEST_CASE("standard bodies have the expected combinatorics") {
  CHECK(make_cube().vertices.size() == 8);
  CHECK(make_octahedron().faces2.size() == 8);
  const Polytope3 z = make_rhombic_dodecahedron();
  CHECK(z.vertices.size() == 14);
  CHECK(z.faces2.size() == 12);
  for (const Face2& f : z.faces2) CHECK(f.cycle.size() == 4);  // rhombic facets
  CHECK(make_cuboctahedron().vertices.size() == 12);
  validate(z);
}

TEST_CASE("cube and octahedron are polar to each other") {
  CHECK(polar(make_octahedron()).vertices == make_cube().vertices);
  CHECK(polar(make_cube()).vertices == make_octahedron().vertices);
  // polar of the rhombic dodecahedron is the cuboctahedron, and back
  const Polytope3 z = make_rhombic_dodecahedron();
  CHECK(polar(z).vertices == make_cuboctahedron().vertices);
  CHECK(polar(polar(z)).vertices == z.vertices);
}

TEST_CASE("cuboctahedron is the tetrahedron difference body up to scale") {
  const Polytope3 d = difference_body(
      std::vector<Point3>{pt(-1, -1, -1), pt(1, 1, -1), pt(-1, 1, 1), pt(1, -1, 1)});
  const Polytope3 scaled = affine_image(make_cuboctahedron(), Mat3::diag(q(2), q(2), q(2)), pt(0, 0, 0));
  CHECK(d.vertices == scaled.vertices);
}

TEST_CASE("P_lambda family") {
  for (const Scalar& l : {q(0), q(1, 4), q(1, 2), q(1)}) {
    const Polytope3 p = make_p_lambda(l);
    CHECK(p.vertices.size() == 16);
    CHECK(p.symmetric);
    for (const Point3& v : p.vertices) {
      CHECK(v.x >= q(-1));
      CHECK(v.x <= q(1));
      CHECK(v.z >= q(-1));
      CHECK(v.z <= q(1));
    }
  }
  CHECK_THROWS_AS(make_p_lambda(q(3, 2)), InvalidInput);
}

TEST_CASE("skew prisms pass the twelve point test") {
  for (const Scalar& beta : {q(0), q(1, 3), q(1, 2), q(1)}) {
    const auto pts = skew_prism_points(beta);
    const PointConfig s(pts);
    CHECK(is_antipodal(s));
    // the split planes of Theorem 6: z = 0 and z = 1
    const std::array<Point3, 3> a{pts[0], pts[1], pts[2]};  // z=0 holds 4 points; use abc of square
    // use the Proposition 4 interface on the canonical 3+3: bottom {a,b,c? no: the 3+3 split is ade|bcf}
    (void)a;
    const AntipodalClass c = classify(s);
    CHECK(c.kind == AntipodalClass::Kind::SixSkewPrism);
    CHECK(c.six_prism->ef_parallel_ab == (beta == q(0)));
  }
}

TEST_CASE("slid cubes classify with their parameter") {
  for (const Scalar& t : {q(0), q(1, 4), q(1, 2), q(3, 4), q(1)}) {
    const PointConfig s{slid_cube_points(t)};
    CHECK(is_antipodal(s));
    const AntipodalClass c = classify(s);
    REQUIRE(c.kind == AntipodalClass::Kind::SevenSlidCube);
    CHECK(c.seven->t == t);
  }
}

TEST_CASE("truncated cones") {
  const Polytope3 tetra = truncated_cone(triangle_base());
  CHECK(tetra.vertices.size() == 4);
  const Polytope3 pyramid = truncated_cone(square_base());
  CHECK(pyramid.vertices.size() == 5);
  const Polytope3 hexcone = truncated_cone(hexagon_base());
  CHECK(hexcone.vertices.size() == 7);

  // piecewise assembly agrees with the generic difference body (checked
  // inside the builder as well)
  const Polytope3 d = truncated_cone_difference_body(triangle_base());
  CHECK(d.vertices.size() == 12);  // affine cuboctahedron

  CHECK_THROWS_AS(truncated_cone({pt(0, 0, 1), pt(1, 0, 1), pt(0, 1, 1)}), InvalidInput);
  CHECK_THROWS_AS(truncated_cone({pt(0, 0, 0), pt(1, 0, 0), pt(2, 0, 0)}), InvalidInput);
}

TEST_CASE("dodecagon example verifies its boundary facts") {
  const DodecagonExample ex = dodecagon_example();
  CHECK(ex.points.size() == 6);
  CHECK(ex.hull.vertices.size() == 6);
  CHECK(ex.ball.symmetric);
  CHECK(ex.dodecagon_vertices.size() == 12);
  CHECK(ex.facet_interior_points.size() == 6);
  CHECK(ex.ball.faces2[ex.hexagon_facet_top].cycle.size() == 6);

  // S is equilateral at distance 1 for the norm with unit ball P - P
  const PolytopalNorm n(ex.ball);
  auto w = is_equilateral(ex.points, n);
  REQUIRE(w.has_value());
  CHECK(w->lambda == q(1));

  // the top facet is a semiregular hexagon host with perimeter exactly 6
  const Scalar perim = n.polygon_perimeter(ex.ball.face_points(ex.ball.faces2[ex.hexagon_facet_top]));
  CHECK(perim == q(6));

  // planar section through o parallel to the hexagon facets is sqrt(3) D
  const Section mid = planar_section(ex.ball, pt(0, 0, 1));
  CHECK(mid.polygon.size() == 12);

  // mid-plane of conv((D1-D2) u (D2-D1)) is the midpoint dodecagon
  std::vector<Point3> two_hexagons = ex.ball.face_points(ex.ball.faces2[ex.hexagon_facet_top]);
  for (const Point3& p : ex.ball.face_points(ex.ball.faces2[ex.hexagon_facet_bottom]))
    two_hexagons.push_back(p);
  const Polytope3 qhull = convex_hull(two_hexagons);
  const Section qmid = planar_section(qhull, pt(0, 0, 1));
  CHECK(qmid.polygon.size() == 12);
  // vertices are the midpoints of consecutive sqrt(3)D vertices
  const Section ball_mid = planar_section(ex.ball, pt(0, 0, 1));
  const auto ring = ball_mid.polygon3();
  const Scalar half = q(1, 2);
  int matched = 0;
  for (size_t i = 0; i < ring.size(); ++i) {
    const Point3 midpt = half * (ring[i] + ring[(i + 1) % ring.size()]);
    for (const Point3& v : qmid.polygon3())
      if (v == midpt) ++matched;
  }
  CHECK(matched == 12);
}

TEST_CASE("generated bodies round trip through the file format") {
  for (const Polytope3& body : {make_cube(), make_octahedron(), make_rhombic_dodecahedron(),
                                make_cuboctahedron(), make_p_lambda(q(1, 2)), dodecagon_example().ball}) {
    const std::string text = polytope_to_string(body);
    const Polytope3 back = polytope_from_string(text);
    CHECK(back.vertices == body.vertices);
    CHECK(back.facets.size() == body.facets.size());
    CHECK(polytope_to_string(back) == text);
  }
}
