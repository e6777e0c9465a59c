#include <random>

#include "doctest.h"
#include "mink3/constructions.hpp"
#include "mink3/norm.hpp"
#include "mink3/oracles.hpp"

using namespace mink3;

namespace {
Point3 pt(long long x, long long y, long long z) { return Point3{Scalar(x), Scalar(y), Scalar(z)}; }
Scalar q(long long n, long long d = 1) { return Scalar(BigRat(n, d)); }
}  // namespace

TEST_CASE("make_norm validation") {
  CHECK_NOTHROW(PolytopalNorm{make_octahedron()});
  CHECK_NOTHROW(PolytopalNorm{make_cube()});
  const Polytope3 tetra = convex_hull({pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)});
  CHECK_THROWS_AS(PolytopalNorm{tetra}, InvalidInput);  // not symmetric
  const Polytope3 flat = convex_hull({pt(1, 1, 0), pt(-1, -1, 0), pt(1, -1, 0), pt(-1, 1, 0)});
  CHECK_THROWS_AS(PolytopalNorm{flat}, InvalidInput);  // not full-dimensional
}

TEST_CASE("norm evaluation on the paper balls") {
  const PolytopalNorm l1(make_octahedron());
  const PolytopalNorm linf(make_cube());
  const PolytopalNorm z(make_rhombic_dodecahedron());

  CHECK(l1.eval(pt(1, -1, 0)) == q(2));
  CHECK(l1.eval(pt(0, 0, 0)) == q(0));
  CHECK(linf.distance(pt(0, 0, 0), pt(1, 1, 1)) == q(1));
  CHECK(z.eval(pt(1, 1, 1)) == q(2));  // max{|a+-b|,|a+-c|,|b+-c|}
  CHECK(z.distance(pt(1, 0, 0), pt(-1, 0, 0)) == q(2));
  CHECK(l1.distance(pt(1, 0, 0), pt(0, 1, 0)) == q(2));
}

TEST_CASE("norm axioms on random vectors") {
  ConfigGen gen(31337);
  const PolytopalNorm z(make_rhombic_dodecahedron());
  for (int iter = 0; iter < 60; ++iter) {
    const Vec3 x = gen.point(), y = gen.point();
    CHECK((z.eval(x).sign() > 0) == !x.is_zero());
    CHECK(z.eval(x + y) <= z.eval(x) + z.eval(y));
    const Scalar c = gen.rational();
    const Scalar abs_c = c.sign() < 0 ? -c : c;
    CHECK(z.eval(c * x) == abs_c * z.eval(x));
  }
}

TEST_CASE("eval agrees with locate") {
  ConfigGen gen(999);
  const PolytopalNorm n(make_cuboctahedron());
  for (int iter = 0; iter < 40; ++iter) {
    const Vec3 x = gen.point(3, 3);
    const Scalar v = n.eval(x);
    const Location loc = locate(n.ball(), x);
    if (v < Scalar(1)) CHECK(loc.kind == Location::Kind::Interior);
    if (v == Scalar(1)) CHECK(loc.kind == Location::Kind::OnFace);
    if (v > Scalar(1)) CHECK(loc.kind == Location::Kind::Outside);
  }
}

TEST_CASE("duality") {
  const PolytopalNorm linf(make_cube());
  const PolytopalNorm l1 = linf.dual();
  CHECK(l1.ball().vertices == make_octahedron().vertices);
  CHECK(l1.dual().ball().vertices == make_cube().vertices);

  const PolytopalNorm z(make_rhombic_dodecahedron());
  const PolytopalNorm zd = z.dual();
  CHECK(zd.ball().vertices.size() == 12);  // cuboctahedral ball
  CHECK(zd.dual().ball().vertices == z.ball().vertices);

  // <x,y> <= ||x||* for all y with ||y|| <= 1 (definition of the dual norm)
  ConfigGen gen(2024);
  for (int iter = 0; iter < 30; ++iter) {
    const Vec3 x = gen.point(4, 4);
    Vec3 y = gen.point(4, 4);
    if (y.is_zero()) continue;
    y = y / z.eval(y);  // on the unit sphere of z
    CHECK(dot(x, y) <= zd.eval(x));
  }
}

TEST_CASE("unit_face") {
  const PolytopalNorm l1(make_octahedron());
  const FaceRef v = l1.unit_face(pt(1, 0, 0));
  CHECK(v.dim == 0);
  const FaceRef f = l1.unit_face(pt(1, 1, 1));
  CHECK(f.dim == 2);
  const FaceRef e = l1.unit_face(pt(1, 1, 0));
  CHECK(e.dim == 1);
  CHECK_THROWS_AS(l1.unit_face(pt(0, 0, 0)), InvalidInput);

  const PolytopalNorm z(make_rhombic_dodecahedron());
  const FaceRef zf = z.unit_face(pt(1, 1, 0));
  CHECK(zf.dim == 2);  // relint of the rhombic facet with normal (1,1,0)
  CHECK(z.ball().facets[zf.index].normal == pt(1, 1, 0));
}

TEST_CASE("two_faces counts") {
  CHECK(PolytopalNorm(make_cube()).two_faces().size() == 6);
  CHECK(PolytopalNorm(make_octahedron()).two_faces().size() == 8);
}

TEST_CASE("polygon perimeters") {
  const PolytopalNorm linf(make_cube());
  const std::vector<Point3> square = {pt(1, 1, 0), pt(-1, 1, 0), pt(-1, -1, 0), pt(1, -1, 0)};
  CHECK(linf.polygon_perimeter(square) == q(8));
  // degenerate 2-gon counts both directions
  CHECK(linf.polygon_perimeter({pt(0, 0, 0), pt(2, 0, 0)}) == q(4));
  CHECK_THROWS_AS(linf.polygon_perimeter({pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)}),
                  InvalidInput);
}

TEST_CASE("self-perimeter of planar sections obeys Golab bounds") {
  // square section of the l1 ball: perimeter 8 in its own norm
  const Section sq = planar_section(make_octahedron(), pt(0, 0, 1));
  const PlanarNorm nsq(sq);
  CHECK(nsq.self_perimeter() == q(8));

  // hexagonal section of the cube along (1,1,1): the affine regular hexagon
  const Section hex = planar_section(make_cube(), pt(1, 1, 1));
  CHECK(hex.polygon.size() == 6);
  const PlanarNorm nhex(hex);
  CHECK(nhex.self_perimeter() == q(6));

  ConfigGen gen(4711);
  const Polytope3 bodies[] = {make_cube(), make_octahedron(), make_rhombic_dodecahedron(),
                              make_cuboctahedron()};
  int tested = 0;
  for (int iter = 0; tested < 25; ++iter) {
    const Vec3 n = gen.point(4, 3);
    if (n.is_zero()) continue;
    const PlanarNorm pn(planar_section(bodies[iter % 4], n));
    const Scalar p = pn.self_perimeter();
    CHECK(p >= q(6));
    CHECK(p <= q(8));
    ++tested;
  }
}

TEST_CASE("perimeter is Minkowski additive") {
  ConfigGen gen(60601);
  const PolytopalNorm norms[] = {PolytopalNorm(make_cube()), PolytopalNorm(make_octahedron()),
                                 PolytopalNorm(make_rhombic_dodecahedron())};
  int done = 0;
  for (int iter = 0; done < 20; ++iter) {
    // random convex polygons in the plane z = 0
    auto poly = [&](int cnt) {
      std::vector<Point3> pts;
      for (int i = 0; i < cnt; ++i) pts.push_back(Point3{gen.rational(), gen.rational(), Scalar(0)});
      return convex_hull(pts);
    };
    const Polytope3 a = poly(5), b = poly(6);
    if (a.dim != 2 || b.dim != 2) continue;
    std::vector<Point3> sums;
    for (const Point3& x : a.vertices)
      for (const Point3& y : b.vertices) sums.push_back(x + y);
    const Polytope3 s = convex_hull(sums);
    const PolytopalNorm& n = norms[iter % 3];
    auto ring = [](const Polytope3& p) {
      std::vector<Point3> out;
      for (int vi : p.polygon_cycle) out.push_back(p.vertices[vi]);
      return out;
    };
    CHECK(n.polygon_perimeter(ring(s)) == n.polygon_perimeter(ring(a)) + n.polygon_perimeter(ring(b)));
    ++done;
  }
}
