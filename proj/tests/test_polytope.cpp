#include <random>
#include <vector>

#include "doctest.h"
#include "mink3/polytope.hpp"

using namespace mink3;

namespace {

Point3 pt(long long x, long long y, long long z) { return Point3{Scalar(x), Scalar(y), Scalar(z)}; }

std::vector<Point3> cube_pts() {
  std::vector<Point3> v;
  for (int x : {-1, 1})
    for (int y : {-1, 1})
      for (int z : {-1, 1}) v.push_back(pt(x, y, z));
  return v;
}

std::vector<Point3> octa_pts() {
  return {pt(1, 0, 0), pt(-1, 0, 0), pt(0, 1, 0), pt(0, -1, 0), pt(0, 0, 1), pt(0, 0, -1)};
}

std::mt19937_64 rng(987654321);

Point3 random_pt(int span = 8, int maxden = 8) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, maxden);
  auto r = [&] { return Scalar(BigRat(num(rng), den(rng))); };
  return Point3{r(), r(), r()};
}

}  // namespace

TEST_CASE("hull of the cube") {
  std::vector<Point3> unit;
  for (int x : {0, 1})
    for (int y : {0, 1})
      for (int z : {0, 1}) unit.push_back(pt(x, y, z));
  const Polytope3 p = convex_hull(unit);
  CHECK(p.dim == 3);
  CHECK(p.vertices.size() == 8);
  CHECK(p.facets.size() == 6);
  CHECK(p.edges.size() == 12);
  validate(p);
}

TEST_CASE("hull of collinear points is a segment") {
  const Polytope3 p = convex_hull({pt(0, 0, 0), pt(1, 0, 0), pt(2, 0, 0)});
  CHECK(p.dim == 1);
  CHECK(p.vertices.size() == 2);
  CHECK(p.vertices[0] == pt(0, 0, 0));
  CHECK(p.vertices[1] == pt(2, 0, 0));
}

TEST_CASE("interior point does not become a vertex") {
  std::vector<Point3> pts = octa_pts();
  pts.push_back(pt(0, 0, 0));
  const Polytope3 p = convex_hull(pts);
  CHECK(p.vertices.size() == 6);
  CHECK(p.facets.size() == 8);
  validate(p);
}

TEST_CASE("coplanar facet merge: point on a face plane") {
  // Square pyramid plus an extra point extending the base within its plane.
  // (2,2,0) lands on the segment from the origin to (3,3,0) and must vanish.
  std::vector<Point3> pts = {pt(0, 0, 0), pt(2, 0, 0), pt(0, 2, 0), pt(2, 2, 0), pt(1, 1, 3),
                             pt(3, 3, 0)};
  const Polytope3 p = convex_hull(pts);
  CHECK(p.dim == 3);
  validate(p);
  CHECK(p.vertex_index(pt(2, 2, 0)) == -1);
  // Base facet is a single merged quadrilateral 2-face.
  size_t base = 0;
  for (const Face2& f : p.faces2) base = std::max(base, f.cycle.size());
  CHECK(base == 4);
  CHECK(p.vertices.size() == 5);
}

TEST_CASE("hull drops points that become non-extreme later") {
  // (1,1,0) is the base-square center once (3,3,0) arrives.
  std::vector<Point3> pts = {pt(0, 0, 0), pt(2, 0, 0), pt(0, 2, 0), pt(1, 1, 0),
                             pt(1, 1, 2), pt(3, 3, 0)};
  const Polytope3 p = convex_hull(pts);
  validate(p);
  CHECK(p.vertex_index(pt(1, 1, 0)) == -1);
  CHECK(p.vertices.size() == 5);
}

TEST_CASE("planar hull") {
  const Polytope3 p = convex_hull({pt(0, 0, 0), pt(4, 0, 0), pt(0, 4, 0), pt(1, 1, 0), pt(4, 4, 0)});
  CHECK(p.dim == 2);
  CHECK(p.vertices.size() == 4);
  CHECK(p.polygon_cycle.size() == 4);
  validate(p);
}

TEST_CASE("locate classifies cube and octahedron points") {
  const Polytope3 cube = convex_hull(cube_pts());
  const Polytope3 octa = convex_hull(octa_pts());

  const Scalar h(BigRat(1, 2));
  CHECK(locate(cube, Point3{h, h, Scalar(0)}).kind == Location::Kind::Interior);
  CHECK(locate(octa, pt(1, 1, 1)).kind == Location::Kind::Outside);

  const Location mid = locate(octa, Point3{h, h, Scalar(0)});
  REQUIRE(mid.kind == Location::Kind::OnFace);
  CHECK(mid.face.dim == 1);
  const Edge& e = octa.edges[mid.face.index];
  CHECK(octa.vertices[e.v0] + octa.vertices[e.v1] == pt(1, 1, 0));

  const Location vert = locate(octa, pt(1, 0, 0));
  REQUIRE(vert.kind == Location::Kind::OnFace);
  CHECK(vert.face.dim == 0);

  const Location facet = locate(cube, Point3{Scalar(1), h, h});
  REQUIRE(facet.kind == Location::Kind::OnFace);
  CHECK(facet.face.dim == 2);
}

TEST_CASE("locate on lower-dimensional hulls uses relative interior") {
  const Polytope3 seg = convex_hull({pt(0, 0, 0), pt(2, 0, 0)});
  CHECK(locate(seg, pt(1, 0, 0)).kind == Location::Kind::Interior);
  CHECK(locate(seg, pt(2, 0, 0)).kind == Location::Kind::OnFace);
  CHECK(locate(seg, pt(3, 0, 0)).kind == Location::Kind::Outside);
  CHECK(locate(seg, pt(1, 1, 0)).kind == Location::Kind::Outside);

  const Polytope3 tri = convex_hull({pt(0, 0, 0), pt(2, 0, 0), pt(0, 2, 0)});
  CHECK(tri.dim == 2);
  CHECK(locate(tri, Point3{Scalar(BigRat(1, 2)), Scalar(BigRat(1, 2)), Scalar(0)}).kind ==
        Location::Kind::Interior);
  CHECK(locate(tri, pt(1, 0, 0)).kind == Location::Kind::OnFace);
  CHECK(locate(tri, pt(0, 0, 1)).kind == Location::Kind::Outside);
}

TEST_CASE("difference body of a tetrahedron is the cuboctahedron") {
  const std::vector<Point3> tetra = {pt(-1, -1, -1), pt(1, 1, -1), pt(-1, 1, 1), pt(1, -1, 1)};
  const Polytope3 d = difference_body(tetra);
  CHECK(d.dim == 3);
  CHECK(d.vertices.size() == 12);
  CHECK(d.faces2.size() == 14);  // 8 triangles + 6 squares
  CHECK(d.symmetric);
  validate(d);
}

TEST_CASE("difference body degenerate cases") {
  CHECK(difference_body(std::vector<Point3>{pt(5, 7, -2)}).dim == 0);
  // planar triangle: centrally symmetric hexagon with 6 vertices
  const Polytope3 hex = difference_body({pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0)});
  CHECK(hex.dim == 2);
  CHECK(hex.vertices.size() == 6);
  CHECK(hex.symmetric);
}

TEST_CASE("every difference-body vertex is a pairwise difference") {
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<Point3> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(random_pt());
    const Polytope3 d = difference_body(pts);
    for (const Point3& v : d.vertices) {
      bool found = false;
      for (const Point3& a : pts)
        for (const Point3& b : pts)
          if (a - b == v) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("polar duality cube <-> octahedron") {
  const Polytope3 cube = convex_hull(cube_pts());
  const Polytope3 p = polar(cube);
  CHECK(p.vertices.size() == 6);
  CHECK(p.faces2.size() == 8);
  const Polytope3 octa = convex_hull(octa_pts());
  CHECK(p.vertices == octa.vertices);
  CHECK(polar(octa).vertices == cube.vertices);
}

TEST_CASE("polar is an involution on random symmetric bodies") {
  for (int iter = 0; iter < 10; ++iter) {
    std::vector<Point3> pts;
    for (int i = 0; i < 5; ++i) {
      const Point3 p = random_pt();
      pts.push_back(p);
      pts.push_back(-p);
    }
    const Polytope3 body = convex_hull(pts);
    if (body.dim != 3) continue;
    const Polytope3 pp = polar(polar(body));
    CHECK(pp.vertices == body.vertices);
  }
}

TEST_CASE("polar requires interior origin") {
  std::vector<Point3> shifted;
  for (const Point3& p : cube_pts()) shifted.push_back(p + pt(5, 0, 0));
  CHECK_THROWS_AS(polar(convex_hull(shifted)), mink3::InvalidInput);
}

TEST_CASE("affine image preserves lattice and location") {
  const Polytope3 octa = convex_hull(octa_pts());
  const Mat3 m = Mat3::diag(Scalar(1), Scalar(1), Scalar(2));
  const Polytope3 img = affine_image(octa, m, pt(0, 0, 0));
  CHECK(img.vertices.size() == 6);
  CHECK(img.faces2.size() == 8);
  CHECK(img.vertex_index(pt(0, 0, 2)) >= 0);

  const Mat3 m2{{Vec3{Scalar(2), Scalar(1), Scalar(0)}, Vec3{Scalar(0), Scalar(1), Scalar(1)},
                 Vec3{Scalar(1), Scalar(0), Scalar(3)}}};
  const Vec3 t = pt(3, -2, 5);
  for (int iter = 0; iter < 25; ++iter) {
    const Point3 q = random_pt(2, 4);
    const Polytope3 img2 = affine_image(octa, m2, t);
    const Location before = locate(octa, q);
    const Location after = locate(img2, m2.apply(q) + t);
    CHECK(before.kind == after.kind);
    if (before.kind == Location::Kind::OnFace) CHECK(before.face.dim == after.face.dim);
  }
  CHECK_THROWS_AS(affine_image(octa, Mat3::diag(Scalar(1), Scalar(1), Scalar(0)), pt(0, 0, 0)),
                  mink3::InvalidInput);
}

TEST_CASE("hull idempotence on random point sets") {
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<Point3> pts;
    const int n = 4 + static_cast<int>(iter % 9);
    for (int i = 0; i < n; ++i) pts.push_back(random_pt());
    const Polytope3 h1 = convex_hull(pts);
    const Polytope3 h2 = convex_hull(h1.vertices);
    CHECK(h1.dim == h2.dim);
    CHECK(h1.vertices == h2.vertices);
    if (h1.dim == 3) validate(h1);
    // every input point rests inside
    for (const Point3& p : pts) CHECK(contains(h1, p));
  }
}

TEST_CASE("planar sections") {
  const Polytope3 cube = convex_hull(cube_pts());
  const Section sq = planar_section(cube, pt(0, 0, 1));
  CHECK(sq.polygon.size() == 4);

  const Polytope3 octa = convex_hull(octa_pts());
  const Section hex = planar_section(octa, pt(1, 1, 1));
  CHECK(hex.polygon.size() == 6);
  // vertices are the edge midpoints (e_i - e_j)/2
  const std::vector<Point3> lifted = hex.polygon3();
  const Scalar h(BigRat(1, 2));
  int hits = 0;
  for (const Point3& v : lifted)
    if (v == Point3{h, -h, Scalar(0)} || v == Point3{h, Scalar(0), -h} || v == Point3{Scalar(0), h, -h} ||
        v == Point3{-h, h, Scalar(0)} || v == Point3{-h, Scalar(0), h} || v == Point3{Scalar(0), -h, h})
      ++hits;
  CHECK(hits == 6);
  CHECK_THROWS_AS(planar_section(cube, pt(0, 0, 0)), mink3::InvalidInput);
}
