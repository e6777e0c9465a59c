#include "mink3/constructions.hpp"

#include <algorithm>

#include "mink3/equilateral.hpp"
#include "mink3/errors.hpp"

namespace mink3 {

namespace {

void expect(bool cond, const char* what) {
  if (!cond) throw InternalError(std::string("generator postcondition failed: ") + what);
}

Polytope3 hull_named(std::vector<Point3> pts, const char* name) {
  Polytope3 p = convex_hull(std::move(pts));
  p.name = name;
  return p;
}

}  // namespace

Polytope3 make_cube() {
  std::vector<Point3> pts;
  for (int x : {-1, 1})
    for (int y : {-1, 1})
      for (int z : {-1, 1}) pts.push_back(Point3{Scalar(x), Scalar(y), Scalar(z)});
  Polytope3 p = hull_named(std::move(pts), "cube");
  expect(p.vertices.size() == 8 && p.faces2.size() == 6 && p.edges.size() == 12, "cube 8/6/12");
  return p;
}

Polytope3 make_octahedron() {
  std::vector<Point3> pts;
  for (int i = 0; i < 3; ++i)
    for (int s : {-1, 1}) {
      Point3 p{Scalar(0), Scalar(0), Scalar(0)};
      (i == 0 ? p.x : i == 1 ? p.y : p.z) = Scalar(s);
      pts.push_back(p);
    }
  Polytope3 p = hull_named(std::move(pts), "octahedron");
  expect(p.vertices.size() == 6 && p.faces2.size() == 8 && p.edges.size() == 12, "octahedron 6/8/12");
  return p;
}

Polytope3 make_rhombic_dodecahedron() {
  std::vector<Point3> pts;
  for (int i = 0; i < 3; ++i)
    for (int s : {-1, 1}) {
      Point3 p{Scalar(0), Scalar(0), Scalar(0)};
      (i == 0 ? p.x : i == 1 ? p.y : p.z) = Scalar(s);
      pts.push_back(p);
    }
  const Scalar h = Scalar(1) / Scalar(2);
  for (int x : {-1, 1})
    for (int y : {-1, 1})
      for (int z : {-1, 1}) pts.push_back(Point3{Scalar(x) * h, Scalar(y) * h, Scalar(z) * h});
  Polytope3 p = hull_named(std::move(pts), "rhombic-dodecahedron");
  expect(p.vertices.size() == 14 && p.faces2.size() == 12 && p.edges.size() == 24,
         "rhombic dodecahedron 14/12/24");
  // H-form must match the norm formula max{|a+-b|, |a+-c|, |b+-c|} <= 1.
  for (const HalfSpace& f : p.facets) {
    int zeros = 0, ones = 0;
    for (const Scalar& c : {f.normal.x, f.normal.y, f.normal.z}) {
      if (c.is_zero()) ++zeros;
      if (c == Scalar(1) || c == Scalar(-1)) ++ones;
    }
    expect(zeros == 1 && ones == 2 && f.offset == Scalar(1), "rhombic facet form |a+-b| <= 1");
  }
  return p;
}

Polytope3 make_cuboctahedron() {
  std::vector<Point3> pts;
  for (int i = 0; i < 3; ++i)
    for (int s : {-1, 1})
      for (int t : {-1, 1}) {
        Point3 p{Scalar(0), Scalar(0), Scalar(0)};
        if (i == 0) {
          p.x = Scalar(s);
          p.y = Scalar(t);
        } else if (i == 1) {
          p.x = Scalar(s);
          p.z = Scalar(t);
        } else {
          p.y = Scalar(s);
          p.z = Scalar(t);
        }
        pts.push_back(p);
      }
  Polytope3 p = hull_named(std::move(pts), "cuboctahedron");
  expect(p.vertices.size() == 12 && p.faces2.size() == 14 && p.edges.size() == 24, "cuboctahedron 12/14/24");
  return p;
}

Polytope3 make_p_lambda(const Scalar& lambda) {
  const std::vector<Point3> listed = p_lambda_vertices(lambda);
  Polytope3 p = convex_hull(listed);
  p.name = "p-lambda";
  expect(p.dim == 3 && p.symmetric, "P_lambda symmetric 3-polytope");
  // At lambda in {0, 1} some of the 16 listed points land on edges of the
  // hull; in the open interval all 16 are extreme.
  expect(p.vertices.size() <= 16, "P_lambda vertices among the listed points");
  if (lambda.sign() > 0 && lambda < Scalar(1))
    expect(p.vertices.size() == 16, "interior lambda keeps all 16 vertices");
  for (const Point3& v : p.vertices) {
    expect(std::find(listed.begin(), listed.end(), v) != listed.end(),
           "P_lambda vertex is a listed point");
    expect(v.x >= Scalar(-1) && v.x <= Scalar(1) && v.y >= Scalar(-1) && v.y <= Scalar(1) &&
               v.z >= Scalar(-1) && v.z <= Scalar(1),
           "P_lambda inside the cube");
  }
  return p;
}

Polytope3 make_affine_octahedron(const Vec3& e1, const Vec3& e2, const Vec3& e3) {
  if (det3(e1, e2, e3).is_zero()) throw InvalidInput("affine octahedron needs independent generators");
  Polytope3 p = hull_named({e1, -e1, e2, -e2, e3, -e3}, "affine-octahedron");
  expect(p.vertices.size() == 6 && p.faces2.size() == 8, "affine octahedron 6/8");
  return p;
}

std::vector<Point3> p_lambda_seven_points(const Scalar& lambda) {
  if (lambda.sign() < 0 || lambda > Scalar(1)) throw InvalidInput("lambda outside [0,1]");
  return {Point3{Scalar(0), Scalar(0), lambda},
          {0, 1, 0},
          {0, 1, 1},
          {1, 0, 0},
          {1, 0, 1},
          {1, 1, 0},
          {1, 1, 1}};
}

std::vector<Point3> skew_prism_points(const Scalar& beta) {
  if (beta.sign() < 0 || beta > Scalar(1)) throw InvalidInput("skew prism parameter outside [0,1]");
  return {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 0, 1}, Point3{Scalar(1), beta, Scalar(1)}};
}

std::vector<Point3> triangle_base() { return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}; }

std::vector<Point3> square_base() { return {{1, 1, 0}, {-1, 1, 0}, {-1, -1, 0}, {1, -1, 0}}; }

std::vector<Point3> hexagon_base() {
  return {{1, 0, 0}, {0, 1, 0}, {-1, 1, 0}, {-1, 0, 0}, {0, -1, 0}, {1, -1, 0}};
}

Polytope3 truncated_cone(const std::vector<Point3>& base) {
  for (const Point3& p : base)
    if (!p.z.is_zero()) throw InvalidInput("truncated cone base must lie in z = 0");
  const Polytope3 flat = convex_hull(base);
  if (flat.dim != 2) throw InvalidInput("truncated cone base must be 2-dimensional");
  std::vector<Point3> pts = base;
  pts.push_back(Point3{0, 0, 1});
  Polytope3 p = convex_hull(std::move(pts));
  p.name = "truncated-cone";
  expect(p.dim == 3, "truncated cone full-dimensional");
  return p;
}

Polytope3 truncated_cone_difference_body(const std::vector<Point3>& base) {
  const Point3 e{0, 0, 1};
  std::vector<Point3> pts;
  for (const Point3& d : base) {
    pts.push_back(d - e);
    pts.push_back(e - d);
  }
  for (const Point3& d1 : base)
    for (const Point3& d2 : base) pts.push_back(d1 - d2);
  Polytope3 p = convex_hull(std::move(pts));
  p.symmetric = true;
  p.name = "truncated-cone-difference";
  const Polytope3 generic = difference_body(truncated_cone(base));
  expect(p.vertices == generic.vertices, "piecewise difference body agrees with C - C");
  return p;
}

DodecagonExample dodecagon_example() {
  const Scalar zero(0), one(1);
  const Scalar half = one / Scalar(2);
  const Scalar rt3_half = Scalar::sqrt_of(3) / Scalar(2);
  const Point3 e{0, 0, 1};

  // p_k = (cos(2 pi k / 12), sin(2 pi k / 12), 0)
  auto pk = [&](int k) -> Point3 {
    switch (((k % 12) + 12) % 12) {
      case 0: return {one, zero, zero};
      case 1: return {rt3_half, half, zero};
      case 2: return {half, rt3_half, zero};
      case 3: return {zero, one, zero};
      case 4: return {-half, rt3_half, zero};
      case 5: return {-rt3_half, half, zero};
      case 6: return {-one, zero, zero};
      case 7: return {-rt3_half, -half, zero};
      case 8: return {-half, -rt3_half, zero};
      case 9: return {zero, -one, zero};
      case 10: return {half, -rt3_half, zero};
      default: return {rt3_half, -half, zero};
    }
  };

  DodecagonExample ex;
  ex.points = PointConfig({pk(0), pk(4), pk(8), pk(3) + e, pk(7) + e, pk(11) + e});
  ex.hull = convex_hull(ex.points.points);
  ex.hull.name = "dodecagon-example-hull";
  ex.ball = difference_body(ex.points.points);
  ex.ball.name = "dodecagon-example-ball";
  expect(ex.hull.vertices.size() == 6, "P has 6 vertices");
  expect(ex.ball.dim == 3 && ex.ball.symmetric, "P - P symmetric 3-polytope");

  // The hexagon facets +-(Delta1 - Delta2) in the planes z = +-1.
  ex.hexagon_facet_top = ex.hexagon_facet_bottom = -1;
  const Plane top = Plane::canonical(Vec3{0, 0, 1}, one);
  const Plane bottom = Plane::canonical(Vec3{0, 0, 1}, -one);
  for (size_t f = 0; f < ex.ball.facets.size(); ++f) {
    const Plane pl = Plane::canonical(ex.ball.facets[f].normal, ex.ball.facets[f].offset);
    if (pl == top) ex.hexagon_facet_top = static_cast<int>(f);
    if (pl == bottom) ex.hexagon_facet_bottom = static_cast<int>(f);
  }
  expect(ex.hexagon_facet_top >= 0 && ex.hexagon_facet_bottom >= 0,
         "Delta1 - Delta2 and its negative are facets");
  expect(ex.ball.faces2[ex.hexagon_facet_top].cycle.size() == 6, "top facet is a hexagon");
  for (int i : {3, 7, 11})
    for (int j : {0, 4, 8}) {
      const Point3 d = pk(i) + e - pk(j);
      expect(ex.ball.facets[ex.hexagon_facet_top].side(d) == 0, "Delta1 - Delta2 lies in z = 1");
      expect(contains(ex.ball, d), "Delta1 - Delta2 inside the ball");
    }

  // The 12 vertices of sqrt(3) D are vertices of the ball.
  for (const auto& [i, j] : std::vector<std::pair<int, int>>{{0, 4}, {0, 8}, {4, 8}, {3, 7}, {3, 11}, {7, 11}}) {
    for (int sgn : {1, -1}) {
      const Point3 d = sgn > 0 ? pk(i) - pk(j) : pk(j) - pk(i);
      expect(ex.ball.vertex_index(d) >= 0, "sqrt(3) D vertex is a ball vertex");
      ex.dodecagon_vertices.push_back(d);
    }
  }

  // +-(p7 - p8 + e), +-(p3 - p4 + e), +-(p11 - p0 + e) in facet relative interiors.
  for (const auto& [i, j] : std::vector<std::pair<int, int>>{{7, 8}, {3, 4}, {11, 0}}) {
    for (int sgn : {1, -1}) {
      const Point3 d = sgn > 0 ? pk(i) - pk(j) + e : pk(j) - pk(i) - e;
      const Location loc = locate(ex.ball, d);
      expect(loc.kind == Location::Kind::OnFace && loc.face.dim == 2, "special point in facet relint");
      expect(loc.face.index == (sgn > 0 ? ex.hexagon_facet_top : ex.hexagon_facet_bottom),
             "special point sits in the hexagon facet");
      ex.facet_interior_points.push_back(d);
    }
  }
  return ex;
}

}  // namespace mink3
