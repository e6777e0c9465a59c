#include "mink3/oracles.hpp"

#include <algorithm>

#include "mink3/lp.hpp"

namespace mink3 {

bool antipodal_support_oracle(const PointConfig& s) {
  const auto& pts = s.points;
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      FeasibilityProblem fp(3);
      const Vec3 d = pts[i] - pts[j];
      fp.add_eq({d.x, d.y, d.z}, Scalar(1));
      for (const Point3& p : pts) {
        const Vec3 up = p - pts[i];  // <u, p - x> <= 0
        fp.add_le({up.x, up.y, up.z}, Scalar(0));
        const Vec3 dn = pts[j] - p;  // <u, y - p> <= 0
        fp.add_le({dn.x, dn.y, dn.z}, Scalar(0));
      }
      if (!fp.solve().has_value()) return false;
    }
  }
  return true;
}

Scalar ConfigGen::rational(int span, int max_den) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, max_den);
  return Scalar(BigRat(num(rng_), den(rng_)));
}

Point3 ConfigGen::point(int span, int max_den) {
  return Point3{rational(span, max_den), rational(span, max_den), rational(span, max_den)};
}

PointConfig ConfigGen::five_convex_position() {
  for (;;) {
    std::vector<Point3> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(point());
    bool distinct = true;
    for (size_t i = 0; i < pts.size() && distinct; ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        if (pts[i] == pts[j]) distinct = false;
    if (!distinct) continue;
    if (convex_hull(pts).vertices.size() == 5) return PointConfig(std::move(pts));
  }
}

PointConfig ConfigGen::five_structured(bool satisfy) {
  std::uniform_int_distribution<int> den(3, 9);
  for (;;) {
    const Point3 a = point(6, 4), b = point(6, 4), c = point(6, 4);
    if (cross(b - a, c - a).is_zero()) continue;

    // Segment ratio t in (0,1) away from the ends.
    const int tq = den(rng_);
    std::uniform_int_distribution<int> tnum(1, tq - 1);
    const Scalar t(BigRat(tnum(rng_), tq));
    const Scalar bound = std::min(t, Scalar(1) - t);

    // Barycentrics: blend a random simplex point toward the centroid until
    // the bound holds (or past it when a violating instance is wanted).
    Scalar l(BigRat(1 + (rng_() % 5), 9)), m(BigRat(1 + (rng_() % 5), 9));
    Scalar n = Scalar(1) - l - m;
    if (n.sign() <= 0) continue;
    const Scalar third(BigRat(1, 3));
    Scalar mx = std::max({l, m, n});
    if (satisfy) {
      if (mx > bound) {
        if (bound <= third) continue;  // centroid blending cannot reach
        const Scalar alpha = (bound - third) / (mx - third);
        l = alpha * l + (Scalar(1) - alpha) * third;
        m = alpha * m + (Scalar(1) - alpha) * third;
        n = Scalar(1) - l - m;
      }
    } else {
      if (std::max({l, m, n}) <= bound) continue;  // want a violating one
    }

    const Point3 p = l * a + m * b + n * c;
    const Vec3 w = point(4, 2);
    if (dot(cross(b - a, c - a), w).is_zero()) continue;  // keep d, e off the plane
    const Point3 d = p - w;
    const Point3 e = p + ((Scalar(1) - t) / t) * w;

    std::vector<Point3> pts{a, b, c, d, e};
    bool distinct = true;
    for (size_t i = 0; i < pts.size() && distinct; ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        if (pts[i] == pts[j]) distinct = false;
    if (!distinct) continue;
    if (convex_hull(pts).vertices.size() != 5) continue;
    return PointConfig(std::move(pts));
  }
}

std::pair<std::array<Point3, 3>, std::array<Point3, 3>> ConfigGen::parallel_triples() {
  for (;;) {
    std::array<Point3, 3> a, b;
    for (int i = 0; i < 3; ++i) {
      a[i] = Point3{rational(), rational(), Scalar(0)};
      b[i] = Point3{rational(), rational(), Scalar(1)};
    }
    if (cross(a[1] - a[0], a[2] - a[0]).is_zero()) continue;
    if (cross(b[1] - b[0], b[2] - b[0]).is_zero()) continue;
    bool distinct = true;
    for (int i = 0; i < 3 && distinct; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (a[i] == a[j] || b[i] == b[j]) distinct = false;
    if (!distinct) continue;
    return {a, b};
  }
}

PointConfig ConfigGen::antipodal_set() {
  for (;;) {
    switch (rng_() % 5) {
      case 0: {  // tetrahedron
        std::vector<Point3> pts;
        for (int i = 0; i < 4; ++i) pts.push_back(point());
        bool dup = false;
        for (size_t i = 0; i < pts.size(); ++i)
          for (size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) dup = true;
        if (dup) continue;
        if (orient3d(pts[0], pts[1], pts[2], pts[3]) == 0) continue;
        return PointConfig(std::move(pts));
      }
      case 1: {  // structured antipodal five-set
        PointConfig s = five_structured(true);
        if (is_antipodal(s)) return s;
        continue;
      }
      case 2: {  // Proposition-4 filtered 3+3
        auto [a, b] = parallel_triples();
        if (!twelve_point_test(a, b)) continue;
        std::vector<Point3> pts(a.begin(), a.end());
        pts.insert(pts.end(), b.begin(), b.end());
        bool dup = false;
        for (size_t i = 0; i < pts.size(); ++i)
          for (size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) dup = true;
        if (dup) continue;
        return PointConfig(std::move(pts));
      }
      case 3: {  // affine slid cube
        std::uniform_int_distribution<int> tn(0, 6);
        const Scalar t(BigRat(tn(rng_), 6));
        std::vector<Point3> pts = slid_cube_points(t);
        const Mat3 m{{point(3, 2), point(3, 2), point(3, 2)}};
        if (m.det().is_zero()) continue;
        const Vec3 shift = point(4, 2);
        for (Point3& p : pts) p = m.apply(p) + shift;
        return PointConfig(std::move(pts));
      }
      default: {  // parallelepiped
        const Mat3 m{{point(3, 2), point(3, 2), point(3, 2)}};
        if (m.det().is_zero()) continue;
        const Vec3 shift = point(4, 2);
        std::vector<Point3> pts;
        for (int x : {0, 1})
          for (int y : {0, 1})
            for (int z : {0, 1})
              pts.push_back(m.apply(Point3{Scalar(x), Scalar(y), Scalar(z)}) + shift);
        return PointConfig(std::move(pts));
      }
    }
  }
}

}  // namespace mink3
