#include "mink3/norm.hpp"

#include <utility>

#include "mink3/errors.hpp"

namespace mink3 {

PolytopalNorm::PolytopalNorm(Polytope3 ball) : ball_(std::move(ball)) {
  if (ball_.dim != 3) throw InvalidInput("norm ball not full-dimensional");
  if (!ball_.symmetric) throw InvalidInput("norm ball not centrally symmetric");
  for (const HalfSpace& f : ball_.facets)
    if (f.offset.sign() <= 0) throw InternalError("symmetric full-dimensional ball without interior origin");
}

Scalar PolytopalNorm::eval(const Vec3& x) const {
  Scalar best(0);
  for (const HalfSpace& f : ball_.facets) {
    Scalar v = dot(f.normal, x) / f.offset;
    if (v > best) best = std::move(v);
  }
  return best;
}

PolytopalNorm PolytopalNorm::dual() const { return PolytopalNorm(polar(ball_)); }

FaceRef PolytopalNorm::unit_face(const Vec3& x) const {
  if (x.is_zero()) throw InvalidInput("unit face of the zero vector");
  const Scalar n = eval(x);
  const Location loc = locate(ball_, x / n);
  if (loc.kind != Location::Kind::OnFace) throw InternalError("normalized vector not on the unit sphere");
  return loc.face;
}

std::vector<FaceRef> PolytopalNorm::two_faces() const {
  std::vector<FaceRef> out;
  out.reserve(ball_.faces2.size());
  for (size_t i = 0; i < ball_.faces2.size(); ++i) out.push_back(FaceRef{2, static_cast<int>(i)});
  return out;
}

Scalar PolytopalNorm::polygon_perimeter(const std::vector<Point3>& polygon) const {
  if (polygon.size() < 2) throw InvalidInput("perimeter needs at least 2 vertices");
  if (polygon.size() >= 4) {
    const Vec3 n = cross(polygon[1] - polygon[0], polygon[2] - polygon[0]);
    for (size_t i = 3; i < polygon.size(); ++i)
      if (!dot(n, polygon[i] - polygon[0]).is_zero()) throw InvalidInput("perimeter of a non-planar polygon");
  }
  Scalar total(0);
  for (size_t i = 0; i < polygon.size(); ++i) total += eval(polygon[(i + 1) % polygon.size()] - polygon[i]);
  return total;
}

PlanarNorm::PlanarNorm(Section section) : section_(std::move(section)) {
  const auto& poly = section_.polygon;
  if (poly.size() < 3) throw InvalidInput("planar norm needs a polygon ball");
  for (size_t i = 0; i < poly.size(); ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % poly.size()];
    const Vec2 d = b - a;
    const Vec2 m{d.y, -d.x};  // outward for a ccw polygon
    const Scalar c = dot(m, a);
    if (c.sign() <= 0) throw InvalidInput("planar norm polygon must contain the origin strictly");
    edges_.emplace_back(m, c);
  }
}

Scalar PlanarNorm::eval(const Vec2& x) const {
  Scalar best(0);
  for (const auto& [m, c] : edges_) {
    Scalar v = dot(m, x) / c;
    if (v > best) best = std::move(v);
  }
  return best;
}

Scalar PlanarNorm::self_perimeter() const {
  const auto& poly = section_.polygon;
  Scalar total(0);
  for (size_t i = 0; i < poly.size(); ++i) total += eval(poly[(i + 1) % poly.size()] - poly[i]);
  return total;
}

}  // namespace mink3
