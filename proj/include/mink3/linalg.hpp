#ifndef MINK3_LINALG_HPP
#define MINK3_LINALG_HPP

#include <array>
#include <string>
#include <vector>

#include "mink3/scalar.hpp"

namespace mink3 {

struct Vec3 {
  Scalar x, y, z;

  Vec3() = default;
  Vec3(Scalar x_, Scalar y_, Scalar z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  friend Vec3 operator*(const Scalar& s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
  friend Vec3 operator/(const Vec3& v, const Scalar& s) { return {v.x / s, v.y / s, v.z / s}; }

  friend bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
  friend bool operator!=(const Vec3& a, const Vec3& b) { return !(a == b); }

  bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
  std::string str() const { return x.str() + " " + y.str() + " " + z.str(); }
};

using Point3 = Vec3;

inline Scalar dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline Scalar det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

/// Lexicographic order by (x, y, z); used for all canonical orderings.
inline bool lex_less(const Vec3& a, const Vec3& b) {
  int c = Scalar::cmp(a.x, b.x);
  if (c != 0) return c < 0;
  c = Scalar::cmp(a.y, b.y);
  if (c != 0) return c < 0;
  return Scalar::cmp(a.z, b.z) < 0;
}

/// Sign of det(b-a, c-a, d-a): +1 when d lies on the positive side of the
/// oriented plane through a, b, c.
inline int orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return det3(b - a, c - a, d - a).sign();
}

struct Vec2 {
  Scalar x, y;

  Vec2() = default;
  Vec2(Scalar x_, Scalar y_) : x(std::move(x_)), y(std::move(y_)) {}

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  friend Vec2 operator*(const Scalar& s, const Vec2& v) { return {s * v.x, s * v.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
};

inline Scalar dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Scalar cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

inline bool lex_less(const Vec2& a, const Vec2& b) {
  int c = Scalar::cmp(a.x, b.x);
  if (c != 0) return c < 0;
  return Scalar::cmp(a.y, b.y) < 0;
}

/// Row-major 3x3 matrix over the scalar field.
struct Mat3 {
  std::array<Vec3, 3> row;

  static Mat3 identity() { return {{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}}; }
  static Mat3 diag(Scalar a, Scalar b, Scalar c) {
    return {{Vec3{std::move(a), 0, 0}, Vec3{0, std::move(b), 0}, Vec3{0, 0, std::move(c)}}};
  }
  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    return {{Vec3{c0.x, c1.x, c2.x}, Vec3{c0.y, c1.y, c2.y}, Vec3{c0.z, c1.z, c2.z}}};
  }

  Vec3 apply(const Vec3& v) const { return {dot(row[0], v), dot(row[1], v), dot(row[2], v)}; }

  Scalar det() const { return det3(row[0], row[1], row[2]); }

  Mat3 transpose() const {
    return {{Vec3{row[0].x, row[1].x, row[2].x}, Vec3{row[0].y, row[1].y, row[2].y},
             Vec3{row[0].z, row[1].z, row[2].z}}};
  }

  /// Exact inverse via the adjugate; throws InvalidInput when singular.
  Mat3 inverse() const;

  friend Mat3 operator*(const Mat3& a, const Mat3& b);
};

/// Affine map x -> linear * x + shift.
struct Affine {
  Mat3 linear;
  Vec3 shift;

  Vec3 apply(const Vec3& v) const { return linear.apply(v) + shift; }
  Affine inverse() const {
    Mat3 inv = linear.inverse();
    return {inv, -inv.apply(shift)};
  }
};

/// Solves M x = rhs exactly; throws InvalidInput when M is singular.
Vec3 solve3(const Mat3& m, const Vec3& rhs);

}  // namespace mink3

#endif  // MINK3_LINALG_HPP
