#include "mink3/linalg.hpp"

namespace mink3 {

Mat3 Mat3::inverse() const {
  const Scalar d = det();
  if (d.is_zero()) throw InvalidInput("singular matrix has no inverse");
  // adj(M)^T rows are cross products of M's rows; inverse = adj / det.
  const Vec3 c0 = cross(row[1], row[2]);
  const Vec3 c1 = cross(row[2], row[0]);
  const Vec3 c2 = cross(row[0], row[1]);
  // adj columns c0,c1,c2 give M^-1 = (1/det) * [c0 c1 c2] as columns.
  Mat3 inv = Mat3::from_columns(c0, c1, c2);
  for (auto& r : inv.row) r = Vec3{r.x / d, r.y / d, r.z / d};
  return inv;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  const Mat3 bt = b.transpose();
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    out.row[i] = Vec3{dot(a.row[i], bt.row[0]), dot(a.row[i], bt.row[1]), dot(a.row[i], bt.row[2])};
  return out;
}

Vec3 solve3(const Mat3& m, const Vec3& rhs) {
  const Scalar d = m.det();
  if (d.is_zero()) throw InvalidInput("singular linear system");
  // Cramer's rule.
  Mat3 mx = m, my = m, mz = m;
  mx.row[0].x = rhs.x; mx.row[1].x = rhs.y; mx.row[2].x = rhs.z;
  my.row[0].y = rhs.x; my.row[1].y = rhs.y; my.row[2].y = rhs.z;
  mz.row[0].z = rhs.x; mz.row[1].z = rhs.y; mz.row[2].z = rhs.z;
  return {mx.det() / d, my.det() / d, mz.det() / d};
}

}  // namespace mink3
