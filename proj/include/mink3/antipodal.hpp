#ifndef MINK3_ANTIPODAL_HPP
#define MINK3_ANTIPODAL_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "mink3/polytope.hpp"

namespace mink3 {

/// Finite labeled point set under antipodality analysis.
struct PointConfig {
  std::vector<Point3> points;

  PointConfig() = default;
  explicit PointConfig(std::vector<Point3> pts);

  size_t size() const { return points.size(); }
};

/// Support verification of a claimed plane failed.
struct NotSupportingError : InvalidInput {
  explicit NotSupportingError(const std::string& what) : InvalidInput(what) {}
};

/// A point set is antipodal iff every pairwise difference lies on the
/// relative boundary of conv(S - S). Lower-dimensional sets are assessed
/// inside their affine hull, matching the planar classification.
bool is_antipodal(const PointConfig& s);

/// Radon labeling (a,b,c,d,e): [de] crosses triangle abc at
/// p = lambda a + mu b + nu c = d + t (e - d), p not in S.
struct RadonData {
  std::array<int, 5> labeling;
  Scalar lambda, mu, nu;
  Scalar t;

  Scalar max_barycentric() const;
  Scalar min_ratio() const;  // min(t, 1-t)
};

struct FivePointData {
  bool in_convex_position = false;
  std::optional<RadonData> radon;  // absent: degenerate, Lemma-1 fallback decided
  bool lemma1_fallback = false;
};

/// Proposition 2 decision for five points: true iff in convex position and
/// max(lambda, mu, nu) <= min(t, 1 - t) for the Radon labeling.
std::pair<bool, FivePointData> five_point_condition(const PointConfig& s);

/// Proposition 4 decision: given triangles {a_i} in a plane and {b_i} in a
/// distinct parallel plane, true iff none of the 12 differences a_i - a_j,
/// b_i - b_j lies in the relative interior of the hull of the other 11.
bool twelve_point_test(const std::array<Point3, 3>& a, const std::array<Point3, 3>& b);

struct PlaneSplit {
  std::array<int, 3> group_a, group_b;
  Plane plane_a, plane_b;
};

/// Two parallel planes holding 3 + 3 points of an antipodal 6-set
/// (existence is Theorem 6; failure to find one aborts loudly).
PlaneSplit parallel_plane_split(const PointConfig& s);

struct SixOctahedronData {
  int facet_a, facet_b;  // parallel opposite facets of conv S
};

struct SixSkewPrismData {
  std::array<int, 4> parallelogram;  // point indices a, b, c, d in cycle order
  int e, f;                          // remaining edge
  Point3 e_shift, f_shift;           // e' in [ad], f' in [bc] with f'-e' = f-e
  bool ef_parallel_ab;
};

struct SevenSlidCubeData {
  Affine phi;  // phi(standard slid cube points) = S
  Scalar t;    // slide parameter in [0, 1]
};

struct EightParallelepipedData {
  Affine phi;  // phi({0,1}^3) = S
};

struct AntipodalClass {
  enum class Kind { Small, Five, SixOctahedron, SixSkewPrism, SevenSlidCube, EightParallelepiped };
  Kind kind;
  int size = 0;
  std::optional<FivePointData> five;
  std::optional<SixOctahedronData> six_octahedron;
  std::optional<SixSkewPrismData> six_prism;
  std::optional<SevenSlidCubeData> seven;
  std::optional<EightParallelepipedData> eight;
};

/// Full classification of an antipodal set (sizes 1..8); witnesses are
/// re-verified before returning. Throws InvalidInput when not antipodal.
AntipodalClass classify(const PointConfig& s);

/// The seven points of the standard slid cube: {0,1}^3 with (1,1,0) and
/// (1,1,1) replaced by (1,1,t).
std::vector<Point3> slid_cube_points(const Scalar& t);

/// Lemma 3 supporting planes for a labeled antipodal 5-set whose segment
/// [de] meets the interior: (plane through e containing directions ab and
/// cd, plane through a parallel to bcd). Verification failure throws
/// NotSupportingError.
std::pair<HalfSpace, HalfSpace> lemma3_planes(const PointConfig& s, const std::array<int, 5>& labeling);

}  // namespace mink3

#endif  // MINK3_ANTIPODAL_HPP
