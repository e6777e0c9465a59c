#ifndef MINK3_ORACLES_HPP
#define MINK3_ORACLES_HPP

#include <cstdint>
#include <random>

#include "mink3/antipodal.hpp"

namespace mink3 {

/// Definition-based antipodality oracle, independent of the hull/locate
/// route: for every pair (x, y) an exact LP searches for a direction u with
/// <u,s> maximal at x, minimal at y and <u, x-y> = 1, i.e. two parallel
/// supporting planes through x and y.
bool antipodal_support_oracle(const PointConfig& s);

/// Deterministic random data for property suites. Coordinates are rationals
/// with numerators in [-span, span] and denominators up to max_den (kept
/// small so exact hulls and LPs stay cheap).
class ConfigGen {
 public:
  explicit ConfigGen(uint64_t seed) : rng_(seed) {}

  Scalar rational(int span = 8, int max_den = 8);
  Point3 point(int span = 8, int max_den = 8);

  /// 5 points in convex position (each a hull vertex).
  PointConfig five_convex_position();

  /// 5-point configuration built from a Radon labeling with prescribed
  /// condition-(*) verdict: barycentrics and segment ratio chosen so that
  /// max(lambda,mu,nu) <= min(t,1-t) holds iff `satisfy`.
  PointConfig five_structured(bool satisfy);

  /// Random 3 + 3 configuration in two distinct parallel planes.
  std::pair<std::array<Point3, 3>, std::array<Point3, 3>> parallel_triples();

  /// Random antipodal set of size 4..8 (tetrahedra, structured five-point
  /// sets, Proposition-4 six-sets, slid cubes, parallelepipeds).
  PointConfig antipodal_set();

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mink3

#endif  // MINK3_ORACLES_HPP
