#ifndef MINK3_EQUILATERAL_HPP
#define MINK3_EQUILATERAL_HPP

#include <array>
#include <optional>
#include <vector>

#include "mink3/antipodal.hpp"
#include "mink3/norm.hpp"

namespace mink3 {

struct EquilateralWitness {
  PointConfig points;
  Scalar lambda;
  // face of the unit sphere carrying (p_i - p_j) / lambda, for i < j
  std::vector<std::pair<std::pair<int, int>, FaceRef>> pair_faces;
};

/// Exact equilaterality check; returns the witness with the common distance
/// and per-pair unit-sphere faces, or nothing.
std::optional<EquilateralWitness> is_equilateral(const PointConfig& s, const PolytopalNorm& n);

/// One-skeleton of an affine regular octahedron conv{+-e1,+-e2,+-e3} in the
/// boundary of the unit ball: generators plus the facet carrying each of
/// the 12 edges. Endpoint encoding: signed indices +-1, +-2, +-3.
struct SkeletonWitness {
  std::array<Vec3, 3> generators;
  struct EdgeFace {
    int si, sj;  // signed endpoint indices
    int facet;
  };
  std::vector<EdgeFace> edge_faces;
};

/// Complete decision: enumerates facet assignments for the six edge classes
/// with per-generator geometric pruning; the nonlinear det != 0 condition is
/// settled by enumerating vertex triples of the per-generator feasible
/// regions (det is trilinear on their product, so vertices decide).
std::optional<SkeletonWitness> octa_skeleton_search(const PolytopalNorm& n);

/// Semiregular hexagon of side 1 inside a 2-face: vertices q1..q6 cyclic,
/// sides w_i = q_{i+1} - q_i with ||w_i|| = 1 and w1+w3+w5 = 0.
struct HexagonWitness {
  FaceRef face;
  std::array<Point3, 6> vertices;
  std::array<Vec3, 6> sides;
};

/// Complete decision via exact linear feasibility over cyclic assignments
/// of the six sides to edges of the planar unit polygon.
std::optional<HexagonWitness> hexagon_face_search(const PolytopalNorm& n);

/// Theorem-4 sandwich P_lambda subset phi(B) subset [-1,1]^3.
struct SandwichWitness {
  Mat3 phi;
  Scalar lambda;
};

std::optional<SandwichWitness> p_lambda_check(const PolytopalNorm& n);

/// 16 vertices of P_lambda.
std::vector<Point3> p_lambda_vertices(const Scalar& lambda);

/// Search for k mutually unit-distance points (p_1 = o fixed, distance 1):
/// backtracking over facet assignments for all pairwise differences with
/// incremental exact LP feasibility. Complete for polytopal norms.
std::optional<EquilateralWitness> equilateral_point_search(const PolytopalNorm& n, int k);

inline std::optional<EquilateralWitness> five_point_search(const PolytopalNorm& n) {
  return equilateral_point_search(n, 5);
}

enum class GateOutcome { Passed, Failed, Skipped };

struct MaxEquilateralResult {
  int e = 0;
  EquilateralWitness witness;
  GateOutcome parallelepiped = GateOutcome::Skipped;
  GateOutcome sandwich_gate = GateOutcome::Skipped;
  GateOutcome skeleton_gate = GateOutcome::Skipped;
  GateOutcome hexagon_gate = GateOutcome::Skipped;
  GateOutcome five_gate = GateOutcome::Skipped;
  std::optional<SandwichWitness> sandwich;
  std::optional<SkeletonWitness> skeleton;
  std::optional<HexagonWitness> hexagon;
};

/// e(X^3) for a polytopal norm, decided by the gate cascade
/// 8 (parallelepiped) / 7 (Theorem 4) / 6 (Theorem 3) / 5 / 4 (Petty floor),
/// with a re-verified witness and the failed gates as upper-bound evidence.
MaxEquilateralResult max_equilateral(const PolytopalNorm& n);

/// Whether the ball is an affine image of a cube.
bool is_parallelepiped(const Polytope3& p);

/// Recovers the 6-point equilateral set from a hexagon witness
/// (two triangles in parallel planes whose difference is the hexagon).
PointConfig hexagon_to_equilateral(const HexagonWitness& w, const PolytopalNorm& n);

struct TouchingResult {
  int t = 0;
  std::vector<Vec3> translations;  // pairwise touching family C + v_i
  MaxEquilateralResult detail;
};

/// t(C) = e of the norm with unit ball C - C, plus a touching realization.
TouchingResult touching_number(const Polytope3& body);

/// True iff every pair of translates C + v_i touches, i.e. every pairwise
/// difference lies exactly on the boundary of C - C.
bool verify_touching(const Polytope3& body, const std::vector<Vec3>& translations);

}  // namespace mink3

#endif  // MINK3_EQUILATERAL_HPP
