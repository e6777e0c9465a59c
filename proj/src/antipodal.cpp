#include "mink3/antipodal.hpp"

#include <algorithm>

#include "mink3/errors.hpp"

namespace mink3 {

PointConfig::PointConfig(std::vector<Point3> pts) : points(std::move(pts)) {
  if (points.empty()) throw InvalidInput("empty point configuration");
  std::vector<Point3> sorted = points;
  std::sort(sorted.begin(), sorted.end(), [](const Point3& a, const Point3& b) { return lex_less(a, b); });
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) throw InvalidInput("point configuration has repeated points");
}

bool is_antipodal(const PointConfig& s) {
  const size_t n = s.size();
  if (n <= 2) return true;
  const Polytope3 d = difference_body(s.points);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const Location loc = locate(d, s.points[i] - s.points[j]);
      if (loc.kind == Location::Kind::Interior) return false;
      if (loc.kind == Location::Kind::Outside)
        throw InternalError("pairwise difference outside its own difference body");
    }
  }
  return true;
}

Scalar RadonData::max_barycentric() const { return std::max({lambda, mu, nu}); }
Scalar RadonData::min_ratio() const { return std::min(t, Scalar(1) - t); }

std::pair<bool, FivePointData> five_point_condition(const PointConfig& s) {
  if (s.size() != 5) throw InvalidInput("five_point_condition needs exactly 5 points");
  FivePointData data;

  const Polytope3 hull = convex_hull(s.points);
  if (hull.vertices.size() != 5) return {false, data};
  data.in_convex_position = true;

  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      std::array<int, 3> abc{};
      int k = 0;
      for (int m = 0; m < 5; ++m)
        if (m != i && m != j) abc[k++] = m;
      const Point3& a = s.points[abc[0]];
      const Point3& b = s.points[abc[1]];
      const Point3& c = s.points[abc[2]];
      const Point3& d = s.points[i];
      const Point3& e = s.points[j];

      const Vec3 n = cross(b - a, c - a);
      if (n.is_zero()) continue;
      const int sd = dot(n, d - a).sign();
      const int se = dot(n, e - a).sign();
      if (sd == 0 || se == 0 || sd == se) continue;  // need strictly opposite sides

      const Scalar t = dot(n, a - d) / dot(n, e - d);
      const Point3 p = d + t * (e - d);

      // Barycentrics of p in triangle abc via scalar triple products.
      const Scalar denom = dot(n, n);
      const Scalar mu = det3(p - a, c - a, n) / denom;
      const Scalar nu = det3(b - a, p - a, n) / denom;
      const Scalar lambda = Scalar(1) - mu - nu;
      if (lambda.sign() < 0 || mu.sign() < 0 || nu.sign() < 0) continue;  // p outside the triangle
      if (p == a || p == b || p == c) continue;                           // labeling needs p not in S

      RadonData rd;
      rd.labeling = {abc[0], abc[1], abc[2], i, j};
      rd.lambda = lambda;
      rd.mu = mu;
      rd.nu = nu;
      rd.t = t;
      const bool verdict = rd.max_barycentric() <= rd.min_ratio();
      data.radon = rd;
      return {verdict, data};
    }
  }

  // Degenerate convex-position input (the Radon point hits a vertex):
  // decide by the boundary test of Lemma 1 and flag the fallback.
  data.lemma1_fallback = true;
  return {is_antipodal(s), data};
}

bool twelve_point_test(const std::array<Point3, 3>& a, const std::array<Point3, 3>& b) {
  const Vec3 na = cross(a[1] - a[0], a[2] - a[0]);
  const Vec3 nb = cross(b[1] - b[0], b[2] - b[0]);
  if (na.is_zero() || nb.is_zero()) throw InvalidInput("twelve_point_test: collinear triple");
  if (!cross(na, nb).is_zero()) throw InvalidInput("twelve_point_test: planes not parallel");
  if (dot(na, b[0] - a[0]).is_zero()) throw InvalidInput("twelve_point_test: planes not distinct");

  std::vector<Point3> diffs;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) {
        diffs.push_back(a[i] - a[j]);
      }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) diffs.push_back(b[i] - b[j]);

  for (size_t k = 0; k < diffs.size(); ++k) {
    std::vector<Point3> rest;
    for (size_t m = 0; m < diffs.size(); ++m)
      if (m != k) rest.push_back(diffs[m]);
    const Polytope3 hull = convex_hull(rest);
    if (locate(hull, diffs[k]).kind == Location::Kind::Interior) return false;
  }
  return true;
}

PlaneSplit parallel_plane_split(const PointConfig& s) {
  if (s.size() != 6) throw InvalidInput("parallel_plane_split needs exactly 6 points");
  if (!is_antipodal(s)) throw InvalidInput("parallel_plane_split: set is not antipodal");

  for (int i = 1; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      const std::array<int, 3> ga{0, i, j};
      std::array<int, 3> gb{};
      int k = 0;
      for (int m = 1; m < 6; ++m)
        if (m != i && m != j) gb[k++] = m;
      const Vec3 na = cross(s.points[ga[1]] - s.points[ga[0]], s.points[ga[2]] - s.points[ga[0]]);
      const Vec3 nb = cross(s.points[gb[1]] - s.points[gb[0]], s.points[gb[2]] - s.points[gb[0]]);
      if (na.is_zero() || nb.is_zero()) continue;
      if (!cross(na, nb).is_zero()) continue;
      if (dot(na, s.points[gb[0]] - s.points[ga[0]]).is_zero()) continue;  // same plane
      PlaneSplit out;
      out.group_a = ga;
      out.group_b = gb;
      out.plane_a = Plane::canonical(na, dot(na, s.points[ga[0]]));
      out.plane_b = Plane::canonical(na, dot(na, s.points[gb[0]]));
      return out;
    }
  }
  throw InternalError("Theorem 6 violated: antipodal 6-set without a parallel 3+3 plane split");
}

std::vector<Point3> slid_cube_points(const Scalar& t) {
  if (t.sign() < 0 || t > Scalar(1)) throw InvalidInput("slide parameter outside [0,1]");
  std::vector<Point3> pts;
  for (int x : {0, 1})
    for (int y : {0, 1})
      for (int z : {0, 1})
        if (!(x == 1 && y == 1)) pts.push_back(Point3{Scalar(x), Scalar(y), Scalar(z)});
  pts.push_back(Point3{Scalar(1), Scalar(1), t});
  return pts;
}

namespace {

bool is_combinatorial_octahedron(const Polytope3& hull) {
  if (hull.dim != 3 || hull.vertices.size() != 6 || hull.faces2.size() != 8 || hull.edges.size() != 12)
    return false;
  for (const Face2& f : hull.faces2)
    if (f.cycle.size() != 3) return false;
  return true;
}

std::optional<SixOctahedronData> find_parallel_opposite_facets(const Polytope3& hull) {
  for (size_t f = 0; f < hull.faces2.size(); ++f) {
    for (size_t g = f + 1; g < hull.faces2.size(); ++g) {
      bool disjoint = true;
      for (int v : hull.faces2[f].cycle)
        for (int w : hull.faces2[g].cycle)
          if (v == w) disjoint = false;
      if (!disjoint) continue;
      if (cross(hull.facets[f].normal, hull.facets[g].normal).is_zero())
        return SixOctahedronData{static_cast<int>(f), static_cast<int>(g)};
    }
  }
  return std::nullopt;
}

std::optional<SixSkewPrismData> find_skew_prism(const PointConfig& s, const Polytope3& hull) {
  for (const Face2& face : hull.faces2) {
    if (face.cycle.size() != 4) continue;
    // map hull cycle back to point indices
    std::array<int, 4> quad{};
    for (int k = 0; k < 4; ++k) {
      const Point3& v = hull.vertices[face.cycle[k]];
      int idx = -1;
      for (size_t m = 0; m < s.size(); ++m)
        if (s.points[m] == v) idx = static_cast<int>(m);
      if (idx < 0) return std::nullopt;
      quad[k] = idx;
    }
    std::array<int, 2> rest{};
    int k = 0;
    for (int m = 0; m < 6; ++m)
      if (std::find(quad.begin(), quad.end(), m) == quad.end()) rest[k++] = m;

    // try the 8 dihedral labelings of the cycle and both edge orientations
    for (int rot = 0; rot < 4; ++rot) {
      for (int refl = 0; refl < 2; ++refl) {
        std::array<int, 4> lab{};
        for (int m = 0; m < 4; ++m) lab[m] = quad[(rot + (refl ? 4 - m : m)) % 4];
        const Point3& a = s.points[lab[0]];
        const Point3& b = s.points[lab[1]];
        const Point3& c = s.points[lab[2]];
        const Point3& d = s.points[lab[3]];
        if (a + c != b + d) continue;  // not labeled as a parallelogram cycle
        const Vec3 w1 = b - a;
        const Vec3 w2 = d - a;
        for (int swap = 0; swap < 2; ++swap) {
          const int ei = swap ? rest[1] : rest[0];
          const int fi = swap ? rest[0] : rest[1];
          const Vec3 diff = s.points[fi] - s.points[ei];
          // diff = xi w1 + eta w2 within the facet plane
          const Vec3 n = cross(w1, w2);
          if (!dot(n, diff).is_zero()) continue;
          const Scalar denom = dot(n, n);
          const Scalar xi = det3(diff, w2, n) / denom;
          const Scalar eta = det3(w1, diff, n) / denom;
          if (xi != Scalar(1)) continue;
          if (eta < Scalar(-1) || eta > Scalar(1)) continue;
          const Scalar ss = std::max(Scalar(0), -eta);
          SixSkewPrismData out;
          out.parallelogram = lab;
          out.e = ei;
          out.f = fi;
          out.e_shift = a + ss * w2;
          out.f_shift = b + (ss + eta) * w2;
          out.ef_parallel_ab = eta.is_zero();
          // re-verify the witness
          if (out.f_shift - out.e_shift != diff) throw InternalError("skew prism witness broke");
          return out;
        }
      }
    }
  }
  return std::nullopt;
}

// Frames from two parallelogram facets sharing an edge; phi(unit pattern) = S.
std::optional<SevenSlidCubeData> find_slid_cube(const PointConfig& s, const Polytope3& hull) {
  std::vector<int> quads;
  for (size_t f = 0; f < hull.faces2.size(); ++f)
    if (hull.faces2[f].cycle.size() == 4) quads.push_back(static_cast<int>(f));

  auto quad_vertex_set = [&](int f) {
    std::vector<int> vs = hull.faces2[f].cycle;
    std::sort(vs.begin(), vs.end());
    return vs;
  };

  for (int qa : quads) {
    for (int qb : quads) {
      if (qa == qb) continue;
      // shared edge of the two quads
      const auto va = quad_vertex_set(qa);
      const auto vb = quad_vertex_set(qb);
      std::vector<int> shared;
      std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(shared));
      if (shared.size() != 2) continue;
      if (hull.edge_between(shared[0], shared[1]) < 0) continue;

      for (int flip = 0; flip < 2; ++flip) {
        const int pi = flip ? shared[1] : shared[0];
        const int qi = flip ? shared[0] : shared[1];
        const Point3& p = hull.vertices[pi];
        const Vec3 w3 = hull.vertices[qi] - p;

        auto generator_from = [&](int facet) -> std::optional<Vec3> {
          std::vector<Point3> others;
          for (int v : hull.faces2[facet].cycle)
            if (v != pi && v != qi) others.push_back(hull.vertices[v]);
          if (others.size() != 2) return std::nullopt;
          for (const Point3& cand : others) {
            const Vec3 w = cand - p;
            // quad must be exactly {p, p+w3, p+w, p+w+w3}
            const Point3 fourth = p + w + w3;
            if ((others[0] == cand ? others[1] : others[0]) == fourth) return w;
          }
          return std::nullopt;
        };
        const auto w1 = generator_from(qa);
        const auto w2 = generator_from(qb);
        if (!w1 || !w2) continue;
        const Mat3 lin = Mat3::from_columns(*w1, *w2, w3);
        if (lin.det().is_zero()) continue;
        const Affine phi{lin, p};
        const Affine inv = phi.inverse();

        std::vector<Point3> t_pts;
        for (const Point3& sp : s.points) t_pts.push_back(inv.apply(sp));
        // expect the six fixed lattice points plus (1,1,t)
        std::vector<Point3> expect;
        for (int x : {0, 1})
          for (int y : {0, 1})
            for (int z : {0, 1})
              if (!(x == 1 && y == 1)) expect.push_back(Point3{Scalar(x), Scalar(y), Scalar(z)});
        std::optional<Scalar> t;
        size_t matched = 0;
        std::vector<char> used(t_pts.size(), 0);
        for (const Point3& e : expect) {
          for (size_t m = 0; m < t_pts.size(); ++m)
            if (!used[m] && t_pts[m] == e) {
              used[m] = 1;
              ++matched;
              break;
            }
        }
        if (matched != expect.size()) continue;
        for (size_t m = 0; m < t_pts.size(); ++m) {
          if (used[m]) continue;
          const Point3& cand = t_pts[m];
          if (cand.x == Scalar(1) && cand.y == Scalar(1) && cand.z.sign() >= 0 && cand.z <= Scalar(1))
            t = cand.z;
        }
        if (!t) continue;
        // re-verify: phi(slid cube(t)) must reproduce S as a set
        std::vector<Point3> model = slid_cube_points(*t);
        size_t hits = 0;
        for (const Point3& mp : model)
          for (const Point3& sp : s.points)
            if (phi.apply(mp) == sp) {
              ++hits;
              break;
            }
        if (hits != 7) continue;
        return SevenSlidCubeData{phi, *t};
      }
    }
  }
  return std::nullopt;
}

std::optional<EightParallelepipedData> find_parallelepiped(const PointConfig& s, const Polytope3& hull) {
  if (hull.vertices.size() != 8 || hull.faces2.size() != 6) return std::nullopt;
  const auto nb = hull.neighbors_of_vertex(0);
  if (nb.size() != 3) return std::nullopt;
  const Point3& v = hull.vertices[0];
  const Affine phi{Mat3::from_columns(hull.vertices[nb[0]] - v, hull.vertices[nb[1]] - v,
                                      hull.vertices[nb[2]] - v),
                   v};
  if (phi.linear.det().is_zero()) return std::nullopt;
  const Affine inv = phi.inverse();
  size_t hits = 0;
  for (const Point3& sp : s.points) {
    const Point3 t = inv.apply(sp);
    auto is01 = [](const Scalar& x) { return x == Scalar(0) || x == Scalar(1); };
    if (is01(t.x) && is01(t.y) && is01(t.z)) ++hits;
  }
  if (hits != 8) return std::nullopt;
  return EightParallelepipedData{phi};
}

}  // namespace

AntipodalClass classify(const PointConfig& s) {
  if (!is_antipodal(s)) throw InvalidInput("classify: set is not antipodal");
  AntipodalClass out;
  out.size = static_cast<int>(s.size());

  if (s.size() <= 4) {
    out.kind = AntipodalClass::Kind::Small;
    return out;
  }
  if (s.size() == 5) {
    out.kind = AntipodalClass::Kind::Five;
    out.five = five_point_condition(s).second;
    return out;
  }

  const Polytope3 hull = convex_hull(s.points);
  if (hull.vertices.size() != s.size())
    throw InternalError("antipodal set with a non-extreme point");

  if (s.size() == 6) {
    if (is_combinatorial_octahedron(hull)) {
      auto oct = find_parallel_opposite_facets(hull);
      if (!oct) throw InternalError("Theorem 6 violated: octahedron without parallel opposite facets");
      out.kind = AntipodalClass::Kind::SixOctahedron;
      out.six_octahedron = *oct;
      return out;
    }
    auto prism = find_skew_prism(s, hull);
    if (!prism) throw InternalError("Theorem 6 violated: 6-set neither octahedron nor skew prism");
    out.kind = AntipodalClass::Kind::SixSkewPrism;
    out.six_prism = *prism;
    return out;
  }
  if (s.size() == 7) {
    auto seven = find_slid_cube(s, hull);
    if (!seven) throw InternalError("Theorem 7 violated: antipodal 7-set is not a slid cube");
    out.kind = AntipodalClass::Kind::SevenSlidCube;
    out.seven = *seven;
    return out;
  }
  if (s.size() == 8) {
    auto eight = find_parallelepiped(s, hull);
    if (!eight) throw InternalError("Danzer-Grunbaum violated: antipodal 8-set is not a parallelepiped");
    out.kind = AntipodalClass::Kind::EightParallelepiped;
    out.eight = *eight;
    return out;
  }
  throw InternalError("antipodal set of size > 8 accepted");
}

std::pair<HalfSpace, HalfSpace> lemma3_planes(const PointConfig& s, const std::array<int, 5>& labeling) {
  if (s.size() != 5) throw InvalidInput("lemma3_planes needs exactly 5 points");
  std::array<char, 5> seen{};
  for (int i : labeling) {
    if (i < 0 || i >= 5 || seen[i]) throw InvalidInput("lemma3_planes: labeling is not a permutation");
    seen[i] = 1;
  }
  const Point3& a = s.points[labeling[0]];
  const Point3& b = s.points[labeling[1]];
  const Point3& c = s.points[labeling[2]];
  const Point3& d = s.points[labeling[3]];
  const Point3& e = s.points[labeling[4]];

  const Polytope3 hull = convex_hull(s.points);
  const Scalar half = Scalar(1) / Scalar(2);
  if (locate(hull, half * (d + e)).kind != Location::Kind::Interior)
    throw InvalidInput("lemma3_planes: [de] does not meet the interior of conv S");

  auto supporting = [&](Vec3 n, const Point3& through, const char* which) {
    if (n.is_zero()) throw InvalidInput(std::string("lemma3_planes: ") + which + " direction plane undefined");
    int lo = 0, hi = 0;
    for (const Point3& p : s.points) {
      const int sg = dot(n, p - through).sign();
      if (sg > 0) hi = 1;
      if (sg < 0) lo = 1;
    }
    if (lo && hi) throw NotSupportingError(std::string("NotSupporting: ") + which + " plane cuts conv S");
    if (hi) n = -n;  // orient outward
    return HalfSpace::canonical(n, dot(n, through));
  };

  const HalfSpace plane_e = supporting(cross(b - a, d - c), e, "through-e");
  const HalfSpace plane_a = supporting(cross(c - b, d - b), a, "through-a");
  return {plane_e, plane_a};
}

}  // namespace mink3
