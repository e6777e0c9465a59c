#include "mink3/equilateral.hpp"

#include <algorithm>
#include <map>

#include "mink3/lp.hpp"

namespace mink3 {

std::optional<EquilateralWitness> is_equilateral(const PointConfig& s, const PolytopalNorm& n) {
  if (s.size() < 2) throw InvalidInput("equilateral check needs at least 2 points");
  EquilateralWitness w;
  w.points = s;
  w.lambda = n.distance(s.points[0], s.points[1]);
  for (size_t i = 0; i < s.size(); ++i) {
    for (size_t j = i + 1; j < s.size(); ++j) {
      if (n.distance(s.points[i], s.points[j]) != w.lambda) return std::nullopt;
      w.pair_faces.push_back({{static_cast<int>(i), static_cast<int>(j)},
                              n.unit_face(s.points[i] - s.points[j])});
    }
  }
  return w;
}

// ---------------------------------------------------------------------------
// Octahedron skeleton search
// ---------------------------------------------------------------------------

namespace {

// Convex subset of a plane tracked through repeated plane intersections.
struct FlatRegion {
  enum class Kind { Empty, Point, Segment, Polygon } kind = Kind::Empty;
  std::vector<Point3> pts;

  bool empty() const { return kind == Kind::Empty; }
};

FlatRegion make_polygon(std::vector<Point3> cycle) {
  FlatRegion r;
  r.kind = FlatRegion::Kind::Polygon;
  r.pts = std::move(cycle);
  return r;
}

FlatRegion clip_to_plane(const FlatRegion& r, const Vec3& normal, const Scalar& offset) {
  auto value = [&](const Point3& p) { return dot(normal, p) - offset; };
  switch (r.kind) {
    case FlatRegion::Kind::Empty:
      return r;
    case FlatRegion::Kind::Point:
      return value(r.pts[0]).is_zero() ? r : FlatRegion{};
    case FlatRegion::Kind::Segment: {
      const Scalar va = value(r.pts[0]);
      const Scalar vb = value(r.pts[1]);
      const int sa = va.sign(), sb = vb.sign();
      if (sa == 0 && sb == 0) return r;
      if (sa == 0) return FlatRegion{FlatRegion::Kind::Point, {r.pts[0]}};
      if (sb == 0) return FlatRegion{FlatRegion::Kind::Point, {r.pts[1]}};
      if (sa == sb) return FlatRegion{};
      const Scalar t = va / (va - vb);
      return FlatRegion{FlatRegion::Kind::Point, {r.pts[0] + t * (r.pts[1] - r.pts[0])}};
    }
    case FlatRegion::Kind::Polygon: {
      const size_t m = r.pts.size();
      std::vector<Scalar> vals(m);
      bool all_zero = true;
      for (size_t i = 0; i < m; ++i) {
        vals[i] = value(r.pts[i]);
        if (!vals[i].is_zero()) all_zero = false;
      }
      if (all_zero) return r;  // plane contains the polygon
      std::vector<Point3> hits;
      for (size_t i = 0; i < m; ++i) {
        const size_t j = (i + 1) % m;
        if (vals[i].is_zero()) hits.push_back(r.pts[i]);
        if (vals[i].sign() * vals[j].sign() < 0) {
          const Scalar t = vals[i] / (vals[i] - vals[j]);
          hits.push_back(r.pts[i] + t * (r.pts[j] - r.pts[i]));
        }
      }
      std::sort(hits.begin(), hits.end(), [](const Point3& a, const Point3& b) { return lex_less(a, b); });
      hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
      if (hits.empty()) return FlatRegion{};
      if (hits.size() == 1) return FlatRegion{FlatRegion::Kind::Point, std::move(hits)};
      if (hits.size() == 2) return FlatRegion{FlatRegion::Kind::Segment, std::move(hits)};
      throw InternalError("convex polygon met a plane in more than a segment");
    }
  }
  return FlatRegion{};
}

// The six antipodal edge classes [e_i, sign * e_j] of the octahedron
// skeleton, in canonical search order.
struct EdgeClass {
  int i, j;
  int sign;
};
constexpr EdgeClass kClasses[6] = {{0, 1, +1}, {0, 1, -1}, {0, 2, +1},
                                   {0, 2, -1}, {1, 2, +1}, {1, 2, -1}};

struct SkeletonSearch {
  const Polytope3& ball;
  std::vector<int> antip;              // antipodal facet index
  std::array<int, 6> assign{};         // facet per class
  std::array<FlatRegion, 3> region;    // feasible set per generator
  std::array<int, 3> constrained{};    // how many planes hit each region
  std::optional<SkeletonWitness> found;

  explicit SkeletonSearch(const Polytope3& b) : ball(b) {
    antip.resize(b.facets.size());
    for (size_t f = 0; f < b.facets.size(); ++f) antip[f] = b.antipodal_facet(static_cast<int>(f));
  }

  // Intersect generator g's region with the plane of facet f.
  bool constrain(int g, int f, std::array<FlatRegion, 3>& reg, std::array<int, 3>& cnt) const {
    const HalfSpace& hs = ball.facets[f];
    if (cnt[g] == 0) {
      reg[g] = make_polygon(ball.face_points(ball.faces2[f]));
    } else {
      reg[g] = clip_to_plane(reg[g], hs.normal, hs.offset);
    }
    ++cnt[g];
    return !reg[g].empty();
  }

  void dfs(int depth) {
    if (found) return;
    if (depth == 6) {
      finish();
      return;
    }
    const EdgeClass& c = kClasses[depth];
    for (size_t f = 0; f < ball.facets.size(); ++f) {
      if (depth == 0 && static_cast<int>(f) > antip[f]) continue;  // global +- symmetry
      auto reg = region;
      auto cnt = constrained;
      const int fi = static_cast<int>(f);
      const int fj = c.sign > 0 ? fi : antip[fi];
      if (!constrain(c.i, fi, reg, cnt)) continue;
      if (!constrain(c.j, fj, reg, cnt)) continue;
      std::swap(region, reg);
      std::swap(constrained, cnt);
      assign[depth] = fi;
      dfs(depth + 1);
      std::swap(region, reg);
      std::swap(constrained, cnt);
      if (found) return;
    }
  }

  // det(e1,e2,e3) is trilinear and each region constrains one generator
  // only, so the product of region vertex sets decides nondegeneracy.
  void finish() {
    for (const Point3& v0 : region[0].pts)
      for (const Point3& v1 : region[1].pts)
        for (const Point3& v2 : region[2].pts) {
          if (det3(v0, v1, v2).is_zero()) continue;
          SkeletonWitness w;
          w.generators = {v0, v1, v2};
          for (int k = 0; k < 6; ++k) {
            const EdgeClass& c = kClasses[k];
            const int f = assign[k];
            w.edge_faces.push_back({+(c.i + 1), c.sign * (c.j + 1), f});
            w.edge_faces.push_back({-(c.i + 1), -c.sign * (c.j + 1), antip[f]});
          }
          found = w;
          return;
        }
  }
};

Vec3 signed_generator(const SkeletonWitness& w, int s) {
  const Vec3& g = w.generators[std::abs(s) - 1];
  return s > 0 ? g : -g;
}

void verify_skeleton(const SkeletonWitness& w, const Polytope3& ball) {
  if (det3(w.generators[0], w.generators[1], w.generators[2]).is_zero())
    throw InternalError("skeleton witness with coplanar generators");
  if (w.edge_faces.size() != 12) throw InternalError("skeleton witness without 12 edges");
  for (const auto& ef : w.edge_faces) {
    const Vec3 a = signed_generator(w, ef.si);
    const Vec3 b = signed_generator(w, ef.sj);
    const HalfSpace& hs = ball.facets[ef.facet];
    if (hs.side(a) != 0 || hs.side(b) != 0) throw InternalError("skeleton edge off its facet plane");
    if (!contains(ball, a) || !contains(ball, b)) throw InternalError("skeleton vertex outside the ball");
  }
}

}  // namespace

std::optional<SkeletonWitness> octa_skeleton_search(const PolytopalNorm& n) {
  SkeletonSearch search(n.ball());
  search.dfs(0);
  if (search.found) verify_skeleton(*search.found, n.ball());
  return search.found;
}

// ---------------------------------------------------------------------------
// Semiregular hexagon search
// ---------------------------------------------------------------------------

namespace {

struct FacePolygon {
  Frame frame;
  std::vector<Vec2> cycle;                       // ccw
  std::vector<std::pair<Vec2, Scalar>> borders;  // <m,q> <= c edge forms
};

FacePolygon face_in_plane(const Polytope3& ball, int facet) {
  const HalfSpace& hs = ball.facets[facet];
  const Point3 foot = (hs.offset / dot(hs.normal, hs.normal)) * hs.normal;
  FacePolygon fp;
  fp.frame = Frame::for_plane(hs.normal, foot);
  for (const Point3& p : ball.face_points(ball.faces2[facet])) fp.cycle.push_back(fp.frame.project(p));
  const size_t m = fp.cycle.size();
  for (size_t i = 0; i < m; ++i) {
    const Vec2 d = fp.cycle[(i + 1) % m] - fp.cycle[i];
    const Vec2 out{d.y, -d.x};
    fp.borders.emplace_back(out, dot(out, fp.cycle[i]));
  }
  return fp;
}

// 0 in E_a + E_b + E_c for three edges of the unit polygon?
bool zero_sum_feasible(const std::vector<Vec2>& poly, int a, int b, int c) {
  const int E = static_cast<int>(poly.size());
  FeasibilityProblem fp(3);
  std::array<int, 3> ks{a % E, b % E, c % E};
  std::vector<Scalar> cx(3), cy(3);
  Scalar bx(0), by(0);
  for (int t = 0; t < 3; ++t) {
    const Vec2& p = poly[ks[t]];
    const Vec2 d = poly[(ks[t] + 1) % E] - poly[ks[t]];
    cx[t] = d.x;
    cy[t] = d.y;
    bx -= p.x;
    by -= p.y;
  }
  fp.add_eq(cx, bx);
  fp.add_eq(cy, by);
  for (int t = 0; t < 3; ++t) {
    std::vector<Scalar> row(3, Scalar(0));
    row[t] = Scalar(1);
    fp.add_le(row, Scalar(1));
    row[t] = Scalar(-1);
    fp.add_le(row, Scalar(0));
  }
  return fp.solve().has_value();
}

struct HexagonSearch {
  const PolytopalNorm& norm;
  const std::vector<Vec2>& unit;  // planar unit polygon, ccw
  const FacePolygon& face;
  int E;
  std::map<std::array<int, 3>, bool> triple_cache;
  std::array<int, 6> k{};
  std::optional<std::array<Scalar, 8>> solution;  // s1..s6, qx, qy

  bool triple_ok(int a, int b, int c) {
    std::array<int, 3> key{a % E, b % E, c % E};
    std::sort(key.begin(), key.end());
    auto it = triple_cache.find(key);
    if (it != triple_cache.end()) return it->second;
    const bool ok = zero_sum_feasible(unit, key[0], key[1], key[2]);
    triple_cache.emplace(key, ok);
    return ok;
  }

  // Convexity bookkeeping per consecutive pair (cyclic), from the edge-index
  // gap in the unrolled window. All turns are below pi except:
  //   gap E/2:     exactly pi iff s_j = s_i (side reversal) -> strict s_j < s_i
  //   gap E/2 - 1: exactly pi iff s_i = 0 and s_j = 1       -> corner exclusion
  // Gaps above E/2 force a turn of at least pi and are pruned combinatorially.
  bool solve_assignment() {
    std::vector<std::pair<int, int>> same_edge, reversal, corner;
    for (int i = 0; i < 6; ++i) {
      const int j = (i + 1) % 6;
      const int abs_j = i < 5 ? k[j] : k[0] + E;
      const int gap = abs_j - k[i];
      if (gap == 0) same_edge.push_back({i, j});
      if (gap == E / 2) reversal.push_back({i, j});
      if (gap == E / 2 - 1) corner.push_back({i, j});
    }

    for (int mask = 0; mask < (1 << corner.size()); ++mask) {
      FeasibilityProblem fp(8);
      auto edge_at = [&](int idx, Vec2* base, Vec2* dir) {
        const int e = k[idx] % E;
        *base = unit[e];
        *dir = unit[(e + 1) % E] - unit[e];
      };
      // alternating side sums vanish
      for (int parity = 0; parity < 2; ++parity) {
        std::vector<Scalar> rx(8, Scalar(0)), ry(8, Scalar(0));
        Scalar bx(0), by(0);
        for (int i = parity; i < 6; i += 2) {
          Vec2 base, dir;
          edge_at(i, &base, &dir);
          rx[i] = dir.x;
          ry[i] = dir.y;
          bx -= base.x;
          by -= base.y;
        }
        fp.add_eq(rx, bx);
        fp.add_eq(ry, by);
      }
      // s_i within the edge
      for (int i = 0; i < 6; ++i) {
        std::vector<Scalar> row(8, Scalar(0));
        row[i] = Scalar(1);
        fp.add_le(row, Scalar(1));
        row[i] = Scalar(-1);
        fp.add_le(row, Scalar(0));
      }
      for (const auto& [i, j] : same_edge) {
        std::vector<Scalar> row(8, Scalar(0));
        row[i] = Scalar(1);
        row[j] = Scalar(-1);
        fp.add_le(row, Scalar(0));
      }
      for (const auto& [i, j] : reversal) {
        std::vector<Scalar> row(8, Scalar(0));
        row[j] = Scalar(1);
        row[i] = Scalar(-1);
        fp.add_lt(row, Scalar(0));  // s_j < s_i
      }
      for (size_t c = 0; c < corner.size(); ++c) {
        const auto [i, j] = corner[c];
        std::vector<Scalar> row(8, Scalar(0));
        if (mask & (1 << c)) {
          row[i] = Scalar(-1);
          fp.add_lt(row, Scalar(0));  // s_i > 0
        } else {
          row[j] = Scalar(1);
          fp.add_lt(row, Scalar(1));  // s_j < 1
        }
      }
      // all hexagon vertices inside the face polygon
      for (int v = 0; v < 6; ++v) {
        for (const auto& [m, c] : face.borders) {
          std::vector<Scalar> row(8, Scalar(0));
          row[6] = m.x;
          row[7] = m.y;
          Scalar rhs = c;
          for (int j = 0; j < v; ++j) {
            Vec2 base, dir;
            edge_at(j, &base, &dir);
            rhs -= dot(m, base);
            row[j] = dot(m, dir);
          }
          fp.add_le(row, rhs);
        }
      }
      auto sol = fp.solve();
      if (sol) {
        std::array<Scalar, 8> out;
        std::copy(sol->begin(), sol->end(), out.begin());
        solution = out;
        return true;
      }
    }
    return false;
  }

  bool dfs(int depth) {
    if (depth == 6) return solve_assignment();
    int lo = k[depth - 1];
    const int hi = std::min(k[depth - 1] + E / 2, k[0] + E - 1);
    if (depth == 5) lo = std::max(lo, k[0] + E / 2);  // wrap gap stays <= E/2
    for (int v = lo; v <= hi; ++v) {
      k[depth] = v;
      if (depth == 4 && !triple_ok(k[0], k[2], k[4])) continue;
      if (depth == 5 && !triple_ok(k[1], k[3], k[5])) continue;
      if (dfs(depth + 1)) return true;
    }
    return false;
  }

  bool run() {
    if (E % 2 != 0) throw InternalError("symmetric unit polygon with odd edge count");
    for (int start = 0; start < E; ++start) {
      k[0] = start;
      if (dfs(1)) return true;
    }
    return false;
  }
};

void verify_hexagon(const HexagonWitness& w, const PolytopalNorm& n) {
  const Polytope3& ball = n.ball();
  const HalfSpace& hs = ball.facets[w.face.index];
  const Frame fr = Frame::for_plane(hs.normal, Point3{0, 0, 0});
  Vec3 odd_sum{Scalar(0), Scalar(0), Scalar(0)};
  for (int i = 0; i < 6; ++i) {
    if (w.sides[i] != w.vertices[(i + 1) % 6] - w.vertices[i])
      throw InternalError("hexagon sides inconsistent with vertices");
    if (n.eval(w.sides[i]) != Scalar(1)) throw InternalError("hexagon side without unit length");
    if (i % 2 == 0) odd_sum = odd_sum + w.sides[i];
    if (hs.side(w.vertices[i]) != 0 || !contains(ball, w.vertices[i]))
      throw InternalError("hexagon vertex off the host face");
    for (int j = i + 1; j < 6; ++j)
      if (w.vertices[i] == w.vertices[j]) throw InternalError("hexagon with repeated vertices");
  }
  if (!odd_sum.is_zero()) throw InternalError("hexagon alternating side sum nonzero");
  // convex traversal: left or straight turns only, no side reversal
  for (int i = 0; i < 6; ++i) {
    const Vec3& a = w.sides[i];
    const Vec3& b = w.sides[(i + 1) % 6];
    if (cross2(fr.project(a), fr.project(b)).sign() < 0)
      throw InternalError("hexagon traversal turns right");
    if ((a + b).is_zero()) throw InternalError("hexagon side reversal");
  }
}

}  // namespace

std::optional<HexagonWitness> hexagon_face_search(const PolytopalNorm& n) {
  const Polytope3& ball = n.ball();
  const Scalar six(6);
  for (size_t fi = 0; fi < ball.faces2.size(); ++fi) {
    // Theorem-3 necessity: a hexagon of perimeter 6 fits only in a face of
    // perimeter at least 6 (norm perimeters are monotone under inclusion).
    if (n.polygon_perimeter(ball.face_points(ball.faces2[fi])) < six) continue;

    const HalfSpace& hs = ball.facets[fi];
    const Section sec = planar_section(ball, hs.normal);
    const FacePolygon face = face_in_plane(ball, static_cast<int>(fi));

    HexagonSearch search{n, sec.polygon, face, static_cast<int>(sec.polygon.size()), {}, {}, {}};
    if (!search.run()) continue;

    const auto& sol = *search.solution;
    HexagonWitness w;
    w.face = FaceRef{2, static_cast<int>(fi)};
    Vec2 q{sol[6], sol[7]};
    for (int i = 0; i < 6; ++i) {
      w.vertices[i] = face.frame.lift(q);
      const int e = search.k[i] % search.E;
      const Vec2 base = sec.polygon[e];
      const Vec2 dir = sec.polygon[(e + 1) % search.E] - sec.polygon[e];
      q = q + base + sol[i] * dir;
    }
    for (int i = 0; i < 6; ++i) w.sides[i] = w.vertices[(i + 1) % 6] - w.vertices[i];
    verify_hexagon(w, n);
    return w;
  }
  return std::nullopt;
}

PointConfig hexagon_to_equilateral(const HexagonWitness& w, const PolytopalNorm& n) {
  // Split the side vectors into two triangles: the odd sides close triangle
  // -B, the even sides triangle A; the hexagon is A - B up to translation.
  const std::array<Vec3, 3> bpts = {Point3{0, 0, 0}, -w.sides[0], w.sides[2]};
  const std::array<Vec3, 3> apts = {Point3{0, 0, 0}, w.sides[1], w.sides[1] + w.sides[3]};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Vec3 tau = w.vertices[0] - (apts[i] - bpts[j]);
      std::vector<Point3> pts;
      for (const Vec3& a : apts) pts.push_back(a + tau);
      for (const Vec3& b : bpts) pts.push_back(b);
      bool distinct = true;
      for (size_t x = 0; x < pts.size() && distinct; ++x)
        for (size_t y = x + 1; y < pts.size(); ++y)
          if (pts[x] == pts[y]) distinct = false;
      if (!distinct) continue;
      const PointConfig cand(pts);
      auto witness = is_equilateral(cand, n);
      if (witness && witness->lambda == Scalar(1)) return cand;
    }
  }
  throw InternalError("hexagon witness does not yield a 6-point equilateral set");
}

// ---------------------------------------------------------------------------
// Theorem 4 sandwich
// ---------------------------------------------------------------------------

std::vector<Point3> p_lambda_vertices(const Scalar& lambda) {
  if (lambda.sign() < 0 || lambda > Scalar(1)) throw InvalidInput("lambda outside [0,1]");
  std::vector<Point3> out;
  auto both = [&out](Point3 p) {
    out.push_back(p);
    out.push_back(-p);
  };
  both({-1, 1, 1});
  both({1, -1, 1});
  both({-1, 0, 1});
  both({1, 0, 1});
  both({0, 1, 1});
  both({0, 1, -1});
  both({Scalar(1), Scalar(1), -lambda});
  both({Scalar(1), Scalar(1), Scalar(1) - lambda});
  return out;
}

namespace {

const std::vector<Point3>& p_lambda_constant_vertices() {
  static const std::vector<Point3> v = [] {
    std::vector<Point3> out;
    auto both = [&out](Point3 p) {
      out.push_back(p);
      out.push_back(-p);
    };
    both({-1, 1, 1});
    both({1, -1, 1});
    both({-1, 0, 1});
    both({1, 0, 1});
    both({0, 1, 1});
    both({0, 1, -1});
    return out;
  }();
  return v;
}

// lambda-affine vertices u + lambda * r
const std::vector<std::pair<Vec3, Vec3>>& p_lambda_moving_vertices() {
  static const std::vector<std::pair<Vec3, Vec3>> v = {
      {{1, 1, 0}, {0, 0, -1}},
      {{1, 1, 1}, {0, 0, -1}},
      {{-1, -1, 0}, {0, 0, 1}},
      {{-1, -1, -1}, {0, 0, 1}},
  };
  return v;
}

}  // namespace

std::optional<SandwichWitness> p_lambda_check(const PolytopalNorm& n) {
  const Polytope3& ball = n.ball();
  const size_t nf = ball.facets.size();
  const Scalar one(1);

  std::vector<Vec3> unit_normals;  // n_f / c_f, so facets read <n, x> <= 1
  unit_normals.reserve(nf);
  for (const HalfSpace& f : ball.facets) unit_normals.push_back(f.normal / f.offset);

  for (size_t f1 = 0; f1 < nf; ++f1) {
    for (size_t f2 = 0; f2 < nf; ++f2) {
      if (f2 == f1) continue;
      for (size_t f3 = 0; f3 < nf; ++f3) {
        if (f3 == f1 || f3 == f2) continue;
        const Mat3 phi{{unit_normals[f1], unit_normals[f2], unit_normals[f3]}};
        if (phi.det().is_zero()) continue;

        // phi(B) inside the cube
        bool inside = true;
        for (const Point3& v : ball.vertices) {
          const Point3 y = phi.apply(v);
          if (y.x > one || -y.x > one || y.y > one || -y.y > one || y.z > one || -y.z > one) {
            inside = false;
            break;
          }
        }
        if (!inside) continue;

        // facets of phi(B): normals phi^-T n_f, offsets unchanged
        const Mat3 phi_inv_t = phi.inverse().transpose();
        bool constants_ok = true;
        Scalar lo(0), hi(1);
        for (size_t f = 0; f < nf && constants_ok; ++f) {
          const Vec3 m = phi_inv_t.apply(ball.facets[f].normal);
          const Scalar c = ball.facets[f].offset;
          for (const Point3& u : p_lambda_constant_vertices()) {
            if (dot(m, u) > c) {
              constants_ok = false;
              break;
            }
          }
          if (!constants_ok) break;
          for (const auto& [u, r] : p_lambda_moving_vertices()) {
            const Scalar a = dot(m, u);
            const Scalar b = dot(m, r);
            const int sb = b.sign();
            if (sb == 0) {
              if (a > c) {
                constants_ok = false;
                break;
              }
            } else if (sb > 0) {
              hi = std::min(hi, (c - a) / b);
            } else {
              lo = std::max(lo, (c - a) / b);
            }
          }
          if (lo > hi) constants_ok = false;
        }
        if (!constants_ok || lo > hi) continue;

        SandwichWitness w{phi, lo};
        // re-verify the sandwich at the chosen lambda
        const Mat3 inv = phi.inverse();
        for (const Point3& v : p_lambda_vertices(w.lambda))
          if (n.eval(inv.apply(v)) > one) throw InternalError("sandwich witness fails P_lambda containment");
        return w;
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// k-point equilateral search
// ---------------------------------------------------------------------------

namespace {

struct PointSearch {
  const Polytope3& ball;
  int k;                                  // total points, p_0 = o
  std::vector<std::pair<int, int>> diffs;  // (i, j): p_i - p_j in search order
  std::vector<int> assign;                // facet per diff
  std::vector<int> half;                  // canonical facet of each +- pair
  std::vector<int> antip;
  std::vector<std::vector<int>> facet_neighbors;
  std::map<std::array<int, 3>, bool> sum_compat_cache;
  IncrementalFeasibility inc;
  std::optional<std::vector<Scalar>> solution;

  PointSearch(const Polytope3& b, int kk) : ball(b), k(kk), inc(3 * (kk - 1)) {
    for (int i = 1; i < k; ++i)
      for (int j = 0; j < i; ++j) diffs.push_back({i, j});
    assign.resize(diffs.size(), -1);
    antip.resize(b.facets.size());
    for (size_t f = 0; f < b.facets.size(); ++f) {
      antip[f] = b.antipodal_facet(static_cast<int>(f));
      if (static_cast<int>(f) < antip[f]) half.push_back(static_cast<int>(f));
    }
    facet_neighbors.resize(b.facets.size());
    for (const Edge& e : b.edges) {
      facet_neighbors[e.f0].push_back(e.f1);
      facet_neighbors[e.f1].push_back(e.f0);
    }
    for (auto& nb : facet_neighbors) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
  }

  int diff_index(int i, int j) const {  // i > j
    return i * (i - 1) / 2 + j;
  }

  // Is there u in facet f1, v in facet f2 with u + v in facet f3?
  // Necessary for any triangle of unit differences d_ab = d_ac + d_cb.
  // Membership in a facet is its plane plus the neighbor inequalities.
  bool sum_compatible(int f1, int f2, int f3) {
    std::array<int, 3> key{f1, f2, f3};
    auto it = sum_compat_cache.find(key);
    if (it != sum_compat_cache.end()) return it->second;
    FeasibilityProblem fp(6);
    auto constrain = [&](int f, bool on_u, bool on_v) {
      auto fill = [&](const Vec3& n) {
        std::vector<Scalar> row(6, Scalar(0));
        if (on_u) {
          row[0] = n.x;
          row[1] = n.y;
          row[2] = n.z;
        }
        if (on_v) {
          row[3] = n.x;
          row[4] = n.y;
          row[5] = n.z;
        }
        return row;
      };
      fp.add_eq(fill(ball.facets[f].normal), ball.facets[f].offset);
      for (int g : facet_neighbors[f]) fp.add_le(fill(ball.facets[g].normal), ball.facets[g].offset);
    };
    constrain(f1, true, false);
    constrain(f2, false, true);
    constrain(f3, true, true);
    const bool ok = fp.solve().has_value();
    sum_compat_cache.emplace(key, ok);
    return ok;
  }

  // Triangles closed by assigning diff (i, j): for every m < j the diffs
  // (i, m) and (j, m) are already fixed and d_ij + d_jm = d_im.
  bool triangles_ok(int depth) {
    const auto [i, j] = diffs[depth];
    for (int m = 0; m < j; ++m) {
      if (!sum_compatible(assign[depth], assign[diff_index(j, m)], assign[diff_index(i, m)]))
        return false;
    }
    return true;
  }

  int nvars() const { return 3 * (k - 1); }

  // coefficients of p_i - p_j (p_0 = o) against a normal
  void add_diff_row(std::vector<Scalar>& row, const Vec3& normal, int i, int j) const {
    if (i > 0) {
      row[3 * (i - 1) + 0] += normal.x;
      row[3 * (i - 1) + 1] += normal.y;
      row[3 * (i - 1) + 2] += normal.z;
    }
    if (j > 0) {
      row[3 * (j - 1) + 0] -= normal.x;
      row[3 * (j - 1) + 1] -= normal.y;
      row[3 * (j - 1) + 2] -= normal.z;
    }
  }

  // Push the constraints of diff `depth`: its facet plane as an equality
  // plus the facet-polygon (neighbor) inequalities. False when the plane
  // equality is already inconsistent; the frame stays for the caller to pop.
  bool push_diff(int depth) {
    const auto [i, j] = diffs[depth];
    const int f = assign[depth];
    inc.push_frame();
    std::vector<Scalar> row(nvars(), Scalar(0));
    add_diff_row(row, ball.facets[f].normal, i, j);
    if (!inc.add_eq(std::move(row), ball.facets[f].offset)) return false;
    for (int g : facet_neighbors[f]) {
      std::vector<Scalar> r(nvars(), Scalar(0));
      add_diff_row(r, ball.facets[g].normal, i, j);
      inc.add_le(std::move(r), ball.facets[g].offset);
    }
    return true;
  }

  bool dfs(int depth) {
    if (depth == static_cast<int>(diffs.size())) return true;
    const auto [i, j] = diffs[depth];
    int lo = 0;
    if (j == 0 && depth > 0) {
      // facets of the single-point differences ascend: permutation symmetry
      for (int d = depth - 1; d >= 0; --d)
        if (diffs[d].second == 0) {
          lo = assign[d];
          break;
        }
    }
    std::vector<int> candidates;
    if (depth == 0) {
      candidates = half;  // global +- symmetry
    } else {
      for (size_t f = lo; f < ball.facets.size(); ++f) candidates.push_back(static_cast<int>(f));
    }
    for (int f : candidates) {
      assign[depth] = f;
      if (!triangles_ok(depth)) continue;
      const bool eq_ok = push_diff(depth);
      if (eq_ok) {
        auto sol = inc.solve();
        if (sol) {
          solution = std::move(sol);
          if (dfs(depth + 1)) return true;
        }
      }
      inc.pop_frame();
    }
    return false;
  }
};

}  // namespace

std::optional<EquilateralWitness> equilateral_point_search(const PolytopalNorm& n, int k) {
  if (k < 2 || k > 8) throw InvalidInput("point search size out of range");
  PointSearch search(n.ball(), k);
  if (!search.dfs(0)) return std::nullopt;

  std::vector<Point3> pts{Point3{0, 0, 0}};
  const auto& x = *search.solution;
  for (int i = 1; i < k; ++i) pts.push_back(Point3{x[3 * (i - 1)], x[3 * (i - 1) + 1], x[3 * (i - 1) + 2]});
  const PointConfig config(pts);
  auto w = is_equilateral(config, n);
  if (!w || w->lambda != Scalar(1)) throw InternalError("point search produced a non-equilateral set");
  return w;
}

// ---------------------------------------------------------------------------
// max_equilateral and touching numbers
// ---------------------------------------------------------------------------

bool is_parallelepiped(const Polytope3& p) {
  if (p.dim != 3 || p.vertices.size() != 8 || p.faces2.size() != 6 || p.edges.size() != 12) return false;
  for (const Face2& f : p.faces2)
    if (f.cycle.size() != 4) return false;
  const auto nb = p.neighbors_of_vertex(0);
  if (nb.size() != 3) return false;
  const Point3& v = p.vertices[0];
  const Vec3 g0 = p.vertices[nb[0]] - v;
  const Vec3 g1 = p.vertices[nb[1]] - v;
  const Vec3 g2 = p.vertices[nb[2]] - v;
  if (det3(g0, g1, g2).is_zero()) return false;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const Point3 q = v + Scalar(a) * g0 + Scalar(b) * g1 + Scalar(c) * g2;
        if (p.vertex_index(q) < 0) return false;
      }
  return true;
}

namespace {

EquilateralWitness checked_witness(const PointConfig& s, const PolytopalNorm& n) {
  auto w = is_equilateral(s, n);
  if (!w) throw InternalError("candidate witness is not equilateral");
  return *w;
}

PointConfig scale_points(const std::vector<Point3>& pts, const Scalar& factor) {
  std::vector<Point3> out;
  out.reserve(pts.size());
  for (const Point3& p : pts) out.push_back(factor * p);
  return PointConfig(out);
}

}  // namespace

MaxEquilateralResult max_equilateral(const PolytopalNorm& n) {
  MaxEquilateralResult res;
  const Scalar half = Scalar(1) / Scalar(2);

  if (is_parallelepiped(n.ball())) {
    res.parallelepiped = GateOutcome::Passed;
    res.e = 8;
    res.witness = checked_witness(scale_points(n.ball().vertices, half), n);
    return res;
  }
  res.parallelepiped = GateOutcome::Failed;

  res.sandwich = p_lambda_check(n);
  if (res.sandwich) {
    res.sandwich_gate = GateOutcome::Passed;
    res.e = 7;
    const Mat3 inv = res.sandwich->phi.inverse();
    const Scalar& l = res.sandwich->lambda;
    std::vector<Point3> pts;
    for (const Point3& t : std::vector<Point3>{{Scalar(0), Scalar(0), l},
                                               {0, 1, 0},
                                               {0, 1, 1},
                                               {1, 0, 0},
                                               {1, 0, 1},
                                               {1, 1, 0},
                                               {1, 1, 1}})
      pts.push_back(inv.apply(t));
    res.witness = checked_witness(PointConfig(pts), n);
    return res;
  }
  res.sandwich_gate = GateOutcome::Failed;

  res.skeleton = octa_skeleton_search(n);
  if (res.skeleton) {
    res.skeleton_gate = GateOutcome::Passed;
    res.e = 6;
    std::vector<Point3> pts;
    for (const Vec3& g : res.skeleton->generators) {
      pts.push_back(half * g);
      pts.push_back(-half * g);
    }
    res.witness = checked_witness(PointConfig(pts), n);
    return res;
  }
  res.skeleton_gate = GateOutcome::Failed;

  res.hexagon = hexagon_face_search(n);
  if (res.hexagon) {
    res.hexagon_gate = GateOutcome::Passed;
    res.e = 6;
    res.witness = checked_witness(hexagon_to_equilateral(*res.hexagon, n), n);
    return res;
  }
  res.hexagon_gate = GateOutcome::Failed;

  if (auto five = five_point_search(n)) {
    res.five_gate = GateOutcome::Passed;
    res.e = 5;
    res.witness = *five;
    return res;
  }
  res.five_gate = GateOutcome::Failed;

  auto four = equilateral_point_search(n, 4);
  if (!four) throw InternalError("Petty floor violated: no 4-point equilateral set found");
  res.e = 4;
  res.witness = *four;
  return res;
}

TouchingResult touching_number(const Polytope3& body) {
  if (body.dim != 3) throw InvalidInput("touching number needs a full-dimensional body");
  const PolytopalNorm norm(difference_body(body));
  TouchingResult out;
  out.detail = max_equilateral(norm);
  out.t = out.detail.e;
  out.translations = out.detail.witness.points.points;
  if (!verify_touching(body, out.translations))
    throw InternalError("touching realization failed re-verification");
  return out;
}

bool verify_touching(const Polytope3& body, const std::vector<Vec3>& translations) {
  if (body.dim != 3) throw InvalidInput("touching verification needs a full-dimensional body");
  if (translations.size() < 2) throw InvalidInput("touching verification needs at least 2 translates");
  const PolytopalNorm norm(difference_body(body));
  for (size_t i = 0; i < translations.size(); ++i)
    for (size_t j = i + 1; j < translations.size(); ++j)
      if (norm.eval(translations[i] - translations[j]) != Scalar(1)) return false;
  return true;
}

}  // namespace mink3
