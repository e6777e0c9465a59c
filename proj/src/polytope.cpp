#include "mink3/polytope.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "mink3/errors.hpp"

namespace mink3 {

namespace {

int vec_cmp(const Vec3& a, const Vec3& b) {
  int c = Scalar::cmp(a.x, b.x);
  if (c != 0) return c;
  c = Scalar::cmp(a.y, b.y);
  if (c != 0) return c;
  return Scalar::cmp(a.z, b.z);
}

// First nonzero coordinate of n, or -1 for the zero vector.
int first_nonzero(const Vec3& n) {
  if (!n.x.is_zero()) return 0;
  if (!n.y.is_zero()) return 1;
  if (!n.z.is_zero()) return 2;
  return -1;
}

Scalar coord(const Vec3& v, int i) { return i == 0 ? v.x : (i == 1 ? v.y : v.z); }

Vec3 canonical_perp(const Vec3& n) {
  if (!n.x.is_zero() || !n.y.is_zero()) return Vec3{-n.y, n.x, Scalar(0)};
  return Vec3{Scalar(1), Scalar(0), Scalar(0)};
}

}  // namespace

HalfSpace HalfSpace::canonical(Vec3 n, Scalar c) {
  const int i = first_nonzero(n);
  if (i < 0) throw InvalidInput("halfspace with zero normal");
  Scalar lead = coord(n, i);
  if (lead.sign() < 0) lead = -lead;  // divide by |lead|: keeps direction
  return HalfSpace{Vec3{n.x / lead, n.y / lead, n.z / lead}, c / lead};
}

int halfspace_cmp(const HalfSpace& a, const HalfSpace& b) {
  int c = vec_cmp(a.normal, b.normal);
  if (c != 0) return c;
  return Scalar::cmp(a.offset, b.offset);
}

Plane Plane::canonical(Vec3 n, Scalar c) {
  const int i = first_nonzero(n);
  if (i < 0) throw InvalidInput("plane with zero normal");
  const Scalar lead = coord(n, i);  // signed: first nonzero becomes +1
  return Plane{Vec3{n.x / lead, n.y / lead, n.z / lead}, c / lead};
}

int Polytope3::vertex_index(const Point3& p) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), p,
                             [](const Point3& a, const Point3& b) { return lex_less(a, b); });
  if (it != vertices.end() && *it == p) return static_cast<int>(it - vertices.begin());
  return -1;
}

std::vector<int> Polytope3::facets_of_vertex(int vi) const {
  std::vector<int> out;
  for (size_t f = 0; f < faces2.size(); ++f)
    for (int v : faces2[f].cycle)
      if (v == vi) {
        out.push_back(static_cast<int>(f));
        break;
      }
  return out;
}

std::vector<int> Polytope3::neighbors_of_vertex(int vi) const {
  std::vector<int> out;
  for (const Edge& e : edges) {
    if (e.v0 == vi) out.push_back(e.v1);
    if (e.v1 == vi) out.push_back(e.v0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Polytope3::edge_between(int va, int vb) const {
  if (va > vb) std::swap(va, vb);
  for (size_t i = 0; i < edges.size(); ++i)
    if (edges[i].v0 == va && edges[i].v1 == vb) return static_cast<int>(i);
  return -1;
}

int Polytope3::antipodal_facet(int f) const {
  const HalfSpace want = facets[f].reflected();
  for (size_t i = 0; i < facets.size(); ++i)
    if (facets[i] == want) return static_cast<int>(i);
  throw InternalError("no antipodal facet; polytope not centrally symmetric");
}

std::vector<Point3> Polytope3::face_points(const Face2& f) const {
  std::vector<Point3> out;
  out.reserve(f.cycle.size());
  for (int v : f.cycle) out.push_back(vertices[v]);
  return out;
}

Frame Frame::for_plane(const Vec3& normal, const Vec3& origin) {
  Frame fr;
  fr.origin = origin;
  fr.u = canonical_perp(normal);
  fr.v = cross(normal, fr.u);
  return fr;
}

Vec2 Frame::project(const Point3& p) const {
  const Vec3 d = p - origin;
  return Vec2{dot(d, u) / dot(u, u), dot(d, v) / dot(v, v)};
}

Point3 Frame::lift(const Vec2& q) const { return origin + q.x * u + q.y * v; }

std::vector<Point3> Section::polygon3() const {
  std::vector<Point3> out;
  out.reserve(polygon.size());
  for (const Vec2& q : polygon) out.push_back(frame.lift(q));
  return out;
}

std::vector<Vec2> hull2d(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) { return lex_less(a, b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Vec2> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper chain
    while (k >= t && cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() == 2 && h[0] == h[1]) h.resize(1);
  return h;
}

// ---------------------------------------------------------------------------
// Convex hull
// ---------------------------------------------------------------------------

namespace {

struct SeedResult {
  int dim;
  int i1 = -1, i2 = -1, i3 = -1;  // indices of an affine basis beyond pts[0]
};

SeedResult find_affine_basis(const std::vector<Point3>& pts) {
  SeedResult r{0};
  if (pts.size() < 2) return r;
  r.i1 = 1;  // points are deduplicated
  r.dim = 1;
  const Vec3 d1 = pts[1] - pts[0];
  for (size_t i = 2; i < pts.size(); ++i) {
    if (!cross(d1, pts[i] - pts[0]).is_zero()) {
      r.i2 = static_cast<int>(i);
      r.dim = 2;
      break;
    }
  }
  if (r.dim < 2) return r;
  for (size_t i = static_cast<size_t>(r.i2) + 1; i < pts.size(); ++i) {
    if (orient3d(pts[0], pts[r.i1], pts[r.i2], pts[i]) != 0) {
      r.i3 = static_cast<int>(i);
      r.dim = 3;
      break;
    }
  }
  return r;
}

void detect_symmetry(Polytope3& p) {
  for (const Point3& v : p.vertices) {
    if (p.vertex_index(-v) < 0) {
      p.symmetric = false;
      return;
    }
  }
  p.symmetric = true;
}

Polytope3 hull_dim0(const Point3& p) {
  Polytope3 out;
  out.dim = 0;
  out.vertices = {p};
  out.affine_hull = {Plane::canonical(Vec3{1, 0, 0}, p.x), Plane::canonical(Vec3{0, 1, 0}, p.y),
                     Plane::canonical(Vec3{0, 0, 1}, p.z)};
  detect_symmetry(out);
  return out;
}

Polytope3 hull_dim1(const std::vector<Point3>& pts) {
  const Vec3 dir = pts.back() - pts.front();  // lex order makes these the extremes
  Polytope3 out;
  out.dim = 1;
  out.vertices = {pts.front(), pts.back()};
  out.facets = {HalfSpace::canonical(-dir, dot(-dir, pts.front())),
                HalfSpace::canonical(dir, dot(dir, pts.back()))};
  const Vec3 u = canonical_perp(dir);
  const Vec3 w = cross(dir, u);
  out.affine_hull = {Plane::canonical(u, dot(u, pts.front())), Plane::canonical(w, dot(w, pts.front()))};
  out.edges = {Edge{0, 1, -1, -1}};
  detect_symmetry(out);
  return out;
}

Polytope3 hull_dim2(const std::vector<Point3>& pts, const SeedResult& seed) {
  Vec3 n = cross(pts[seed.i1] - pts[0], pts[seed.i2] - pts[0]);
  const Plane plane = Plane::canonical(n, dot(n, pts[0]));
  const Frame fr = Frame::for_plane(plane.normal, pts[0]);
  std::vector<Vec2> flat;
  flat.reserve(pts.size());
  for (const Point3& p : pts) flat.push_back(fr.project(p));
  const std::vector<Vec2> cyc = hull2d(std::move(flat));

  std::vector<Point3> ring;
  ring.reserve(cyc.size());
  for (const Vec2& q : cyc) ring.push_back(fr.lift(q));

  Polytope3 out;
  out.dim = 2;
  out.vertices = ring;
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const Point3& a, const Point3& b) { return lex_less(a, b); });
  out.affine_hull = {plane};

  // Edge-supporting halfspaces within the plane; ring is ccw w.r.t. the
  // frame normal, so cross(edge, n_frame) points outward.
  const Vec3 nf = cross(fr.u, fr.v);
  const size_t m = ring.size();
  std::vector<std::pair<Edge, HalfSpace>> es;
  for (size_t i = 0; i < m; ++i) {
    const Point3& a = ring[i];
    const Point3& b = ring[(i + 1) % m];
    int va = out.vertex_index(a), vb = out.vertex_index(b);
    Edge e{std::min(va, vb), std::max(va, vb), -1, -1};
    const Vec3 mvec = cross(b - a, nf);
    es.emplace_back(e, HalfSpace::canonical(mvec, dot(mvec, a)));
  }
  std::sort(es.begin(), es.end(), [](const auto& l, const auto& r) {
    return l.first.v0 != r.first.v0 ? l.first.v0 < r.first.v0 : l.first.v1 < r.first.v1;
  });
  for (size_t i = 0; i < es.size(); ++i) {
    es[i].first.f0 = static_cast<int>(i);
    out.edges.push_back(es[i].first);
    out.facets.push_back(es[i].second);
  }
  // ccw cycle in the new index space, starting at the least vertex index
  out.polygon_cycle.resize(m);
  for (size_t i = 0; i < m; ++i) out.polygon_cycle[i] = out.vertex_index(ring[i]);
  auto mn = std::min_element(out.polygon_cycle.begin(), out.polygon_cycle.end());
  std::rotate(out.polygon_cycle.begin(), mn, out.polygon_cycle.end());
  detect_symmetry(out);
  return out;
}

struct Tri {
  int a, b, c;
  bool alive = true;
};

struct EdgeKey {
  int u, v;
  bool operator<(const EdgeKey& o) const { return u != o.u ? u < o.u : v < o.v; }
};

EdgeKey key_of(int a, int b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

// Triangulated incremental hull over exact scalars. Points must already be
// deduplicated, in deterministic order, with [0], i1, i2, i3 affinely
// independent.
std::vector<Tri> incremental_hull(const std::vector<Point3>& pts, const SeedResult& seed,
                                  Point3* interior_out) {
  int s0 = 0, s1 = seed.i1, s2 = seed.i2, s3 = seed.i3;
  if (orient3d(pts[s0], pts[s1], pts[s2], pts[s3]) < 0) std::swap(s1, s2);

  const Scalar quarter = Scalar(1) / Scalar(4);
  const Point3 interior = quarter * (pts[s0] + pts[s1] + pts[s2] + pts[s3]);
  *interior_out = interior;

  std::vector<Tri> tris;
  auto add_tri = [&](int a, int b, int c) {
    if (orient3d(pts[a], pts[b], pts[c], interior) > 0) std::swap(b, c);
    tris.push_back(Tri{a, b, c});
  };
  add_tri(s1, s2, s3);
  add_tri(s0, s2, s3);
  add_tri(s0, s1, s3);
  add_tri(s0, s1, s2);

  std::vector<char> used(pts.size(), 0);
  used[s0] = used[s1] = used[s2] = used[s3] = 1;

  for (size_t q = 0; q < pts.size(); ++q) {
    if (used[q]) continue;
    const Point3& p = pts[q];

    std::vector<int> visible;
    for (size_t t = 0; t < tris.size(); ++t) {
      if (!tris[t].alive) continue;
      if (orient3d(pts[tris[t].a], pts[tris[t].b], pts[tris[t].c], p) > 0)
        visible.push_back(static_cast<int>(t));
    }
    if (visible.empty()) continue;  // inside or on the current hull

    std::vector<char> vis(tris.size(), 0);
    for (int t : visible) vis[t] = 1;

    // Undirected edge -> alive triangles.
    std::map<EdgeKey, std::vector<int>> adj;
    for (size_t t = 0; t < tris.size(); ++t) {
      if (!tris[t].alive) continue;
      adj[key_of(tris[t].a, tris[t].b)].push_back(static_cast<int>(t));
      adj[key_of(tris[t].b, tris[t].c)].push_back(static_cast<int>(t));
      adj[key_of(tris[t].c, tris[t].a)].push_back(static_cast<int>(t));
    }

    std::vector<std::pair<int, int>> horizon;
    for (const auto& [k, ts] : adj) {
      if (ts.size() != 2) throw InternalError("hull adjacency broke: edge without two triangles");
      if (vis[ts[0]] != vis[ts[1]]) horizon.emplace_back(k.u, k.v);
    }

    for (int t : visible) tris[t].alive = false;
    for (const auto& [u, v] : horizon) {
      // Orientation fixed against the interior reference point.
      int a = u, b = v;
      const int o = orient3d(pts[a], pts[b], p, interior);
      if (o == 0) throw InternalError("degenerate cone triangle during hull insertion");
      if (o > 0) std::swap(a, b);
      tris.push_back(Tri{a, b, static_cast<int>(q)});
    }
    used[q] = 1;
  }

  std::vector<Tri> alive;
  for (const Tri& t : tris)
    if (t.alive) alive.push_back(t);
  return alive;
}

Polytope3 finalize_dim3(const std::vector<Point3>& pts, const std::vector<Tri>& tris) {
  struct HsLess {
    bool operator()(const HalfSpace& a, const HalfSpace& b) const { return halfspace_cmp(a, b) < 0; }
  };
  std::map<HalfSpace, std::vector<int>, HsLess> groups;  // facet plane -> point ids
  for (const Tri& t : tris) {
    const Vec3 n = cross(pts[t.b] - pts[t.a], pts[t.c] - pts[t.a]);
    const HalfSpace hs = HalfSpace::canonical(n, dot(n, pts[t.a]));
    auto& ids = groups[hs];
    ids.push_back(t.a);
    ids.push_back(t.b);
    ids.push_back(t.c);
  }

  // Per facet: 2D hull inside the facet plane gives the true vertex cycle
  // (drops points interior to the facet or interior to its edges).
  struct RawFacet {
    HalfSpace plane;
    std::vector<Point3> ring;  // ccw from outside
  };
  std::vector<RawFacet> raw;
  for (auto& [hs, ids] : groups) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    const Frame fr = Frame::for_plane(hs.normal, pts[ids[0]]);
    std::vector<Vec2> flat;
    flat.reserve(ids.size());
    for (int id : ids) flat.push_back(fr.project(pts[id]));
    std::vector<Vec2> cyc = hull2d(std::move(flat));
    if (cyc.size() < 3) throw InternalError("facet degenerated to fewer than 3 vertices");
    RawFacet rf;
    rf.plane = hs;
    for (const Vec2& q : cyc) rf.ring.push_back(fr.lift(q));
    raw.push_back(std::move(rf));
  }

  Polytope3 out;
  out.dim = 3;
  for (const RawFacet& rf : raw)
    for (const Point3& p : rf.ring) out.vertices.push_back(p);
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const Point3& a, const Point3& b) { return lex_less(a, b); });
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());

  for (RawFacet& rf : raw) {
    Face2 f;
    f.plane = rf.plane;
    for (const Point3& p : rf.ring) {
      const int vi = out.vertex_index(p);
      if (vi < 0) throw InternalError("facet ring vertex missing from vertex set");
      f.cycle.push_back(vi);
    }
    auto mn = std::min_element(f.cycle.begin(), f.cycle.end());
    std::rotate(f.cycle.begin(), mn, f.cycle.end());
    out.faces2.push_back(std::move(f));
    out.facets.push_back(rf.plane);
  }

  // Edges from facet cycles; each must appear in exactly two facets.
  std::map<EdgeKey, std::vector<int>> around;
  for (size_t f = 0; f < out.faces2.size(); ++f) {
    const auto& cyc = out.faces2[f].cycle;
    for (size_t i = 0; i < cyc.size(); ++i)
      around[key_of(cyc[i], cyc[(i + 1) % cyc.size()])].push_back(static_cast<int>(f));
  }
  for (const auto& [k, fs] : around) {
    if (fs.size() != 2) throw InternalError("polytope edge not shared by exactly two facets");
    out.edges.push_back(Edge{k.u, k.v, fs[0], fs[1]});
  }

  const long euler = static_cast<long>(out.vertices.size()) - static_cast<long>(out.edges.size()) +
                     static_cast<long>(out.faces2.size());
  if (euler != 2) throw InternalError("Euler characteristic violated: V-E+F = " + std::to_string(euler));

  detect_symmetry(out);
  return out;
}

}  // namespace

Polytope3 convex_hull(std::vector<Point3> points) {
  if (points.empty()) throw InvalidInput("convex hull of empty point set");
  std::sort(points.begin(), points.end(),
            [](const Point3& a, const Point3& b) { return lex_less(a, b); });
  points.erase(std::unique(points.begin(), points.end()), points.end());

  const SeedResult seed = find_affine_basis(points);
  switch (seed.dim) {
    case 0:
      return hull_dim0(points[0]);
    case 1:
      return hull_dim1(points);
    case 2:
      return hull_dim2(points, seed);
    default:
      break;
  }
  Point3 interior;
  const std::vector<Tri> tris = incremental_hull(points, seed, &interior);
  return finalize_dim3(points, tris);
}

Location locate(const Polytope3& p, const Point3& q) {
  for (const Plane& pl : p.affine_hull)
    if (!pl.contains(q)) return Location{Location::Kind::Outside, {}};

  if (p.dim == 0) return Location{Location::Kind::Interior, {}};

  std::vector<int> tight;
  for (size_t f = 0; f < p.facets.size(); ++f) {
    const int s = p.facets[f].side(q);
    if (s > 0) return Location{Location::Kind::Outside, {}};
    if (s == 0) tight.push_back(static_cast<int>(f));
  }
  if (tight.empty()) return Location{Location::Kind::Interior, {}};

  if (p.dim == 1) {
    // tight endpoint halfspace identifies the vertex
    const int vi = p.vertex_index(q);
    if (vi < 0) throw InternalError("point on 1-polytope boundary is not an endpoint");
    return Location{Location::Kind::OnFace, FaceRef{0, vi}};
  }

  if (p.dim == 2) {
    if (tight.size() == 1)
      return Location{Location::Kind::OnFace, FaceRef{1, tight[0]}};  // facets align with edges
    const int vi = p.vertex_index(q);
    if (vi < 0) throw InternalError("point on two polygon edge lines is not a vertex");
    return Location{Location::Kind::OnFace, FaceRef{0, vi}};
  }

  if (tight.size() == 1) return Location{Location::Kind::OnFace, FaceRef{2, tight[0]}};
  if (tight.size() == 2) {
    for (size_t e = 0; e < p.edges.size(); ++e) {
      const Edge& ed = p.edges[e];
      const bool match = (ed.f0 == tight[0] && ed.f1 == tight[1]) || (ed.f0 == tight[1] && ed.f1 == tight[0]);
      if (match) return Location{Location::Kind::OnFace, FaceRef{1, static_cast<int>(e)}};
    }
    throw InternalError("two tight facets without a shared edge");
  }
  const int vi = p.vertex_index(q);
  if (vi < 0) throw InternalError("point with 3+ tight facets is not a vertex");
  return Location{Location::Kind::OnFace, FaceRef{0, vi}};
}

Polytope3 difference_body(const std::vector<Point3>& points) {
  if (points.empty()) throw InvalidInput("difference body of empty set");
  std::vector<Point3> diffs;
  diffs.reserve(points.size() * points.size());
  diffs.push_back(Point3{0, 0, 0});
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = 0; j < points.size(); ++j)
      if (i != j) diffs.push_back(points[i] - points[j]);
  Polytope3 out = convex_hull(std::move(diffs));
  out.symmetric = true;
  return out;
}

Polytope3 difference_body(const Polytope3& p) { return difference_body(p.vertices); }

Polytope3 polar(const Polytope3& p) {
  if (p.dim != 3) throw InvalidInput("polar requires a full-dimensional polytope");
  std::vector<Point3> duals;
  duals.reserve(p.facets.size());
  for (const HalfSpace& f : p.facets) {
    if (f.offset.sign() <= 0) throw InvalidInput("polar requires the origin interior");
    duals.push_back(f.normal / f.offset);
  }
  Polytope3 out = convex_hull(std::move(duals));
  out.name = p.name.empty() ? "" : p.name + "*";
  return out;
}

Polytope3 affine_image(const Polytope3& p, const Mat3& m, const Vec3& t) {
  if (m.det().is_zero()) throw InvalidInput("affine image requires det != 0");
  std::vector<Point3> imgs;
  imgs.reserve(p.vertices.size());
  for (const Point3& v : p.vertices) imgs.push_back(m.apply(v) + t);
  Polytope3 out = convex_hull(std::move(imgs));
  out.name = p.name;
  if (out.dim != p.dim || out.vertices.size() != p.vertices.size())
    throw InternalError("affine image changed combinatorics");
  return out;
}

Section planar_section(const Polytope3& p, const Vec3& normal) {
  if (normal.is_zero()) throw InvalidInput("planar section with zero normal");
  if (p.dim != 3 || !p.symmetric) throw InvalidInput("planar section requires a symmetric 3-polytope");
  for (const HalfSpace& f : p.facets)
    if (f.offset.sign() <= 0) throw InvalidInput("planar section requires the origin interior");

  std::vector<Point3> cut;
  std::vector<int> side(p.vertices.size());
  for (size_t i = 0; i < p.vertices.size(); ++i) {
    side[i] = dot(normal, p.vertices[i]).sign();
    if (side[i] == 0) cut.push_back(p.vertices[i]);
  }
  for (const Edge& e : p.edges) {
    if (side[e.v0] * side[e.v1] < 0) {
      const Point3& a = p.vertices[e.v0];
      const Point3& b = p.vertices[e.v1];
      const Scalar da = dot(normal, a);
      const Scalar db = dot(normal, b);
      const Scalar t = da / (da - db);
      cut.push_back(a + t * (b - a));
    }
  }

  Section s;
  s.frame = Frame::for_plane(normal, Point3{0, 0, 0});
  std::vector<Vec2> flat;
  flat.reserve(cut.size());
  for (const Point3& q : cut) flat.push_back(s.frame.project(q));
  s.polygon = hull2d(std::move(flat));
  if (s.polygon.size() < 3) throw InternalError("planar section through interior origin is not a polygon");
  return s;
}

void validate(const Polytope3& p) {
  for (const Point3& v : p.vertices) {
    for (const Plane& pl : p.affine_hull)
      if (!pl.contains(v)) throw InternalError("vertex off the affine hull");
    for (const HalfSpace& h : p.facets)
      if (h.side(v) > 0) throw InternalError("vertex violates a facet inequality");
  }
  if (p.dim == 3) {
    if (p.facets.size() != p.faces2.size()) throw InternalError("facets and 2-faces misaligned");
    for (size_t f = 0; f < p.faces2.size(); ++f) {
      const Face2& face = p.faces2[f];
      if (face.cycle.size() < 3) throw InternalError("2-face with fewer than 3 vertices");
      for (int vi : face.cycle)
        if (face.plane.side(p.vertices[vi]) != 0) throw InternalError("cycle vertex off its facet plane");
    }
    for (size_t vi = 0; vi < p.vertices.size(); ++vi)
      if (p.facets_of_vertex(static_cast<int>(vi)).size() < 3)
        throw InternalError("vertex on fewer than 3 facets");
    const long euler = static_cast<long>(p.vertices.size()) - static_cast<long>(p.edges.size()) +
                       static_cast<long>(p.faces2.size());
    if (euler != 2) throw InternalError("Euler characteristic violated");
    for (const Edge& e : p.edges)
      if (e.f0 < 0 || e.f1 < 0 || e.f0 == e.f1) throw InternalError("edge without two distinct facets");
  }
  if (p.symmetric) {
    for (const Point3& v : p.vertices)
      if (p.vertex_index(-v) < 0) throw InternalError("symmetric flag set on asymmetric polytope");
  }
}

}  // namespace mink3
