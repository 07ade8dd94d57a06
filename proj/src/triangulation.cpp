#include "lamanenum/triangulation.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <stdexcept>

#include "lamanenum/errors.hpp"

namespace laman {

namespace {

Tri make_ccw(const PointSet& ps, int a, int b, int c) {
  const int o = orientation(ps[a], ps[b], ps[c]);
  assert(o != 0);
  return o > 0 ? Tri{a, b, c} : Tri{a, c, b};
}

bool strictly_inside(const PointSet& ps, const Tri& t, int p) {
  return orientation(ps[t.a], ps[t.b], ps[p]) > 0 && orientation(ps[t.b], ps[t.c], ps[p]) > 0 &&
         orientation(ps[t.c], ps[t.a], ps[p]) > 0;
}

}  // namespace

Triangulation::Triangulation(const EdgeUniverse& u)
    : u_(&u),
      present_(static_cast<size_t>(u.edge_count()), 0),
      constrained_(static_cast<size_t>(u.edge_count()), 0),
      efaces_(static_cast<size_t>(u.edge_count()), {-1, -1}) {}

void Triangulation::set_constrained(int eid, bool on) {
  assert(!on || has_edge(eid));
  constrained_[static_cast<size_t>(eid)] = on ? 1 : 0;
}

std::vector<int> Triangulation::edge_ids() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(edge_count_));
  for (int e = 0; e < u_->edge_count(); ++e)
    if (present_[static_cast<size_t>(e)]) out.push_back(e);
  return out;
}

std::vector<int> Triangulation::constrained_ids() const {
  std::vector<int> out;
  for (int e = 0; e < u_->edge_count(); ++e)
    if (constrained_[static_cast<size_t>(e)]) out.push_back(e);
  return out;
}

void Triangulation::add_edge(int eid, bool constrained) {
  assert(!present_[static_cast<size_t>(eid)]);
  present_[static_cast<size_t>(eid)] = 1;
  constrained_[static_cast<size_t>(eid)] = constrained ? 1 : 0;
  ++edge_count_;
}

void Triangulation::drop_edge(int eid) {
  assert(present_[static_cast<size_t>(eid)]);
  assert(efaces_[static_cast<size_t>(eid)][0] == -1 && efaces_[static_cast<size_t>(eid)][1] == -1);
  present_[static_cast<size_t>(eid)] = 0;
  constrained_[static_cast<size_t>(eid)] = 0;
  --edge_count_;
}

void Triangulation::link_face(int idx) {
  const Tri& t = tris_[static_cast<size_t>(idx)];
  for (const Edge e : {Edge(t.a, t.b), Edge(t.b, t.c), Edge(t.c, t.a)}) {
    auto& f = efaces_[static_cast<size_t>(u_->id(e))];
    if (f[0] == -1)
      f[0] = idx;
    else {
      assert(f[1] == -1);
      f[1] = idx;
    }
  }
}

void Triangulation::unlink_face(int idx) {
  const Tri& t = tris_[static_cast<size_t>(idx)];
  for (const Edge e : {Edge(t.a, t.b), Edge(t.b, t.c), Edge(t.c, t.a)}) {
    auto& f = efaces_[static_cast<size_t>(u_->id(e))];
    if (f[0] == idx) {
      f[0] = f[1];
      f[1] = -1;
    } else {
      assert(f[1] == idx);
      f[1] = -1;
    }
  }
}

int Triangulation::add_face(int a, int b, int c) {
  tris_.push_back(make_ccw(u_->points(), a, b, c));
  const int idx = static_cast<int>(tris_.size()) - 1;
  link_face(idx);
  return idx;
}

void Triangulation::remove_face(int idx) {
  unlink_face(idx);
  const int last = static_cast<int>(tris_.size()) - 1;
  if (idx != last) {
    unlink_face(last);
    tris_[static_cast<size_t>(idx)] = tris_[static_cast<size_t>(last)];
    tris_.pop_back();
    link_face(idx);
  } else {
    tris_.pop_back();
  }
}

int Triangulation::flip(int eid) {
  const auto [f1, f2] = efaces_[static_cast<size_t>(eid)];
  assert(f1 != -1 && f2 != -1);
  const Edge e = u_->edge(eid);
  const int b = tris_[static_cast<size_t>(f1)].third(e.u, e.v);
  const int d = tris_[static_cast<size_t>(f2)].third(e.u, e.v);
  const int neid = u_->id(Edge(b, d));
  assert(!has_edge(neid));
  // Remove the larger index first so the smaller stays valid.
  remove_face(std::max(f1, f2));
  remove_face(std::min(f1, f2));
  drop_edge(eid);
  add_edge(neid, false);
  add_face(e.u, b, d);
  add_face(e.v, b, d);
  return neid;
}

int Triangulation::face_containing_direction(int u, int v) const {
  const PointSet& ps = u_->points();
  for (int i = 0; i < face_count(); ++i) {
    const Tri& t = tris_[static_cast<size_t>(i)];
    if (!t.has_vertex(u)) continue;
    // Rotate so the triangle reads (u, p, q) ccw.
    int p, q;
    if (t.a == u) {
      p = t.b;
      q = t.c;
    } else if (t.b == u) {
      p = t.c;
      q = t.a;
    } else {
      p = t.a;
      q = t.b;
    }
    if (orientation(ps[u], ps[p], ps[v]) > 0 && orientation(ps[u], ps[v], ps[q]) > 0) return i;
  }
  throw std::logic_error("face_containing_direction: no face found (degenerate input?)");
}

Triangulation initial_triangulation(const EdgeUniverse& u, const std::vector<int>& constraints,
                                    const std::vector<int>* order) {
  for (size_t i = 0; i < constraints.size(); ++i)
    for (size_t j = i + 1; j < constraints.size(); ++j)
      if (u.crosses(constraints[i], constraints[j]))
        throw ConstraintError("constraint edges cross each other");

  Triangulation t(u);
  std::vector<char> cflag(static_cast<size_t>(u.edge_count()), 0);
  for (int c : constraints) cflag[static_cast<size_t>(c)] = 1;
  std::vector<int> chosen;
  auto try_add = [&](int e) {
    for (int g : chosen)
      if (u.crosses(e, g)) return;
    chosen.push_back(e);
    t.add_edge(e, cflag[static_cast<size_t>(e)] != 0);
  };
  for (int c : constraints) try_add(c);
  assert(static_cast<int>(chosen.size()) == static_cast<int>(constraints.size()));
  if (order) {
    for (int e : *order)
      if (!t.has_edge(e)) try_add(e);
  }
  for (int e = 0; e < u.edge_count(); ++e)
    if (!t.has_edge(e)) try_add(e);

  // Faces of a maximal non-crossing set on a generic point set: fully edged
  // triples with empty interior.
  const PointSet& ps = u.points();
  const int n = u.n();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (!t.has_edge(u.id(Edge(a, b)))) continue;
      for (int c = b + 1; c <= n; ++c) {
        if (!t.has_edge(u.id(Edge(a, c))) || !t.has_edge(u.id(Edge(b, c)))) continue;
        const Tri tri = make_ccw(ps, a, b, c);
        bool empty = true;
        for (int p = 1; p <= n && empty; ++p)
          if (p != a && p != b && p != c && strictly_inside(ps, tri, p)) empty = false;
        if (empty) t.add_face(a, b, c);
      }
    }

  for (int e = 0; e < u.edge_count(); ++e) {
    if (!t.has_edge(e)) continue;
    const auto& f = t.faces_of(e);
    const int cnt = (f[0] != -1) + (f[1] != -1);
    if (cnt != (u.is_hull(e) ? 1 : 2))
      throw std::logic_error("initial_triangulation: inconsistent face incidence");
  }
  return t;
}

EdgeClass classify_edge(const Triangulation& t, int eid, const std::vector<char>& cmask) {
  if (!t.has_edge(eid)) throw std::invalid_argument("classify_edge: edge not in triangulation");
  if (cmask[static_cast<size_t>(eid)]) return EdgeClass::Constrained;
  const EdgeUniverse& u = t.universe();
  if (u.is_hull(eid)) return EdgeClass::Hull;
  const auto [f1, f2] = t.faces_of(eid);
  assert(f1 != -1 && f2 != -1);
  const Edge e = u.edge(eid);
  const int b = t.face(f1).third(e.u, e.v);
  const int d = t.face(f2).third(e.u, e.v);
  // Flippable only as the diagonal of a convex quadrilateral.
  if (!u.crosses(eid, u.id(Edge(b, d)))) return EdgeClass::FLegal;
  const PointSet& ps = u.points();
  int a = e.u, c = e.v;
  if (orientation(ps[a], ps[c], ps[b]) < 0) std::swap(a, c);
  return incircle_tiebroken(ps[a], ps[c], ps[b], ps[d]) > 0 ? EdgeClass::FIllegal
                                                            : EdgeClass::FLegal;
}

EdgeClass classify_edge(const Triangulation& t, int eid, const std::vector<int>& constraint_ids) {
  std::vector<char> mask(static_cast<size_t>(t.universe().edge_count()), 0);
  for (int c : constraint_ids) mask[static_cast<size_t>(c)] = 1;
  return classify_edge(t, eid, mask);
}

namespace {

int run_legalize(Triangulation& t, std::vector<int> work, const FlipObserver& obs,
                 uint64_t rng_seed) {
  const int m = t.universe().edge_count();
  std::vector<char> queued(static_cast<size_t>(m), 0);
  for (int e : work) queued[static_cast<size_t>(e)] = 1;
  std::mt19937_64 rng(rng_seed);
  int flips = 0;
  size_t head = 0;
  while (head < work.size()) {
    size_t pick = head;
    if (rng_seed != 0) pick = head + rng() % (work.size() - head);
    std::swap(work[head], work[pick]);
    const int e = work[head++];
    queued[static_cast<size_t>(e)] = 0;
    if (!t.has_edge(e)) continue;
    if (classify_edge(t, e, t.constrained_mask()) != EdgeClass::FIllegal) continue;
    const int ne = t.flip(e);
    ++flips;
    if (obs) obs(e, ne);
    if (flips > m * m + m)
      throw std::logic_error("legalize: flip budget exceeded");
    // Only the legality of the quad boundary and the new diagonal changed.
    const Edge oe = t.universe().edge(e);
    const Edge de = t.universe().edge(ne);
    for (const Edge s : {Edge(oe.u, de.u), Edge(oe.u, de.v), Edge(oe.v, de.u), Edge(oe.v, de.v)}) {
      const int sid = t.universe().id(s);
      if (!queued[static_cast<size_t>(sid)]) {
        queued[static_cast<size_t>(sid)] = 1;
        work.push_back(sid);
      }
    }
    if (!queued[static_cast<size_t>(ne)]) {
      queued[static_cast<size_t>(ne)] = 1;
      work.push_back(ne);
    }
  }
  return flips;
}

}  // namespace

int legalize(Triangulation& t, const FlipObserver& obs, uint64_t rng_seed) {
  std::vector<int> work;
  for (int e = 0; e < t.universe().edge_count(); ++e)
    if (t.has_edge(e) && !t.is_constrained(e)) work.push_back(e);
  return run_legalize(t, std::move(work), obs, rng_seed);
}

int legalize_from(Triangulation& t, std::vector<int> suspects, const FlipObserver& obs) {
  return run_legalize(t, std::move(suspects), obs, 0);
}

Triangulation build_cdt(const EdgeUniverse& u, const std::vector<int>& constraint_ids) {
  for (size_t i = 0; i < constraint_ids.size(); ++i)
    for (size_t j = i + 1; j < constraint_ids.size(); ++j)
      if (u.crosses(constraint_ids[i], constraint_ids[j]))
        throw ConstraintError("constraint edges cross each other");
  Triangulation t = initial_triangulation(u, {});
  legalize(t);
  std::vector<int> cs = constraint_ids;
  std::sort(cs.begin(), cs.end());
  for (int c : cs) insert_edge_update(t, c);
  return t;
}

Triangulation underlying_triangulation(const EdgeUniverse& u, const std::vector<int>& framework_ids) {
  // Hull edges are present in every triangulation of the point set, so
  // constraining L alone already realizes "hull edges plus per-face CDTs".
  return build_cdt(u, framework_ids);
}

namespace {

// Delaunay retriangulation of one side of an inserted constraint (x -> y with
// the chain on its left), recursing on the apex whose circumcircle is empty.
void triangulate_pseudopolygon(Triangulation& t, int x, int y, const std::vector<int>& chain,
                               size_t lo, size_t hi) {
  if (lo >= hi) return;
  const EdgeUniverse& u = t.universe();
  const PointSet& ps = u.points();
  size_t ci = lo;
  for (size_t k = lo + 1; k < hi; ++k) {
    const Point& px = ps[x];
    const Point& py = ps[y];
    const Point& pc = ps[chain[ci]];
    const Point& pw = ps[chain[k]];
    const int s = orientation(px, py, pc) > 0 ? incircle_tiebroken(px, py, pc, pw)
                                              : incircle_tiebroken(py, px, pc, pw);
    if (s > 0) ci = k;
  }
  const int c = chain[ci];
  const int exc = u.id(Edge(x, c));
  const int ecy = u.id(Edge(c, y));
  if (!t.has_edge(exc)) t.add_edge(exc, false);
  if (!t.has_edge(ecy)) t.add_edge(ecy, false);
  triangulate_pseudopolygon(t, x, c, chain, lo, ci);
  triangulate_pseudopolygon(t, c, y, chain, ci + 1, hi);
  t.add_face(x, y, c);
}

}  // namespace

void insert_edge_update(Triangulation& t, int eid) {
  if (t.has_edge(eid)) {
    t.set_constrained(eid, true);
    return;
  }
  const EdgeUniverse& u = t.universe();
  const PointSet& ps = u.points();
  const Edge e = u.edge(eid);
  for (int g = 0; g < u.edge_count(); ++g)
    if (t.has_edge(g) && t.is_constrained(g) && u.crosses(eid, g))
      throw ConstraintError("insert_edge_update: edge crosses a constrained edge");

  // Walk the channel of faces the segment traverses, collecting the crossed
  // edges and the chains of vertices on either side.
  std::vector<int> channel_faces, crossed, left_chain, right_chain;
  int fcur = t.face_containing_direction(e.u, e.v);
  channel_faces.push_back(fcur);
  int entry = -1;
  while (!t.face(fcur).has_vertex(e.v)) {
    const Tri& f = t.face(fcur);
    int exit = -1;
    for (const Edge s : {Edge(f.a, f.b), Edge(f.b, f.c), Edge(f.c, f.a)}) {
      const int sid = u.id(s);
      if (sid == entry) continue;
      if (u.crosses(eid, sid)) {
        exit = sid;
        break;
      }
    }
    if (exit < 0) throw std::logic_error("insert_edge_update: walk lost the segment");
    crossed.push_back(exit);
    const Edge xe = u.edge(exit);
    for (const int w : {xe.u, xe.v}) {
      const int side = orientation(ps[e.u], ps[e.v], ps[w]);
      assert(side != 0);
      auto& chain = side > 0 ? left_chain : right_chain;
      if (chain.empty() || chain.back() != w) chain.push_back(w);
    }
    const auto& nf = t.faces_of(exit);
    fcur = nf[0] == channel_faces.back() ? nf[1] : nf[0];
    assert(fcur != -1);
    channel_faces.push_back(fcur);
    entry = exit;
  }

  std::sort(channel_faces.rbegin(), channel_faces.rend());
  for (int f : channel_faces) t.remove_face(f);
  for (int g : crossed) t.drop_edge(g);
  t.add_edge(eid, true);
  triangulate_pseudopolygon(t, e.u, e.v, left_chain, 0, left_chain.size());
  std::reverse(right_chain.begin(), right_chain.end());
  triangulate_pseudopolygon(t, e.v, e.u, right_chain, 0, right_chain.size());
}

void remove_edge_update(Triangulation& t, int eid) {
  if (!t.has_edge(eid)) throw std::invalid_argument("remove_edge_update: edge not in triangulation");
  if (!t.is_constrained(eid)) return;  // already the CDT without this constraint
  t.set_constrained(eid, false);
  legalize_from(t, {eid});
}

AngleVector AngleVector::of(const Triangulation& t) {
  const PointSet& ps = t.universe().points();
  AngleVector av;
  av.angles_.reserve(static_cast<size_t>(t.face_count()) * 3);
  for (const Tri& f : t.faces()) {
    const int vs[3] = {f.a, f.b, f.c};
    for (int k = 0; k < 3; ++k) {
      const Point& p = ps[vs[k]];
      const Point& q = ps[vs[(k + 1) % 3]];
      const Point& r = ps[vs[(k + 2) % 3]];
      ExactAngle a;
      const mpz_class ux = q.sx - p.sx, uy = q.sy - p.sy;
      const mpz_class vx = r.sx - p.sx, vy = r.sy - p.sy;
      a.dot = ux * vx + uy * vy;
      a.cross = ux * vy - uy * vx;
      assert(sgn(a.cross) > 0);
      av.angles_.push_back(std::move(a));
    }
  }
  std::sort(av.angles_.begin(), av.angles_.end(),
            [](const ExactAngle& p, const ExactAngle& q) { return cmp_angle(p, q) < 0; });
  return av;
}

// Angle in (0,pi) is a strictly decreasing function of its cotangent.
int AngleVector::cmp_angle(const ExactAngle& p, const ExactAngle& q) {
  return sgn(q.dot * p.cross - p.dot * q.cross);
}

int compare(const AngleVector& a, const AngleVector& b) {
  assert(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    const int c = AngleVector::cmp_angle(a.angles_[i], b.angles_[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool same_subdivision(const Triangulation& a, const Triangulation& b) {
  if (a.present_mask() != b.present_mask()) return false;
  if (a.constrained_mask() != b.constrained_mask()) return false;
  auto face_keys = [](const Triangulation& t) {
    std::vector<std::array<int, 3>> keys;
    keys.reserve(static_cast<size_t>(t.face_count()));
    for (const Tri& f : t.faces()) {
      std::array<int, 3> k{f.a, f.b, f.c};
      std::sort(k.begin(), k.end());
      keys.push_back(k);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  return face_keys(a) == face_keys(b);
}

void check_valid(const Triangulation& t) {
  const EdgeUniverse& u = t.universe();
  const std::vector<int> edges = t.edge_ids();
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = i + 1; j < edges.size(); ++j)
      if (u.crosses(edges[i], edges[j])) throw std::logic_error("check_valid: crossing edges");
  const int n = u.n();
  const int h = u.hull_size();
  if (static_cast<int>(edges.size()) != 3 * n - h - 3)
    throw std::logic_error("check_valid: edge count != 3n-h-3");
  if (t.face_count() != 2 * n - h - 2)
    throw std::logic_error("check_valid: face count != 2n-h-2");
  for (int e = 0; e < u.edge_count(); ++e) {
    const auto& f = t.faces_of(e);
    const int cnt = (f[0] != -1) + (f[1] != -1);
    if (!t.has_edge(e)) {
      if (cnt != 0) throw std::logic_error("check_valid: absent edge with faces");
      if (t.is_constrained(e)) throw std::logic_error("check_valid: absent constrained edge");
      continue;
    }
    if (cnt != (u.is_hull(e) ? 1 : 2)) throw std::logic_error("check_valid: face incidence");
  }
  const PointSet& ps = u.points();
  for (const Tri& f : t.faces())
    if (orientation(ps[f.a], ps[f.b], ps[f.c]) <= 0)
      throw std::logic_error("check_valid: face not ccw");
}

}  // namespace laman
