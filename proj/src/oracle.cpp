#include "lamanenum/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace laman::oracle {

namespace {

int rational_orient(const Point& a, const Point& b, const Point& c) {
  const mpq_class det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(det);
}

bool between_closed(const mpq_class& lo, const mpq_class& hi, const mpq_class& v) {
  return (lo <= v && v <= hi) || (hi <= v && v <= lo);
}

bool rational_on_segment(const Point& p, const Point& q, const Point& r) {
  return between_closed(p.x, q.x, r.x) && between_closed(p.y, q.y, r.y);
}

struct EdgeList {
  std::vector<Edge> edges;
  std::vector<std::vector<char>> cross;
};

EdgeList make_universe(const PointSet& ps) {
  EdgeList u;
  const int n = ps.size();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) u.edges.emplace_back(a, b);
  const size_t m = u.edges.size();
  u.cross.assign(m, std::vector<char>(m, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      const Edge& e = u.edges[i];
      const Edge& f = u.edges[j];
      const bool x = segments_cross(ps[e.u], ps[e.v], ps[f.u], ps[f.v]);
      u.cross[i][j] = u.cross[j][i] = x;
    }
  return u;
}

// Incrementally maintained subset counters: cnt[mask] = number of chosen
// edges with both endpoints inside the vertex subset `mask` (bit v-1 = vertex
// v). Adding an edge keeps the count condition iff no superset of its
// endpoints overflows 2|W|-3.
struct SparsityCounter {
  int n;
  std::vector<int> cnt;
  explicit SparsityCounter(int n_) : n(n_), cnt(static_cast<size_t>(1) << n_, 0) {}

  bool can_add(const Edge& e) const {
    const unsigned pair = (1u << (e.u - 1)) | (1u << (e.v - 1));
    const unsigned full = (1u << n) - 1;
    for (unsigned w = pair; ; w = (w + 1) | pair) {
      const int k = std::popcount(w);
      if (cnt[w] + 1 > 2 * k - 3) return false;
      if (w == full) break;
    }
    return true;
  }
  void add(const Edge& e) { update(e, 1); }
  void remove(const Edge& e) { update(e, -1); }

 private:
  void update(const Edge& e, int d) {
    const unsigned pair = (1u << (e.u - 1)) | (1u << (e.v - 1));
    const unsigned full = (1u << n) - 1;
    for (unsigned w = pair; ; w = (w + 1) | pair) {
      cnt[w] += d;
      if (w == full) break;
    }
  }
};

}  // namespace

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int d1 = rational_orient(c, d, a);
  const int d2 = rational_orient(c, d, b);
  const int d3 = rational_orient(a, b, c);
  const int d4 = rational_orient(a, b, d);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  const bool closed =
      (d1 == 0 && rational_on_segment(c, d, a)) || (d2 == 0 && rational_on_segment(c, d, b)) ||
      (d3 == 0 && rational_on_segment(a, b, c)) || (d4 == 0 && rational_on_segment(a, b, d));
  if (!closed) return false;
  auto same = [](const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; };
  int shared = 0;
  shared += same(a, c) || same(a, d);
  shared += same(b, c) || same(b, d);
  if (shared == 2) return false;
  if (shared == 0) return true;
  if (d1 != 0 || d2 != 0 || d3 != 0 || d4 != 0) return false;
  // Collinear with one shared endpoint: proper iff the overlap has length.
  const bool use_x = a.x != b.x;
  auto lo = [&](const Point& p, const Point& q) { return use_x ? std::min(p.x, q.x) : std::min(p.y, q.y); };
  auto hi = [&](const Point& p, const Point& q) { return use_x ? std::max(p.x, q.x) : std::max(p.y, q.y); };
  return std::max(lo(a, b), lo(c, d)) < std::min(hi(a, b), hi(c, d));
}

bool definitional_independent(const std::vector<Edge>& edges, int n) {
  SparsityCounter sc(n);
  for (const Edge& e : edges) {
    if (!sc.can_add(e)) return false;
    sc.add(e);
  }
  return true;
}

bool definitional_laman(const std::vector<Edge>& edges, int n) {
  return static_cast<int>(edges.size()) == 2 * n - 3 && definitional_independent(edges, n);
}

int brute_rank(const std::vector<Edge>& edges, int n) {
  if (n > 8) throw std::invalid_argument("brute_rank: n > 8");
  const int ceiling = std::min<int>(static_cast<int>(edges.size()), std::max(0, 2 * n - 3));
  SparsityCounter sc(n);
  int best = 0;
  auto dfs = [&](auto&& self, size_t idx, int cur) -> void {
    best = std::max(best, cur);
    if (best == ceiling) return;
    if (idx == edges.size() || cur + static_cast<int>(edges.size() - idx) <= best) return;
    if (sc.can_add(edges[idx])) {
      sc.add(edges[idx]);
      self(self, idx + 1, cur + 1);
      sc.remove(edges[idx]);
      if (best == ceiling) return;
    }
    self(self, idx + 1, cur);
  };
  dfs(dfs, 0, 0);
  return best;
}

OracleReport brute_frameworks(const PointSet& ps, const std::vector<Edge>& constraints) {
  const int n = ps.size();
  if (n > 9) throw std::invalid_argument("brute_frameworks: n > 9");
  OracleReport rep;
  for (size_t i = 0; i < constraints.size(); ++i)
    for (size_t j = i + 1; j < constraints.size(); ++j)
      if (segments_cross(ps[constraints[i].u], ps[constraints[i].v], ps[constraints[j].u],
                         ps[constraints[j].v])) {
        rep.diagnostic = "constraints cross";
        return rep;
      }
  if (!definitional_independent(constraints, n)) {
    rep.diagnostic = "constraints dependent";
    return rep;
  }

  const EdgeList u = make_universe(ps);
  const size_t m = u.edges.size();
  const int target = 2 * n - 3;
  std::vector<char> forced(m, 0);
  for (const Edge& c : constraints)
    for (size_t i = 0; i < m; ++i)
      if (u.edges[i] == c) forced[i] = 1;

  SparsityCounter sc(n);
  std::vector<size_t> chosen;
  size_t forced_used = 0;
  const size_t forced_total = constraints.size();
  auto crosses_chosen = [&](size_t idx) {
    for (size_t c : chosen)
      if (u.cross[idx][c]) return true;
    return false;
  };
  auto dfs = [&](auto&& self, size_t idx) -> void {
    if (static_cast<int>(chosen.size()) == target) {
      if (forced_used != forced_total) return;  // some constraint left out
      std::vector<Edge> fw;
      fw.reserve(chosen.size());
      for (size_t c : chosen) fw.push_back(u.edges[c]);
      rep.frameworks.push_back(std::move(fw));
      return;
    }
    if (idx == m) return;
    if (static_cast<int>(chosen.size()) + static_cast<int>(m - idx) < target) return;
    const bool usable = !crosses_chosen(idx) && sc.can_add(u.edges[idx]);
    if (forced[idx] && !usable) return;  // dead branch: a constraint became unusable
    if (usable) {
      sc.add(u.edges[idx]);
      chosen.push_back(idx);
      forced_used += forced[idx] ? 1 : 0;
      self(self, idx + 1);
      forced_used -= forced[idx] ? 1 : 0;
      chosen.pop_back();
      sc.remove(u.edges[idx]);
    }
    if (!forced[idx]) self(self, idx + 1);
  };
  dfs(dfs, 0);
  return rep;
}

std::vector<std::vector<Edge>> all_triangulations(const PointSet& ps,
                                                  const std::vector<Edge>& constraints) {
  const int n = ps.size();
  if (n > 8) throw std::invalid_argument("all_triangulations: n > 8");
  const EdgeList u = make_universe(ps);
  const size_t m = u.edges.size();
  std::vector<char> forced(m, 0);
  for (const Edge& c : constraints)
    for (size_t i = 0; i < m; ++i)
      if (u.edges[i] == c) forced[i] = 1;

  std::vector<std::vector<Edge>> out;
  std::vector<size_t> chosen;
  std::vector<char> in_chosen(m, 0);
  auto crosses_chosen = [&](size_t idx) {
    for (size_t c : chosen)
      if (u.cross[idx][c]) return true;
    return false;
  };
  auto dfs = [&](auto&& self, size_t idx) -> void {
    if (idx == m) {
      // Maximality: every omitted edge must cross a chosen one.
      for (size_t e = 0; e < m; ++e)
        if (!in_chosen[e] && !crosses_chosen(e)) return;
      std::vector<Edge> tri;
      tri.reserve(chosen.size());
      for (size_t c : chosen) tri.push_back(u.edges[c]);
      std::sort(tri.begin(), tri.end());
      out.push_back(std::move(tri));
      return;
    }
    if (crosses_chosen(idx)) {
      if (forced[idx]) return;  // a constraint got blocked: dead branch
      self(self, idx + 1);      // excluded by the crossing, nothing to decide
      return;
    }
    chosen.push_back(idx);
    in_chosen[idx] = 1;
    self(self, idx + 1);
    in_chosen[idx] = 0;
    chosen.pop_back();
    if (forced[idx]) return;  // constraints may not be skipped voluntarily
    // Voluntarily omitting a compatible edge is only viable when some later
    // edge can still block it.
    for (size_t later = idx + 1; later < m; ++later)
      if (u.cross[idx][later]) {
        self(self, idx + 1);
        return;
      }
  };
  dfs(dfs, 0);
  return out;
}

}  // namespace laman::oracle
