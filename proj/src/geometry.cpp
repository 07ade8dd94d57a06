#include "lamanenum/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "lamanenum/errors.hpp"

namespace laman {

namespace {

// Cross product (b - a) x (c - a) on the scaled integer coordinates.
mpz_class cross3(const Point& a, const Point& b, const Point& c) {
  return (b.sx - a.sx) * (c.sy - a.sy) - (b.sy - a.sy) * (c.sx - a.sx);
}

// Shewchuk-style incircle determinant: rows (p - d, |p - d|^2) for p=a,b,c.
// Positive iff d is inside the circumcircle of ccw (a,b,c).
mpz_class incircle_det(const Point& a, const Point& b, const Point& c, const Point& d) {
  const mpz_class adx = a.sx - d.sx, ady = a.sy - d.sy;
  const mpz_class bdx = b.sx - d.sx, bdy = b.sy - d.sy;
  const mpz_class cdx = c.sx - d.sx, cdy = c.sy - d.sy;
  const mpz_class alift = adx * adx + ady * ady;
  const mpz_class blift = bdx * bdx + bdy * bdy;
  const mpz_class clift = cdx * cdx + cdy * cdy;
  return alift * (bdx * cdy - bdy * cdx) - blift * (adx * cdy - ady * cdx) +
         clift * (adx * bdy - ady * bdx);
}

bool same_coords(const Point& a, const Point& b) { return a.sx == b.sx && a.sy == b.sy; }

// r is known to be on the line pq; is it on the closed segment?
bool on_segment(const Point& p, const Point& q, const Point& r) {
  const mpz_class& lox = p.sx <= q.sx ? p.sx : q.sx;
  const mpz_class& hix = p.sx <= q.sx ? q.sx : p.sx;
  const mpz_class& loy = p.sy <= q.sy ? p.sy : q.sy;
  const mpz_class& hiy = p.sy <= q.sy ? q.sy : p.sy;
  return lox <= r.sx && r.sx <= hix && loy <= r.sy && r.sy <= hiy;
}

}  // namespace

mpq_class parse_decimal(std::string_view s) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  std::string digits;
  size_t frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '.') {
      if (seen_dot) throw ParseError("malformed decimal: '" + std::string(s) + "'");
      seen_dot = true;
    } else if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else {
      throw ParseError("malformed decimal: '" + std::string(s) + "'");
    }
  }
  if (!seen_digit) throw ParseError("malformed decimal: '" + std::string(s) + "'");
  mpz_class num(digits, 10);
  if (neg) num = -num;
  mpz_class den = 1;
  for (size_t k = 0; k < frac_digits; ++k) den *= 10;
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

PointSet PointSet::parse(const std::vector<std::pair<std::string, std::string>>& coords) {
  PointSet ps;
  std::vector<std::pair<mpq_class, mpq_class>> vals;
  vals.reserve(coords.size());
  for (const auto& [xs, ys] : coords) {
    vals.emplace_back(parse_decimal(xs), parse_decimal(ys));
  }
  // One common integer scale for the whole set: the lcm of all denominators.
  mpz_class scale = 1;
  for (const auto& [x, y] : vals) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), y.get_den().get_mpz_t());
  }
  ps.pts_.reserve(vals.size());
  int id = 1;
  for (const auto& [x, y] : vals) {
    Point p;
    p.id = id++;
    p.x = x;
    p.y = y;
    mpq_class sx = x * scale, sy = y * scale;
    sx.canonicalize();
    sy.canonicalize();
    assert(sx.get_den() == 1 && sy.get_den() == 1);
    p.sx = sx.get_num();
    p.sy = sy.get_num();
    ps.pts_.push_back(std::move(p));
  }
  for (size_t i = 0; i < ps.pts_.size(); ++i)
    for (size_t j = i + 1; j < ps.pts_.size(); ++j)
      if (same_coords(ps.pts_[i], ps.pts_[j]))
        throw GenericityError("points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " coincide");
  return ps;
}

int orientation(const Point& a, const Point& b, const Point& c) {
  return sgn(cross3(a, b, c));
}

int incircle(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (orientation(a, b, c) == 0)
    throw std::invalid_argument("incircle: triangle (a,b,c) is degenerate");
  return sgn(incircle_det(a, b, c, d));
}

int incircle_tiebroken(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int base = incircle(a, b, c, d);
  if (base != 0) return base;
  // Expand the perturbed determinant det + sum_p eps^{id_p} * C_p, where C_p
  // is the lift-column cofactor of point p. Smaller ids dominate; the first
  // nonzero cofactor in id order decides. Cofactors are +/- orientation
  // determinants of the remaining three points, so for a generic set the
  // smallest id always decides.
  const Point* pts[4] = {&a, &b, &c, &d};
  int order[4] = {0, 1, 2, 3};
  std::sort(order, order + 4, [&](int i, int j) { return pts[i]->id < pts[j]->id; });
  for (int k = 0; k < 4; ++k) {
    const int r = order[k];
    int sign_cof = 0;
    switch (r) {
      case 0: sign_cof = orientation(b, c, d); break;
      case 1: sign_cof = -orientation(a, c, d); break;
      case 2: sign_cof = orientation(a, b, d); break;
      case 3: sign_cof = -orientation(a, b, c); break;
    }
    if (sign_cof != 0) return sign_cof;
  }
  throw std::invalid_argument("incircle_tiebroken: fully degenerate quadruple");
}

bool properly_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int d1 = orientation(c, d, a);
  const int d2 = orientation(c, d, b);
  const int d3 = orientation(a, b, c);
  const int d4 = orientation(a, b, d);

  // Interior crossing: no endpoint on the other segment's line.
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;

  const bool closed = (d1 == 0 && on_segment(c, d, a)) || (d2 == 0 && on_segment(c, d, b)) ||
                      (d3 == 0 && on_segment(a, b, c)) || (d4 == 0 && on_segment(a, b, d));
  if (!closed) return false;

  int shared = 0;
  shared += same_coords(a, c) || same_coords(a, d);
  shared += same_coords(b, c) || same_coords(b, d);
  if (shared == 2) return false;  // identical segment
  if (shared == 0) return true;   // T-junction or collinear containment

  // Exactly one shared endpoint: proper only for a collinear overlap longer
  // than that single point.
  if (d1 != 0 || d2 != 0 || d3 != 0 || d4 != 0) return false;
  const bool use_x = a.sx != b.sx;
  auto lo = [&](const Point& p, const Point& q) { return use_x ? std::min(p.sx, q.sx) : std::min(p.sy, q.sy); };
  auto hi = [&](const Point& p, const Point& q) { return use_x ? std::max(p.sx, q.sx) : std::max(p.sy, q.sy); };
  return std::max(lo(a, b), lo(c, d)) < std::min(hi(a, b), hi(c, d));
}

GenericityReport assert_generic(const PointSet& ps) {
  GenericityReport rep;
  const int n = ps.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (orientation(ps[i], ps[j], ps[k]) == 0) {
          rep.collinear_triples.push_back({i, j, k});
          rep.ok = false;
        }
  if (!rep.ok) return rep;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          if (sgn(incircle_det(ps[i], ps[j], ps[k], ps[l])) == 0)
            rep.cocircular_quads.push_back({i, j, k, l});
  return rep;
}

std::vector<int> convex_hull(const PointSet& ps) {
  const int n = ps.size();
  std::vector<int> ids(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<size_t>(i)] = i + 1;
  std::sort(ids.begin(), ids.end(), [&](int i, int j) {
    if (ps[i].sx != ps[j].sx) return ps[i].sx < ps[j].sx;
    return ps[i].sy < ps[j].sy;
  });
  auto build = [&](const std::vector<int>& order) {
    std::vector<int> h;
    for (int id : order) {
      while (h.size() >= 2 && orientation(ps[h[h.size() - 2]], ps[h.back()], ps[id]) <= 0)
        h.pop_back();
      h.push_back(id);
    }
    return h;
  };
  std::vector<int> lower = build(ids);
  std::reverse(ids.begin(), ids.end());
  std::vector<int> upper = build(ids);
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;  // ccw
}

EdgeUniverse::EdgeUniverse(const PointSet& ps) : ps_(&ps), n_(ps.size()) {
  m_ = n_ * (n_ - 1) / 2;
  edges_.reserve(static_cast<size_t>(m_));
  id_.assign(static_cast<size_t>(n_) + 1, std::vector<int>(static_cast<size_t>(n_) + 1, -1));
  for (int u = 1; u <= n_; ++u)
    for (int v = u + 1; v <= n_; ++v) {
      id_[static_cast<size_t>(u)][static_cast<size_t>(v)] = static_cast<int>(edges_.size());
      id_[static_cast<size_t>(v)][static_cast<size_t>(u)] = static_cast<int>(edges_.size());
      edges_.emplace_back(u, v);
    }
  cross_.assign(static_cast<size_t>(m_) * m_, 0);
  for (int e1 = 0; e1 < m_; ++e1)
    for (int e2 = e1 + 1; e2 < m_; ++e2) {
      const Edge& f = edges_[static_cast<size_t>(e1)];
      const Edge& g = edges_[static_cast<size_t>(e2)];
      const bool x = properly_intersect(ps[f.u], ps[f.v], ps[g.u], ps[g.v]);
      cross_[static_cast<size_t>(e1) * m_ + e2] = x;
      cross_[static_cast<size_t>(e2) * m_ + e1] = x;
    }
  hull_cycle_ = convex_hull(ps);
  hull_edge_.assign(static_cast<size_t>(m_), 0);
  const int h = static_cast<int>(hull_cycle_.size());
  for (int i = 0; i < h; ++i) {
    const Edge e(hull_cycle_[static_cast<size_t>(i)], hull_cycle_[static_cast<size_t>((i + 1) % h)]);
    hull_edge_[static_cast<size_t>(id(e))] = 1;
  }
}

}  // namespace laman
