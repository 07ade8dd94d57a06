#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace laman {

// Undirected vertex pair in canonical form (u < v). Edge order throughout the
// project is the lexicographic order on (u, v).
struct Edge {
  int u = 0, v = 0;
  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A planar point with exact rational coordinates. sx/sy are the coordinates
// scaled to integers by a single power of ten shared across the owning
// PointSet; every predicate works on the scaled values, so mixing points from
// different sets is not allowed.
struct Point {
  int id = 0;  // 1..n
  mpq_class x, y;
  mpz_class sx, sy;
};

class PointSet {
 public:
  PointSet() = default;

  // Coordinates are decimal strings ("-3", "0.25"). Throws ParseError on a
  // malformed number and GenericityError on coincident points.
  static PointSet parse(const std::vector<std::pair<std::string, std::string>>& coords);

  int size() const { return static_cast<int>(pts_.size()); }
  const Point& operator[](int id) const { return pts_[static_cast<size_t>(id) - 1]; }
  const std::vector<Point>& points() const { return pts_; }

 private:
  std::vector<Point> pts_;
};

// Parses a plain decimal literal (optional sign, digits, optional fraction).
// Throws ParseError otherwise.
mpq_class parse_decimal(std::string_view s);

// Sign of the signed area of (a, b, c): +1 if c lies strictly left of the
// directed line a->b, -1 strictly right, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

// +1 iff d lies strictly inside the circumcircle of the ccw triangle (a,b,c),
// -1 strictly outside, 0 co-circular. Throws std::invalid_argument when a,b,c
// are collinear.
int incircle(const Point& a, const Point& b, const Point& c, const Point& d);

// Like incircle but never returns 0: a co-circular quadruple is resolved by
// symbolically lifting point i by eps^i (smaller ids dominate), which keeps
// all answers consistent with one perturbed point set and yields a unique
// constrained Delaunay triangulation.
int incircle_tiebroken(const Point& a, const Point& b, const Point& c, const Point& d);

// True iff the closed segments ab and cd share at least one point that is not
// merely a common endpoint. Segments meeting only at a shared endpoint do not
// properly intersect; collinear overlaps of positive length do.
bool properly_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

struct GenericityReport {
  bool ok = true;
  std::vector<std::array<int, 3>> collinear_triples;
  // Informational only; co-circularity is handled by incircle_tiebroken.
  std::vector<std::array<int, 4>> cocircular_quads;
};

// Checks the generic-position requirement: no three points collinear.
// Co-circular quadruples are reported but allowed.
GenericityReport assert_generic(const PointSet& ps);

// Vertex ids of the convex hull in ccw order.
std::vector<int> convex_hull(const PointSet& ps);

// The n(n-1)/2 edges of K_n in lexicographic order, with the pairwise
// proper-intersection table, hull membership, and id lookups precomputed.
// All higher-level modules address edges by their index in this order.
class EdgeUniverse {
 public:
  explicit EdgeUniverse(const PointSet& ps);

  const PointSet& points() const { return *ps_; }
  int n() const { return n_; }
  int edge_count() const { return m_; }

  Edge edge(int id) const { return edges_[static_cast<size_t>(id)]; }
  int id(Edge e) const { return id_[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)]; }
  bool crosses(int e1, int e2) const { return cross_[static_cast<size_t>(e1) * m_ + e2] != 0; }

  bool is_hull(int id) const { return hull_edge_[static_cast<size_t>(id)] != 0; }
  const std::vector<int>& hull_cycle() const { return hull_cycle_; }
  int hull_size() const { return static_cast<int>(hull_cycle_.size()); }

 private:
  const PointSet* ps_ = nullptr;
  int n_ = 0, m_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> id_;
  std::vector<char> cross_;
  std::vector<char> hull_edge_;
  std::vector<int> hull_cycle_;
};

}  // namespace laman
