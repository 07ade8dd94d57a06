#pragma once

#include <array>
#include <functional>
#include <vector>

#include "lamanenum/geometry.hpp"

namespace laman {

struct Tri {
  int a = 0, b = 0, c = 0;  // ccw
  bool has_vertex(int v) const { return a == v || b == v || c == v; }
  int third(int u, int v) const { return a != u && a != v ? a : (b != u && b != v ? b : c); }
};

enum class EdgeClass { FLegal, FIllegal, Constrained, Hull };

// A triangulation of the full point set: presence/constraint flags per edge
// of the universe, the ccw triangle list, and edge->face incidence. Mutation
// happens through flips and the constraint-update operations below; copies
// are independent.
class Triangulation {
 public:
  explicit Triangulation(const EdgeUniverse& u);

  const EdgeUniverse& universe() const { return *u_; }
  bool has_edge(int eid) const { return present_[static_cast<size_t>(eid)] != 0; }
  bool is_constrained(int eid) const { return constrained_[static_cast<size_t>(eid)] != 0; }
  void set_constrained(int eid, bool on);
  const std::vector<char>& present_mask() const { return present_; }
  const std::vector<char>& constrained_mask() const { return constrained_; }
  std::vector<int> edge_ids() const;
  std::vector<int> constrained_ids() const;
  int edge_count() const { return edge_count_; }

  int face_count() const { return static_cast<int>(tris_.size()); }
  const Tri& face(int idx) const { return tris_[static_cast<size_t>(idx)]; }
  const std::vector<Tri>& faces() const { return tris_; }
  const std::array<int, 2>& faces_of(int eid) const { return efaces_[static_cast<size_t>(eid)]; }

  // Diagonal swap of the convex quad around eid; returns the new edge id.
  // Caller guarantees flippability (two incident faces, crossing diagonal).
  int flip(int eid);

  // Low-level structure editing used by the update operations.
  void add_edge(int eid, bool constrained);
  void drop_edge(int eid);  // must have no incident faces
  int add_face(int a, int b, int c);
  void remove_face(int idx);
  int face_containing_direction(int u, int v) const;

 private:
  void link_face(int idx);
  void unlink_face(int idx);

  const EdgeUniverse* u_ = nullptr;
  std::vector<char> present_, constrained_;
  int edge_count_ = 0;
  std::vector<Tri> tris_;
  std::vector<std::array<int, 2>> efaces_;
};

// Greedy maximal non-crossing edge set containing `constraints`, scanned in
// lexicographic order (or `order` when given), with faces derived. Throws
// ConstraintError when the constraints cross each other.
Triangulation initial_triangulation(const EdgeUniverse& u, const std::vector<int>& constraints,
                                    const std::vector<int>* order = nullptr);

// Classification of a triangulation edge with respect to the constraint mask
// `cmask` (size m): constrained and hull edges are never flippable; an
// F-illegal edge is the diagonal of a convex quad whose tie-broken incircle
// test demands a flip. Throws std::invalid_argument when e is absent.
EdgeClass classify_edge(const Triangulation& t, int eid, const std::vector<char>& cmask);
EdgeClass classify_edge(const Triangulation& t, int eid, const std::vector<int>& constraint_ids);

using FlipObserver = std::function<void(int removed_eid, int inserted_eid)>;

// Flips illegal edges (w.r.t. the triangulation's own constraint flags) until
// none remains, i.e. until the constrained Delaunay triangulation is reached.
// Returns the flip count. With rng_seed != 0 the next illegal edge is picked
// pseudo-randomly instead of first-in-first-out (any order reaches the same
// CDT; tests exercise this).
int legalize(Triangulation& t, const FlipObserver& obs = {}, uint64_t rng_seed = 0);

// Same, but only the given edges (plus the cascade they trigger) are
// suspected. Used by the local update operations.
int legalize_from(Triangulation& t, std::vector<int> suspects, const FlipObserver& obs = {});

// The unique (under the tie-broken incircle) constrained Delaunay
// triangulation: unconstrained Delaunay first, then each constraint inserted
// through insert_edge_update.
Triangulation build_cdt(const EdgeUniverse& u, const std::vector<int>& constraint_ids);

// T(L): the triangulation constrained by a non-crossing framework L — hull
// edges plus the internal constrained Delaunay triangulation of every face.
Triangulation underlying_triangulation(const EdgeUniverse& u, const std::vector<int>& framework_ids);

// Adds eid as a constraint: crossing (unconstrained) edges are removed and
// the two resulting polygons retriangulated Delaunay-wise, leaving the CDT of
// the augmented constraint set. Throws ConstraintError when eid crosses a
// constrained edge.
void insert_edge_update(Triangulation& t, int eid);

// Removes eid from the constraint set and restores the CDT of the reduced
// set; a no-op when eid is locally Delaunay. eid stays a triangulation edge
// if and only if it is Delaunay. Throws std::invalid_argument when absent.
void remove_edge_update(Triangulation& t, int eid);

// All 3k interior angles in non-decreasing order, comparable exactly and
// lexicographically (no transcendental evaluation: an angle in (0,pi) is
// ordered by its cotangent, compared via cross-multiplication).
class AngleVector {
 public:
  static AngleVector of(const Triangulation& t);
  size_t size() const { return angles_.size(); }
  // -1 / 0 / +1: a lexicographically smaller / equal / greater than b.
  friend int compare(const AngleVector& a, const AngleVector& b);

 private:
  struct ExactAngle {
    mpz_class dot, cross;  // cross > 0
  };
  static int cmp_angle(const ExactAngle& p, const ExactAngle& q);
  std::vector<ExactAngle> angles_;
};

// Exact structural equality: same edges, same constraint flags, same faces.
bool same_subdivision(const Triangulation& a, const Triangulation& b);

// Structural invariants (planarity, Euler counts, incidence); throws
// std::logic_error on violation. Meant for tests.
void check_valid(const Triangulation& t);

}  // namespace laman
