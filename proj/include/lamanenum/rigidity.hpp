#pragma once

#include <vector>

#include "lamanenum/geometry.hpp"

namespace laman {

struct SparseGraph {
  int n = 0;
  std::vector<Edge> edges;
};

// The (2,3)-pebble game. Each vertex starts with two pebbles; an edge is
// independent in the rigidity matroid iff four pebbles can be gathered on its
// endpoints, in which case it is accepted and oriented, consuming one pebble.
// Pebble searches reorient edges but rejection leaves the state
// observationally unchanged.
class PebbleState {
 public:
  explicit PebbleState(int n);

  int n() const { return n_; }
  // Accepts e iff accepted+{e} is independent in the rigidity matroid.
  bool try_insert(Edge e);
  bool has_edge(Edge e) const;
  int pebbles(int v) const { return pebbles_[static_cast<size_t>(v)]; }
  int total_pebbles() const;
  const std::vector<Edge>& accepted() const { return accepted_; }

  // Maximum number of pebbles that can be gathered onto {u, v}; caps at four.
  // Mutates the pebble configuration (but not the accepted set).
  int gather_on_pair(int u, int v);

 private:
  bool collect_one(int target, int pin_a, int pin_b);

  int n_ = 0;
  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;  // oriented accepted edges, heads sorted
  std::vector<Edge> accepted_;
};

// True iff G has exactly 2n-3 edges and every edge inserts into a fresh
// pebble game.
bool is_laman(const SparseGraph& g);

// True iff the edge set is independent in the rigidity matroid.
bool is_independent(const std::vector<Edge>& edges, int n);

// Rigid components of an independent edge set (in practice a 1dof mechanism
// L - e), with an O(1) pair-find over a precomputed vertex-pair table.
class ComponentIndex {
 public:
  // Components of the graph (edges \ {removed}). Every surviving edge must be
  // independent (holds whenever the input is a Laman framework).
  static ComponentIndex after_removal(int n, const std::vector<Edge>& edges, Edge removed);
  // Components of an independent edge set as given.
  static ComponentIndex of_independent(int n, const std::vector<Edge>& edges);

  // True iff u and v lie in a common rigid component (or u == v).
  bool pair_find(int u, int v) const {
    return u == v || spanned_[static_cast<size_t>(u) * (n_ + 1) + v] != 0;
  }
  const std::vector<std::vector<int>>& components() const { return comps_; }
  int n() const { return n_; }

 private:
  int n_ = 0;
  std::vector<char> spanned_;
  std::vector<std::vector<int>> comps_;
};

// True iff L - e_out + e_in is Laman, decided through a pair-find query on
// the components of L - e_out. e_out must be in L; e_in must not (except for
// the trivial e_out == e_in case).
bool restores_laman(const SparseGraph& laman, Edge e_out, Edge e_in);

}  // namespace laman
