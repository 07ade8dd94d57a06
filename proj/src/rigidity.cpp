#include "lamanenum/rigidity.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace laman {

PebbleState::PebbleState(int n) : n_(n), pebbles_(static_cast<size_t>(n) + 1, 2), out_(static_cast<size_t>(n) + 1) {
  pebbles_[0] = 0;
}

bool PebbleState::has_edge(Edge e) const {
  const auto& ou = out_[static_cast<size_t>(e.u)];
  const auto& ov = out_[static_cast<size_t>(e.v)];
  return std::binary_search(ou.begin(), ou.end(), e.v) ||
         std::binary_search(ov.begin(), ov.end(), e.u);
}

int PebbleState::total_pebbles() const {
  return std::accumulate(pebbles_.begin(), pebbles_.end(), 0);
}

// Depth-first search for a free pebble reachable from `target` along edge
// orientations, skipping the pinned endpoints. The path to the pebble is
// reversed and the pebble moved to `target`. Heads are visited in ascending
// order for determinism.
bool PebbleState::collect_one(int target, int pin_a, int pin_b) {
  std::vector<int> prev(static_cast<size_t>(n_) + 1, -1);
  std::vector<char> seen(static_cast<size_t>(n_) + 1, 0);
  seen[static_cast<size_t>(target)] = 1;
  int found = -1;
  auto dfs = [&](auto&& self, int x) -> bool {
    for (int y : out_[static_cast<size_t>(x)]) {
      if (seen[static_cast<size_t>(y)]) continue;
      seen[static_cast<size_t>(y)] = 1;
      prev[static_cast<size_t>(y)] = x;
      if (y != pin_a && y != pin_b && pebbles_[static_cast<size_t>(y)] > 0) {
        found = y;
        return true;
      }
      if (self(self, y)) return true;
    }
    return false;
  };
  dfs(dfs, target);
  if (found < 0) return false;
  --pebbles_[static_cast<size_t>(found)];
  ++pebbles_[static_cast<size_t>(target)];
  for (int y = found; y != target;) {
    const int x = prev[static_cast<size_t>(y)];
    auto& ox = out_[static_cast<size_t>(x)];
    ox.erase(std::lower_bound(ox.begin(), ox.end(), y));
    auto& oy = out_[static_cast<size_t>(y)];
    oy.insert(std::lower_bound(oy.begin(), oy.end(), x), x);
    y = x;
  }
  return true;
}

int PebbleState::gather_on_pair(int u, int v) {
  while (pebbles_[static_cast<size_t>(u)] + pebbles_[static_cast<size_t>(v)] < 4) {
    if (!collect_one(u, u, v) && !collect_one(v, u, v)) break;
  }
  return pebbles_[static_cast<size_t>(u)] + pebbles_[static_cast<size_t>(v)];
}

bool PebbleState::try_insert(Edge e) {
  assert(e.u >= 1 && e.v <= n_ && e.u != e.v);
  assert(!has_edge(e));
  if (gather_on_pair(e.u, e.v) < 4) return false;
  int tail = e.u, head = e.v;
  if (pebbles_[static_cast<size_t>(tail)] == 0) std::swap(tail, head);
  --pebbles_[static_cast<size_t>(tail)];
  auto& ot = out_[static_cast<size_t>(tail)];
  ot.insert(std::lower_bound(ot.begin(), ot.end(), head), head);
  accepted_.push_back(e);
  return true;
}

bool is_laman(const SparseGraph& g) {
  if (static_cast<int>(g.edges.size()) != 2 * g.n - 3) return false;
  return is_independent(g.edges, g.n);
}

bool is_independent(const std::vector<Edge>& edges, int n) {
  PebbleState st(n);
  for (const Edge& e : edges)
    if (!st.try_insert(e)) return false;
  return true;
}

ComponentIndex ComponentIndex::of_independent(int n, const std::vector<Edge>& edges) {
  PebbleState base(n);
  for (const Edge& e : edges) {
    const bool ok = base.try_insert(e);
    assert(ok);
    (void)ok;
  }
  ComponentIndex idx;
  idx.n_ = n;
  idx.spanned_.assign(static_cast<size_t>(n + 1) * (n + 1), 0);
  // A pair lies in a common rigid block iff a fourth pebble cannot be
  // gathered onto it, i.e. the pair is spanned in the matroid sense.
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      PebbleState probe = base;
      if (probe.gather_on_pair(u, v) < 4) {
        idx.spanned_[static_cast<size_t>(u) * (n + 1) + v] = 1;
        idx.spanned_[static_cast<size_t>(v) * (n + 1) + u] = 1;
      }
    }
  // Components: the component of a spanned pair (a,b) is exactly
  // {a,b} + {w : spanned(a,w) and spanned(b,w)}. Every component contains an
  // edge, and each pair belongs to at most one component.
  std::vector<char> pair_done(static_cast<size_t>(n + 1) * (n + 1), 0);
  for (const Edge& e : edges) {
    if (pair_done[static_cast<size_t>(e.u) * (n + 1) + e.v]) continue;
    std::vector<int> comp{e.u, e.v};
    for (int w = 1; w <= n; ++w) {
      if (w == e.u || w == e.v) continue;
      if (idx.pair_find(e.u, w) && idx.pair_find(e.v, w)) comp.push_back(w);
    }
    std::sort(comp.begin(), comp.end());
    for (size_t i = 0; i < comp.size(); ++i)
      for (size_t j = i + 1; j < comp.size(); ++j) {
        pair_done[static_cast<size_t>(comp[i]) * (n + 1) + comp[j]] = 1;
        pair_done[static_cast<size_t>(comp[j]) * (n + 1) + comp[i]] = 1;
      }
    idx.comps_.push_back(std::move(comp));
  }
  return idx;
}

ComponentIndex ComponentIndex::after_removal(int n, const std::vector<Edge>& edges, Edge removed) {
  std::vector<Edge> rest;
  rest.reserve(edges.size());
  bool found = false;
  for (const Edge& e : edges) {
    if (e == removed && !found) {
      found = true;
      continue;
    }
    rest.push_back(e);
  }
  assert(found);
  return of_independent(n, rest);
}

bool restores_laman(const SparseGraph& laman, Edge e_out, Edge e_in) {
  if (e_out == e_in) return true;
  const ComponentIndex idx = ComponentIndex::after_removal(laman.n, laman.edges, e_out);
  return !idx.pair_find(e_in.u, e_in.v);
}

}  // namespace laman
