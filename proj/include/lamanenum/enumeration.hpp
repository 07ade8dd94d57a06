#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "lamanenum/geometry.hpp"
#include "lamanenum/rigidity.hpp"
#include "lamanenum/triangulation.hpp"

namespace laman {

// Frameworks are represented as ascending vectors of universe edge ids; the
// id order is the lexicographic edge order, so the vector itself is the
// canonical lexicographic edge list.
using EdgeIdList = std::vector<int>;

// -1 / 0 / +1: first differing position decides.
int lex_compare(const EdgeIdList& a, const EdgeIdList& b);

struct EnumerationOptions {
  // Confirm children with the definitional parent-of-child comparison
  // instead of the O(1) flag conditions. Output must be identical.
  bool slow_parent_check = false;
};

// References stay valid only for the duration of the sink call; consumers
// that keep a framework copy the vector.
struct Emission {
  const EdgeIdList& edges;        // the framework, ascending edge ids
  std::uint64_t index = 0;        // 1-based emission index
  int depth = 0;                  // depth in the search tree
  // Swap that produced this node from its parent (removed, inserted);
  // nullopt for the root.
  std::optional<std::pair<int, int>> swap;
  const Triangulation* underlying = nullptr;  // T(L) of the emitted framework
};

// Reverse-search enumeration of all F-constrained non-crossing Laman
// frameworks on a generic point set, rooted at the lexicographically
// smallest framework inside the constrained Delaunay triangulation.
class Enumerator {
 public:
  // Validates genericity (GenericityError) and the constraint set
  // (ConstraintError: out of range, crossing, or dependent).
  Enumerator(const PointSet& ps, const std::vector<Edge>& constraints,
             EnumerationOptions options = {});
  ~Enumerator();
  Enumerator(const Enumerator&) = delete;
  Enumerator& operator=(const Enumerator&) = delete;

  const EdgeUniverse& universe() const { return u_; }
  const PointSet& points() const { return ps_; }
  const EdgeIdList& constraint_ids() const { return f_ids_; }
  const EdgeIdList& root() const { return root_; }
  const EdgeIdList& cdt_ids() const { return cdt_ids_; }
  bool in_cdt(int eid) const { return cdt_mask_[static_cast<size_t>(eid)] != 0; }

  // Walks the search tree depth-first, emitting every framework exactly once
  // (the root first). Memory stays within the per-node scratch: ascending
  // recomputes the parent instead of keeping a stack. The sink returns false
  // to stop early. Returns the number of frameworks emitted.
  std::uint64_t enumerate(const std::function<bool(const Emission&)>& sink);

  bool is_cdlf(const EdgeIdList& l) const;

  // L - e1 + e2 when that framework is non-crossing and Laman, else nullopt.
  // e1 must be a non-constraint edge of L; e2 must not be in L.
  std::optional<EdgeIdList> adjacency(const EdgeIdList& l, int e1, int e2) const;

  // The parent framework of l != root: the base-exchange step toward the
  // root for frameworks inside the CDT, otherwise the removal of the largest
  // F-illegal edge of T(L) and the smallest Laman-restoring insertion from
  // T(L - ac). tl, when given, must equal T(l) and avoids a rebuild.
  EdgeIdList parent(const EdgeIdList& l, const Triangulation* tl = nullptr) const;

  // Per-node probe exposing the O(1) parent checks; shares the scratch the
  // driver itself uses, so tests exercise the production path.
  class NodeView {
   public:
    ~NodeView();
    NodeView(NodeView&&) noexcept;
    // Confirms parent(adjacency(l,e1,e2)) == l for the respective parent case,
    // from flags and thresholds only. Callers guarantee adjacency != null.
    bool check_parent_f1(int e1, int e2);
    bool check_parent_f2(int e1, int e2);
    // min{e in pool : L - e1 + e restores Laman} where pool is L* - L
    // (f1 mode) or T(L) - L (f2 mode); edge_count() when the pool has no
    // restoring edge (plays the role of +infinity).
    int threshold_c(int e1, bool f1_mode);
    const Triangulation& underlying() const;

   private:
    friend class Enumerator;
    explicit NodeView(const Enumerator* owner);
    const Enumerator* owner_;
    struct Impl;
    std::unique_ptr<Impl> impl_;
  };
  NodeView node_view(const EdgeIdList& l) const;

 private:
  struct Scratch;
  void build_scratch(Scratch& s, EdgeIdList l, Triangulation t) const;
  void ensure_e1(Scratch& s, int pos) const;
  bool fast_check_f1(Scratch& s, int pos, int e2) const;
  bool fast_check_f2(Scratch& s, int pos, int e2) const;
  std::vector<Edge> to_edges(const EdgeIdList& l) const;

  const PointSet& ps_;
  EdgeUniverse u_;
  EnumerationOptions opts_;
  EdgeIdList f_ids_;
  std::vector<char> f_mask_;
  EdgeIdList cdt_ids_;
  std::vector<char> cdt_mask_;
  EdgeIdList root_;
  std::vector<char> root_mask_;
};

}  // namespace laman
