#include "lamanenum/enumeration.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "lamanenum/errors.hpp"

namespace laman {

int lex_compare(const EdgeIdList& a, const EdgeIdList& b) {
  const size_t k = std::min(a.size(), b.size());
  for (size_t i = 0; i < k; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

namespace {

bool sorted_contains(const EdgeIdList& l, int eid) {
  return std::binary_search(l.begin(), l.end(), eid);
}

EdgeIdList swapped(const EdgeIdList& l, int out, int in) {
  EdgeIdList r;
  r.reserve(l.size());
  for (int e : l)
    if (e != out) r.push_back(e);
  r.insert(std::lower_bound(r.begin(), r.end(), in), in);
  return r;
}

}  // namespace

// Per-node scratch: T(L), edge classifications, crossing counters against L,
// the per-candidate max-illegal flag for insertions, and the lazily built
// component index with both thresholds. Everything an O(1) pair check needs.
struct Enumerator::Scratch {
  EdgeIdList l;
  std::vector<char> l_mask;
  Triangulation t;
  std::vector<signed char> cls;  // EdgeClass per present edge, -1 absent
  std::vector<int> cross_n;
  std::vector<int> cross_e;      // meaningful when cross_n == 1
  std::vector<char> f2d;         // e2 is the max F-illegal edge of the updated T
  int max_l_minus_root = -1;     // f1 insertion bound, -1 when L inside L*
  bool cdlf = false;
  // per-e1 cache (position in l)
  int cur_pos = -1;
  std::optional<ComponentIndex> comp;
  int thr_f1 = 0, thr_f2 = 0;

  explicit Scratch(const EdgeUniverse& u) : t(u) {}
};

Enumerator::Enumerator(const PointSet& ps, const std::vector<Edge>& constraints,
                       EnumerationOptions options)
    : ps_(ps), u_(ps), opts_(options) {
  const int n = ps.size();
  if (n < 3) throw ParseError("at least 3 points required");
  const GenericityReport rep = assert_generic(ps);
  if (!rep.ok) {
    std::string msg = "collinear triples:";
    for (const auto& t3 : rep.collinear_triples)
      msg += " (" + std::to_string(t3[0]) + "," + std::to_string(t3[1]) + "," +
             std::to_string(t3[2]) + ")";
    throw GenericityError(msg);
  }

  f_mask_.assign(static_cast<size_t>(u_.edge_count()), 0);
  for (const Edge& e : constraints) {
    if (e.u < 1 || e.v > n || e.u == e.v)
      throw ConstraintError("constraint edge out of range");
    const int id = u_.id(e);
    if (f_mask_[static_cast<size_t>(id)]) throw ConstraintError("duplicate constraint edge");
    f_mask_[static_cast<size_t>(id)] = 1;
    f_ids_.push_back(id);
  }
  std::sort(f_ids_.begin(), f_ids_.end());
  for (size_t i = 0; i < f_ids_.size(); ++i)
    for (size_t j = i + 1; j < f_ids_.size(); ++j)
      if (u_.crosses(f_ids_[i], f_ids_[j])) throw ConstraintError("constraint edges cross");
  if (!is_independent(to_edges(f_ids_), n))
    throw ConstraintError("constraint edges dependent in the rigidity matroid");

  const Triangulation cdt = build_cdt(u_, f_ids_);
  cdt_ids_ = cdt.edge_ids();
  cdt_mask_ = cdt.present_mask();

  // Root: matroid greedy over the CDT edges in lexicographic order, seeded
  // with the constraints, gives the lexicographically smallest framework.
  PebbleState st(n);
  for (int c : f_ids_) {
    const bool ok = st.try_insert(u_.edge(c));
    assert(ok);
    (void)ok;
  }
  root_ = f_ids_;
  for (int e : cdt_ids_) {
    if (static_cast<int>(root_.size()) == 2 * n - 3) break;
    if (f_mask_[static_cast<size_t>(e)]) continue;
    if (st.try_insert(u_.edge(e))) root_.push_back(e);
  }
  std::sort(root_.begin(), root_.end());
  if (static_cast<int>(root_.size()) != 2 * n - 3)
    throw std::logic_error("root construction failed to reach 2n-3 edges");
  root_mask_.assign(static_cast<size_t>(u_.edge_count()), 0);
  for (int e : root_) root_mask_[static_cast<size_t>(e)] = 1;
}

Enumerator::~Enumerator() = default;

std::vector<Edge> Enumerator::to_edges(const EdgeIdList& l) const {
  std::vector<Edge> es;
  es.reserve(l.size());
  for (int e : l) es.push_back(u_.edge(e));
  return es;
}

bool Enumerator::is_cdlf(const EdgeIdList& l) const {
  for (int e : l)
    if (!cdt_mask_[static_cast<size_t>(e)]) return false;
  return true;
}

std::optional<EdgeIdList> Enumerator::adjacency(const EdgeIdList& l, int e1, int e2) const {
  if (f_mask_[static_cast<size_t>(e1)])
    throw std::invalid_argument("adjacency: e1 is a constraint edge");
  assert(sorted_contains(l, e1) && !sorted_contains(l, e2));
  for (int g : l)
    if (g != e1 && u_.crosses(g, e2)) return std::nullopt;
  const ComponentIndex idx = ComponentIndex::after_removal(ps_.size(), to_edges(l), u_.edge(e1));
  const Edge in = u_.edge(e2);
  if (idx.pair_find(in.u, in.v)) return std::nullopt;
  return swapped(l, e1, e2);
}

EdgeIdList Enumerator::parent(const EdgeIdList& l, const Triangulation* tl) const {
  if (l == root_) throw std::invalid_argument("parent: called on the root");
  const int n = ps_.size();
  int ac = -1, st = -1;
  if (is_cdlf(l)) {
    // Case 1: largest edge outside the root, smallest restoring root edge.
    for (int e : l)
      if (!root_mask_[static_cast<size_t>(e)]) ac = std::max(ac, e);
    assert(ac >= 0);
    const ComponentIndex idx = ComponentIndex::after_removal(n, to_edges(l), u_.edge(ac));
    for (int e : root_) {
      if (sorted_contains(l, e)) continue;
      const Edge in = u_.edge(e);
      if (!idx.pair_find(in.u, in.v)) {
        st = e;
        break;
      }
    }
  } else {
    // Case 2: largest F-illegal edge of T(L), smallest restoring edge of
    // T(L - ac).
    Triangulation t = tl ? *tl : underlying_triangulation(u_, l);
    for (int e = u_.edge_count() - 1; e >= 0; --e)
      if (t.has_edge(e) && classify_edge(t, e, f_mask_) == EdgeClass::FIllegal) {
        ac = e;
        break;
      }
    assert(ac >= 0);
    assert(sorted_contains(l, ac) && !f_mask_[static_cast<size_t>(ac)]);
    remove_edge_update(t, ac);
    assert(!t.has_edge(ac));
    const ComponentIndex idx = ComponentIndex::after_removal(n, to_edges(l), u_.edge(ac));
    for (int e = 0; e < u_.edge_count(); ++e) {
      if (!t.has_edge(e) || sorted_contains(l, e)) continue;
      const Edge in = u_.edge(e);
      if (!idx.pair_find(in.u, in.v)) {
        st = e;
        break;
      }
    }
  }
  if (st < 0) throw std::logic_error("parent: no restoring edge found");
  return swapped(l, ac, st);
}

void Enumerator::build_scratch(Scratch& s, EdgeIdList l, Triangulation t) const {
  const int m = u_.edge_count();
  s.l = std::move(l);
  s.t = std::move(t);
  assert(s.t.constrained_ids() == s.l);  // T must be T(L): constrained by L itself
  s.l_mask.assign(static_cast<size_t>(m), 0);
  for (int e : s.l) s.l_mask[static_cast<size_t>(e)] = 1;
  s.cur_pos = -1;
  s.comp.reset();

  s.cls.assign(static_cast<size_t>(m), -1);
  for (int e = 0; e < m; ++e)
    if (s.t.has_edge(e))
      s.cls[static_cast<size_t>(e)] = static_cast<signed char>(classify_edge(s.t, e, f_mask_));

  s.cross_n.assign(static_cast<size_t>(m), 0);
  s.cross_e.assign(static_cast<size_t>(m), -1);
  for (int e2 = 0; e2 < m; ++e2) {
    if (s.l_mask[static_cast<size_t>(e2)]) continue;
    for (int g : s.l)
      if (u_.crosses(e2, g)) {
        ++s.cross_n[static_cast<size_t>(e2)];
        s.cross_e[static_cast<size_t>(e2)] = g;
      }
  }

  s.cdlf = is_cdlf(s.l);
  s.max_l_minus_root = -1;
  for (int e : s.l)
    if (!root_mask_[static_cast<size_t>(e)]) s.max_l_minus_root = std::max(s.max_l_minus_root, e);

  // Per-candidate flag for the f2 check: is e2 the largest F-illegal edge of the
  // triangulation updated for the swap? Per the observation that the update
  // is independent of which F-legal e1 leaves, this is a per-e2 property:
  // T(L + e2) when e2 crosses nothing of L, T(L - cross_e + e2) when it
  // crosses exactly one (the only removable crossing partner).
  s.f2d.assign(static_cast<size_t>(m), 0);
  for (int e2 = 0; e2 < m; ++e2) {
    if (s.l_mask[static_cast<size_t>(e2)] || s.t.has_edge(e2)) continue;
    const int cn = s.cross_n[static_cast<size_t>(e2)];
    if (cn > 1) continue;
    if (cn == 1 && f_mask_[static_cast<size_t>(s.cross_e[static_cast<size_t>(e2)])]) continue;
    Triangulation t2 = s.t;
    if (cn == 1) remove_edge_update(t2, s.cross_e[static_cast<size_t>(e2)]);
    insert_edge_update(t2, e2);
    int max_illegal = -1;
    for (int g = m - 1; g >= 0; --g)
      if (t2.has_edge(g) && classify_edge(t2, g, f_mask_) == EdgeClass::FIllegal) {
        max_illegal = g;
        break;
      }
    s.f2d[static_cast<size_t>(e2)] = max_illegal == e2;
  }
}

void Enumerator::ensure_e1(Scratch& s, int pos) const {
  if (s.cur_pos == pos) return;
  s.cur_pos = pos;
  const int e1 = s.l[static_cast<size_t>(pos)];
  s.comp = ComponentIndex::after_removal(ps_.size(), to_edges(s.l), u_.edge(e1));
  const int m = u_.edge_count();
  auto restoring = [&](int e) {
    const Edge in = u_.edge(e);
    return !s.comp->pair_find(in.u, in.v);
  };
  s.thr_f1 = m;
  for (int e : root_)
    if (!s.l_mask[static_cast<size_t>(e)] && restoring(e)) {
      s.thr_f1 = e;
      break;
    }
  s.thr_f2 = m;
  for (int e = 0; e < m; ++e)
    if (s.t.has_edge(e) && !s.l_mask[static_cast<size_t>(e)] && restoring(e)) {
      s.thr_f2 = e;
      break;
    }
}

// The child L - e1 + e2 has this node as its base-exchange parent iff: both
// lie inside the CDT, e1 belongs to the root, e2 sits above every edge the
// node has outside the root (so it is the child's largest such edge), and e1
// sits below every root edge that could restore Laman after its removal (so
// it is the parent's smallest choice).
bool Enumerator::fast_check_f1(Scratch& s, int pos, int e2) const {
  if (!s.cdlf) return false;
  const int e1 = s.l[static_cast<size_t>(pos)];
  if (!cdt_mask_[static_cast<size_t>(e2)] || root_mask_[static_cast<size_t>(e2)]) return false;
  if (!root_mask_[static_cast<size_t>(e1)]) return false;
  if (e2 <= s.max_l_minus_root) return false;
  ensure_e1(s, pos);
  return e1 < s.thr_f1;
}

// The child has this node as its flip parent iff: e2 lies outside T(L) (the
// child leaves the CDT locally), e1 is F-legal here, e2 is the largest
// F-illegal edge of the child's updated triangulation (precomputed flag), and
// e1 is the smallest Laman-restoring edge of T(L) - L after its removal.
bool Enumerator::fast_check_f2(Scratch& s, int pos, int e2) const {
  const int e1 = s.l[static_cast<size_t>(pos)];
  if (s.t.has_edge(e2)) return false;
  if (s.cls[static_cast<size_t>(e1)] == static_cast<signed char>(EdgeClass::FIllegal)) return false;
  if (!s.f2d[static_cast<size_t>(e2)]) return false;
  ensure_e1(s, pos);
  return e1 < s.thr_f2;
}

std::uint64_t Enumerator::enumerate(const std::function<bool(const Emission&)>& sink) {
  const int m = u_.edge_count();
  const int n = ps_.size();
  const int delta = 2 * n - 3;
  const int max_depth = 5 * n * n + 5;

  Scratch s(u_);
  build_scratch(s, root_, underlying_triangulation(u_, root_));
  std::uint64_t count = 1;
  int depth = 0;
  if (!sink(Emission{s.l, count, depth, std::nullopt, &s.t})) return count;

  int start_i = 1, start_j = 1;
  for (;;) {
    bool moved = false;
    for (int i = start_i; i <= delta && !moved; ++i) {
      const int e1 = s.l[static_cast<size_t>(i - 1)];
      if (f_mask_[static_cast<size_t>(e1)]) continue;
      const int jb = (i == start_i) ? start_j : 1;
      if (jb > m) continue;
      for (int j = jb; j <= m && !moved; ++j) {
        const int e2 = j - 1;
        if (s.l_mask[static_cast<size_t>(e2)]) continue;
        const int cn = s.cross_n[static_cast<size_t>(e2)];
        if (cn > 1) continue;
        if (cn == 1 && s.cross_e[static_cast<size_t>(e2)] != e1) continue;
        ensure_e1(s, i - 1);
        const Edge in = u_.edge(e2);
        if (s.comp->pair_find(in.u, in.v)) continue;  // swap not Laman
        bool confirmed;
        if (opts_.slow_parent_check) {
          const EdgeIdList child = swapped(s.l, e1, e2);
          confirmed = child != root_ && parent(child) == s.l;
        } else {
          confirmed = fast_check_f1(s, i - 1, e2) || fast_check_f2(s, i - 1, e2);
        }
        if (!confirmed) continue;
        // Descend: update T(L) by the two constraint updates and rebuild the
        // node scratch.
        Triangulation t = std::move(s.t);
        remove_edge_update(t, e1);
        insert_edge_update(t, e2);
        build_scratch(s, swapped(s.l, e1, e2), std::move(t));
        ++depth;
        ++count;
        if (depth > max_depth) throw std::logic_error("enumerate: depth bound exceeded");
        if (!sink(Emission{s.l, count, depth, {{e1, e2}}, &s.t})) return count;
        start_i = 1;
        start_j = 1;
        moved = true;
      }
    }
    if (moved) continue;
    if (s.l == root_) break;

    // Ascend: recompute the parent and resume the scan right after the pair
    // that generated this child.
    const EdgeIdList child = s.l;
    const EdgeIdList par = parent(child, &s.t);
    --depth;
    int e1 = -1, e2 = -1;
    for (int e : par)
      if (!sorted_contains(child, e)) e1 = e;
    for (int e : child)
      if (!sorted_contains(par, e)) e2 = e;
    assert(e1 >= 0 && e2 >= 0);
    build_scratch(s, par, underlying_triangulation(u_, par));
    const auto it = std::lower_bound(s.l.begin(), s.l.end(), e1);
    assert(it != s.l.end() && *it == e1);
    start_i = static_cast<int>(it - s.l.begin()) + 1;
    start_j = (e2 + 1) + 1;
  }
  return count;
}

// ---- NodeView ----------------------------------------------------------

struct Enumerator::NodeView::Impl {
  Scratch s;
  explicit Impl(const EdgeUniverse& u) : s(u) {}
};

Enumerator::NodeView::NodeView(const Enumerator* owner)
    : owner_(owner), impl_(std::make_unique<Impl>(owner->universe())) {}
Enumerator::NodeView::~NodeView() = default;
Enumerator::NodeView::NodeView(NodeView&&) noexcept = default;

Enumerator::NodeView Enumerator::node_view(const EdgeIdList& l) const {
  NodeView v(this);
  build_scratch(v.impl_->s, l, underlying_triangulation(u_, l));
  return v;
}

const Triangulation& Enumerator::NodeView::underlying() const { return impl_->s.t; }

bool Enumerator::NodeView::check_parent_f1(int e1, int e2) {
  Scratch& s = impl_->s;
  const auto it = std::lower_bound(s.l.begin(), s.l.end(), e1);
  assert(it != s.l.end() && *it == e1);
  return owner_->fast_check_f1(s, static_cast<int>(it - s.l.begin()), e2);
}

bool Enumerator::NodeView::check_parent_f2(int e1, int e2) {
  Scratch& s = impl_->s;
  const auto it = std::lower_bound(s.l.begin(), s.l.end(), e1);
  assert(it != s.l.end() && *it == e1);
  return owner_->fast_check_f2(s, static_cast<int>(it - s.l.begin()), e2);
}

int Enumerator::NodeView::threshold_c(int e1, bool f1_mode) {
  Scratch& s = impl_->s;
  const auto it = std::lower_bound(s.l.begin(), s.l.end(), e1);
  assert(it != s.l.end() && *it == e1);
  owner_->ensure_e1(s, static_cast<int>(it - s.l.begin()));
  return f1_mode ? s.thr_f1 : s.thr_f2;
}

}  // namespace laman
