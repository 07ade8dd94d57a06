// Acceptance suite: full-system checks on randomized instances, one PASS/FAIL
// line per criterion. Everything is cross-checked against the definitional
// brute-force oracle; seeds are fixed for reproducibility.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lamanenum/enumeration.hpp"
#include "lamanenum/oracle.hpp"
#include "lamanenum/triangulation.hpp"

using namespace laman;

namespace {

struct Failure {
  int count = 0;
  std::string first;
  void add(const std::string& what) {
    if (count++ == 0) first = what;
  }
};

PointSet random_generic(std::mt19937_64& rng, int n, bool no_cocircular = false, int box = 400) {
  std::uniform_int_distribution<int> d(0, box);
  for (;;) {
    std::vector<std::pair<std::string, std::string>> c;
    std::set<std::pair<int, int>> used;
    while (static_cast<int>(c.size()) < n) {
      const std::pair<int, int> p{d(rng), d(rng)};
      if (used.insert(p).second) c.push_back({std::to_string(p.first), std::to_string(p.second)});
    }
    PointSet ps = PointSet::parse(c);
    const GenericityReport rep = assert_generic(ps);
    if (!rep.ok) continue;
    if (no_cocircular && !rep.cocircular_quads.empty()) continue;
    return ps;
  }
}

std::vector<Edge> random_constraints(std::mt19937_64& rng, const PointSet& ps, int target) {
  const int n = ps.size();
  std::vector<Edge> all;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<Edge> f;
  for (const Edge& e : all) {
    if (static_cast<int>(f.size()) >= target) break;
    bool crosses = false;
    for (const Edge& g : f)
      if (oracle::segments_cross(ps[e.u], ps[e.v], ps[g.u], ps[g.v])) crosses = true;
    if (crosses) continue;
    f.push_back(e);
    if (!oracle::definitional_independent(f, n)) f.pop_back();
  }
  return f;
}

struct InstanceRun {
  PointSet points;
  std::vector<Edge> constraints;
  std::vector<EdgeIdList> emitted;      // in emission order
  std::set<EdgeIdList> oracle_set;
  EdgeIdList root;
};

long read_rss_kb() {
  std::ifstream statm("/proc/self/statm");
  long size = 0, resident = 0;
  if (!(statm >> size >> resident)) return -1;
  return resident * (sysconf(_SC_PAGESIZE) / 1024);
}

// ---- criteria -----------------------------------------------------------

bool criterion_1_to_3(std::vector<InstanceRun>& runs, std::string& note) {
  std::mt19937_64 rng(0xC0FFEE);
  Failure f1, f2, f3;
  std::uint64_t total = 0;
  for (int it = 0; it < 50; ++it) {
    const int n = 4 + it % 5;  // 4..8, ten of each
    InstanceRun run;
    run.points = random_generic(rng, n);
    // Sweep |F| including the extremes 0 and n-1.
    const int fsize = (it % 10 == 0) ? 0 : (it % 10 == 1) ? n - 1 : static_cast<int>(rng() % n);
    run.constraints = random_constraints(rng, run.points, fsize);

    Enumerator en(run.points, run.constraints);
    const EdgeUniverse& u = en.universe();
    run.root = en.root();
    std::set<EdgeIdList> seen;
    en.enumerate([&](const Emission& em) {
      run.emitted.push_back(em.edges);
      if (!seen.insert(em.edges).second) f3.add("duplicate emission");
      return true;
    });
    const auto rep = oracle::brute_frameworks(run.points, run.constraints);
    if (!rep.diagnostic.empty()) {
      f1.add("oracle rejected generated constraints: " + rep.diagnostic);
      continue;
    }
    for (const auto& fw : rep.frameworks) {
      EdgeIdList ids;
      for (const Edge& e : fw) ids.push_back(u.id(e));
      std::sort(ids.begin(), ids.end());
      run.oracle_set.insert(std::move(ids));
    }
    if (seen != run.oracle_set)
      f1.add("set mismatch at instance " + std::to_string(it) + ": enum " +
             std::to_string(seen.size()) + " vs oracle " + std::to_string(run.oracle_set.size()));
    total += seen.size();

    // criterion 2: structural validity, oracle-side re-checks
    for (const EdgeIdList& l : run.emitted) {
      if (static_cast<int>(l.size()) != 2 * n - 3) f2.add("edge count != 2n-3");
      std::vector<Edge> es;
      for (int e : l) es.push_back(u.edge(e));
      for (const Edge& c : run.constraints)
        if (std::find(es.begin(), es.end(), c) == es.end()) f2.add("constraint missing");
      if (!oracle::definitional_laman(es, n)) f2.add("not Laman by subset counts");
      for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j)
          if (oracle::segments_cross(run.points[es[i].u], run.points[es[i].v],
                                     run.points[es[j].u], run.points[es[j].v]))
            f2.add("crossing pair emitted");
    }
    runs.push_back(std::move(run));
  }
  std::printf("[%s] criterion 1: oracle set equality on 50 instances (n=4..8, %llu frameworks)%s\n",
              f1.count == 0 ? "PASS" : "FAIL", static_cast<unsigned long long>(total),
              f1.count ? (" – " + f1.first).c_str() : "");
  std::printf("[%s] criterion 2: structural validity of every emission%s\n",
              f2.count == 0 ? "PASS" : "FAIL", f2.count ? (" – " + f2.first).c_str() : "");
  std::printf("[%s] criterion 3: no duplicate emissions%s\n", f3.count == 0 ? "PASS" : "FAIL",
              f3.count ? (" – " + f3.first).c_str() : "");
  note = "";
  return f1.count + f2.count + f3.count == 0;
}

bool criterion_4(const std::vector<InstanceRun>& runs) {
  Failure f;
  int max_steps_seen = 0;
  for (const InstanceRun& run : runs) {
    const int n = run.points.size();
    const int cap = 5 * n * n;
    Enumerator en(run.points, run.constraints);
    const EdgeUniverse& u = en.universe();
    std::map<EdgeIdList, int> depth;
    depth[run.root] = 0;
    for (const EdgeIdList& start : run.emitted) {
      std::vector<EdgeIdList> path;
      EdgeIdList cur = start;
      while (!depth.count(cur)) {
        path.push_back(cur);
        EdgeIdList par;
        if (en.is_cdlf(cur)) {
          par = en.parent(cur);
        } else {
          // Case 2: the angle vector of T(L) must strictly increase.
          const Triangulation tl = underlying_triangulation(u, cur);
          par = en.parent(cur, &tl);
          const Triangulation tp = underlying_triangulation(u, par);
          if (compare(AngleVector::of(tl), AngleVector::of(tp)) >= 0)
            f.add("angle vector not increased by a case-2 parent step");
        }
        cur = par;
        if (static_cast<int>(path.size()) > cap) {
          f.add("parent chain exceeded 5n^2 before reaching a known node");
          break;
        }
      }
      int d = depth.count(cur) ? depth[cur] : cap + 1;
      for (auto it = path.rbegin(); it != path.rend(); ++it) depth[*it] = ++d;
      if (depth.count(start)) {
        max_steps_seen = std::max(max_steps_seen, depth[start]);
        if (depth[start] > cap) f.add("parent chain longer than 5n^2");
      }
    }
  }
  std::printf("[%s] criterion 4: parent chains reach the root within 5n^2 steps "
              "(longest %d), case-2 steps raise the angle vector%s\n",
              f.count == 0 ? "PASS" : "FAIL", max_steps_seen,
              f.count ? (" – " + f.first).c_str() : "");
  return f.count == 0;
}

bool criterion_5() {
  std::mt19937_64 rng(0xFACADE);
  Failure f;
  std::uint64_t pairs = 0;
  struct Spec {
    int n;
    int fsize;
  };
  for (const Spec spec :
       {Spec{4, 0}, Spec{5, 0}, Spec{6, 0}, Spec{6, 3}, Spec{7, 0}, Spec{7, 3}, Spec{7, 5}}) {
    const PointSet ps = random_generic(rng, spec.n);
    const std::vector<Edge> F = random_constraints(rng, ps, spec.fsize);
    Enumerator en(ps, F);
    const EdgeUniverse& u = en.universe();
    const auto rep = oracle::brute_frameworks(ps, F);
    std::vector<EdgeIdList> family;
    for (const auto& fw : rep.frameworks) {
      EdgeIdList ids;
      for (const Edge& e : fw) ids.push_back(u.id(e));
      std::sort(ids.begin(), ids.end());
      family.push_back(std::move(ids));
    }
    std::map<EdgeIdList, EdgeIdList> parent_memo;
    auto parent_of = [&](const EdgeIdList& l) -> const EdgeIdList& {
      auto it = parent_memo.find(l);
      if (it == parent_memo.end()) it = parent_memo.emplace(l, en.parent(l)).first;
      return it->second;
    };
    for (const EdgeIdList& l : family) {
      auto view = en.node_view(l);
      std::vector<char> in_l(static_cast<size_t>(u.edge_count()), 0);
      for (int e : l) in_l[static_cast<size_t>(e)] = 1;
      for (int e1 : l) {
        if (std::binary_search(en.constraint_ids().begin(), en.constraint_ids().end(), e1))
          continue;
        const ComponentIndex idx =
            ComponentIndex::after_removal(spec.n, [&] {
              std::vector<Edge> es;
              for (int e : l) es.push_back(u.edge(e));
              return es;
            }(), u.edge(e1));
        for (int e2 = 0; e2 < u.edge_count(); ++e2) {
          if (in_l[static_cast<size_t>(e2)]) continue;
          int cross = 0;
          for (int g : l)
            if (g != e1 && u.crosses(g, e2)) ++cross;
          if (cross > 0) continue;
          const Edge in = u.edge(e2);
          if (idx.pair_find(in.u, in.v)) continue;
          // Adj(l, e1, e2) exists; compare the fast checks to the definition.
          EdgeIdList child;
          for (int e : l)
            if (e != e1) child.push_back(e);
          child.insert(std::lower_bound(child.begin(), child.end(), e2), e2);
          const bool fast1 = view.check_parent_f1(e1, e2);
          const bool fast2 = view.check_parent_f2(e1, e2);
          const bool definitional = child != en.root() && parent_of(child) == l;
          ++pairs;
          if (fast1 && fast2) f.add("both f1 and f2 fired");
          if ((fast1 || fast2) != definitional) f.add("fast check disagrees with parent()");
        }
      }
    }
  }
  std::printf("[%s] criterion 5: O(1) parent checks match the definitional test on %llu "
              "adjacency pairs, never both%s\n",
              f.count == 0 ? "PASS" : "FAIL", static_cast<unsigned long long>(pairs),
              f.count ? (" – " + f.first).c_str() : "");
  return f.count == 0;
}

bool criterion_6() {
  std::mt19937_64 rng(0xDECADE);
  Failure f;
  int instances = 0, triangulations = 0;
  while (instances < 20) {
    const int n = 4 + instances % 4;  // 4..7
    const PointSet ps = random_generic(rng, n, /*no_cocircular=*/true);
    const EdgeUniverse u(ps);
    const Triangulation cdt = build_cdt(u, {});
    const AngleVector best = AngleVector::of(cdt);
    bool found_self = false;
    for (const auto& edges : oracle::all_triangulations(ps, {})) {
      std::vector<int> ids;
      for (const Edge& e : edges) ids.push_back(u.id(e));
      const Triangulation t = initial_triangulation(u, ids);
      const int cmp = compare(best, AngleVector::of(t));
      ++triangulations;
      if (t.present_mask() == cdt.present_mask()) {
        found_self = true;
        if (cmp != 0) f.add("CDT angle vector differs from itself");
      } else if (cmp <= 0) {
        f.add("non-CDT triangulation matches or beats the CDT angle vector");
      }
    }
    if (!found_self) f.add("CDT missing from the exhaustive triangulation family");
    ++instances;
  }
  std::printf("[%s] criterion 6: CDT has the strictly maximum angle vector over %d "
              "triangulations on 20 instances%s\n",
              f.count == 0 ? "PASS" : "FAIL", triangulations,
              f.count ? (" – " + f.first).c_str() : "");
  return f.count == 0;
}

bool criterion_7() {
  std::mt19937_64 rng(0xBEEF);
  Failure f;
  int max_flips = 0;
  for (int it = 0; it < 100; ++it) {
    const int n = 4 + it % 6;  // 4..9
    const PointSet ps = random_generic(rng, n);
    const EdgeUniverse u(ps);
    std::vector<Edge> F = random_constraints(rng, ps, static_cast<int>(rng() % n));
    std::vector<int> fids;
    for (const Edge& e : F) fids.push_back(u.id(e));
    std::vector<int> order(static_cast<size_t>(u.edge_count()));
    for (int e = 0; e < u.edge_count(); ++e) order[static_cast<size_t>(e)] = e;
    std::shuffle(order.begin(), order.end(), rng);
    Triangulation t = initial_triangulation(u, fids, &order);
    AngleVector prev = AngleVector::of(t);
    bool monotone = true;
    const int flips = legalize(
        t,
        [&](int, int) {
          const AngleVector cur = AngleVector::of(t);
          if (compare(prev, cur) >= 0) monotone = false;
          prev = cur;
        },
        rng() | 1);
    if (!monotone) f.add("a D-flip failed to increase the angle vector");
    if (flips > n * n) f.add("flip count exceeded n^2");
    max_flips = std::max(max_flips, flips);
    if (!same_subdivision(t, build_cdt(u, fids))) f.add("legalization missed the CDT");
  }
  std::printf("[%s] criterion 7: 100 random legalizations reach the CDT, each flip raising "
              "the angle vector (max flips %d)%s\n",
              f.count == 0 ? "PASS" : "FAIL", max_flips, f.count ? (" – " + f.first).c_str() : "");
  return f.count == 0;
}

bool criterion_8() {
  std::mt19937_64 rng(0xABCD);
  Failure f;
  int ops = 0;
  while (ops < 10000) {
    const int n = 4 + static_cast<int>(rng() % 7);  // 4..10
    const PointSet ps = random_generic(rng, n);
    const EdgeUniverse u(ps);
    Triangulation t = build_cdt(u, {});
    std::vector<int> cons;
    std::uniform_int_distribution<int> ed(0, u.edge_count() - 1);
    for (int k = 0; k < 80 && ops < 10000; ++k) {
      const int e = ed(rng);
      if (t.is_constrained(e)) {
        remove_edge_update(t, e);
        cons.erase(std::find(cons.begin(), cons.end(), e));
      } else {
        bool blocked = false;
        for (int g : cons)
          if (u.crosses(e, g)) blocked = true;
        if (blocked) continue;
        insert_edge_update(t, e);
        cons.push_back(e);
      }
      ++ops;
      if (!same_subdivision(t, build_cdt(u, cons))) {
        f.add("incremental update diverged from the rebuild");
        break;
      }
    }
    if (f.count) break;
  }
  std::printf("[%s] criterion 8: %d incremental updates match full rebuilds exactly%s\n",
              f.count == 0 ? "PASS" : "FAIL", ops, f.count ? (" – " + f.first).c_str() : "");
  return f.count == 0;
}

bool criterion_9() {
  const std::vector<std::pair<std::string, std::string>> coords = {
      {"100", "0"}, {"81", "59"},   {"31", "95"},  {"-31", "95"}, {"-81", "58"},
      {"-100", "1"}, {"-80", "-58"}, {"-30", "-96"}, {"30", "-94"}, {"82", "-57"}};
  const PointSet ps = PointSet::parse(coords);
  Failure f;
  const GenericityReport rep = assert_generic(ps);
  if (!rep.ok) f.add("fixed instance not generic");
  Enumerator en(ps, {});
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  auto last = t0;
  double max_gap_ms = 0;
  long rss_at_100 = -1;
  std::uint64_t count = en.enumerate([&](const Emission& em) {
    const auto now = Clock::now();
    max_gap_ms = std::max(max_gap_ms, std::chrono::duration<double, std::milli>(now - last).count());
    last = now;
    if (em.index == 100) rss_at_100 = read_rss_kb();
    return true;
  });
  const double total_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  const long rss_end = read_rss_kb();
  const double per_output = total_ms / static_cast<double>(count);
  if (per_output > 50.0) f.add("average per-output time above 50 ms");
  if (max_gap_ms > 250.0) f.add("a single output gap above 250 ms (5x slack)");
  if (rss_at_100 >= 0 && rss_end >= 0 && rss_end - rss_at_100 > 10 * 1024)
    f.add("resident memory grew with the output count");
  std::printf("[%s] criterion 9: n=10 smoke test, %llu frameworks, %.2f ms/output "
              "(max gap %.1f ms), rss drift %ld kB%s\n",
              f.count == 0 ? "PASS" : "FAIL", static_cast<unsigned long long>(count), per_output,
              max_gap_ms, (rss_at_100 >= 0 && rss_end >= 0) ? rss_end - rss_at_100 : -1,
              f.count ? (" – " + f.first).c_str() : "");
  return f.count == 0;
}

}  // namespace

int main() {
  bool ok = true;
  std::vector<InstanceRun> runs;
  std::string note;
  ok &= criterion_1_to_3(runs, note);
  ok &= criterion_4(runs);
  ok &= criterion_5();
  ok &= criterion_6();
  ok &= criterion_7();
  ok &= criterion_8();
  ok &= criterion_9();
  std::printf("%s\n", ok ? "acceptance: all criteria passed" : "acceptance: FAILURES above");
  return ok ? 0 : 1;
}
