#include <doctest.h>

#include <algorithm>
#include <random>

#include "lamanenum/oracle.hpp"
#include "lamanenum/rigidity.hpp"

using namespace laman;

namespace {

SparseGraph graph(int n, std::vector<Edge> edges) { return SparseGraph{n, std::move(edges)}; }

// Triangle 123 with pendant edges 14 and 24.
const SparseGraph kPendant = graph(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}});

}  // namespace

TEST_CASE("try_insert accepts a triangle and rejects the K4 completion") {
  PebbleState st(3);
  CHECK(st.try_insert({1, 2}));
  CHECK(st.try_insert({1, 3}));
  CHECK(st.try_insert({2, 3}));
  CHECK(st.accepted().size() == 3);

  PebbleState k4(4);
  for (const Edge e : {Edge{1, 2}, Edge{1, 3}, Edge{1, 4}, Edge{2, 3}, Edge{2, 4}})
    CHECK(k4.try_insert(e));
  CHECK(!k4.try_insert({3, 4}));  // 6 edges > 2*4-3
}

TEST_CASE("try_insert extends a triangle to the pendant Laman graph") {
  PebbleState st(4);
  for (const Edge e : {Edge{1, 2}, Edge{1, 3}, Edge{2, 3}}) CHECK(st.try_insert(e));
  CHECK(st.try_insert({1, 4}));
  CHECK(st.try_insert({2, 4}));
  CHECK(oracle::definitional_laman(st.accepted(), 4));
}

TEST_CASE("pebble conservation across random insert sequences") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const int n = 3 + static_cast<int>(rng() % 5);
    std::vector<Edge> all;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    PebbleState st(n);
    int accepted = 0;
    for (const Edge& e : all) {
      if (st.try_insert(e)) ++accepted;
      CHECK(st.total_pebbles() + static_cast<int>(st.accepted().size()) == 2 * n);
    }
    CHECK(accepted == std::min<int>(static_cast<int>(all.size()), 2 * n - 3));
  }
}

TEST_CASE("rejection leaves the state observationally unchanged") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 100; ++it) {
    const int n = 4 + static_cast<int>(rng() % 4);
    std::vector<Edge> all;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    PebbleState a(n);
    PebbleState b(n);  // b skips the rejected attempts entirely
    std::vector<Edge> pending(all.begin(), all.begin() + all.size() / 2);
    for (const Edge& e : pending) {
      const bool ok = a.try_insert(e);
      if (ok) REQUIRE(b.try_insert(e));
    }
    for (const Edge& e : std::vector<Edge>(all.begin() + all.size() / 2, all.end()))
      CHECK(a.try_insert(e) == b.try_insert(e));
  }
}

TEST_CASE("is_laman and is_independent basics") {
  CHECK(is_laman(graph(3, {{1, 2}, {1, 3}, {2, 3}})));
  CHECK(!is_laman(graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})));  // K4
  CHECK(is_laman(graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}})));  // 4-cycle + diagonal

  CHECK(is_independent({{1, 2}, {1, 3}}, 4));
  CHECK(!is_independent({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, 4));
  // Any 2n-2 edges exceed the rank.
  std::vector<Edge> e9 = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}};
  CHECK(static_cast<int>(e9.size()) == 2 * 5 - 2);
  CHECK(!is_independent(e9, 5));
}

TEST_CASE("is_laman agrees with the definitional count condition") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 400; ++it) {
    const int n = 3 + static_cast<int>(rng() % 4);
    std::vector<Edge> all;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    const size_t take = std::min<size_t>(all.size(), static_cast<size_t>(2 * n - 3));
    std::vector<Edge> edges(all.begin(), all.begin() + take);
    CHECK(is_laman(graph(n, edges)) == oracle::definitional_laman(edges, n));
    CHECK(is_independent(edges, n) == oracle::definitional_independent(edges, n));
  }
}

TEST_CASE("components after removing a pendant edge") {
  const ComponentIndex idx = ComponentIndex::after_removal(4, kPendant.edges, {1, 4});
  REQUIRE(idx.components().size() == 2);
  CHECK(idx.components()[0] == std::vector<int>{1, 2, 3});
  CHECK(idx.components()[1] == std::vector<int>{2, 4});
  CHECK(idx.pair_find(1, 3));
  CHECK(!idx.pair_find(3, 4));
  CHECK(idx.pair_find(4, 4));  // a vertex shares a component with itself
}

TEST_CASE("components of a bare triangle minus an edge are single bars") {
  const ComponentIndex idx =
      ComponentIndex::after_removal(3, {{1, 2}, {1, 3}, {2, 3}}, {1, 2});
  REQUIRE(idx.components().size() == 2);
  CHECK(idx.components()[0] == std::vector<int>{1, 3});
  CHECK(idx.components()[1] == std::vector<int>{2, 3});
}

TEST_CASE("a 1dof mechanism has at least two components with the right spans") {
  std::mt19937_64 rng(14);
  for (int it = 0; it < 150; ++it) {
    const int n = 4 + static_cast<int>(rng() % 3);
    // random Laman graph: greedy over a shuffled K_n
    std::vector<Edge> all;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    PebbleState st(n);
    std::vector<Edge> laman;
    for (const Edge& e : all)
      if (static_cast<int>(laman.size()) < 2 * n - 3 && st.try_insert(e)) laman.push_back(e);
    REQUIRE(static_cast<int>(laman.size()) == 2 * n - 3);
    const Edge removed = laman[rng() % laman.size()];
    const ComponentIndex idx = ComponentIndex::after_removal(n, laman, removed);
    CHECK(idx.components().size() >= 2);
    // Pairwise overlap at most one vertex; union covers every surviving edge;
    // each component spans exactly 2n'-3 surviving edges.
    const auto& comps = idx.components();
    for (size_t i = 0; i < comps.size(); ++i)
      for (size_t j = i + 1; j < comps.size(); ++j) {
        std::vector<int> inter;
        std::set_intersection(comps[i].begin(), comps[i].end(), comps[j].begin(), comps[j].end(),
                              std::back_inserter(inter));
        CHECK(inter.size() <= 1);
      }
    for (const auto& comp : comps) {
      int span = 0;
      for (const Edge& e : laman) {
        if (e == removed) continue;
        if (std::binary_search(comp.begin(), comp.end(), e.u) &&
            std::binary_search(comp.begin(), comp.end(), e.v))
          ++span;
      }
      CHECK(span == 2 * static_cast<int>(comp.size()) - 3);
    }
    for (const Edge& e : laman) {
      if (e == removed) continue;
      bool covered = false;
      for (const auto& comp : comps)
        if (std::binary_search(comp.begin(), comp.end(), e.u) &&
            std::binary_search(comp.begin(), comp.end(), e.v))
          covered = true;
      CHECK(covered);
    }
  }
}

TEST_CASE("restores_laman matches the direct Laman test") {
  CHECK(restores_laman(kPendant, {1, 4}, {3, 4}));
  CHECK(!restores_laman(kPendant, {1, 4}, {2, 3}));  // 2,3 spanned by the rigid triangle
  CHECK(restores_laman(kPendant, {1, 4}, {1, 4}));   // unchanged framework

  std::mt19937_64 rng(15);
  for (int it = 0; it < 100; ++it) {
    const int n = 4 + static_cast<int>(rng() % 3);
    std::vector<Edge> all;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    PebbleState st(n);
    std::vector<Edge> laman;
    for (const Edge& e : all)
      if (static_cast<int>(laman.size()) < 2 * n - 3 && st.try_insert(e)) laman.push_back(e);
    REQUIRE(static_cast<int>(laman.size()) == 2 * n - 3);
    std::sort(laman.begin(), laman.end());
    const SparseGraph g = graph(n, laman);
    for (const Edge& out : laman)
      for (const Edge& in : all) {
        if (std::binary_search(laman.begin(), laman.end(), in) && !(in == out)) continue;
        std::vector<Edge> swapped;
        for (const Edge& e : laman)
          if (!(e == out)) swapped.push_back(e);
        swapped.push_back(in);
        CHECK(restores_laman(g, out, in) == oracle::definitional_laman(swapped, n));
      }
  }
}
