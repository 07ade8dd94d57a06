#pragma once

#include <string>
#include <vector>

#include "lamanenum/geometry.hpp"

namespace laman::oracle {

// Brute-force ground truth for small instances. Deliberately re-implemented
// from the definitions: sparsity counting instead of the pebble game,
// rational-arithmetic crossing tests instead of the scaled-integer
// predicates, exhaustive search instead of reverse search.

// True iff the closed segments properly intersect (shared endpoints do not
// count), evaluated directly on the rational coordinates.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

// Hereditary count condition: every vertex subset W spans at most 2|W|-3
// edges. Independence in the rigidity matroid, by definition.
bool definitional_independent(const std::vector<Edge>& edges, int n);

// |E| == 2n-3 plus the count condition.
bool definitional_laman(const std::vector<Edge>& edges, int n);

// Rank of the edge set in the rigidity matroid, by exhaustive subset search
// with pruning (early exit at the 2n-3 ceiling). Guarded to n <= 8.
int brute_rank(const std::vector<Edge>& edges, int n);

struct OracleReport {
  std::vector<std::vector<Edge>> frameworks;  // canonical sorted edge lists
  std::string diagnostic;                     // nonempty when F was rejected
};

// Every (2n-3)-subset of the edge universe that contains F, is pairwise
// non-crossing, and satisfies the count condition. Guarded to n <= 9.
OracleReport brute_frameworks(const PointSet& ps, const std::vector<Edge>& constraints);

// Every F-constrained triangulation (maximal non-crossing superset of F).
// Guarded to n <= 8.
std::vector<std::vector<Edge>> all_triangulations(const PointSet& ps,
                                                  const std::vector<Edge>& constraints);

}  // namespace laman::oracle
