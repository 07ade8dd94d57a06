#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "lamanenum/enumeration.hpp"
#include "lamanenum/errors.hpp"
#include "lamanenum/geometry.hpp"
#include "lamanenum/instance.hpp"
#include "lamanenum/oracle.hpp"

namespace py = pybind11;
using namespace laman;

namespace {

// Coordinates may come in as str, int, float or Decimal; everything is piped
// through str() and parsed as an exact decimal.
std::string coord_str(const py::handle& h) { return py::str(h).cast<std::string>(); }

PointSet to_points(const py::sequence& pts) {
  std::vector<std::pair<std::string, std::string>> coords;
  coords.reserve(pts.size());
  for (const py::handle& item : pts) {
    const py::sequence pair = item.cast<py::sequence>();
    coords.emplace_back(coord_str(pair[0]), coord_str(pair[1]));
  }
  return PointSet::parse(coords);
}

std::vector<Edge> to_edges(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.emplace_back(u, v);
  return edges;
}

std::vector<std::pair<int, int>> from_ids(const EdgeUniverse& u, const std::vector<int>& ids) {
  std::vector<std::pair<int, int>> out;
  out.reserve(ids.size());
  for (int e : ids) out.emplace_back(u.edge(e).u, u.edge(e).v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_lamanenum, m) {
  m.doc() = "Enumeration of constrained non-crossing Laman frameworks";

  py::register_exception<ParseError>(m, "InstanceParseError", PyExc_ValueError);
  py::register_exception<GenericityError>(m, "GenericityError", PyExc_ValueError);
  py::register_exception<ConstraintError>(m, "ConstraintError", PyExc_ValueError);

  m.def(
      "orientation",
      [](const py::sequence& a, const py::sequence& b, const py::sequence& c) {
        std::vector<std::pair<std::string, std::string>> coords;
        for (const auto& p : {a, b, c}) coords.emplace_back(coord_str(p[0]), coord_str(p[1]));
        const PointSet ps = PointSet::parse(coords);
        return orientation(ps[1], ps[2], ps[3]);
      },
      py::arg("a"), py::arg("b"), py::arg("c"),
      "Sign of the turn a->b->c: +1 left, -1 right, 0 collinear (exact).");

  m.def(
      "incircle",
      [](const py::sequence& a, const py::sequence& b, const py::sequence& c,
         const py::sequence& d) {
        std::vector<std::pair<std::string, std::string>> coords;
        for (const auto& p : {a, b, c, d}) coords.emplace_back(coord_str(p[0]), coord_str(p[1]));
        const PointSet ps = PointSet::parse(coords);
        return incircle(ps[1], ps[2], ps[3], ps[4]);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
      "+1 iff d is strictly inside the circumcircle of ccw (a,b,c); exact.");

  m.def(
      "incircle_tiebroken",
      [](const py::sequence& a, const py::sequence& b, const py::sequence& c,
         const py::sequence& d) {
        std::vector<std::pair<std::string, std::string>> coords;
        for (const auto& p : {a, b, c, d}) coords.emplace_back(coord_str(p[0]), coord_str(p[1]));
        const PointSet ps = PointSet::parse(coords);
        return incircle_tiebroken(ps[1], ps[2], ps[3], ps[4]);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
      "incircle with co-circular ties broken symbolically; never 0. Points are "
      "implicitly indexed 1..4 in argument order.");

  m.def(
      "check_generic",
      [](const py::sequence& pts) {
        const PointSet ps = to_points(pts);
        const GenericityReport rep = assert_generic(ps);
        py::dict d;
        d["ok"] = rep.ok;
        d["collinear_triples"] = rep.collinear_triples;
        d["cocircular_quads"] = rep.cocircular_quads;
        return d;
      },
      py::arg("points"), "Generic-position report: collinear triples abort, co-circular "
      "quadruples are informational.");

  m.def(
      "build_cdt",
      [](const py::sequence& pts, const std::vector<std::pair<int, int>>& constraints) {
        const PointSet ps = to_points(pts);
        const EdgeUniverse u(ps);
        std::vector<int> cids;
        for (const Edge& e : to_edges(constraints)) cids.push_back(u.id(e));
        const Triangulation t = build_cdt(u, cids);
        std::vector<std::tuple<int, int, bool>> out;
        for (int e : t.edge_ids())
          out.emplace_back(u.edge(e).u, u.edge(e).v, t.is_constrained(e));
        return out;
      },
      py::arg("points"), py::arg("constraints") = std::vector<std::pair<int, int>>{},
      "Edges (u, v, constrained) of the constrained Delaunay triangulation.");

  m.def(
      "framework_root",
      [](const py::sequence& pts, const std::vector<std::pair<int, int>>& constraints) {
        const PointSet ps = to_points(pts);
        const Enumerator en(ps, to_edges(constraints));
        return from_ids(en.universe(), en.root());
      },
      py::arg("points"), py::arg("constraints") = std::vector<std::pair<int, int>>{},
      "The lexicographically smallest constrained-Delaunay Laman framework (the "
      "enumeration root).");

  m.def(
      "count_frameworks",
      [](const py::sequence& pts, const std::vector<std::pair<int, int>>& constraints,
         bool slow_parent_check) {
        const PointSet ps = to_points(pts);
        EnumerationOptions opts;
        opts.slow_parent_check = slow_parent_check;
        Enumerator en(ps, to_edges(constraints), opts);
        return en.enumerate([](const Emission&) { return true; });
      },
      py::arg("points"), py::arg("constraints") = std::vector<std::pair<int, int>>{},
      py::arg("slow_parent_check") = false,
      "Number of F-constrained non-crossing Laman frameworks.");

  m.def(
      "enumerate_frameworks",
      [](const py::sequence& pts, const std::vector<std::pair<int, int>>& constraints,
         std::uint64_t max_outputs, bool slow_parent_check) {
        const PointSet ps = to_points(pts);
        EnumerationOptions opts;
        opts.slow_parent_check = slow_parent_check;
        Enumerator en(ps, to_edges(constraints), opts);
        std::vector<std::vector<std::pair<int, int>>> out;
        en.enumerate([&](const Emission& em) {
          out.push_back(from_ids(en.universe(), em.edges));
          return max_outputs == 0 || em.index < max_outputs;
        });
        return out;
      },
      py::arg("points"), py::arg("constraints") = std::vector<std::pair<int, int>>{},
      py::arg("max_outputs") = 0, py::arg("slow_parent_check") = false,
      "All frameworks in search-tree order, each as a sorted list of edges.");

  m.def(
      "brute_frameworks",
      [](const py::sequence& pts, const std::vector<std::pair<int, int>>& constraints) {
        const PointSet ps = to_points(pts);
        const oracle::OracleReport rep = oracle::brute_frameworks(ps, to_edges(constraints));
        if (!rep.diagnostic.empty()) throw ConstraintError(rep.diagnostic);
        std::vector<std::vector<std::pair<int, int>>> out;
        for (const auto& fw : rep.frameworks) {
          std::vector<std::pair<int, int>> f;
          for (const Edge& e : fw) f.emplace_back(e.u, e.v);
          out.push_back(std::move(f));
        }
        return out;
      },
      py::arg("points"), py::arg("constraints") = std::vector<std::pair<int, int>>{},
      "Brute-force oracle enumeration (n <= 9), for cross-checking.");

  m.def(
      "parse_instance",
      [](const std::string& path) {
        const Instance inst = parse_instance_file(path);
        py::dict d;
        std::vector<std::pair<std::string, std::string>> pts;
        for (const Point& p : inst.points.points())
          pts.emplace_back(p.x.get_str(), p.y.get_str());
        std::vector<std::pair<int, int>> cs;
        for (const Edge& e : inst.constraints) cs.emplace_back(e.u, e.v);
        d["points"] = pts;
        d["constraints"] = cs;
        return d;
      },
      py::arg("path"), "Parse and validate an instance file.");
}
