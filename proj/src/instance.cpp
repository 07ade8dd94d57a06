#include "lamanenum/instance.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "lamanenum/errors.hpp"
#include "lamanenum/rigidity.hpp"

namespace laman {

namespace {

std::vector<std::string> tokenize(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

int parse_int(const std::string& tok, const char* what) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string("expected ") + what + ", got '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError(std::string("expected ") + what + ", got '" + tok + "'");
  return v;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  const std::vector<std::string> tokens = tokenize(in);
  size_t pos = 0;
  auto next = [&](const char* what) -> const std::string& {
    if (pos >= tokens.size()) throw ParseError(std::string("unexpected end of file, expected ") + what);
    return tokens[pos++];
  };

  const int n = parse_int(next("point count"), "point count");
  if (n < 3) throw ParseError("need at least 3 points");
  std::vector<std::pair<std::string, std::string>> coords;
  coords.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::string x = next("x coordinate");
    const std::string y = next("y coordinate");
    coords.emplace_back(x, y);
  }
  const int m = parse_int(next("constraint count"), "constraint count");
  if (m < 0) throw ParseError("negative constraint count");
  std::vector<Edge> constraints;
  constraints.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    const int u = parse_int(next("constraint endpoint"), "constraint endpoint");
    const int v = parse_int(next("constraint endpoint"), "constraint endpoint");
    if (u < 1 || u > n || v < 1 || v > n || u == v)
      throw ConstraintError("constraint endpoints out of range: " + std::to_string(u) + " " +
                            std::to_string(v));
    constraints.emplace_back(u, v);
  }
  if (pos != tokens.size()) throw ParseError("trailing tokens after constraints");

  Instance inst{PointSet::parse(coords), std::move(constraints)};

  const GenericityReport rep = assert_generic(inst.points);
  if (!rep.ok) {
    std::string msg = "collinear triples:";
    for (const auto& t : rep.collinear_triples)
      msg += " (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
             ")";
    throw GenericityError(msg);
  }

  for (size_t i = 0; i < inst.constraints.size(); ++i) {
    for (size_t j = i + 1; j < inst.constraints.size(); ++j) {
      if (inst.constraints[i] == inst.constraints[j]) throw ConstraintError("duplicate constraint");
      const Edge& a = inst.constraints[i];
      const Edge& b = inst.constraints[j];
      if (properly_intersect(inst.points[a.u], inst.points[a.v], inst.points[b.u],
                             inst.points[b.v]))
        throw ConstraintError("constraints (" + std::to_string(a.u) + "," + std::to_string(a.v) +
                              ") and (" + std::to_string(b.u) + "," + std::to_string(b.v) +
                              ") cross");
    }
  }
  if (!is_independent(inst.constraints, n))
    throw ConstraintError("constraints dependent in the rigidity matroid");
  return inst;
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_instance(in);
}

std::string format_record(std::uint64_t index, const std::vector<Edge>& edges) {
  std::string s = "L " + std::to_string(index) + ": ";
  for (const Edge& e : edges) s += "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
  return s;
}

std::string format_record_json(std::uint64_t index, const std::vector<Edge>& edges) {
  std::string s = "{\"index\":" + std::to_string(index) + ",\"edges\":[";
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ",";
    s += "[" + std::to_string(edges[i].u) + "," + std::to_string(edges[i].v) + "]";
  }
  s += "]}";
  return s;
}

}  // namespace laman
