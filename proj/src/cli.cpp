#include "lamanenum/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>

#include "lamanenum/enumeration.hpp"
#include "lamanenum/errors.hpp"
#include "lamanenum/instance.hpp"
#include "lamanenum/oracle.hpp"
#include "lamanenum/svg.hpp"

namespace laman {

namespace {

std::vector<Edge> ids_to_edges(const EdgeUniverse& u, const std::vector<int>& ids) {
  std::vector<Edge> es;
  es.reserve(ids.size());
  for (int e : ids) es.push_back(u.edge(e));
  return es;
}

std::string svg_path(const std::string& dir, std::uint64_t index) {
  char name[32];
  std::snprintf(name, sizeof name, "framework_%06llu.svg",
                static_cast<unsigned long long>(index));
  return dir + "/" + name;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate all F-constrained non-crossing Laman frameworks on a point set",
               "laman_enum"};
  app.set_help_flag("-h,--help", "print usage");

  std::string path;
  bool count_only = false, json = false, meta = false, verify = false;
  bool slow_parent = false, root_only = false;
  std::uint64_t max_outputs = 0;
  std::string svg_dir;
  app.add_option("instance", path, "instance file")->required();
  app.add_flag("--count-only", count_only, "print only the number of frameworks");
  app.add_flag("--json", json, "one JSON object per framework");
  app.add_flag("--meta", meta, "append search-tree metadata to each record");
  app.add_option("--svg-dir", svg_dir, "write one SVG per framework into this directory");
  app.add_flag("--verify", verify, "cross-check against the brute-force oracle (n <= 8)");
  app.add_flag("--slow-parent-check", slow_parent,
               "confirm children by recomputing parents instead of the O(1) conditions");
  app.add_option("--max-outputs", max_outputs, "stop after this many frameworks");
  app.add_flag("--root-only", root_only, "print only the root framework");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  if (verify && max_outputs > 0) {
    err << "error: --verify cannot be combined with --max-outputs\n";
    return kExitParse;
  }
  if (verify && root_only) {
    err << "error: --verify cannot be combined with --root-only\n";
    return kExitParse;
  }

  try {
    const Instance inst = parse_instance_file(path);
    if (const auto rep = assert_generic(inst.points); !rep.cocircular_quads.empty())
      err << "note: " << rep.cocircular_quads.size()
          << " co-circular quadruple(s); incircle ties broken symbolically\n";
    if (verify && inst.points.size() > 8) {
      err << "error: --verify is limited to n <= 8 (oracle guard)\n";
      return kExitParse;
    }
    EnumerationOptions opts;
    opts.slow_parent_check = slow_parent;
    Enumerator en(inst.points, inst.constraints, opts);
    const EdgeUniverse& u = en.universe();

    if (!svg_dir.empty()) std::filesystem::create_directories(svg_dir);
    std::vector<char> fmask(static_cast<size_t>(u.edge_count()), 0);
    for (int e : en.constraint_ids()) fmask[static_cast<size_t>(e)] = 1;

    std::set<std::vector<int>> seen;  // only filled under --verify
    const std::uint64_t limit = root_only ? 1 : max_outputs;

    const std::uint64_t count = en.enumerate([&](const Emission& em) {
      if (verify) seen.insert(em.edges);
      if (!count_only && !verify) {
        const std::vector<Edge> edges = ids_to_edges(u, em.edges);
        std::string rec = json ? format_record_json(em.index, edges)
                               : format_record(em.index, edges);
        if (meta) {
          rec += json ? "" : "  #";
          rec += " depth=" + std::to_string(em.depth);
          if (em.swap) {
            const Edge r = u.edge(em.swap->first), i = u.edge(em.swap->second);
            rec += " swap=(" + std::to_string(r.u) + "," + std::to_string(r.v) + ")->(" +
                   std::to_string(i.u) + "," + std::to_string(i.v) + ")";
          }
        }
        out << rec << "\n" << std::flush;
      }
      if (!svg_dir.empty()) {
        std::ofstream svg(svg_path(svg_dir, em.index));
        write_framework_svg(svg, u, em.edges, fmask, *em.underlying);
      }
      return limit == 0 || em.index < limit;
    });

    if (count_only) out << count << "\n";

    if (verify) {
      const oracle::OracleReport rep = oracle::brute_frameworks(inst.points, inst.constraints);
      if (!rep.diagnostic.empty()) {
        err << "error: oracle rejected constraints: " << rep.diagnostic << "\n";
        return kExitConstraints;
      }
      std::set<std::vector<int>> expected;
      for (const auto& fw : rep.frameworks) {
        std::vector<int> ids;
        ids.reserve(fw.size());
        for (const Edge& e : fw) ids.push_back(u.id(e));
        std::sort(ids.begin(), ids.end());
        expected.insert(std::move(ids));
      }
      if (expected == seen) {
        out << "verify: ok, " << count << " frameworks match the oracle\n";
      } else {
        err << "verify: MISMATCH: enumeration " << seen.size() << " vs oracle "
            << expected.size() << " frameworks\n";
        return kExitVerifyMismatch;
      }
    }
    return kExitOk;
  } catch (const EnumError& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace laman
