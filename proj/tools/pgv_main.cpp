#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "pgv/filters.hpp"
#include "pgv/graphspec.hpp"
#include "pgv/groupoid.hpp"
#include "pgv/morphisms.hpp"
#include "pgv/pgraph.hpp"

using namespace pgv;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;   // a checked property fails
constexpr int kExitBadInput = 2;  // unreadable or malformed input

struct Loaded {
  GraphSpecFile spec;
  PGraph graph;
};

Loaded load(const std::string& path, const std::string& window_text,
            SkeletonMode mode = SkeletonMode::Strict) {
  GraphSpecFile spec = load_graph_spec(path);
  DegreeMonoid monoid(spec.monoid);
  std::optional<Degree> window;
  if (!window_text.empty()) window = parse_degree_text(monoid, window_text);
  PGraph graph = materialize(spec, window, mode);
  return {std::move(spec), std::move(graph)};
}

Degree default_bound(const PGraph& g) {
  if (g.window()) return *g.window();
  if (g.monoid().kind() == MonoidKind::Free) {
    std::size_t len = 0;
    for (const Degree& d : g.degree_set()) len = std::max(len, d.word().size());
    return g.monoid().make_word(std::string(len, g.monoid().desc().letters[0]));
  }
  std::vector<int> coords(g.monoid().desc().rank, 0);
  for (const Degree& d : g.degree_set())
    for (std::size_t i = 0; i < coords.size(); ++i)
      coords[i] = std::max(coords[i], d.coords()[i]);
  return g.monoid().make_grid(coords);
}

void print_report(const std::string& title, const Report& rep, bool as_json) {
  if (as_json) {
    json j = report_json(rep);
    j["check"] = title;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << title << ": " << (rep.ok() ? "pass" : "FAIL") << "\n";
  for (const auto& v : rep.violations) std::cout << "  violation: " << v << "\n";
  for (const auto& f : rep.flags) std::cout << "  note: " << f << "\n";
}

int cmd_validate(const std::string& path, const std::string& window, bool as_json) {
  // Permissive materialization: broken square data still yields a category
  // whose defects the validators can exhibit.
  const Loaded l = load(path, window, SkeletonMode::Permissive);
  const Report cat = validate_category(l.graph);
  Report ufp;
  if (cat.ok()) ufp = validate_ufp(l.graph);
  const AlignmentReport align = is_finitely_aligned(l.graph);
  Report subsets;
  for (const auto& [name, ids] : l.spec.subsets) {
    const auto e = resolve_subset(l.graph, l.spec, name);
    subsets.flag("subset " + name + (is_exhaustive(l.graph, e) ? " is" : " is not") +
                 " exhaustive");
  }
  if (as_json) {
    json j;
    j["category"] = report_json(cat);
    j["ufp"] = report_json(cat.ok() ? ufp : Report{{"skipped: category axioms fail"}, {}});
    j["finite_alignment"] = report_json(align.report);
    j["subsets"] = report_json(subsets);
    j["morphisms"] = l.graph.size();
    j["vertices"] = l.graph.vertex_count();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "graph: " << l.graph.size() << " morphisms over "
              << l.graph.vertex_count() << " vertices ("
              << l.graph.monoid().desc().str() << ")\n";
    print_report("category axioms", cat, false);
    if (cat.ok()) print_report("unique factorization", ufp, false);
    print_report("finite alignment", align.report, false);
    for (const auto& f : subsets.flags) std::cout << "  " << f << "\n";
  }
  return cat.ok() && ufp.ok() && align.report.ok() ? kExitOk : kExitFailure;
}

int cmd_paths(const std::string& path, const std::string& window, const std::string& space,
              bool boundary, const std::string& depth_text, bool as_json, bool as_dot) {
  const Loaded l = load(path, window);
  const PGraph& g = l.graph;
  const FilterSpace fs = FilterSpace::enumerate(g);
  const Degree depth =
      depth_text.empty() ? default_bound(g) : parse_degree_text(g.monoid(), depth_text);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (!boundary || is_boundary(g, fs.at(i), depth).value) keep.push_back(i);
  if (as_dot) {
    std::cout << path_space_dot(fs);
    return kExitOk;
  }
  if (boundary && !as_json)
    std::cout << "boundary restriction with depth bound " << depth.str() << "\n";
  if (space == "morphisms") {
    const MorphismSpace ms = MorphismSpace::from_filters(fs);
    if (as_json) {
      json j = json::array();
      for (std::size_t i : keep) j.push_back(path_morphism_json(ms.at(i)));
      std::cout << j.dump(2) << "\n";
    } else {
      for (std::size_t i : keep) std::cout << ms.at(i).str() << "\n";
    }
  } else {
    if (as_json) {
      json j = json::array();
      for (std::size_t i : keep) j.push_back(filter_json(g, fs.at(i)));
      std::cout << j.dump(2) << "\n";
    } else {
      for (std::size_t i : keep) std::cout << fs.at(i).str(g) << "\n";
    }
  }
  return kExitOk;
}

json groupoid_table_json(const Groupoid& gpd) {
  json t = json::array();
  for (std::size_t i = 0; i < gpd.size(); ++i)
    for (std::size_t j = 0; j < gpd.size(); ++j) {
      if (gpd.at(i).y != gpd.at(j).x) continue;
      try {
        t.push_back(json::array({i, j, gpd.compose(i, j)}));
      } catch (const Error&) {
        t.push_back(json::array({i, j, nullptr}));  // witness outside the bound
      }
    }
  return t;
}

int cmd_groupoid(const std::string& path, const std::string& window, const std::string& space,
                 const std::string& bound_text, const std::string& reduce, bool as_json,
                 bool with_table) {
  const Loaded l = load(path, window);
  const PGraph& g = l.graph;
  const FilterSpace fs = FilterSpace::enumerate(g);
  const MorphismSpace ms = MorphismSpace::from_filters(fs);
  FilterActionSpace fa(fs);
  MorphismActionSpace ma(ms);
  const ActionSpace& sp = space == "morphisms" ? static_cast<const ActionSpace&>(ma)
                                               : static_cast<const ActionSpace&>(fa);
  const Degree bound =
      bound_text.empty() ? default_bound(g) : parse_degree_text(g.monoid(), bound_text);
  Groupoid gpd = Groupoid::enumerate(sp, bound);
  if (reduce == "boundary") {
    std::vector<std::size_t> u;
    for (std::size_t i = 0; i < fs.size(); ++i)
      if (is_boundary(g, fs.at(i), bound).value) u.push_back(i);
    gpd = reduction(gpd, u);
  }
  if (as_json) {
    json j = groupoid_json(gpd);
    if (with_table) j["composition"] = groupoid_table_json(gpd);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << gpd.size() << " elements at bound " << bound.str() << "\n";
    for (std::size_t i = 0; i < gpd.size(); ++i) {
      const auto& el = gpd.at(i);
      std::cout << "(" << sp.label(el.x) << ", " << el.q.str() << ", " << sp.label(el.y)
                << ")  witness (" << el.witness.first.str() << "," << el.witness.second.str()
                << ")\n";
    }
  }
  return kExitOk;
}

int cmd_conjugacy(const std::string& path, const std::string& window, bool as_json) {
  const Loaded l = load(path, window);
  const FilterSpace fs = FilterSpace::enumerate(l.graph);
  const MorphismSpace ms = MorphismSpace::from_filters(fs);
  Report rep = conjugacy_check(fs, ms);
  rep.merge(action_axioms_check(fs));
  rep.merge(morphism_action_axioms_check(ms));
  print_report("conjugacy (C1, C2, C3) and action axioms", rep, as_json);
  return rep.ok() ? kExitOk : kExitFailure;
}

int cmd_iso(const std::string& path, const std::string& window, const std::string& bound_text,
            bool as_json) {
  const Loaded l = load(path, window);
  const PGraph& g = l.graph;
  const FilterSpace fs = FilterSpace::enumerate(g);
  const MorphismSpace ms = MorphismSpace::from_filters(fs);
  const Degree bound =
      bound_text.empty() ? default_bound(g) : parse_degree_text(g.monoid(), bound_text);
  Report rep = psi_h_suite(fs, ms, bound, bound);
  if (g.monoid().kind() == MonoidKind::Grid) {
    MorphismActionSpace ma(ms);
    rep.merge(tau_equality_check(Groupoid::enumerate(ma, bound), bound));
  }
  print_report("psi_h isomorphism, basis images, boundary reduction, tau bases", rep, as_json);
  return rep.ok() ? kExitOk : kExitFailure;
}

int cmd_export(const std::string& path, const std::string& window, bool as_dot) {
  const Loaded l = load(path, window);
  if (as_dot)
    std::cout << graph_dot(l.graph);
  else
    std::cout << graph_json(l.graph).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finitely aligned P-graphs: path spaces, shift actions and groupoids"};
  app.require_subcommand(1);

  std::string path, window, depth, bound, space = "filters", reduce;
  bool as_json = false, as_dot = false, boundary = false, with_table = false;

  auto add_common = [&](CLI::App* sub, bool with_json = true) {
    sub->add_option("file", path, "graph spec (JSON)")->required();
    sub->add_option("--window", window, "window bound override, e.g. 2,2 or a word");
    if (with_json) sub->add_flag("--json", as_json, "machine readable output");
  };

  auto* validate = app.add_subcommand("validate", "category axioms, UFP, finite alignment");
  add_common(validate);

  auto* paths = app.add_subcommand("paths", "list the path space");
  add_common(paths);
  paths->add_option("--space", space, "filters | morphisms")
      ->check(CLI::IsMember({"filters", "morphisms"}));
  paths->add_flag("--boundary", boundary, "restrict to boundary paths");
  paths->add_option("--depth-bound", depth, "exhaustive-set search bound");
  paths->add_flag("--dot", as_dot, "DOT graph of the space with unit shifts");

  auto* groupoid = app.add_subcommand("groupoid", "enumerate the semidirect product groupoid");
  add_common(groupoid);
  groupoid->add_option("--space", space, "filters | morphisms")
      ->check(CLI::IsMember({"filters", "morphisms"}));
  groupoid->add_option("--bound", bound, "witness degree bound");
  groupoid->add_option("--reduce", reduce, "boundary")->check(CLI::IsMember({"boundary"}));
  groupoid->add_flag("--table", with_table, "include the composition table in JSON output");

  auto* conj = app.add_subcommand("conjugacy", "verify C1-C3 and the action axioms");
  add_common(conj);

  auto* iso = app.add_subcommand("iso", "verify the psi_h groupoid isomorphism and bases");
  add_common(iso);
  iso->add_option("--bound", bound, "witness degree bound");

  auto* exp = app.add_subcommand("export", "emit the materialized graph");
  add_common(exp, false);
  exp->add_flag("--dot", as_dot, "DOT output instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (validate->parsed()) return cmd_validate(path, window, as_json);
    if (paths->parsed()) return cmd_paths(path, window, space, boundary, depth, as_json, as_dot);
    if (groupoid->parsed())
      return cmd_groupoid(path, window, space, bound, reduce, as_json, with_table);
    if (conj->parsed()) return cmd_conjugacy(path, window, as_json);
    if (iso->parsed()) return cmd_iso(path, window, bound, as_json);
    if (exp->parsed()) return cmd_export(path, window, as_dot);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::ParseError:
      case Errc::UnknownId:
      case Errc::DanglingEdge:
        return kExitBadInput;
      case Errc::CubeCondition:
        return kExitFailure;
      default:
        return kExitBadInput;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
