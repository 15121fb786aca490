#include "pgv/graphspec.hpp"

#include <fstream>
#include <sstream>

namespace pgv {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(Errc::ParseError, what); }

MonoidDesc parse_monoid(const json& j) {
  MonoidDesc m;
  if (!j.is_object() || !j.contains("kind")) parse_fail("monoid descriptor needs a kind");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "grid") {
    m.kind = MonoidKind::Grid;
    m.rank = j.at("k").get<int>();
  } else if (kind == "free") {
    m.kind = MonoidKind::Free;
    for (const auto& l : j.at("letters")) {
      const std::string s = l.get<std::string>();
      if (s.size() != 1) parse_fail("free-monoid letters must be single characters");
      m.letters += s;
    }
  } else if (kind == "grid-submonoid") {
    m.kind = MonoidKind::GridSubmonoid;
    m.rank = j.at("k").get<int>();
    for (const auto& g : j.at("generators")) m.generators.push_back(g.get<std::vector<int>>());
  } else {
    parse_fail("unknown monoid kind '" + kind + "'");
  }
  return m;
}

}  // namespace

json degree_json(const Degree& d) {
  if (d.kind() == MonoidKind::Free) return d.word();
  return json(d.coords());
}

Degree degree_from_json(const DegreeMonoid& monoid, const json& j) {
  switch (monoid.kind()) {
    case MonoidKind::Free:
      if (!j.is_string()) parse_fail("free-monoid degree must be a string");
      return monoid.make_word(j.get<std::string>());
    case MonoidKind::Grid:
      if (!j.is_array()) parse_fail("grid degree must be an array");
      return monoid.make_grid(j.get<std::vector<int>>());
    case MonoidKind::GridSubmonoid:
      if (!j.is_array()) parse_fail("submonoid degree must be an array");
      return monoid.make_submonoid(j.get<std::vector<int>>());
  }
  parse_fail("unknown monoid kind");
}

json group_element_json(const GroupElement& q) {
  if (q.kind() != MonoidKind::Free) return json(q.coords());
  return q.str();
}

json degree_class_json(const DegreeClass& c) {
  if (c.kind == MonoidKind::Free) {
    json j;
    j["word"] = c.prefix;
    if (!c.period.empty()) j["period"] = c.period;
    return j;
  }
  json j = json::array();
  for (const auto& e : c.grid) {
    if (e.inf)
      j.push_back("inf");
    else
      j.push_back(e.value);
  }
  return j;
}

Degree parse_degree_text(const DegreeMonoid& monoid, const std::string& text) {
  if (monoid.kind() == MonoidKind::Free) return monoid.make_word(text == "e" ? "" : text);
  std::vector<int> coords;
  std::string body = text;
  if (!body.empty() && body.front() == '(') body = body.substr(1, body.size() - 2);
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      coords.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      parse_fail("bad degree component '" + tok + "'");
    }
  }
  return monoid.kind() == MonoidKind::Grid ? monoid.make_grid(coords)
                                           : monoid.make_submonoid(coords);
}

GraphSpecFile parse_graph_spec(const json& j) {
  try {
    GraphSpecFile out;
    if (!j.is_object()) parse_fail("spec must be a JSON object");
    out.monoid = parse_monoid(j.at("monoid"));
    DegreeMonoid monoid(out.monoid);
    if (!j.contains("presentation")) parse_fail("spec needs a presentation");
    const json& p = j.at("presentation");
    const std::string type = p.at("type").get<std::string>();
    if (type == "explicit") {
      ExplicitPresentation e;
      for (const auto& v : p.at("vertices")) e.vertices.push_back(v.get<std::string>());
      if (p.contains("morphisms"))
        for (const auto& m : p.at("morphisms"))
          e.morphisms.push_back({m.at("id").get<std::string>(), m.at("range").get<std::string>(),
                                 m.at("source").get<std::string>(),
                                 degree_from_json(monoid, m.at("degree"))});
      if (p.contains("compositions"))
        for (const auto& c : p.at("compositions")) {
          if (!c.is_array() || c.size() != 3) parse_fail("composition entries are [a,b,c]");
          e.compositions.push_back(
              {c[0].get<std::string>(), c[1].get<std::string>(), c[2].get<std::string>()});
        }
      out.presentation = std::move(e);
    } else if (type == "skeleton") {
      if (out.monoid.kind != MonoidKind::Grid)
        parse_fail("skeleton presentations need a grid monoid");
      SkeletonPresentation sk;
      sk.rank = p.contains("k") ? p.at("k").get<int>() : out.monoid.rank;
      if (sk.rank != out.monoid.rank) parse_fail("skeleton rank disagrees with the monoid");
      for (const auto& v : p.at("vertices")) sk.vertices.push_back(v.get<std::string>());
      for (const auto& e : p.at("edges"))
        sk.edges.push_back({e.at("id").get<std::string>(), e.at("color").get<int>(),
                            e.at("range").get<std::string>(), e.at("source").get<std::string>()});
      if (p.contains("squares"))
        for (const auto& s : p.at("squares")) {
          SkeletonSquare sq;
          sq.first = {s.at("first")[0].get<std::string>(), s.at("first")[1].get<std::string>()};
          sq.second = {s.at("second")[0].get<std::string>(), s.at("second")[1].get<std::string>()};
          sk.squares.push_back(sq);
        }
      out.presentation = std::move(sk);
    } else if (type == "omega") {
      out.presentation = OmegaPresentation{degree_from_json(monoid, p.at("m"))};
    } else if (type == "omega-limit") {
      OmegaLimitPresentation ol;
      for (const auto& h : p.at("head")) ol.sequence.head.push_back(degree_from_json(monoid, h));
      const std::string tail =
          p.contains("tail") ? p.at("tail").get<std::string>() : std::string("constant");
      if (tail == "constant") {
        ol.sequence.tail = IncreasingSequence::Tail::Constant;
      } else if (tail == "step") {
        ol.sequence.tail = IncreasingSequence::Tail::Step;
        ol.sequence.step = degree_from_json(monoid, p.at("step"));
      } else {
        parse_fail("unknown tail rule '" + tail + "'");
      }
      monoid.validate_sequence(ol.sequence);
      out.presentation = std::move(ol);
    } else {
      parse_fail("unknown presentation type '" + type + "'");
    }
    if (j.contains("window")) out.window = degree_from_json(monoid, j.at("window"));
    if (j.contains("subsets"))
      for (const auto& [name, ids] : j.at("subsets").items()) {
        std::vector<std::string> v;
        for (const auto& id : ids) v.push_back(id.get<std::string>());
        out.subsets[name] = std::move(v);
      }
    return out;
  } catch (const json::exception& e) {
    parse_fail(std::string("malformed spec: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    parse_fail(std::string("bad spec value: ") + e.what());
  }
}

GraphSpecFile load_graph_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return parse_graph_spec(j);
}

PGraph materialize(const GraphSpecFile& spec, const std::optional<Degree>& window_override,
                   SkeletonMode mode) {
  DegreeMonoid monoid(spec.monoid);
  const std::optional<Degree> window = window_override ? window_override : spec.window;
  if (std::holds_alternative<ExplicitPresentation>(spec.presentation)) {
    const auto& e = std::get<ExplicitPresentation>(spec.presentation);
    PGraphBuilder b(monoid);
    if (window) b.set_window(*window);
    for (const auto& v : e.vertices) b.add_vertex(v);
    for (const auto& m : e.morphisms) b.add_morphism(m.id, m.range, m.source, m.degree);
    for (const auto& [x, y, z] : e.compositions) b.set_composition(x, y, z);
    return b.finalize();
  }
  if (std::holds_alternative<SkeletonPresentation>(spec.presentation)) {
    if (!window) fail(Errc::ParseError, "skeleton presentations need a window");
    return from_skeleton(std::get<SkeletonPresentation>(spec.presentation), *window, mode);
  }
  if (std::holds_alternative<OmegaPresentation>(spec.presentation))
    return build_omega(monoid, std::get<OmegaPresentation>(spec.presentation).m);
  const auto& ol = std::get<OmegaLimitPresentation>(spec.presentation);
  if (!window) fail(Errc::ParseError, "omega-limit presentations need a window");
  return build_omega_limit(monoid, ol.sequence, *window);
}

std::vector<MorphismId> resolve_subset(const PGraph& g, const GraphSpecFile& spec,
                                       const std::string& name) {
  auto it = spec.subsets.find(name);
  if (it == spec.subsets.end()) fail(Errc::UnknownId, "no subset named '" + name + "'");
  std::vector<MorphismId> out;
  for (const auto& id : it->second) out.push_back(g.require(id));
  return out;
}

json monoid_json(const MonoidDesc& desc) {
  json j;
  switch (desc.kind) {
    case MonoidKind::Grid:
      j["kind"] = "grid";
      j["k"] = desc.rank;
      break;
    case MonoidKind::Free: {
      j["kind"] = "free";
      json letters = json::array();
      for (char c : desc.letters) letters.push_back(std::string(1, c));
      j["letters"] = letters;
      break;
    }
    case MonoidKind::GridSubmonoid:
      j["kind"] = "grid-submonoid";
      j["k"] = desc.rank;
      j["generators"] = desc.generators;
      break;
  }
  return j;
}

// The export is itself a graph-spec file (explicit presentation), so every
// materialized graph round-trips through the loader. Identity compositions
// are implicit; overridden ones are kept so corruptions survive the trip.
json graph_json(const PGraph& g) {
  json j;
  j["monoid"] = monoid_json(g.monoid().desc());
  json p;
  p["type"] = "explicit";
  p["vertices"] = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) p["vertices"].push_back(g.vertex_name(v));
  p["morphisms"] = json::array();
  for (MorphismId i = 0; i < g.size(); ++i) {
    if (g.is_unit(i)) continue;
    const Morphism& m = g.at(i);
    json mj;
    mj["id"] = m.name;
    mj["range"] = g.vertex_name(m.range);
    mj["source"] = g.vertex_name(m.source);
    mj["degree"] = degree_json(m.degree);
    p["morphisms"].push_back(mj);
  }
  p["compositions"] = json::array();
  for (const auto& [ab, c] : g.composition_table()) {
    const auto [a, b] = ab;
    const bool auto_left = g.is_unit(a) && g.at(a).range == g.at(b).range && c == b;
    const bool auto_right = g.is_unit(b) && g.at(b).range == g.at(a).source && c == a;
    if (auto_left || auto_right) continue;
    p["compositions"].push_back(json::array({g.at(a).name, g.at(b).name, g.at(c).name}));
  }
  j["presentation"] = p;
  if (g.window()) j["window"] = degree_json(*g.window());
  return j;
}

std::string graph_dot(const PGraph& g) {
  std::ostringstream os;
  os << "digraph pgraph {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    os << "  \"" << g.vertex_name(v) << "\" [shape=circle];\n";
  for (MorphismId i = 0; i < g.size(); ++i) {
    if (g.is_unit(i)) continue;
    const Morphism& m = g.at(i);
    os << "  \"" << g.vertex_name(m.source) << "\" -> \"" << g.vertex_name(m.range)
       << "\" [label=\"" << m.name << " : " << m.degree.str() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

json filter_json(const PGraph& g, const Filter& x) {
  json j = json::array();
  for (MorphismId id : x.elems) j.push_back(g.at(id).name);
  return j;
}

json cylinder_json(const PGraph& g, const CylinderSet& c) {
  json j;
  j["K1"] = json::array();
  for (MorphismId id : c.k1) j["K1"].push_back(g.at(id).name);
  j["K2"] = json::array();
  for (MorphismId id : c.k2) j["K2"].push_back(g.at(id).name);
  return j;
}

CylinderSet cylinder_from_json(const PGraph& g, const json& j) {
  try {
    CylinderSet c;
    if (j.contains("K1"))
      for (const auto& id : j.at("K1")) c.k1.push_back(g.require(id.get<std::string>()));
    if (j.contains("K2"))
      for (const auto& id : j.at("K2")) c.k2.push_back(g.require(id.get<std::string>()));
    return c;
  } catch (const json::exception& e) {
    parse_fail(std::string("malformed cylinder: ") + e.what());
  }
}

json filter_space_json(const FilterSpace& space) {
  json j = json::array();
  for (std::size_t i = 0; i < space.size(); ++i)
    j.push_back(filter_json(space.graph(), space.at(i)));
  return j;
}

json path_morphism_json(const PathMorphism& x) {
  json j;
  j["class"] = degree_class_json(x.domain_class());
  json vals;
  for (const auto& [q, id] : x.values()) vals[q.str()] = x.graph().at(id).name;
  j["values"] = vals;
  return j;
}

json morphism_space_json(const MorphismSpace& space) {
  json j = json::array();
  for (std::size_t i = 0; i < space.size(); ++i) j.push_back(path_morphism_json(space.at(i)));
  return j;
}

json groupoid_json(const Groupoid& gpd) {
  json j;
  j["bound"] = degree_json(gpd.bound());
  j["points"] = json::array();
  for (std::size_t pt = 0; pt < gpd.space().size(); ++pt)
    j["points"].push_back(gpd.space().label(pt));
  j["elements"] = json::array();
  for (std::size_t i = 0; i < gpd.size(); ++i) {
    const GroupoidElement& g = gpd.at(i);
    json e;
    e["x"] = g.x;
    e["q"] = group_element_json(g.q);
    e["y"] = g.y;
    e["witness"] = json::array({degree_json(g.witness.first), degree_json(g.witness.second)});
    j["elements"].push_back(e);
  }
  return j;
}

std::string path_space_dot(const FilterSpace& space) {
  const PGraph& g = space.graph();
  const auto& monoid = g.monoid();
  std::ostringstream os;
  os << "digraph pathspace {\n";
  for (std::size_t i = 0; i < space.size(); ++i)
    os << "  n" << i << " [label=\"" << space.at(i).str(g) << "\"];\n";
  // Arrows for the one-step shifts.
  std::vector<Degree> steps;
  if (monoid.kind() == MonoidKind::Free) {
    for (char c : monoid.desc().letters) steps.push_back(monoid.make_word(std::string(1, c)));
  } else if (monoid.kind() == MonoidKind::Grid) {
    for (int i = 0; i < monoid.desc().rank; ++i) {
      std::vector<int> v(monoid.desc().rank, 0);
      v[i] = 1;
      steps.push_back(monoid.make_grid(v));
    }
  }
  for (std::size_t i = 0; i < space.size(); ++i)
    for (const Degree& m : steps) {
      const auto j = space.act_index(i, m);
      if (j) os << "  n" << i << " -> n" << *j << " [label=\"" << m.str() << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

json report_json(const Report& rep) {
  json j;
  j["ok"] = rep.ok();
  j["violations"] = rep.violations;
  j["flags"] = rep.flags;
  return j;
}

}  // namespace pgv
