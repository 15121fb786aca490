#include "pgv/pgraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace pgv {

std::optional<VertexId> PGraph::find_vertex(const std::string& name) const {
  auto it = vertex_by_name_.find(name);
  if (it == vertex_by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorphismId> PGraph::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

MorphismId PGraph::require(const std::string& name) const {
  auto id = find(name);
  if (!id) fail(Errc::UnknownId, "no morphism named '" + name + "'");
  return *id;
}

bool PGraph::is_unit(MorphismId id) const {
  const Morphism& m = morphisms_[id];
  return m.degree.is_identity() && units_[m.range] == id;
}

std::optional<MorphismId> PGraph::compose(MorphismId a, MorphismId b) const {
  auto it = comp_.find({a, b});
  if (it == comp_.end()) return std::nullopt;
  return it->second;
}

bool PGraph::divides(MorphismId mu, MorphismId lam) const {
  return left_q_.count({mu, lam}) > 0;
}

std::optional<MorphismId> PGraph::left_quotient(MorphismId mu, MorphismId lam) const {
  auto it = left_q_.find({mu, lam});
  if (it == left_q_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<MorphismId, MorphismId>> PGraph::factor(MorphismId lam,
                                                                const Degree& p) const {
  auto it = factor_.find({lam, p});
  if (it == factor_.end()) return std::nullopt;
  return it->second;
}

std::vector<MorphismId> PGraph::with_degree(const Degree& d) const {
  std::vector<MorphismId> out;
  for (MorphismId i = 0; i < morphisms_.size(); ++i)
    if (morphisms_[i].degree == d) out.push_back(i);
  return out;
}

std::vector<MorphismId> PGraph::at_vertex_with_degree(VertexId v, const Degree& d) const {
  std::vector<MorphismId> out;
  for (MorphismId i = 0; i < morphisms_.size(); ++i)
    if (morphisms_[i].range == v && morphisms_[i].degree == d) out.push_back(i);
  return out;
}

bool PGraph::degree_in_window(const Degree& d) const {
  if (!window_) return true;
  return monoid_.leq(d, *window_);
}

void PGraphBuilder::add_vertex(const std::string& name) { vertices_.push_back(name); }

void PGraphBuilder::add_morphism(const std::string& name, const std::string& range,
                                 const std::string& source, Degree degree) {
  morphisms_.push_back({name, range, source, std::move(degree)});
}

void PGraphBuilder::set_composition(const std::string& a, const std::string& b,
                                    const std::string& c) {
  compositions_.push_back({a, b, c});
}

PGraph PGraphBuilder::finalize() const {
  PGraph g(monoid_);
  g.window_ = window_;

  g.vertices_ = vertices_;
  std::sort(g.vertices_.begin(), g.vertices_.end());
  if (std::adjacent_find(g.vertices_.begin(), g.vertices_.end()) != g.vertices_.end())
    fail(Errc::Precondition, "duplicate vertex name");
  for (VertexId v = 0; v < g.vertices_.size(); ++v) g.vertex_by_name_[g.vertices_[v]] = v;

  // Units share the vertex name; then the declared morphisms.
  struct Raw {
    std::string name;
    VertexId range, source;
    Degree degree;
  };
  std::vector<Raw> raws;
  for (VertexId v = 0; v < g.vertices_.size(); ++v)
    raws.push_back({g.vertices_[v], v, v, monoid_.identity()});
  for (const auto& pm : morphisms_) {
    auto r = g.find_vertex(pm.range);
    auto s = g.find_vertex(pm.source);
    if (!r || !s)
      fail(Errc::UnknownId, "morphism '" + pm.name + "' references an unknown vertex");
    if (!monoid_.owns(pm.degree))
      fail(Errc::TagMismatch, "morphism '" + pm.name + "' has a foreign degree");
    raws.push_back({pm.name, *r, *s, pm.degree});
  }
  std::sort(raws.begin(), raws.end(), [](const Raw& x, const Raw& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    return x.name < y.name;
  });
  for (const auto& r : raws) {
    if (g.by_name_.count(r.name)) fail(Errc::Precondition, "duplicate morphism name " + r.name);
    g.by_name_[r.name] = static_cast<MorphismId>(g.morphisms_.size());
    g.morphisms_.push_back({r.name, r.range, r.source, r.degree});
  }
  g.units_.resize(g.vertices_.size());
  for (VertexId v = 0; v < g.vertices_.size(); ++v) g.units_[v] = g.by_name_.at(g.vertices_[v]);

  // Identity compositions first, explicit entries second so corruption
  // tests can override them.
  for (MorphismId i = 0; i < g.morphisms_.size(); ++i) {
    g.comp_[{g.units_[g.morphisms_[i].range], i}] = i;
    g.comp_[{i, g.units_[g.morphisms_[i].source]}] = i;
  }
  for (const auto& [a, b, c] : compositions_)
    g.comp_[{g.require(a), g.require(b)}] = g.require(c);

  // Derived division structure.
  g.divisors_.resize(g.morphisms_.size());
  g.cones_.resize(g.morphisms_.size());
  for (const auto& [ab, c] : g.comp_) {
    const auto [a, b] = ab;
    if (!g.left_q_.count({a, c})) g.left_q_[{a, c}] = b;
    g.divisors_[c].push_back(a);
    g.cones_[a].push_back(c);
    auto key = std::make_pair(c, g.morphisms_[a].degree);
    if (!g.factor_.count(key)) g.factor_[key] = {a, b};
  }
  for (auto& d : g.divisors_) {
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
  }
  for (auto& c : g.cones_) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  std::set<Degree> degs;
  for (const auto& m : g.morphisms_) degs.insert(m.degree);
  g.degree_set_.assign(degs.begin(), degs.end());
  return g;
}

namespace {

PGraph omega_impl(const DegreeMonoid& monoid, const Degree& m,
                  const std::optional<Degree>& window_mark) {
  PGraphBuilder b(monoid);
  if (window_mark) b.set_window(*window_mark);
  const std::vector<Degree> degrees = monoid.degrees_below(m);
  for (const auto& q : degrees) b.add_vertex(q.str());
  auto pair_name = [](const Degree& p, const Degree& q) {
    return "(" + p.str() + "," + q.str() + ")";
  };
  for (const auto& p : degrees)
    for (const auto& q : degrees) {
      if (p == q || !monoid.leq(p, q)) continue;
      b.add_morphism(pair_name(p, q), p.str(), q.str(), *monoid.left_divide(p, q));
    }
  auto name_of = [&](const Degree& p, const Degree& q) {
    return p == q ? p.str() : pair_name(p, q);
  };
  for (const auto& p : degrees)
    for (const auto& q : degrees) {
      if (!monoid.leq(p, q)) continue;
      for (const auto& r : degrees) {
        if (!monoid.leq(q, r)) continue;
        if (p == q || q == r) continue;  // identity compositions are implicit
        b.set_composition(name_of(p, q), name_of(q, r), name_of(p, r));
      }
    }
  return b.finalize();
}

}  // namespace

PGraph build_omega(const DegreeMonoid& monoid, const Degree& m) {
  return omega_impl(monoid, m, std::nullopt);
}

PGraph build_omega_limit(const DegreeMonoid& monoid, const IncreasingSequence& s,
                         const Degree& window) {
  const DegreeClass c = monoid.degree_class(s);
  const Degree effective = monoid.class_truncate(c, window);
  // When the window truncates the limit, mark the result as a window of the
  // infinite prototype; otherwise the whole direct limit was materialized.
  const bool truncated = !c.is_finite() || !monoid.leq(c.finite_degree(), effective);
  return omega_impl(monoid, effective,
                    truncated ? std::optional<Degree>(effective) : std::nullopt);
}

namespace {

struct SkeletonIndex {
  const SkeletonPresentation* sk;
  DegreeMonoid monoid;
  std::map<std::string, int> edge_by_id;
  std::map<std::string, int> vertex_by_name;
  // (a, b) -> (c, d) meaning the path a.b equals c.d with colors swapped.
  std::map<std::pair<int, int>, std::pair<int, int>> swap;
  // All rewrites, both directions, possibly multivalued (permissive mode).
  std::multimap<std::pair<int, int>, std::pair<int, int>> rewrites;

  int color(int e) const { return sk->edges[e].color - 1; }  // 0-based
  int range_of(int e) const { return vertex_by_name.at(sk->edges[e].range); }
  int source_of(int e) const { return vertex_by_name.at(sk->edges[e].source); }
};

SkeletonIndex index_skeleton(const SkeletonPresentation& sk) {
  SkeletonIndex ix{&sk, DegreeMonoid({MonoidKind::Grid, sk.rank, "", {}}), {}, {}, {}, {}};
  if (sk.rank < 1) fail(Errc::Precondition, "skeleton rank must be >= 1");
  for (std::size_t i = 0; i < sk.vertices.size(); ++i) {
    if (ix.vertex_by_name.count(sk.vertices[i]))
      fail(Errc::Precondition, "duplicate vertex " + sk.vertices[i]);
    ix.vertex_by_name[sk.vertices[i]] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < sk.edges.size(); ++i) {
    const auto& e = sk.edges[i];
    if (ix.edge_by_id.count(e.id)) fail(Errc::Precondition, "duplicate edge id " + e.id);
    if (e.color < 1 || e.color > sk.rank)
      fail(Errc::Precondition, "edge " + e.id + " has color outside 1.." + std::to_string(sk.rank));
    if (!ix.vertex_by_name.count(e.range) || !ix.vertex_by_name.count(e.source))
      fail(Errc::DanglingEdge, "edge " + e.id + " has a missing endpoint");
    ix.edge_by_id[e.id] = static_cast<int>(i);
  }
  auto edge = [&](const std::string& id) {
    auto it = ix.edge_by_id.find(id);
    if (it == ix.edge_by_id.end()) fail(Errc::UnknownId, "square references unknown edge " + id);
    return it->second;
  };
  for (const auto& sq : sk.squares) {
    int a = edge(sq.first[0]), b = edge(sq.first[1]);
    int c = edge(sq.second[0]), d = edge(sq.second[1]);
    if (ix.color(a) == ix.color(b))
      fail(Errc::Precondition, "square path " + sk.edges[a].id + "." + sk.edges[b].id +
                                   " is not bicolored");
    if (ix.color(c) != ix.color(b) || ix.color(d) != ix.color(a))
      fail(Errc::Precondition, "square sides do not swap colors");
    if (ix.source_of(a) != ix.range_of(b) || ix.source_of(c) != ix.range_of(d))
      fail(Errc::Precondition, "square sides are not composable paths");
    if (ix.range_of(a) != ix.range_of(c) || ix.source_of(b) != ix.source_of(d))
      fail(Errc::Precondition, "square sides have different endpoints");
    ix.rewrites.insert({{a, b}, {c, d}});
    ix.rewrites.insert({{c, d}, {a, b}});
    ix.swap.insert({{a, b}, {c, d}});
    ix.swap.insert({{c, d}, {a, b}});
  }
  return ix;
}

// Completeness of the square data: every composable bicolored pair occurs in
// exactly one square.
void check_square_completeness(const SkeletonIndex& ix) {
  const auto& sk = *ix.sk;
  std::map<std::pair<int, int>, int> seen;
  for (const auto& sq : sk.squares) {
    seen[{ix.edge_by_id.at(sq.first[0]), ix.edge_by_id.at(sq.first[1])}] += 1;
    seen[{ix.edge_by_id.at(sq.second[0]), ix.edge_by_id.at(sq.second[1])}] += 1;
  }
  for (std::size_t a = 0; a < sk.edges.size(); ++a)
    for (std::size_t b = 0; b < sk.edges.size(); ++b) {
      if (ix.color(a) == ix.color(b)) continue;
      if (ix.source_of(static_cast<int>(a)) != ix.range_of(static_cast<int>(b))) continue;
      const int n = seen.count({static_cast<int>(a), static_cast<int>(b)})
                        ? seen.at({static_cast<int>(a), static_cast<int>(b)})
                        : 0;
      if (n != 1)
        fail(Errc::Precondition, "bicolored pair " + sk.edges[a].id + "." + sk.edges[b].id +
                                     " appears in " + std::to_string(n) + " squares (want 1)");
    }
}

// Insert edge g in front of a color-sorted word, commuting it right past
// lower colors with the square bijection.
std::vector<int> insert_front(const SkeletonIndex& ix, int g, const std::vector<int>& w) {
  std::vector<int> out;
  std::size_t i = 0;
  int cur = g;
  while (i < w.size() && ix.color(w[i]) < ix.color(cur)) {
    auto it = ix.swap.find({cur, w[i]});
    if (it == ix.swap.end())
      fail(Errc::Precondition, "missing square for pair " + ix.sk->edges[cur].id + "." +
                                   ix.sk->edges[w[i]].id);
    out.push_back(it->second.first);
    cur = it->second.second;
    ++i;
  }
  out.push_back(cur);
  out.insert(out.end(), w.begin() + i, w.end());
  return out;
}

std::vector<int> normalize_word(const SkeletonIndex& ix, const std::vector<int>& w) {
  std::vector<int> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out = out.empty() ? std::vector<int>{*it} : insert_front(ix, *it, out);
  return out;
}

// k >= 3 associativity: normalizing a tricolored path must not depend on the
// order the squares are applied.
void check_cube_condition(const SkeletonIndex& ix) {
  const auto& sk = *ix.sk;
  const int n = static_cast<int>(sk.edges.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (ix.source_of(a) != ix.range_of(b)) continue;
      for (int c = 0; c < n; ++c) {
        if (ix.source_of(b) != ix.range_of(c)) continue;
        if (ix.color(a) == ix.color(b) || ix.color(b) == ix.color(c) ||
            ix.color(a) == ix.color(c))
          continue;
        // Route 1: resolve from the right (insert_front order).
        const std::vector<int> r1 = normalize_word(ix, {a, b, c});
        // Route 2: resolve the leftmost inversion first, repeatedly.
        std::vector<int> w = {a, b, c};
        bool changed = true;
        while (changed) {
          changed = false;
          for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (ix.color(w[i]) > ix.color(w[i + 1])) {
              auto it = ix.swap.find({w[i], w[i + 1]});
              if (it == ix.swap.end())
                fail(Errc::Precondition, "missing square during cube check");
              w[i] = it->second.first;
              w[i + 1] = it->second.second;
              changed = true;
              break;
            }
          }
        }
        if (r1 != w)
          fail(Errc::CubeCondition, "associativity fails on the path " + sk.edges[a].id + "." +
                                        sk.edges[b].id + "." + sk.edges[c].id);
      }
    }
}

std::string word_name(const SkeletonIndex& ix, const std::vector<int>& w, int range_vertex) {
  if (w.empty()) return ix.sk->vertices[range_vertex];
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += ix.sk->edges[w[i]].id;
  }
  return out;
}

Degree word_degree(const SkeletonIndex& ix, const std::vector<int>& w) {
  std::vector<int> coords(ix.sk->rank, 0);
  for (int e : w) coords[ix.color(e)] += 1;
  return ix.monoid.make_grid(coords);
}

PGraph from_skeleton_strict(const SkeletonIndex& ix, const Degree& window) {
  const auto& sk = *ix.sk;
  check_square_completeness(ix);
  if (sk.rank >= 3) check_cube_condition(ix);

  // Normal words of each nonzero degree, built in graded order. A normal
  // word of degree d is its first edge (carrying the least color of d)
  // prepended to a normal word of degree d - e_i, so plain prepending
  // enumerates each exactly once.
  std::map<Degree, std::vector<std::vector<int>>> by_degree;
  std::vector<Degree> degrees = ix.monoid.degrees_below(window);
  std::stable_sort(degrees.begin(), degrees.end(), [](const Degree& a, const Degree& b) {
    const int sa = std::accumulate(a.coords().begin(), a.coords().end(), 0);
    const int sb = std::accumulate(b.coords().begin(), b.coords().end(), 0);
    return sa < sb;
  });
  for (const auto& d : degrees) {
    if (d.is_identity()) continue;
    auto& bucket = by_degree[d];
    int first_color = 0;
    while (d.coords()[first_color] == 0) ++first_color;
    std::vector<int> prev_coords = d.coords();
    prev_coords[first_color] -= 1;
    const Degree prev = ix.monoid.make_grid(prev_coords);
    for (std::size_t e = 0; e < sk.edges.size(); ++e) {
      if (ix.color(static_cast<int>(e)) != first_color) continue;
      if (prev.is_identity()) {
        bucket.push_back({static_cast<int>(e)});
        continue;
      }
      for (const auto& w : by_degree.at(prev)) {
        if (ix.source_of(static_cast<int>(e)) != ix.range_of(w.front())) continue;
        std::vector<int> w2;
        w2.reserve(w.size() + 1);
        w2.push_back(static_cast<int>(e));
        w2.insert(w2.end(), w.begin(), w.end());
        bucket.push_back(std::move(w2));
      }
    }
    std::sort(bucket.begin(), bucket.end());
  }

  PGraphBuilder b(ix.monoid);
  for (const auto& v : sk.vertices) b.add_vertex(v);
  b.set_window(window);
  for (const auto& [d, bucket] : by_degree)
    for (const auto& w : bucket)
      b.add_morphism(word_name(ix, w, 0), sk.vertices[ix.range_of(w.front())],
                     sk.vertices[ix.source_of(w.back())], word_degree(ix, w));
  // Composition: concatenate, then restore the normal form with the square
  // bijection. Unit factors are implicit.
  for (const auto& [d1, bucket1] : by_degree)
    for (const auto& [d2, bucket2] : by_degree) {
      const Degree total = ix.monoid.compose(d1, d2);
      if (!ix.monoid.leq(total, window)) continue;
      for (const auto& w1 : bucket1)
        for (const auto& w2 : bucket2) {
          if (ix.source_of(w1.back()) != ix.range_of(w2.front())) continue;
          std::vector<int> cat = w1;
          cat.insert(cat.end(), w2.begin(), w2.end());
          b.set_composition(word_name(ix, w1, 0), word_name(ix, w2, 0),
                            word_name(ix, normalize_word(ix, cat), 0));
        }
    }
  return b.finalize();
}

PGraph from_skeleton_permissive(const SkeletonIndex& ix, const Degree& window) {
  const auto& sk = *ix.sk;
  // All composable edge words with degree inside the window (plus the empty
  // word per vertex), then the square-move congruence closure.
  std::vector<std::pair<std::vector<int>, int>> words;  // (word, range vertex)
  for (std::size_t v = 0; v < sk.vertices.size(); ++v)
    words.push_back({{}, static_cast<int>(v)});
  std::vector<std::vector<int>> frontier;
  for (std::size_t e = 0; e < sk.edges.size(); ++e) frontier.push_back({static_cast<int>(e)});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto& w : frontier) {
      if (!ix.monoid.leq(word_degree(ix, w), window)) continue;
      words.push_back({w, ix.range_of(w.front())});
      for (std::size_t e = 0; e < sk.edges.size(); ++e) {
        if (ix.source_of(w.back()) != ix.range_of(static_cast<int>(e))) continue;
        std::vector<int> w2 = w;
        w2.push_back(static_cast<int>(e));
        if (ix.monoid.leq(word_degree(ix, w2), window)) next.push_back(std::move(w2));
      }
    }
    frontier = std::move(next);
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());

  std::map<std::pair<std::vector<int>, int>, std::size_t> wid;
  for (std::size_t i = 0; i < words.size(); ++i) wid[words[i]] = i;
  std::vector<std::size_t> parent(words.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[root(a)] = root(b); };
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& [w, rv] = words[i];
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
      auto [lo, hi] = ix.rewrites.equal_range({w[j], w[j + 1]});
      for (auto it = lo; it != hi; ++it) {
        std::vector<int> w2 = w;
        w2[j] = it->second.first;
        w2[j + 1] = it->second.second;
        auto found = wid.find({w2, rv});
        if (found != wid.end()) unite(i, found->second);
      }
    }
  }
  // Class representatives: the least word.
  std::map<std::size_t, std::pair<std::vector<int>, int>> rep;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::size_t r = root(i);
    auto it = rep.find(r);
    if (it == rep.end() || words[i] < it->second) rep[r] = words[i];
  }
  auto class_name = [&](std::size_t i) {
    const auto& [w, rv] = rep.at(root(i));
    return word_name(ix, w, rv);
  };

  PGraphBuilder b(ix.monoid);
  for (const auto& v : sk.vertices) b.add_vertex(v);
  b.set_window(window);
  for (const auto& [r, wv] : rep) {
    const auto& [w, rv] = wv;
    if (w.empty()) continue;  // unit, added with the vertex
    b.add_morphism(word_name(ix, w, rv), sk.vertices[ix.range_of(w.front())],
                   sk.vertices[ix.source_of(w.back())], word_degree(ix, w));
    (void)r;
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& [w1, rv1] = words[i];
    if (w1.empty()) continue;
    for (std::size_t j = 0; j < words.size(); ++j) {
      const auto& [w2, rv2] = words[j];
      if (w2.empty()) continue;
      if (ix.source_of(w1.back()) != ix.range_of(w2.front())) continue;
      std::vector<int> cat = w1;
      cat.insert(cat.end(), w2.begin(), w2.end());
      auto found = wid.find({cat, rv1});
      if (found == wid.end()) continue;  // outside the window
      b.set_composition(class_name(i), class_name(j), class_name(found->second));
    }
  }
  return b.finalize();
}

}  // namespace

PGraph from_skeleton(const SkeletonPresentation& sk, const Degree& window, SkeletonMode mode) {
  SkeletonIndex ix = index_skeleton(sk);
  if (!ix.monoid.owns(window)) fail(Errc::TagMismatch, "window rank does not match the skeleton");
  return mode == SkeletonMode::Strict ? from_skeleton_strict(ix, window)
                                      : from_skeleton_permissive(ix, window);
}

Report validate_category(const PGraph& g) {
  Report rep;
  const auto& monoid = g.monoid();
  // Units and identity laws.
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const MorphismId u = g.unit(v);
    if (!g.at(u).degree.is_identity() || g.at(u).range != v || g.at(u).source != v)
      rep.violation("unit of vertex " + g.vertex_name(v) + " is malformed");
  }
  for (MorphismId i = 0; i < g.size(); ++i) {
    const Morphism& m = g.at(i);
    if (m.degree.is_identity() && (m.range != m.source || g.unit(m.range) != i))
      rep.violation("degree-e morphism " + m.name + " is not the unit of its vertex");
    const auto left = g.compose(g.unit(m.range), i);
    if (!left || *left != i)
      rep.violation("identity law fails: " + g.vertex_name(m.range) + "*" + m.name + " != " +
                     m.name);
    const auto right = g.compose(i, g.unit(m.source));
    if (!right || *right != i)
      rep.violation("identity law fails: " + m.name + "*" + g.vertex_name(m.source) + " != " +
                     m.name);
  }
  // Composition entries are well-formed and functorial in the degree.
  for (const auto& [ab, c] : g.composition_table()) {
    const auto [a, b] = ab;
    const Morphism &ma = g.at(a), &mb = g.at(b), &mc = g.at(c);
    if (ma.source != mb.range) {
      rep.violation("entry " + ma.name + "*" + mb.name + " composes non-composable morphisms");
      continue;
    }
    if (mc.range != ma.range || mc.source != mb.source)
      rep.violation("entry " + ma.name + "*" + mb.name + " has wrong endpoints");
    if (!(mc.degree == monoid.compose(ma.degree, mb.degree)))
      rep.violation("degree functor fails on " + ma.name + "*" + mb.name);
    if (!g.degree_in_window(monoid.compose(ma.degree, mb.degree)))
      rep.violation("entry " + ma.name + "*" + mb.name + " lies outside the window");
  }
  // Closure: composable pairs whose degree fits must be defined.
  for (MorphismId a = 0; a < g.size(); ++a)
    for (MorphismId b = 0; b < g.size(); ++b) {
      if (g.at(a).source != g.at(b).range) continue;
      if (!g.degree_in_window(monoid.compose(g.at(a).degree, g.at(b).degree))) continue;
      if (!g.compose(a, b))
        rep.violation("composition " + g.at(a).name + "*" + g.at(b).name + " is undefined");
    }
  // Associativity on every composable triple inside the window.
  for (MorphismId a = 0; a < g.size(); ++a)
    for (MorphismId b = 0; b < g.size(); ++b) {
      if (g.at(a).source != g.at(b).range) continue;
      const auto ab = g.compose(a, b);
      for (MorphismId c = 0; c < g.size(); ++c) {
        if (g.at(b).source != g.at(c).range) continue;
        const Degree total =
            monoid.compose(g.at(a).degree, monoid.compose(g.at(b).degree, g.at(c).degree));
        if (!g.degree_in_window(total)) continue;
        const auto bc = g.compose(b, c);
        if (!ab || !bc) continue;  // closure violation already reported
        const auto l = g.compose(*ab, c);
        const auto r = g.compose(a, *bc);
        if (!l || !r || *l != *r)
          rep.violation("associativity fails on " + g.at(a).name + "*" + g.at(b).name + "*" +
                         g.at(c).name);
      }
    }
  return rep;
}

Report validate_ufp(const PGraph& g) {
  Report rep;
  const auto& monoid = g.monoid();
  // Factorization counts per (result, left degree), collected in one sweep.
  std::map<std::pair<MorphismId, Degree>, int> counts;
  for (const auto& [ab, c] : g.composition_table()) counts[{c, g.at(ab.first).degree}] += 1;
  for (MorphismId lam = 0; lam < g.size(); ++lam) {
    for (const Degree& p : monoid.degrees_below(g.at(lam).degree)) {
      const int n = counts.count({lam, p}) ? counts.at({lam, p}) : 0;
      if (n == 0)
        rep.violation("no factorization of " + g.at(lam).name + " at degree " + p.str());
      else if (n > 1)
        rep.violation(std::to_string(n) + " factorizations of " + g.at(lam).name + " at degree " +
                       p.str());
    }
  }
  return rep;
}

Report validate_cancellation(const PGraph& g) {
  Report rep;
  const auto& table = g.composition_table();
  for (const auto& [ab, c] : table)
    for (const auto& [ab2, c2] : table) {
      if (c != c2) continue;
      if (ab.first == ab2.first && ab.second != ab2.second &&
          g.at(ab.second).degree == g.at(ab2.second).degree)
        rep.violation("left cancellation fails at " + g.at(c).name);
      if (ab.second == ab2.second && ab.first != ab2.first &&
          g.at(ab.first).degree == g.at(ab2.first).degree)
        rep.violation("right cancellation fails at " + g.at(c).name);
    }
  for (const auto& [ab, c] : table) {
    const auto [a, b] = ab;
    if (g.is_unit(c) && !(g.is_unit(a) && g.is_unit(b)))
      rep.violation("inverses exist: " + g.at(a).name + "*" + g.at(b).name + " is a unit");
  }
  return rep;
}

std::vector<MorphismId> mce(const PGraph& g, MorphismId mu, MorphismId nu) {
  const auto& cm = g.cone(mu);
  const auto& cn = g.cone(nu);
  std::vector<MorphismId> common;
  std::set_intersection(cm.begin(), cm.end(), cn.begin(), cn.end(), std::back_inserter(common));
  std::vector<MorphismId> minimal;
  for (MorphismId k : common) {
    bool is_min = true;
    for (MorphismId k2 : common)
      if (k2 != k && g.divides(k2, k)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(k);
  }
  return minimal;
}

AlignmentReport is_finitely_aligned(const PGraph& g) {
  AlignmentReport out;
  const auto& monoid = g.monoid();
  auto touches_boundary = [&](const Degree& d) {
    if (!g.window()) return false;
    if (monoid.kind() == MonoidKind::Free)
      return d.word().size() == g.window()->word().size();
    for (std::size_t i = 0; i < d.coords().size(); ++i)
      if (d.coords()[i] == g.window()->coords()[i]) return true;
    return false;
  };
  for (MorphismId mu = 0; mu < g.size(); ++mu)
    for (MorphismId nu = mu; nu < g.size(); ++nu) {
      auto j = mce(g, mu, nu);
      const bool flagged =
          std::any_of(j.begin(), j.end(), [&](MorphismId k) { return touches_boundary(g.at(k).degree); });
      if (flagged) {
        out.boundary_pairs.push_back({mu, nu});
        out.report.flag("mce(" + g.at(mu).name + "," + g.at(nu).name +
                        ") touches the window boundary");
      }
      out.certificates[{mu, nu}] = std::move(j);
    }
  return out;
}

}  // namespace pgv
