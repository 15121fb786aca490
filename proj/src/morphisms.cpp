#include "pgv/morphisms.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pgv {

PathMorphism::PathMorphism(const PGraph& g, DegreeClass domain_class, Degree storage_window,
                           std::map<Degree, MorphismId> values)
    : graph_(&g),
      class_(std::move(domain_class)),
      storage_window_(std::move(storage_window)),
      values_(std::move(values)) {}

MorphismId PathMorphism::value_at(const Degree& q) const {
  auto it = values_.find(q);
  if (it == values_.end()) fail(Errc::NotInDomain, "degree " + q.str() + " is not stored");
  return it->second;
}

MorphismId PathMorphism::eval(const Degree& p, const Degree& q) const {
  const auto& monoid = graph_->monoid();
  if (!monoid.leq(p, q)) fail(Errc::Precondition, "eval needs p <= q");
  const MorphismId top = value_at(q);
  const auto split = graph_->factor(top, p);
  if (!split) fail(Errc::Precondition, "no factorization of " + graph_->at(top).name +
                                           " at degree " + p.str());
  return split->second;
}

std::string PathMorphism::str() const {
  std::string out = "[" + class_.str() + ":";
  bool first = true;
  for (const auto& [q, id] : values_) {
    if (!first) out += ',';
    first = false;
    out += q.str() + "->" + graph_->at(id).name;
  }
  return out + "]";
}

Report validate_graph_morphism(const PathMorphism& x) {
  Report rep;
  const PGraph& g = x.graph();
  const auto& monoid = g.monoid();
  const Degree e = monoid.identity();
  if (!x.has_degree(e)) {
    rep.violation("no anchored value at the identity degree");
    return rep;
  }
  if (!g.is_unit(x.value_at(e)))
    rep.violation("anchored value at e is not a unit: " + g.at(x.value_at(e)).name);
  for (const auto& [q, id] : x.values()) {
    if (!(g.at(id).degree == q))
      rep.violation("degree preservation fails at " + q.str() + ": stored " + g.at(id).name);
    if (g.at(id).range != g.at(x.value_at(e)).range)
      rep.violation("value at " + q.str() + " has a foreign range vertex");
  }
  // Stored degrees must be exactly the window-truncated domain.
  const Degree top = monoid.class_truncate(x.domain_class(), x.storage_window());
  std::set<Degree> expect;
  for (const Degree& q : monoid.degrees_below(top)) expect.insert(q);
  for (const auto& [q, id] : x.values())
    if (!expect.count(q)) rep.violation("stored degree " + q.str() + " is outside the domain");
  for (const Degree& q : expect)
    if (!x.has_degree(q)) rep.violation("domain degree " + q.str() + " has no stored value");
  if (!rep.ok()) return rep;
  // Coherence: anchored values factor through each other.
  for (const auto& [p, pid] : x.values())
    for (const auto& [q, qid] : x.values()) {
      if (!monoid.leq(p, q)) continue;
      const auto split = g.factor(qid, p);
      if (!split || split->first != pid)
        rep.violation("coherence fails between " + p.str() + " and " + q.str());
    }
  if (!rep.ok()) return rep;
  // Full functoriality via eval on composable domain triples.
  for (const auto& [p, pid] : x.values())
    for (const auto& [q, qid] : x.values()) {
      if (!monoid.leq(p, q)) continue;
      for (const auto& [r, rid] : x.values()) {
        if (!monoid.leq(q, r)) continue;
        const MorphismId pq = x.eval(p, q);
        const MorphismId qr = x.eval(q, r);
        const auto comp = g.compose(pq, qr);
        if (!comp || *comp != x.eval(p, r))
          rep.violation("functoriality fails on (" + p.str() + "," + q.str() + "," + r.str() +
                         ")");
      }
    }
  return rep;
}

bool is_actionable(const PathMorphism& x, const Degree& p) {
  return x.graph().monoid().class_contains(x.domain_class(), p);
}

PathMorphism act_morphism(const PathMorphism& x, const Degree& m) {
  const PGraph& g = x.graph();
  const auto& monoid = g.monoid();
  if (!is_actionable(x, m)) fail(Errc::NotInDomain, "(x," + m.str() + ") is not actionable");
  if (!x.has_degree(m))
    fail(Errc::WindowOverflow, "acting by " + m.str() + " exceeds the stored window");
  const DegreeClass cls = monoid.class_left_divide(m, x.domain_class());
  const Degree window = *monoid.left_divide(m, x.storage_window());
  std::map<Degree, MorphismId> values;
  for (const Degree& q : monoid.degrees_below(monoid.class_truncate(cls, window)))
    values[q] = x.eval(m, monoid.compose(m, q));
  return PathMorphism(g, cls, window, std::move(values));
}

const DegreeClass& degree_of(const PathMorphism& x) { return x.domain_class(); }

Filter to_filter(const PathMorphism& x) {
  Filter y;
  for (const auto& [q, id] : x.values()) y.elems.push_back(id);
  std::sort(y.elems.begin(), y.elems.end());
  y.elems.erase(std::unique(y.elems.begin(), y.elems.end()), y.elems.end());
  return y;
}

FilterChain principal_chain(const PGraph& g, const Filter& y,
                            const std::vector<std::size_t>& order) {
  if (order.size() != y.elems.size())
    fail(Errc::Precondition, "enumeration order must permute the filter");
  const auto& monoid = g.monoid();
  FilterChain out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const MorphismId next = y.elems[order[k]];
    if (out.chain.empty()) {
      out.chain.push_back(next);
      continue;
    }
    const MorphismId prev = out.chain.back();
    // Directedness witness: the element of y at the degree join dominating
    // both (unique since the degree map is injective on filters).
    const auto dw = monoid.lub(g.at(prev).degree, g.at(next).degree);
    std::optional<MorphismId> witness;
    if (dw) {
      for (MorphismId lam : y.elems)
        if (g.at(lam).degree == *dw && g.divides(prev, lam) && g.divides(next, lam)) {
          witness = lam;
          break;
        }
    }
    if (!witness) {
      for (MorphismId lam : y.elems)
        if (g.divides(prev, lam) && g.divides(next, lam)) {
          witness = lam;
          break;
        }
    }
    if (!witness)
      fail(Errc::Precondition, "set is not directed: no common extension of " + g.at(prev).name +
                                   " and " + g.at(next).name);
    out.chain.push_back(*witness);
  }
  // The degree sequence of the chain is eventually constant here, so its
  // class is the class of the final degree.
  out.cls = monoid.class_of(g.at(out.chain.back()).degree);
  return out;
}

PathMorphism from_filter_with_order(const PGraph& g, const Filter& y,
                                    const std::vector<std::size_t>& order) {
  const auto& monoid = g.monoid();
  const FilterChain fc = principal_chain(g, y, order);
  const Degree top = fc.cls.finite_degree();
  const Degree window = g.window() ? *g.window() : top;
  std::map<Degree, MorphismId> values;
  for (const Degree& q : monoid.degrees_below(monoid.class_truncate(fc.cls, window))) {
    std::optional<MorphismId> at;
    for (MorphismId id : y.elems)
      if (g.at(id).degree == q) {
        if (at) fail(Errc::Precondition, "degree map is not injective on the filter");
        at = id;
      }
    if (!at) fail(Errc::Precondition, "filter misses degree " + q.str());
    values[q] = *at;
  }
  return PathMorphism(g, fc.cls, window, std::move(values));
}

PathMorphism from_filter(const PGraph& g, const Filter& y) {
  std::vector<std::size_t> order(y.elems.size());
  std::iota(order.begin(), order.end(), 0);
  return from_filter_with_order(g, y, order);
}

BoundaryResult is_boundary_morphism(const PathMorphism& x, const Degree& depth_bound) {
  const PGraph& g = x.graph();
  const auto& monoid = g.monoid();
  BoundaryResult out{true, false};
  for (const auto& [m, mid] : x.values()) {
    const VertexId v = g.at(mid).source;
    std::vector<MorphismId> bad, unknown;
    for (MorphismId nu = 0; nu < g.size(); ++nu) {
      if (g.at(nu).range != v) continue;
      if (!monoid.bounded_by(g.at(nu).degree, depth_bound)) continue;
      const Degree target = monoid.compose(m, g.at(nu).degree);
      if (x.has_degree(target)) {
        if (x.eval(m, target) != nu) bad.push_back(nu);
      } else if (g.degree_in_window(target) &&
                 !monoid.class_contains(x.domain_class(), target)) {
        bad.push_back(nu);  // visible inside the window, outside the domain
      } else {
        unknown.push_back(nu);
      }
    }
    if (!bad.empty() && is_exhaustive(g, bad)) return {false, out.truncated};
    std::vector<MorphismId> widened = bad;
    widened.insert(widened.end(), unknown.begin(), unknown.end());
    if (!widened.empty() && is_exhaustive(g, widened)) out.truncated = true;
  }
  return out;
}

bool morphism_cylinder_membership(const PathMorphism& x, const CylinderSet& c) {
  std::set<MorphismId> image;
  for (const auto& [q, id] : x.values()) image.insert(id);
  for (MorphismId id : c.k1)
    if (!image.count(id)) return false;
  for (MorphismId id : c.k2)
    if (image.count(id)) return false;
  return true;
}

IncreasingSequence omega_class_to_sequence(const DegreeClass& c) {
  return grid_class_to_sequence(c);
}

DegreeClass omega_sequence_to_class(const DegreeMonoid& monoid, const IncreasingSequence& s) {
  return sequence_to_grid_class(monoid, s);
}

MorphismSpace MorphismSpace::from_filters(const FilterSpace& fs) {
  MorphismSpace out;
  out.graph_ = &fs.graph();
  for (std::size_t i = 0; i < fs.size(); ++i)
    out.points_.push_back(from_filter(fs.graph(), fs.at(i)));
  return out;
}

std::optional<std::size_t> MorphismSpace::index_of(const PathMorphism& x) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == x) return i;
  return std::nullopt;
}

std::optional<std::size_t> MorphismSpace::act_index(std::size_t i, const Degree& m) const {
  if (!is_actionable(points_[i], m) || !points_[i].has_degree(m)) return std::nullopt;
  return index_of(act_morphism(points_[i], m));
}

Report conjugacy_check(const FilterSpace& fs, const MorphismSpace& ms) {
  Report rep;
  const PGraph& g = fs.graph();
  if (fs.size() != ms.size()) {
    rep.violation("path spaces have different sizes");
    return rep;
  }
  // C1: both composites are the identity, pointwise.
  std::set<std::vector<MorphismId>> image;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const Filter y = to_filter(ms.at(i));
    if (!(y == fs.at(i)))
      rep.violation("C1: to_filter(from_filter) moved filter " + fs.at(i).str(g));
    if (!(from_filter(g, fs.at(i)) == ms.at(i)))
      rep.violation("C1: from_filter(to_filter) moved point " + std::to_string(i));
    image.insert(y.elems);
  }
  if (image.size() != fs.size()) rep.violation("C1: h is not injective");
  // C2: h(dom T^m) = dom T^m for every materialized degree.
  for (const Degree& m : g.degree_set()) {
    std::set<std::vector<MorphismId>> lhs, rhs;
    for (std::size_t i = 0; i < ms.size(); ++i)
      if (is_actionable(ms.at(i), m)) lhs.insert(to_filter(ms.at(i)).elems);
    for (std::size_t i = 0; i < fs.size(); ++i)
      if (act_defined(g, fs.at(i), m)) rhs.insert(fs.at(i).elems);
    if (lhs != rhs) rep.violation("C2 fails at degree " + m.str());
  }
  // C3: h(x.m) = h(x).m on every in-window pair.
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (const Degree& m : g.degree_set()) {
      if (!is_actionable(ms.at(i), m)) continue;
      if (!(to_filter(act_morphism(ms.at(i), m)) == act(g, to_filter(ms.at(i)), m)))
        rep.violation("C3 fails at point " + std::to_string(i) + " degree " + m.str());
    }
  return rep;
}

Report morphism_action_axioms_check(const MorphismSpace& space) {
  Report rep;
  const PGraph& g = space.graph();
  const auto& monoid = g.monoid();
  const Degree e = monoid.identity();
  for (std::size_t i = 0; i < space.size(); ++i)
    if (!is_actionable(space.at(i), e) || !(act_morphism(space.at(i), e) == space.at(i)))
      rep.violation("S1 fails on " + space.at(i).str());
  const auto& degrees = g.degree_set();
  for (const Degree& m : degrees)
    for (const Degree& n : degrees) {
      const Degree mn = monoid.compose(m, n);
      if (!g.degree_in_window(mn)) {
        rep.flag("S2 skipped for (" + m.str() + "," + n.str() + "): composite outside window");
        continue;
      }
      for (std::size_t i = 0; i < space.size(); ++i) {
        const PathMorphism& x = space.at(i);
        const bool whole = is_actionable(x, mn);
        bool stepwise = false;
        if (is_actionable(x, m)) stepwise = is_actionable(act_morphism(x, m), n);
        if (whole != stepwise) {
          rep.violation("S2 domain condition fails at point " + std::to_string(i) + " with m=" +
                         m.str() + " n=" + n.str());
          continue;
        }
        if (whole && !(act_morphism(act_morphism(x, m), n) == act_morphism(x, mn)))
          rep.violation("S2 composition fails at point " + std::to_string(i) + " with m=" +
                         m.str() + " n=" + n.str());
      }
    }
  return rep;
}

}  // namespace pgv
