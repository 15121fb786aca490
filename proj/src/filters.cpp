#include "pgv/filters.hpp"

#include <algorithm>
#include <set>

namespace pgv {

bool Filter::contains(MorphismId id) const {
  return std::binary_search(elems.begin(), elems.end(), id);
}

std::string Filter::str(const PGraph& g) const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ',';
    out += g.at(elems[i]).name;
  }
  return out + "}";
}

Report filter_violations(const PGraph& g, const std::vector<MorphismId>& elems) {
  for (MorphismId id : elems)
    if (id >= g.size()) fail(Errc::UnknownId, "morphism id out of range");
  Report rep;
  Filter x{elems};
  std::sort(x.elems.begin(), x.elems.end());
  x.elems.erase(std::unique(x.elems.begin(), x.elems.end()), x.elems.end());
  if (x.elems.empty()) {
    rep.violation("filter is empty");
    return rep;
  }
  for (MorphismId lam : x.elems)
    for (MorphismId mu : g.divisors(lam))
      if (!x.contains(mu))
        rep.violation("not hereditary: " + g.at(mu).name + " prec " + g.at(lam).name +
                       " is missing");
  const bool windowed = g.window().has_value();
  for (MorphismId mu : x.elems)
    for (MorphismId nu : x.elems) {
      if (nu < mu) continue;
      bool ok = false;
      if (windowed) {
        const auto dw = g.monoid().lub(g.at(mu).degree, g.at(nu).degree);
        if (dw) {
          for (MorphismId lam : x.elems)
            if (g.at(lam).degree == *dw && g.divides(mu, lam) && g.divides(nu, lam)) {
              ok = true;
              break;
            }
        }
      } else {
        for (MorphismId lam : x.elems)
          if (g.divides(mu, lam) && g.divides(nu, lam)) {
            ok = true;
            break;
          }
      }
      if (!ok)
        rep.violation("not directed: " + g.at(mu).name + ", " + g.at(nu).name +
                       " have no common extension in the set");
    }
  int units = 0;
  for (MorphismId id : x.elems) units += g.is_unit(id) ? 1 : 0;
  if (units != 1)
    rep.violation("filter contains " + std::to_string(units) + " units (want exactly 1)");
  return rep;
}

bool is_filter(const PGraph& g, const std::vector<MorphismId>& elems) {
  return filter_violations(g, elems).ok();
}

Filter principal(const PGraph& g, MorphismId lam) {
  if (lam >= g.size()) fail(Errc::UnknownId, "morphism id out of range");
  return Filter{g.divisors(lam)};
}

VertexId range_of(const PGraph& g, const Filter& x) {
  for (MorphismId id : x.elems)
    if (g.is_unit(id)) return g.at(id).range;
  fail(Errc::Precondition, "filter has no unit");
}

Filter shift_down(const PGraph& g, MorphismId lam, const Filter& x) {
  if (!x.contains(lam))
    fail(Errc::Precondition, "shift_down needs " + g.at(lam).name + " in the filter");
  Filter out;
  for (MorphismId c : g.cone(lam))
    if (x.contains(c)) out.elems.push_back(*g.left_quotient(lam, c));
  std::sort(out.elems.begin(), out.elems.end());
  out.elems.erase(std::unique(out.elems.begin(), out.elems.end()), out.elems.end());
  return out;
}

Filter shift_up(const PGraph& g, MorphismId lam, const Filter& x) {
  if (g.at(lam).source != range_of(g, x))
    fail(Errc::RangeMismatch, "shift_up needs s(" + g.at(lam).name + ") = r(x)");
  std::set<MorphismId> zeta;
  for (MorphismId mu : x.elems) {
    const auto lm = g.compose(lam, mu);
    if (!lm) {
      if (!g.degree_in_window(g.monoid().compose(g.at(lam).degree, g.at(mu).degree)))
        fail(Errc::WindowOverflow,
             "shift_up leaves the window at " + g.at(lam).name + "*" + g.at(mu).name);
      fail(Errc::Precondition, "composition missing for " + g.at(lam).name + "*" + g.at(mu).name);
    }
    const auto& divs = g.divisors(*lm);
    zeta.insert(divs.begin(), divs.end());
  }
  Filter out;
  out.elems.assign(zeta.begin(), zeta.end());
  return out;
}

bool act_defined(const PGraph& g, const Filter& x, const Degree& m) {
  return std::any_of(x.elems.begin(), x.elems.end(),
                     [&](MorphismId id) { return g.at(id).degree == m; });
}

Filter act(const PGraph& g, const Filter& x, const Degree& m) {
  std::optional<MorphismId> mu;
  for (MorphismId id : x.elems)
    if (g.at(id).degree == m) {
      if (mu) fail(Errc::Precondition, "degree map is not injective on the filter");
      mu = id;
    }
  if (!mu) fail(Errc::NotInDomain, "filter does not meet Lambda^" + m.str());
  return shift_down(g, *mu, x);
}

FilterSpace FilterSpace::enumerate(const PGraph& g) {
  // Inside a finite window every filter is principal: a directed finite set
  // has a maximum. The subset brute-force oracle in the tests confirms this
  // census on the small examples.
  std::set<Filter> found;
  for (MorphismId lam = 0; lam < g.size(); ++lam) found.insert(principal(g, lam));
  FilterSpace out;
  out.graph_ = &g;
  out.filters_.assign(found.begin(), found.end());
  return out;
}

std::optional<std::size_t> FilterSpace::index_of(const Filter& x) const {
  const auto it = std::lower_bound(filters_.begin(), filters_.end(), x);
  if (it == filters_.end() || !(*it == x)) return std::nullopt;
  return static_cast<std::size_t>(it - filters_.begin());
}

std::optional<std::size_t> FilterSpace::act_index(std::size_t i, const Degree& m) const {
  if (!act_defined(*graph_, filters_[i], m)) return std::nullopt;
  return index_of(act(*graph_, filters_[i], m));
}

Report action_axioms_check(const FilterSpace& space) {
  Report rep;
  const PGraph& g = space.graph();
  const auto& monoid = g.monoid();
  const Degree e = monoid.identity();
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!act_defined(g, space.at(i), e) || !(act(g, space.at(i), e) == space.at(i)))
      rep.violation("S1 fails on " + space.at(i).str(g));
  }
  const auto& degrees = g.degree_set();
  for (const Degree& m : degrees)
    for (const Degree& n : degrees) {
      const Degree mn = monoid.compose(m, n);
      if (!g.degree_in_window(mn)) {
        rep.flag("S2 skipped for (" + m.str() + "," + n.str() + "): composite outside window");
        continue;
      }
      for (std::size_t i = 0; i < space.size(); ++i) {
        const Filter& x = space.at(i);
        const bool whole = act_defined(g, x, mn);
        bool stepwise = false;
        if (act_defined(g, x, m)) stepwise = act_defined(g, act(g, x, m), n);
        if (whole != stepwise) {
          rep.violation("S2 domain condition fails at " + x.str(g) + " with m=" + m.str() +
                         " n=" + n.str());
          continue;
        }
        if (whole && !(act(g, act(g, x, m), n) == act(g, x, mn)))
          rep.violation("S2 composition fails at " + x.str(g) + " with m=" + m.str() +
                         " n=" + n.str());
      }
    }
  // Directedness of the action.
  for (const Degree& m : degrees)
    for (const Degree& n : degrees) {
      std::vector<std::size_t> both;
      for (std::size_t i = 0; i < space.size(); ++i)
        if (act_defined(g, space.at(i), m) && act_defined(g, space.at(i), n)) both.push_back(i);
      if (both.empty()) continue;
      bool found = false;
      for (const Degree& l : degrees) {
        if (!monoid.leq(m, l) || !monoid.leq(n, l)) continue;
        std::vector<std::size_t> dom;
        for (std::size_t i = 0; i < space.size(); ++i)
          if (act_defined(g, space.at(i), l)) dom.push_back(i);
        if (std::includes(dom.begin(), dom.end(), both.begin(), both.end())) {
          found = true;
          if (dom != both)
            rep.violation("directedness: dom(" + m.str() + ") cap dom(" + n.str() +
                           ") is a proper subset of dom(" + l.str() + ")");
          break;
        }
      }
      if (!found) {
        const auto l = monoid.kind() == MonoidKind::GridSubmonoid
                           ? std::nullopt
                           : monoid.lub(m, n);
        if (l && !g.degree_in_window(*l))
          rep.flag("directedness skipped for (" + m.str() + "," + n.str() +
                   "): upper bound outside window");
        else
          rep.violation("directedness fails for (" + m.str() + "," + n.str() + ")");
      }
    }
  return rep;
}

bool cylinder_membership(const PGraph& g, const Filter& x, const CylinderSet& c) {
  (void)g;
  for (MorphismId id : c.k1)
    if (!x.contains(id)) return false;
  for (MorphismId id : c.k2)
    if (x.contains(id)) return false;
  return true;
}

std::vector<std::size_t> cylinder_enumerate(const FilterSpace& space, const CylinderSet& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (cylinder_membership(space.graph(), space.at(i), c)) out.push_back(i);
  return out;
}

bool is_ultrafilter(const FilterSpace& space, std::size_t i) {
  const Filter& x = space.at(i);
  for (std::size_t j = 0; j < space.size(); ++j) {
    if (j == i) continue;
    const Filter& y = space.at(j);
    if (x.elems.size() < y.elems.size() &&
        std::includes(y.elems.begin(), y.elems.end(), x.elems.begin(), x.elems.end()))
      return false;
  }
  return true;
}

bool is_exhaustive(const PGraph& g, const std::vector<MorphismId>& E) {
  std::set<VertexId> ranges;
  for (MorphismId mu : E) ranges.insert(g.at(mu).range);
  for (MorphismId lam = 0; lam < g.size(); ++lam) {
    if (!ranges.count(g.at(lam).range)) continue;
    bool meets = false;
    for (MorphismId mu : E) {
      const auto& cl = g.cone(lam);
      const auto& cm = g.cone(mu);
      std::vector<MorphismId> common;
      std::set_intersection(cl.begin(), cl.end(), cm.begin(), cm.end(),
                            std::back_inserter(common));
      if (!common.empty()) {
        meets = true;
        break;
      }
    }
    if (!meets) return false;
  }
  return true;
}

BoundaryResult is_extendable(const PGraph& g, MorphismId mu, const Filter& x,
                             const Degree& depth_bound) {
  if (!x.contains(mu)) fail(Errc::Precondition, "is_extendable needs mu in x");
  const VertexId v = g.at(mu).source;
  // Split the depth-capped cone of s(mu) into definite extensions of x,
  // definite non-extensions, and window-unknown composites.
  std::vector<MorphismId> bad;
  std::vector<MorphismId> unknown;
  for (MorphismId nu = 0; nu < g.size(); ++nu) {
    if (g.at(nu).range != v) continue;
    if (!g.monoid().bounded_by(g.at(nu).degree, depth_bound)) continue;
    const auto comp = g.compose(mu, nu);
    if (!comp) {
      unknown.push_back(nu);
      continue;
    }
    if (!x.contains(*comp)) bad.push_back(nu);
  }
  // Exhaustiveness is monotone under supersets at a fixed vertex, so the
  // maximal candidate decides whether a failing exhaustive set exists.
  if (!bad.empty() && is_exhaustive(g, bad)) return {false, false};
  std::vector<MorphismId> bad_or_unknown = bad;
  bad_or_unknown.insert(bad_or_unknown.end(), unknown.begin(), unknown.end());
  if (bad_or_unknown.empty() || !is_exhaustive(g, bad_or_unknown)) return {true, false};
  return {true, true};  // extendable within the bound only
}

BoundaryResult is_boundary(const PGraph& g, const Filter& x, const Degree& depth_bound) {
  BoundaryResult out{true, false};
  for (MorphismId mu : x.elems) {
    const BoundaryResult r = is_extendable(g, mu, x, depth_bound);
    out.truncated |= r.truncated;
    if (!r.value) return {false, out.truncated};
  }
  return out;
}

bool is_invariant_set(const FilterSpace& space, const std::vector<std::size_t>& U) {
  const PGraph& g = space.graph();
  std::vector<bool> in_u(space.size(), false);
  for (std::size_t i : U) in_u[i] = true;
  for (const Degree& m : g.degree_set())
    for (const Degree& n : g.degree_set())
      for (std::size_t xi = 0; xi < space.size(); ++xi) {
        if (in_u[xi]) continue;
        const auto xm = space.act_index(xi, m);
        if (!xm) continue;
        for (std::size_t yi : U) {
          const auto yn = space.act_index(yi, n);
          if (yn && *yn == *xm) return false;
        }
      }
  return true;
}

}  // namespace pgv
