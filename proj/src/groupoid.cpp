#include "pgv/groupoid.hpp"

#include <algorithm>
#include <set>

namespace pgv {

std::optional<std::size_t> FilterActionSpace::act(std::size_t pt, const Degree& m) const {
  return fs_->act_index(pt, m);
}

std::optional<std::size_t> FilterActionSpace::prepend(MorphismId lam, std::size_t pt) const {
  const PGraph& g = fs_->graph();
  if (g.at(lam).source != range_of(g, fs_->at(pt))) return std::nullopt;
  try {
    return fs_->index_of(shift_up(g, lam, fs_->at(pt)));
  } catch (const Error& err) {
    if (err.code() == Errc::WindowOverflow) return std::nullopt;
    throw;
  }
}

VertexId FilterActionSpace::range(std::size_t pt) const {
  return range_of(fs_->graph(), fs_->at(pt));
}

bool FilterActionSpace::in_cylinder(std::size_t pt, const CylinderSet& c) const {
  return cylinder_membership(fs_->graph(), fs_->at(pt), c);
}

std::string FilterActionSpace::label(std::size_t pt) const {
  return fs_->at(pt).str(fs_->graph());
}

std::optional<std::size_t> MorphismActionSpace::act(std::size_t pt, const Degree& m) const {
  return ms_->act_index(pt, m);
}

std::optional<std::size_t> MorphismActionSpace::prepend(MorphismId lam, std::size_t pt) const {
  // The lam.x of the k-graph picture, computed through the conjugacy:
  // h(lam.x) = shift_up(lam, h(x)).
  const PGraph& g = ms_->graph();
  const Filter y = to_filter(ms_->at(pt));
  if (g.at(lam).source != range_of(g, y)) return std::nullopt;
  try {
    return ms_->index_of(from_filter(g, shift_up(g, lam, y)));
  } catch (const Error& err) {
    if (err.code() == Errc::WindowOverflow) return std::nullopt;
    throw;
  }
}

VertexId MorphismActionSpace::range(std::size_t pt) const {
  const PathMorphism& x = ms_->at(pt);
  return ms_->graph().at(x.value_at(ms_->graph().monoid().identity())).range;
}

bool MorphismActionSpace::in_cylinder(std::size_t pt, const CylinderSet& c) const {
  return morphism_cylinder_membership(ms_->at(pt), c);
}

std::string MorphismActionSpace::label(std::size_t pt) const { return ms_->at(pt).str(); }

Groupoid Groupoid::enumerate(const ActionSpace& space, const Degree& bound) {
  Groupoid out;
  out.space_ = &space;
  out.bound_ = bound;
  const auto& monoid = space.graph().monoid();
  for (const Degree& d : space.graph().degree_set())
    if (monoid.bounded_by(d, bound)) out.pool_.push_back(d);
  out.act_table_.assign(space.size(), {});
  for (std::size_t pt = 0; pt < space.size(); ++pt) {
    out.act_table_[pt].resize(out.pool_.size());
    for (std::size_t mi = 0; mi < out.pool_.size(); ++mi)
      out.act_table_[pt][mi] = space.act(pt, out.pool_[mi]);
  }
  // All (x, q, y) with witnesses inside the pool; the first witness found is
  // the lexicographically least one because the pool is sorted.
  std::map<std::tuple<std::size_t, GroupElement, std::size_t>, std::pair<Degree, Degree>> seen;
  for (std::size_t x = 0; x < space.size(); ++x)
    for (std::size_t y = 0; y < space.size(); ++y)
      for (std::size_t mi = 0; mi < out.pool_.size(); ++mi) {
        if (!out.act_table_[x][mi]) continue;
        for (std::size_t ni = 0; ni < out.pool_.size(); ++ni) {
          if (!out.act_table_[y][ni]) continue;
          if (*out.act_table_[x][mi] != *out.act_table_[y][ni]) continue;
          const GroupElement q = quotient(out.pool_[mi], out.pool_[ni]);
          seen.emplace(std::make_tuple(x, q, y), std::make_pair(out.pool_[mi], out.pool_[ni]));
        }
      }
  for (const auto& [key, wit] : seen) {
    out.index_[key] = out.elems_.size();
    out.elems_.push_back({std::get<0>(key), std::get<2>(key), std::get<1>(key), wit});
  }
  return out;
}

Groupoid Groupoid::from_elements(const ActionSpace& space, const Degree& bound,
                                 std::vector<GroupoidElement> elems) {
  Groupoid out = enumerate(space, bound);
  out.elems_ = std::move(elems);
  out.index_.clear();
  for (std::size_t i = 0; i < out.elems_.size(); ++i)
    out.index_[{out.elems_[i].x, out.elems_[i].q, out.elems_[i].y}] = i;
  return out;
}

std::optional<std::size_t> Groupoid::find(std::size_t x, const GroupElement& q,
                                          std::size_t y) const {
  auto it = index_.find({x, q, y});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Groupoid::invert(std::size_t i) const {
  const GroupoidElement& g = elems_[i];
  const auto j = find(g.y, group_invert(g.q), g.x);
  if (!j) fail(Errc::Precondition, "inverse element missing from the enumeration");
  return *j;
}

std::size_t Groupoid::compose(std::size_t i, std::size_t j) const {
  const GroupoidElement& g = elems_[i];
  const GroupoidElement& h = elems_[j];
  if (g.y != h.x) fail(Errc::NonComposable, "source/range mismatch");
  const GroupElement q = group_compose(g.q, h.q);
  const auto k = find(g.x, q, h.y);
  if (!k)
    fail(Errc::WindowOverflow, "composite has no witness within the degree bound");
  return *k;
}

std::size_t Groupoid::unit_at(std::size_t pt) const {
  GroupElement e = quotient(space_->graph().monoid().identity(),
                            space_->graph().monoid().identity());
  const auto i = find(pt, e, pt);
  if (!i) fail(Errc::Precondition, "unit element missing from the enumeration");
  return *i;
}

std::optional<std::size_t> Groupoid::act_of(std::size_t pt, const Degree& m) const {
  for (std::size_t mi = 0; mi < pool_.size(); ++mi)
    if (pool_[mi] == m) return act_table_[pt][mi];
  return space_->act(pt, m);
}

GroupoidElement make_element(const ActionSpace& space, std::size_t x, const Degree& m,
                             const Degree& n, std::size_t y) {
  const auto xm = space.act(x, m);
  if (!xm) fail(Errc::NotInDomain, "x is not in the domain of " + m.str());
  const auto yn = space.act(y, n);
  if (!yn) fail(Errc::NotInDomain, "y is not in the domain of " + n.str());
  if (*xm != *yn)
    fail(Errc::NotAnElement, "act(x," + m.str() + ") != act(y," + n.str() + ")");
  return {x, y, quotient(m, n), {m, n}};
}

bool basis_membership(const Groupoid& gpd, const GroupoidElement& g, const BasisSet& z) {
  if (!std::count(z.U.begin(), z.U.end(), g.x)) return false;
  if (!std::count(z.V.begin(), z.V.end(), g.y)) return false;
  if (!(g.q == quotient(z.m, z.n))) return false;
  const auto xm = gpd.act_of(g.x, z.m);
  const auto yn = gpd.act_of(g.y, z.n);
  return xm && yn && *xm == *yn;
}

bool yee_basis_membership(const Groupoid& gpd, const GroupoidElement& g, const YeeBasisSet& z) {
  if (!(g.q == z.m)) return false;
  const ActionSpace& space = gpd.space();
  const PGraph& graph = space.graph();
  for (const auto& [lam, mu] : z.pairs) {
    if (graph.at(lam).source != graph.at(mu).source) continue;
    if (!(quotient(graph.at(lam).degree, graph.at(mu).degree) == z.m)) continue;
    for (std::size_t t = 0; t < space.size(); ++t) {
      if (space.range(t) != graph.at(lam).source) continue;
      const auto xt = space.prepend(lam, t);
      if (!xt || *xt != g.x) continue;
      const auto yt = space.prepend(mu, t);
      if (yt && *yt == g.y) return true;
    }
  }
  return false;
}

std::vector<std::size_t> cylinder_points(const ActionSpace& space, const CylinderSet& c) {
  std::vector<std::size_t> out;
  for (std::size_t pt = 0; pt < space.size(); ++pt)
    if (space.in_cylinder(pt, c)) out.push_back(pt);
  return out;
}

std::vector<std::size_t> psi_h_element_map(const Groupoid& gm, const Groupoid& gf,
                                           const std::vector<std::size_t>& point_map) {
  std::vector<std::size_t> out;
  out.reserve(gm.size());
  for (std::size_t i = 0; i < gm.size(); ++i) {
    const GroupoidElement& g = gm.at(i);
    const auto j = gf.find(point_map[g.x], g.q, point_map[g.y]);
    if (!j)
      fail(Errc::NotAnElement,
           "psi_h image of element " + std::to_string(i) + " is not in the target groupoid");
    out.push_back(*j);
  }
  return out;
}

Report check_isomorphism(const Groupoid& g1, const Groupoid& g2,
                         const std::vector<std::size_t>& elem_map) {
  Report rep;
  if (elem_map.size() != g1.size()) {
    rep.violation("element map does not cover the domain groupoid");
    return rep;
  }
  if (g1.size() != g2.size())
    rep.violation("groupoids have different sizes: " + std::to_string(g1.size()) + " vs " +
                   std::to_string(g2.size()));
  std::vector<bool> hit(g2.size(), false);
  for (std::size_t i = 0; i < elem_map.size(); ++i) {
    if (elem_map[i] >= g2.size()) {
      rep.violation("image index out of range at " + std::to_string(i));
      return rep;
    }
    if (hit[elem_map[i]]) rep.violation("map is not injective at " + std::to_string(i));
    hit[elem_map[i]] = true;
  }
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
    rep.violation("map is not surjective");
  for (std::size_t i = 0; i < g1.size(); ++i)
    if (elem_map[g1.invert(i)] != g2.invert(elem_map[i]))
      rep.violation("inversion is not preserved at element " + std::to_string(i));
  for (std::size_t i = 0; i < g1.size(); ++i)
    for (std::size_t j = 0; j < g1.size(); ++j) {
      const bool c1 = g1.at(i).y == g1.at(j).x;
      const bool c2 = g2.at(elem_map[i]).y == g2.at(elem_map[j]).x;
      if (c1 != c2) {
        rep.violation("composability differs at (" + std::to_string(i) + "," +
                       std::to_string(j) + ")");
        continue;
      }
      if (!c1) continue;
      try {
        if (elem_map[g1.compose(i, j)] != g2.compose(elem_map[i], elem_map[j]))
          rep.violation("composition is not preserved at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      } catch (const Error& err) {
        if (err.code() == Errc::WindowOverflow)
          rep.flag("composition skipped at (" + std::to_string(i) + "," + std::to_string(j) +
                   "): witness outside bound");
        else
          throw;
      }
    }
  return rep;
}

Groupoid reduction(const Groupoid& gpd, const std::vector<std::size_t>& U) {
  std::vector<bool> in_u(gpd.space().size(), false);
  for (std::size_t pt : U) in_u[pt] = true;
  Groupoid out = gpd;
  out.elems_.clear();
  out.index_.clear();
  for (std::size_t i = 0; i < gpd.size(); ++i) {
    const GroupoidElement& g = gpd.at(i);
    if (!in_u[g.x] || !in_u[g.y]) continue;
    out.index_[{g.x, g.q, g.y}] = out.elems_.size();
    out.elems_.push_back(g);
  }
  return out;
}

Report groupoid_axiom_check(const Groupoid& gpd) {
  Report rep;
  auto try_invert = [&](std::size_t i) -> std::optional<std::size_t> {
    try {
      return gpd.invert(i);
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  for (std::size_t i = 0; i < gpd.size(); ++i) {
    const auto inv = try_invert(i);
    if (!inv) {
      rep.violation("inverse missing for element " + std::to_string(i));
      continue;
    }
    const auto invinv = try_invert(*inv);
    if (!invinv || *invinv != i)
      rep.violation("double inversion fails at element " + std::to_string(i));
    // (g^{-1}, g) is composable and composes to the unit at the source.
    try {
      const std::size_t u = gpd.compose(*inv, i);
      if (u != gpd.unit_at(gpd.at(i).y))
        rep.violation("g^{-1} g is not the source unit at element " + std::to_string(i));
    } catch (const Error& err) {
      if (err.code() == Errc::WindowOverflow)
        rep.flag("unit composite skipped at " + std::to_string(i));
      else
        rep.violation("g^{-1} g undefined at element " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < gpd.size(); ++i)
    for (std::size_t j = 0; j < gpd.size(); ++j) {
      if (gpd.at(i).y != gpd.at(j).x) continue;
      std::size_t ij;
      try {
        ij = gpd.compose(i, j);
      } catch (const Error& err) {
        if (err.code() == Errc::WindowOverflow) {
          rep.flag("composite skipped at (" + std::to_string(i) + "," + std::to_string(j) + ")");
          continue;
        }
        rep.violation("composite missing at (" + std::to_string(i) + "," + std::to_string(j) +
                       ")");
        continue;
      }
      // Cancellation laws g^{-1}(gh) = h and (gh)h^{-1} = g.
      const auto invi = try_invert(i);
      const auto invj = try_invert(j);
      try {
        if (invi && gpd.compose(*invi, ij) != j)
          rep.violation("left cancellation fails at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
        if (invj && gpd.compose(ij, *invj) != i)
          rep.violation("right cancellation fails at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      } catch (const Error& err) {
        if (err.code() != Errc::WindowOverflow)
          rep.violation("cancellation composite missing at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
        else
          rep.flag("cancellation skipped at (" + std::to_string(i) + "," + std::to_string(j) +
                   ")");
      }
      // Associativity over all composable triples.
      for (std::size_t k = 0; k < gpd.size(); ++k) {
        if (gpd.at(j).y != gpd.at(k).x) continue;
        try {
          const std::size_t jk = gpd.compose(j, k);
          if (gpd.compose(ij, k) != gpd.compose(i, jk))
            rep.violation("associativity fails at (" + std::to_string(i) + "," +
                           std::to_string(j) + "," + std::to_string(k) + ")");
        } catch (const Error& err) {
          if (err.code() != Errc::WindowOverflow)
            rep.violation("associativity composite missing at a triple");
          else
            rep.flag("associativity skipped at a triple");
        }
      }
    }
  // x -> (x,e,x) bijects the occurring points onto the unit space. For a
  // full groupoid the occurring points are the whole path space.
  std::set<std::size_t> units;
  std::set<std::size_t> endpoints;
  for (std::size_t i = 0; i < gpd.size(); ++i) {
    const GroupoidElement& g = gpd.at(i);
    endpoints.insert(g.x);
    endpoints.insert(g.y);
    if (g.x == g.y && g.q.is_identity()) {
      units.insert(g.x);
      if (gpd.invert(i) != i) rep.violation("unit not self-inverse at " + std::to_string(i));
    }
  }
  if (units != endpoints)
    rep.violation("unit space does not biject with the occurring path-space points");
  return rep;
}

bool invariance_check(const Groupoid& gpd, const std::vector<std::size_t>& U) {
  std::vector<bool> in_u(gpd.space().size(), false);
  for (std::size_t pt : U) in_u[pt] = true;
  for (std::size_t i = 0; i < gpd.size(); ++i)
    if (in_u[gpd.at(i).y] && !in_u[gpd.at(i).x]) return false;
  return true;
}

Report psi_h_suite(const FilterSpace& fs, const MorphismSpace& ms, const Degree& bound,
                   const Degree& depth_bound) {
  Report rep;
  const PGraph& g = fs.graph();
  FilterActionSpace fa(fs);
  MorphismActionSpace ma(ms);
  const Groupoid gf = Groupoid::enumerate(fa, bound);
  const Groupoid gm = Groupoid::enumerate(ma, bound);
  std::vector<std::size_t> pmap;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto j = fs.index_of(to_filter(ms.at(i)));
    if (!j) {
      rep.violation("h image of point " + std::to_string(i) + " is not an enumerated filter");
      return rep;
    }
    pmap.push_back(*j);
  }
  std::vector<std::size_t> psi;
  try {
    psi = psi_h_element_map(gm, gf, pmap);
  } catch (const Error& e) {
    rep.violation(e.what());
    return rep;
  }
  rep.merge(check_isomorphism(gm, gf, psi));

  // Image law on singleton-cylinder basis sets over all witness pairs.
  // Precomputed point masks and per-witness live lists keep this linear in
  // the number of relation-live elements.
  if (fs.size() <= 64) {
    std::vector<std::uint64_t> um(g.size(), 0), uf(g.size(), 0);
    for (MorphismId a = 0; a < g.size(); ++a) {
      const CylinderSet c{{a}, {}};
      for (std::size_t p = 0; p < ms.size(); ++p)
        if (ma.in_cylinder(p, c)) {
          um[a] |= std::uint64_t(1) << p;
          uf[a] |= std::uint64_t(1) << pmap[p];
        }
    }
    struct Live {
      std::size_t x, y, id;
    };
    for (const Degree& mm : gm.degree_pool())
      for (const Degree& nn : gm.degree_pool()) {
        const GroupElement q = quotient(mm, nn);
        std::vector<Live> live_m, live_f;
        for (std::size_t i = 0; i < gm.size(); ++i) {
          const auto& el = gm.at(i);
          if (!(el.q == q)) continue;
          const auto xm = gm.act_of(el.x, mm);
          const auto yn = gm.act_of(el.y, nn);
          if (xm && yn && *xm == *yn) live_m.push_back({el.x, el.y, psi[i]});
        }
        for (std::size_t i = 0; i < gf.size(); ++i) {
          const auto& el = gf.at(i);
          if (!(el.q == q)) continue;
          const auto xm = gf.act_of(el.x, mm);
          const auto yn = gf.act_of(el.y, nn);
          if (xm && yn && *xm == *yn) live_f.push_back({el.x, el.y, i});
        }
        std::vector<std::size_t> lhs, rhs;
        for (MorphismId a = 0; a < g.size(); ++a)
          for (MorphismId b = 0; b < g.size(); ++b) {
            lhs.clear();
            rhs.clear();
            for (const Live& l : live_m)
              if ((um[a] >> l.x & 1) && (um[b] >> l.y & 1)) lhs.push_back(l.id);
            for (const Live& l : live_f)
              if ((uf[a] >> l.x & 1) && (uf[b] >> l.y & 1)) rhs.push_back(l.id);
            std::sort(lhs.begin(), lhs.end());
            std::sort(rhs.begin(), rhs.end());
            if (lhs != rhs)
              rep.violation("basis image law fails for Z(Z(" + g.at(a).name + "), " + mm.str() +
                             ", " + nn.str() + ", Z(" + g.at(b).name + "))");
          }
      }
  } else {
    for (MorphismId a = 0; a < g.size(); ++a)
      for (MorphismId b = 0; b < g.size(); ++b) {
        const auto um = cylinder_points(ma, CylinderSet{{a}, {}});
        const auto vm = cylinder_points(ma, CylinderSet{{b}, {}});
        std::vector<std::size_t> hu, hv;
        for (std::size_t p : um) hu.push_back(pmap[p]);
        for (std::size_t p : vm) hv.push_back(pmap[p]);
        for (const Degree& mm : gm.degree_pool())
          for (const Degree& nn : gm.degree_pool()) {
            const BasisSet zm{um, mm, nn, vm};
            const BasisSet zf{hu, mm, nn, hv};
            std::set<std::size_t> lhs, rhs;
            for (std::size_t i = 0; i < gm.size(); ++i)
              if (basis_membership(gm, gm.at(i), zm)) lhs.insert(psi[i]);
            for (std::size_t i = 0; i < gf.size(); ++i)
              if (basis_membership(gf, gf.at(i), zf)) rhs.insert(i);
            if (lhs != rhs)
              rep.violation("basis image law fails for Z(Z(" + g.at(a).name + "), " + mm.str() +
                             ", " + nn.str() + ", Z(" + g.at(b).name + "))");
          }
      }
  }

  // Boundary reductions correspond elementwise.
  std::vector<std::size_t> bf, bm;
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (is_boundary(g, fs.at(i), depth_bound).value) bf.push_back(i);
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (is_boundary_morphism(ms.at(i), depth_bound).value) bm.push_back(i);
  const Groupoid red_m = reduction(gm, bm);
  const Groupoid red_f = reduction(gf, bf);
  if (red_m.size() != red_f.size())
    rep.violation("boundary reductions have different sizes");
  std::set<std::size_t> image, target;
  for (std::size_t i = 0; i < gm.size(); ++i) {
    const auto& el = gm.at(i);
    if (std::count(bm.begin(), bm.end(), el.x) && std::count(bm.begin(), bm.end(), el.y))
      image.insert(psi[i]);
  }
  for (std::size_t i = 0; i < gf.size(); ++i) {
    const auto& el = gf.at(i);
    if (std::count(bf.begin(), bf.end(), el.x) && std::count(bf.begin(), bf.end(), el.y))
      target.insert(i);
  }
  if (image != target) rep.violation("boundary reductions do not correspond under psi_h");
  return rep;
}

Report tau_equality_check(const Groupoid& gpd, const Degree& bound) {
  Report rep;
  const ActionSpace& space = gpd.space();
  const PGraph& g = space.graph();
  const auto& monoid = g.monoid();
  if (monoid.kind() != MonoidKind::Grid) {
    rep.violation("tau equality is a k-graph statement; monoid is " + monoid.desc().str());
    return rep;
  }
  // Membership vector of a basis set over the enumerated groupoid.
  auto z_set = [&](const BasisSet& z) {
    std::vector<bool> out(gpd.size(), false);
    for (std::size_t i = 0; i < gpd.size(); ++i) out[i] = basis_membership(gpd, gpd.at(i), z);
    return out;
  };
  auto zyee_set = [&](const YeeBasisSet& z) {
    std::vector<bool> out(gpd.size(), false);
    for (std::size_t i = 0; i < gpd.size(); ++i) out[i] = yee_basis_membership(gpd, gpd.at(i), z);
    return out;
  };
  auto point_set_of = [&](MorphismId lam) {
    return cylinder_points(space, CylinderSet{{lam}, {}});
  };

  // (a) Sampled Z_Yee sets are unions of cylinder-based basis sets:
  // Z_Yee(A *_s B, m) = union over source-matched (lam, mu) of
  // Z(Z(lam), d(lam), d(mu), Z(mu)).
  std::vector<std::vector<std::pair<MorphismId, MorphismId>>> samples;
  for (MorphismId lam = 0; lam < g.size(); ++lam)
    for (MorphismId mu = 0; mu < g.size(); ++mu)
      if (g.at(lam).source == g.at(mu).source &&
          monoid.bounded_by(g.at(lam).degree, bound) && monoid.bounded_by(g.at(mu).degree, bound))
        samples.push_back({{lam, mu}});
  // One bulk sample per occurring difference: all pairs with that q.
  std::map<GroupElement, std::vector<std::pair<MorphismId, MorphismId>>> bulk;
  for (const auto& s : samples)
    bulk[quotient(g.at(s[0].first).degree, g.at(s[0].second).degree)].push_back(s[0]);
  for (const auto& [q, pairs] : bulk) samples.push_back(pairs);

  for (const auto& pairs : samples) {
    const GroupElement m =
        quotient(g.at(pairs[0].first).degree, g.at(pairs[0].second).degree);
    // Restrict to the pairs with degree difference m, as in the definition.
    YeeBasisSet zy;
    zy.m = m;
    for (const auto& p : pairs)
      if (quotient(g.at(p.first).degree, g.at(p.second).degree) == m) zy.pairs.push_back(p);
    const std::vector<bool> lhs = zyee_set(zy);
    std::vector<bool> rhs(gpd.size(), false);
    for (const auto& [lam, mu] : zy.pairs) {
      BasisSet z{point_set_of(lam), g.at(lam).degree, g.at(mu).degree, point_set_of(mu)};
      const std::vector<bool> part = z_set(z);
      for (std::size_t i = 0; i < gpd.size(); ++i) rhs[i] = rhs[i] || part[i];
    }
    for (std::size_t i = 0; i < gpd.size(); ++i)
      if (lhs[i] != rhs[i]) {
        rep.violation("tau_Yee subset tau fails: element " + std::to_string(i) +
                       (lhs[i] ? " in Z_Yee only" : " in the cylinder union only"));
        break;
      }
  }

  // (b) Every cylinder-based basis set is Z_Yee({kappa} *_s {lambda}, .)
  // minus Z_Yee(F, .) with F = {(kappa zeta, lambda zeta) : kappa zeta in K
  // or lambda zeta in L}.
  for (MorphismId kappa = 0; kappa < g.size(); ++kappa)
    for (MorphismId lambda = 0; lambda < g.size(); ++lambda) {
      if (g.at(kappa).source != g.at(lambda).source) continue;
      if (!monoid.bounded_by(g.at(kappa).degree, bound) || !monoid.bounded_by(g.at(lambda).degree, bound))
        continue;
      const GroupElement m = quotient(g.at(kappa).degree, g.at(lambda).degree);
      // K and L range over the empty set and singleton subsets of the cones.
      std::vector<std::vector<MorphismId>> k_choices = {{}};
      for (MorphismId k : g.cone(kappa))
        if (k != kappa) k_choices.push_back({k});
      std::vector<std::vector<MorphismId>> l_choices = {{}};
      for (MorphismId l : g.cone(lambda))
        if (l != lambda) l_choices.push_back({l});
      for (const auto& K : k_choices)
        for (const auto& L : l_choices) {
          BasisSet z{cylinder_points(space, CylinderSet{{kappa}, K}), g.at(kappa).degree,
                     g.at(lambda).degree, cylinder_points(space, CylinderSet{{lambda}, L})};
          YeeBasisSet whole{{{kappa, lambda}}, m};
          YeeBasisSet correction;
          correction.m = m;
          for (MorphismId zeta = 0; zeta < g.size(); ++zeta) {
            if (g.at(zeta).range != g.at(kappa).source) continue;
            const auto kz = g.compose(kappa, zeta);
            const auto lz = g.compose(lambda, zeta);
            if (!kz || !lz) continue;
            const bool in_k = std::count(K.begin(), K.end(), *kz) > 0;
            const bool in_l = std::count(L.begin(), L.end(), *lz) > 0;
            if (in_k || in_l) correction.pairs.push_back({*kz, *lz});
          }
          const std::vector<bool> lhs = z_set(z);
          const std::vector<bool> w = zyee_set(whole);
          const std::vector<bool> c = zyee_set(correction);
          for (std::size_t i = 0; i < gpd.size(); ++i)
            if (lhs[i] != (w[i] && !c[i])) {
              rep.violation("tau subset tau_Yee fails at element " + std::to_string(i) +
                             " for kappa=" + g.at(kappa).name + " lambda=" + g.at(lambda).name);
              break;
            }
        }
    }
  return rep;
}

}  // namespace pgv
