#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "pgv/graphspec.hpp"
#include "pgv/groupoid.hpp"

using namespace pgv;
using namespace pgv::fixtures;

namespace {

struct Spaces {
  FilterSpace fs;
  MorphismSpace ms;
  FilterActionSpace fa;
  MorphismActionSpace ma;

  explicit Spaces(const PGraph& g)
      : fs(FilterSpace::enumerate(g)),
        ms(MorphismSpace::from_filters(fs)),
        fa(fs),
        ma(ms) {}
};

Degree bound_for(const PGraph& g) {
  if (g.window()) return *g.window();
  if (g.monoid().kind() == MonoidKind::Free) {
    std::size_t len = 0;
    for (const Degree& d : g.degree_set()) len = std::max(len, d.word().size());
    std::string w(len, g.monoid().desc().letters[0]);
    return g.monoid().make_word(w);
  }
  std::vector<int> coords(g.monoid().desc().rank, 0);
  for (const Degree& d : g.degree_set())
    for (std::size_t i = 0; i < coords.size(); ++i)
      coords[i] = std::max(coords[i], d.coords()[i]);
  return g.monoid().make_grid(coords);
}

std::vector<std::size_t> point_map_h(const Spaces& sp) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sp.ms.size(); ++i)
    out.push_back(*sp.fs.index_of(to_filter(sp.ms.at(i))));
  return out;
}

std::vector<std::size_t> boundary_points(const Spaces& sp, const Degree& depth) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sp.fs.size(); ++i)
    if (is_boundary(sp.fs.graph(), sp.fs.at(i), depth).value) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("make_element: valid, unit and failing cases on E1") {
  const PGraph g = e1();
  Spaces sp(g);
  const auto& m = g.monoid();
  Filter ve{{g.require("v"), g.require("e")}};
  std::sort(ve.elems.begin(), ve.elems.end());
  const std::size_t i_ve = *sp.fs.index_of(ve);
  const std::size_t i_w = *sp.fs.index_of(Filter{{g.require("w")}});
  const std::size_t i_v = *sp.fs.index_of(Filter{{g.require("v")}});

  const GroupoidElement el =
      make_element(sp.fa, i_ve, m.make_grid({1}), m.make_grid({0}), i_w);
  CHECK(el.q == GroupElement::grid({1}));
  const GroupoidElement unit =
      make_element(sp.fa, i_v, m.identity(), m.identity(), i_v);
  CHECK(unit.q.is_identity());
  CHECK_THROWS_AS(make_element(sp.fa, i_v, m.identity(), m.identity(), i_w), Error);
}

TEST_CASE("enumerate: E1 bound 1 has 5 elements") {
  const PGraph g = e1();
  Spaces sp(g);
  const Groupoid gpd = Groupoid::enumerate(sp.fa, grid(1).make_grid({1}));
  CHECK(gpd.size() == 5);
  // 3 units + the edge element and its inverse
  int units = 0, pos = 0, neg = 0;
  for (std::size_t i = 0; i < gpd.size(); ++i) {
    if (gpd.at(i).q.is_identity())
      ++units;
    else if (gpd.at(i).q == GroupElement::grid({1}))
      ++pos;
    else if (gpd.at(i).q == GroupElement::grid({-1}))
      ++neg;
  }
  CHECK(units == 3);
  CHECK(pos == 1);
  CHECK(neg == 1);
}

TEST_CASE("enumerate: single vertex graph has one element") {
  PGraphBuilder b(grid(1));
  b.add_vertex("u");
  const PGraph g = b.finalize();
  Spaces sp(g);
  CHECK(Groupoid::enumerate(sp.fa, grid(1).make_grid({0})).size() == 1);
}

TEST_CASE("enumerate: N-loop window 2 relates every pair of filters") {
  const PGraph g = nloop(2);
  Spaces sp(g);
  const Groupoid gpd = Groupoid::enumerate(sp.fa, grid(1).make_grid({2}));
  CHECK(gpd.size() == 9);
  // element equality is witness independent: (a^2, 1, a^1) also has witness (2,1)
  for (std::size_t i = 0; i < gpd.size(); ++i) {
    const auto& el = gpd.at(i);
    for (const Degree& mm : gpd.degree_pool())
      for (const Degree& nn : gpd.degree_pool()) {
        const auto xm = gpd.act_of(el.x, mm);
        const auto yn = gpd.act_of(el.y, nn);
        if (!xm || !yn || *xm != *yn) continue;
        if (!(quotient(mm, nn) == el.q)) continue;
        // same triple must resolve to the same element index
        CHECK(*gpd.find(el.x, el.q, el.y) == i);
      }
  }
}

TEST_CASE("composition and inversion laws with unit absorption") {
  const PGraph g = e1();
  Spaces sp(g);
  const Groupoid gpd = Groupoid::enumerate(sp.fa, grid(1).make_grid({1}));
  for (std::size_t i = 0; i < gpd.size(); ++i) {
    const std::size_t inv = gpd.invert(i);
    // g g^{-1} = unit at range
    CHECK(gpd.compose(i, inv) == gpd.unit_at(gpd.at(i).x));
    CHECK(gpd.compose(inv, i) == gpd.unit_at(gpd.at(i).y));
    // unit absorption on both sides
    CHECK(gpd.compose(gpd.unit_at(gpd.at(i).x), i) == i);
    CHECK(gpd.compose(i, gpd.unit_at(gpd.at(i).y)) == i);
  }
  CHECK_THROWS_AS(gpd.compose(0, gpd.size() - 1) + 0, Error);  // mismatch somewhere
}

TEST_CASE("groupoid axioms hold over both spaces of every example") {
  for (const PGraph& g : {e1(), e3({1, 1}), e3({2, 2}), nloop(3), bouquet2(1),
                          random_2graph(42, {2, 2})}) {
    Spaces sp(g);
    const Degree bound = bound_for(g);
    const Groupoid gf = Groupoid::enumerate(sp.fa, bound);
    const Groupoid gm = Groupoid::enumerate(sp.ma, bound);
    CHECK(groupoid_axiom_check(gf).ok());
    CHECK(groupoid_axiom_check(gm).ok());
    CHECK(gf.size() == gm.size());
  }
}

TEST_CASE("free-monoid prototype groupoid over the free group") {
  const PGraph g = build_omega(free_ab(), free_ab().make_word("ab"));
  Spaces sp(g);
  const Groupoid gpd = Groupoid::enumerate(sp.fa, bound_for(g));
  CHECK(groupoid_axiom_check(gpd).ok());
  // On a prototype both witnesses prefix a common word, so the reduced
  // quotient is single-signed; inverse letters occur and every q agrees
  // with the reduced quotient of its witness.
  bool has_negative = false;
  for (std::size_t i = 0; i < gpd.size(); ++i) {
    const auto& el = gpd.at(i);
    CHECK(el.q == quotient(el.witness.first, el.witness.second));
    for (const auto& l : el.q.word()) has_negative |= l.inverse;
    for (std::size_t a = 0; a + 1 < el.q.word().size(); ++a)
      CHECK(el.q.word()[a].inverse == el.q.word()[a + 1].inverse);
  }
  CHECK(has_negative);
}

TEST_CASE("a mutated element list fails the axiom check") {
  const PGraph g = e1();
  Spaces sp(g);
  const Groupoid gpd = Groupoid::enumerate(sp.fa, grid(1).make_grid({1}));
  // drop the inverse of the edge element
  std::vector<GroupoidElement> elems;
  for (std::size_t i = 0; i < gpd.size(); ++i)
    if (!(gpd.at(i).q == GroupElement::grid({-1}))) elems.push_back(gpd.at(i));
  const Groupoid broken = Groupoid::from_elements(sp.fa, gpd.bound(), elems);
  CHECK_FALSE(groupoid_axiom_check(broken).ok());
}

TEST_CASE("psi_h is an isomorphism on every example") {
  for (const PGraph& g : {e1(), e3({1, 1}), e3({2, 2}), nloop(3), bouquet2(1),
                          random_2graph(42, {2, 2})}) {
    Spaces sp(g);
    const Degree bound = bound_for(g);
    const Groupoid gm = Groupoid::enumerate(sp.ma, bound);
    const Groupoid gf = Groupoid::enumerate(sp.fa, bound);
    const auto psi = psi_h_element_map(gm, gf, point_map_h(sp));
    CHECK(check_isomorphism(gm, gf, psi).ok());
  }
}

TEST_CASE("identity map passes; a swapped psi image fails with a witness") {
  const PGraph g = e1();
  Spaces sp(g);
  const Degree bound = grid(1).make_grid({1});
  const Groupoid gm = Groupoid::enumerate(sp.ma, bound);
  const Groupoid gf = Groupoid::enumerate(sp.fa, bound);
  // identity on the filter groupoid
  std::vector<std::size_t> ident(gf.size());
  for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = i;
  CHECK(check_isomorphism(gf, gf, ident).ok());
  // swap two images of psi_h
  auto psi = psi_h_element_map(gm, gf, point_map_h(sp));
  std::swap(psi[0], psi[1]);
  const Report rep = check_isomorphism(gm, gf, psi);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("basis membership: Z and Z_Yee examples on E1") {
  const PGraph g = e1();
  Spaces sp(g);
  const auto& m = g.monoid();
  const Groupoid gpd = Groupoid::enumerate(sp.fa, grid(1).make_grid({1}));
  Filter ve{{g.require("v"), g.require("e")}};
  std::sort(ve.elems.begin(), ve.elems.end());
  const std::size_t i_ve = *sp.fs.index_of(ve);
  const std::size_t i_w = *sp.fs.index_of(Filter{{g.require("w")}});
  const std::size_t el = *gpd.find(i_ve, GroupElement::grid({1}), i_w);

  std::vector<std::size_t> whole;
  for (std::size_t i = 0; i < sp.fs.size(); ++i) whole.push_back(i);
  const BasisSet z{cylinder_points(sp.fa, CylinderSet{{g.require("e")}, {}}),
                   m.make_grid({1}), m.make_grid({0}), whole};
  CHECK(basis_membership(gpd, gpd.at(el), z));
  // units sit in Z(whole, e, e, whole)
  const BasisSet zu{whole, m.identity(), m.identity(), whole};
  for (std::size_t i = 0; i < gpd.size(); ++i)
    CHECK(basis_membership(gpd, gpd.at(i), zu) == gpd.at(i).q.is_identity());

  // Z_Yee({(e,w)}, 1) catches the edge element via t = {w}
  const YeeBasisSet zy{{{g.require("e"), g.require("w")}}, GroupElement::grid({1})};
  CHECK(yee_basis_membership(gpd, gpd.at(el), zy));
  CHECK_FALSE(yee_basis_membership(gpd, gpd.at(gpd.unit_at(i_w)), zy));
}

TEST_CASE("basis image law on sampled cylinders") {
  for (const PGraph& g : {e1(), e3({1, 1})}) {
    Spaces sp(g);
    const Degree bound = bound_for(g);
    const Groupoid gm = Groupoid::enumerate(sp.ma, bound);
    const Groupoid gf = Groupoid::enumerate(sp.fa, bound);
    const auto pmap = point_map_h(sp);
    const auto psi = psi_h_element_map(gm, gf, pmap);
    for (MorphismId a = 0; a < g.size(); ++a)
      for (MorphismId b = 0; b < g.size(); ++b) {
        const CylinderSet cu{{a}, {}};
        const CylinderSet cv{{b}, {}};
        for (const Degree& mm : gm.degree_pool())
          for (const Degree& nn : gm.degree_pool()) {
            const BasisSet zm{cylinder_points(sp.ma, cu), mm, nn, cylinder_points(sp.ma, cv)};
            // h(U) computed by transporting the point sets
            std::vector<std::size_t> hu, hv;
            for (std::size_t p : zm.U) hu.push_back(pmap[p]);
            for (std::size_t p : zm.V) hv.push_back(pmap[p]);
            const BasisSet zf{hu, mm, nn, hv};
            std::set<std::size_t> lhs, rhs;
            for (std::size_t i = 0; i < gm.size(); ++i)
              if (basis_membership(gm, gm.at(i), zm)) lhs.insert(psi[i]);
            for (std::size_t i = 0; i < gf.size(); ++i)
              if (basis_membership(gf, gf.at(i), zf)) rhs.insert(i);
            CHECK(lhs == rhs);
          }
      }
  }
}

TEST_CASE("reduction: boundary, whole, singleton") {
  const PGraph g = e1();
  Spaces sp(g);
  const Groupoid gpd = Groupoid::enumerate(sp.fa, grid(1).make_grid({1}));
  const auto boundary = boundary_points(sp, grid(1).make_grid({1}));
  REQUIRE(boundary.size() == 2);
  const Groupoid red = reduction(gpd, boundary);
  CHECK(red.size() == 4);
  CHECK(groupoid_axiom_check(red).ok());

  std::vector<std::size_t> whole;
  for (std::size_t i = 0; i < sp.fs.size(); ++i) whole.push_back(i);
  CHECK(reduction(gpd, whole).size() == gpd.size());

  const std::size_t i_v = *sp.fs.index_of(Filter{{g.require("v")}});
  CHECK(reduction(gpd, {i_v}).size() == 1);
}

TEST_CASE("reduction to an invariant set equals the source preimage") {
  const PGraph g = e1();
  Spaces sp(g);
  const Groupoid gpd = Groupoid::enumerate(sp.fa, grid(1).make_grid({1}));
  const auto boundary = boundary_points(sp, grid(1).make_grid({1}));
  REQUIRE(invariance_check(gpd, boundary));
  std::vector<bool> in_u(sp.fs.size(), false);
  for (std::size_t p : boundary) in_u[p] = true;
  const Groupoid red = reduction(gpd, boundary);
  std::set<std::tuple<std::size_t, GroupElement, std::size_t>> lhs, rhs;
  for (std::size_t i = 0; i < red.size(); ++i)
    lhs.insert({red.at(i).x, red.at(i).q, red.at(i).y});
  for (std::size_t i = 0; i < gpd.size(); ++i)
    if (in_u[gpd.at(i).y]) rhs.insert({gpd.at(i).x, gpd.at(i).q, gpd.at(i).y});
  CHECK(lhs == rhs);
}

TEST_CASE("invariance agreement between the groupoid and the action") {
  for (const PGraph& g : {e1(), e3({1, 1}), nloop(3), bouquet2(1)}) {
    Spaces sp(g);
    const Degree bound = bound_for(g);
    const Groupoid gpd = Groupoid::enumerate(sp.fa, bound);
    std::vector<std::vector<std::size_t>> candidates;
    candidates.push_back(boundary_points(sp, bound));
    std::vector<std::size_t> whole;
    for (std::size_t i = 0; i < sp.fs.size(); ++i) whole.push_back(i);
    candidates.push_back(whole);
    for (std::size_t i = 0; i < sp.fs.size(); ++i) candidates.push_back({i});
    for (const auto& u : candidates)
      CHECK(invariance_check(gpd, u) == is_invariant_set(sp.fs, u));
  }
}

TEST_CASE("boundary reductions correspond under psi_h") {
  for (const PGraph& g : {e1(), e3({1, 1}), e3({2, 2})}) {
    Spaces sp(g);
    const Degree bound = bound_for(g);
    const Groupoid gm = Groupoid::enumerate(sp.ma, bound);
    const Groupoid gf = Groupoid::enumerate(sp.fa, bound);
    const auto pmap = point_map_h(sp);
    const auto psi = psi_h_element_map(gm, gf, pmap);
    // boundary points on each side, computed with that side's test
    std::vector<std::size_t> bf = boundary_points(sp, bound);
    std::vector<std::size_t> bm;
    for (std::size_t i = 0; i < sp.ms.size(); ++i)
      if (is_boundary_morphism(sp.ms.at(i), bound).value) bm.push_back(i);
    const Groupoid red_m = reduction(gm, bm);
    const Groupoid red_f = reduction(gf, bf);
    REQUIRE(red_m.size() == red_f.size());
    // elementwise correspondence through psi
    std::set<std::size_t> image;
    for (std::size_t i = 0; i < gm.size(); ++i) {
      const auto& el = gm.at(i);
      const bool in_red =
          std::count(bm.begin(), bm.end(), el.x) && std::count(bm.begin(), bm.end(), el.y);
      if (in_red) image.insert(psi[i]);
    }
    std::set<std::size_t> target;
    for (std::size_t i = 0; i < gf.size(); ++i) {
      const auto& el = gf.at(i);
      if (std::count(bf.begin(), bf.end(), el.x) && std::count(bf.begin(), bf.end(), el.y))
        target.insert(*gf.find(el.x, el.q, el.y));
    }
    CHECK(image == target);
  }
}

TEST_CASE("tau equality holds on E1 and E3 (1,1)") {
  {
    const PGraph g = e1();
    Spaces sp(g);
    const Groupoid gm = Groupoid::enumerate(sp.ma, grid(1).make_grid({1}));
    CHECK(tau_equality_check(gm, grid(1).make_grid({1})).ok());
  }
  {
    const PGraph g = e3({1, 1});
    Spaces sp(g);
    const Groupoid gm = Groupoid::enumerate(sp.ma, grid(2).make_grid({1, 1}));
    CHECK(tau_equality_check(gm, grid(2).make_grid({1, 1})).ok());
  }
}

TEST_CASE("tau equality rejects a non-grid monoid") {
  const PGraph g = build_omega(free_ab(), free_ab().make_word("a"));
  Spaces sp(g);
  const Groupoid gpd = Groupoid::enumerate(sp.fa, g.monoid().make_word("a"));
  CHECK_FALSE(tau_equality_check(gpd, g.monoid().make_word("a")).ok());
}
