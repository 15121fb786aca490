#ifndef PGV_FILTERS_HPP
#define PGV_FILTERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "pgv/pgraph.hpp"

namespace pgv {

// A point of the filter path space: a nonempty, hereditary, directed set of
// morphisms, stored sorted. All elements share their range vertex.
struct Filter {
  std::vector<MorphismId> elems;

  bool contains(MorphismId id) const;
  friend auto operator<=>(const Filter&, const Filter&) = default;
  std::string str(const PGraph& g) const;
};

// Basic (cl)open set Z(K1 \ K2) = {x : K1 in x, x disjoint from K2}.
struct CylinderSet {
  std::vector<MorphismId> k1, k2;
};

// Lists every violated filter axiom; empty report means x is a filter.
// Directedness is window-adjusted: inside a window the witness of degree
// d(mu) v d(nu) must be present, which makes window filters exactly the
// traces of filters of the presented graph.
Report filter_violations(const PGraph& g, const std::vector<MorphismId>& elems);
bool is_filter(const PGraph& g, const std::vector<MorphismId>& elems);

// The principal filter of divisors of lam.
Filter principal(const PGraph& g, MorphismId lam);

// The unique unit in x.
VertexId range_of(const PGraph& g, const Filter& x);

// x -> {mu : lam mu in x}; requires lam in x.
Filter shift_down(const PGraph& g, MorphismId lam, const Filter& x);

// x -> {zeta : zeta prec lam mu for some mu in x}; requires s(lam) = r(x).
// Throws WindowOverflow when some lam mu leaves the window.
Filter shift_up(const PGraph& g, MorphismId lam, const Filter& x);

// The shift semigroup action T^m: defined when x meets Lambda^m, in which
// case it shifts down by the unique element there.
bool act_defined(const PGraph& g, const Filter& x, const Degree& m);
Filter act(const PGraph& g, const Filter& x, const Degree& m);

// The enumerated filter path space in canonical order.
class FilterSpace {
 public:
  static FilterSpace enumerate(const PGraph& g);

  const PGraph& graph() const { return *graph_; }
  std::size_t size() const { return filters_.size(); }
  const Filter& at(std::size_t i) const { return filters_[i]; }
  std::optional<std::size_t> index_of(const Filter& x) const;
  // act + index lookup; nullopt when (x, m) is outside the action domain.
  std::optional<std::size_t> act_index(std::size_t i, const Degree& m) const;

 private:
  const PGraph* graph_ = nullptr;
  std::vector<Filter> filters_;
};

// S1, S2 and directedness of the action over every in-window triple.
// Composites leaving the window are skipped with a flag.
Report action_axioms_check(const FilterSpace& space);

bool cylinder_membership(const PGraph& g, const Filter& x, const CylinderSet& c);
std::vector<std::size_t> cylinder_enumerate(const FilterSpace& space, const CylinderSet& c);

// Maximality among the enumerated filters.
bool is_ultrafilter(const FilterSpace& space, std::size_t i);

// E is exhaustive when every morphism ranged in r(E) has a common extension
// with some member of E.
bool is_exhaustive(const PGraph& g, const std::vector<MorphismId>& E);

// Results of the bounded boundary searches. `truncated` marks answers that
// depended on the window or depth bound ("boundary within bound").
struct BoundaryResult {
  bool value = false;
  bool truncated = false;
};

// Extendability of mu in x against every finite exhaustive set drawn from
// s(mu)Lambda with degrees at most depth_bound. A single maximal candidate
// set decides it: the depth-capped cone minus the good extensions.
BoundaryResult is_extendable(const PGraph& g, MorphismId mu, const Filter& x,
                             const Degree& depth_bound);

// Spielberg's characterization: x is a boundary filter iff every mu in x is
// extendable.
BoundaryResult is_boundary(const PGraph& g, const Filter& x, const Degree& depth_bound);

// U is invariant when act(x,m) = act(y,n) with y in U forces x in U.
bool is_invariant_set(const FilterSpace& space, const std::vector<std::size_t>& U);

}  // namespace pgv

#endif
