#ifndef PGV_MORPHISMS_HPP
#define PGV_MORPHISMS_HPP

#include <map>
#include <optional>
#include <vector>

#include "pgv/filters.hpp"
#include "pgv/pgraph.hpp"

namespace pgv {

// A degree-preserving functor from a path prototype Omega into the graph,
// stored through its unit-anchored values x(e,q). Values are kept for every
// q below both the domain class and the storage window; eval reconstructs
// all other values through unique factorization.
class PathMorphism {
 public:
  PathMorphism(const PGraph& g, DegreeClass domain_class, Degree storage_window,
               std::map<Degree, MorphismId> values);

  const PGraph& graph() const { return *graph_; }
  const DegreeClass& domain_class() const { return class_; }
  const Degree& storage_window() const { return storage_window_; }
  const std::map<Degree, MorphismId>& values() const { return values_; }

  bool has_degree(const Degree& q) const { return values_.count(q) > 0; }
  MorphismId value_at(const Degree& q) const;

  // The unique iota with x(e,q) = x(e,p) iota; requires p <= q stored.
  MorphismId eval(const Degree& p, const Degree& q) const;

  friend bool operator==(const PathMorphism& a, const PathMorphism& b) {
    return a.class_ == b.class_ && a.values_ == b.values_;
  }

  std::string str() const;

 private:
  const PGraph* graph_;
  DegreeClass class_;
  Degree storage_window_;
  std::map<Degree, MorphismId> values_;
};

// All PathMorphism invariants: anchored unit, degree preservation, coherence
// of values along divisibility, the exact stored degree set, and full
// functoriality of eval over composable domain triples.
Report validate_graph_morphism(const PathMorphism& x);

// (x, p) lies in the action domain, i.e. (e,p) is in dom(x). Equivalent to
// "p <= m_n eventually" for every (equivalently some) presenting sequence.
bool is_actionable(const PathMorphism& x, const Degree& p);

// (x.m)(p,q) = x(mp, mq); the domain class is left-divided by m.
PathMorphism act_morphism(const PathMorphism& x, const Degree& m);

const DegreeClass& degree_of(const PathMorphism& x);

// h: the image x(e dom x), always a filter.
Filter to_filter(const PathMorphism& x);

// The chain construction behind h^{-1}: a prec-increasing chain through y in
// the given enumeration order, together with the degree class of its degree
// sequence.
struct FilterChain {
  std::vector<MorphismId> chain;
  DegreeClass cls;
};
FilterChain principal_chain(const PGraph& g, const Filter& y, const std::vector<std::size_t>& order);

// h^{-1}: the unique PathMorphism with to_filter(from_filter(y)) = y.
PathMorphism from_filter(const PGraph& g, const Filter& y);
PathMorphism from_filter_with_order(const PGraph& g, const Filter& y,
                                    const std::vector<std::size_t>& order);

// Boundary condition on the morphism side: against every finite exhaustive
// set within the depth bound, some nu in E satisfies x(m, m d(nu)) = nu.
BoundaryResult is_boundary_morphism(const PathMorphism& x, const Degree& depth_bound);

// Membership in Z(K1 \ K2) computed from the stored image.
bool morphism_cylinder_membership(const PathMorphism& x, const CylinderSet& c);

// The rank-k prototype translation (re-exported degree-module formulas):
// Omega_{k,m} corresponds to Omega_{N^k,(m_n)}.
IncreasingSequence omega_class_to_sequence(const DegreeClass& c);
DegreeClass omega_sequence_to_class(const DegreeMonoid& monoid, const IncreasingSequence& s);

// The morphism path space, enumerated as h^{-1} of the filter space
// (canonical order matches).
class MorphismSpace {
 public:
  static MorphismSpace from_filters(const FilterSpace& fs);

  const PGraph& graph() const { return *graph_; }
  std::size_t size() const { return points_.size(); }
  const PathMorphism& at(std::size_t i) const { return points_[i]; }
  std::optional<std::size_t> index_of(const PathMorphism& x) const;
  std::optional<std::size_t> act_index(std::size_t i, const Degree& m) const;

 private:
  const PGraph* graph_ = nullptr;
  std::vector<PathMorphism> points_;
};

// S1/S2 for act_morphism over the window-closed fragment.
Report morphism_action_axioms_check(const MorphismSpace& space);

// The full conjugacy suite for h = to_filter between the enumerated spaces:
// C1 (both round trips are the identity on every point), C2 (h maps action
// domains onto action domains degree by degree) and C3 (equivariance on
// every in-window pair).
Report conjugacy_check(const FilterSpace& fs, const MorphismSpace& ms);

}  // namespace pgv

#endif
