#ifndef PGV_GROUPOID_HPP
#define PGV_GROUPOID_HPP

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "pgv/filters.hpp"
#include "pgv/morphisms.hpp"

namespace pgv {

// Uniform point-indexed view of a path space carrying the shift action, so
// the groupoid machinery runs identically over filters and graph morphisms.
class ActionSpace {
 public:
  virtual ~ActionSpace() = default;
  virtual const PGraph& graph() const = 0;
  virtual std::size_t size() const = 0;
  virtual std::optional<std::size_t> act(std::size_t pt, const Degree& m) const = 0;
  // lam . t with s(lam) = r(t); nullopt when the result leaves the window.
  virtual std::optional<std::size_t> prepend(MorphismId lam, std::size_t pt) const = 0;
  virtual VertexId range(std::size_t pt) const = 0;
  virtual bool in_cylinder(std::size_t pt, const CylinderSet& c) const = 0;
  virtual std::string label(std::size_t pt) const = 0;
};

class FilterActionSpace final : public ActionSpace {
 public:
  explicit FilterActionSpace(const FilterSpace& fs) : fs_(&fs) {}
  const FilterSpace& filters() const { return *fs_; }
  const PGraph& graph() const override { return fs_->graph(); }
  std::size_t size() const override { return fs_->size(); }
  std::optional<std::size_t> act(std::size_t pt, const Degree& m) const override;
  std::optional<std::size_t> prepend(MorphismId lam, std::size_t pt) const override;
  VertexId range(std::size_t pt) const override;
  bool in_cylinder(std::size_t pt, const CylinderSet& c) const override;
  std::string label(std::size_t pt) const override;

 private:
  const FilterSpace* fs_;
};

class MorphismActionSpace final : public ActionSpace {
 public:
  explicit MorphismActionSpace(const MorphismSpace& ms) : ms_(&ms) {}
  const MorphismSpace& morphisms() const { return *ms_; }
  const PGraph& graph() const override { return ms_->graph(); }
  std::size_t size() const override { return ms_->size(); }
  std::optional<std::size_t> act(std::size_t pt, const Degree& m) const override;
  std::optional<std::size_t> prepend(MorphismId lam, std::size_t pt) const override;
  VertexId range(std::size_t pt) const override;
  bool in_cylinder(std::size_t pt, const CylinderSet& c) const override;
  std::string label(std::size_t pt) const override;

 private:
  const MorphismSpace* ms_;
};

// (x, q, y) with act(x,m) = act(y,n) for a witness pair (m,n), q = m n^{-1}.
// Equality is on (x, q, y) only; the canonical witness is the
// lexicographically least one and is not identifying.
struct GroupoidElement {
  std::size_t x = 0;
  std::size_t y = 0;
  GroupElement q;
  std::pair<Degree, Degree> witness;
};

// The semidirect product groupoid over an enumerated path space, with
// witnesses drawn from degrees at most the bound.
class Groupoid {
 public:
  static Groupoid enumerate(const ActionSpace& space, const Degree& bound);
  // Assemble from an explicit element list (diagnostics, deserialization,
  // mutation tests); no witness search or deduplication is performed.
  static Groupoid from_elements(const ActionSpace& space, const Degree& bound,
                                std::vector<GroupoidElement> elems);

  const ActionSpace& space() const { return *space_; }
  const Degree& bound() const { return bound_; }
  const std::vector<Degree>& degree_pool() const { return pool_; }

  std::size_t size() const { return elems_.size(); }
  const GroupoidElement& at(std::size_t i) const { return elems_[i]; }
  std::optional<std::size_t> find(std::size_t x, const GroupElement& q, std::size_t y) const;

  std::size_t invert(std::size_t i) const;
  // Throws NonComposable on a source/range mismatch and WindowOverflow when
  // the composite has no witness inside the bound.
  std::size_t compose(std::size_t i, std::size_t j) const;
  std::size_t unit_at(std::size_t pt) const;

  // Cached action lookup used by the basis machinery.
  std::optional<std::size_t> act_of(std::size_t pt, const Degree& m) const;

 private:
  friend Groupoid reduction(const Groupoid& gpd, const std::vector<std::size_t>& U);
  const ActionSpace* space_ = nullptr;
  Degree bound_;
  std::vector<Degree> pool_;
  std::vector<GroupoidElement> elems_;
  std::map<std::tuple<std::size_t, GroupElement, std::size_t>, std::size_t> index_;
  std::vector<std::vector<std::optional<std::size_t>>> act_table_;
};

// Constructs (x, q, y) from a witness pair; throws NotAnElement when the
// defining relation act(x,m) = act(y,n) fails.
GroupoidElement make_element(const ActionSpace& space, std::size_t x, const Degree& m,
                             const Degree& n, std::size_t y);

// Basis set Z(U, m, n, V): elements with x in U, y in V, q = m n^{-1} and
// act(x,m) = act(y,n). U, V are point index sets.
struct BasisSet {
  std::vector<std::size_t> U;
  Degree m, n;
  std::vector<std::size_t> V;
};

bool basis_membership(const Groupoid& gpd, const GroupoidElement& g, const BasisSet& z);

// Z_Yee(F, m): elements (lam.t, m, mu.t) over source-matched pairs in F with
// degree difference m.
struct YeeBasisSet {
  std::vector<std::pair<MorphismId, MorphismId>> pairs;
  GroupElement m;
};

bool yee_basis_membership(const Groupoid& gpd, const GroupoidElement& g, const YeeBasisSet& z);

// Point set of a cylinder inside an action space.
std::vector<std::size_t> cylinder_points(const ActionSpace& space, const CylinderSet& c);

// psi_h on elements: (x, q, y) -> (h(x), q, h(y)) as an index map from the
// morphism-space groupoid into the filter-space groupoid. point_map sends
// morphism points to their filters.
std::vector<std::size_t> psi_h_element_map(const Groupoid& gm, const Groupoid& gf,
                                           const std::vector<std::size_t>& point_map);

// Bijectivity, composability both ways, the homomorphism law and inversion.
Report check_isomorphism(const Groupoid& g1, const Groupoid& g2,
                         const std::vector<std::size_t>& elem_map);

// G|_U: elements with both endpoints in U.
Groupoid reduction(const Groupoid& gpd, const std::vector<std::size_t>& U);

// Groupoid axioms (associativity closure, double inverse, cancellation) and
// the unit-space bijection with the path space.
Report groupoid_axiom_check(const Groupoid& gpd);

// r(s^{-1}(U)) within U, computed on the enumerated elements.
bool invariance_check(const Groupoid& gpd, const std::vector<std::size_t>& U);

// Finite shadow of tau = tau_Yee over a k-graph groupoid: sampled Z_Yee sets
// are unions of cylinder-based basis sets, and every cylinder-based basis
// set is a Z_Yee set minus the correcting Z_Yee(F, .) built from K and L.
Report tau_equality_check(const Groupoid& gpd, const Degree& bound);

// End-to-end psi_h verification at the given bound: enumerates both
// groupoids, checks the isomorphism laws, the image law on sampled
// cylinder-generated basis sets, and the elementwise correspondence of the
// boundary reductions.
Report psi_h_suite(const FilterSpace& fs, const MorphismSpace& ms, const Degree& bound,
                   const Degree& depth_bound);

}  // namespace pgv

#endif
