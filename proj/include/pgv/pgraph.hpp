#ifndef PGV_PGRAPH_HPP
#define PGV_PGRAPH_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgv/degree.hpp"
#include "pgv/errors.hpp"

namespace pgv {

using MorphismId = std::uint32_t;
using VertexId = std::uint32_t;

struct Morphism {
  std::string name;
  VertexId range = 0;
  VertexId source = 0;
  Degree degree;
};

// A finite materialized P-graph, or a degree-down-closed window of a
// presented infinite one. Construction goes through PGraphBuilder; the
// category axioms are checked by the validators below, not by the
// constructor, so corrupted tables can be materialized and inspected.
class PGraph {
 public:
  const DegreeMonoid& monoid() const { return monoid_; }
  const std::optional<Degree>& window() const { return window_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertices_[v]; }
  std::optional<VertexId> find_vertex(const std::string& name) const;

  std::size_t size() const { return morphisms_.size(); }
  const Morphism& at(MorphismId id) const { return morphisms_[id]; }
  std::optional<MorphismId> find(const std::string& name) const;
  MorphismId require(const std::string& name) const;  // throws UnknownId

  MorphismId unit(VertexId v) const { return units_[v]; }
  bool is_unit(MorphismId id) const;

  std::optional<MorphismId> compose(MorphismId a, MorphismId b) const;
  const std::map<std::pair<MorphismId, MorphismId>, MorphismId>& composition_table() const {
    return comp_;
  }

  // mu prec lam, i.e. lam = mu nu for some nu.
  bool divides(MorphismId mu, MorphismId lam) const;
  // The nu with mu nu = lam (unique in a category of paths).
  std::optional<MorphismId> left_quotient(MorphismId mu, MorphismId lam) const;
  // Unique factorization of lam at d(lam) = p q; nullopt when no
  // factorization with left degree p is recorded.
  std::optional<std::pair<MorphismId, MorphismId>> factor(MorphismId lam, const Degree& p) const;

  // The principal divisor set {mu : mu prec lam}, sorted.
  const std::vector<MorphismId>& divisors(MorphismId lam) const { return divisors_[lam]; }
  // lam Lambda within the window, sorted.
  const std::vector<MorphismId>& cone(MorphismId lam) const { return cones_[lam]; }

  // Sorted distinct degrees of the materialized morphisms.
  const std::vector<Degree>& degree_set() const { return degree_set_; }
  std::vector<MorphismId> with_degree(const Degree& d) const;
  std::vector<MorphismId> at_vertex_with_degree(VertexId v, const Degree& d) const;

  // Whether a composite of this degree stays inside the window. Graphs
  // without a window are closed categories.
  bool degree_in_window(const Degree& d) const;

 private:
  friend class PGraphBuilder;
  explicit PGraph(DegreeMonoid monoid) : monoid_(std::move(monoid)) {}

  DegreeMonoid monoid_;
  std::optional<Degree> window_;
  std::vector<std::string> vertices_;
  std::vector<Morphism> morphisms_;
  std::vector<MorphismId> units_;
  std::map<std::string, VertexId> vertex_by_name_;
  std::map<std::string, MorphismId> by_name_;
  std::map<std::pair<MorphismId, MorphismId>, MorphismId> comp_;
  std::map<std::pair<MorphismId, MorphismId>, MorphismId> left_q_;
  std::vector<std::vector<MorphismId>> divisors_;
  std::vector<std::vector<MorphismId>> cones_;
  std::map<std::pair<MorphismId, Degree>, std::pair<MorphismId, MorphismId>> factor_;
  std::vector<Degree> degree_set_;
};

class PGraphBuilder {
 public:
  explicit PGraphBuilder(DegreeMonoid monoid) : monoid_(std::move(monoid)) {}

  // Adding a vertex creates its unit morphism under the same name.
  void add_vertex(const std::string& name);
  void add_morphism(const std::string& name, const std::string& range, const std::string& source,
                    Degree degree);
  // Records a b = c by name. Identity compositions are filled in
  // automatically at finalize; explicit entries override them, which is how
  // corrupted tables are produced for the validators.
  void set_composition(const std::string& a, const std::string& b, const std::string& c);
  void set_window(Degree w) { window_ = std::move(w); }

  PGraph finalize() const;

 private:
  DegreeMonoid monoid_;
  std::optional<Degree> window_;
  std::vector<std::string> vertices_;
  struct PendingMorphism {
    std::string name, range, source;
    Degree degree;
  };
  std::vector<PendingMorphism> morphisms_;
  std::vector<std::array<std::string, 3>> compositions_;
};

// 1-skeleton presentation of a k-graph: colored edges plus the factorization
// squares. Colors are 1-based here, matching the file format.
struct SkeletonEdge {
  std::string id;
  int color = 1;
  std::string range, source;
};

struct SkeletonSquare {
  std::array<std::string, 2> first;   // path a.b, read range to source
  std::array<std::string, 2> second;  // the equal path c.d with colors swapped
};

struct SkeletonPresentation {
  int rank = 1;
  std::vector<std::string> vertices;
  std::vector<SkeletonEdge> edges;
  std::vector<SkeletonSquare> squares;
};

enum class SkeletonMode {
  // Normal-form materialization. Requires a complete, bijective square
  // collection and (k >= 3) the associativity cube condition; violations
  // abort with an error.
  Strict,
  // Congruence-closure materialization over edge paths. Accepts broken
  // square data and produces whatever category results, so the validators
  // can exhibit the failure.
  Permissive,
};

// The path prototype Omega_{P,m}: morphisms are pairs p <= q <= m with
// composition (p,q)(q,r) = (p,r) and degree p^{-1} q.
PGraph build_omega(const DegreeMonoid& monoid, const Degree& m);

// Direct limit of Omega_{P,m_n} along an increasing sequence, materialized
// inside the window: pairs p <= q with q below both the window and the
// class of the sequence.
PGraph build_omega_limit(const DegreeMonoid& monoid, const IncreasingSequence& s,
                         const Degree& window);

PGraph from_skeleton(const SkeletonPresentation& sk, const Degree& window,
                     SkeletonMode mode = SkeletonMode::Strict);

// Identity laws, well-formed composition entries, closure under composition
// (window-adjusted) and associativity over all composable triples.
Report validate_category(const PGraph& g);

// Unique factorization: every morphism splits exactly once through every
// splitting of its degree that fits the window.
Report validate_ufp(const PGraph& g);

// Left/right cancellation and the no-inverses law.
Report validate_cancellation(const PGraph& g);

// Minimal common extensions: the prec-minimal elements of
// mu Lambda cap nu Lambda within the window.
std::vector<MorphismId> mce(const PGraph& g, MorphismId mu, MorphismId nu);

struct AlignmentReport {
  Report report;
  // Certificate J per morphism pair.
  std::map<std::pair<MorphismId, MorphismId>, std::vector<MorphismId>> certificates;
  // Pairs whose certificate touches the window boundary; finiteness of the
  // presented infinite graph's intersection is unconfirmed for these.
  std::vector<std::pair<MorphismId, MorphismId>> boundary_pairs;
};

AlignmentReport is_finitely_aligned(const PGraph& g);

}  // namespace pgv

#endif
