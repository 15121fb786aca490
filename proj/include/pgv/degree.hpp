#ifndef PGV_DEGREE_HPP
#define PGV_DEGREE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgv/errors.hpp"

namespace pgv {

// The degree monoids P we materialize: N^k ("grid"), a free monoid on a
// finite alphabet, and finitely generated submonoids of N^k. The first two
// sit inside weakly quasi-lattice ordered groups (Z^k resp. the free group);
// grid submonoids are kept around as the counterexample family and only
// support the bounded upper-bound search.
enum class MonoidKind : std::uint8_t { Grid, Free, GridSubmonoid };

struct MonoidDesc {
  MonoidKind kind = MonoidKind::Grid;
  int rank = 1;                              // Grid / GridSubmonoid
  std::string letters;                       // Free: one char per letter
  std::vector<std::vector<int>> generators;  // GridSubmonoid

  bool compatible(const MonoidDesc& other) const;
  std::string str() const;
};

struct IncreasingSequence;
struct DegreeClass;

// An element of P. Payload is a coordinate tuple (grid families) or a word
// (free). Submonoid elements additionally carry a generator multiset
// witnessing membership; the witness never takes part in comparisons.
class Degree {
 public:
  Degree() = default;

  MonoidKind kind() const { return kind_; }
  const std::vector<int>& coords() const { return coords_; }
  const std::string& word() const { return word_; }
  const std::vector<int>& witness() const { return witness_; }
  bool is_identity() const;

  friend bool operator==(const Degree& a, const Degree& b) {
    return a.kind_ == b.kind_ && a.coords_ == b.coords_ && a.word_ == b.word_;
  }
  // Canonical total order: lexicographic on coordinates for grids, shortlex
  // for words. Used for deterministic enumeration, not the monoid order.
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b);

  std::string str() const;

 private:
  friend class DegreeMonoid;
  friend struct DegreeClass;
  friend IncreasingSequence grid_class_to_sequence(const DegreeClass&);
  MonoidKind kind_ = MonoidKind::Grid;
  std::vector<int> coords_;
  std::string word_;
  std::vector<int> witness_;
};

// Element of the enveloping group Q = Z^k or the free group; quotients
// q = m n^{-1} are stored canonically (integer vector / reduced signed word)
// so equality is witness independent.
class GroupElement {
 public:
  struct SignedLetter {
    char letter = 0;
    bool inverse = false;
    friend auto operator<=>(const SignedLetter&, const SignedLetter&) = default;
  };

  GroupElement() = default;

  MonoidKind kind() const { return kind_; }
  const std::vector<int>& coords() const { return coords_; }
  const std::vector<SignedLetter>& word() const { return word_; }
  bool is_identity() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

  std::string str() const;

  static GroupElement from_degree(const Degree& p);
  static GroupElement grid(std::vector<int> coords);

 private:
  friend GroupElement group_compose(const GroupElement&, const GroupElement&);
  friend GroupElement group_invert(const GroupElement&);
  MonoidKind kind_ = MonoidKind::Grid;
  std::vector<int> coords_;
  std::vector<SignedLetter> word_;
};

GroupElement group_compose(const GroupElement& q, const GroupElement& r);
GroupElement group_invert(const GroupElement& q);
// Canonical form of m n^{-1}.
GroupElement quotient(const Degree& m, const Degree& n);

// A <=-increasing sequence (m_n), given by a finite head plus a tail rule.
// The tail either repeats the last head term or keeps composing a fixed
// step, which covers every sequence shape we need while keeping the
// domination preorder decidable.
struct IncreasingSequence {
  enum class Tail : std::uint8_t { Constant, Step };

  std::vector<Degree> head;  // nonempty
  Tail tail = Tail::Constant;
  std::optional<Degree> step;  // required for Tail::Step

  std::string str() const;
};

// Extended natural number, the per-coordinate value of a grid degree class.
struct ExtNat {
  bool inf = false;
  int value = 0;

  static ExtNat infinity() { return {true, 0}; }
  static ExtNat finite(int v) { return {false, v}; }
  friend bool operator==(const ExtNat&, const ExtNat&) = default;
  // n <= inf for all n.
  bool leq(const ExtNat& other) const { return other.inf || (!inf && value <= other.value); }
  std::string str() const;
};

// Canonical representative of a ~-class of increasing sequences.
// Grid: an element of (N u {inf})^k. Free: the limit word of the prefix
// chain, either finite (period empty) or eventually periodic with minimal
// preperiod/period.
struct DegreeClass {
  MonoidKind kind = MonoidKind::Grid;
  std::vector<ExtNat> grid;
  std::string prefix;
  std::string period;  // empty => the class is the finite word `prefix`

  bool is_finite() const;
  // The unique degree of a finite class.
  Degree finite_degree() const;
  friend bool operator==(const DegreeClass&, const DegreeClass&) = default;
  std::string str() const;
};

// Operations of a fixed degree monoid. All values are immutable and the
// operations are pure.
class DegreeMonoid {
 public:
  explicit DegreeMonoid(MonoidDesc desc);

  const MonoidDesc& desc() const { return desc_; }
  MonoidKind kind() const { return desc_.kind; }

  Degree identity() const;
  Degree make_grid(std::vector<int> coords) const;
  Degree make_word(std::string w) const;
  // Throws Precondition if the tuple is not expressible in the generators.
  Degree make_submonoid(std::vector<int> coords) const;
  // Parse from the canonical string form (inverse of Degree::str()).
  Degree parse(const std::string& text) const;

  bool owns(const Degree& p) const;

  Degree compose(const Degree& p, const Degree& q) const;
  // p <= r iff pq = r for some q in P.
  bool leq(const Degree& p, const Degree& r) const;
  // The q with pq = r, when p <= r.
  std::optional<Degree> left_divide(const Degree& p, const Degree& r) const;
  // Least common upper bound; nullopt when none exists. Throws
  // UnsupportedMonoid for grid submonoids (use minimal_upper_bounds).
  std::optional<Degree> lub(const Degree& p, const Degree& r) const;
  // All <=-minimal common upper bounds inside the monoid, at or below
  // search_bound in the ambient grid. Grid/free tags reduce to lub.
  std::vector<Degree> minimal_upper_bounds(const Degree& p, const Degree& r,
                                           const Degree& search_bound) const;
  // Submonoid membership of an ambient tuple.
  std::optional<std::vector<int>> membership_witness(const std::vector<int>& coords) const;

  // Search-bound comparison, distinct from the monoid order: componentwise
  // for grid families and by word length for free monoids (so incomparable
  // words of small length still fall inside the bound).
  bool bounded_by(const Degree& d, const Degree& bound) const;

  // All p with p <= bound (grids enumerate the box, free monoids the
  // prefixes). Sorted canonically.
  std::vector<Degree> degrees_below(const Degree& bound) const;

  // --- increasing sequences -------------------------------------------
  void validate_sequence(const IncreasingSequence& s) const;
  Degree sequence_term(const IncreasingSequence& s, std::size_t j) const;
  // (l_n) precedes (m_n): every l_j is dominated by some m_K.
  bool seq_precedes(const IncreasingSequence& l, const IncreasingSequence& m) const;
  bool seq_equivalent(const IncreasingSequence& l, const IncreasingSequence& m) const;
  DegreeClass degree_class(const IncreasingSequence& s) const;

  // --- degree classes -------------------------------------------------
  DegreeClass class_of(const Degree& p) const;
  bool class_contains(const DegreeClass& c, const Degree& p) const;
  // min(c, window) as a degree.
  Degree class_truncate(const DegreeClass& c, const Degree& window) const;
  // m^{-1} c; requires class_contains(c, m).
  DegreeClass class_left_divide(const Degree& m, const DegreeClass& c) const;

 private:
  void check_tag(const Degree& p) const;
  MonoidDesc desc_;
};

// The two translation formulas between (N u {inf})^k and classes of
// increasing sequences in N^k: coordinates map to constant sequences when
// finite and to (0,1,2,...) when infinite, and back via boundedness.
IncreasingSequence grid_class_to_sequence(const DegreeClass& c);
DegreeClass sequence_to_grid_class(const DegreeMonoid& monoid, const IncreasingSequence& s);

std::string format_coords(const std::vector<int>& coords);

}  // namespace pgv

#endif
