#ifndef PGV_ERRORS_HPP
#define PGV_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace pgv {

enum class Errc {
  TagMismatch,        // operands from different degree monoids
  UnsupportedMonoid,  // operation undefined for this monoid family
  NotInDomain,        // semigroup action applied outside its domain
  RangeMismatch,      // source/range vertices do not line up
  WindowOverflow,     // result would leave the materialized window
  NotAnElement,       // defining relation of a groupoid element fails
  NonComposable,      // groupoid elements do not match up
  UnknownId,          // morphism/vertex id not present in the graph
  Precondition,       // other violated precondition
  ParseError,         // malformed spec file
  CubeCondition,      // k>=3 skeleton fails the associativity check
  DanglingEdge,       // skeleton edge with missing endpoint
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// Violation-collecting result used by the validators. A check passes when no
// violations were recorded; flags carry non-fatal notes (window truncation,
// skipped composites, ...).
struct Report {
  std::vector<std::string> violations;
  std::vector<std::string> flags;

  bool ok() const { return violations.empty(); }
  void violation(std::string msg) { violations.push_back(std::move(msg)); }
  void flag(std::string msg) { flags.push_back(std::move(msg)); }
  void merge(const Report& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    flags.insert(flags.end(), other.flags.begin(), other.flags.end());
  }
};

}  // namespace pgv

#endif
