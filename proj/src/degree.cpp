#include "pgv/degree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace pgv {

namespace {

bool is_word_prefix(const std::string& p, const std::string& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

// Expand the eventually periodic word u v^w to at least n characters.
std::string expand_periodic(const std::string& u, const std::string& v, std::size_t n) {
  std::string out = u;
  while (out.size() < n) out += v;
  return out;
}

// Minimal preperiod/period representation of u v^w. The minimal eventual
// period divides |v| (Fine and Wilf), so scanning divisors suffices.
std::pair<std::string, std::string> canonical_periodic(const std::string& u, const std::string& v) {
  const std::string e = expand_periodic(u, v, u.size() + 3 * v.size());
  for (std::size_t p = 1; p <= v.size(); ++p) {
    if (v.size() % p != 0) continue;
    bool ok = true;
    for (std::size_t i = u.size(); i < u.size() + v.size(); ++i)
      if (e[i] != e[i + p]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::size_t n0 = u.size();
    while (n0 > 0 && e[n0 - 1] == e[n0 - 1 + p]) --n0;
    return {e.substr(0, n0), e.substr(n0, p)};
  }
  return {u, v};  // v itself is always a period; not reached
}

}  // namespace

std::string format_coords(const std::vector<int>& coords) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ',';
    os << coords[i];
  }
  os << ')';
  return os.str();
}

bool MonoidDesc::compatible(const MonoidDesc& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case MonoidKind::Grid:
      return rank == other.rank;
    case MonoidKind::Free:
      return letters == other.letters;
    case MonoidKind::GridSubmonoid:
      return rank == other.rank && generators == other.generators;
  }
  return false;
}

std::string MonoidDesc::str() const {
  switch (kind) {
    case MonoidKind::Grid:
      return "grid(" + std::to_string(rank) + ")";
    case MonoidKind::Free:
      return "free{" + letters + "}";
    case MonoidKind::GridSubmonoid: {
      std::string out = "submonoid<";
      for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) out += ',';
        out += format_coords(generators[i]);
      }
      return out + ">";
    }
  }
  return "?";
}

bool Degree::is_identity() const {
  if (kind_ == MonoidKind::Free) return word_.empty();
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ == MonoidKind::Free) {
    if (a.word_.size() != b.word_.size()) return a.word_.size() <=> b.word_.size();
    return a.word_.compare(b.word_) <=> 0;
  }
  return a.coords_ <=> b.coords_;
}

std::string Degree::str() const {
  if (kind_ == MonoidKind::Free) return word_.empty() ? "e" : word_;
  return format_coords(coords_);
}

bool GroupElement::is_identity() const {
  if (kind_ == MonoidKind::Free) return word_.empty();
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  if (a.kind() == MonoidKind::Free) {
    if (a.word().size() != b.word().size()) return a.word().size() <=> b.word().size();
    return a.word() <=> b.word();
  }
  return a.coords() <=> b.coords();
}

std::string GroupElement::str() const {
  if (kind_ != MonoidKind::Free) return format_coords(coords_);
  if (word_.empty()) return "e";
  std::string out;
  for (const auto& l : word_) {
    if (l.inverse) out += '~';
    out += l.letter;
  }
  return out;
}

GroupElement GroupElement::from_degree(const Degree& p) {
  GroupElement q;
  if (p.kind() == MonoidKind::Free) {
    q.kind_ = MonoidKind::Free;
    for (char c : p.word()) q.word_.push_back({c, false});
  } else {
    q.kind_ = MonoidKind::Grid;  // Z^k envelops both grid families
    q.coords_ = p.coords();
  }
  return q;
}

GroupElement GroupElement::grid(std::vector<int> coords) {
  GroupElement q;
  q.kind_ = MonoidKind::Grid;
  q.coords_ = std::move(coords);
  return q;
}

GroupElement group_compose(const GroupElement& q, const GroupElement& r) {
  if (q.kind() != r.kind()) fail(Errc::TagMismatch, "group elements from different groups");
  GroupElement out;
  out.kind_ = q.kind_;
  if (q.kind_ != MonoidKind::Free) {
    if (q.coords_.size() != r.coords_.size())
      fail(Errc::TagMismatch, "group elements of different rank");
    out.coords_.resize(q.coords_.size());
    for (std::size_t i = 0; i < out.coords_.size(); ++i)
      out.coords_[i] = q.coords_[i] + r.coords_[i];
    return out;
  }
  out.word_ = q.word_;
  for (const auto& l : r.word_) {
    if (!out.word_.empty() && out.word_.back().letter == l.letter &&
        out.word_.back().inverse != l.inverse) {
      out.word_.pop_back();
    } else {
      out.word_.push_back(l);
    }
  }
  return out;
}

GroupElement group_invert(const GroupElement& q) {
  GroupElement out;
  out.kind_ = q.kind();
  if (q.kind() != MonoidKind::Free) {
    out.coords_ = q.coords();
    for (int& c : out.coords_) c = -c;
    return out;
  }
  out.word_.assign(q.word().rbegin(), q.word().rend());
  for (auto& l : out.word_) l.inverse = !l.inverse;
  return out;
}

GroupElement quotient(const Degree& m, const Degree& n) {
  if (m.kind() != n.kind()) fail(Errc::TagMismatch, "quotient of mismatched degrees");
  return group_compose(GroupElement::from_degree(m), group_invert(GroupElement::from_degree(n)));
}

std::string IncreasingSequence::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (i) out += ',';
    out += head[i].str();
  }
  out += "]";
  if (tail == Tail::Step && step) out += "+" + step->str() + "*";
  return out;
}

std::string ExtNat::str() const { return inf ? "inf" : std::to_string(value); }

bool DegreeClass::is_finite() const {
  if (kind == MonoidKind::Free) return period.empty();
  return std::none_of(grid.begin(), grid.end(), [](const ExtNat& e) { return e.inf; });
}

Degree DegreeClass::finite_degree() const {
  if (!is_finite()) fail(Errc::Precondition, "degree class is infinite");
  Degree d;
  if (kind == MonoidKind::Free) {
    d.kind_ = MonoidKind::Free;
    d.word_ = prefix;
    return d;
  }
  d.kind_ = kind;
  for (const auto& e : grid) d.coords_.push_back(e.value);
  return d;
}

std::string DegreeClass::str() const {
  if (kind == MonoidKind::Free) {
    if (period.empty()) return prefix.empty() ? "e" : prefix;
    return prefix + "(" + period + ")*";
  }
  std::string out = "(";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i) out += ',';
    out += grid[i].str();
  }
  return out + ")";
}

DegreeMonoid::DegreeMonoid(MonoidDesc desc) : desc_(std::move(desc)) {
  switch (desc_.kind) {
    case MonoidKind::Grid:
      if (desc_.rank < 1) fail(Errc::Precondition, "grid monoid needs rank >= 1");
      break;
    case MonoidKind::Free:
      if (desc_.letters.empty()) fail(Errc::Precondition, "free monoid needs letters");
      break;
    case MonoidKind::GridSubmonoid:
      if (desc_.rank < 1 || desc_.generators.empty())
        fail(Errc::Precondition, "grid submonoid needs rank and generators");
      for (const auto& g : desc_.generators) {
        if (static_cast<int>(g.size()) != desc_.rank)
          fail(Errc::Precondition, "generator rank mismatch");
        if (std::all_of(g.begin(), g.end(), [](int c) { return c == 0; }))
          fail(Errc::Precondition, "zero generator");
        if (std::any_of(g.begin(), g.end(), [](int c) { return c < 0; }))
          fail(Errc::Precondition, "negative generator entry");
      }
      break;
  }
}

Degree DegreeMonoid::identity() const {
  switch (desc_.kind) {
    case MonoidKind::Free:
      return make_word("");
    case MonoidKind::Grid:
      return make_grid(std::vector<int>(desc_.rank, 0));
    case MonoidKind::GridSubmonoid:
      return make_submonoid(std::vector<int>(desc_.rank, 0));
  }
  fail(Errc::UnsupportedMonoid, "unknown monoid kind");
}

Degree DegreeMonoid::make_grid(std::vector<int> coords) const {
  if (desc_.kind != MonoidKind::Grid) fail(Errc::TagMismatch, "not a grid monoid");
  if (static_cast<int>(coords.size()) != desc_.rank)
    fail(Errc::Precondition, "expected " + std::to_string(desc_.rank) + " coordinates");
  if (std::any_of(coords.begin(), coords.end(), [](int c) { return c < 0; }))
    fail(Errc::Precondition, "negative coordinate");
  Degree d;
  d.kind_ = MonoidKind::Grid;
  d.coords_ = std::move(coords);
  return d;
}

Degree DegreeMonoid::make_word(std::string w) const {
  if (desc_.kind != MonoidKind::Free) fail(Errc::TagMismatch, "not a free monoid");
  for (char c : w)
    if (desc_.letters.find(c) == std::string::npos)
      fail(Errc::Precondition, std::string("letter '") + c + "' not in alphabet");
  Degree d;
  d.kind_ = MonoidKind::Free;
  d.word_ = std::move(w);
  return d;
}

Degree DegreeMonoid::make_submonoid(std::vector<int> coords) const {
  if (desc_.kind != MonoidKind::GridSubmonoid) fail(Errc::TagMismatch, "not a grid submonoid");
  if (static_cast<int>(coords.size()) != desc_.rank) fail(Errc::Precondition, "rank mismatch");
  auto witness = membership_witness(coords);
  if (!witness)
    fail(Errc::Precondition, format_coords(coords) + " is not expressible in the generators");
  Degree d;
  d.kind_ = MonoidKind::GridSubmonoid;
  d.coords_ = std::move(coords);
  d.witness_ = std::move(*witness);
  return d;
}

Degree DegreeMonoid::parse(const std::string& text) const {
  if (desc_.kind == MonoidKind::Free) return make_word(text == "e" ? "" : text);
  std::string body = text;
  if (!body.empty() && body.front() == '(') body = body.substr(1, body.size() - 2);
  std::vector<int> coords;
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) coords.push_back(std::stoi(tok));
  return desc_.kind == MonoidKind::Grid ? make_grid(std::move(coords))
                                        : make_submonoid(std::move(coords));
}

bool DegreeMonoid::owns(const Degree& p) const {
  if (p.kind() != desc_.kind) return false;
  if (desc_.kind == MonoidKind::Free)
    return std::all_of(p.word().begin(), p.word().end(),
                       [&](char c) { return desc_.letters.find(c) != std::string::npos; });
  return static_cast<int>(p.coords().size()) == desc_.rank;
}

void DegreeMonoid::check_tag(const Degree& p) const {
  if (!owns(p)) fail(Errc::TagMismatch, "degree " + p.str() + " not in " + desc_.str());
}

Degree DegreeMonoid::compose(const Degree& p, const Degree& q) const {
  check_tag(p);
  check_tag(q);
  Degree out;
  out.kind_ = desc_.kind;
  if (desc_.kind == MonoidKind::Free) {
    out.word_ = p.word() + q.word();
    return out;
  }
  out.coords_.resize(p.coords().size());
  for (std::size_t i = 0; i < out.coords_.size(); ++i)
    out.coords_[i] = p.coords()[i] + q.coords()[i];
  if (desc_.kind == MonoidKind::GridSubmonoid) {
    out.witness_ = p.witness();
    if (out.witness_.size() < q.witness().size()) out.witness_.resize(q.witness().size(), 0);
    for (std::size_t i = 0; i < q.witness().size(); ++i) out.witness_[i] += q.witness()[i];
  }
  return out;
}

bool DegreeMonoid::leq(const Degree& p, const Degree& r) const {
  return left_divide(p, r).has_value();
}

std::optional<Degree> DegreeMonoid::left_divide(const Degree& p, const Degree& r) const {
  check_tag(p);
  check_tag(r);
  Degree out;
  out.kind_ = desc_.kind;
  if (desc_.kind == MonoidKind::Free) {
    if (!is_word_prefix(p.word(), r.word())) return std::nullopt;
    out.word_ = r.word().substr(p.word().size());
    return out;
  }
  std::vector<int> diff(p.coords().size());
  for (std::size_t i = 0; i < diff.size(); ++i) {
    diff[i] = r.coords()[i] - p.coords()[i];
    if (diff[i] < 0) return std::nullopt;
  }
  if (desc_.kind == MonoidKind::GridSubmonoid) {
    auto witness = membership_witness(diff);
    if (!witness) return std::nullopt;
    out.witness_ = std::move(*witness);
  }
  out.coords_ = std::move(diff);
  return out;
}

std::optional<Degree> DegreeMonoid::lub(const Degree& p, const Degree& r) const {
  check_tag(p);
  check_tag(r);
  if (desc_.kind == MonoidKind::GridSubmonoid)
    fail(Errc::UnsupportedMonoid,
         "least upper bounds are not available in a grid submonoid; use minimal_upper_bounds");
  Degree out;
  out.kind_ = desc_.kind;
  if (desc_.kind == MonoidKind::Free) {
    if (is_word_prefix(p.word(), r.word())) return r;
    if (is_word_prefix(r.word(), p.word())) return p;
    return std::nullopt;
  }
  out.coords_.resize(p.coords().size());
  for (std::size_t i = 0; i < out.coords_.size(); ++i)
    out.coords_[i] = std::max(p.coords()[i], r.coords()[i]);
  return out;
}

std::vector<Degree> DegreeMonoid::minimal_upper_bounds(const Degree& p, const Degree& r,
                                                       const Degree& search_bound) const {
  check_tag(p);
  check_tag(r);
  if (desc_.kind != MonoidKind::GridSubmonoid) {
    auto l = lub(p, r);
    if (!l || !leq(*l, search_bound)) return {};
    return {*l};
  }
  check_tag(search_bound);
  // Scan the ambient box for common upper bounds inside the submonoid.
  std::vector<Degree> candidates;
  std::vector<int> cur(desc_.rank, 0);
  const auto& bound = search_bound.coords();
  auto visit = [&](auto&& self, int i) -> void {
    if (i == desc_.rank) {
      auto witness = membership_witness(cur);
      if (!witness) return;
      Degree u;
      u.kind_ = MonoidKind::GridSubmonoid;
      u.coords_ = cur;
      u.witness_ = std::move(*witness);
      if (leq(p, u) && leq(r, u)) candidates.push_back(std::move(u));
      return;
    }
    for (cur[i] = 0; cur[i] <= bound[i]; ++cur[i]) self(self, i + 1);
    cur[i] = 0;
  };
  visit(visit, 0);
  std::vector<Degree> minimal;
  for (const auto& u : candidates) {
    bool is_min = std::none_of(candidates.begin(), candidates.end(), [&](const Degree& w) {
      return !(w == u) && leq(w, u);
    });
    if (is_min) minimal.push_back(u);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

std::optional<std::vector<int>> DegreeMonoid::membership_witness(
    const std::vector<int>& coords) const {
  if (desc_.kind != MonoidKind::GridSubmonoid)
    fail(Errc::UnsupportedMonoid, "membership witnesses only apply to grid submonoids");
  std::map<std::vector<int>, std::optional<std::vector<int>>> memo;
  auto solve = [&](auto&& self, const std::vector<int>& t) -> std::optional<std::vector<int>> {
    if (std::all_of(t.begin(), t.end(), [](int c) { return c == 0; }))
      return std::vector<int>(desc_.generators.size(), 0);
    auto it = memo.find(t);
    if (it != memo.end()) return it->second;
    memo[t] = std::nullopt;  // guard against revisiting
    for (std::size_t gi = 0; gi < desc_.generators.size(); ++gi) {
      const auto& g = desc_.generators[gi];
      std::vector<int> rest(t.size());
      bool ok = true;
      for (std::size_t i = 0; i < t.size(); ++i) {
        rest[i] = t[i] - g[i];
        if (rest[i] < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (auto sub = self(self, rest)) {
        (*sub)[gi] += 1;
        memo[t] = sub;
        return sub;
      }
    }
    return memo[t];
  };
  if (std::any_of(coords.begin(), coords.end(), [](int c) { return c < 0; })) return std::nullopt;
  return solve(solve, coords);
}

bool DegreeMonoid::bounded_by(const Degree& d, const Degree& bound) const {
  check_tag(d);
  check_tag(bound);
  if (desc_.kind == MonoidKind::Free) return d.word().size() <= bound.word().size();
  for (std::size_t i = 0; i < d.coords().size(); ++i)
    if (d.coords()[i] > bound.coords()[i]) return false;
  return true;
}

std::vector<Degree> DegreeMonoid::degrees_below(const Degree& bound) const {
  check_tag(bound);
  std::vector<Degree> out;
  if (desc_.kind == MonoidKind::Free) {
    for (std::size_t n = 0; n <= bound.word().size(); ++n)
      out.push_back(make_word(bound.word().substr(0, n)));
    return out;
  }
  std::vector<int> cur(desc_.rank, 0);
  auto visit = [&](auto&& self, int i) -> void {
    if (i == desc_.rank) {
      if (desc_.kind == MonoidKind::Grid) {
        out.push_back(make_grid(cur));
      } else if (membership_witness(cur)) {
        Degree d;
        d.kind_ = MonoidKind::GridSubmonoid;
        d.coords_ = cur;
        d.witness_ = *membership_witness(cur);
        out.push_back(std::move(d));
      }
      return;
    }
    for (cur[i] = 0; cur[i] <= bound.coords()[i]; ++cur[i]) self(self, i + 1);
    cur[i] = 0;
  };
  visit(visit, 0);
  std::sort(out.begin(), out.end());
  return out;
}

void DegreeMonoid::validate_sequence(const IncreasingSequence& s) const {
  if (s.head.empty()) fail(Errc::Precondition, "increasing sequence needs a nonempty head");
  for (const auto& d : s.head) check_tag(d);
  for (std::size_t i = 0; i + 1 < s.head.size(); ++i)
    if (!leq(s.head[i], s.head[i + 1]))
      fail(Errc::Precondition, "sequence head is not <=-increasing at position " +
                                   std::to_string(i) + ": " + s.head[i].str() + " !<= " +
                                   s.head[i + 1].str());
  if (s.tail == IncreasingSequence::Tail::Step) {
    if (!s.step) fail(Errc::Precondition, "step tail rule needs a step degree");
    check_tag(*s.step);
  }
}

Degree DegreeMonoid::sequence_term(const IncreasingSequence& s, std::size_t j) const {
  validate_sequence(s);
  if (j < s.head.size()) return s.head[j];
  if (s.tail == IncreasingSequence::Tail::Constant) return s.head.back();
  Degree out = s.head.back();
  for (std::size_t i = s.head.size(); i <= j; ++i) out = compose(out, *s.step);
  return out;
}

DegreeClass DegreeMonoid::degree_class(const IncreasingSequence& s) const {
  validate_sequence(s);
  DegreeClass c;
  c.kind = desc_.kind;
  const Degree& last = s.head.back();
  const bool stepped = s.tail == IncreasingSequence::Tail::Step && s.step &&
                       !s.step->is_identity();
  switch (desc_.kind) {
    case MonoidKind::Grid: {
      for (int i = 0; i < desc_.rank; ++i) {
        if (stepped && s.step->coords()[i] > 0)
          c.grid.push_back(ExtNat::infinity());
        else
          c.grid.push_back(ExtNat::finite(last.coords()[i]));
      }
      return c;
    }
    case MonoidKind::Free: {
      if (!stepped) {
        c.prefix = last.word();
        return c;
      }
      auto [u, v] = canonical_periodic(last.word(), s.step->word());
      c.prefix = std::move(u);
      c.period = std::move(v);
      return c;
    }
    case MonoidKind::GridSubmonoid:
      // No canonical representation of ~-classes for general P; unsupported.
      fail(Errc::UnsupportedMonoid, "degree classes are only defined for grid and free monoids");
  }
  fail(Errc::UnsupportedMonoid, "unknown monoid kind");
}

bool DegreeMonoid::seq_precedes(const IncreasingSequence& l, const IncreasingSequence& m) const {
  const DegreeClass cl = degree_class(l);
  const DegreeClass cm = degree_class(m);
  if (desc_.kind == MonoidKind::Grid) {
    for (int i = 0; i < desc_.rank; ++i)
      if (!cl.grid[i].leq(cm.grid[i])) return false;
    return true;
  }
  // Free monoid: the limits are (possibly infinite) words and domination is
  // prefix order; two infinite limits dominate each other only when equal.
  if (cl.period.empty() && cm.period.empty()) return is_word_prefix(cl.prefix, cm.prefix);
  if (cl.period.empty())
    return is_word_prefix(cl.prefix,
                          expand_periodic(cm.prefix, cm.period, cl.prefix.size()));
  if (cm.period.empty()) return false;
  return cl == cm;
}

bool DegreeMonoid::seq_equivalent(const IncreasingSequence& l, const IncreasingSequence& m) const {
  return seq_precedes(l, m) && seq_precedes(m, l);
}

DegreeClass DegreeMonoid::class_of(const Degree& p) const {
  check_tag(p);
  DegreeClass c;
  c.kind = desc_.kind;
  if (desc_.kind == MonoidKind::Free) {
    c.prefix = p.word();
    return c;
  }
  for (int x : p.coords()) c.grid.push_back(ExtNat::finite(x));
  return c;
}

bool DegreeMonoid::class_contains(const DegreeClass& c, const Degree& p) const {
  check_tag(p);
  if (desc_.kind == MonoidKind::Free) {
    if (c.period.empty()) return is_word_prefix(p.word(), c.prefix);
    return is_word_prefix(p.word(), expand_periodic(c.prefix, c.period, p.word().size()));
  }
  for (int i = 0; i < desc_.rank; ++i)
    if (!ExtNat::finite(p.coords()[i]).leq(c.grid[i])) return false;
  return true;
}

Degree DegreeMonoid::class_truncate(const DegreeClass& c, const Degree& window) const {
  check_tag(window);
  Degree out;
  out.kind_ = desc_.kind;
  if (desc_.kind == MonoidKind::Free) {
    const std::string w =
        c.period.empty() ? c.prefix : expand_periodic(c.prefix, c.period, window.word().size());
    std::size_t n = 0;
    while (n < w.size() && n < window.word().size() && w[n] == window.word()[n]) ++n;
    out.word_ = window.word().substr(0, n);
    return out;
  }
  for (int i = 0; i < desc_.rank; ++i)
    out.coords_.push_back(c.grid[i].inf ? window.coords()[i]
                                        : std::min(c.grid[i].value, window.coords()[i]));
  return out;
}

DegreeClass DegreeMonoid::class_left_divide(const Degree& m, const DegreeClass& c) const {
  if (!class_contains(c, m)) fail(Errc::Precondition, "divisor not inside the class");
  DegreeClass out;
  out.kind = desc_.kind;
  if (desc_.kind == MonoidKind::Free) {
    if (c.period.empty()) {
      out.prefix = c.prefix.substr(m.word().size());
      return out;
    }
    const std::size_t n = m.word().size();
    std::string u;
    std::string v = c.period;
    if (n <= c.prefix.size()) {
      u = c.prefix.substr(n);
    } else {
      const std::size_t shift = (n - c.prefix.size()) % c.period.size();
      v = c.period.substr(shift) + c.period.substr(0, shift);
    }
    auto [cu, cv] = canonical_periodic(u, v);
    out.prefix = std::move(cu);
    out.period = std::move(cv);
    return out;
  }
  for (int i = 0; i < desc_.rank; ++i)
    out.grid.push_back(c.grid[i].inf ? ExtNat::infinity()
                                     : ExtNat::finite(c.grid[i].value - m.coords()[i]));
  return out;
}

IncreasingSequence grid_class_to_sequence(const DegreeClass& c) {
  if (c.kind != MonoidKind::Grid)
    fail(Errc::TagMismatch, "grid_class_to_sequence expects a grid class");
  IncreasingSequence s;
  Degree first;
  Degree step;
  first.kind_ = MonoidKind::Grid;
  step.kind_ = MonoidKind::Grid;
  bool any_inf = false;
  for (const auto& e : c.grid) {
    first.coords_.push_back(e.inf ? 0 : e.value);
    step.coords_.push_back(e.inf ? 1 : 0);
    any_inf |= e.inf;
  }
  s.head.push_back(std::move(first));
  if (any_inf) {
    s.tail = IncreasingSequence::Tail::Step;
    s.step = std::move(step);
  }
  return s;
}

DegreeClass sequence_to_grid_class(const DegreeMonoid& monoid, const IncreasingSequence& s) {
  if (monoid.kind() != MonoidKind::Grid)
    fail(Errc::TagMismatch, "sequence_to_grid_class expects a grid monoid");
  return monoid.degree_class(s);
}

}  // namespace pgv
