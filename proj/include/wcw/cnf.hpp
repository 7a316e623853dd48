#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wcw {

/// A variable (1-based) or its negation. Orders by variable, positive first.
struct Literal {
  int var = 0;
  bool negated = false;

  Literal negation() const { return {var, !negated}; }
  int dimacs() const { return negated ? -var : var; }
  static Literal from_dimacs(int value) { return {value < 0 ? -value : value, value < 0}; }

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Sorted set of literals never holding both x and ¬x.
class Clause {
 public:
  Clause() = default;
  /// Sorts and removes repeated literals; throws std::invalid_argument on a
  /// complementary pair.
  explicit Clause(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  bool contains(Literal l) const;
  bool all_positive() const;
  bool all_negative() const;

  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> literals_;
};

/// Size first, then lexicographic on (var, sign).
bool canonical_less(const Clause& a, const Clause& b);

/// Variables 1..n_vars plus an ordered clause list. Clause order is kept as
/// given (reductions refer to clauses by position); canonical() sorts.
class CnfInstance {
 public:
  CnfInstance() = default;
  explicit CnfInstance(int n_vars);
  CnfInstance(int n_vars, std::vector<Clause> clauses);

  /// Throws std::invalid_argument when a literal names a variable > n_vars.
  void add_clause(Clause c);

  int n_vars() const { return n_vars_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  const Clause& operator[](std::size_t i) const { return clauses_[i]; }

  CnfInstance canonical() const;

  friend bool operator==(const CnfInstance&, const CnfInstance&) = default;

 private:
  int n_vars_ = 0;
  std::vector<Clause> clauses_;
};

/// Total truth assignment; values[i-1] is the value of variable i.
struct Assignment {
  std::vector<bool> values;

  bool value(int var) const { return values.at(static_cast<std::size_t>(var - 1)); }
  bool value(Literal l) const { return value(l.var) != l.negated; }
};

/// Optional names for variables, e.g. fresh variables introduced by a
/// reduction. Emitted as "c alias <var> <name>" comment lines.
using VariableAliases = std::map<int, std::string>;

/// Standard DIMACS CNF. A "c kind: usat|dsat|3sat" comment is checked
/// against the corresponding validator when present. Tautological clauses
/// and malformed headers raise ParseError.
CnfInstance parse_dimacs(std::string_view text);

/// Canonical DIMACS: optional kind and alias comments, header, then clauses
/// in canonical order with literals sorted by variable.
std::string serialize_dimacs(const CnfInstance& instance, std::string_view kind = {},
                             const VariableAliases& aliases = {});

/// Every clause is all-positive or all-negative.
bool validate_usat(const CnfInstance& instance);

/// Every clause has exactly three literals.
bool validate_3sat(const CnfInstance& instance);

struct DsatViolation {
  std::size_t first = 0;   // clause indices (0-based); equal for a size violation
  std::size_t second = 0;
  int condition = 0;       // 1: clause size, 2: two shared literals, 3: shared literal plus complementary pair
};

/// For two clauses sharing a literal: the first literal of `second` (other
/// than the smallest shared literal) that also appears in `first`, directly or
/// negated. This is the l4 of a bad pair.
std::optional<Literal> conflicting_literal(const Clause& first, const Clause& second);

/// Which pairwise DSAT condition (2 or 3) the two clauses break, or nullopt.
std::optional<int> pair_violation(const Clause& first, const Clause& second);

/// nullopt when the instance satisfies all DSAT conditions; otherwise the
/// first violation, clause sizes checked first, then pairs (i, j), i < j, in
/// order.
std::optional<DsatViolation> validate_dsat(const CnfInstance& instance);

/// First pair (i, j), i < j, sharing a literal l1 while some other literal of
/// clause i equals a literal of clause j or its negation.
std::optional<std::pair<std::size_t, std::size_t>> has_bad_pair(const CnfInstance& instance);

inline constexpr int kDefaultSolverVarCap = 30;

/// Complete backtracking search with unit propagation. Branches on the
/// lowest unassigned variable, trying false first. Throws
/// std::invalid_argument when n_vars exceeds `var_cap`.
std::optional<Assignment> solve(const CnfInstance& instance, int var_cap = kDefaultSolverVarCap);

/// Every clause has a true literal. Throws for a non-total assignment.
bool evaluate(const CnfInstance& instance, const Assignment& assignment);

}  // namespace wcw
