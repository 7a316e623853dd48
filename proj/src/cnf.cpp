#include "wcw/cnf.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "wcw/errors.hpp"

namespace wcw {

// ---------------------------------------------------------------------------
// Clause / instance

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
  for (std::size_t i = 0; i + 1 < literals_.size(); ++i) {
    if (literals_[i].var < 1) throw std::invalid_argument("literal with non-positive variable");
    if (literals_[i].var == literals_[i + 1].var) {
      throw std::invalid_argument("clause contains x" + std::to_string(literals_[i].var) + " and its negation");
    }
  }
  if (!literals_.empty() && literals_.front().var < 1) throw std::invalid_argument("literal with non-positive variable");
}

bool Clause::contains(Literal l) const { return std::binary_search(literals_.begin(), literals_.end(), l); }

bool Clause::all_positive() const {
  return std::none_of(literals_.begin(), literals_.end(), [](Literal l) { return l.negated; });
}

bool Clause::all_negative() const {
  return std::all_of(literals_.begin(), literals_.end(), [](Literal l) { return l.negated; });
}

bool canonical_less(const Clause& a, const Clause& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.literals() < b.literals();
}

CnfInstance::CnfInstance(int n_vars) : n_vars_(n_vars) {
  if (n_vars < 0) throw std::invalid_argument("negative variable count");
}

CnfInstance::CnfInstance(int n_vars, std::vector<Clause> clauses) : CnfInstance(n_vars) {
  for (auto& c : clauses) add_clause(std::move(c));
}

void CnfInstance::add_clause(Clause c) {
  for (Literal l : c) {
    if (l.var > n_vars_) {
      throw std::invalid_argument("literal " + std::to_string(l.dimacs()) + " exceeds " + std::to_string(n_vars_) +
                                  " variables");
    }
  }
  clauses_.push_back(std::move(c));
}

CnfInstance CnfInstance::canonical() const {
  CnfInstance out = *this;
  std::stable_sort(out.clauses_.begin(), out.clauses_.end(), canonical_less);
  return out;
}

// ---------------------------------------------------------------------------
// DIMACS

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool holds_kind(const CnfInstance& instance, const std::string& kind) {
  if (kind == "usat") return validate_usat(instance);
  if (kind == "3sat") return validate_3sat(instance);
  if (kind == "dsat") return !validate_dsat(instance).has_value();
  throw ParseError("dimacs: unknown kind '" + kind + "'");
}

}  // namespace

CnfInstance parse_dimacs(std::string_view text) {
  std::optional<std::string> kind;
  std::optional<CnfInstance> instance;
  long long declared_clauses = 0;
  std::vector<Literal> pending;
  bool open_clause = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == 'c') {
      std::string_view rest = trim(line.substr(1));
      if (rest.starts_with("kind:")) kind = std::string(trim(rest.substr(5)));
      continue;
    }
    if (line.front() == '%') break;
    std::istringstream fields{std::string(line)};
    if (line.front() == 'p') {
      std::string p;
      std::string format;
      long long n = -1;
      std::string extra;
      if (instance || !(fields >> p >> format >> n >> declared_clauses) || p != "p" || format != "cnf" || n < 0 ||
          declared_clauses < 0 || (fields >> extra)) {
        throw ParseError("dimacs: malformed header '" + std::string(line) + "'");
      }
      instance.emplace(static_cast<int>(n));
      continue;
    }
    if (!instance) throw ParseError("dimacs: clause before 'p cnf' header");
    std::string token;
    while (fields >> token) {
      long long value = 0;
      try {
        std::size_t used = 0;
        value = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ParseError("dimacs: malformed literal '" + token + "'");
      }
      if (value == 0) {
        try {
          instance->add_clause(Clause(std::move(pending)));
        } catch (const std::invalid_argument& e) {
          throw ParseError(std::string("dimacs: ") + e.what());
        }
        pending.clear();
        open_clause = false;
        continue;
      }
      if (value > instance->n_vars() || -value > instance->n_vars()) {
        throw ParseError("dimacs: literal " + token + " exceeds declared variable count");
      }
      pending.push_back(Literal::from_dimacs(static_cast<int>(value)));
      open_clause = true;
    }
  }
  if (!instance) throw ParseError("dimacs: missing 'p cnf' header");
  if (open_clause) throw ParseError("dimacs: last clause is not terminated by 0");
  if (static_cast<long long>(instance->size()) != declared_clauses) {
    throw ParseError("dimacs: header announces " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(instance->size()));
  }
  if (kind && !holds_kind(*instance, *kind)) {
    throw ParseError("dimacs: instance is not a valid " + *kind + " instance");
  }
  return *std::move(instance);
}

std::string serialize_dimacs(const CnfInstance& instance, std::string_view kind, const VariableAliases& aliases) {
  std::string out;
  if (!kind.empty()) out += "c kind: " + std::string(kind) + "\n";
  for (const auto& [var, name] : aliases) out += "c alias " + std::to_string(var) + " " + name + "\n";
  out += "p cnf " + std::to_string(instance.n_vars()) + " " + std::to_string(instance.size()) + "\n";
  const CnfInstance sorted = instance.canonical();
  for (const Clause& c : sorted.clauses()) {
    for (Literal l : c) out += std::to_string(l.dimacs()) + " ";
    out += "0\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validators

bool validate_usat(const CnfInstance& instance) {
  return std::all_of(instance.clauses().begin(), instance.clauses().end(),
                     [](const Clause& c) { return c.all_positive() || c.all_negative(); });
}

bool validate_3sat(const CnfInstance& instance) {
  return std::all_of(instance.clauses().begin(), instance.clauses().end(),
                     [](const Clause& c) { return c.size() == 3; });
}

namespace {

std::optional<Literal> smallest_shared(const Clause& a, const Clause& b) {
  for (Literal l : a) {
    if (b.contains(l)) return l;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Literal> conflicting_literal(const Clause& first, const Clause& second) {
  auto shared = smallest_shared(first, second);
  if (!shared) return std::nullopt;
  for (Literal l : second) {
    if (l == *shared) continue;
    if (first.contains(l) || first.contains(l.negation())) return l;
  }
  return std::nullopt;
}

std::optional<int> pair_violation(const Clause& first, const Clause& second) {
  auto l4 = conflicting_literal(first, second);
  if (!l4) return std::nullopt;
  return first.contains(*l4) ? 2 : 3;
}

std::optional<DsatViolation> validate_dsat(const CnfInstance& instance) {
  const auto& clauses = instance.clauses();
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (clauses[i].size() < 2 || clauses[i].size() > 3) return DsatViolation{i, i, 1};
  }
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    for (std::size_t j = i + 1; j < clauses.size(); ++j) {
      if (auto condition = pair_violation(clauses[i], clauses[j])) return DsatViolation{i, j, *condition};
    }
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> has_bad_pair(const CnfInstance& instance) {
  const auto& clauses = instance.clauses();
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    for (std::size_t j = i + 1; j < clauses.size(); ++j) {
      if (conflicting_literal(clauses[i], clauses[j])) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Solver

namespace {

class Backtracker {
 public:
  explicit Backtracker(const CnfInstance& instance)
      : instance_(instance), value_(static_cast<std::size_t>(instance.n_vars()) + 1, kUnassigned) {}

  std::optional<Assignment> run() {
    if (!search()) return std::nullopt;
    Assignment result;
    result.values.resize(static_cast<std::size_t>(instance_.n_vars()));
    for (int v = 1; v <= instance_.n_vars(); ++v) {
      result.values[static_cast<std::size_t>(v - 1)] = value_[static_cast<std::size_t>(v)] == 1;
    }
    return result;
  }

 private:
  static constexpr std::int8_t kUnassigned = -1;

  std::int8_t literal_value(Literal l) const {
    auto v = value_[static_cast<std::size_t>(l.var)];
    if (v == kUnassigned) return kUnassigned;
    return static_cast<std::int8_t>(l.negated ? 1 - v : v);
  }

  void assign(Literal l, std::vector<int>& trail) {
    value_[static_cast<std::size_t>(l.var)] = l.negated ? 0 : 1;
    trail.push_back(l.var);
  }

  // Unit propagation to a fixpoint; false on a falsified clause.
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Clause& c : instance_.clauses()) {
        std::optional<Literal> open;
        int open_count = 0;
        bool satisfied = false;
        for (Literal l : c) {
          auto v = literal_value(l);
          if (v == 1) {
            satisfied = true;
            break;
          }
          if (v == kUnassigned) {
            open = l;
            ++open_count;
          }
        }
        if (satisfied) continue;
        if (open_count == 0) return false;
        if (open_count == 1) {
          assign(*open, trail);
          changed = true;
        }
      }
    }
    return true;
  }

  void undo(std::vector<int>& trail) {
    for (int var : trail) value_[static_cast<std::size_t>(var)] = kUnassigned;
    trail.clear();
  }

  bool search() {
    std::vector<int> trail;
    if (!propagate(trail)) {
      undo(trail);
      return false;
    }
    int branch = 0;
    for (int v = 1; v <= instance_.n_vars(); ++v) {
      if (value_[static_cast<std::size_t>(v)] == kUnassigned) {
        branch = v;
        break;
      }
    }
    if (branch == 0) return true;
    for (bool negated : {true, false}) {
      std::vector<int> decision;
      assign(Literal{branch, negated}, decision);
      if (search()) return true;
      undo(decision);
    }
    undo(trail);
    return false;
  }

  const CnfInstance& instance_;
  std::vector<std::int8_t> value_;
};

}  // namespace

std::optional<Assignment> solve(const CnfInstance& instance, int var_cap) {
  if (instance.n_vars() > var_cap) {
    throw std::invalid_argument("instance has " + std::to_string(instance.n_vars()) + " variables, solver cap is " +
                                std::to_string(var_cap));
  }
  return Backtracker(instance).run();
}

bool evaluate(const CnfInstance& instance, const Assignment& assignment) {
  if (assignment.values.size() != static_cast<std::size_t>(instance.n_vars())) {
    throw std::invalid_argument("assignment covers " + std::to_string(assignment.values.size()) +
                                " variables, instance has " + std::to_string(instance.n_vars()));
  }
  return std::all_of(instance.clauses().begin(), instance.clauses().end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](Literal l) { return assignment.value(l); });
  });
}

}  // namespace wcw
