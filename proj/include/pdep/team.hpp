#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pdep/core_model.hpp"
#include "pdep/errors.hpp"

namespace pdep {

using Rational = boost::multiprecision::cpp_rational;

// Interned cell value. Two cells hold the same token iff their ids match,
// across columns as well as within one.
using ValueId = std::uint32_t;

// A finite set of total assignments over `domain`, each with a positive
// rational weight; weights sum to exactly 1. Cell values are opaque tokens
// compared only for equality.
class ProbabilisticTeam {
 public:
  ProbabilisticTeam(VariableRegistry domain,
                    const std::vector<std::vector<std::string>>& rows,
                    std::vector<Rational> weights)
      : domain_(std::move(domain)), weights_(std::move(weights)) {
    if (rows.size() != weights_.size()) {
      throw WeightError("expected one weight per row");
    }
    Rational total = 0;
    for (const auto& w : weights_) {
      if (w <= 0) throw WeightError("weight must be positive, got " + w.str());
      total += w;
    }
    if (total != 1) throw WeightError("weights sum to " + total.str() + ", not 1");

    cells_.reserve(rows.size() * domain_.size());
    std::set<std::vector<ValueId>> seen;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != domain_.size()) {
        throw Error("row " + std::to_string(r + 1) + " has " +
                    std::to_string(rows[r].size()) + " cells, expected " +
                    std::to_string(domain_.size()));
      }
      std::vector<ValueId> ids;
      ids.reserve(rows[r].size());
      for (const auto& cell : rows[r]) ids.push_back(intern(cell));
      if (!seen.insert(ids).second) {
        throw DuplicateRowError("row " + std::to_string(r + 1) +
                                " repeats an earlier assignment");
      }
      cells_.insert(cells_.end(), ids.begin(), ids.end());
    }
  }

  // Uniform distribution over the given rows.
  static ProbabilisticTeam uniform(VariableRegistry domain,
                                   const std::vector<std::vector<std::string>>& rows) {
    std::vector<Rational> w(rows.size(), Rational(1, std::max<std::size_t>(rows.size(), 1)));
    return ProbabilisticTeam(std::move(domain), rows, std::move(w));
  }

  const VariableRegistry& domain() const { return domain_; }
  std::size_t num_rows() const { return weights_.size(); }
  std::size_t num_columns() const { return domain_.size(); }

  ValueId value_id(std::size_t row, VarId var) const {
    return cells_[row * domain_.size() + var];
  }
  const std::string& value(std::size_t row, VarId var) const {
    return values_[value_id(row, var)];
  }
  const std::string& token(ValueId id) const { return values_[id]; }
  const Rational& weight(std::size_t row) const { return weights_[row]; }

  void require_known(const VarTuple& vars) const {
    for (VarId v : vars) {
      if (v >= domain_.size()) {
        throw UnknownVariable("variable id " + std::to_string(v) +
                              " is not a column of the team");
      }
    }
  }

  std::vector<ValueId> project(std::size_t row, const VarTuple& vars) const {
    std::vector<ValueId> out;
    out.reserve(vars.size());
    for (VarId v : vars) out.push_back(value_id(row, v));
    return out;
  }

  // Equal iff same column names, same rows (as strings) in the same order,
  // same weights.
  friend bool operator==(const ProbabilisticTeam& a, const ProbabilisticTeam& b) {
    if (!(a.domain_ == b.domain_) || a.weights_ != b.weights_) return false;
    for (std::size_t r = 0; r < a.num_rows(); ++r) {
      for (VarId v = 0; v < a.num_columns(); ++v) {
        if (a.value(r, v) != b.value(r, v)) return false;
      }
    }
    return true;
  }

 private:
  ValueId intern(const std::string& token) {
    auto [it, inserted] = value_ids_.try_emplace(token, static_cast<ValueId>(values_.size()));
    if (inserted) values_.push_back(token);
    return it->second;
  }

  VariableRegistry domain_;
  std::vector<ValueId> cells_;  // row-major
  std::vector<Rational> weights_;
  std::vector<std::string> values_;
  std::unordered_map<std::string, ValueId> value_ids_;
};

// Value tuple -> marginal probability, for the tuples that occur.
using Marginal = std::map<std::vector<ValueId>, Rational>;

inline Marginal marginal(const ProbabilisticTeam& t, const VarTuple& xs) {
  t.require_known(xs);
  Marginal m;
  for (std::size_t r = 0; r < t.num_rows(); ++r) m[t.project(r, xs)] += t.weight(r);
  return m;
}

// Number of distinct values |X(xs)|.
inline std::size_t value_count(const ProbabilisticTeam& t, const VarTuple& xs) {
  t.require_known(xs);
  std::set<std::vector<ValueId>> seen;
  for (std::size_t r = 0; r < t.num_rows(); ++r) seen.insert(t.project(r, xs));
  return seen.size();
}

inline bool satisfies_fd(const ProbabilisticTeam& t, const Atom& a) {
  t.require_known(a.lhs);
  t.require_known(a.rhs);
  std::map<std::vector<ValueId>, std::vector<ValueId>> image;
  for (std::size_t r = 0; r < t.num_rows(); ++r) {
    auto [it, inserted] = image.try_emplace(t.project(r, a.lhs), t.project(r, a.rhs));
    if (!inserted && it->second != t.project(r, a.rhs)) return false;
  }
  return true;
}

inline bool satisfies_ind(const ProbabilisticTeam& t, const Atom& a) {
  t.require_known(a.lhs);
  t.require_known(a.rhs);
  if (a.lhs.size() != a.rhs.size()) throw ArityError("inclusion sides differ in length");
  std::set<std::vector<ValueId>> targets;
  for (std::size_t r = 0; r < t.num_rows(); ++r) targets.insert(t.project(r, a.rhs));
  for (std::size_t r = 0; r < t.num_rows(); ++r) {
    if (!targets.contains(t.project(r, a.lhs))) return false;
  }
  return true;
}

inline bool satisfies_mi(const ProbabilisticTeam& t, const Atom& a) {
  if (a.lhs.size() != a.rhs.size()) throw ArityError("marginal identity sides differ in length");
  return marginal(t, a.lhs) == marginal(t, a.rhs);
}

// Sorted multiset of marginal probabilities.
inline std::vector<Rational> marginal_masses(const ProbabilisticTeam& t, const VarTuple& xs) {
  std::vector<Rational> out;
  for (auto& [tuple, p] : marginal(t, xs)) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool satisfies_mde(const ProbabilisticTeam& t, const Atom& a) {
  if (a.lhs.size() != a.rhs.size()) {
    throw ArityError("distribution equivalence sides differ in length");
  }
  return marginal_masses(t, a.lhs) == marginal_masses(t, a.rhs);
}

inline bool satisfies(const ProbabilisticTeam& t, const Atom& a) {
  switch (a.kind) {
    case AtomKind::fd: return satisfies_fd(t, a);
    case AtomKind::ind: return satisfies_ind(t, a);
    case AtomKind::mi: return satisfies_mi(t, a);
    case AtomKind::mde: return satisfies_mde(t, a);
  }
  return false;
}

struct SetCheck {
  bool satisfied = true;
  std::optional<Atom> first_failure;

  explicit operator bool() const { return satisfied; }
};

inline SetCheck satisfies_set(const ProbabilisticTeam& t, const std::vector<Atom>& atoms) {
  for (const auto& a : atoms) {
    if (!satisfies(t, a)) return {false, a};
  }
  return {};
}

inline SetCheck satisfies_set(const ProbabilisticTeam& t, const DependencySet& sigma) {
  return satisfies_set(t, sigma.atoms());
}

}  // namespace pdep
