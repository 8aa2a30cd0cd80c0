#pragma once

#include <optional>

#include "pdep/armstrong.hpp"
#include "pdep/core_model.hpp"
#include "pdep/engine.hpp"
#include "pdep/errors.hpp"
#include "pdep/team.hpp"

namespace pdep {

struct Verdict {
  bool implied = false;
  std::optional<ProbabilisticTeam> witness;  // set only when requested and not implied

  explicit operator bool() const { return implied; }
};

// Team satisfying sigma and violating `query`. Multi-variable FD queries get
// the targeted construction; everything else is refuted by the unary team.
inline ProbabilisticTeam counterexample(const DependencySet& sigma, const Atom& query) {
  const std::size_t n = sigma.domain().size();
  for (VarId v : query.lhs) {
    if (v >= n) throw UnknownVariable("query variable is not in the domain of sigma");
  }
  for (VarId v : query.rhs) {
    if (v >= n) throw UnknownVariable("query variable is not in the domain of sigma");
  }

  const bool targeted = query.kind == AtomKind::fd && sorted_unique(query.lhs).size() >= 2;
  ProbabilisticTeam team = [&] {
    if (targeted) return build_targeted_team(sigma, query);
    if (ImplicationEngine(sigma).implies(query)) {
      throw QueryImplied("the query is implied; no refuting team exists");
    }
    return build_unary_team(sigma);
  }();

  const auto check = satisfies_set(team, sigma);
  if (!check) {
    throw InternalError("counterexample violates '" +
                        to_string(*check.first_failure, sigma.domain()) + "'");
  }
  if (satisfies(team, query)) {
    throw InternalError("counterexample satisfies the query '" +
                        to_string(query, sigma.domain()) + "'");
  }
  return team;
}

inline Verdict decide(const DependencySet& sigma, const Atom& query, bool want_witness = false) {
  const ImplicationEngine engine(sigma, max_var(query) + 1);
  Verdict v;
  v.implied = engine.implies(query);
  if (!v.implied && want_witness) v.witness = counterexample(sigma, query);
  return v;
}

}  // namespace pdep
