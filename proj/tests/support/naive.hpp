#pragma once

// Textbook reference implementations used to cross-check the library.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "pdep/pdep.hpp"

namespace pdep::testing {

// Repeat "if lhs inside, add rhs" until nothing changes.
inline std::set<VarId> naive_fd_closure(const VarTuple& seed, const std::vector<Atom>& fds) {
  std::set<VarId> out(seed.begin(), seed.end());
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& fd : fds) {
      const bool fires = std::all_of(fd.lhs.begin(), fd.lhs.end(),
                                     [&](VarId v) { return out.count(v) > 0; });
      if (!fires) continue;
      for (VarId v : fd.rhs) grew |= out.insert(v).second;
    }
  }
  return out;
}

// reach[a][b]: b reachable from a (reflexive).
inline std::vector<std::vector<char>> naive_reachability(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    reach[a][a] = 1;
    for (VarId b : adj[a]) reach[a][b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
      }
    }
  }
  return reach;
}

inline bool same_naive_component(const std::vector<std::vector<char>>& reach, VarId a, VarId b) {
  return reach[a][b] && reach[b][a];
}

// Merges duplicate rows of an equally weighted row list into a team.
inline ProbabilisticTeam team_from_rows(const VariableRegistry& reg,
                                        const std::vector<std::vector<std::string>>& rows) {
  std::map<std::vector<std::string>, long> mass;
  for (const auto& r : rows) ++mass[r];
  std::vector<std::vector<std::string>> out;
  std::vector<Rational> weights;
  for (const auto& [r, m] : mass) {
    out.push_back(r);
    weights.emplace_back(m, static_cast<long>(rows.size()));
  }
  return ProbabilisticTeam(reg, out, weights);
}

}  // namespace pdep::testing
