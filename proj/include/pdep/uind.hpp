#pragma once

#include <algorithm>
#include <vector>

#include "pdep/core_model.hpp"
#include "pdep/errors.hpp"
#include "pdep/fd_closure.hpp"
#include "pdep/scc.hpp"

namespace pdep {

// Sigma_FD plus x <= y and y <= x for every unary marginal identity x ~ y.
inline DependencySet translate(const DependencySet& sigma) {
  DependencySet out(sigma.domain());
  for (const auto& a : sigma.atoms()) {
    if (a.kind == AtomKind::fd) {
      out.add(a);
    } else if (a.kind == AtomKind::mi && a.is_unary()) {
      out.add(make_uind(a.lhs[0], a.rhs[0]));
      out.add(make_uind(a.rhs[0], a.lhs[0]));
    } else {
      throw UnsupportedAtom("translation covers FDs and unary marginal identities only; got '" +
                            to_string(a, sigma.domain()) + "'");
    }
  }
  return out;
}

// Saturated FD + UIND graph. Both edge colours point from larger to smaller
// (or equal) value counts: red y->z for =(y,z), green x->y for y <= x.
struct UindGraph {
  std::size_t num_vars = 0;
  std::vector<VarTuple> desclist;
  std::vector<std::vector<char>> green;  // reflexive and transitive

  bool included(VarId sub, VarId super) const {
    if (sub == super) return true;
    if (sub >= num_vars || super >= num_vars) return false;
    return green[super][sub] != 0;
  }
};

namespace detail {

inline void require_uind_atom(const Atom& a, const VariableRegistry& reg) {
  const bool ok = a.kind == AtomKind::fd || (a.kind == AtomKind::ind && a.is_unary());
  if (!ok) {
    throw UnsupportedAtom("FD + unary inclusion procedure got '" + to_string(a, reg) + "'");
  }
}

inline void close_transitively(std::vector<std::vector<char>>& m) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) m[i][j] = m[i][j] || m[k][j];
    }
  }
}

}  // namespace detail

// Cycles of red and green edges force all value counts on them to be equal;
// an FD between equal finite counts is a bijection and an inclusion between
// equal counts is an equality, so every edge inside an SCC is reversed.
inline UindGraph saturate_uind(const DependencySet& sigma_star, std::size_t num_vars = 0) {
  const std::size_t n = std::max(num_vars, sigma_star.domain().size());
  FdList fds(n);
  UindGraph g;
  g.num_vars = n;
  g.green.assign(n, std::vector<char>(n, 0));
  for (VarId v = 0; v < n; ++v) g.green[v][v] = 1;
  for (const auto& a : sigma_star.atoms()) {
    detail::require_uind_atom(a, sigma_star.domain());
    if (a.kind == AtomKind::fd) {
      fds.add(a);
    } else {
      g.green[a.rhs[0]][a.lhs[0]] = 1;
    }
  }

  std::vector<FdClosure> closures;
  closures.reserve(n);
  for (VarId y = 0; y < n; ++y) closures.emplace_back(std::span<const VarId>(&y, 1), n);

  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& c : closures) c.advance(fds);
    detail::close_transitively(g.green);

    Adjacency adj(n);
    for (VarId y = 0; y < n; ++y) {
      for (VarId z : closures[y].members()) {
        if (z != y) adj[y].push_back(z);
      }
      for (VarId z = 0; z < n; ++z) {
        if (z != y && g.green[y][z]) adj[y].push_back(z);
      }
    }
    const auto scc = strongly_connected_components(adj);

    for (VarId y = 0; y < n; ++y) {
      for (VarId z : closures[y].members()) {
        if (z != y && scc.same(y, z) && !closures[z].contains(y)) {
          fds.add({z}, {y});
          changed = true;
        }
      }
      for (VarId z = 0; z < n; ++z) {
        if (g.green[y][z] && !g.green[z][y] && scc.same(y, z)) {
          g.green[z][y] = 1;
          changed = true;
        }
      }
    }
  }

  for (auto& c : closures) g.desclist.push_back(c.sorted_members());
  return g;
}

// sigma_star |= query for FDs (any arity), constancy atoms and unary
// inclusions, over finite teams.
inline bool decide_uind(const DependencySet& sigma_star, const Atom& query) {
  detail::require_uind_atom(query, sigma_star.domain());
  const auto g = saturate_uind(sigma_star, max_var(query) + 1);
  if (query.kind == AtomKind::ind) return g.included(query.lhs[0], query.rhs[0]);

  const std::size_t n = g.num_vars;
  FdList delta(n);
  for (const auto& a : sigma_star.atoms()) {
    if (a.kind == AtomKind::fd) delta.add(a);
  }
  for (VarId y = 0; y < n; ++y) delta.add({y}, g.desclist[y]);
  const VarTuple lhs = sorted_unique(query.lhs);
  FdClosure closure(lhs, n);
  closure.advance(delta);
  return std::all_of(query.rhs.begin(), query.rhs.end(),
                     [&](VarId v) { return closure.contains(v); });
}

// FD + UMI implication answered through the inclusion translation. One
// inclusion direction suffices for x ~ y since every identity was
// translated symmetrically.
inline bool decide_via_simulation(const DependencySet& sigma, const Atom& query) {
  const auto sigma_star = translate(sigma);
  switch (query.kind) {
    case AtomKind::fd: return decide_uind(sigma_star, query);
    case AtomKind::mi:
      if (query.is_unary()) return decide_uind(sigma_star, make_uind(query.lhs[0], query.rhs[0]));
      break;
    default: break;
  }
  throw UnsupportedAtom("simulation answers FD and unary marginal identity queries only; got '" +
                        to_string(query, sigma.domain()) + "'");
}

}  // namespace pdep
