#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pdep/core_model.hpp"
#include "pdep/errors.hpp"

// Brute-force fixpoint of the FD / UMI / UMDE axioms. Slow on purpose and
// shares no code with the implication engine; intended as a test oracle for
// domains of at most eight variables.

namespace pdep {

constexpr std::size_t oracle_max_vars = 8;

using Edge = std::pair<VarId, VarId>;

// x_0 .. x_{L-1}, L even: step i runs from x_i to x_{(i+1) mod L} and is an
// FD edge for even i, a UMDE edge for odd i. A repeated vertex is a self-loop
// used as padding.
using AlternatingCycle = std::vector<VarId>;

namespace detail {

inline void simple_cycles_from(VarId start, VarId v, const std::vector<std::vector<char>>& red,
                               const std::vector<std::vector<char>>& blue,
                               std::vector<VarId>& path, std::vector<char>& path_red,
                               std::vector<char>& on_path,
                               std::vector<std::pair<std::vector<VarId>, std::vector<char>>>& out) {
  const VarId n = static_cast<VarId>(red.size());
  for (VarId w = start; w < n; ++w) {
    if (w == v) continue;
    for (int colour = 0; colour < 2; ++colour) {
      const bool is_red = colour == 0;
      if (!(is_red ? red[v][w] : blue[v][w])) continue;
      if (w == start) {
        path_red.push_back(is_red);
        out.emplace_back(path, path_red);
        path_red.pop_back();
      } else if (!on_path[w]) {
        on_path[w] = 1;
        path.push_back(w);
        path_red.push_back(is_red);
        simple_cycles_from(start, w, red, blue, path, path_red, on_path, out);
        path_red.pop_back();
        path.pop_back();
        on_path[w] = 0;
      }
    }
  }
}

}  // namespace detail

// Every simple directed cycle through red (directed) and blue (undirected)
// edges that uses at least one red edge, padded into strict alternation.
// Each cycle is reported once, starting at its smallest vertex; a cycle
// whose padded length exceeds `max_len` is dropped.
inline std::vector<AlternatingCycle> alternating_cycles(const std::vector<Edge>& fd_edges,
                                                        const std::vector<Edge>& umde_edges,
                                                        std::size_t num_vars,
                                                        std::size_t max_len) {
  std::vector<std::vector<char>> red(num_vars, std::vector<char>(num_vars, 0));
  auto blue = red;
  for (auto [a, b] : fd_edges) {
    if (a != b) red[a][b] = 1;
  }
  for (auto [a, b] : umde_edges) {
    if (a != b) blue[a][b] = blue[b][a] = 1;
  }

  std::vector<std::pair<std::vector<VarId>, std::vector<char>>> raw;
  for (VarId s = 0; s < num_vars; ++s) {
    std::vector<VarId> path{s};
    std::vector<char> path_red;
    std::vector<char> on_path(num_vars, 0);
    on_path[s] = 1;
    detail::simple_cycles_from(s, s, red, blue, path, path_red, on_path, raw);
  }

  std::vector<AlternatingCycle> out;
  for (const auto& [verts, reds] : raw) {
    const std::size_t m = verts.size();
    // Rotate to begin at a red step; padding then needs no wrap-around case.
    std::size_t first = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (reds[i]) {
        first = i;
        break;
      }
    }
    if (first == m) continue;
    AlternatingCycle cycle;
    bool want_red = true;
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t i = (first + j) % m;
      if (static_cast<bool>(reds[i]) != want_red) {
        cycle.push_back(verts[i]);  // self-loop of the wanted colour
        want_red = !want_red;
      }
      cycle.push_back(verts[i]);
      want_red = !want_red;
    }
    if (!want_red) cycle.push_back(verts[first]);  // closing blue self-loop
    if (cycle.size() <= max_len) out.push_back(std::move(cycle));
  }
  return out;
}

// Canonical atoms over a domain: every UMI and UMDE (reflexive ones
// included) and every FD =(S,T) with T non-empty and |S u T| <= cap.
class AtomUniverse {
 public:
  AtomUniverse(std::size_t num_vars, std::size_t arity_cap) : n_(num_vars), cap_(arity_cap) {
    if (n_ > oracle_max_vars) {
      throw DomainTooLarge("atom universe is limited to " + std::to_string(oracle_max_vars) +
                           " variables");
    }
    for (VarId x = 0; x < n_; ++x) {
      for (VarId y = 0; y < n_; ++y) atoms_.push_back(make_umi(x, y));
    }
    for (VarId x = 0; x < n_; ++x) {
      for (VarId y = 0; y < n_; ++y) atoms_.push_back(make_umde(x, y));
    }
    const std::uint32_t full = (1u << n_) - 1;
    for (std::uint32_t s = 0; s <= full; ++s) {
      for (std::uint32_t t = 1; t <= full; ++t) {
        if (static_cast<std::size_t>(std::popcount(s | t)) <= cap_) {
          atoms_.push_back(make_fd(to_vars(s), to_vars(t)));
        }
      }
    }
  }

  std::size_t num_vars() const { return n_; }
  std::size_t arity_cap() const { return cap_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  static VarTuple to_vars(std::uint32_t mask) {
    VarTuple out;
    for (VarId v = 0; mask >> v; ++v) {
      if (mask >> v & 1) out.push_back(v);
    }
    return out;
  }

 private:
  std::size_t n_;
  std::size_t cap_;
  std::vector<Atom> atoms_;
};

class AxiomaticClosure {
 public:
  AxiomaticClosure(const DependencySet& sigma, std::size_t arity_cap)
      : n_(sigma.domain().size()),
        universe_(n_, arity_cap),
        cl_(std::size_t{1} << n_),
        umi_(n_, std::vector<char>(n_, 0)),
        umde_(n_, std::vector<char>(n_, 0)) {
    for (std::uint32_t s = 0; s < cl_.size(); ++s) cl_[s] = s;  // FD1
    for (VarId v = 0; v < n_; ++v) umi_[v][v] = umde_[v][v] = 1;  // UMI1, UMDE1
    for (const auto& a : sigma.atoms()) {
      if (a.kind == AtomKind::fd) {
        cl_[mask_of(a.lhs)] |= mask_of(a.rhs);
      } else if (a.kind == AtomKind::mi && a.is_unary()) {
        umi_[a.lhs[0]][a.rhs[0]] = 1;
      } else if (a.kind == AtomKind::mde && a.is_unary()) {
        umde_[a.lhs[0]][a.rhs[0]] = 1;
      } else {
        throw UnsupportedAtom("oracle handles FDs, UMIs and UMDEs only; got '" +
                              to_string(a, sigma.domain()) + "'");
      }
    }
    while (apply_rules()) {
    }
  }

  bool contains(const Atom& a) const {
    switch (a.kind) {
      case AtomKind::fd: {
        const auto t = mask_of(a.rhs);
        return (cl_[mask_of(a.lhs)] & t) == t;
      }
      case AtomKind::mi:
        if (a.is_unary()) return umi_[a.lhs[0]][a.rhs[0]] != 0;
        break;
      case AtomKind::mde:
        if (a.is_unary()) return umde_[a.lhs[0]][a.rhs[0]] != 0;
        break;
      case AtomKind::ind: break;
    }
    throw UnsupportedQuery("oracle answers FDs, UMIs and UMDEs only");
  }

  // Members of the capped universe, in universe order.
  std::vector<Atom> atoms() const {
    std::vector<Atom> out;
    for (const auto& a : universe_.atoms()) {
      if (contains(a)) out.push_back(a);
    }
    return out;
  }

  const AtomUniverse& universe() const { return universe_; }
  std::size_t rounds() const { return rounds_; }

 private:
  std::uint32_t mask_of(const VarTuple& vars) const {
    std::uint32_t m = 0;
    for (VarId v : vars) {
      if (v >= n_) throw UnknownVariable("variable outside the oracle domain");
      m |= 1u << v;
    }
    return m;
  }

  static bool set(std::vector<char>& row, VarId j) {
    if (row[j]) return false;
    row[j] = 1;
    return true;
  }

  bool widen(std::uint32_t s, std::uint32_t t) {
    const auto before = cl_[s];
    cl_[s] |= t;
    return cl_[s] != before;
  }

  bool apply_rules() {
    ++rounds_;
    bool changed = false;
    const std::uint32_t full = static_cast<std::uint32_t>(cl_.size()) - 1;

    // FD3: =(S,T) gives =(S u {x}, T u {x}); FD1 already put x on the right.
    for (std::uint32_t s = 0; s <= full; ++s) {
      for (VarId x = 0; x < n_; ++x) changed |= widen(s | 1u << x, cl_[s]);
    }
    // FD2: =(S,T) and =(T,U) give =(S,U); every T inside cl(S) is derivable.
    for (std::uint32_t s = 0; s <= full; ++s) {
      const std::uint32_t c = cl_[s];
      for (std::uint32_t t = c;; t = (t - 1) & c) {
        changed |= widen(s, cl_[t]);
        if (t == 0) break;
      }
    }

    for (VarId x = 0; x < n_; ++x) {
      for (VarId y = 0; y < n_; ++y) {
        if (umi_[x][y]) {
          changed |= set(umi_[y], x);   // UMI2
          changed |= set(umde_[x], y);  // UMI & UMDE
        }
        if (umde_[x][y]) changed |= set(umde_[y], x);  // UMDE2
      }
    }
    for (VarId x = 0; x < n_; ++x) {  // UMI3, UMDE3
      for (VarId y = 0; y < n_; ++y) {
        for (VarId z = 0; z < n_; ++z) {
          if (umi_[x][y] && umi_[y][z]) changed |= set(umi_[x], z);
          if (umde_[x][y] && umde_[y][z]) changed |= set(umde_[x], z);
        }
      }
    }

    // Cycle rules: every FD step of an alternating cycle is reversed and
    // gains a UMDE.
    std::vector<Edge> fd_edges, umde_edges;
    for (VarId x = 0; x < n_; ++x) {
      for (VarId y = 0; y < n_; ++y) {
        if (x == y) continue;
        if (cl_[1u << x] >> y & 1) fd_edges.push_back({x, y});
        if (x < y && umde_[x][y]) umde_edges.push_back({x, y});
      }
    }
    for (const auto& cycle : alternating_cycles(fd_edges, umde_edges, n_, 2 * n_)) {
      const std::size_t len = cycle.size();
      for (std::size_t i = 0; i < len; i += 2) {
        const VarId from = cycle[i];
        const VarId to = cycle[(i + 1) % len];
        if (from == to) continue;
        changed |= widen(1u << to, 1u << from);
        changed |= set(umde_[from], to);
      }
    }
    return changed;
  }

  std::size_t n_;
  AtomUniverse universe_;
  std::vector<std::uint32_t> cl_;  // cl_[S] = largest T with =(S,T) derived
  std::vector<std::vector<char>> umi_, umde_;
  std::size_t rounds_ = 0;
};

inline AxiomaticClosure axiomatic_closure(const DependencySet& sigma, std::size_t arity_cap) {
  return AxiomaticClosure(sigma, arity_cap);
}

}  // namespace pdep
