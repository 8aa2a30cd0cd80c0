#pragma once

#include <memory>
#include <optional>
#include <queue>
#include <vector>

#include "pdep/core_model.hpp"
#include "pdep/errors.hpp"
#include "pdep/fd_closure.hpp"
#include "pdep/scc.hpp"

namespace pdep {

// Vertices are variable ids. Red edges are directed (FDs), black and blue
// edges undirected (marginal identity / distribution equivalence). Every
// vertex carries implicit self-loops of all three colours.
class ColoredMultigraph {
 public:
  ColoredMultigraph() = default;
  explicit ColoredMultigraph(std::size_t n)
      : n_(n), red_(n * n, 0), black_(n * n, 0), blue_(n * n, 0) {}

  std::size_t num_vertices() const { return n_; }

  bool red(VarId from, VarId to) const { return from == to || red_[from * n_ + to]; }
  bool black(VarId a, VarId b) const { return a == b || black_[a * n_ + b]; }
  bool blue(VarId a, VarId b) const { return a == b || blue_[a * n_ + b]; }

  void add_red(VarId from, VarId to) { red_[from * n_ + to] = 1; }
  void add_black(VarId a, VarId b) { black_[a * n_ + b] = black_[b * n_ + a] = 1; }
  void add_blue(VarId a, VarId b) { blue_[a * n_ + b] = blue_[b * n_ + a] = 1; }

  // Colours ignored; undirected edges count both ways; self-loops dropped.
  Adjacency uncolored_adjacency() const {
    Adjacency adj(n_);
    for (VarId a = 0; a < n_; ++a) {
      for (VarId b = 0; b < n_; ++b) {
        if (a != b && (red_[a * n_ + b] || black_[a * n_ + b] || blue_[a * n_ + b])) {
          adj[a].push_back(b);
        }
      }
    }
    return adj;
  }

 private:
  std::size_t n_ = 0;
  std::vector<char> red_, black_, blue_;
};

inline SccPartition tarjan_scc(const ColoredMultigraph& g) {
  return strongly_connected_components(g.uncolored_adjacency());
}

// Fixpoint of the FD + marginal-equivalence saturation loop.
struct SaturatedClosure {
  // red: z in desclist(y); blue: UMI/UMDE edges plus every red pair that
  // ended up inside one strongly connected component; black: input UMIs.
  ColoredMultigraph graph;
  // desclist[y] = {z | sigma |= =(y, z)}, sorted.
  std::vector<VarTuple> desclist;
  std::size_t iterations = 0;
};

namespace detail {

inline void require_engine_atoms(const DependencySet& sigma) {
  for (const auto& a : sigma.atoms()) {
    const bool ok = a.kind == AtomKind::fd ||
                    ((a.kind == AtomKind::mi || a.kind == AtomKind::mde) && a.is_unary());
    if (!ok) {
      throw UnsupportedAtom("implication engine handles FDs, unary marginal identities and "
                            "unary distribution equivalences only; got '" +
                            to_string(a, sigma.domain()) + "'");
    }
  }
}

}  // namespace detail

// Runs the closure loop over all variables of `sigma` (plus any extra
// vertices up to `num_vars`):
//   1. Beeri-Bernstein closure from every single variable.
//   2. SCCs of the red+blue graph, colours ignored.
//   3. Inside each SCC, every red edge y->z gains z->y and a blue y-z edge.
//   4. Newly added red edges are appended to the shared FD list; repeat
//      until step 3 adds no red edge.
inline SaturatedClosure closure_saturate(const DependencySet& sigma, std::size_t num_vars = 0) {
  detail::require_engine_atoms(sigma);
  const std::size_t n = std::max(num_vars, sigma.domain().size());

  FdList fds(n);
  ColoredMultigraph g(n);
  for (const auto& a : sigma.atoms()) {
    if (a.kind == AtomKind::fd) {
      fds.add(a);
    } else {
      if (a.kind == AtomKind::mi) g.add_black(a.lhs[0], a.rhs[0]);
      g.add_blue(a.lhs[0], a.rhs[0]);
    }
  }

  std::vector<FdClosure> closures;
  closures.reserve(n);
  for (VarId y = 0; y < n; ++y) closures.emplace_back(std::span<const VarId>(&y, 1), n);

  SaturatedClosure out;
  while (true) {
    ++out.iterations;
    for (auto& c : closures) c.advance(fds);

    Adjacency adj(n);
    for (VarId y = 0; y < n; ++y) {
      for (VarId z : closures[y].members()) {
        if (z != y) adj[y].push_back(z);
      }
      for (VarId z = 0; z < n; ++z) {
        if (z != y && g.blue(y, z)) adj[y].push_back(z);
      }
    }
    const auto scc = strongly_connected_components(adj);

    bool new_red = false;
    for (VarId y = 0; y < n; ++y) {
      for (VarId z : closures[y].members()) {
        if (z == y || !scc.same(y, z)) continue;
        g.add_blue(y, z);
        if (!closures[z].contains(y)) {
          fds.add({z}, {y});
          new_red = true;
        }
      }
    }
    if (!new_red) break;
  }

  for (VarId y = 0; y < n; ++y) {
    for (VarId z : closures[y].members()) g.add_red(y, z);
  }
  out.desclist.reserve(n);
  for (auto& c : closures) out.desclist.push_back(c.sorted_members());
  out.graph = std::move(g);
  return out;
}

// Decides sigma |= query for FDs (any arity), constancy atoms, UMIs and
// UMDEs. Saturation runs once at construction; queries are cheap.
class ImplicationEngine {
 public:
  explicit ImplicationEngine(const DependencySet& sigma, std::size_t num_vars = 0)
      : n_(std::max(num_vars, sigma.domain().size())),
        saturated_(closure_saturate(sigma, n_)),
        umi_class_(n_),
        blue_class_(n_),
        delta_(n_) {
    const auto parts = partition(sigma);

    // UMIs are never produced by the FD/UMDE rules: plain reachability over
    // the input UMIs suffices.
    Adjacency umi(n_);
    for (const auto& a : parts.umis) {
      umi[a.lhs[0]].push_back(a.rhs[0]);
      umi[a.rhs[0]].push_back(a.lhs[0]);
    }
    label_components(umi, umi_class_);

    Adjacency blue(n_);
    for (VarId a = 0; a < n_; ++a) {
      for (VarId b = 0; b < n_; ++b) {
        if (a != b && saturated_.graph.blue(a, b)) blue[a].push_back(b);
      }
    }
    label_components(blue, blue_class_);

    // Sigma_FD plus one FD =(y, desclist(y)) per variable.
    for (const auto& a : parts.fds) delta_.add(a);
    for (VarId y = 0; y < n_; ++y) delta_.add({y}, saturated_.desclist[y]);
  }

  std::size_t num_vars() const { return n_; }
  const SaturatedClosure& saturated() const { return saturated_; }
  const VarTuple& desclist(VarId y) const { return saturated_.desclist.at(y); }

  // {z | sigma |= =(seed, z)} restricted to known variables, sorted.
  VarTuple closure_of(const VarTuple& seed) const {
    VarTuple known;
    for (VarId v : seed) {
      if (v < n_) known.push_back(v);
    }
    if (known.size() == 1) return desclist(known.front());
    FdClosure c(known, n_);
    c.advance(delta_);
    return c.sorted_members();
  }

  bool implies(const Atom& query) const {
    switch (query.kind) {
      case AtomKind::fd: return implies_fd(query);
      case AtomKind::mi:
        require_unary(query);
        return same_class(umi_class_, query.lhs[0], query.rhs[0]);
      case AtomKind::mde:
        require_unary(query);
        return same_class(blue_class_, query.lhs[0], query.rhs[0]);
      case AtomKind::ind: break;
    }
    throw UnsupportedQuery("inclusion queries are not decided by the implication engine");
  }

  bool umi_equivalent(VarId x, VarId y) const { return same_class(umi_class_, x, y); }
  bool umde_equivalent(VarId x, VarId y) const { return same_class(blue_class_, x, y); }

 private:
  static void label_components(const Adjacency& adj, std::vector<std::size_t>& label) {
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::fill(label.begin(), label.end(), none);
    std::size_t next = 0;
    for (VarId s = 0; s < adj.size(); ++s) {
      if (label[s] != none) continue;
      std::queue<VarId> q;
      q.push(s);
      label[s] = next;
      while (!q.empty()) {
        const VarId v = q.front();
        q.pop();
        for (VarId w : adj[v]) {
          if (label[w] == none) {
            label[w] = next;
            q.push(w);
          }
        }
      }
      ++next;
    }
  }

  // Variables beyond the saturated domain are isolated vertices.
  bool same_class(const std::vector<std::size_t>& label, VarId x, VarId y) const {
    if (x == y) return true;
    if (x >= n_ || y >= n_) return false;
    return label[x] == label[y];
  }

  static void require_unary(const Atom& q) {
    if (!q.is_unary()) {
      throw UnsupportedQuery("only unary marginal identity / distribution equivalence "
                             "queries are supported");
    }
  }

  bool implies_fd(const Atom& q) const {
    const VarTuple lhs = sorted_unique(q.lhs);
    const VarTuple closure = closure_of(lhs);
    for (VarId v : q.rhs) {
      const bool determined = v < n_ ? std::binary_search(closure.begin(), closure.end(), v)
                                     : std::binary_search(lhs.begin(), lhs.end(), v);
      if (!determined) return false;
    }
    return true;
  }

  std::size_t n_;
  SaturatedClosure saturated_;
  std::vector<std::size_t> umi_class_;
  std::vector<std::size_t> blue_class_;
  FdList delta_;
};

}  // namespace pdep
