#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdep/core_model.hpp"
#include "pdep/engine.hpp"
#include "pdep/errors.hpp"
#include "pdep/team.hpp"

namespace pdep {

// G(cl(sigma)): red = all implied unary FDs, black = implied UMIs, blue =
// implied UMDEs. Every colour is reflexive and transitive, black is contained
// in blue, and inside an SCC red is symmetric and blue is total.
struct ClosedGraph {
  ColoredMultigraph graph;
  std::vector<VarTuple> desclist;
  VarTuple constants;  // x with sigma |= =(x)
};

inline ClosedGraph build_graph_closed(const ImplicationEngine& engine) {
  const std::size_t n = engine.num_vars();
  ClosedGraph out{ColoredMultigraph(n), {}, engine.closure_of({})};
  for (VarId y = 0; y < n; ++y) {
    out.desclist.push_back(engine.desclist(y));
    for (VarId z : engine.desclist(y)) out.graph.add_red(y, z);
    for (VarId z = y + 1; z < n; ++z) {
      if (engine.umi_equivalent(y, z)) out.graph.add_black(y, z);
      if (engine.umde_equivalent(y, z)) out.graph.add_blue(y, z);
    }
  }
  return out;
}

inline ClosedGraph build_graph_closed(const DependencySet& sigma) {
  return build_graph_closed(ImplicationEngine(sigma));
}

// Components numbered so that every descendant component has a larger
// number than its ancestors; ties go to the smaller member id. On a closed
// graph the constants, if any, form the last component.
using SccNumbering = SccPartition;

inline SccNumbering scc_numbering(const ColoredMultigraph& g) { return tarjan_scc(g); }

struct ComponentCliques {
  VarTuple members;              // also the single blue clique
  std::vector<VarTuple> red;     // maximal red cliques, by smallest member
  std::vector<VarTuple> black;   // maximal black cliques, by smallest member
};

namespace detail {

template <class Related>
std::vector<VarTuple> group_by(const VarTuple& members, Related related) {
  std::vector<VarTuple> groups;
  std::vector<char> taken(members.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (taken[i]) continue;
    VarTuple group;
    for (std::size_t j = i; j < members.size(); ++j) {
      if (!taken[j] && related(members[i], members[j])) {
        taken[j] = 1;
        group.push_back(members[j]);
      }
    }
    groups.push_back(std::move(group));
  }
  return groups;
}

}  // namespace detail

inline std::vector<ComponentCliques> clique_partition(const ColoredMultigraph& g,
                                                      const SccNumbering& scc) {
  std::vector<ComponentCliques> out;
  for (const auto& members : scc.components) {
    ComponentCliques c;
    c.members = members;
    c.red = detail::group_by(members, [&](VarId a, VarId b) { return g.red(a, b) && g.red(b, a); });
    c.black = detail::group_by(members, [&](VarId a, VarId b) { return g.black(a, b); });
    out.push_back(std::move(c));
  }
  return out;
}

// Rows of cells that are either empty or hold a natural number; zero marks
// "functionally determined" until the final renaming of constant columns.
class PartialTable {
 public:
  static constexpr long empty = -1;

  explicit PartialTable(std::size_t num_columns) : width_(num_columns), zeros_(num_columns, 0) {}

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_columns() const { return width_; }
  long cell(std::size_t row, VarId col) const { return rows_[row][col]; }
  std::size_t zero_count(VarId col) const { return zeros_[col]; }

  std::size_t empty_count(VarId col) const {
    std::size_t d = 0;
    for (const auto& r : rows_) d += r[col] == empty ? 1 : 0;
    return d;
  }

  // Zeros exactly at `zero_columns`, all other cells empty.
  std::size_t add_row(const VarTuple& zero_columns) {
    std::vector<long> row(width_, empty);
    for (VarId v : zero_columns) row[v] = 0;
    return push(std::move(row));
  }

  std::size_t repeat_row(std::size_t index) { return push(rows_[index]); }

  // Rows with no empty cell are all-zero and therefore identical; keeps the
  // first. Every column loses the same number of zeros.
  void drop_duplicate_full_rows() {
    bool kept = false;
    std::vector<std::vector<long>> out;
    for (auto& r : rows_) {
      const bool full = std::none_of(r.begin(), r.end(), [](long c) { return c == empty; });
      if (full && kept) {
        for (auto& z : zeros_) --z;
        continue;
      }
      kept = kept || full;
      out.push_back(std::move(r));
    }
    rows_ = std::move(out);
  }

  // Fills the empty cells of `col` top to bottom with 1..d-1 and then d+k.
  void fill_column(VarId col, long k) {
    const auto d = static_cast<long>(empty_count(col));
    long next = 1;
    long seen = 0;
    for (auto& r : rows_) {
      if (r[col] != empty) continue;
      ++seen;
      r[col] = seen == d ? d + k : next++;
    }
  }

  void rename_zeros(VarId col, long value) {
    for (auto& r : rows_) {
      if (r[col] == 0) r[col] = value;
    }
  }

 private:
  std::size_t push(std::vector<long> row) {
    for (VarId v = 0; v < width_; ++v) zeros_[v] += row[v] == 0 ? 1 : 0;
    rows_.push_back(std::move(row));
    return rows_.size() - 1;
  }

  std::size_t width_;
  std::vector<std::vector<long>> rows_;
  std::vector<std::size_t> zeros_;
};

// Steps before filling: optional leading rows for multi-variable left-hand
// sides, the all-zero row, one row per red clique (component by component,
// topped up so that zero counts are equal inside a component and strictly
// increase from one component to the next), and a final all-empty row when
// some non-constant column would otherwise have no empty cell.
inline PartialTable build_partial_table(const ClosedGraph& closed,
                                        const std::vector<VarTuple>& leading_zero_sets = {}) {
  const std::size_t n = closed.graph.num_vertices();
  const auto scc = scc_numbering(closed.graph);
  const auto cliques = clique_partition(closed.graph, scc);

  PartialTable table(n);
  for (const auto& zeros : leading_zero_sets) table.add_row(zeros);

  VarTuple all(n);
  for (VarId v = 0; v < n; ++v) all[v] = v;
  table.add_row(all);

  std::optional<std::size_t> previous_count;
  for (const auto& component : cliques) {
    std::vector<std::size_t> last_row;
    for (const auto& clique : component.red) {
      last_row.push_back(table.add_row(closed.desclist[clique.front()]));
    }
    std::size_t target = 0;
    for (const auto& clique : component.red) {
      target = std::max(target, table.zero_count(clique.front()));
    }
    if (previous_count && target <= *previous_count) target = *previous_count + 1;
    for (std::size_t i = 0; i < component.red.size(); ++i) {
      while (table.zero_count(component.red[i].front()) < target) table.repeat_row(last_row[i]);
    }
    previous_count = target;
  }

  table.drop_duplicate_full_rows();

  bool needs_empty_row = false;
  for (VarId v = 0; v < n; ++v) {
    const bool constant = std::binary_search(closed.constants.begin(), closed.constants.end(), v);
    if (!constant && table.empty_count(v) == 0) needs_empty_row = true;
  }
  if (needs_empty_row) table.add_row({});
  return table;
}

// Fills the empty cells per maximal black clique (numbered within each
// component), renames the constant columns, and takes the uniform
// distribution over the rows.
inline ProbabilisticTeam fill_table(PartialTable table, const ClosedGraph& closed,
                                    const VariableRegistry& domain) {
  const auto scc = scc_numbering(closed.graph);
  const auto cliques = clique_partition(closed.graph, scc);
  for (const auto& component : cliques) {
    const bool constant_component =
        !closed.constants.empty() &&
        std::binary_search(closed.constants.begin(), closed.constants.end(),
                           component.members.front());
    for (std::size_t k = 0; k < component.black.size(); ++k) {
      for (VarId col : component.black[k]) {
        if (constant_component) {
          table.rename_zeros(col, static_cast<long>(k));
        } else {
          table.fill_column(col, static_cast<long>(k));
        }
      }
    }
  }

  std::vector<std::vector<std::string>> rows(table.num_rows());
  for (std::size_t r = 0; r < table.num_rows(); ++r) {
    for (VarId c = 0; c < table.num_columns(); ++c) rows[r].push_back(std::to_string(table.cell(r, c)));
  }
  return ProbabilisticTeam::uniform(domain, rows);
}

namespace detail {

inline void require_domain(const DependencySet& sigma, const ImplicationEngine& engine) {
  if (engine.num_vars() != sigma.domain().size()) {
    throw Error("engine and dependency set disagree on the variable domain");
  }
}

}  // namespace detail

// Satisfies exactly the implied UMIs, UMDEs, unary FDs and constancy atoms,
// and every implied FD of any arity.
inline ProbabilisticTeam build_unary_team(const DependencySet& sigma) {
  const ImplicationEngine engine(sigma);
  const auto closed = build_graph_closed(engine);
  return fill_table(build_partial_table(closed), closed, sigma.domain());
}

constexpr std::size_t default_max_armstrong_vars = 16;

// Armstrong relation: satisfies an FD/UMI/UMDE atom over the domain iff it is
// implied. Adds one leading row per lhs set C (|C| >= 2, ascending bitmask
// order) whose closure is not the whole domain, so the size can grow as 2^n.
inline ProbabilisticTeam build_full_armstrong(const DependencySet& sigma,
                                              std::size_t max_vars = default_max_armstrong_vars) {
  const std::size_t n = sigma.domain().size();
  if (n > max_vars || n >= 63) {
    throw DomainTooLarge(std::to_string(n) + " variables exceed the full Armstrong cap of " +
                         std::to_string(max_vars));
  }
  const ImplicationEngine engine(sigma);
  detail::require_domain(sigma, engine);
  std::vector<VarTuple> leading;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    VarTuple lhs;
    for (VarId v = 0; v < n; ++v) {
      if (mask >> v & 1) lhs.push_back(v);
    }
    auto closure = engine.closure_of(lhs);
    if (closure.size() < n) leading.push_back(std::move(closure));
  }
  const auto closed = build_graph_closed(engine);
  return fill_table(build_partial_table(closed, leading), closed, sigma.domain());
}

// Team that satisfies sigma and violates one non-implied FD. For a
// multi-variable lhs a single extra row refutes it; determination for that
// row is computed against sigma plus `auxiliary_fds`.
inline ProbabilisticTeam build_targeted_team(const DependencySet& sigma, const Atom& fd_query,
                                             const std::vector<Atom>& auxiliary_fds = {}) {
  if (fd_query.kind != AtomKind::fd) throw UnsupportedQuery("targeted mode needs an FD query");
  const std::size_t n = sigma.domain().size();
  for (VarId v : fd_query.lhs) {
    if (v >= n) throw UnknownVariable("query variable is not in the domain");
  }
  for (VarId v : fd_query.rhs) {
    if (v >= n) throw UnknownVariable("query variable is not in the domain");
  }
  const ImplicationEngine engine(sigma);
  const VarTuple lhs = sorted_unique(fd_query.lhs);

  VarTuple determined;
  if (auxiliary_fds.empty()) {
    determined = engine.closure_of(lhs);
  } else {
    FdList fds(n);
    for (const auto& a : partition(sigma).fds) fds.add(a);
    for (VarId y = 0; y < n; ++y) fds.add({y}, engine.desclist(y));
    for (const auto& a : auxiliary_fds) fds.add(a);
    FdClosure c(lhs, n);
    c.advance(fds);
    determined = c.sorted_members();
  }
  const bool implied = std::all_of(fd_query.rhs.begin(), fd_query.rhs.end(), [&](VarId v) {
    return std::binary_search(determined.begin(), determined.end(), v);
  });
  if (implied) throw QueryImplied("the query is implied; no refuting team exists");

  const auto closed = build_graph_closed(engine);
  std::vector<VarTuple> leading;
  if (lhs.size() >= 2) leading.push_back(determined);
  return fill_table(build_partial_table(closed, leading), closed, sigma.domain());
}

}  // namespace pdep
