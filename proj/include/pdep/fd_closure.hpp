#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "pdep/core_model.hpp"

namespace pdep {

// Append-only list of FDs over variables 0..n-1, indexed by left-hand-side
// variable. Several FdClosure instances can share one list and catch up
// with new entries incrementally.
class FdList {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  explicit FdList(std::size_t num_vars) : by_lhs_var_(num_vars) {}

  std::size_t num_vars() const { return by_lhs_var_.size(); }
  std::size_t size() const { return entries_.size(); }

  // lhs/rhs are taken as sets; duplicates are removed.
  std::size_t add(VarTuple lhs, VarTuple rhs) {
    Entry e{sorted_unique(std::move(lhs)), sorted_unique(std::move(rhs)), npos};
    if (e.lhs.size() > 1) e.counter_slot = num_multi_++;
    const std::size_t index = entries_.size();
    for (VarId v : e.lhs) by_lhs_var_[v].push_back(index);
    entries_.push_back(std::move(e));
    return index;
  }

  std::size_t add(const Atom& fd) { return add(fd.lhs, fd.rhs); }

 private:
  friend class FdClosure;

  struct Entry {
    VarTuple lhs;
    VarTuple rhs;
    std::size_t counter_slot;  // npos unless |lhs| > 1
  };

  std::vector<Entry> entries_;
  std::vector<std::vector<std::size_t>> by_lhs_var_;
  std::size_t num_multi_ = 0;
};

// Beeri-Bernstein attribute closure of a seed set. Each FD with a multi-variable
// lhs carries a countdown of lhs variables not yet processed; the FD fires
// when it reaches zero. Unary and constancy FDs need no counter. Calling
// `advance` again after the shared FdList grew resumes the computation.
class FdClosure {
 public:
  FdClosure(std::span<const VarId> seed, std::size_t num_vars)
      : member_(num_vars, 0), processed_(num_vars, 0) {
    for (VarId v : seed) insert(v);
  }

  // Brings the closure up to date with `fds`. Returns true if any variable
  // was added by this call.
  bool advance(const FdList& fds) {
    const std::size_t before = members_.size();
    remaining_.resize(fds.num_multi_, 0);
    for (; seen_ < fds.entries_.size(); ++seen_) {
      const auto& e = fds.entries_[seen_];
      if (e.lhs.empty()) {
        fire(e);
      } else if (e.counter_slot == FdList::npos) {
        if (processed_[e.lhs.front()]) fire(e);
      } else {
        std::uint32_t open = 0;
        for (VarId v : e.lhs) open += processed_[v] ? 0 : 1;
        remaining_[e.counter_slot] = open;
        if (open == 0) fire(e);
      }
    }
    while (head_ < members_.size()) {
      const VarId v = members_[head_++];
      processed_[v] = 1;
      for (std::size_t index : fds.by_lhs_var_[v]) {
        if (index >= seen_) break;
        const auto& e = fds.entries_[index];
        if (e.counter_slot == FdList::npos || --remaining_[e.counter_slot] == 0) fire(e);
      }
    }
    return members_.size() != before;
  }

  bool contains(VarId v) const { return v < member_.size() && member_[v]; }
  // In discovery order; the seed comes first.
  const std::vector<VarId>& members() const { return members_; }

  VarTuple sorted_members() const { return sorted_unique(members_); }

 private:
  void insert(VarId v) {
    if (!member_[v]) {
      member_[v] = 1;
      members_.push_back(v);
    }
  }

  void fire(const FdList::Entry& e) {
    for (VarId r : e.rhs) insert(r);
  }

  std::vector<char> member_;
  std::vector<char> processed_;
  std::vector<VarId> members_;
  std::vector<std::uint32_t> remaining_;
  std::size_t head_ = 0;
  std::size_t seen_ = 0;
};

// {z | fds |= =(seed, z)}, sorted.
inline VarTuple fdclosure(const VarTuple& seed, const std::vector<Atom>& fds,
                          std::size_t num_vars) {
  FdList list(num_vars);
  for (const auto& fd : fds) list.add(fd);
  FdClosure closure(seed, num_vars);
  closure.advance(list);
  return closure.sorted_members();
}

}  // namespace pdep
