#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pdep/errors.hpp"

namespace pdep {

// Dense index of a variable inside one VariableRegistry.
using VarId = std::uint32_t;

// Ordered list of variable ids; repeats allowed, empty allowed.
using VarTuple = std::vector<VarId>;

// Interns variable names. Ids are handed out densely in first-appearance
// order, and the name <-> id mapping is a bijection.
class VariableRegistry {
 public:
  VariableRegistry() = default;

  VarId intern(std::string_view name) {
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    const auto id = static_cast<VarId>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
  }

  bool contains(std::string_view name) const {
    return ids_.find(std::string(name)) != ids_.end();
  }

  VarId id(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) {
      throw UnknownVariable("unknown variable '" + std::string(name) + "'");
    }
    return it->second;
  }

  const std::string& name(VarId id) const {
    if (id >= names_.size()) {
      throw UnknownVariable("unknown variable id " + std::to_string(id));
    }
    return names_[id];
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const VariableRegistry& a, const VariableRegistry& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VarId> ids_;
};

enum class AtomKind : std::uint8_t { fd, ind, mi, mde };

// One dependency atom. For FDs, `lhs` determines `rhs`; an FD with an empty
// lhs is a constancy atom. IND/MI/MDE atoms compare two tuples of equal length.
struct Atom {
  AtomKind kind = AtomKind::fd;
  VarTuple lhs;
  VarTuple rhs;

  auto operator<=>(const Atom&) const = default;

  bool is_fd() const { return kind == AtomKind::fd; }
  bool is_constancy() const { return kind == AtomKind::fd && lhs.empty(); }
  bool is_unary() const { return lhs.size() == 1 && rhs.size() == 1; }
};

inline VarTuple sorted_unique(VarTuple vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

// Sorts and deduplicates both sides of an FD. Equivalent under reflexivity
// plus transitivity, so nothing is lost.
inline Atom canonicalize_fd(Atom a) {
  a.lhs = sorted_unique(std::move(a.lhs));
  a.rhs = sorted_unique(std::move(a.rhs));
  return a;
}

inline Atom make_fd(VarTuple lhs, VarTuple rhs) {
  return canonicalize_fd(Atom{AtomKind::fd, std::move(lhs), std::move(rhs)});
}

inline Atom make_constancy(VarId x) { return make_fd({}, {x}); }

namespace detail {
inline Atom make_paired(AtomKind kind, VarTuple lhs, VarTuple rhs) {
  if (lhs.size() != rhs.size()) {
    throw ArityError("both sides must have the same length (" +
                     std::to_string(lhs.size()) + " vs " +
                     std::to_string(rhs.size()) + ")");
  }
  return Atom{kind, std::move(lhs), std::move(rhs)};
}
}  // namespace detail

inline Atom make_ind(VarTuple lhs, VarTuple rhs) {
  return detail::make_paired(AtomKind::ind, std::move(lhs), std::move(rhs));
}
inline Atom make_mi(VarTuple lhs, VarTuple rhs) {
  return detail::make_paired(AtomKind::mi, std::move(lhs), std::move(rhs));
}
inline Atom make_mde(VarTuple lhs, VarTuple rhs) {
  return detail::make_paired(AtomKind::mde, std::move(lhs), std::move(rhs));
}

inline Atom make_umi(VarId x, VarId y) { return make_mi({x}, {y}); }
inline Atom make_umde(VarId x, VarId y) { return make_mde({x}, {y}); }
inline Atom make_uind(VarId x, VarId y) { return make_ind({x}, {y}); }

inline VarId max_var(const Atom& a) {
  VarId m = 0;
  for (VarId v : a.lhs) m = std::max(m, v);
  for (VarId v : a.rhs) m = std::max(m, v);
  return m;
}

// Renders an atom in the dependency-file surface syntax.
inline std::string to_string(const Atom& a, const VariableRegistry& reg) {
  auto join = [&](const VarTuple& t) {
    std::string out;
    for (VarId v : t) {
      if (!out.empty()) out += ' ';
      out += reg.name(v);
    }
    return out;
  };
  std::string op;
  switch (a.kind) {
    case AtomKind::fd: op = "->"; break;
    case AtomKind::ind: op = "<="; break;
    case AtomKind::mi: op = "~"; break;
    case AtomKind::mde: op = "~*"; break;
  }
  std::string left = join(a.lhs);
  return (left.empty() ? op : left + " " + op) + " " + join(a.rhs);
}

// A finite set of atoms over one variable registry. FDs are stored
// canonicalized; duplicates are stored once; insertion order is kept.
class DependencySet {
 public:
  DependencySet() = default;
  explicit DependencySet(VariableRegistry domain) : domain_(std::move(domain)) {}
  DependencySet(VariableRegistry domain, const std::vector<Atom>& atoms)
      : domain_(std::move(domain)) {
    for (const auto& a : atoms) add(a);
  }

  // Returns false if the atom was already present.
  bool add(Atom a) {
    if (a.kind == AtomKind::fd) a = canonicalize_fd(std::move(a));
    for (VarId v : a.lhs) check_registered(v);
    for (VarId v : a.rhs) check_registered(v);
    if (std::find(atoms_.begin(), atoms_.end(), a) != atoms_.end()) return false;
    atoms_.push_back(std::move(a));
    return true;
  }

  bool contains(const Atom& a) const {
    Atom key = a.kind == AtomKind::fd ? canonicalize_fd(a) : a;
    return std::find(atoms_.begin(), atoms_.end(), key) != atoms_.end();
  }

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  const VariableRegistry& domain() const { return domain_; }
  // Registration of extra variables (e.g. those only a query mentions).
  VariableRegistry& domain() { return domain_; }

  DependencySet without(std::size_t index) const {
    DependencySet out(domain_);
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (i != index) out.atoms_.push_back(atoms_[i]);
    }
    return out;
  }

 private:
  void check_registered(VarId v) const {
    if (v >= domain_.size()) {
      throw UnknownVariable("variable id " + std::to_string(v) +
                            " is not registered in the domain");
    }
  }

  VariableRegistry domain_;
  std::vector<Atom> atoms_;
};

struct Partition {
  std::vector<Atom> fds;
  std::vector<Atom> umis;
  std::vector<Atom> umdes;
  // General-arity IND/MI/MDE atoms and unary INDs.
  std::vector<Atom> others;
};

inline Partition partition(const DependencySet& sigma) {
  Partition p;
  for (const auto& a : sigma.atoms()) {
    switch (a.kind) {
      case AtomKind::fd: p.fds.push_back(a); break;
      case AtomKind::mi:
        (a.is_unary() ? p.umis : p.others).push_back(a);
        break;
      case AtomKind::mde:
        (a.is_unary() ? p.umdes : p.others).push_back(a);
        break;
      case AtomKind::ind: p.others.push_back(a); break;
    }
  }
  return p;
}

}  // namespace pdep
