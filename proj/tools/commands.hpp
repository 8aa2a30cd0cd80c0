#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pdep/pdep.hpp"

namespace pdep::cli {

enum ExitStatus : int { holds = 0, fails = 1, error = 2 };

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

template <class Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return error;
  }
}

struct ImpliesOptions {
  std::string sigma;
  std::string query;
  bool via_uind = false;
  bool oracle = false;
  std::string counterexample;  // empty: no witness file
};

inline int cmd_implies(const ImpliesOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto sigma = parse_dependency_file(read_file(opt.sigma));
    const Atom query = parse_atom(opt.query, sigma.domain());
    const bool want_witness = !opt.counterexample.empty();

    Verdict verdict;
    if (opt.via_uind) {
      verdict.implied = decide_via_simulation(sigma, query);
      if (!verdict.implied && want_witness) verdict.witness = counterexample(sigma, query);
    } else {
      verdict = decide(sigma, query, want_witness);
    }
    out << (verdict.implied ? "IMPLIED" : "NOT IMPLIED") << '\n';

    if (opt.oracle) {
      const bool expected = axiomatic_closure(sigma, sigma.domain().size()).contains(query);
      if (expected != verdict.implied) {
        out << "oracle: DISAGREE\n";
        err << "error: oracle says " << (expected ? "implied" : "not implied") << '\n';
        return static_cast<int>(error);
      }
      out << "oracle: agree\n";
    }
    if (verdict.witness) {
      write_file(opt.counterexample, serialize_team(*verdict.witness));
      out << "witness: " << verdict.witness->num_rows() << " rows written to "
          << opt.counterexample << '\n';
    }
    return static_cast<int>(verdict.implied ? holds : fails);
  });
}

struct ArmstrongOptions {
  std::string sigma;
  std::string out;
  bool full_fd = false;
  std::size_t max_vars = default_max_armstrong_vars;
};

inline int cmd_armstrong(const ArmstrongOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto sigma = parse_dependency_file(read_file(opt.sigma));
    const auto team = opt.full_fd ? build_full_armstrong(sigma, opt.max_vars)
                                  : build_unary_team(sigma);
    write_file(opt.out, serialize_team(team));

    const auto n = static_cast<VarId>(team.num_columns());
    std::size_t umi = 0, umde = 0, ufd = 0, constancy = 0;
    for (VarId x = 0; x < n; ++x) {
      constancy += satisfies(team, make_constancy(x)) ? 1 : 0;
      for (VarId y = 0; y < n; ++y) {
        if (x == y) continue;
        umi += satisfies(team, make_umi(x, y)) ? 1 : 0;
        umde += satisfies(team, make_umde(x, y)) ? 1 : 0;
        ufd += satisfies(team, make_fd({x}, {y})) ? 1 : 0;
      }
    }
    out << "rows: " << team.num_rows() << '\n';
    out << "weight: 1/" << team.num_rows() << '\n';
    out << "satisfied (x != y): umi=" << umi << " umde=" << umde << " ufd=" << ufd
        << " constancy=" << constancy << '\n';
    return static_cast<int>(holds);
  });
}

struct CheckOptions {
  std::string team;
  std::string atoms_file;
  std::string atom;
};

inline int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opt.atoms_file.empty() && opt.atom.empty()) throw Error("check needs --atoms or --atom");
    const auto team = parse_team_file(read_file(opt.team));
    VariableRegistry reg = team.domain();
    std::vector<Atom> atoms;
    if (!opt.atoms_file.empty()) atoms = parse_atoms(read_file(opt.atoms_file), reg);
    if (!opt.atom.empty()) atoms.push_back(parse_atom(opt.atom, reg));
    for (const auto& a : atoms) {
      team.require_known(a.lhs);
      team.require_known(a.rhs);
    }

    bool all = true;
    for (const auto& a : atoms) {
      const bool ok = satisfies(team, a);
      all = all && ok;
      out << (ok ? "SAT   " : "UNSAT ") << to_string(a, reg) << '\n';
    }
    return static_cast<int>(all ? holds : fails);
  });
}

struct ClosureOptions {
  std::string sigma;
  std::string var;
  std::size_t arity_cap = 2;
};

inline int cmd_closure(const ClosureOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto sigma = parse_dependency_file(read_file(opt.sigma));
    std::optional<VarId> focus;
    if (!opt.var.empty()) {
      parse_atom("-> " + opt.var, sigma.domain());  // validates the name
      focus = sigma.domain().id(opt.var);
    }
    const auto& reg = sigma.domain();
    const ImplicationEngine engine(sigma);
    const auto n = static_cast<VarId>(engine.num_vars());
    auto names = [&](const VarTuple& vs) {
      std::string s;
      for (VarId v : vs) s += (s.empty() ? "" : " ") + reg.name(v);
      return s;
    };

    if (focus) {
      out << opt.var << ": " << names(engine.desclist(*focus)) << '\n';
      return static_cast<int>(holds);
    }

    for (VarId x : engine.closure_of({})) out << "-> " << reg.name(x) << '\n';
    for (VarId x = 0; x < n; ++x) {
      for (VarId y : engine.desclist(x)) {
        if (y != x) out << reg.name(x) << " -> " << reg.name(y) << '\n';
      }
    }
    for (VarId x = 0; x < n; ++x) {
      for (VarId y = x + 1; y < n; ++y) {
        if (engine.umi_equivalent(x, y)) out << reg.name(x) << " ~ " << reg.name(y) << '\n';
      }
    }
    for (VarId x = 0; x < n; ++x) {
      for (VarId y = x + 1; y < n; ++y) {
        if (engine.umde_equivalent(x, y)) out << reg.name(x) << " ~* " << reg.name(y) << '\n';
      }
    }

    // Multi-variable left-hand sides up to the arity cap: only the part of
    // the closure not already determined by a proper subset.
    if (opt.arity_cap > 2 && n <= 20) {
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size < 2 || size >= opt.arity_cap) continue;
        const VarTuple lhs = AtomUniverse::to_vars(mask);
        VarTuple from_parts;
        for (VarId drop : lhs) {
          VarTuple part;
          for (VarId v : lhs) {
            if (v != drop) part.push_back(v);
          }
          const auto c = engine.closure_of(part);
          from_parts.insert(from_parts.end(), c.begin(), c.end());
        }
        from_parts = sorted_unique(std::move(from_parts));
        VarTuple extra;
        for (VarId v : engine.closure_of(lhs)) {
          if (!std::binary_search(lhs.begin(), lhs.end(), v) &&
              !std::binary_search(from_parts.begin(), from_parts.end(), v)) {
            extra.push_back(v);
          }
        }
        if (!extra.empty()) out << names(lhs) << " -> " << names(extra) << '\n';
      }
    }
    return static_cast<int>(holds);
  });
}

}  // namespace pdep::cli
