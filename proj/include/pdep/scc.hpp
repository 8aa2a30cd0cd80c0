#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include "pdep/core_model.hpp"

namespace pdep {

using Adjacency = std::vector<std::vector<VarId>>;

// Strongly connected components, numbered in a topological order of the
// condensation (ancestors before descendants); among components that are
// ready at the same time the one with the smallest member id goes first.
struct SccPartition {
  std::vector<std::size_t> component_of;      // vertex -> component number
  std::vector<std::vector<VarId>> components;  // number -> sorted members

  std::size_t size() const { return components.size(); }
  bool same(VarId a, VarId b) const { return component_of[a] == component_of[b]; }
};

namespace detail {

// Iterative Tarjan; returns raw component labels in completion order.
inline std::vector<std::size_t> tarjan_labels(const Adjacency& graph, std::size_t& count) {
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  const std::size_t n = graph.size();
  std::vector<std::size_t> index(n, unvisited), low(n, 0), label(n, unvisited);
  std::vector<char> on_stack(n, 0);
  std::vector<VarId> stack;
  std::vector<std::pair<VarId, std::size_t>> frames;  // vertex, next edge
  std::size_t next_index = 0;
  count = 0;

  for (VarId root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, edge] = frames.back();
      if (edge < graph[v].size()) {
        const VarId w = graph[v][edge++];
        if (index[w] == unvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const VarId done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const VarId parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        VarId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          label[w] = count;
        } while (w != done);
        ++count;
      }
    }
  }
  return label;
}

}  // namespace detail

inline SccPartition strongly_connected_components(const Adjacency& graph) {
  std::size_t count = 0;
  const auto label = detail::tarjan_labels(graph, count);
  const std::size_t n = graph.size();

  std::vector<std::vector<VarId>> members(count);
  for (VarId v = 0; v < n; ++v) members[label[v]].push_back(v);

  // Kahn over the condensation, keyed by smallest member.
  std::vector<std::vector<std::size_t>> succ(count);
  std::vector<std::size_t> indegree(count, 0);
  for (VarId v = 0; v < n; ++v) {
    for (VarId w : graph[v]) {
      if (label[v] != label[w]) succ[label[v]].push_back(label[w]);
    }
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (std::size_t t : s) ++indegree[t];
  }
  using Key = std::pair<VarId, std::size_t>;  // min member, raw label
  std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
  for (std::size_t c = 0; c < count; ++c) {
    if (indegree[c] == 0) ready.push({members[c].front(), c});
  }

  SccPartition out;
  out.component_of.assign(n, 0);
  while (!ready.empty()) {
    const auto [min_member, c] = ready.top();
    ready.pop();
    const std::size_t number = out.components.size();
    for (VarId v : members[c]) out.component_of[v] = number;
    out.components.push_back(members[c]);
    for (std::size_t t : succ[c]) {
      if (--indegree[t] == 0) ready.push({members[t].front(), t});
    }
  }
  return out;
}

}  // namespace pdep
