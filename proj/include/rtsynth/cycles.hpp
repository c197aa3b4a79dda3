#pragma once

#include <optional>
#include <vector>

namespace rtsynth::detail {

// Small explicit digraph with a priority per node. Used by the various
// emptiness/membership checks, which all reduce to: is there a reachable
// cycle whose maximal node priority has a given parity?
struct DiGraph {
  struct Edge {
    int src = -1;
    int dst = -1;
    int tag = -1;  // caller payload, e.g. a transition index
  };

  int num_nodes = 0;
  std::vector<Edge> edges;
  std::vector<int> priority;  // size num_nodes

  int add_node(int prio) {
    priority.push_back(prio);
    return num_nodes++;
  }
  void add_edge(int src, int dst, int tag) { edges.push_back(Edge{src, dst, tag}); }
};

// Stem from `start` to some node v, then a nonempty cycle v -> v whose
// maximal priority has parity `parity`. Vectors hold indices into g.edges.
struct CyclePath {
  std::vector<int> stem;
  std::vector<int> cycle;
};

std::optional<CyclePath> find_cycle_with_max_parity(const DiGraph& g, int start,
                                                    int parity);

inline std::optional<CyclePath> find_even_max_cycle(const DiGraph& g, int start) {
  return find_cycle_with_max_parity(g, start, 0);
}

// nodes[v] is true iff some path from v reaches a cycle with even maximal
// priority (i.e. v admits an accepting continuation).
std::vector<bool> nodes_with_accepting_path(const DiGraph& g);

// Strongly connected components, Tarjan, iterative. Returns component index
// per node; components are numbered in reverse topological order.
std::vector<int> strongly_connected_components(int num_nodes,
                                               const std::vector<DiGraph::Edge>& edges,
                                               const std::vector<bool>& alive);

}  // namespace rtsynth::detail
