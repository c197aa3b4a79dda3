#include "rtsynth/cycles.hpp"

#include <algorithm>
#include <queue>

namespace rtsynth::detail {

namespace {

std::vector<std::vector<int>> adjacency(const DiGraph& g, const std::vector<bool>* alive) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.num_nodes));
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const DiGraph::Edge& e = g.edges[i];
    if (alive && (!(*alive)[static_cast<size_t>(e.src)] || !(*alive)[static_cast<size_t>(e.dst)]))
      continue;
    adj[static_cast<size_t>(e.src)].push_back(static_cast<int>(i));
  }
  return adj;
}

// BFS over edge indices, restricted to alive nodes; returns edge path or
// nothing. `from` may equal `to`, in which case a nonempty path is sought.
std::optional<std::vector<int>> bfs_path(const DiGraph& g,
                                         const std::vector<std::vector<int>>& adj,
                                         const std::vector<bool>& alive, int from,
                                         int to) {
  std::vector<int> in_edge(static_cast<size_t>(g.num_nodes), -2);
  std::queue<int> q;
  for (int ei : adj[static_cast<size_t>(from)]) {
    const DiGraph::Edge& e = g.edges[static_cast<size_t>(ei)];
    if (!alive[static_cast<size_t>(e.dst)]) continue;
    if (in_edge[static_cast<size_t>(e.dst)] != -2) continue;
    in_edge[static_cast<size_t>(e.dst)] = ei;
    q.push(e.dst);
  }
  if (from == to && in_edge[static_cast<size_t>(to)] == -2 && q.empty()) return std::nullopt;
  while (!q.empty() && in_edge[static_cast<size_t>(to)] == -2) {
    int v = q.front();
    q.pop();
    for (int ei : adj[static_cast<size_t>(v)]) {
      const DiGraph::Edge& e = g.edges[static_cast<size_t>(ei)];
      if (!alive[static_cast<size_t>(e.dst)]) continue;
      if (in_edge[static_cast<size_t>(e.dst)] != -2) continue;
      in_edge[static_cast<size_t>(e.dst)] = ei;
      q.push(e.dst);
    }
  }
  if (in_edge[static_cast<size_t>(to)] == -2) return std::nullopt;
  std::vector<int> path;
  int v = to;
  while (true) {
    int ei = in_edge[static_cast<size_t>(v)];
    path.push_back(ei);
    v = g.edges[static_cast<size_t>(ei)].src;
    if (v == from && (path.size() > 0)) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<int> strongly_connected_components(int num_nodes,
                                               const std::vector<DiGraph::Edge>& edges,
                                               const std::vector<bool>& alive) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(num_nodes));
  for (const DiGraph::Edge& e : edges) {
    if (!alive[static_cast<size_t>(e.src)] || !alive[static_cast<size_t>(e.dst)]) continue;
    adj[static_cast<size_t>(e.src)].push_back(e.dst);
  }
  std::vector<int> comp(static_cast<size_t>(num_nodes), -1);
  std::vector<int> low(static_cast<size_t>(num_nodes), 0), num(static_cast<size_t>(num_nodes), -1);
  std::vector<bool> on_stack(static_cast<size_t>(num_nodes), false);
  std::vector<int> stack;
  int counter = 0, comp_count = 0;

  struct Frame {
    int v;
    size_t child;
  };
  for (int root = 0; root < num_nodes; ++root) {
    if (!alive[static_cast<size_t>(root)] || num[static_cast<size_t>(root)] != -1) continue;
    std::vector<Frame> call;
    call.push_back(Frame{root, 0});
    num[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = counter++;
    stack.push_back(root);
    on_stack[static_cast<size_t>(root)] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.child < adj[static_cast<size_t>(f.v)].size()) {
        int w = adj[static_cast<size_t>(f.v)][f.child++];
        if (num[static_cast<size_t>(w)] == -1) {
          num[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = counter++;
          stack.push_back(w);
          on_stack[static_cast<size_t>(w)] = true;
          call.push_back(Frame{w, 0});
        } else if (on_stack[static_cast<size_t>(w)]) {
          low[static_cast<size_t>(f.v)] =
              std::min(low[static_cast<size_t>(f.v)], num[static_cast<size_t>(w)]);
        }
      } else {
        if (low[static_cast<size_t>(f.v)] == num[static_cast<size_t>(f.v)]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[static_cast<size_t>(w)] = false;
            comp[static_cast<size_t>(w)] = comp_count;
            if (w == f.v) break;
          }
          ++comp_count;
        }
        int v = f.v;
        call.pop_back();
        if (!call.empty())
          low[static_cast<size_t>(call.back().v)] =
              std::min(low[static_cast<size_t>(call.back().v)], low[static_cast<size_t>(v)]);
      }
    }
  }
  return comp;
}

std::optional<CyclePath> find_cycle_with_max_parity(const DiGraph& g, int start,
                                                    int parity) {
  if (g.num_nodes == 0) return std::nullopt;
  std::vector<bool> reachable(static_cast<size_t>(g.num_nodes), false);
  {
    std::vector<std::vector<int>> adj = adjacency(g, nullptr);
    std::queue<int> q;
    reachable[static_cast<size_t>(start)] = true;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int ei : adj[static_cast<size_t>(v)]) {
        int w = g.edges[static_cast<size_t>(ei)].dst;
        if (!reachable[static_cast<size_t>(w)]) {
          reachable[static_cast<size_t>(w)] = true;
          q.push(w);
        }
      }
    }
  }

  int max_prio = 0;
  for (int p : g.priority) max_prio = std::max(max_prio, p);

  for (int p = max_prio; p >= 0; --p) {
    if ((p & 1) != parity) continue;
    std::vector<bool> alive(static_cast<size_t>(g.num_nodes), false);
    for (int v = 0; v < g.num_nodes; ++v)
      alive[static_cast<size_t>(v)] =
          reachable[static_cast<size_t>(v)] && g.priority[static_cast<size_t>(v)] <= p;
    std::vector<int> comp = strongly_connected_components(g.num_nodes, g.edges, alive);

    // A component can carry a cycle iff it has an internal edge.
    std::vector<bool> comp_has_edge;
    {
      int max_comp = -1;
      for (int c : comp) max_comp = std::max(max_comp, c);
      comp_has_edge.assign(static_cast<size_t>(max_comp + 1), false);
      for (const DiGraph::Edge& e : g.edges) {
        if (!alive[static_cast<size_t>(e.src)] || !alive[static_cast<size_t>(e.dst)]) continue;
        if (comp[static_cast<size_t>(e.src)] == comp[static_cast<size_t>(e.dst)])
          comp_has_edge[static_cast<size_t>(comp[static_cast<size_t>(e.src)])] = true;
      }
    }

    int witness = -1;
    for (int v = 0; v < g.num_nodes && witness < 0; ++v) {
      if (!alive[static_cast<size_t>(v)] || g.priority[static_cast<size_t>(v)] != p) continue;
      if (comp[static_cast<size_t>(v)] >= 0 &&
          comp_has_edge[static_cast<size_t>(comp[static_cast<size_t>(v)])])
        witness = v;
    }
    if (witness < 0) continue;

    // Stem through the full reachable graph, cycle inside the component.
    std::vector<bool> all_alive(static_cast<size_t>(g.num_nodes), true);
    std::vector<std::vector<int>> adj_all = adjacency(g, nullptr);
    CyclePath out;
    if (witness != start) {
      auto stem = bfs_path(g, adj_all, all_alive, start, witness);
      if (!stem) continue;  // unreachable despite the mask; defensive
      out.stem = *stem;
    }
    std::vector<bool> comp_alive(static_cast<size_t>(g.num_nodes), false);
    for (int v = 0; v < g.num_nodes; ++v)
      comp_alive[static_cast<size_t>(v)] =
          alive[static_cast<size_t>(v)] &&
          comp[static_cast<size_t>(v)] == comp[static_cast<size_t>(witness)];
    std::vector<std::vector<int>> adj_comp = adjacency(g, &comp_alive);
    auto cyc = bfs_path(g, adj_comp, comp_alive, witness, witness);
    if (!cyc) continue;  // defensive; comp_has_edge guaranteed one
    out.cycle = *cyc;
    return out;
  }
  return std::nullopt;
}

std::vector<bool> nodes_with_accepting_path(const DiGraph& g) {
  int max_prio = 0;
  for (int p : g.priority) max_prio = std::max(max_prio, p);
  std::vector<bool> good(static_cast<size_t>(g.num_nodes), false);
  for (int p = 0; p <= max_prio; ++p) {
    if (p & 1) continue;
    std::vector<bool> alive(static_cast<size_t>(g.num_nodes), false);
    for (int v = 0; v < g.num_nodes; ++v)
      alive[static_cast<size_t>(v)] = g.priority[static_cast<size_t>(v)] <= p;
    std::vector<int> comp = strongly_connected_components(g.num_nodes, g.edges, alive);
    std::vector<bool> comp_has_edge;
    std::vector<bool> comp_has_p;
    int max_comp = -1;
    for (int c : comp) max_comp = std::max(max_comp, c);
    comp_has_edge.assign(static_cast<size_t>(max_comp + 1), false);
    comp_has_p.assign(static_cast<size_t>(max_comp + 1), false);
    for (const DiGraph::Edge& e : g.edges) {
      if (!alive[static_cast<size_t>(e.src)] || !alive[static_cast<size_t>(e.dst)]) continue;
      if (comp[static_cast<size_t>(e.src)] == comp[static_cast<size_t>(e.dst)])
        comp_has_edge[static_cast<size_t>(comp[static_cast<size_t>(e.src)])] = true;
    }
    for (int v = 0; v < g.num_nodes; ++v)
      if (alive[static_cast<size_t>(v)] && g.priority[static_cast<size_t>(v)] == p &&
          comp[static_cast<size_t>(v)] >= 0)
        comp_has_p[static_cast<size_t>(comp[static_cast<size_t>(v)])] = true;
    for (int v = 0; v < g.num_nodes; ++v)
      if (alive[static_cast<size_t>(v)] && comp[static_cast<size_t>(v)] >= 0 &&
          comp_has_edge[static_cast<size_t>(comp[static_cast<size_t>(v)])] &&
          comp_has_p[static_cast<size_t>(comp[static_cast<size_t>(v)])])
        good[static_cast<size_t>(v)] = true;
  }
  // Backward closure: anything that reaches a good node is good.
  std::vector<std::vector<int>> radj(static_cast<size_t>(g.num_nodes));
  for (const DiGraph::Edge& e : g.edges)
    radj[static_cast<size_t>(e.dst)].push_back(e.src);
  std::queue<int> q;
  for (int v = 0; v < g.num_nodes; ++v)
    if (good[static_cast<size_t>(v)]) q.push(v);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : radj[static_cast<size_t>(v)]) {
      if (!good[static_cast<size_t>(u)]) {
        good[static_cast<size_t>(u)] = true;
        q.push(u);
      }
    }
  }
  return good;
}

}  // namespace rtsynth::detail
