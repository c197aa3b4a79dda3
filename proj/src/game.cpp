#include "rtsynth/game.hpp"

#include <algorithm>
#include <sstream>

namespace rtsynth {

void validate(const ParityArena& g) {
  size_t n = g.owner.size();
  if (g.priority.size() != n || g.moves.size() != n)
    throw AutomatonError("arena vectors disagree on the vertex count");
  if (!g.names.empty() && g.names.size() != n)
    throw AutomatonError("arena names must be absent or one per vertex");
  for (size_t v = 0; v < n; ++v) {
    if (g.priority[v] < 0) throw AutomatonError("negative priority in arena");
    if (g.moves[v].empty())
      throw AutomatonError("arena has a dead end at vertex " + std::to_string(v));
    for (int w : g.moves[v])
      if (w < 0 || w >= static_cast<int>(n))
        throw AutomatonError("arena move out of range");
  }
}

namespace {

struct Zielonka {
  const ParityArena& g;
  std::vector<std::vector<int>> preds;
  std::vector<Player> winner;
  std::vector<int> strategy;

  explicit Zielonka(const ParityArena& arena)
      : g(arena),
        preds(arena.owner.size()),
        winner(arena.owner.size(), Player::Adam),
        strategy(arena.owner.size(), -1) {
    for (size_t v = 0; v < g.moves.size(); ++v)
      for (int w : g.moves[v]) preds[static_cast<size_t>(w)].push_back(static_cast<int>(v));
  }

  int first_alive_move(const std::vector<char>& alive, int v) const {
    for (int w : g.moves[static_cast<size_t>(v)])
      if (alive[static_cast<size_t>(w)]) return w;
    throw AutomatonError("subgame dead end; arena was not dead-end free");
  }

  // sigma-attractor of seeds within alive. Marks inA and records, for
  // sigma-owned attracted vertices (seeds excluded), a move into the set.
  void attract(const std::vector<char>& alive, const std::vector<int>& seeds,
               Player sigma, std::vector<char>& in_a, std::vector<int>& strat) const {
    std::vector<int> cnt(g.owner.size(), -1);
    std::vector<int> queue = seeds;
    for (int v : seeds) in_a[static_cast<size_t>(v)] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int v : preds[static_cast<size_t>(u)]) {
        size_t sv = static_cast<size_t>(v);
        if (!alive[sv] || in_a[sv]) continue;
        if (g.owner[sv] == sigma) {
          in_a[sv] = 1;
          strat[sv] = u;
          queue.push_back(v);
        } else {
          if (cnt[sv] < 0) {
            cnt[sv] = 0;
            for (int w : g.moves[sv])
              if (alive[static_cast<size_t>(w)]) ++cnt[sv];
          }
          if (--cnt[sv] == 0) {
            in_a[sv] = 1;
            queue.push_back(v);
          }
        }
      }
    }
  }

  void solve(const std::vector<char>& alive) {
    int p = -1;
    for (size_t v = 0; v < alive.size(); ++v)
      if (alive[v]) p = std::max(p, g.priority[v]);
    if (p < 0) return;
    Player sigma = p % 2 == 0 ? Player::Eve : Player::Adam;

    std::vector<int> tops;
    for (size_t v = 0; v < alive.size(); ++v)
      if (alive[v] && g.priority[v] == p) tops.push_back(static_cast<int>(v));

    std::vector<char> in_a(alive.size(), 0);
    std::vector<int> a_strat(alive.size(), -1);
    attract(alive, tops, sigma, in_a, a_strat);

    std::vector<char> sub = alive;
    for (size_t v = 0; v < alive.size(); ++v)
      if (in_a[v]) sub[v] = 0;
    solve(sub);

    std::vector<int> opp_region;
    for (size_t v = 0; v < alive.size(); ++v)
      if (sub[v] && winner[v] != sigma) opp_region.push_back(static_cast<int>(v));

    if (opp_region.empty()) {
      // sigma wins everywhere: recursion already labelled sub, the attractor
      // funnels the rest through priority p infinitely often.
      for (size_t v = 0; v < alive.size(); ++v) {
        if (!alive[v] || !in_a[v]) continue;
        winner[v] = sigma;
        if (g.owner[v] == sigma)
          strategy[v] = a_strat[v] >= 0 ? a_strat[v]
                                        : first_alive_move(alive, static_cast<int>(v));
        else
          strategy[v] = -1;
      }
      return;
    }

    Player opp = opponent(sigma);
    std::vector<char> in_b(alive.size(), 0);
    std::vector<int> b_strat(alive.size(), -1);
    attract(alive, opp_region, opp, in_b, b_strat);
    for (size_t v = 0; v < alive.size(); ++v) {
      if (!in_b[v]) continue;
      if (sub[v] && winner[v] == opp) continue;  // keep the recursive strategy
      winner[v] = opp;
      strategy[v] = g.owner[v] == opp ? b_strat[v] : -1;
    }

    std::vector<char> rest = alive;
    for (size_t v = 0; v < alive.size(); ++v)
      if (in_b[v]) rest[v] = 0;
    solve(rest);
  }
};

}  // namespace

GameSolution solve_parity(const ParityArena& g) {
  validate(g);
  Zielonka z(g);
  std::vector<char> alive(g.owner.size(), 1);
  z.solve(alive);
  return GameSolution{std::move(z.winner), std::move(z.strategy)};
}

ParityArena complete_dead_ends(const ParityArena& g) {
  ParityArena out = g;
  bool named = !out.names.empty();
  int stuck[2] = {-1, -1};  // per player losing sink
  auto sink_for = [&](Player loser) {
    int idx = loser == Player::Adam ? 0 : 1;
    if (stuck[idx] < 0) {
      stuck[idx] = out.num_vertices();
      out.owner.push_back(loser);
      // Being stuck loses: Adam stuck cycles even, Eve stuck cycles odd.
      out.priority.push_back(loser == Player::Adam ? 0 : 1);
      out.moves.push_back({stuck[idx]});
      if (named)
        out.names.push_back(loser == Player::Adam ? "stuck_adam" : "stuck_eve");
    }
    return stuck[idx];
  };
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!out.moves[static_cast<size_t>(v)].empty()) continue;
    int sink = sink_for(out.owner[static_cast<size_t>(v)]);  // grows out.moves
    out.moves[static_cast<size_t>(v)].push_back(sink);
  }
  return out;
}

namespace {

std::string vertex_name(const ParityArena& g, int v) {
  if (!g.names.empty()) return g.names[static_cast<size_t>(v)];
  return "v" + std::to_string(v);
}

}  // namespace

std::string arena_to_text(const ParityArena& g) {
  std::ostringstream os;
  for (int v = 0; v < g.num_vertices(); ++v) {
    os << vertex_name(g, v)
       << (g.owner[static_cast<size_t>(v)] == Player::Adam ? " adam " : " eve ")
       << g.priority[static_cast<size_t>(v)] << " ->";
    for (int w : g.moves[static_cast<size_t>(v)]) os << ' ' << vertex_name(g, w);
    os << '\n';
  }
  return os.str();
}

std::string arena_to_dot(const ParityArena& g, const GameSolution* sol) {
  std::ostringstream os;
  os << "digraph arena {\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    size_t sv = static_cast<size_t>(v);
    os << "  n" << v << " [label=\"" << vertex_name(g, v) << ":"
       << g.priority[sv] << "\" shape="
       << (g.owner[sv] == Player::Adam ? "box" : "diamond");
    if (sol)
      os << " color=" << (sol->winner[sv] == Player::Eve ? "blue" : "red");
    os << "];\n";
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int w : g.moves[static_cast<size_t>(v)]) {
      os << "  n" << v << " -> n" << w;
      if (sol && sol->strategy[static_cast<size_t>(v)] == w) os << " [penwidth=2]";
      os << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace rtsynth
