#include "rtsynth/lasso.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "rtsynth/cycles.hpp"

namespace rtsynth {

void validate_lasso(const RegisterAutomaton& a, const LassoDataWord& w) {
  if (w.loop.empty()) throw ContractViolation("lasso loop is empty");
  bool spec = is_spec_semantics(a.semantics);
  if (spec && (w.prefix.size() % 2 != 0 || w.loop.size() % 2 != 0))
    throw ContractViolation("relational lasso needs even prefix and loop");
  for (int i = 0; i < w.total_len(); ++i) {
    const LData& ld = w.at(i);
    if (ld.label < 0 || ld.label >= a.num_labels())
      throw ContractViolation("lasso label out of range");
    if (spec && a.label_is_output(ld.label) != (i % 2 == 1))
      throw ContractViolation("relational lasso does not alternate input/output");
  }
}

LassoDataWord unfold(const LassoDataWord& w, int extra) {
  LassoDataWord out = w;
  for (int i = 0; i < extra; ++i)
    out.prefix.insert(out.prefix.end(), w.loop.begin(), w.loop.end());
  return out;
}

LassoDataWord rename_data(const LassoDataWord& w,
                          const std::function<DataValue(DataValue)>& pi) {
  LassoDataWord out = w;
  for (LData& l : out.prefix) l.data = pi(l.data);
  for (LData& l : out.loop) l.data = pi(l.data);
  return out;
}

DataValue dt_in(const LassoDataWord& w, long long j) { return w.at(2 * (j - 1)).data; }
DataValue dt_out(const LassoDataWord& w, long long j) { return w.at(2 * j - 1).data; }

bool run_is_valid(const RegisterAutomaton& a, const LassoDataWord& w, const Run& r) {
  size_t n = r.transitions.size();
  if (r.configurations.size() != n + 1) return false;
  if (r.loop_start < 0 || static_cast<size_t>(r.loop_start) >= n) return false;
  if (!(r.configurations[0] == initial_configuration(a))) return false;
  for (size_t i = 0; i < n; ++i) {
    int ti = r.transitions[i];
    if (ti < 0 || ti >= static_cast<int>(a.transitions.size())) return false;
    const Transition& t = a.transitions[static_cast<size_t>(ti)];
    const Configuration& c = r.configurations[i];
    const LData& ld = w.at(static_cast<long long>(i));
    if (t.src != c.state || t.label != ld.label) return false;
    if (!eval_test(t.test, c.valuation, ld.data)) return false;
    const Configuration& d = r.configurations[i + 1];
    if (d.state != t.dst) return false;
    if (!(d.valuation == next_valuation(c.valuation, t.asgn, ld.data))) return false;
  }
  if (!(r.configurations[n] == r.configurations[static_cast<size_t>(r.loop_start)]))
    return false;
  if (w.norm_pos(static_cast<long long>(n)) != w.norm_pos(r.loop_start)) return false;
  return true;
}

int run_cycle_max_priority(const RegisterAutomaton& a, const Run& r) {
  int m = 0;
  for (size_t i = static_cast<size_t>(r.loop_start); i < r.transitions.size(); ++i)
    m = std::max(m, a.states[static_cast<size_t>(r.configurations[i].state)].priority);
  return m;
}

namespace {

// Product of the lasso positions with the configuration space, data drawn
// from the word itself. Nodes are (normalized position, state, valuation).
struct MembershipGraph {
  detail::DiGraph graph;
  std::vector<Configuration> node_cfg;
  std::map<std::tuple<int, int, std::vector<DataValue>>, int> ids;

  int node(const RegisterAutomaton& a, int pos, const Configuration& c) {
    auto key = std::make_tuple(pos, c.state, c.valuation.contents);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    int id = graph.add_node(a.states[static_cast<size_t>(c.state)].priority);
    ids.emplace(key, id);
    node_cfg.push_back(c);
    return id;
  }
};

Run run_from_cycle_path(const MembershipGraph& mg, const detail::CyclePath& cp) {
  Run run;
  run.loop_start = static_cast<int>(cp.stem.size());
  auto push_edge = [&](int ei) {
    const detail::DiGraph::Edge& e = mg.graph.edges[static_cast<size_t>(ei)];
    if (run.configurations.empty())
      run.configurations.push_back(mg.node_cfg[static_cast<size_t>(e.src)]);
    run.transitions.push_back(e.tag);
    run.configurations.push_back(mg.node_cfg[static_cast<size_t>(e.dst)]);
  };
  for (int ei : cp.stem) push_edge(ei);
  for (int ei : cp.cycle) push_edge(ei);
  return run;
}

}  // namespace

std::optional<Run> nra_membership(const RegisterAutomaton& a, const LassoDataWord& w) {
  validate_lasso(a, w);
  MembershipGraph mg;
  Configuration init = initial_configuration(a);
  int start = mg.node(a, 0, init);
  // Worklist expansion; edges tagged with the transition index.
  std::vector<int> node_pos{0};
  for (int v = 0; v < mg.graph.num_nodes; ++v) {
    int pos = node_pos[static_cast<size_t>(v)];
    const Configuration cfg = mg.node_cfg[static_cast<size_t>(v)];
    const LData& ld = w.at(pos);
    int nxt = w.norm_pos(static_cast<long long>(pos) + 1);
    for (int ti : enabled_transitions(a, cfg, ld.label, ld.data)) {
      const Transition& t = a.transitions[static_cast<size_t>(ti)];
      Configuration succ{t.dst, next_valuation(cfg.valuation, t.asgn, ld.data)};
      int before = mg.graph.num_nodes;
      int u = mg.node(a, nxt, succ);
      if (u == before) node_pos.push_back(nxt);
      mg.graph.add_edge(v, u, ti);
    }
  }
  auto cp = detail::find_even_max_cycle(mg.graph, start);
  if (!cp) return std::nullopt;
  return run_from_cycle_path(mg, *cp);
}

bool ura_membership(const RegisterAutomaton& a, const LassoDataWord& w) {
  return !nra_membership(shift_colors(a), w).has_value();
}

DraRunResult dra_run(const RegisterAutomaton& a, const LassoDataWord& w) {
  validate_lasso(a, w);
  DraRunResult res;
  std::map<std::tuple<int, int, std::vector<DataValue>>, int> seen;
  Run run;
  Configuration cfg = initial_configuration(a);
  run.configurations.push_back(cfg);
  long long step = 0;
  while (true) {
    int pos = w.norm_pos(step);
    auto key = std::make_tuple(pos, cfg.state, cfg.valuation.contents);
    auto it = seen.find(key);
    if (it != seen.end()) {
      run.loop_start = it->second;
      res.run = run;
      res.accepted = run_cycle_max_priority(a, run) % 2 == 0;
      return res;
    }
    seen.emplace(key, static_cast<int>(step));
    const LData& ld = w.at(step);
    std::vector<int> en = enabled_transitions(a, cfg, ld.label, ld.data);
    if (en.empty()) {
      res.accepted = false;
      res.incomplete = true;
      return res;
    }
    if (en.size() > 1)
      throw ContractViolation("deterministic automaton has two enabled transitions");
    const Transition& t = a.transitions[static_cast<size_t>(en[0])];
    cfg = Configuration{t.dst, next_valuation(cfg.valuation, t.asgn, ld.data)};
    run.transitions.push_back(en[0]);
    run.configurations.push_back(cfg);
    ++step;
  }
}

bool accepts(const RegisterAutomaton& a, const LassoDataWord& w) {
  switch (base_semantics(a.semantics)) {
    case Semantics::Nra:
      return nra_membership(a, w).has_value();
    case Semantics::Ura:
      return ura_membership(a, w);
    default:
      return dra_run(a, w).accepted;
  }
}

LassoDataWord transducer_run(const RegisterTransducer& t, const LassoDataWord& input) {
  if (input.loop.empty()) throw ContractViolation("lasso loop is empty");
  for (int i = 0; i < input.total_len(); ++i)
    if (input.at(i).label < 0 ||
        input.at(i).label >= static_cast<int>(t.in_labels.size()))
      throw ContractViolation("input lasso label out of range");

  int nin = static_cast<int>(t.in_labels.size());
  std::map<std::tuple<int, int, std::vector<DataValue>>, int> seen;
  std::vector<std::pair<LData, LData>> steps;  // (input, output) per step
  int state = t.initial;
  Valuation tau = initial_valuation(t.num_registers());
  long long step = 0;
  while (true) {
    int pos = input.norm_pos(step);
    auto key = std::make_tuple(pos, state, tau.contents);
    auto it = seen.find(key);
    if (it != seen.end()) {
      LassoDataWord out;
      for (int i = 0; i < it->second; ++i) {
        out.prefix.push_back(steps[static_cast<size_t>(i)].first);
        out.prefix.push_back(steps[static_cast<size_t>(i)].second);
      }
      for (size_t i = static_cast<size_t>(it->second); i < steps.size(); ++i) {
        out.loop.push_back(steps[i].first);
        out.loop.push_back(steps[i].second);
      }
      return out;
    }
    seen.emplace(key, static_cast<int>(step));
    const LData& in = input.at(step);
    int chosen = -1;
    for (size_t i = 0; i < t.rules.size(); ++i) {
      const Rule& r = t.rules[i];
      if (r.src != state || r.in_label != in.label) continue;
      if (!eval_test(r.test, tau, in.data)) continue;
      if (chosen >= 0) throw ContractViolation("transducer has two enabled rules");
      chosen = static_cast<int>(i);
    }
    if (chosen < 0) throw ContractViolation("transducer has no enabled rule");
    const Rule& r = t.rules[static_cast<size_t>(chosen)];
    tau = next_valuation(tau, r.asgn, in.data);
    LData out{nin + r.out_label, tau[r.out_reg]};
    steps.emplace_back(LData{in.label, in.data}, out);
    state = r.dst;
    ++step;
  }
}

bool has_run_on_prefix(const RegisterAutomaton& a, const std::vector<LData>& prefix) {
  std::set<Configuration> cur;
  cur.insert(initial_configuration(a));
  for (const LData& ld : prefix) {
    std::set<Configuration> nxt;
    for (const Configuration& c : cur) {
      for (int ti : enabled_transitions(a, c, ld.label, ld.data)) {
        const Transition& t = a.transitions[static_cast<size_t>(ti)];
        nxt.insert(Configuration{t.dst, next_valuation(c.valuation, t.asgn, ld.data)});
      }
    }
    cur = std::move(nxt);
    if (cur.empty()) return false;
  }
  return true;
}

}  // namespace rtsynth
