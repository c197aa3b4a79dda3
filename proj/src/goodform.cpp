#include "rtsynth/goodform.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>

namespace rtsynth {

EqRelation EqRelation::discrete(int n) {
  EqRelation r;
  r.rep_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) r.rep_[static_cast<size_t>(i)] = i;
  return r;
}

EqRelation EqRelation::all_equal(int n) {
  EqRelation r;
  r.rep_.assign(static_cast<size_t>(n), 0);
  return r;
}

void EqRelation::merge(int x, int y) {
  int a = rep(x), b = rep(y);
  if (a == b) return;
  int lo = std::min(a, b), hi = std::max(a, b);
  for (int& r : rep_)
    if (r == hi) r = lo;
}

void EqRelation::split(int x) {
  int old = rep(x);
  rep_[static_cast<size_t>(x)] = x;
  if (old != x) return;
  // x was the representative; promote the next-smallest member.
  int next = -1;
  for (int i = 0; i < size(); ++i)
    if (i != x && rep_[static_cast<size_t>(i)] == old) {
      next = i;
      break;
    }
  if (next < 0) return;
  for (int i = next; i < size(); ++i)
    if (i != x && rep_[static_cast<size_t>(i)] == old)
      rep_[static_cast<size_t>(i)] = next;
}

RegSet EqRelation::class_of(int x) const {
  RegSet f = 0;
  for (int i = 0; i < size(); ++i)
    if (same(i, x)) f |= reg_bit(i);
  return f;
}

std::vector<RegSet> EqRelation::classes() const {
  std::vector<RegSet> out;
  for (int i = 0; i < size(); ++i)
    if (rep(i) == i) out.push_back(class_of(i));
  return out;
}

EqRelation partition_of(const Valuation& tau) {
  int n = static_cast<int>(tau.contents.size());
  EqRelation r = EqRelation::discrete(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (tau[i] == tau[j]) r.merge(i, j);
  return r;
}

bool pattern_satisfiable(const EqRelation& c, RegSet f) {
  if (f == 0) return true;
  int least = 0;
  while (!reg_in(f, least)) ++least;
  return c.class_of(least) == f;
}

std::vector<RegSet> satisfiable_patterns(const GoodFormAutomaton& gf, int s) {
  std::vector<RegSet> out{0};
  for (RegSet f : gf.constraint[static_cast<size_t>(s)].classes()) out.push_back(f);
  return out;
}

namespace {

char reg_char(int v) {
  return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
}

std::string enriched_name(const std::string& base, const EqRelation& c,
                          const std::vector<int>& sub) {
  std::string name = base + "_c";
  for (int r : c.reps()) name.push_back(reg_char(r));
  name += "_s";
  for (int r : sub) name.push_back(reg_char(r));
  return name;
}

}  // namespace

GoodFormAutomaton to_good_form(const RegisterAutomaton& a) {
  validate(a);
  if (!is_spec_semantics(a.semantics))
    throw AutomatonError("good form needs a spec automaton");
  int n = a.num_registers();
  RegSet all_patterns = RegSet{1} << n;

  GoodFormAutomaton gf;
  gf.automaton.semantics = a.semantics;
  gf.automaton.in_labels = a.in_labels;
  gf.automaton.out_labels = a.out_labels;
  gf.automaton.registers = a.registers;

  std::set<std::string> used_names;
  auto fresh_name = [&](std::string base) {
    std::string name = base;
    for (int k = 2; used_names.count(name); ++k)
      name = base + "_" + std::to_string(k);
    used_names.insert(name);
    return name;
  };

  std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> ids;
  auto intern = [&](int q, const EqRelation& c, const std::vector<int>& sub) {
    auto key = std::make_tuple(q, c.reps(), sub);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    int id = gf.automaton.num_states();
    ids.emplace(key, id);
    const State& src = a.states[static_cast<size_t>(q)];
    gf.automaton.states.push_back(
        State{fresh_name(enriched_name(src.name, c, sub)), src.kind, src.priority});
    gf.origin_state.push_back(q);
    gf.constraint.push_back(c);
    gf.substitution.push_back(sub);
    return id;
  };

  auto ensure_sinks = [&]() {
    if (gf.sink_out >= 0) return;
    gf.sink_out = gf.automaton.num_states();
    gf.automaton.states.push_back(State{fresh_name("sink_out"), StateKind::Output, 1});
    gf.sink_in = gf.automaton.num_states();
    gf.automaton.states.push_back(State{fresh_name("sink_in"), StateKind::Input, 1});
    for (int s : {gf.sink_out, gf.sink_in}) {
      gf.origin_state.push_back(-1);
      gf.constraint.push_back(EqRelation::discrete(n));
      std::vector<int> identity(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) identity[static_cast<size_t>(i)] = i;
      gf.substitution.push_back(identity);
      bool out_state = s == gf.sink_out;
      for (int l = 0; l < gf.automaton.num_labels(); ++l) {
        if (gf.automaton.label_is_output(l) != out_state) continue;
        for (RegSet f = 0; f < all_patterns; ++f)
          gf.automaton.transitions.push_back(
              {s, l, explicit_test_formula(f, n), 0,
               out_state ? gf.sink_in : gf.sink_out});
      }
    }
  };

  std::vector<int> identity(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) identity[static_cast<size_t>(i)] = i;
  gf.automaton.initial = intern(a.initial, EqRelation::all_equal(n), identity);

  auto by_src = transitions_by_source(a);
  for (int s = 0; s < gf.automaton.num_states(); ++s) {
    int q = gf.origin_state[static_cast<size_t>(s)];
    if (q < 0) continue;  // sink transitions are added at creation
    EqRelation c = gf.constraint[static_cast<size_t>(s)];
    std::vector<int> sub = gf.substitution[static_cast<size_t>(s)];
    bool out_state = a.states[static_cast<size_t>(q)].kind == StateKind::Output;
    for (int l = 0; l < a.num_labels(); ++l) {
      if (a.label_is_output(l) != out_state) continue;
      for (RegSet f = 0; f < all_patterns; ++f) {
        Test alpha = explicit_test_formula(f, n);
        int before = static_cast<int>(gf.automaton.transitions.size());
        if (pattern_satisfiable(c, f)) {
          // The exact source-register pattern induced by physical pattern f.
          RegSet e_orig = 0;
          for (int r = 0; r < n; ++r)
            if (reg_in(f, sub[static_cast<size_t>(r)])) e_orig |= reg_bit(r);
          for (int ti : by_src[static_cast<size_t>(q)]) {
            const Transition& t = a.transitions[static_cast<size_t>(ti)];
            if (t.label != l || !t.test.holds_under(e_orig)) continue;
            EqRelation c2 = c;
            std::vector<int> sub2 = sub;
            RegSet asgn2 = 0;
            if (f != 0) {
              // The datum already sits in the least register of its class;
              // stores become substitution updates.
              int g = 0;
              while (!reg_in(f, g)) ++g;
              for (int r = 0; r < n; ++r)
                if (reg_in(t.asgn, r)) sub2[static_cast<size_t>(r)] = g;
            } else if (t.asgn != 0) {
              // Fresh datum: store once, into a register holding no live value.
              RegSet keep = 0;
              for (int r = 0; r < n; ++r)
                if (!reg_in(t.asgn, r)) keep |= reg_bit(sub[static_cast<size_t>(r)]);
              int g = 0;
              while (reg_in(keep, g)) ++g;
              c2.split(g);
              for (int r = 0; r < n; ++r)
                if (reg_in(t.asgn, r)) sub2[static_cast<size_t>(r)] = g;
              asgn2 = reg_bit(g);
            }
            int dst = intern(t.dst, c2, sub2);
            gf.automaton.transitions.push_back({s, l, alpha, asgn2, dst});
          }
        }
        if (static_cast<int>(gf.automaton.transitions.size()) == before) {
          // Pattern unmatched (or unrealisable): complete into the sink.
          ensure_sinks();
          gf.automaton.transitions.push_back(
              {s, l, alpha, 0, out_state ? gf.sink_in : gf.sink_out});
        }
      }
    }
  }
  validate(gf.automaton);
  return gf;
}

bool is_good_form(const RegisterAutomaton& a) {
  if (!is_spec_semantics(a.semantics)) return false;
  try {
    validate(a);
  } catch (const AutomatonError&) {
    return false;
  }
  int n = a.num_registers();
  auto by_src = transitions_by_source(a);

  // Trim: every state reachable along transitions.
  std::vector<bool> seen(static_cast<size_t>(a.num_states()), false);
  std::vector<int> work{a.initial};
  seen[static_cast<size_t>(a.initial)] = true;
  while (!work.empty()) {
    int q = work.back();
    work.pop_back();
    for (int ti : by_src[static_cast<size_t>(q)]) {
      int d = a.transitions[static_cast<size_t>(ti)].dst;
      if (!seen[static_cast<size_t>(d)]) {
        seen[static_cast<size_t>(d)] = true;
        work.push_back(d);
      }
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) return false;

  for (int q = 0; q < a.num_states(); ++q) {
    bool out_state = a.states[static_cast<size_t>(q)].kind == StateKind::Output;
    for (int l = 0; l < a.num_labels(); ++l) {
      if (a.label_is_output(l) != out_state) continue;
      std::set<RegSet> covered;
      for (int ti : by_src[static_cast<size_t>(q)]) {
        const Transition& t = a.transitions[static_cast<size_t>(ti)];
        if (t.label != l) continue;
        std::optional<RegSet> e = syntactic_explicit_set(t.test, n);
        if (!e) return false;
        if (*e != 0 && t.asgn != 0) return false;
        covered.insert(*e);
      }
      if (covered.size() != size_t{1} << n) return false;
    }
  }
  return true;
}

}  // namespace rtsynth
