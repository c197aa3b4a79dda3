#include "rtsynth/core.hpp"

#include <algorithm>
#include <set>

namespace rtsynth {

bool Test::holds_under(RegSet equal_set) const {
  switch (kind_) {
    case Kind::True:
      return true;
    case Kind::False:
      return false;
    case Kind::Eq:
      return reg_in(equal_set, reg_);
    case Kind::Neq:
      return !reg_in(equal_set, reg_);
    case Kind::And:
      return kids_[0].holds_under(equal_set) && kids_[1].holds_under(equal_set);
    case Kind::Or:
      return kids_[0].holds_under(equal_set) || kids_[1].holds_under(equal_set);
    case Kind::Not:
      return !kids_[0].holds_under(equal_set);
  }
  return false;
}

int Test::max_register() const {
  int m = reg_;
  for (const Test& k : kids_) m = std::max(m, k.max_register());
  return m;
}

bool Test::operator==(const Test& o) const {
  return kind_ == o.kind_ && reg_ == o.reg_ && kids_ == o.kids_;
}

Valuation initial_valuation(int num_registers) {
  Valuation v;
  v.contents.assign(static_cast<size_t>(num_registers), kInitialData);
  return v;
}

bool eval_test(const Test& t, const Valuation& tau, DataValue d) {
  switch (t.kind()) {
    case Test::Kind::True:
      return true;
    case Test::Kind::False:
      return false;
    case Test::Kind::Eq:
      return tau[t.reg()] == d;
    case Test::Kind::Neq:
      return tau[t.reg()] != d;
    case Test::Kind::And:
      return eval_test(t.children()[0], tau, d) && eval_test(t.children()[1], tau, d);
    case Test::Kind::Or:
      return eval_test(t.children()[0], tau, d) || eval_test(t.children()[1], tau, d);
    case Test::Kind::Not:
      return !eval_test(t.children()[0], tau, d);
  }
  return false;
}

Valuation next_valuation(const Valuation& tau, RegSet asgn, DataValue d) {
  Valuation out = tau;
  for (size_t r = 0; r < out.contents.size(); ++r)
    if (reg_in(asgn, static_cast<int>(r))) out.contents[r] = d;
  return out;
}

std::vector<RegSet> explicit_tests(const Test& t, int num_registers) {
  std::vector<RegSet> out;
  RegSet all = num_registers >= 32 ? ~RegSet{0} : (RegSet{1} << num_registers);
  for (RegSet e = 0; e < all; ++e)
    if (t.holds_under(e)) out.push_back(e);
  return out;
}

Test explicit_test_formula(RegSet e, int num_registers) {
  Test acc = Test::tt();
  bool first = true;
  for (int r = 0; r < num_registers; ++r) {
    Test atom = reg_in(e, r) ? Test::eq(r) : Test::neq(r);
    acc = first ? atom : Test::conj(std::move(acc), std::move(atom));
    first = false;
  }
  return acc;
}

namespace {

bool collect_atoms(const Test& t, std::vector<int>& seen /* -1 unseen, 0 neq, 1 eq */) {
  switch (t.kind()) {
    case Test::Kind::Eq:
    case Test::Kind::Neq: {
      int r = t.reg();
      if (r < 0 || r >= static_cast<int>(seen.size())) return false;
      if (seen[static_cast<size_t>(r)] != -1) return false;  // mentioned twice
      seen[static_cast<size_t>(r)] = t.kind() == Test::Kind::Eq ? 1 : 0;
      return true;
    }
    case Test::Kind::And:
      return collect_atoms(t.children()[0], seen) && collect_atoms(t.children()[1], seen);
    default:
      return false;
  }
}

}  // namespace

std::optional<RegSet> syntactic_explicit_set(const Test& t, int num_registers) {
  if (num_registers == 0)
    return t.kind() == Test::Kind::True ? std::optional<RegSet>(0) : std::nullopt;
  std::vector<int> seen(static_cast<size_t>(num_registers), -1);
  if (!collect_atoms(t, seen)) return std::nullopt;
  RegSet e = 0;
  for (int r = 0; r < num_registers; ++r) {
    if (seen[static_cast<size_t>(r)] == -1) return std::nullopt;  // register missing
    if (seen[static_cast<size_t>(r)] == 1) e |= reg_bit(r);
  }
  return e;
}

bool is_spec_semantics(Semantics s) {
  return s == Semantics::SpecNra || s == Semantics::SpecUra || s == Semantics::SpecDra;
}

Semantics base_semantics(Semantics s) {
  switch (s) {
    case Semantics::SpecNra:
      return Semantics::Nra;
    case Semantics::SpecUra:
      return Semantics::Ura;
    case Semantics::SpecDra:
      return Semantics::Dra;
    default:
      return s;
  }
}

Semantics with_base(Semantics s, Semantics b) {
  if (!is_spec_semantics(s)) return b;
  switch (base_semantics(b)) {
    case Semantics::Nra:
      return Semantics::SpecNra;
    case Semantics::Ura:
      return Semantics::SpecUra;
    default:
      return Semantics::SpecDra;
  }
}

int RegisterAutomaton::max_priority() const {
  int m = 0;
  for (const State& s : states) m = std::max(m, s.priority);
  return m;
}

void validate(const RegisterAutomaton& a) {
  if (a.states.empty()) throw AutomatonError("automaton has no states");
  if (a.initial < 0 || a.initial >= a.num_states())
    throw AutomatonError("initial state out of range");
  if (a.num_registers() > kMaxRegisters)
    throw AutomatonError("too many registers");
  bool spec = is_spec_semantics(a.semantics);
  if (spec && a.states[static_cast<size_t>(a.initial)].kind != StateKind::Input)
    throw AutomatonError("spec automaton must start in an input state");
  for (const State& s : a.states) {
    if (s.priority < 0) throw AutomatonError("negative priority on state " + s.name);
    if (spec && s.kind == StateKind::Plain)
      throw AutomatonError("spec automaton state " + s.name + " lacks a polarity");
    if (!spec && s.kind != StateKind::Plain)
      throw AutomatonError("plain automaton state " + s.name + " carries a polarity");
  }
  if (!spec && !a.out_labels.empty())
    throw AutomatonError("plain automaton with output labels");
  for (const Transition& t : a.transitions) {
    if (t.src < 0 || t.src >= a.num_states() || t.dst < 0 || t.dst >= a.num_states())
      throw AutomatonError("transition endpoint out of range");
    if (t.label < 0 || t.label >= a.num_labels())
      throw AutomatonError("transition label out of range");
    if (t.test.max_register() >= a.num_registers())
      throw AutomatonError("test mentions an unknown register");
    if (t.asgn >> a.num_registers())
      throw AutomatonError("assignment mentions an unknown register");
    if (spec) {
      const State& src = a.states[static_cast<size_t>(t.src)];
      const State& dst = a.states[static_cast<size_t>(t.dst)];
      bool out_label = a.label_is_output(t.label);
      if ((src.kind == StateKind::Output) != out_label)
        throw AutomatonError("label polarity does not match source state " + src.name);
      if (src.kind == dst.kind)
        throw AutomatonError("transition does not alternate polarity from " + src.name);
    }
  }
}

Configuration initial_configuration(const RegisterAutomaton& a) {
  return Configuration{a.initial, initial_valuation(a.num_registers())};
}

std::vector<int> enabled_transitions(const RegisterAutomaton& a,
                                     const Configuration& cfg, int label,
                                     DataValue d) {
  std::vector<int> out;
  for (size_t i = 0; i < a.transitions.size(); ++i) {
    const Transition& t = a.transitions[i];
    if (t.src == cfg.state && t.label == label && eval_test(t.test, cfg.valuation, d))
      out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<std::vector<int>> transitions_by_source(const RegisterAutomaton& a) {
  std::vector<std::vector<int>> by_src(static_cast<size_t>(a.num_states()));
  for (size_t i = 0; i < a.transitions.size(); ++i)
    by_src[static_cast<size_t>(a.transitions[i].src)].push_back(static_cast<int>(i));
  return by_src;
}

bool is_deterministic(const RegisterAutomaton& a) {
  int n = a.num_registers();
  for (size_t i = 0; i < a.transitions.size(); ++i) {
    for (size_t j = i + 1; j < a.transitions.size(); ++j) {
      const Transition& s = a.transitions[i];
      const Transition& t = a.transitions[j];
      if (s.src != t.src || s.label != t.label) continue;
      std::vector<RegSet> es = explicit_tests(s.test, n);
      std::vector<RegSet> et = explicit_tests(t.test, n);
      std::vector<RegSet> inter;
      std::set_intersection(es.begin(), es.end(), et.begin(), et.end(),
                            std::back_inserter(inter));
      if (!inter.empty()) return false;
    }
  }
  return true;
}

bool is_complete_inputs(const RegisterAutomaton& a) {
  int n = a.num_registers();
  size_t want = size_t{1} << n;
  auto by_src = transitions_by_source(a);
  for (int q = 0; q < a.num_states(); ++q) {
    if (a.states[static_cast<size_t>(q)].kind != StateKind::Input) continue;
    for (int l = 0; l < static_cast<int>(a.in_labels.size()); ++l) {
      std::set<RegSet> covered;
      for (int ti : by_src[static_cast<size_t>(q)]) {
        const Transition& t = a.transitions[static_cast<size_t>(ti)];
        if (t.label != l) continue;
        for (RegSet e : explicit_tests(t.test, n)) covered.insert(e);
      }
      if (covered.size() != want) return false;
    }
  }
  return true;
}

bool is_ido(const RegisterAutomaton& a) {
  for (const Transition& t : a.transitions) {
    if (a.states[static_cast<size_t>(t.src)].kind != StateKind::Output) continue;
    if (t.test.kind() != Test::Kind::Eq) return false;
  }
  return true;
}

bool is_test_free(const RegisterAutomaton& a) {
  for (const Transition& t : a.transitions) {
    bool from_output = a.states[static_cast<size_t>(t.src)].kind == StateKind::Output;
    if (from_output) {
      if (t.test.kind() != Test::Kind::Eq || t.asgn != 0) return false;
    } else {
      if (t.test.kind() != Test::Kind::True) return false;
    }
  }
  return true;
}

RegisterAutomaton shift_colors(const RegisterAutomaton& a, bool flip_semantics) {
  RegisterAutomaton out = a;
  for (State& s : out.states) s.priority += 1;
  if (flip_semantics) {
    Semantics b = base_semantics(a.semantics);
    if (b == Semantics::Ura)
      out.semantics = with_base(a.semantics, Semantics::Nra);
    else if (b == Semantics::Nra)
      out.semantics = with_base(a.semantics, Semantics::Ura);
  }
  return out;
}

RegisterAutomaton complete_with_rejecting_sink(const RegisterAutomaton& a) {
  if (!is_spec_semantics(a.semantics))
    throw AutomatonError("sink completion expects a spec automaton");
  RegisterAutomaton out = a;
  int n = a.num_registers();
  int sink_out = -1, sink_in = -1;
  auto ensure_sinks = [&]() {
    if (sink_out >= 0) return;
    sink_out = out.num_states();
    sink_in = sink_out + 1;
    out.states.push_back(State{"sink_out", StateKind::Output, 1});
    out.states.push_back(State{"sink_in", StateKind::Input, 1});
    for (RegSet e = 0; e < (RegSet{1} << n); ++e) {
      for (int l = 0; l < static_cast<int>(out.in_labels.size()); ++l)
        out.transitions.push_back(
            Transition{sink_in, l, explicit_test_formula(e, n), 0, sink_out});
      for (size_t l = 0; l < out.out_labels.size(); ++l)
        out.transitions.push_back(
            Transition{sink_out, static_cast<int>(out.in_labels.size() + l),
                       explicit_test_formula(e, n), 0, sink_in});
    }
  };
  auto by_src = transitions_by_source(a);
  for (int q = 0; q < a.num_states(); ++q) {
    bool from_output = a.states[static_cast<size_t>(q)].kind == StateKind::Output;
    int lo = from_output ? static_cast<int>(a.in_labels.size()) : 0;
    int hi = from_output ? a.num_labels() : static_cast<int>(a.in_labels.size());
    for (int l = lo; l < hi; ++l) {
      std::set<RegSet> covered;
      for (int ti : by_src[static_cast<size_t>(q)]) {
        const Transition& t = a.transitions[static_cast<size_t>(ti)];
        if (t.label != l) continue;
        for (RegSet e : explicit_tests(t.test, n)) covered.insert(e);
      }
      for (RegSet e = 0; e < (RegSet{1} << n); ++e) {
        if (covered.count(e)) continue;
        ensure_sinks();
        out.transitions.push_back(Transition{
            q, l, explicit_test_formula(e, n), 0, from_output ? sink_in : sink_out});
      }
    }
  }
  return out;
}

void validate(const RegisterTransducer& t) {
  if (t.state_names.empty()) throw AutomatonError("transducer has no states");
  if (t.initial < 0 || t.initial >= t.num_states())
    throw AutomatonError("initial state out of range");
  if (t.num_registers() > kMaxRegisters)
    throw AutomatonError("too many registers");
  for (const Rule& r : t.rules) {
    if (r.src < 0 || r.src >= t.num_states() || r.dst < 0 || r.dst >= t.num_states())
      throw AutomatonError("rule endpoint out of range");
    if (r.in_label < 0 || r.in_label >= static_cast<int>(t.in_labels.size()))
      throw AutomatonError("rule input label out of range");
    if (r.out_label < 0 || r.out_label >= static_cast<int>(t.out_labels.size()))
      throw AutomatonError("rule output label out of range");
    if (r.out_reg < 0 || r.out_reg >= t.num_registers())
      throw AutomatonError("rule output register out of range");
    if (r.test.max_register() >= t.num_registers())
      throw AutomatonError("rule test mentions an unknown register");
    if (r.asgn >> t.num_registers())
      throw AutomatonError("rule assignment mentions an unknown register");
  }
}

bool is_deterministic(const RegisterTransducer& t) {
  int n = t.num_registers();
  for (size_t i = 0; i < t.rules.size(); ++i) {
    for (size_t j = i + 1; j < t.rules.size(); ++j) {
      const Rule& a = t.rules[i];
      const Rule& b = t.rules[j];
      if (a.src != b.src || a.in_label != b.in_label) continue;
      std::vector<RegSet> ea = explicit_tests(a.test, n);
      std::vector<RegSet> eb = explicit_tests(b.test, n);
      std::vector<RegSet> inter;
      std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                            std::back_inserter(inter));
      if (!inter.empty()) return false;
    }
  }
  return true;
}

bool is_complete(const RegisterTransducer& t) {
  int n = t.num_registers();
  size_t want = size_t{1} << n;
  for (int q = 0; q < t.num_states(); ++q) {
    for (int l = 0; l < static_cast<int>(t.in_labels.size()); ++l) {
      std::set<RegSet> covered;
      for (const Rule& r : t.rules) {
        if (r.src != q || r.in_label != l) continue;
        for (RegSet e : explicit_tests(r.test, n)) covered.insert(e);
      }
      if (covered.size() != want) return false;
    }
  }
  return true;
}

RegisterAutomaton transducer_as_dra(const RegisterTransducer& t) {
  validate(t);
  if (!is_deterministic(t))
    throw AutomatonError("transducer is not deterministic");
  if (!is_complete(t))
    throw AutomatonError("transducer is not complete");
  RegisterAutomaton a;
  a.semantics = Semantics::SpecDra;
  a.in_labels = t.in_labels;
  a.out_labels = t.out_labels;
  a.registers = t.registers;
  for (const std::string& s : t.state_names)
    a.states.push_back(State{s, StateKind::Input, 0});
  a.initial = t.initial;
  for (size_t i = 0; i < t.rules.size(); ++i) {
    const Rule& r = t.rules[i];
    int mid = a.num_states();
    a.states.push_back(State{"rule" + std::to_string(i), StateKind::Output, 0});
    a.transitions.push_back(Transition{r.src, r.in_label, r.test, r.asgn, mid});
    a.transitions.push_back(
        Transition{mid, static_cast<int>(a.in_labels.size()) + r.out_label,
                   Test::eq(r.out_reg), 0, r.dst});
  }
  return a;
}

}  // namespace rtsynth
