#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rtsynth {

// Data domain: naturals with equality as the only observable relation.
using DataValue = std::uint64_t;

// Every register starts out holding the distinguished initial datum.
inline constexpr DataValue kInitialData = 0;

// Register sets are bitmasks over register indices 0..kMaxRegisters-1.
using RegSet = std::uint32_t;
inline constexpr int kMaxRegisters = 24;

inline bool reg_in(RegSet s, int r) { return (s >> r) & 1u; }
inline RegSet reg_bit(int r) { return RegSet{1} << r; }

// Thrown when an automaton or transducer violates a structural precondition.
struct AutomatonError : std::runtime_error {
  explicit AutomatonError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a runtime contract is broken (nondeterministic step, missing
// rule in a supposedly complete transducer, malformed lasso, ...).
struct ContractViolation : std::runtime_error {
  explicit ContractViolation(const std::string& what) : std::runtime_error(what) {}
};

// Symbolic test over registers: equality/inequality atoms with the usual
// boolean connectives. Immutable after construction.
class Test {
 public:
  enum class Kind { True, False, Eq, Neq, And, Or, Not };

  Test() : kind_(Kind::True) {}

  static Test tt() { return Test(Kind::True, -1, {}); }
  static Test ff() { return Test(Kind::False, -1, {}); }
  static Test eq(int reg) { return Test(Kind::Eq, reg, {}); }
  static Test neq(int reg) { return Test(Kind::Neq, reg, {}); }
  static Test conj(Test a, Test b) {
    return Test(Kind::And, -1, {std::move(a), std::move(b)});
  }
  static Test disj(Test a, Test b) {
    return Test(Kind::Or, -1, {std::move(a), std::move(b)});
  }
  static Test neg(Test a) { return Test(Kind::Not, -1, {std::move(a)}); }

  Kind kind() const { return kind_; }
  int reg() const { return reg_; }
  const std::vector<Test>& children() const { return kids_; }

  // Truth value once every atom is decided by the equality set E:
  // r^= holds iff r is in E.
  bool holds_under(RegSet equal_set) const;

  // Largest register index mentioned, -1 if none.
  int max_register() const;

  bool operator==(const Test& o) const;
  bool operator!=(const Test& o) const { return !(*this == o); }

 private:
  Test(Kind kind, int reg, std::vector<Test> kids)
      : kind_(kind), reg_(reg), kids_(std::move(kids)) {}

  Kind kind_;
  int reg_ = -1;
  std::vector<Test> kids_;
};

// Total map register index -> datum; domain is 0..size-1.
struct Valuation {
  std::vector<DataValue> contents;

  bool operator==(const Valuation& o) const { return contents == o.contents; }
  bool operator<(const Valuation& o) const { return contents < o.contents; }
  DataValue operator[](int r) const { return contents[static_cast<size_t>(r)]; }
};

Valuation initial_valuation(int num_registers);

bool eval_test(const Test& t, const Valuation& tau, DataValue d);

// next(tau, asgn, d): registers in asgn now hold d, the rest are unchanged.
Valuation next_valuation(const Valuation& tau, RegSet asgn, DataValue d);

// All equality sets E under which the test holds; sorted ascending.
std::vector<RegSet> explicit_tests(const Test& t, int num_registers);

// alpha_E: the maximally consistent conjunction with positive atoms exactly E.
// For zero registers this is the empty conjunction, i.e. true.
Test explicit_test_formula(RegSet e, int num_registers);

// Recognises alpha_E shapes syntactically: a conjunction mentioning every
// register exactly once (true alone for zero registers). Returns E on match.
std::optional<RegSet> syntactic_explicit_set(const Test& t, int num_registers);

enum class StateKind { Input, Output, Plain };

// NRA/URA/DRA read plain data words over one alphabet; the spec-* variants
// are input/output alternating specification automata over two alphabets.
enum class Semantics { Nra, Ura, Dra, SpecNra, SpecUra, SpecDra };

bool is_spec_semantics(Semantics s);
Semantics base_semantics(Semantics s);          // spec-x -> x, x -> x
Semantics with_base(Semantics s, Semantics b);  // keep spec-ness, swap base

struct State {
  std::string name;
  StateKind kind = StateKind::Plain;
  int priority = 0;
};

// Labels are indices into a combined table: 0..#in-1 are input labels,
// #in..#in+#out-1 output labels. Plain automata keep out_labels empty.
struct Transition {
  int src = -1;
  int label = -1;
  Test test;
  RegSet asgn = 0;
  int dst = -1;
};

struct RegisterAutomaton {
  Semantics semantics = Semantics::Nra;
  std::vector<std::string> in_labels;
  std::vector<std::string> out_labels;
  std::vector<std::string> registers;
  std::vector<State> states;
  int initial = 0;
  std::vector<Transition> transitions;

  int num_registers() const { return static_cast<int>(registers.size()); }
  int num_states() const { return static_cast<int>(states.size()); }
  int num_labels() const {
    return static_cast<int>(in_labels.size() + out_labels.size());
  }
  bool label_is_output(int l) const {
    return l >= static_cast<int>(in_labels.size());
  }
  const std::string& label_name(int l) const {
    return label_is_output(l) ? out_labels[static_cast<size_t>(l) - in_labels.size()]
                              : in_labels[static_cast<size_t>(l)];
  }
  int max_priority() const;
};

// Structural checks; throws AutomatonError with a readable reason.
void validate(const RegisterAutomaton& a);

struct Configuration {
  int state = 0;
  Valuation valuation;

  bool operator==(const Configuration& o) const {
    return state == o.state && valuation == o.valuation;
  }
  bool operator<(const Configuration& o) const {
    if (state != o.state) return state < o.state;
    return valuation < o.valuation;
  }
};

Configuration initial_configuration(const RegisterAutomaton& a);

// Indices into a.transitions enabled at (cfg, label, d), in index order.
std::vector<int> enabled_transitions(const RegisterAutomaton& a,
                                     const Configuration& cfg, int label,
                                     DataValue d);

// Per-source transition index, in transition order.
std::vector<std::vector<int>> transitions_by_source(const RegisterAutomaton& a);

// Pairwise-disjoint explicit tests per (state, label).
bool is_deterministic(const RegisterAutomaton& a);

// Every input-kind state covers all equality sets for every input label.
// Plain states are ignored.
bool is_complete_inputs(const RegisterAutomaton& a);

// Output transitions carry a single equality atom as test.
bool is_ido(const RegisterAutomaton& a);

// Input tests are syntactically top; output tests single equality atoms with
// empty assignments.
bool is_test_free(const RegisterAutomaton& a);

// Priorities shifted by +1 (complementation under the dual semantics).
// flip_semantics swaps the URA/NRA base tag.
RegisterAutomaton shift_colors(const RegisterAutomaton& a,
                               bool flip_semantics = false);

// Adds a rejecting sink pair (priority 1) so every state covers every
// equality set for every label of its polarity. Spec automata only.
// Unmatched steps then lead to the sink instead of killing the run.
RegisterAutomaton complete_with_rejecting_sink(const RegisterAutomaton& a);

struct Rule {
  int src = -1;
  int in_label = -1;
  Test test;
  RegSet asgn = 0;
  int out_label = -1;
  int out_reg = -1;
  int dst = -1;
};

// Deterministic, complete machine: each input datum triggers exactly one
// rule, which stores, emits a label and the content of one register.
struct RegisterTransducer {
  std::vector<std::string> in_labels;
  std::vector<std::string> out_labels;
  std::vector<std::string> registers;
  std::vector<std::string> state_names;
  int initial = 0;
  std::vector<Rule> rules;

  int num_registers() const { return static_cast<int>(registers.size()); }
  int num_states() const { return static_cast<int>(state_names.size()); }
};

void validate(const RegisterTransducer& t);

bool is_deterministic(const RegisterTransducer& t);
bool is_complete(const RegisterTransducer& t);

// The transducer read as a specification DRA: one output state per rule, all
// priorities 0, output tests pinning the emitted register. Rejects machines
// that are not deterministic and complete.
RegisterAutomaton transducer_as_dra(const RegisterTransducer& t);

}  // namespace rtsynth
