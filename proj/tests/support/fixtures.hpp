#pragma once

#include "rtsynth/core.hpp"

// Hand-built machines reused across suites. Kept in one place so unit tests,
// CLI fixtures and the acceptance suite agree on the exact automata.
namespace rtsynth::fixtures {

// Request/grant specification: every request must eventually be granted with
// the matching datum. A watcher branch stores the request and loops at odd
// priority until the matching grant discharges it (the branch then dies).
// Universal semantics, one register.
// States: wi (in), wo (out), po (out, priority 1), pi (in), si (in, no exits).
inline RegisterAutomaton request_grant_ura() {
  RegisterAutomaton a;
  a.semantics = Semantics::SpecUra;
  a.in_labels = {"req", "idle"};
  a.out_labels = {"grt", "idle"};
  a.registers = {"r"};
  a.states = {
      State{"wi", StateKind::Input, 0},  State{"wo", StateKind::Output, 0},
      State{"po", StateKind::Output, 1}, State{"pi", StateKind::Input, 0},
      State{"si", StateKind::Input, 0},
  };
  a.initial = 0;
  const int wi = 0, wo = 1, po = 2, pi = 3, si = 4;
  const int req = 0, idle_i = 1, grt = 2, idle_o = 3;
  a.transitions = {
      {wi, req, Test::tt(), reg_bit(0), po},  // track this request
      {wi, req, Test::tt(), 0, wo},           // or ignore it
      {wi, idle_i, Test::tt(), 0, wo},
      {wo, grt, Test::tt(), 0, wi},
      {wo, idle_o, Test::tt(), 0, wi},
      {po, idle_o, Test::tt(), 0, pi},
      {po, grt, Test::neq(0), 0, pi},
      {po, grt, Test::eq(0), 0, si},  // the pending datum got granted
      {pi, req, Test::tt(), 0, po},
      {pi, idle_i, Test::tt(), 0, po},
  };
  return a;
}

// One-state transducer granting every request with its own datum.
inline RegisterTransducer grant_all_transducer() {
  RegisterTransducer t;
  t.in_labels = {"req", "idle"};
  t.out_labels = {"grt", "idle"};
  t.registers = {"r"};
  t.state_names = {"q"};
  t.initial = 0;
  t.rules = {
      Rule{0, 0, Test::tt(), reg_bit(0), 0, 0, 0},  // req -> grt with stored datum
      Rule{0, 1, Test::tt(), 0, 1, 0, 0},           // idle -> idle
  };
  return t;
}

// Deterministic spec that is unrealisable: it asks for an output different
// from the datum it has just stored.
inline RegisterAutomaton contradictory_copy_dra() {
  RegisterAutomaton a;
  a.semantics = Semantics::SpecDra;
  a.in_labels = {"a"};
  a.out_labels = {"b"};
  a.registers = {"r"};
  a.states = {
      State{"s1", StateKind::Input, 1},
      State{"s2", StateKind::Output, 1},
      State{"s3", StateKind::Input, 2},
      State{"s4", StateKind::Output, 1},
  };
  a.initial = 0;
  a.transitions = {
      {0, 0, Test::tt(), reg_bit(0), 1},
      {1, 1, Test::neq(0), 0, 2},
      {2, 0, Test::tt(), 0, 3},
      {3, 1, Test::tt(), 0, 2},
  };
  return a;
}

// Deterministic spec realised by the identity: copy the first datum, then
// the second output must differ from the first input iff the second input
// did. (The equal branch stores, which is a no-op.)
inline RegisterAutomaton copy_then_compare_dra() {
  RegisterAutomaton a;
  a.semantics = Semantics::SpecDra;
  a.in_labels = {"a"};
  a.out_labels = {"b"};
  a.registers = {"r"};
  a.states = {
      State{"s1", StateKind::Input, 1},  State{"s2", StateKind::Output, 1},
      State{"s3", StateKind::Input, 1},  State{"s4", StateKind::Output, 1},
      State{"s5", StateKind::Output, 1}, State{"s6", StateKind::Input, 2},
      State{"s7", StateKind::Output, 1},
  };
  a.initial = 0;
  a.transitions = {
      {0, 0, Test::tt(), reg_bit(0), 1},
      {1, 1, Test::eq(0), 0, 2},
      {2, 0, Test::neq(0), 0, 3},
      {2, 0, Test::eq(0), reg_bit(0), 4},
      {3, 1, Test::neq(0), 0, 5},
      {4, 1, Test::eq(0), 0, 5},
      {5, 0, Test::tt(), 0, 6},
      {6, 1, Test::tt(), 0, 5},
  };
  return a;
}

// Echo spec: every input datum is stored and must be emitted back.
inline RegisterAutomaton echo_dra() {
  RegisterAutomaton a;
  a.semantics = Semantics::SpecDra;
  a.in_labels = {"a"};
  a.out_labels = {"b"};
  a.registers = {"r"};
  a.states = {State{"i", StateKind::Input, 0}, State{"o", StateKind::Output, 0}};
  a.initial = 0;
  a.transitions = {
      {0, 0, Test::tt(), reg_bit(0), 1},
      {1, 1, Test::eq(0), 0, 0},
  };
  return a;
}

// Echo spec whose very first input must equal the initial datum; any fresh
// first input drops into an odd absorbing pair. Unrealisable: the
// environment just plays a fresh datum.
inline RegisterAutomaton echo_fresh_trap_dra() {
  RegisterAutomaton a;
  a.semantics = Semantics::SpecDra;
  a.in_labels = {"a"};
  a.out_labels = {"b"};
  a.registers = {"r"};
  a.states = {
      State{"i", StateKind::Input, 0},
      State{"o", StateKind::Output, 0},
      State{"ibad", StateKind::Input, 1},
      State{"obad", StateKind::Output, 1},
  };
  a.initial = 0;
  a.transitions = {
      {0, 0, Test::eq(0), reg_bit(0), 1},
      {0, 0, Test::neq(0), reg_bit(0), 3},
      {1, 1, Test::eq(0), 0, 0},
      {3, 1, Test::eq(0), 0, 2},
      {2, 0, Test::tt(), 0, 3},
  };
  return a;
}

// Test-free identity spec (also ido): store the input, emit it back.
inline RegisterAutomaton identity_test_free() {
  RegisterAutomaton a = echo_dra();
  a.semantics = Semantics::SpecNra;
  return a;
}

// Test-free spec with a genuine choice: at each step the output may be the
// current input (r) or the initial datum (s, never written). Realisable.
inline RegisterAutomaton choice_test_free() {
  RegisterAutomaton a;
  a.semantics = Semantics::SpecNra;
  a.in_labels = {"a"};
  a.out_labels = {"b"};
  a.registers = {"r", "s"};
  a.states = {State{"i", StateKind::Input, 0}, State{"o", StateKind::Output, 0}};
  a.initial = 0;
  a.transitions = {
      {0, 0, Test::tt(), reg_bit(0), 1},
      {1, 1, Test::eq(0), 0, 0},
      {1, 1, Test::eq(1), 0, 0},
  };
  return a;
}

// Test-free spec with empty language (all priorities odd). Unrealisable.
inline RegisterAutomaton empty_test_free() {
  RegisterAutomaton a;
  a.semantics = Semantics::SpecNra;
  a.in_labels = {"a"};
  a.out_labels = {"b"};
  a.registers = {"r"};
  a.states = {State{"i", StateKind::Input, 1}, State{"o", StateKind::Output, 1}};
  a.initial = 0;
  a.transitions = {
      {0, 0, Test::tt(), reg_bit(0), 1},
      {1, 1, Test::eq(0), 0, 0},
  };
  return a;
}

// Nondeterministic spec with an input test; outside every supported class.
inline RegisterAutomaton general_nra() {
  RegisterAutomaton a;
  a.semantics = Semantics::SpecNra;
  a.in_labels = {"a"};
  a.out_labels = {"b"};
  a.registers = {"r"};
  a.states = {State{"i", StateKind::Input, 0}, State{"o", StateKind::Output, 0}};
  a.initial = 0;
  a.transitions = {
      {0, 0, Test::eq(0), 0, 1},
      {0, 0, Test::neq(0), reg_bit(0), 1},
      {1, 1, Test::tt(), 0, 0},
  };
  return a;
}

// One-register identity transducer over a/b.
inline RegisterTransducer identity_transducer() {
  RegisterTransducer t;
  t.in_labels = {"a"};
  t.out_labels = {"b"};
  t.registers = {"r"};
  t.state_names = {"q"};
  t.initial = 0;
  t.rules = {Rule{0, 0, Test::tt(), reg_bit(0), 0, 0, 0}};
  return t;
}

}  // namespace rtsynth::fixtures
