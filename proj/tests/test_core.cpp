#include <set>

#include "doctest.h"
#include "rtsynth/core.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace rtsynth;

TEST_CASE("test evaluation on concrete valuations") {
  Valuation tau;
  tau.contents = {3, 3};
  Test t = Test::conj(Test::eq(0), Test::neq(1));
  CHECK_FALSE(eval_test(t, tau, 3));
  CHECK(eval_test(Test::eq(0), tau, 3));
  CHECK_FALSE(eval_test(Test::neq(1), tau, 3));
  CHECK(eval_test(Test::tt(), tau, 99));
  CHECK_FALSE(eval_test(Test::ff(), tau, 99));
  CHECK(eval_test(Test::disj(Test::ff(), Test::eq(1)), tau, 3));
  CHECK(eval_test(Test::neg(Test::eq(0)), tau, 4));
}

TEST_CASE("next_valuation writes exactly the assigned registers") {
  Valuation tau = initial_valuation(3);
  Valuation t1 = next_valuation(tau, reg_bit(0) | reg_bit(2), 7);
  CHECK(t1.contents == std::vector<DataValue>{7, 0, 7});
  Valuation t2 = next_valuation(t1, 0, 9);
  CHECK(t2 == t1);
}

TEST_CASE("explicit tests of simple formulas") {
  // Or(r0=, r1=) holds exactly when the datum matches at least one register.
  std::vector<RegSet> e = explicit_tests(Test::disj(Test::eq(0), Test::eq(1)), 2);
  CHECK(e == std::vector<RegSet>{1, 2, 3});
  CHECK(explicit_tests(Test::tt(), 2) == std::vector<RegSet>{0, 1, 2, 3});
  CHECK(explicit_tests(Test::ff(), 2).empty());
  CHECK(explicit_tests(Test::tt(), 0) == std::vector<RegSet>{0});
}

TEST_CASE("explicit tests respect the boolean structure") {
  testgen::Rng rng(20260822);
  for (int iter = 0; iter < 500; ++iter) {
    int r = testgen::pick(rng, 0, 3);
    Test a = testgen::random_test(rng, r, 3);
    Test b = testgen::random_test(rng, r, 3);
    auto ea = explicit_tests(a, r);
    auto eb = explicit_tests(b, r);
    std::set<RegSet> sa(ea.begin(), ea.end()), sb(eb.begin(), eb.end());

    auto check_sets = [&](const Test& t, const std::set<RegSet>& expect) {
      auto got = explicit_tests(t, r);
      CHECK(std::set<RegSet>(got.begin(), got.end()) == expect);
    };
    std::set<RegSet> inter, uni, compl_a;
    for (RegSet e = 0; e < (RegSet{1} << r); ++e) {
      if (sa.count(e) && sb.count(e)) inter.insert(e);
      if (sa.count(e) || sb.count(e)) uni.insert(e);
      if (!sa.count(e)) compl_a.insert(e);
    }
    check_sets(Test::conj(a, b), inter);
    check_sets(Test::disj(a, b), uni);
    check_sets(Test::neg(a), compl_a);
  }
}

TEST_CASE("explicit membership matches concrete evaluation") {
  // tau,d |= t iff the equality set of (tau,d) is an explicit test of t.
  testgen::Rng rng(42);
  for (int iter = 0; iter < 500; ++iter) {
    int r = testgen::pick(rng, 0, 3);
    Test t = testgen::random_test(rng, r, 3);
    auto et = explicit_tests(t, r);
    std::set<RegSet> s(et.begin(), et.end());
    Valuation tau;
    for (int i = 0; i < r; ++i)
      tau.contents.push_back(static_cast<DataValue>(testgen::pick(rng, 0, 3)));
    DataValue d = static_cast<DataValue>(testgen::pick(rng, 0, 3));
    RegSet e = 0;
    for (int i = 0; i < r; ++i)
      if (tau[i] == d) e |= reg_bit(i);
    CHECK(eval_test(t, tau, d) == (s.count(e) > 0));
  }
}

TEST_CASE("explicit test formulas round-trip through recognition") {
  for (int r = 0; r <= 3; ++r) {
    for (RegSet e = 0; e < (RegSet{1} << r); ++e) {
      Test alpha = explicit_test_formula(e, r);
      auto back = syntactic_explicit_set(alpha, r);
      REQUIRE(back.has_value());
      CHECK(*back == e);
      CHECK(explicit_tests(alpha, r) == std::vector<RegSet>{e});
    }
  }
  CHECK_FALSE(syntactic_explicit_set(Test::disj(Test::eq(0), Test::eq(1)), 2));
  CHECK_FALSE(syntactic_explicit_set(Test::eq(0), 2));            // r1 missing
  CHECK_FALSE(syntactic_explicit_set(Test::conj(Test::eq(0), Test::eq(0)), 1));
  CHECK_FALSE(syntactic_explicit_set(Test::tt(), 1));
  CHECK(syntactic_explicit_set(Test::tt(), 0).has_value());
}

TEST_CASE("enabled transitions at the request/grant initial state") {
  RegisterAutomaton a = fixtures::request_grant_ura();
  validate(a);
  Configuration cfg = initial_configuration(a);
  std::vector<int> en = enabled_transitions(a, cfg, 0, 4);
  REQUIRE(en.size() == 2);
  CHECK(a.transitions[static_cast<size_t>(en[0])].dst == 2);  // store branch
  CHECK(a.transitions[static_cast<size_t>(en[1])].dst == 1);  // ignore branch
}

TEST_CASE("determinism and input completeness checks") {
  CHECK_FALSE(is_deterministic(fixtures::request_grant_ura()));
  // The discharged watcher state has no exits, so inputs are not complete.
  CHECK_FALSE(is_complete_inputs(fixtures::request_grant_ura()));
  CHECK(is_deterministic(fixtures::echo_dra()));
  CHECK(is_complete_inputs(fixtures::echo_dra()));
  CHECK(is_deterministic(fixtures::echo_fresh_trap_dra()));
  CHECK(is_complete_inputs(fixtures::echo_fresh_trap_dra()));
  CHECK(is_deterministic(fixtures::contradictory_copy_dra()));
  CHECK(is_deterministic(fixtures::copy_then_compare_dra()));

  RegisterAutomaton holey = fixtures::echo_dra();
  holey.transitions[0].test = Test::eq(0);  // fresh inputs now unmatched
  CHECK_FALSE(is_complete_inputs(holey));
}

TEST_CASE("determinism agrees with brute-force overlap search") {
  testgen::Rng rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    RegisterAutomaton a = testgen::random_plain_nra(rng, {});
    int r = a.num_registers();
    bool overlap = false;
    // Two transitions overlap iff they share (src, label) and some
    // valuation/datum satisfies both; over equality patterns that is a
    // shared explicit test.
    for (size_t i = 0; i < a.transitions.size() && !overlap; ++i)
      for (size_t j = i + 1; j < a.transitions.size() && !overlap; ++j) {
        if (a.transitions[i].src != a.transitions[j].src) continue;
        if (a.transitions[i].label != a.transitions[j].label) continue;
        for (RegSet e = 0; e < (RegSet{1} << r); ++e)
          if (a.transitions[i].test.holds_under(e) &&
              a.transitions[j].test.holds_under(e))
            overlap = true;
      }
    CHECK(is_deterministic(a) == !overlap);
  }
}

TEST_CASE("class predicates on the fixture zoo") {
  CHECK(is_ido(fixtures::echo_dra()));
  CHECK(is_ido(fixtures::echo_fresh_trap_dra()));
  CHECK_FALSE(is_ido(fixtures::contradictory_copy_dra()));
  CHECK_FALSE(is_ido(fixtures::copy_then_compare_dra()));
  CHECK(is_ido(fixtures::request_grant_ura()) ==
        false);  // po carries a non-atomic grant test
  CHECK(is_test_free(fixtures::identity_test_free()));
  CHECK(is_test_free(fixtures::choice_test_free()));
  CHECK_FALSE(is_test_free(fixtures::general_nra()));
  CHECK_FALSE(is_test_free(fixtures::contradictory_copy_dra()));
}

TEST_CASE("shift_colors bumps every priority and can flip the base tag") {
  RegisterAutomaton a = fixtures::request_grant_ura();
  RegisterAutomaton s = shift_colors(a);
  for (int q = 0; q < a.num_states(); ++q)
    CHECK(s.states[static_cast<size_t>(q)].priority ==
          a.states[static_cast<size_t>(q)].priority + 1);
  CHECK(s.semantics == Semantics::SpecUra);
  CHECK(shift_colors(a, true).semantics == Semantics::SpecNra);
  CHECK(shift_colors(shift_colors(a, true), true).semantics == Semantics::SpecUra);
}

TEST_CASE("validation rejects malformed automata") {
  RegisterAutomaton a = fixtures::echo_dra();
  CHECK_NOTHROW(validate(a));
  RegisterAutomaton bad = a;
  bad.transitions[0].dst = 9;
  CHECK_THROWS_AS(validate(bad), AutomatonError);
  bad = a;
  bad.states[0].kind = StateKind::Output;
  CHECK_THROWS_AS(validate(bad), AutomatonError);  // initial must be input
  bad = a;
  bad.transitions[1].label = 0;  // input label leaving an output state
  CHECK_THROWS_AS(validate(bad), AutomatonError);
  bad = a;
  bad.transitions[0].test = Test::eq(5);
  CHECK_THROWS_AS(validate(bad), AutomatonError);
}

TEST_CASE("transducer checks and DRA reading") {
  RegisterTransducer t = fixtures::grant_all_transducer();
  CHECK_NOTHROW(validate(t));
  CHECK(is_deterministic(t));
  CHECK(is_complete(t));

  RegisterAutomaton d = transducer_as_dra(t);
  CHECK_NOTHROW(validate(d));
  CHECK(d.semantics == Semantics::SpecDra);
  CHECK(d.num_states() == 3);  // one state plus one per rule
  CHECK(d.transitions.size() == 4);
  for (const State& s : d.states) CHECK(s.priority == 0);

  RegisterTransducer incomplete = t;
  incomplete.rules.pop_back();
  CHECK_FALSE(is_complete(incomplete));
  CHECK_THROWS_AS(transducer_as_dra(incomplete), AutomatonError);

  RegisterTransducer nondet = t;
  nondet.rules.push_back(nondet.rules[0]);
  CHECK_FALSE(is_deterministic(nondet));
  CHECK_THROWS_AS(transducer_as_dra(nondet), AutomatonError);
}

TEST_CASE("sink completion covers every state and label polarity") {
  RegisterAutomaton a = fixtures::contradictory_copy_dra();
  RegisterAutomaton c = complete_with_rejecting_sink(a);
  CHECK_NOTHROW(validate(c));
  CHECK(c.num_states() == a.num_states() + 2);
  int n = c.num_registers();
  auto covered = [&](int q, int l) {
    std::set<RegSet> cov;
    for (const Transition& t : c.transitions)
      if (t.src == q && t.label == l)
        for (RegSet e : explicit_tests(t.test, n)) cov.insert(e);
    return cov.size() == (size_t{1} << n);
  };
  for (int q = 0; q < c.num_states(); ++q) {
    bool out = c.states[static_cast<size_t>(q)].kind == StateKind::Output;
    for (int l = 0; l < c.num_labels(); ++l)
      if (c.label_is_output(l) == out) CHECK(covered(q, l));
  }
  CHECK(is_deterministic(c));  // completion must not break determinism
}
