#pragma once

#include <vector>

#include "rtsynth/core.hpp"

namespace rtsynth {

// Partition of {0..n-1}, canonically stored as rep(i) = least element of i's
// class. Comparable and hashable through reps().
class EqRelation {
 public:
  EqRelation() = default;
  static EqRelation discrete(int n);
  static EqRelation all_equal(int n);

  int size() const { return static_cast<int>(rep_.size()); }
  int rep(int x) const { return rep_[static_cast<size_t>(x)]; }
  bool same(int x, int y) const { return rep(x) == rep(y); }
  void merge(int x, int y);
  // x becomes a singleton class; the rest of its class keeps its values.
  void split(int x);
  RegSet class_of(int x) const;
  std::vector<RegSet> classes() const;  // ordered by least element
  const std::vector<int>& reps() const { return rep_; }

  bool operator==(const EqRelation& o) const { return rep_ == o.rep_; }
  bool operator<(const EqRelation& o) const { return rep_ < o.rep_; }

 private:
  std::vector<int> rep_;
};

// Equality pattern of a valuation: i ~ j iff tau(i) == tau(j).
EqRelation partition_of(const Valuation& tau);

// Exact pattern F is realisable by some datum under constraint c iff F is
// empty or a full class of c.
bool pattern_satisfiable(const EqRelation& c, RegSet f);

// A spec automaton in good form together with the bookkeeping produced by
// to_good_form. States of `automaton` refine states of the source: each
// carries the equality constraint its registers provably satisfy on entry
// (constraint = partition of the valuation, exactly) and a substitution
// mapping source registers to the register currently holding their value.
// Entries for the two rejecting sinks are placeholders.
struct GoodFormAutomaton {
  RegisterAutomaton automaton;
  std::vector<int> origin_state;               // -1 for the sinks
  std::vector<EqRelation> constraint;
  std::vector<std::vector<int>> substitution;  // source register -> register
  int sink_in = -1;
  int sink_out = -1;
};

// Exact patterns realisable at state s: one per constraint class, plus the
// all-fresh pattern.
std::vector<RegSet> satisfiable_patterns(const GoodFormAutomaton& gf, int s);

// Language-preserving normal form of a spec automaton:
//  - every test is an exact pattern formula (alpha_E),
//  - every state covers every pattern for every label of its polarity,
//  - assignments appear only on all-fresh (alpha_empty) transitions, and
//    store into a single register,
//  - unmatched letters fall into an absorbing odd-priority sink pair, so a
//    word whose run would die is rejected.
// Under existential and deterministic readings the language is unchanged; a
// universal automaton changes exactly as if completed with a rejecting sink
// (dying branches no longer accept vacuously). Preserves determinism.
// Exponential in the register count; intended for small register sets.
GoodFormAutomaton to_good_form(const RegisterAutomaton& a);

// Syntactic check of the clauses above (trim, exact tests, complete at both
// polarities, stores only on all-fresh transitions).
bool is_good_form(const RegisterAutomaton& a);

}  // namespace rtsynth
