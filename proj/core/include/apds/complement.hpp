#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "apds/system.hpp"

namespace apds {

/// Which construction a negation system came from: I¬ extends a small-step
/// system with the complement of its tilde form; I′¬ extends a multi-automaton
/// with its own complement.
enum class NegationKind { Extension, Automaton };

struct NegationSystem {
  System system;  // positive rules followed by the negative ones
  NegationKind kind;

  std::vector<const Rule*> negative_rules() const;
};

/// C = {P(ε)} ∪ {P(γx)} over the system's alphabets, in canonical order.
std::vector<Atom> canonical_conclusions(const System& system);

/// Replaces each neutral and elimination rule by its instances at ε and at
/// every γ, so that all conclusions lie in C. ε-instances have closed premises,
/// hence the result is relaxed.
System tilde(const System& small_step);

/// For each B in C with rules r1..rn concluding B, one negative rule
/// ¬B <= ¬A1_j1, .., ¬An_jn per choice of a premise in every ri. No rules
/// conclude B gives the axiom ¬B; a premise-free ri gives no rule for B.
/// Throws ContractError if a conclusion lies outside C.
std::vector<Rule> complement_rules(const System& t);

NegationSystem build_negation_extension(const System& small_step);
NegationSystem negate_automaton(const System& automaton);

using AtomPredicate = std::function<bool(const Atom&)>;

/// Whether the closed atom `target` follows in one rule application from
/// premises satisfying `in_set`. Complements of finite sets are passed as
/// predicates.
bool derivable_in_one_step(const System& system, const Atom& target, const AtomPredicate& in_set);

/// Configurations of word length ≤ max_len derivable in one step from X.
std::set<Atom> one_step(const System& system, const std::set<Atom>& X, std::size_t max_len);

/// All words over `stack` of length ≤ max_len, shortest first.
std::vector<Word> words_up_to(const std::set<StackSym>& stack, std::size_t max_len);

}  // namespace apds
