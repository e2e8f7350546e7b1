#pragma once

#include <string>
#include <string_view>

#include "apds/proof.hpp"
#include "apds/system.hpp"

namespace apds {

/// Closes a small-step system under the three saturation cases:
///   1. intro Q(γx) <= H  with elim R(x) <= Q(γx), Q2(x)..  adds  R(x) <= H, Q2(x)..
///   2. intros Qi(γx) <= Hi for every premise of neutral R(x) <= Q1(x)..Qn(x)
///      adds R(γx) <= H1 ∪ .. ∪ Hn   (n = 0 gives R(γx) for every γ)
///   3. axioms Qi(ε) for every premise of that neutral rule adds R(ε).
/// Added rules are named sat<k> in worklist order and record the rules they
/// were combined from. Rules whose shape already exists are dropped.
System saturate(const System& small_step);

/// True when saturation would add nothing.
bool is_saturated(const System& system);

/// Derivation of a saturation rule from the rules present before saturation:
/// an open proof whose root is the rule's conclusion and whose hypothesis
/// leaves are among its premises. Non-saturation rules give the one-step
/// skeleton.
ProofNode expand_saturated_rule(std::string_view rule_id, const System& saturated);

/// The introduction and ε-introduction rules of a saturated system.
System extract_multi_automaton(const System& saturated);

/// `sat3 <= case2(n1; i1,i3)` lines, one per saturation rule.
std::string format_provenance(const System& saturated);

}  // namespace apds
