#pragma once

#include <memory>
#include <optional>

#include "apds/complement.hpp"
#include "apds/normalize.hpp"
#include "apds/proof.hpp"
#include "apds/system.hpp"

namespace apds {

/// Whether the closed atom has a proof in a system whose rules of the atom's
/// polarity are all introduction-shaped: a multi-automaton, or the negative
/// part of I′¬. Memoized on (state, suffix); linear in the word length.
/// Throws ContractError when a symbol is outside the alphabet or a rule of
/// that polarity is not introduction-shaped.
bool member(const System& automaton, const Atom& config);

/// A proof of `config` built from introduction rules only, preferring the
/// lexicographically smallest rule id at each node.
std::optional<ProofNode> extract_cut_free_proof(const System& automaton, const Atom& config);

struct Verdict {
  bool provable = false;
  std::optional<ProofNode> certificate;  // over the original system
  std::optional<ProofNode> refutation;   // over I′¬, a proof of ¬A
};

/// The stages of the decision procedure for one input system:
/// original → small-step → saturated → multi-automaton (→ its negation).
class Decider {
 public:
  explicit Decider(System original);

  const System& original() const noexcept { return original_; }
  const Normalized& normalized() const noexcept { return normalized_; }
  const System& saturated() const noexcept { return saturated_; }
  const System& automaton() const noexcept { return automaton_; }
  const NegationSystem& negated_automaton() const noexcept { return negated_; }

  bool provable(const Atom& config) const;
  Verdict decide(const Atom& config, bool want_refutation) const;

  /// The cut-free proof over the saturated system, before replay.
  std::optional<ProofNode> saturated_certificate(const Atom& config) const;

  /// Replays a proof over the saturated system to the original system.
  ProofNode to_original(const ProofNode& saturated_proof) const;

 private:
  void require_config(const Atom& config) const;

  System original_;
  Normalized normalized_;
  System saturated_;
  System automaton_;
  NegationSystem negated_;
};

/// Shares one Decider per distinct input system across calls; safe to call
/// concurrently.
std::shared_ptr<const Decider> decider_for(const System& system);

Verdict decide(const System& system, const Atom& config, bool want_refutation = false);

}  // namespace apds
