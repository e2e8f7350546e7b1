#pragma once

#include <map>
#include <string>
#include <utility>

#include "apds/proof.hpp"
#include "apds/system.hpp"

namespace apds {

/// Maps each fresh state P#γ1..γi to (P, γ1..γi); original states map to
/// themselves.
class ErasureMap {
 public:
  void add(StateSym fresh, StateSym original, Word prefix);

  bool is_fresh(StateSym s) const { return fresh_.contains(s); }
  bool empty() const noexcept { return fresh_.empty(); }
  const std::map<StateSym, std::pair<StateSym, Word>>& entries() const noexcept { return fresh_; }

  /// P#γ1..γi(w) becomes P(γ1..γi w); atoms over original states are unchanged.
  Atom erase(const Atom& atom) const;

  /// One `P#a.b = P(a b)` line per fresh state.
  std::string serialize() const;

 private:
  std::map<StateSym, std::pair<StateSym, Word>> fresh_;
};

struct Normalized {
  System system;
  ErasureMap erasure;
};

/// A small-step conservative extension of `system`. Small-step rules are kept
/// unchanged; each general rule is replaced by a residue (`n:<id>`) whose
/// long-prefix atoms are replaced by fresh states, together with the push and
/// pop chains relating each fresh state to its origin. Fresh states are shared
/// between rules.
Normalized to_small_step(const System& system);

/// Maps a proof over the normalized system back to `original`: chain steps
/// are contracted and residue steps become instances of the general rule.
/// Throws ContractError if the root mentions a fresh state.
ProofNode erase_proof(const ProofNode& proof, const Normalized& normalized, const System& original);

}  // namespace apds
