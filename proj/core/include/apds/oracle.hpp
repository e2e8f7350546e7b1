#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <unordered_map>

#include "apds/proof.hpp"
#include "apds/system.hpp"

/// Brute-force provers used to cross-check the decision procedure. They share
/// nothing with it beyond rule matching.
namespace apds::oracle {

/// All configurations with a proof of height ≤ depth in which every label has
/// word length ≤ word_bound, computed level by level. Sound for any system;
/// complete only within the bounds.
class BoundedProver {
 public:
  BoundedProver(const System& system, std::size_t depth, std::size_t word_bound);

  bool provable(const Atom& config) const { return derivations_.contains(config); }
  std::optional<ProofNode> prove(const Atom& config) const;
  std::size_t size() const noexcept { return derivations_.size(); }

 private:
  struct Derivation {
    const Rule* rule;
    std::vector<Atom> premises;
  };

  const System& system_;
  std::unordered_map<Atom, Derivation, AtomHash> derivations_;
};

std::optional<ProofNode> search(const System& system, const Atom& config, std::size_t depth, std::size_t word_bound);

/// Least fixed point of the one-step function restricted to words of length
/// ≤ word_bound. Exact when no rule has premises longer than its conclusion.
std::set<Atom> kleene(const System& system, std::size_t word_bound);

}  // namespace apds::oracle
