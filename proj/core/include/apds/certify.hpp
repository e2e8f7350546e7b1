#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "apds/complement.hpp"
#include "apds/decide.hpp"
#include "apds/error.hpp"
#include "apds/proof.hpp"

namespace apds {

/// Given families H^1..H^n such that every union H^1_j1 ∪ .. ∪ H^n_jn meets
/// `hits`, returns the least (0-based) l such that every H^l_j meets `hits`.
/// The hypothesis is checked by enumerating all choice vectors; ContractError
/// if it fails or there are no families.
template <class T>
std::size_t hitting_index(const std::vector<std::vector<std::set<T>>>& families, const std::set<T>& hits) {
  if (families.empty()) throw ContractError("hitting_index needs at least one family");
  auto meets = [&](const std::set<T>& h) {
    return std::any_of(h.begin(), h.end(), [&](const T& x) { return hits.contains(x); });
  };
  // With an empty family there are no choice vectors and the hypothesis holds vacuously.
  const bool vacuous = std::any_of(families.begin(), families.end(), [](const auto& f) { return f.empty(); });
  std::vector<std::size_t> choice(families.size(), 0);
  while (!vacuous) {
    bool covered = false;
    for (std::size_t i = 0; i < families.size() && !covered; ++i) covered = meets(families[i][choice[i]]);
    if (!covered) throw ContractError("hitting_index: some union of chosen sets misses the target set");
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == families[k].size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  for (std::size_t l = 0; l < families.size(); ++l) {
    if (std::all_of(families[l].begin(), families[l].end(), meets)) return l;
  }
  throw Error("hitting_index: no index found although the hypothesis holds");
}

/// Backward search in the negative part of I′¬ for a derivation of `goal`
/// from hypothesis leaves drawn from `hypotheses` (negative atoms ¬S(x)).
/// Each step strips one stack symbol from the goal's prefix.
std::optional<ProofNode> schematic_provable(const NegationSystem& automaton_negation, const Atom& goal,
                                            const std::set<Atom>& hypotheses);

/// For a negative rule ρ of I′¬: a rule of I¬ with the same conclusion and,
/// for each of its premises, a derivation in I′¬ from ρ's premises.
struct Expansion {
  std::string automaton_rule;
  std::string extension_rule;
  std::vector<ProofNode> premise_derivations;  // in the extension rule's premise order
};

class ExpansionMap {
 public:
  void add(Expansion e) {
    std::string key = e.automaton_rule;
    entries_.emplace(std::move(key), std::move(e));
  }
  const Expansion* find(const std::string& automaton_rule) const {
    auto it = entries_.find(automaton_rule);
    return it == entries_.end() ? nullptr : &it->second;
  }
  const std::map<std::string, Expansion>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<std::string, Expansion> entries_;
};

/// The constructions needed to turn finite refutations in I′¬ into
/// co-inductive proofs in I¬, for one input system (normalized first when it
/// is not small-step).
class Certifier {
 public:
  explicit Certifier(const System& system);

  const Decider& decider() const noexcept { return decider_; }
  const System& small_step() const noexcept { return decider_.normalized().system; }
  const NegationSystem& automaton_negation() const noexcept { return decider_.negated_automaton(); }
  const NegationSystem& extension() const noexcept { return extension_; }
  const ExpansionMap& expansion_map() const noexcept { return map_; }

  /// Finite proof of ¬A in I′¬, or nullopt when A is provable.
  std::optional<ProofNode> refutation(const Atom& config) const;

  /// The co-inductive proof of ¬A in I¬, cut off so that it has at most
  /// `depth` levels; the last level consists of continuation leaves that
  /// carry their I′¬ proofs. depth 0 and 1 both give a single continuation.
  /// Throws ContractError if A is provable.
  ProofNode unfold(const Atom& config, std::size_t depth) const;

 private:
  ProofNode expand(const Atom& negated, const ProofNode& finite, std::size_t level, std::size_t depth) const;

  Decider decider_;
  NegationSystem extension_;
  ExpansionMap map_;
};

ExpansionMap build_expansion_map(const System& small_step);

ProofNode unfold(const Atom& config, const System& system, std::size_t depth);

}  // namespace apds
