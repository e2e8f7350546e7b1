#include "apds/certify.hpp"

#include <map>

namespace apds {

namespace {

class SchematicSearch {
 public:
  SchematicSearch(const NegationSystem& neg, const std::set<Atom>& hypotheses) : hypotheses_(hypotheses) {
    for (const Rule* r : neg.negative_rules()) {
      const Atom& c = r->conclusion();
      if (c.is_closed()) {
        axioms_.emplace(c.state, r);  // first in id order wins
      } else {
        if (c.prefix.size() != 1) throw ContractError("rule " + r->id() + " is not introduction-shaped");
        intros_[{c.state, c.prefix.front()}].push_back(r);
      }
    }
  }

  std::optional<ProofNode> prove(const Atom& goal) {
    auto key = std::make_pair(goal.state, std::make_pair(goal.prefix, goal.tail));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::optional<ProofNode> result = search(goal);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::optional<ProofNode> search(const Atom& goal) {
    if (goal.prefix.empty()) {
      if (goal.is_open()) {
        if (hypotheses_.contains(goal)) return ProofNode::hypothesis(goal);
        return std::nullopt;
      }
      auto it = axioms_.find(goal.state);
      if (it == axioms_.end()) return std::nullopt;
      return ProofNode::step(goal, it->second->id());
    }
    auto it = intros_.find({goal.state, goal.prefix.front()});
    if (it == intros_.end()) return std::nullopt;
    Subst rest{Word(goal.prefix.begin() + 1, goal.prefix.end()), goal.tail};
    for (const Rule* r : it->second) {
      std::vector<ProofNode> children;
      bool ok = true;
      for (const Atom& p : r->premises()) {
        auto sub = prove(apply(p, rest));
        if (!sub) {
          ok = false;
          break;
        }
        children.push_back(std::move(*sub));
      }
      if (ok) return ProofNode::step(goal, r->id(), std::move(children));
    }
    return std::nullopt;
  }

  const std::set<Atom>& hypotheses_;
  std::map<StateSym, const Rule*> axioms_;
  std::map<std::pair<StateSym, StackSym>, std::vector<const Rule*>> intros_;
  std::map<std::pair<StateSym, std::pair<Word, Tail>>, std::optional<ProofNode>> memo_;
};

ExpansionMap compute_expansions(const NegationSystem& automaton_negation, const NegationSystem& extension) {
  std::map<Atom, std::vector<const Rule*>> candidates;
  for (const Rule* r : extension.negative_rules()) candidates[r->conclusion()].push_back(r);

  ExpansionMap map;
  for (const Rule* rho : automaton_negation.negative_rules()) {
    std::set<Atom> hypotheses(rho->premises().begin(), rho->premises().end());
    SchematicSearch search(automaton_negation, hypotheses);
    bool found = false;
    for (const Rule* r : candidates[rho->conclusion()]) {
      std::vector<ProofNode> derivations;
      for (const Atom& premise : r->premises()) {
        auto d = search.prove(premise);
        if (!d) break;
        derivations.push_back(std::move(*d));
      }
      if (derivations.size() == r->premises().size()) {
        map.add({rho->id(), r->id(), std::move(derivations)});
        found = true;
        break;
      }
    }
    if (!found) throw Error("no expansion for rule " + rho->format() + " of the negated automaton");
  }
  return map;
}

}  // namespace

std::optional<ProofNode> schematic_provable(const NegationSystem& automaton_negation, const Atom& goal,
                                            const std::set<Atom>& hypotheses) {
  if (!goal.is_negative()) throw ContractError("schematic_provable expects a negative goal");
  return SchematicSearch(automaton_negation, hypotheses).prove(goal);
}

Certifier::Certifier(const System& system)
    : decider_(system),
      extension_(build_negation_extension(decider_.normalized().system)),
      map_(compute_expansions(decider_.negated_automaton(), extension_)) {}

std::optional<ProofNode> Certifier::refutation(const Atom& config) const {
  if (decider_.provable(config)) return std::nullopt;
  return extract_cut_free_proof(automaton_negation().system, config.negated());
}

ProofNode Certifier::unfold(const Atom& config, std::size_t depth) const {
  auto finite = refutation(config);
  if (!finite) throw ContractError(format_atom(config) + " is provable; there is nothing to refute");
  return expand(config.negated(), *finite, 1, depth);
}

// `finite` proves `negated` in I′¬. Its last rule ρ is replaced by the I¬ rule
// chosen for ρ; each premise of that rule gets an I′¬ proof by instantiating
// the stored derivation and grafting the subproofs of `finite` onto its
// hypotheses.
ProofNode Certifier::expand(const Atom& negated, const ProofNode& finite, std::size_t level, std::size_t depth) const {
  if (level >= depth) return ProofNode::continuation(negated, std::make_shared<const ProofNode>(finite));

  const Rule& rho = automaton_negation().system.at(finite.rule);
  const Expansion* e = map_.find(rho.id());
  if (!e) throw Error("expansion map has no entry for " + rho.id());
  const Rule& chosen = extension_.system.at(e->extension_rule);

  auto subst = match(rho.conclusion(), negated);
  if (!subst) throw Error("refutation root does not match its rule");
  std::vector<std::pair<Atom, ProofNode>> pool;
  // After substitution the hypotheses (ρ's premises) are exactly the labels
  // of `finite`'s children.
  for (const ProofNode& c : finite.children) pool.emplace_back(c.atom, c);

  std::vector<ProofNode> children;
  auto premises = chosen.premises();
  for (std::size_t i = 0; i < premises.size(); ++i) {
    Atom label = apply(premises[i], *subst);
    ProofNode proof = graft(substitute(e->premise_derivations[i], *subst), pool);
    children.push_back(expand(label, proof, level + 1, depth));
  }
  return ProofNode::step(negated, chosen.id(), std::move(children));
}

ExpansionMap build_expansion_map(const System& small_step) {
  return Certifier(small_step).expansion_map();
}

ProofNode unfold(const Atom& config, const System& system, std::size_t depth) {
  return Certifier(system).unfold(config, depth);
}

}  // namespace apds
