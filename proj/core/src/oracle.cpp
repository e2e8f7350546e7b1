#include "apds/oracle.hpp"

#include <algorithm>

#include "apds/complement.hpp"

namespace apds::oracle {

BoundedProver::BoundedProver(const System& system, std::size_t depth, std::size_t word_bound) : system_(system) {
  const std::vector<Word> tails = words_up_to(system.stack(), word_bound);
  for (std::size_t level = 0; level < depth; ++level) {
    // Only derivations from the previous level count towards this one.
    std::vector<std::pair<Atom, Derivation>> fresh;
    for (const Rule& r : system.rules()) {
      const Atom& c = r.conclusion();
      auto try_subst = [&](const Subst& subst) {
        Atom label = apply(c, subst);
        if (label.prefix.size() > word_bound || derivations_.contains(label)) return;
        std::vector<Atom> premises;
        for (const Atom& p : r.premises()) {
          Atom a = apply(p, subst);
          if (a.prefix.size() > word_bound || !derivations_.contains(a)) return;
          premises.push_back(std::move(a));
        }
        fresh.emplace_back(std::move(label), Derivation{&r, std::move(premises)});
      };
      if (c.is_closed()) {
        try_subst(Subst::closing({}));
        continue;
      }
      for (const Word& w : tails) {
        if (c.prefix.size() + w.size() > word_bound) break;  // tails are ordered by length
        try_subst(Subst::closing(w));
      }
    }
    std::size_t before = derivations_.size();
    for (auto& [atom, d] : fresh) derivations_.emplace(std::move(atom), std::move(d));
    if (derivations_.size() == before) break;
  }
}

std::optional<ProofNode> BoundedProver::prove(const Atom& config) const {
  auto it = derivations_.find(config);
  if (it == derivations_.end()) return std::nullopt;
  std::vector<ProofNode> children;
  for (const Atom& p : it->second.premises) children.push_back(*prove(p));
  return ProofNode::step(config, it->second.rule->id(), std::move(children));
}

std::optional<ProofNode> search(const System& system, const Atom& config, std::size_t depth, std::size_t word_bound) {
  if (config.prefix.size() > word_bound) return std::nullopt;
  return BoundedProver(system, depth, word_bound).prove(config);
}

std::set<Atom> kleene(const System& system, std::size_t word_bound) {
  std::set<Atom> x;
  while (true) {
    std::set<Atom> next = one_step(system, x, word_bound);
    next.insert(x.begin(), x.end());
    if (next == x) return x;
    x = std::move(next);
  }
}

}  // namespace apds::oracle
