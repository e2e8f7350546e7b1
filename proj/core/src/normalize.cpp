#include "apds/normalize.hpp"

#include <algorithm>
#include <sstream>

#include "apds/error.hpp"

namespace apds {

void ErasureMap::add(StateSym fresh, StateSym original, Word prefix) {
  fresh_.emplace(fresh, std::make_pair(original, std::move(prefix)));
}

Atom ErasureMap::erase(const Atom& atom) const {
  auto it = fresh_.find(atom.state);
  if (it == fresh_.end()) return atom;
  Atom out = atom;
  out.state = it->second.first;
  out.prefix = concat(it->second.second, atom.prefix);
  return out;
}

std::string ErasureMap::serialize() const {
  std::ostringstream out;
  for (const auto& [fresh, origin] : fresh_) {
    out << fresh.name() << " = " << format_atom(Atom::closed(origin.first, origin.second)) << '\n';
  }
  return out.str();
}

namespace {

class Normalizer {
 public:
  explicit Normalizer(const System& input) : input_(input), states_(input.states()) {}

  Normalized run() {
    std::vector<Rule> rules;
    for (const Rule& r : input_.rules()) {
      if (r.kind() != RuleKind::General) {
        rules.push_back(r);
        continue;
      }
      rules.push_back(residue(r));
    }
    for (Rule& r : chains_) rules.push_back(std::move(r));
    System system(input_.name(), states_, input_.stack(), std::move(rules), input_.mode());
    return {std::move(system), std::move(erasure_)};
  }

 private:
  // An intro-shaped conclusion Q(γx) is kept; otherwise every atom with a
  // non-empty prefix is replaced by its fresh state applied to x.
  Rule residue(const Rule& r) {
    std::vector<Atom> premises;
    for (const Atom& p : r.premises()) premises.push_back(split(p));
    const Atom& c = r.conclusion();
    Atom conclusion = c.is_open() && c.prefix.size() == 1 ? c : split(c);
    return Rule("n:" + r.id(), std::move(premises), std::move(conclusion), NormalizationStep{r.id(), NormalizationStep::Role::Residue});
  }

  Atom split(const Atom& a) {
    if (a.prefix.empty() || a.is_closed()) return a;
    return Atom::open(fresh(a.state, a.prefix, a.polarity), {}, a.polarity);
  }

  // Fresh state for (state, prefix), creating the whole chain of fresh states
  // for the prefixes of `prefix` with their push/pop rules.
  StateSym fresh(StateSym state, const Word& prefix, Polarity polarity) {
    StateSym previous = state;
    Word so_far;
    for (StackSym g : prefix) {
      so_far.push_back(g);
      auto key = std::make_pair(state, so_far);
      auto it = known_.find(key);
      if (it == known_.end()) {
        StateSym s = name_for(state, so_far);
        it = known_.emplace(key, s).first;
        erasure_.add(s, state, so_far);
        // previous(γ x) <= s(x)   and   s(x) <= previous(γ x)
        chains_.emplace_back("push:" + std::string(s.name()), std::vector<Atom>{Atom::open(s, {}, polarity)},
                             Atom::open(previous, {g}, polarity),
                             NormalizationStep{std::string(s.name()), NormalizationStep::Role::PushChain});
        chains_.emplace_back("pop:" + std::string(s.name()), std::vector<Atom>{Atom::open(previous, {g}, polarity)},
                             Atom::open(s, {}, polarity),
                             NormalizationStep{std::string(s.name()), NormalizationStep::Role::PopChain});
      }
      previous = it->second;
    }
    return previous;
  }

  StateSym name_for(StateSym state, const Word& prefix) {
    std::string name(state.name());
    name += '#';
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (i) name += '.';
      name += prefix[i].name();
    }
    while (states_.contains(StateSym::intern(name))) name += '_';
    StateSym s = StateSym::intern(name);
    states_.insert(s);
    return s;
  }

  const System& input_;
  std::set<StateSym> states_;
  std::map<std::pair<StateSym, Word>, StateSym> known_;
  std::vector<Rule> chains_;
  ErasureMap erasure_;
};

class Eraser {
 public:
  Eraser(const Normalized& normalized, const System& original) : normalized_(normalized), original_(original) {}

  ProofNode run(const ProofNode& n) {
    if (!n.is_step()) {
      ProofNode out = n;
      out.atom = normalized_.erasure.erase(n.atom);
      return out;
    }
    const Rule& rule = normalized_.system.at(n.rule);
    const auto* step = std::get_if<NormalizationStep>(&rule.provenance());
    if (step && step->role != NormalizationStep::Role::Residue) {
      // Chain steps relate P#v(γw) and P#vγ(w), which erase to the same configuration.
      if (n.children.size() != 1) throw ContractError("chain step " + rule.id() + " must have one child");
      return run(n.children.front());
    }

    std::vector<ProofNode> children;
    children.reserve(n.children.size());
    for (const ProofNode& c : n.children) children.push_back(run(c));
    Atom label = normalized_.erasure.erase(n.atom);
    if (!step) return ProofNode::step(std::move(label), n.rule, std::move(children));

    const Rule& general = original_.at(step->source);
    auto subst = match(general.conclusion(), label);
    if (!subst) throw ContractError("residue " + rule.id() + " does not erase to an instance of " + general.id());
    std::vector<ProofNode> ordered;
    for (const Atom& premise : general.premises()) {
      Atom want = apply(premise, *subst);
      auto it = std::find_if(children.begin(), children.end(), [&](const ProofNode& c) { return c.atom == want; });
      if (it == children.end()) throw ContractError("erased proof lacks premise " + format_atom(want));
      ordered.push_back(*it);
    }
    return ProofNode::step(std::move(label), general.id(), std::move(ordered));
  }

 private:
  const Normalized& normalized_;
  const System& original_;
};

}  // namespace

Normalized to_small_step(const System& system) {
  return Normalizer(system).run();
}

ProofNode erase_proof(const ProofNode& proof, const Normalized& normalized, const System& original) {
  if (normalized.erasure.is_fresh(proof.atom.state)) {
    throw ContractError("proof root " + format_atom(proof.atom) + " mentions a fresh state");
  }
  return Eraser(normalized, original).run(proof);
}

}  // namespace apds
