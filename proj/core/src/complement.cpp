#include "apds/complement.hpp"

#include <algorithm>
#include <map>

#include "apds/error.hpp"

namespace apds {

std::vector<const Rule*> NegationSystem::negative_rules() const {
  std::vector<const Rule*> out;
  for (const Rule& r : system.rules()) {
    if (r.polarity() == Polarity::Negative) out.push_back(&r);
  }
  return out;
}

std::vector<Atom> canonical_conclusions(const System& system) {
  std::vector<Atom> out;
  for (StateSym s : system.states()) {
    out.push_back(Atom::closed(s));
    for (StackSym g : system.stack()) out.push_back(Atom::open(s, {g}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

System tilde(const System& small_step) {
  std::vector<Rule> rules;
  for (const Rule& r : small_step.rules()) {
    switch (r.kind()) {
      case RuleKind::Intro:
      case RuleKind::EpsIntro:
        rules.push_back(r);
        break;
      case RuleKind::Neutral:
      case RuleKind::Elim: {
        auto instance = [&](const Subst& subst, std::string suffix) {
          std::vector<Atom> premises;
          for (const Atom& p : r.premises()) premises.push_back(apply(p, subst));
          rules.emplace_back(r.id() + "." + suffix, std::move(premises), apply(r.conclusion(), subst),
                             Instantiation{r.id()});
        };
        instance(Subst::closing({}), "eps");
        for (StackSym g : small_step.stack()) instance(Subst::pushing({g}), std::string(g.name()));
        break;
      }
      case RuleKind::General:
        throw ContractError("tilde needs a small-step system; rule " + r.id() + " is general");
    }
  }
  return System(small_step.name(), small_step.states(), small_step.stack(), std::move(rules), WellFormedness::Relaxed);
}

namespace {

bool in_canonical_set(const Atom& a) {
  if (a.is_negative()) return false;
  return a.is_closed() ? a.prefix.empty() : a.prefix.size() == 1;
}

std::string conclusion_key(const Atom& b) {
  std::string key(b.state.name());
  key += '.';
  key += b.is_closed() ? std::string("eps") : std::string(b.prefix.front().name());
  return key;
}

std::vector<Atom> negate_all(const std::vector<Atom>& atoms) {
  std::vector<Atom> out;
  out.reserve(atoms.size());
  for (const Atom& a : atoms) out.push_back(a.negated());
  return out;
}

}  // namespace

std::vector<Rule> complement_rules(const System& t) {
  std::map<Atom, std::vector<const Rule*>> by_conclusion;
  for (const Rule& r : t.rules()) {
    if (!in_canonical_set(r.conclusion())) {
      throw ContractError("rule " + r.id() + " concludes " + format_atom(r.conclusion()) + ", outside P(eps) / P(g x)");
    }
    by_conclusion[r.conclusion()].push_back(&r);  // rules() is in id order
  }

  std::vector<Rule> out;
  for (const Atom& b : canonical_conclusions(t)) {
    const std::string key = conclusion_key(b);
    const auto& group = by_conclusion[b];
    if (group.empty()) {
      out.emplace_back(key + "~", std::vector<Atom>{}, b.negated(), ComplementChoice{});
      continue;
    }
    if (std::any_of(group.begin(), group.end(), [](const Rule* r) { return r->premises().empty(); })) continue;

    std::vector<std::string> sources;
    for (const Rule* r : group) sources.push_back(r->id());
    std::set<std::vector<Atom>> seen;
    std::vector<std::size_t> choice(group.size(), 0);
    while (true) {
      std::vector<Atom> premises;
      for (std::size_t i = 0; i < group.size(); ++i) premises.push_back(group[i]->premises()[choice[i]]);
      Rule rule("", negate_all(premises), b.negated(), ComplementChoice{sources, choice});
      std::vector<Atom> set(rule.premises().begin(), rule.premises().end());
      if (seen.insert(std::move(set)).second) {
        std::string id = key + "~";
        for (std::size_t i = 0; i < choice.size(); ++i) id += (i ? "." : "") + std::to_string(choice[i] + 1);
        out.push_back(rule.renamed(std::move(id)));
      }
      // Odometer, last position fastest.
      std::size_t k = choice.size();
      while (k > 0 && ++choice[k - 1] == group[k - 1]->premises().size()) choice[--k] = 0;
      if (k == 0) break;
    }
  }
  return out;
}

NegationSystem build_negation_extension(const System& small_step) {
  if (!small_step.is_small_step()) throw ContractError("negation extension needs a small-step system");
  std::vector<Rule> rules(small_step.rules().begin(), small_step.rules().end());
  for (Rule& r : complement_rules(tilde(small_step))) rules.push_back(std::move(r));
  return {System(small_step.name(), small_step.states(), small_step.stack(), std::move(rules), WellFormedness::Relaxed),
          NegationKind::Extension};
}

NegationSystem negate_automaton(const System& automaton) {
  if (!automaton.is_multi_automaton()) throw ContractError("negate_automaton needs a multi-automaton");
  std::vector<Rule> rules(automaton.rules().begin(), automaton.rules().end());
  for (Rule& r : complement_rules(automaton)) rules.push_back(std::move(r));
  return {System(automaton.name(), automaton.states(), automaton.stack(), std::move(rules), automaton.mode()),
          NegationKind::Automaton};
}

bool derivable_in_one_step(const System& system, const Atom& target, const AtomPredicate& in_set) {
  for (const Rule& r : system.rules()) {
    auto subst = match(r.conclusion(), target);
    if (!subst) continue;
    bool all = std::all_of(r.premises().begin(), r.premises().end(),
                           [&](const Atom& p) { return in_set(apply(p, *subst)); });
    if (all) return true;
  }
  return false;
}

std::vector<Word> words_up_to(const std::set<StackSym>& stack, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (StackSym g : stack) {
        Word w = out[i];
        w.push_back(g);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

std::set<Atom> one_step(const System& system, const std::set<Atom>& X, std::size_t max_len) {
  std::set<Polarity> polarities;
  for (const Rule& r : system.rules()) polarities.insert(r.polarity());
  auto in_x = [&](const Atom& a) { return X.contains(a); };
  std::set<Atom> out;
  const std::vector<Word> words = words_up_to(system.stack(), max_len);
  for (Polarity pol : polarities) {
    for (StateSym s : system.states()) {
      for (const Word& w : words) {
        Atom a = Atom::closed(s, w, pol);
        if (derivable_in_one_step(system, a, in_x)) out.insert(std::move(a));
      }
    }
  }
  return out;
}

}  // namespace apds
