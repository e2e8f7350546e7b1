#include "apds/saturate.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "apds/error.hpp"

namespace apds {

namespace {

using IntroKey = std::pair<StateSym, StackSym>;

class Saturator {
 public:
  explicit Saturator(const System& input) : input_(input) {
    for (const Rule& r : input.rules()) {
      rules_.push_back(r);
      shapes_.emplace(RuleShape::of(r), rules_.size() - 1);
      ids_.insert(r.id());
      queue_.push_back(rules_.size() - 1);
    }
  }

  System run() {
    while (!queue_.empty()) {
      std::size_t i = queue_.front();
      queue_.pop_front();
      process(i);
    }
    return input_.with_rules(std::move(rules_), input_.name()).marked_saturated();
  }

  std::size_t added() const { return added_; }

 private:
  // Rules are referenced by index: `rules_` grows while we iterate.
  const Rule& rule(std::size_t i) const { return rules_[i]; }

  void process(std::size_t i) {
    const Rule r = rule(i);
    const Atom& c = r.conclusion();
    switch (r.kind()) {
      case RuleKind::Intro: {
        IntroKey key{c.state, c.prefix.front()};
        intros_[key].push_back(i);
        for (std::size_t e : elims_[key]) combine_elim(e, i);
        for (std::size_t n : neutrals_by_premise_[c.state]) combine_neutral(n, c.prefix.front(), c.state, i);
        break;
      }
      case RuleKind::EpsIntro:
        axioms_.emplace(c.state, i);
        for (std::size_t n : neutrals_by_premise_[c.state]) combine_empty(n);
        break;
      case RuleKind::Elim: {
        const Atom* head = elim_head(r);
        IntroKey key{head->state, head->prefix.front()};
        elims_[key].push_back(i);
        for (std::size_t in : intros_[key]) combine_elim(i, in);
        break;
      }
      case RuleKind::Neutral:
        neutrals_.push_back(i);
        for (const Atom& p : r.premises()) neutrals_by_premise_[p.state].push_back(i);
        for (StackSym g : input_.stack()) combine_neutral(i, g, std::nullopt, 0);
        combine_empty(i);
        break;
      case RuleKind::General:
        throw ContractError("saturation needs a small-step system; rule " + r.id() + " is general");
    }
  }

  // Case 1.
  void combine_elim(std::size_t elim, std::size_t intro) {
    const Rule& e = rule(elim);
    const Rule& in = rule(intro);
    const Atom* head = elim_head(e);
    std::vector<Atom> premises(in.premises().begin(), in.premises().end());
    for (const Atom& p : e.premises()) {
      if (&p != head) premises.push_back(p);
    }
    add(std::move(premises), e.conclusion(), SaturationStep{1, e.id(), {in.id()}});
  }

  // Case 2. When `fixed_state` is set, the premise with that state is bound to
  // `fixed_intro` and the others range over all known intros at γ.
  void combine_neutral(std::size_t neutral, StackSym g, std::optional<StateSym> fixed_state, std::size_t fixed_intro) {
    const Rule n = rule(neutral);  // copied: add() below grows rules_
    std::vector<std::vector<std::size_t>> options;
    for (const Atom& p : n.premises()) {
      if (fixed_state && p.state == *fixed_state) {
        options.push_back({fixed_intro});
      } else {
        auto it = intros_.find({p.state, g});
        if (it == intros_.end() || it->second.empty()) return;
        options.push_back(it->second);
      }
    }
    Atom conclusion = n.conclusion();
    conclusion.prefix = {g};
    std::vector<std::size_t> pick(options.size(), 0);
    while (true) {
      std::vector<Atom> premises;
      std::vector<std::string> used;
      for (std::size_t k = 0; k < options.size(); ++k) {
        const Rule& in = rule(options[k][pick[k]]);
        premises.insert(premises.end(), in.premises().begin(), in.premises().end());
        used.push_back(in.id());
      }
      add(std::move(premises), conclusion, SaturationStep{2, n.id(), std::move(used)});
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == options[k].size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }

  // Case 3.
  void combine_empty(std::size_t neutral) {
    const Rule& n = rule(neutral);
    std::vector<std::string> used;
    for (const Atom& p : n.premises()) {
      auto it = axioms_.find(p.state);
      if (it == axioms_.end()) return;
      used.push_back(rule(it->second).id());
    }
    add({}, Atom::closed(n.conclusion().state, {}, n.polarity()), SaturationStep{3, n.id(), std::move(used)});
  }

  void add(std::vector<Atom> premises, Atom conclusion, SaturationStep step) {
    Rule candidate("", std::move(premises), std::move(conclusion), std::move(step));
    RuleShape shape = RuleShape::of(candidate);
    if (shapes_.contains(shape)) return;
    std::string id;
    do {
      id = "sat" + std::to_string(++counter_);
    } while (ids_.contains(id));
    ids_.insert(id);
    rules_.push_back(candidate.renamed(id));
    shapes_.emplace(std::move(shape), rules_.size() - 1);
    queue_.push_back(rules_.size() - 1);
    ++added_;
  }

  const System& input_;
  std::vector<Rule> rules_;
  std::map<RuleShape, std::size_t> shapes_;
  std::set<std::string> ids_;
  std::deque<std::size_t> queue_;
  std::size_t counter_ = 0;
  std::size_t added_ = 0;

  std::map<IntroKey, std::vector<std::size_t>> intros_;
  std::map<IntroKey, std::vector<std::size_t>> elims_;
  std::map<StateSym, std::size_t> axioms_;
  std::vector<std::size_t> neutrals_;
  std::map<StateSym, std::vector<std::size_t>> neutrals_by_premise_;
};

class Expander {
 public:
  explicit Expander(const System& saturated) : saturated_(saturated) {}

  const ProofNode& expand(const std::string& id) {
    if (auto it = memo_.find(id); it != memo_.end()) return it->second;
    const Rule& r = saturated_.at(id);
    ProofNode skeleton = build(r);
    return memo_.emplace(id, std::move(skeleton)).first->second;
  }

 private:
  ProofNode build(const Rule& r) {
    const auto* step = std::get_if<SaturationStep>(&r.provenance());
    if (!step) {
      std::vector<ProofNode> leaves;
      for (const Atom& p : r.premises()) leaves.push_back(ProofNode::hypothesis(p));
      return ProofNode::step(r.conclusion(), r.id(), std::move(leaves));
    }
    const Rule& base = saturated_.at(step->base);
    std::vector<std::pair<Atom, ProofNode>> pool;
    switch (step->combination) {
      case 1: {
        const Rule& intro = saturated_.at(step->intros.at(0));
        pool.emplace_back(intro.conclusion(), expand(intro.id()));
        return graft(expand(base.id()), pool);
      }
      case 2: {
        StackSym g = r.conclusion().prefix.front();
        for (const std::string& id : step->intros) {
          const Rule& intro = saturated_.at(id);
          pool.emplace_back(intro.conclusion(), expand(id));
        }
        return graft(substitute(expand(base.id()), Subst::pushing({g})), pool);
      }
      case 3: {
        for (const std::string& id : step->intros) pool.emplace_back(saturated_.at(id).conclusion(), expand(id));
        return graft(substitute(expand(base.id()), Subst::closing({})), pool);
      }
      default:
        throw Error("corrupt saturation provenance on rule " + r.id());
    }
  }

  const System& saturated_;
  std::map<std::string, ProofNode> memo_;
};

}  // namespace

System saturate(const System& small_step) {
  if (!small_step.is_small_step()) throw ContractError("saturation needs a small-step system");
  if (small_step.klass() == SystemClass::NegationExtended) throw ContractError("saturation applies to positive systems");
  return Saturator(small_step).run();
}

bool is_saturated(const System& system) {
  if (!system.is_small_step() || system.klass() == SystemClass::NegationExtended) return false;
  Saturator s(system);
  s.run();
  return s.added() == 0;
}

ProofNode expand_saturated_rule(std::string_view rule_id, const System& saturated) {
  return Expander(saturated).expand(std::string(rule_id));
}

System extract_multi_automaton(const System& saturated) {
  if (saturated.klass() != SystemClass::Saturated && saturated.klass() != SystemClass::MultiAutomaton &&
      !is_saturated(saturated)) {
    throw ContractError("extract_multi_automaton needs a saturated system");
  }
  std::vector<Rule> intros;
  for (const Rule& r : saturated.rules()) {
    if (r.is_intro()) intros.push_back(r);
  }
  return saturated.with_rules(std::move(intros), saturated.name());
}

std::string format_provenance(const System& saturated) {
  std::ostringstream out;
  for (const Rule& r : saturated.rules()) {
    const auto* step = std::get_if<SaturationStep>(&r.provenance());
    if (!step) continue;
    out << r.id() << " <= case" << step->combination << '(' << step->base;
    for (std::size_t i = 0; i < step->intros.size(); ++i) out << (i ? "," : "; ") << step->intros[i];
    out << ")\n";
  }
  return out.str();
}

}  // namespace apds
