#include "apds/system.hpp"

#include <algorithm>
#include <sstream>

#include "apds/error.hpp"
#include "lexer.hpp"

namespace apds {

std::string_view to_string(SystemClass c) {
  switch (c) {
    case SystemClass::General: return "general";
    case SystemClass::SmallStep: return "small-step";
    case SystemClass::Saturated: return "saturated";
    case SystemClass::MultiAutomaton: return "multi-automaton";
    case SystemClass::NegationExtended: return "negation-extended";
  }
  return "?";
}

void validate_rule(const Rule& rule, WellFormedness mode) {
  const Atom& c = rule.conclusion();
  auto premises = rule.premises();
  if (mode == WellFormedness::Strict) {
    for (const Atom& p : premises) {
      if (p.is_closed()) throw ContractError("rule " + rule.id() + ": closed premise " + format_atom(p));
    }
    if (c.is_closed()) {
      if (!c.prefix.empty()) throw ContractError("rule " + rule.id() + ": closed conclusion must be Q(eps)");
      if (!premises.empty()) throw ContractError("rule " + rule.id() + ": the axiom Q(eps) takes no premises");
    }
  } else if (c.is_closed()) {
    for (const Atom& p : premises) {
      if (p.is_open()) throw ContractError("rule " + rule.id() + ": open premise under a closed conclusion");
    }
  }
}

System::System(std::string name, std::set<StateSym> states, std::set<StackSym> stack, std::vector<Rule> rules,
               WellFormedness mode)
    : name_(std::move(name)), states_(std::move(states)), stack_(std::move(stack)), rules_(std::move(rules)), mode_(mode) {
  std::sort(rules_.begin(), rules_.end(), [](const Rule& a, const Rule& b) { return a.id() < b.id(); });
  for (std::size_t i = 1; i < rules_.size(); ++i) {
    if (rules_[i].id() == rules_[i - 1].id()) throw ContractError("duplicate rule id '" + rules_[i].id() + "'");
  }
  for (const Rule& r : rules_) {
    validate_rule(r, mode_);
    for (const Atom& a : r.premises()) require_in_language(a);
    require_in_language(r.conclusion());
  }
  index();
}

void System::index() {
  by_id_.clear();
  by_shape_.clear();
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    by_id_.emplace(rules_[i].id(), i);
    by_shape_.emplace(RuleShape::of(rules_[i]), i);
  }
}

const Rule* System::find(std::string_view id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &rules_[it->second];
}

const Rule& System::at(std::string_view id) const {
  if (const Rule* r = find(id)) return *r;
  throw ContractError("unknown rule id '" + std::string(id) + "' in system " + name_);
}

const Rule* System::find_shape(const RuleShape& shape) const {
  auto it = by_shape_.find(shape);
  return it == by_shape_.end() ? nullptr : &rules_[it->second];
}

bool System::is_small_step() const noexcept {
  return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.kind() != RuleKind::General; });
}

SystemClass System::klass() const noexcept {
  bool negative = std::any_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.polarity() == Polarity::Negative; });
  if (negative) return SystemClass::NegationExtended;
  if (std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.is_intro(); })) {
    return SystemClass::MultiAutomaton;
  }
  if (!is_small_step()) return SystemClass::General;
  return saturated_ ? SystemClass::Saturated : SystemClass::SmallStep;
}

System System::with_rules(std::vector<Rule> rules, std::string name) const {
  return System(std::move(name), states_, stack_, std::move(rules), mode_);
}

System System::with_states(std::set<StateSym> states) const {
  System s = *this;
  s.states_ = std::move(states);
  return s;
}

System System::marked_saturated() const {
  System s = *this;
  s.saturated_ = true;
  return s;
}

bool System::in_language(const Atom& atom) const {
  if (!states_.contains(atom.state)) return false;
  return std::all_of(atom.prefix.begin(), atom.prefix.end(), [&](StackSym g) { return stack_.contains(g); });
}

void System::require_in_language(const Atom& atom) const {
  if (!states_.contains(atom.state)) {
    throw ContractError("undeclared state '" + std::string(atom.state.name()) + "' in " + format_atom(atom));
  }
  for (StackSym g : atom.prefix) {
    if (!stack_.contains(g)) {
      throw ContractError("undeclared stack symbol '" + std::string(g.name()) + "' in " + format_atom(atom));
    }
  }
}

namespace {

struct PendingRule {
  Rule rule;
  std::size_t line;
};

}  // namespace

System parse_system(std::string_view text, WellFormedness mode) {
  std::optional<std::string> name;
  std::set<StateSym> states;
  std::set<StackSym> stack;
  std::vector<PendingRule> pending;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    detail::Cursor cur(line, line_no);
    if (cur.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    std::string keyword = cur.token("keyword");
    if (keyword == "system") {
      if (name) cur.fail("duplicate 'system' line");
      name = cur.token("system name");
    } else if (keyword == "states" || keyword == "stack") {
      while (!cur.at_end()) {
        std::string sym = cur.token("symbol");
        if (keyword == "states") {
          states.insert(StateSym::intern(sym));
        } else {
          if (sym == "x" || sym == "eps") cur.fail("'" + sym + "' is reserved and cannot be a stack symbol");
          stack.insert(StackSym::intern(sym));
        }
      }
    } else if (keyword == "rule") {
      if (!name) cur.fail("'system <name>' must come first");
      std::string id = cur.rule_id();
      std::vector<Atom> premises;
      if (!cur.accept("=>")) {
        premises.push_back(cur.atom());
        while (cur.accept(',')) premises.push_back(cur.atom());
        if (!cur.accept("=>")) cur.fail("expected '=>'");
      }
      Atom conclusion = cur.atom();
      if (!cur.at_end()) cur.fail("trailing characters after rule");
      try {
        pending.push_back({Rule(id, std::move(premises), std::move(conclusion)), line_no});
      } catch (const ContractError& e) {
        throw ParseError(e.what(), line_no, 1);
      }
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", line_no, 1);
    }
    if (end == text.size()) break;
  }
  if (!name) throw ParseError("missing 'system <name>' line", line_no ? line_no : 1, 1);

  // Report rule-level violations against the line that introduced the rule.
  std::vector<Rule> rules;
  std::set<std::string> ids;
  const System probe(*name, states, stack, {}, mode);
  for (const PendingRule& p : pending) {
    if (!ids.insert(p.rule.id()).second) throw ParseError("duplicate rule id '" + p.rule.id() + "'", p.line, 1);
    try {
      validate_rule(p.rule, mode);
      for (const Atom& a : p.rule.premises()) probe.require_in_language(a);
      probe.require_in_language(p.rule.conclusion());
    } catch (const ContractError& e) {
      throw ParseError(e.what(), p.line, 1);
    }
    rules.push_back(p.rule);
  }
  return System(*name, std::move(states), std::move(stack), std::move(rules), mode);
}

std::string serialize_system(const System& system) {
  std::ostringstream out;
  out << "system " << system.name() << '\n';
  out << "states";
  for (StateSym s : system.states()) out << ' ' << s.name();
  out << "\nstack";
  for (StackSym g : system.stack()) out << ' ' << g.name();
  out << '\n';
  for (const Rule& r : system.rules()) out << "rule " << r.format() << '\n';
  return out.str();
}

}  // namespace apds
