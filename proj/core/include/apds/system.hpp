#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <map>
#include <vector>

#include "apds/atom.hpp"
#include "apds/rule.hpp"

namespace apds {

enum class SystemClass { General, SmallStep, Saturated, MultiAutomaton, NegationExtended };

std::string_view to_string(SystemClass c);

/// Strict: the input grammar of alternating pushdown systems (open
/// premises; a closed conclusion only as the axiom Q(ε)). Relaxed admits the
/// closed premises that instantiating the tail variable produces.
enum class WellFormedness { Strict, Relaxed };

/// A finite rule set over declared state and stack alphabets. Immutable once
/// built; rules are kept sorted by id.
class System {
 public:
  /// Validates every rule; throws ContractError on undeclared symbols, bad
  /// rule shapes, or duplicate ids.
  System(std::string name, std::set<StateSym> states, std::set<StackSym> stack, std::vector<Rule> rules,
         WellFormedness mode = WellFormedness::Strict);

  const std::string& name() const noexcept { return name_; }
  const std::set<StateSym>& states() const noexcept { return states_; }
  const std::set<StackSym>& stack() const noexcept { return stack_; }
  std::span<const Rule> rules() const noexcept { return rules_; }
  WellFormedness mode() const noexcept { return mode_; }

  const Rule* find(std::string_view id) const;
  const Rule& at(std::string_view id) const;

  /// Computed from the rule kinds, except that Saturated is only reported
  /// for systems produced by (or checked with) the saturation procedure.
  SystemClass klass() const noexcept;
  bool is_small_step() const noexcept;
  bool is_multi_automaton() const noexcept { return klass() == SystemClass::MultiAutomaton; }

  System with_rules(std::vector<Rule> rules, std::string name) const;
  System with_states(std::set<StateSym> states) const;
  System marked_saturated() const;
  bool marked_saturated_flag() const noexcept { return saturated_; }

  /// First rule (in id order) with the given shape.
  const Rule* find_shape(const RuleShape& shape) const;

  /// True when every symbol in the atom is declared.
  bool in_language(const Atom& atom) const;
  /// Throws ContractError naming the first undeclared symbol.
  void require_in_language(const Atom& atom) const;

  friend bool operator==(const System& a, const System& b) {
    return a.name_ == b.name_ && a.states_ == b.states_ && a.stack_ == b.stack_ && a.rules_ == b.rules_;
  }

 private:
  void index();

  std::string name_;
  std::set<StateSym> states_;
  std::set<StackSym> stack_;
  std::vector<Rule> rules_;
  WellFormedness mode_;
  bool saturated_ = false;
  std::map<std::string, std::size_t, std::less<>> by_id_;
  std::map<RuleShape, std::size_t> by_shape_;
};

/// Throws ContractError describing the first violation, if any.
void validate_rule(const Rule& rule, WellFormedness mode);

System parse_system(std::string_view text, WellFormedness mode = WellFormedness::Strict);
std::string serialize_system(const System& system);

}  // namespace apds
