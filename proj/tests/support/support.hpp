#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "apds/apds.hpp"

#ifndef APDS_FIXTURE_DIR
#error "APDS_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace apds::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline std::string fixture_path(const std::string& name) { return std::string(APDS_FIXTURE_DIR) + "/" + name; }

inline System load_system(const std::string& name, WellFormedness mode = WellFormedness::Strict) {
  return parse_system(read_file(fixture_path(name)), mode);
}

inline ProofNode load_proof(const std::string& name) { return read_proof_json(read_file(fixture_path(name))); }

inline Atom atom(std::string_view text) { return parse_atom(text); }

/// Rule shapes as a set, ignoring ids and provenance.
template <class Rules>
std::set<RuleShape> shapes(const Rules& rules) {
  std::set<RuleShape> out;
  for (const auto& r : rules) {
    if constexpr (std::is_pointer_v<std::decay_t<decltype(r)>>) {
      out.insert(RuleShape::of(*r));
    } else {
      out.insert(RuleShape::of(r));
    }
  }
  return out;
}

/// Rewrites rule ids of a proof from `from` to the rule of `to` with the same shape.
inline ProofNode rename_rules(const ProofNode& p, const System& from, const System& to) {
  ProofNode out = p;
  if (p.is_step()) {
    const Rule* r = to.find_shape(RuleShape::of(from.at(p.rule)));
    if (r == nullptr) throw Error("no rule with the shape of " + p.rule);
    out.rule = r->id();
  }
  for (ProofNode& c : out.children) c = rename_rules(c, from, to);
  return out;
}

/// Every configuration over the system's alphabets with word length ≤ max_len.
inline std::vector<Atom> configurations(const System& s, std::size_t max_len) {
  std::vector<Atom> out;
  for (const Word& w : words_up_to(s.stack(), max_len)) {
    for (StateSym q : s.states()) out.push_back(Atom::closed(q, w));
  }
  return out;
}

/// Random small-step systems: at most 4 states, 2 stack symbols and 6 rules,
/// mixing every rule kind.
class SystemGenerator {
 public:
  explicit SystemGenerator(unsigned seed) : rng_(seed) {}

  System next() {
    static const char* state_names[] = {"P", "Q", "R", "S"};
    static const char* stack_names[] = {"a", "b"};
    std::size_t n_states = pick(1, 4);
    std::size_t n_stack = pick(1, 2);
    std::vector<StateSym> states;
    std::vector<StackSym> stack;
    for (std::size_t i = 0; i < n_states; ++i) states.push_back(StateSym::intern(state_names[i]));
    for (std::size_t i = 0; i < n_stack; ++i) stack.push_back(StackSym::intern(stack_names[i]));

    auto state = [&] { return states[pick(0, n_states - 1)]; };
    auto symbol = [&] { return stack[pick(0, n_stack - 1)]; };
    auto plain_premises = [&](std::size_t max) {
      std::vector<Atom> ps;
      for (std::size_t i = pick(0, max); i > 0; --i) ps.push_back(Atom::open(state()));
      return ps;
    };

    std::vector<Rule> rules;
    std::set<RuleShape> seen;
    std::size_t n_rules = pick(1, 6);
    for (std::size_t k = 0; rules.size() < n_rules && k < 50; ++k) {
      std::string id = "r" + std::to_string(rules.size() + 1);
      std::vector<Atom> premises;
      Atom conclusion;
      switch (pick(0, 9)) {
        case 0: case 1: case 2:
          premises = plain_premises(2);
          conclusion = Atom::open(state(), {symbol()});
          break;
        case 3:
          conclusion = Atom::closed(state());
          break;
        case 4: case 5: case 6:
          premises = plain_premises(1);
          premises.push_back(Atom::open(state(), {symbol()}));
          conclusion = Atom::open(state());
          break;
        default:
          premises = plain_premises(2);
          conclusion = Atom::open(state());
          break;
      }
      Rule r(id, premises, conclusion);
      if (seen.insert(RuleShape::of(r)).second) rules.push_back(std::move(r));
    }
    return System("random", {states.begin(), states.end()}, {stack.begin(), stack.end()}, std::move(rules));
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::size_t pick(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }
  std::mt19937 rng_;
};

/// Negative-fragment membership of ¬A in I′¬.
inline bool negative_member(const NegationSystem& automaton_negation, const Atom& config) {
  return member(automaton_negation.system, config.negated());
}

}  // namespace apds::testing
