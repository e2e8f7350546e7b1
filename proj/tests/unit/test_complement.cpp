#include <doctest.h>

#include "support.hpp"

using namespace apds;
using apds::testing::atom;
using apds::testing::load_system;
using apds::testing::shapes;

namespace {

std::set<RuleShape> negative_shapes(const NegationSystem& n) { return shapes(n.negative_rules()); }

std::set<Atom> atoms(std::initializer_list<const char*> texts) {
  std::set<Atom> out;
  for (const char* t : texts) out.insert(atom(t));
  return out;
}

}  // namespace

TEST_CASE("canonical conclusions") {
  System r = load_system("rsys.apds");
  auto c = canonical_conclusions(r);
  CHECK(c.size() == 8);
  for (const Atom& config : apds::testing::configurations(r, 3)) {
    CHECK(std::count_if(c.begin(), c.end(), [&](const Atom& b) { return match(b, config).has_value(); }) == 1);
  }
}

TEST_CASE("tilde") {
  System r = load_system("rsys.apds");
  System t = tilde(r);
  CHECK(shapes(t.rules()) == shapes(load_system("rsys_tilde.apds", WellFormedness::Relaxed).rules()));
  CHECK(parse_system(serialize_system(t), WellFormedness::Relaxed) == t);

  System intro_only = parse_system("system m\nstates P Q\nstack a\nrule i: Q(x) => P(a x)\nrule e: => Q(eps)\n");
  CHECK(shapes(tilde(intro_only).rules()) == shapes(intro_only.rules()));

  System neutral = parse_system("system t\nstates T\nstack a\nrule n: => T(x)\n");
  CHECK(shapes(tilde(neutral).rules()) ==
        std::set<RuleShape>{RuleShape::of(Rule("", {}, atom("T(eps)"))), RuleShape::of(Rule("", {}, atom("T(a x)")))});
}

TEST_CASE("complement_rules") {
  System t = tilde(load_system("rsys.apds"));
  auto bar = complement_rules(t);
  CHECK(bar.size() == 9);
  CHECK(shapes(bar) == shapes(load_system("rsys_complement.apds", WellFormedness::Relaxed).rules()));

  System none = parse_system("system n\nstates P\nstack a\nrule i: => P(a x)\n");
  auto comp = complement_rules(none);
  CHECK(shapes(comp) == std::set<RuleShape>{RuleShape::of(Rule("", {}, atom("!P(eps)")))});

  System outside = parse_system("system o\nstates P Q\nstack a\nrule n: Q(x) => P(x)\n");
  CHECK_THROWS_AS(complement_rules(outside), ContractError);
}

TEST_CASE("complement choices are deduplicated by premise set") {
  System t = parse_system("system d\nstates P Q\nstack a\nrule i1: Q(x) => P(a x)\nrule i2: Q(x) => P(a x)\n");
  auto comp = complement_rules(t);
  std::size_t for_pa = std::count_if(comp.begin(), comp.end(), [](const Rule& r) { return r.conclusion() == atom("!P(a x)"); });
  CHECK(for_pa == 1);
}

TEST_CASE("build_negation_extension") {
  System r = load_system("rsys.apds");
  NegationSystem ext = build_negation_extension(r);
  CHECK(ext.kind == NegationKind::Extension);
  CHECK(negative_shapes(ext) == shapes(load_system("rsys_complement.apds", WellFormedness::Relaxed).rules()));
  for (const Rule& rule : r.rules()) CHECK(ext.system.at(rule.id()) == rule);

  NegationSystem e1 = build_negation_extension(load_system("e1.apds"));
  // The eps-instance of e1 is P(a) => S(eps), so not-S(eps) needs not-P(a).
  auto e1_negs = negative_shapes(e1);
  CHECK(e1_negs.contains(RuleShape::of(Rule("", {atom("!P(a)")}, atom("!S(eps)")))));
  CHECK_FALSE(e1_negs.contains(RuleShape::of(Rule("", {}, atom("!S(eps)")))));

  System m = parse_system("system m\nstates P Q\nstack a\nrule i: Q(x) => P(a x)\n");
  CHECK(negative_shapes(build_negation_extension(m)) == shapes(complement_rules(m)));
}

TEST_CASE("negate_automaton") {
  System r = load_system("rsys.apds");
  NegationSystem neg = negate_automaton(extract_multi_automaton(saturate(r)));
  CHECK(neg.kind == NegationKind::Automaton);
  CHECK(negative_shapes(neg) == shapes(load_system("rsys_automaton_negation.apds", WellFormedness::Relaxed).rules()));
  CHECK(member(neg.system, atom("!P(a)")));
  CHECK_FALSE(member(neg.system, atom("P(a)")));
  CHECK(member(neg.system, atom("R(a a)")));

  System empty = parse_system("system e\nstates P\nstack a\n");
  CHECK(negative_shapes(negate_automaton(empty)) ==
        std::set<RuleShape>{RuleShape::of(Rule("", {}, atom("!P(eps)"))), RuleShape::of(Rule("", {}, atom("!P(a x)")))});

  NegationSystem e1 = negate_automaton(extract_multi_automaton(saturate(load_system("e1.apds"))));
  auto negs = e1.negative_rules();
  CHECK(std::any_of(negs.begin(), negs.end(), [](const Rule* x) { return x->conclusion() == atom("!S(eps)") && x->premises().empty(); }));
  CHECK(std::none_of(negs.begin(), negs.end(), [](const Rule* x) { return x->conclusion() == atom("!T(a x)"); }));
  for (const Rule* x : negs) {
    for (const Atom& p : x->premises()) CHECK(p.prefix.empty());
  }

  CHECK_THROWS_AS(negate_automaton(r), ContractError);
}

TEST_CASE("one_step") {
  System e1 = load_system("e1.apds");
  CHECK(one_step(e1, atoms({"T(eps)"}), 1) == atoms({"P(b)", "R(a)", "R(b)", "T(eps)", "T(a)", "T(b)"}));
  CHECK(one_step(e1, {}, 1) == atoms({"R(b)", "T(eps)", "T(a)", "T(b)"}));
  CHECK(one_step(parse_system("system e\nstates P\nstack a\n"), atoms({"P(a)"}), 3).empty());
}

TEST_CASE("complement is one-step negation on random systems") {
  apds::testing::SystemGenerator gen(53);
  for (int i = 0; i < 60; ++i) {
    System t = tilde(gen.next());
    System bar = t.with_rules(complement_rules(t), "bar");
    auto universe = apds::testing::configurations(t, 3);
    for (int trial = 0; trial < 10; ++trial) {
      std::set<Atom> X;
      for (const Atom& a : universe) {
        if (gen.rng()() % 3 == 0) X.insert(a);
      }
      auto in_x = [&](const Atom& a) { return X.contains(a); };
      auto not_in_x = [&](const Atom& a) { return !X.contains(a.negated()); };
      for (const Atom& b : apds::testing::configurations(t, 1)) {
        CHECK(derivable_in_one_step(bar, b.negated(), not_in_x) == !derivable_in_one_step(t, b, in_x));
      }
    }
  }
}

TEST_CASE("exactly one of A and not-A on random systems") {
  apds::testing::SystemGenerator gen(59);
  for (int i = 0; i < 60; ++i) {
    System m = extract_multi_automaton(saturate(gen.next()));
    NegationSystem neg = negate_automaton(m);
    for (const Atom& c : apds::testing::configurations(m, 4)) CHECK(member(m, c) != member(neg.system, c.negated()));
  }
}

TEST_CASE("tilde preserves provability") {
  apds::testing::SystemGenerator gen(61);
  for (int i = 0; i < 60; ++i) {
    System s = gen.next();
    System t = tilde(s);
    oracle::BoundedProver ps(s, 8, 5), pt(t, 8, 5);
    for (const Atom& c : apds::testing::configurations(s, 3)) CHECK(ps.provable(c) == pt.provable(c));
  }
}
