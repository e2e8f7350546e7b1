#include <doctest.h>

#include "support.hpp"

using namespace apds;
using apds::testing::atom;
using apds::testing::load_system;

namespace {

System single_general() {
  return parse_system("system g\nstates P Q\nstack a b\nrule g1: P(a b x) => Q(x)\n");
}

}  // namespace

TEST_CASE("small-step input is unchanged") {
  System e1 = load_system("e1.apds");
  Normalized n = to_small_step(e1);
  CHECK(n.system == e1);
  CHECK(n.erasure.empty());
}

TEST_CASE("splitting P(a b x) => Q(x)") {
  Normalized n = to_small_step(single_general());
  const System& s = n.system;
  CHECK(s.is_small_step());
  CHECK(s.states().contains(StateSym::intern("P#a")));
  CHECK(s.states().contains(StateSym::intern("P#a.b")));

  std::set<RuleShape> expected = {
      RuleShape::of(Rule("", {atom("P#a.b(x)")}, atom("P#a(b x)"))),
      RuleShape::of(Rule("", {atom("P#a(x)")}, atom("P(a x)"))),
      RuleShape::of(Rule("", {atom("P(a x)")}, atom("P#a(x)"))),
      RuleShape::of(Rule("", {atom("P#a(b x)")}, atom("P#a.b(x)"))),
      RuleShape::of(Rule("", {atom("P#a.b(x)")}, atom("Q(x)"))),
  };
  CHECK(apds::testing::shapes(s.rules()) == expected);
  CHECK(s.find("n:g1") != nullptr);

  CHECK(n.erasure.erase(atom("P#a.b(a)")) == atom("P(a b a)"));
  CHECK(n.erasure.erase(atom("P#a(b)")) == atom("P(a b)"));
  CHECK(n.erasure.erase(atom("Q(b)")) == atom("Q(b)"));
  CHECK(n.erasure.serialize() == "P#a = P(a)\nP#a.b = P(a b)\n");
}

TEST_CASE("every normalized rule is small-step") {
  System g = parse_system(
      "system g\nstates P Q R\nstack a b\n"
      "rule g1: P(a b x), R(x) => Q(b a x)\n"
      "rule g2: P(a x), R(b x) => Q(x)\n"
      "rule g3: => R(a a x)\n"
      "rule i1: Q(x) => P(a x)\n");
  Normalized n = to_small_step(g);
  for (const Rule& r : n.system.rules()) CHECK(r.kind() != RuleKind::General);
  // P#a is shared by g1 and g2
  std::size_t p_fresh = 0;
  for (StateSym s : n.system.states()) p_fresh += s.name().starts_with("P#a") && s.name().size() == 3;
  CHECK(p_fresh == 1);
  CHECK(to_small_step(n.system).system.rules().size() == n.system.rules().size());
}

TEST_CASE("fresh names avoid declared states") {
  System g = parse_system("system g\nstates P Q P#a\nstack a\nrule g1: P(a a x) => Q(x)\n");
  Normalized n = to_small_step(g);
  CHECK(n.erasure.entries().contains(StateSym::intern("P#a_")));
  CHECK(n.erasure.erase(atom("P#a_(a)")) == atom("P(a a)"));
}

TEST_CASE("erase_proof") {
  SUBCASE("identity map leaves proofs alone") {
    System e1 = load_system("e1.apds");
    ProofNode p = apds::testing::load_proof("e1_proof.json");
    CHECK(erase_proof(p, to_small_step(e1), e1) == p);
  }
  SUBCASE("residue with its elimination chain becomes one general step") {
    System g = parse_system("system g\nstates P Q\nstack a b\nrule g1: P(a b x) => Q(x)\nrule i1: => P(a x)\n");
    Normalized n = to_small_step(g);
    // Q(eps) <= P#a.b(eps) <= P#a(b) <= P(a b)
    ProofNode p = ProofNode::step(
        atom("Q(eps)"), "n:g1",
        {ProofNode::step(atom("P#a.b(eps)"), "pop:P#a.b",
                         {ProofNode::step(atom("P#a(b)"), "pop:P#a", {ProofNode::step(atom("P(a b)"), "i1")})})});
    REQUIRE(proof_checks(n.system, p));
    ProofNode erased = erase_proof(p, n, g);
    CHECK(proof_checks(g, erased));
    CHECK(erased == ProofNode::step(atom("Q(eps)"), "g1", {ProofNode::step(atom("P(a b)"), "i1")}));
  }
  SUBCASE("fresh root is rejected") {
    Normalized n = to_small_step(single_general());
    CHECK_THROWS_AS(erase_proof(ProofNode::hypothesis(atom("P#a(b)")), n, single_general()), ContractError);
  }
}

TEST_CASE("normalization is conservative on small configurations") {
  apds::testing::SystemGenerator gen(11);
  // Lengthen some random systems with general rules.
  for (int round = 0; round < 30; ++round) {
    System base = gen.next();
    std::vector<Rule> rules(base.rules().begin(), base.rules().end());
    StateSym p = *base.states().begin();
    StateSym q = *base.states().rbegin();
    StackSym a = *base.stack().begin();
    StackSym b = *base.stack().rbegin();
    rules.emplace_back("g1", std::vector<Atom>{Atom::open(p, {a, b})}, Atom::open(q));
    rules.emplace_back("g2", std::vector<Atom>{Atom::open(q)}, Atom::open(p, {b, a}));
    System g = base.with_rules(rules, "general");
    Normalized n = to_small_step(g);
    for (const Atom& c : apds::testing::configurations(g, 3)) {
      auto original = oracle::search(g, c, 10, 6);
      // Each general step costs up to three normalized steps.
      auto normalized = oracle::search(n.system, c, 30, 6);
      CHECK(original.has_value() <= normalized.has_value());
      if (normalized) {
        ProofNode back = erase_proof(*normalized, n, g);
        CHECK(back.atom == c);
        CHECK(proof_checks(g, back));
      }
    }
  }
}
