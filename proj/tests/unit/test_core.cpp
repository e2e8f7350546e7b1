#include <doctest.h>

#include "support.hpp"

using namespace apds;
using apds::testing::atom;
using apds::testing::load_system;

TEST_CASE("parse E1") {
  System e1 = load_system("e1.apds");
  CHECK(e1.name() == "E1");
  CHECK(e1.rules().size() == 7);
  CHECK(e1.states().size() == 5);
  CHECK(e1.stack().size() == 2);
  CHECK(e1.klass() == SystemClass::SmallStep);
}

TEST_CASE("header-only system is valid and empty") {
  System s = parse_system("system empty\nstates P\nstack a\n");
  CHECK(s.rules().empty());
  CHECK(serialize_system(s) == "system empty\nstates P\nstack a\n");
  CHECK(parse_system(serialize_system(s)) == s);
}

TEST_CASE("parse errors") {
  const std::string head = "system s\nstates P Q\nstack a b\n";

  SUBCASE("closed premise") {
    try {
      parse_system(head + "rule bad: Q(a) => P(x)\n");
      FAIL("expected an error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("closed premise") != std::string::npos);
      CHECK(e.line() == 4);
    }
  }
  SUBCASE("undeclared symbol") {
    CHECK_THROWS_AS(parse_system(head + "rule r: Z(x) => P(x)\n"), ParseError);
    CHECK_THROWS_AS(parse_system(head + "rule r: Q(c x) => P(x)\n"), ParseError);
  }
  SUBCASE("mixed polarity") { CHECK_THROWS_AS(parse_system(head + "rule r: !Q(x) => P(x)\n"), ParseError); }
  SUBCASE("duplicate id") {
    CHECK_THROWS_AS(parse_system(head + "rule r: Q(x) => P(x)\nrule r: P(x) => Q(x)\n"), ParseError);
  }
  SUBCASE("syntax") {
    try {
      parse_system(head + "rule r: Q(x => P(x)\n");
      FAIL("expected an error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
      CHECK(e.column() > 0);
    }
  }
  SUBCASE("closed conclusion other than eps") { CHECK_THROWS_AS(parse_system(head + "rule r: => P(a)\n"), ParseError); }
}

TEST_CASE("serialization round trip") {
  System e1 = load_system("e1.apds");
  std::string text = serialize_system(e1);
  CHECK(parse_system(text) == e1);
  CHECK(serialize_system(parse_system(text)) == text);
  // rules sorted by id
  CHECK(text.find("rule e1:") < text.find("rule i1:"));

  System general = parse_system("system g\nstates P Q R\nstack a b\nrule g1: P(a b x), R(x) => Q(b a x)\nrule ax: => Q(eps)\n");
  CHECK(parse_system(serialize_system(general)) == general);
}

TEST_CASE("classify_rule") {
  System e1 = load_system("e1.apds");
  CHECK(classify_rule(e1.at("i1")) == RuleKind::Intro);
  CHECK(classify_rule(e1.at("i4")) == RuleKind::Intro);
  CHECK(classify_rule(e1.at("e1")) == RuleKind::Elim);
  CHECK(classify_rule(e1.at("n1")) == RuleKind::Neutral);
  CHECK(classify_rule(e1.at("n2")) == RuleKind::Neutral);
  CHECK(classify_rule(Rule("g", {atom("P(a b x)")}, atom("Q(x)"))) == RuleKind::General);
  CHECK(classify_rule(Rule("ax", {}, atom("Q(eps)"))) == RuleKind::EpsIntro);
  CHECK(classify_rule(Rule("g", {atom("P(a x)"), atom("R(b x)")}, atom("Q(x)"))) == RuleKind::General);
  CHECK(classify_rule(Rule("g", {atom("P(x)")}, atom("Q(a b x)"))) == RuleKind::General);
  CHECK(classify_rule(Rule("g", {atom("P(a x)")}, atom("Q(a x)"))) == RuleKind::General);
}

TEST_CASE("classify_rule is stable under round trip") {
  apds::testing::SystemGenerator gen(7);
  for (int i = 0; i < 50; ++i) {
    System s = gen.next();
    System back = parse_system(serialize_system(s));
    for (const Rule& r : s.rules()) CHECK(classify_rule(back.at(r.id())) == classify_rule(r));
  }
}

TEST_CASE("instantiate") {
  CHECK(instantiate(atom("P(a x)"), make_word({"b"})) == atom("P(a b)"));
  CHECK(instantiate(atom("T(x)"), {}) == atom("T(eps)"));
  CHECK(instantiate(atom("!T(a x)"), make_word({"a"})) == atom("!T(a a)"));
  CHECK_THROWS_AS(instantiate(atom("S(a b)"), make_word({"a"})), ContractError);
}

TEST_CASE("match") {
  auto s = match(atom("P(a x)"), atom("P(a b)"));
  REQUIRE(s.has_value());
  CHECK(s->word == make_word({"b"}));
  CHECK_FALSE(match(atom("P(a x)"), atom("P(b a)")).has_value());
  CHECK_FALSE(match(atom("P(a x)"), atom("Q(a b)")).has_value());
  CHECK(match(atom("Q(eps)"), atom("Q(eps)")).has_value());
  CHECK_FALSE(match(atom("Q(eps)"), atom("Q(a)")).has_value());
  CHECK_FALSE(match(atom("P(x)"), atom("!P(a)")).has_value());
}

TEST_CASE("atom syntax") {
  for (const char* text : {"P(a b x)", "P(x)", "P(eps)", "!Q(a)", "!S(a x)"}) CHECK(format_atom(atom(text)) == text);
  CHECK_THROWS_AS(atom("P()"), ParseError);
  CHECK_THROWS_AS(atom("P(a"), ParseError);
  CHECK_THROWS_AS(atom("P(x a)"), ParseError);
}

TEST_CASE("rule premises are a canonical set") {
  Rule a("r", {atom("R(x)"), atom("P(x)"), atom("R(x)")}, atom("Q(x)"));
  Rule b("r", {atom("P(x)"), atom("R(x)")}, atom("Q(x)"));
  CHECK(a == b);
  CHECK(a.premises().size() == 2);
  CHECK_THROWS_AS(Rule("r", {atom("!P(x)")}, atom("Q(x)")), ContractError);
}

TEST_CASE("word concatenation") {
  Word a = make_word({"a"}), b = make_word({"b"}), e;
  CHECK(concat(concat(a, b), a) == concat(a, concat(b, a)));
  CHECK(concat(e, a) == a);
  CHECK(concat(a, e) == a);
  CHECK(format_word(e) == "eps");
}

TEST_CASE("interning") {
  CHECK(StateSym::intern("P") == StateSym::intern("P"));
  CHECK(StateSym::intern("P") != StateSym::intern("Q"));
  CHECK(StateSym::intern("P").name() == "P");
}
