#include <doctest.h>

#include "support.hpp"

using namespace apds;
using apds::testing::atom;
using apds::testing::load_proof;
using apds::testing::load_system;

namespace {

struct Fixture {
  System e1 = load_system("e1.apds");
  System e1s = saturate(e1);
  ProofNode proof = load_proof("e1_proof.json");
  ProofNode cut_free = apds::testing::rename_rules(load_proof("e1_cut_free.json"), added(), e1s);

  // Fixture names for the added rules, alongside E1's own rules.
  static System added() {
    System e1 = load_system("e1.apds");
    System extra = load_system("e1s_added.apds");
    std::vector<Rule> rules(e1.rules().begin(), e1.rules().end());
    rules.insert(rules.end(), extra.rules().begin(), extra.rules().end());
    return e1.with_rules(rules, "E1s_named");
  }
};

bool only_intros(const ProofNode& p, const System& s) {
  if (p.is_step() && !s.at(p.rule).is_intro()) return false;
  return std::all_of(p.children.begin(), p.children.end(), [&](const ProofNode& c) { return only_intros(c, s); });
}

}  // namespace

TEST_CASE("check_proof") {
  Fixture f;
  CHECK(proof_checks(f.e1, f.proof));
  CHECK(proof_size(f.proof) == 10);

  ProofNode wrong = f.proof;
  wrong.atom = atom("S(b a)");
  auto issues = check_proof(f.e1, wrong);
  REQUIRE_FALSE(issues.empty());
  CHECK(issues.front().path.empty());

  ProofNode unknown = f.proof;
  unknown.children[0].rule = "nope";
  issues = check_proof(f.e1, unknown);
  REQUIRE(issues.size() == 1);
  CHECK(issues.front().path == ProofPath{0});
  CHECK(issues.front().message.find("nope") != std::string::npos);

  ProofNode with_hyp = ProofNode::step(atom("P(a b)"), "i1", {ProofNode::hypothesis(atom("Q(b)"))});
  CHECK_FALSE(proof_checks(f.e1, with_hyp));
  CHECK(proof_checks(f.e1, with_hyp, {.admit_hypotheses = true}));

  ProofNode missing_child = ProofNode::step(atom("Q(b)"), "n1", {ProofNode::step(atom("R(b)"), "i4")});
  CHECK_FALSE(proof_checks(f.e1, missing_child));
}

TEST_CASE("measure") {
  Fixture f;
  CHECK(measure(f.proof, f.e1) == Measure{1, 4});
  CHECK(measure(f.cut_free, f.e1s) == Measure{0, 0});
  System added = Fixture::added();
  CHECK(measure(expand_saturated_rule(f.e1s.find_shape(RuleShape::of(added.at("i7")))->id(), f.e1s), f.e1) ==
        Measure{0, 1});
}

TEST_CASE("find_cut") {
  Fixture f;
  auto cut = find_cut(f.proof, f.e1s);
  REQUIRE(cut.has_value());
  CHECK(cut->path == ProofPath{0, 0, 0, 0, 0, 0});
  CHECK(cut->shape == CutShape::NeutralAtEmpty);
  CHECK(node_at(f.proof, cut->path).atom == atom("T(eps)"));

  CHECK_FALSE(find_cut(f.cut_free, f.e1s).has_value());
  CHECK_FALSE(find_cut(ProofNode::step(atom("T(eps)"), f.cut_free.children[0].children[0].rule), f.e1s));
}

TEST_CASE("reduce_cut") {
  Fixture f;
  System added = Fixture::added();
  auto id = [&](const char* name) { return f.e1s.find_shape(RuleShape::of(added.at(name)))->id(); };

  SUBCASE("n2 at T(eps) becomes i5") {
    ProofNode r = reduce_cut(f.proof, {0, 0, 0, 0, 0, 0}, f.e1s);
    CHECK(node_at(r, {0, 0, 0, 0, 0, 0}) == ProofNode::step(atom("T(eps)"), id("i5")));
    CHECK(measure(r, f.e1s) < measure(f.proof, f.e1s));
  }
  SUBCASE("e1 over i1 at the root becomes n3") {
    ProofNode r = reduce_cut(f.proof, {}, f.e1s);
    CHECK(r.rule == id("n3"));
    CHECK(r.atom == f.proof.atom);
    REQUIRE(r.children.size() == 1);
    CHECK(r.children[0] == f.proof.children[0].children[0]);
    CHECK(proof_checks(f.e1s, r));
    CHECK(measure(r, f.e1s) == Measure{0, 5});
  }
  SUBCASE("n1 over i2 and i4 at Q(b) becomes i10") {
    ProofNode r = reduce_cut(f.proof, {0, 0, 0, 0}, f.e1s);
    const ProofNode& q = node_at(r, {0, 0, 0, 0});
    CHECK(q.rule == id("i10"));
    CHECK(q.children == std::vector<ProofNode>{ProofNode::step(atom("T(eps)"), "n2")});
    CHECK(proof_checks(f.e1s, r));
  }
  SUBCASE("not a cut") { CHECK_THROWS_AS(reduce_cut(f.proof, {0}, f.e1s), ContractError); }
  SUBCASE("unsaturated system") { CHECK_THROWS_AS(reduce_cut(f.proof, {}, f.e1), ContractError); }
}

TEST_CASE("eliminate_cuts on the E1 proof of S(a b)") {
  Fixture f;
  CutElimination out = eliminate_cuts(f.proof, f.e1s);
  CHECK(out.proof == f.cut_free);
  CHECK(out.trace.size() == 6);
  CHECK(out.trace.front().before == Measure{1, 4});
  for (const ReductionStep& s : out.trace) CHECK(s.after < s.before);
  CHECK(out.trace.back().after == Measure{0, 0});
  CHECK_FALSE(find_cut(out.proof, f.e1s));

  CutElimination again = eliminate_cuts(out.proof, f.e1s);
  CHECK(again.trace.empty());
  CHECK(again.proof == out.proof);
}

TEST_CASE("replay") {
  Fixture f;
  ProofNode back = replay(f.cut_free, f.e1s);
  CHECK(back.atom == atom("S(a b)"));
  CHECK(proof_checks(f.e1, back));
  CHECK(replay(f.proof, f.e1s) == f.proof);

  System added = Fixture::added();
  ProofNode i5 = ProofNode::step(atom("T(eps)"), f.e1s.find_shape(RuleShape::of(added.at("i5")))->id());
  CHECK(replay(i5, f.e1s) == ProofNode::step(atom("T(eps)"), "n2"));
}

TEST_CASE("proof JSON round trip") {
  Fixture f;
  CHECK(read_proof_json(write_proof_json(f.proof)) == f.proof);
  ProofNode mixed = ProofNode::step(atom("!P(a)"), "r", {ProofNode::continuation(atom("!P(a a)")),
                                                          ProofNode::hypothesis(atom("!S(x)"))});
  std::string text = write_proof_json(mixed);
  CHECK(text.find("\"continue\": \"!P(a a)\"") != std::string::npos);
  CHECK(read_proof_json(text) == mixed);
  CHECK_THROWS_AS(read_proof_json("{\"atom\": 3}"), ParseError);
  CHECK_THROWS_AS(read_proof_json("[1,"), ParseError);
}

TEST_CASE("cut elimination on random oracle proofs") {
  apds::testing::SystemGenerator gen(31);
  std::size_t proofs = 0;
  for (int i = 0; i < 80; ++i) {
    System s = gen.next();
    System sat = saturate(s);
    oracle::BoundedProver prover(s, 6, 4);
    for (const Atom& c : apds::testing::configurations(s, 2)) {
      auto p = prover.prove(c);
      if (!p) continue;
      ++proofs;
      CutElimination out = eliminate_cuts(*p, sat);
      CHECK(out.proof.atom == c);
      CHECK(proof_checks(sat, out.proof));
      CHECK_FALSE(find_cut(out.proof, sat));
      CHECK(only_intros(out.proof, sat));
      for (const ReductionStep& st : out.trace) CHECK(st.after < st.before);
      ProofNode back = replay(out.proof, sat);
      CHECK(back.atom == c);
      CHECK(proof_checks(s, back));
    }
  }
  CHECK(proofs > 100);
}
