#include <benchmark/benchmark.h>

#include <string>

#include "apds/apds.hpp"

namespace {

const char* kE1 = R"(system E1
states P Q R S T
stack a b
rule i1: Q(x) => P(a x)
rule i2: T(x) => P(b x)
rule i3: T(x) => R(a x)
rule i4: => R(b x)
rule n1: P(x), R(x) => Q(x)
rule n2: => T(x)
rule e1: P(a x) => S(x)
)";

// A ring of n states over {a, b} where each state pushes into, pops from and
// joins with its neighbours, so saturation has real work to do.
apds::System ring(int n) {
  std::string text = "system ring\nstates";
  for (int i = 0; i < n; ++i) text += " S" + std::to_string(i);
  text += "\nstack a b\n";
  for (int i = 0; i < n; ++i) {
    std::string s = "S" + std::to_string(i), t = "S" + std::to_string((i + 1) % n), u = "S" + std::to_string((i + 2) % n);
    text += "rule i" + std::to_string(i) + ": " + t + "(x) => " + s + "(a x)\n";
    text += "rule e" + std::to_string(i) + ": " + u + "(b x) => " + s + "(x)\n";
    text += "rule n" + std::to_string(i) + ": " + t + "(x), " + u + "(x) => " + s + "(x)\n";
  }
  text += "rule base: => S0(b x)\nrule eps: => S1(eps)\n";
  return apds::parse_system(text);
}

apds::Word alternating(std::size_t len) {
  apds::Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(apds::StackSym::intern(i % 3 == 2 ? "b" : "a"));
  return w;
}

void BM_SaturateE1(benchmark::State& state) {
  apds::System e1 = apds::parse_system(kE1);
  for (auto _ : state) benchmark::DoNotOptimize(apds::saturate(e1));
}
BENCHMARK(BM_SaturateE1);

void BM_SaturateRing(benchmark::State& state) {
  apds::System s = ring(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apds::saturate(s));
}
BENCHMARK(BM_SaturateRing)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void BM_Member(benchmark::State& state) {
  apds::System m = apds::extract_multi_automaton(apds::saturate(ring(4)));
  apds::Atom config = apds::Atom::closed(apds::StateSym::intern("S0"), alternating(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(apds::member(m, config));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Member)->RangeMultiplier(4)->Range(4, 4096)->Complexity(benchmark::oN);

void BM_DecideWithCertificate(benchmark::State& state) {
  apds::System e1 = apds::parse_system(kE1);
  apds::Decider decider(e1);
  apds::Atom config = apds::parse_atom("S(a b)");
  for (auto _ : state) benchmark::DoNotOptimize(decider.decide(config, true));
}
BENCHMARK(BM_DecideWithCertificate);

void BM_ExpansionMap(benchmark::State& state) {
  apds::System s = ring(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apds::build_expansion_map(s));
}
BENCHMARK(BM_ExpansionMap)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
