#include <benchmark/benchmark.h>

#include "wordlogic/equations.hpp"
#include "wordlogic/formula.hpp"
#include "wordlogic/pseudofinite.hpp"
#include "wordlogic/recogniser.hpp"
#include "wordlogic/rewrite.hpp"

using namespace wordlogic;

namespace {

const Alphabet ab("ab");

Word pattern(std::size_t n) {
  Word w(n, 'a');
  for (std::size_t i = 0; i < n; ++i)
    if ((i * 7 + i / 3) % 5 < 2) w[i] = 'b';
  return w;
}

void BM_Profile(benchmark::State& state) {
  Colouring q = Colouring::threshold_residue(3, 5, true);
  Word w = pattern(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(profile(ab, w, q));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Profile)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_CheckAll(benchmark::State& state) {
  Colouring q = Colouring::threshold_residue(1, 3);
  Recogniser1 r = Recogniser1::from_predicate(ab, q, [](const Profile& p) { return p[0].size() != p[2].size(); });
  auto max_len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    MembershipTable table(r.oracle(), ab, max_len + 1);
    benchmark::DoNotOptimize(check_all(table, q, max_len));
  }
}
BENCHMARK(BM_CheckAll)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_WitnessChain(benchmark::State& state) {
  Colouring q = Colouring::threshold_residue(2, 3);
  auto n = static_cast<std::size_t>(state.range(0));
  Word w = pattern(n);
  // Reverse each colour class, then grow by letters already in the class.
  Word w2 = w;
  for (std::size_t c = 0; c < q.size(); ++c) {
    std::vector<std::size_t> at;
    for (std::size_t i = 0; i < n; ++i)
      if (q.colour_of(i) == c) at.push_back(i);
    for (std::size_t k = 0; k < at.size(); ++k) w2[at[k]] = w[at[at.size() - 1 - k]];
  }
  while (w2.size() < n + n / 4) {
    std::size_t c = q.colour_of(w2.size());
    std::size_t j = 0;
    while (q.colour_of(j) != c) ++j;
    w2.push_back(w2[j]);
  }
  for (auto _ : state) benchmark::DoNotOptimize(witness_chain(ab, q, w, w2));
}
BENCHMARK(BM_WitnessChain)->RangeMultiplier(2)->Range(8, 128);

void BM_Compile(benchmark::State& state) {
  Registry reg = parse_registry("pred EV 1 up:/10\npred M3 1 up:/100\npred FIN 1 up:11110/0\n").registry;
  Formula f = parse_sentence("(E x. a(x) & EV(x) & !M3(x)) & !(E y. b(y) & FIN(y)) | (E z. a(z) & M3(z))", reg, ab);
  for (auto _ : state) benchmark::DoNotOptimize(compile(f, ab, reg));
}
BENCHMARK(BM_Compile);

void BM_BoundedPseudofiniteCheck(benchmark::State& state) {
  GeneralizedWord g = GeneralizedWord::parse("a = hat(up:/1)\nb = star(up:/1)\n");
  auto bound = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bounded_pseudofinite_check(g, bound, bound));
}
BENCHMARK(BM_BoundedPseudofiniteCheck)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
