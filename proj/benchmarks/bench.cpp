// Timings for the kernel, unification, cut elimination and the bridge.
// Inputs come from the corpus and the test generators, with fixed seeds.
#include <benchmark/benchmark.h>

#include "kit.hpp"
#include "lg/serialize.hpp"

using namespace lgt;

namespace {

const Module& unify_module() {
  static const Module m = load_module_text(R"(nominal type nm.
type i.
const a, b, e : nm.
const k : i.
const g : nm -> i -> i.
)");
  return m;
}

// \x. \y. g x (g y (... X x y)) against the same spine ending in g y k.
std::pair<Term, Term> unify_pair(int n) {
  const Module& m = unify_module();
  Ty nm = m.types.at("nm"), i = m.types.at("i");
  Signature sig({{intern("X"), arrows({nm, nm}, i)}});
  std::string open, close;
  for (int j = 0; j < n; ++j) {
    open += j % 2 ? "g y (" : "g x (";
    close += ")";
  }
  const std::string pre = "\\x:nm. \\y:nm. ";
  return {parse_term(m, sig, pre + open + "X x y" + close), parse_term(m, sig, pre + open + "g y k" + close)};
}

std::vector<Deriv> random_derivations(std::size_t n, int depth) {
  Rng rng(11);
  std::vector<Deriv> v;
  DerivGenOptions o;
  o.depth = depth;
  for (std::size_t j = 0; j < n; ++j) v.push_back(random_derivation(rng, o));
  return v;
}

void BM_UnifySpine(benchmark::State& state) {
  auto [s, t] = unify_pair(static_cast<int>(state.range(0)));
  if (unify(s, t).status != UnifyStatus::Unifier) state.SkipWithError("spine pair does not unify");
  for (auto _ : state) {
    UnifyResult r = unify(s, t);
    benchmark::DoNotOptimize(r.status);
  }
}
BENCHMARK(BM_UnifySpine)->RangeMultiplier(4)->Range(1, 256);

void BM_CheckCorpus(benchmark::State& state) {
  const auto& ps = corpus_proofs();
  for (auto _ : state)
    for (const auto& p : ps) benchmark::DoNotOptimize(check(p.m->th, p.d));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * ps.size()));
}
BENCHMARK(BM_CheckCorpus);

void BM_CheckRandom(benchmark::State& state) {
  const auto ds = random_derivations(64, static_cast<int>(state.range(0)));
  const Theory& th = gen_module().th;
  for (auto _ : state)
    for (const auto& d : ds) benchmark::DoNotOptimize(check(th, d));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * ds.size()));
}
BENCHMARK(BM_CheckRandom)->DenseRange(2, 6, 2);

void BM_NormalizeMulticuts(benchmark::State& state) {
  Rng rng(4);
  const auto ds = synthesized_multicuts(rng, 64);
  const Theory& th = gen_module().th;
  for (auto _ : state)
    for (const auto& d : ds) benchmark::DoNotOptimize(normalize(th, d).ok);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * ds.size()));
}
BENCHMARK(BM_NormalizeMulticuts);

void BM_NormalizeCorpus(benchmark::State& state) {
  const auto& ps = corpus_proofs();
  for (auto _ : state)
    for (const auto& p : ps) benchmark::DoNotOptimize(normalize(p.m->th, p.d).ok);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * ps.size()));
}
BENCHMARK(BM_NormalizeCorpus);

void BM_TranslateRoundTrip(benchmark::State& state) {
  const auto ds = random_derivations(64, static_cast<int>(state.range(0)));
  const Theory& th = gen_module().th;
  for (auto _ : state)
    for (const auto& d : ds) benchmark::DoNotOptimize(folnb_to_lg(th, lg_to_folnb(th, d)));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * ds.size()));
}
BENCHMARK(BM_TranslateRoundTrip)->DenseRange(2, 6, 2);

void BM_JsonRoundTrip(benchmark::State& state) {
  const auto ds = random_derivations(64, 5);
  const Module& m = gen_module();
  for (auto _ : state)
    for (const auto& d : ds) benchmark::DoNotOptimize(deriv_from_json(m, deriv_to_json(d)));
}
BENCHMARK(BM_JsonRoundTrip);

}  // namespace

BENCHMARK_MAIN();
