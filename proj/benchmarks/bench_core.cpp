#include <benchmark/benchmark.h>

#include "twistpos/doubleflag.hpp"
#include "twistpos/el_labeling.hpp"
#include "twistpos/homology.hpp"
#include "twistpos/random.hpp"

using namespace twistpos;

namespace {

WeylGroupPtr type_A(std::size_t n) { return WeylGroup::create(CartanMatrix::type_A(n)); }

WeylElement w0(const WeylGroupPtr& g) { return longest_element(g, NodeSet::all(g->rank())); }

}  // namespace

static void BM_JLeq(benchmark::State& state) {
  auto g = type_A(static_cast<std::size_t>(state.range(0)));
  const auto elems = enumerate_group(g);
  const ParabolicContext J(g, NodeSet{0});
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& v = elems[k % elems.size()];
    const auto& w = elems[(7 * k + 3) % elems.size()];
    benchmark::DoNotOptimize(j_leq(v, w, J));
    ++k;
  }
}
BENCHMARK(BM_JLeq)->Arg(3)->Arg(4);

static void BM_IntervalEL(benchmark::State& state) {
  auto g = type_A(static_cast<std::size_t>(state.range(0)));
  const ParabolicContext J(g, NodeSet{0});
  const auto top = w0(g);
  const auto order = ReflectionOrder::from_word(g, canonical_reduced_word(top));
  for (auto _ : state) {
    const auto iv = j_interval(g->identity(), top, J);
    benchmark::DoNotOptimize(verify_el(el_label_twisted_interval(iv, order)).ok);
  }
}
BENCHMARK(BM_IntervalEL)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_IntervalHomology(benchmark::State& state) {
  auto g = type_A(static_cast<std::size_t>(state.range(0)));
  const ParabolicContext J(g, NodeSet{});
  const auto iv = j_interval(g->identity(), w0(g), J);
  const auto p = to_finite_poset(iv);
  for (auto _ : state) {
    const auto c = order_complex(p, ComplexMode::OpenInterval).complex;
    benchmark::DoNotOptimize(sphere_dimension(reduced_homology(c)));
  }
}
BENCHMARK(BM_IntervalHomology)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_TwistedCellSample(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  PinnedGroup G(n);
  const auto g = G.weyl();
  const ParabolicContext J(g, NodeSet{0});
  const auto v = g->identity();
  const auto w = w0(g);
  const auto d = static_cast<std::size_t>(j_length(w, J) - j_length(v, J));
  SeededRng rng(7);
  for (auto _ : state) {
    const auto cell = sample_twisted_cell(G, v, w, J, rng.positive_rationals(d));
    benchmark::DoNotOptimize(cell.matrix);
  }
}
BENCHMARK(BM_TwistedCellSample)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

static void BM_ZSample(benchmark::State& state) {
  PinnedGroup G(3);
  const auto g = G.weyl();
  const auto top = w0(g);
  const TripleIndex t{top, g->identity(), top};
  const auto d = static_cast<std::size_t>(q_rank(t) - 1);
  SeededRng rng(11);
  for (auto _ : state) {
    const auto z = z_sample(G, t, rng.positive_rationals(d));
    benchmark::DoNotOptimize(z.g1);
  }
}
BENCHMARK(BM_ZSample)->Unit(benchmark::kMicrosecond);

static void BM_TnnTest(benchmark::State& state) {
  PinnedGroup G(4);
  const auto g = G.weyl();
  const auto w = w0(g);
  SeededRng rng(13);
  const auto m = sample_mr(G, MrKind::Positive, g->identity(), canonical_reduced_word(w),
                           rng.positive_rationals(w.length()))
                     .matrix;
  for (auto _ : state) benchmark::DoNotOptimize(tnn_test(m));
}
BENCHMARK(BM_TnnTest)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
