#include <benchmark/benchmark.h>

#include <vector>

#include "padicsl2/cartan.hpp"
#include "padicsl2/generosity.hpp"
#include "padicsl2/quadext.hpp"
#include "padicsl2/sampler.hpp"

using namespace padicsl2;

namespace {

// Fixed decks so the benchmarks measure the library, not the sampler.
std::vector<SL2Mat<Rational>> make_deck(std::uint64_t seed, std::size_t n) {
  SamplerConfig cfg;
  cfg.seed = seed;
  Sl2Sampler sampler(cfg);
  std::vector<SL2Mat<Rational>> deck;
  deck.reserve(n);
  for (std::size_t i = 0; i < n; ++i) deck.push_back(sampler.next());
  return deck;
}

std::vector<SL2Mat<Rational>> make_deck_of_kind(std::uint64_t seed, std::size_t n,
                                                ClassKind kind, const Prime& p) {
  SamplerConfig cfg;
  cfg.seed = seed;
  Sl2Sampler sampler(cfg);
  std::vector<SL2Mat<Rational>> deck;
  deck.reserve(n);
  while (deck.size() < n) {
    auto a = sampler.next();
    if (classify(a, p).kind == kind) deck.push_back(std::move(a));
  }
  return deck;
}

void BM_SamplerNext(benchmark::State& state) {
  SamplerConfig cfg;
  Sl2Sampler sampler(cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler.next());
  }
}
BENCHMARK(BM_SamplerNext);

void BM_SquareClass(benchmark::State& state) {
  const Prime p(state.range(0));
  const auto deck = make_deck(11, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const Rational t = deck[i % deck.size()].trace();
    benchmark::DoNotOptimize(square_class(t * t + 37, p));
    ++i;
  }
}
BENCHMARK(BM_SquareClass)->Arg(2)->Arg(5)->Arg(13);

void BM_HenselSqrt(benchmark::State& state) {
  const PadicCtx ctx(Prime(5), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hensel_sqrt(Rational(6), ctx));
  }
}
BENCHMARK(BM_HenselSqrt)->Arg(16)->Arg(64)->Arg(256);

void BM_Classify(benchmark::State& state) {
  const Prime p(state.range(0));
  const auto deck = make_deck(12, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(deck[i % deck.size()], p));
    ++i;
  }
}
BENCHMARK(BM_Classify)->Arg(2)->Arg(5)->Arg(13);

void BM_CoverWitness(benchmark::State& state) {
  const Prime p(5);
  const auto deck = make_deck(13, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cover_witness(deck[i % deck.size()], p));
    ++i;
  }
}
BENCHMARK(BM_CoverWitness);

void BM_QdeltaForm(benchmark::State& state) {
  const Prime p(5);
  const PadicCtx ctx(p, static_cast<unsigned>(state.range(0)));
  const auto deck = make_deck_of_kind(14, 64, ClassKind::Nonsplit, p);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdelta_form(deck[i % deck.size()], ctx));
    ++i;
  }
}
BENCHMARK(BM_QdeltaForm)->Arg(16)->Arg(64);

void BM_Diagonalize(benchmark::State& state) {
  const Prime p(5);
  const PadicCtx ctx(p, static_cast<unsigned>(state.range(0)));
  const auto deck = make_deck_of_kind(15, 64, ClassKind::Split, p);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(diagonalize(deck[i % deck.size()], ctx));
    ++i;
  }
}
BENCHMARK(BM_Diagonalize)->Arg(16)->Arg(64);

void BM_IsNorm(benchmark::State& state) {
  const Prime p(state.range(0));
  const QuadCtx q(SquareClass::nonidentity(p).front().rep(), PadicCtx(p, 64));
  const auto deck = make_deck(16, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const Rational t = deck[i % deck.size()].trace();
    benchmark::DoNotOptimize(is_norm(t * t + 37, q));
    ++i;
  }
}
BENCHMARK(BM_IsNorm)->Arg(2)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
