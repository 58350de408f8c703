#include <benchmark/benchmark.h>

#include <random>

#include "qmsa/coaction.hpp"
#include "qmsa/minors.hpp"

using namespace qmsa;

namespace {

const ManinAlgebra& m42() {
  static const ManinAlgebra alg(manin_shape(4, 2));
  return alg;
}

std::vector<Word> random_words(int count, int len) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> idx(1, 6);
  std::vector<Word> out;
  for (int t = 0; t < count; ++t) {
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(gen(idx(rng), idx(rng)));
    out.push_back(std::move(w));
  }
  return out;
}

void normal_form_len(benchmark::State& state) {
  const auto& A = m42();
  const auto words = random_words(64, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(A.normal_form(words[i++ % words.size()]));
  }
}
BENCHMARK(normal_form_len)->Arg(4)->Arg(6)->Arg(8);

void minor_product(benchmark::State& state) {
  const auto& A = m42();
  const Grassmannian gr(A);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        A.multiply(gr.at(1, 3).expansion, gr.at(2, 4).expansion));
  }
}
BENCHMARK(minor_product);

void plucker_suite(benchmark::State& state) {
  const auto& A = m42();
  const Grassmannian gr(A);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_plucker_suite(gr));
  }
}
BENCHMARK(plucker_suite);

void coaction_identity(benchmark::State& state) {
  const auto& A = m42();
  const Grassmannian gr(A);
  const TensorGenMap delta = coproduct_map(A);
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta.apply(gr.at(1, 2).expansion));
  }
}
BENCHMARK(coaction_identity);

}  // namespace

BENCHMARK_MAIN();
