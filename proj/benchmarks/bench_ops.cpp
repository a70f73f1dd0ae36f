#include "loopalg/divergence.hpp"
#include "loopalg/mu.hpp"
#include "loopalg/randomgen.hpp"

#include <benchmark/benchmark.h>

using namespace loopalg;

namespace {

std::vector<Word> sample_words(const Signature& sig, int count, int len) {
    Sampler rnd(sig, 42);
    std::vector<Word> out;
    out.reserve(std::size_t(count));
    for (int i = 0; i < count; ++i)
        out.push_back(rnd.word(len));
    return out;
}

void BM_alg_mul(benchmark::State& state) {
    Signature sig = make_surface(2, 2);
    auto words = sample_words(sig, 64, int(state.range(0)));
    std::size_t i = 0;
    for (auto _ : state) {
        AlgElem prod = alg_mul(alg_word(words[i % words.size()]),
                               alg_word(words[(i + 1) % words.size()]));
        benchmark::DoNotOptimize(prod);
        ++i;
    }
}
BENCHMARK(BM_alg_mul)->Arg(4)->Arg(8)->Arg(16);

void BM_kappa_eval(benchmark::State& state) {
    Signature sig = make_surface(2, 2);
    DoubleBracket kappa = kappa_bracket(sig);
    auto words = sample_words(sig, 64, int(state.range(0)));
    std::size_t i = 0;
    for (auto _ : state) {
        Tensor2 v = kappa.eval(words[i % words.size()], words[(i + 1) % words.size()]);
        benchmark::DoNotOptimize(v);
        ++i;
    }
}
BENCHMARK(BM_kappa_eval)->Arg(3)->Arg(6);

void BM_mu_eval(benchmark::State& state) {
    Signature sig = make_surface(1, 2);
    MuOperator mu(sig);
    auto words = sample_words(sig, 64, int(state.range(0)));
    std::size_t i = 0;
    for (auto _ : state) {
        TripleTrace v = mu.eval(words[i % words.size()]);
        benchmark::DoNotOptimize(v);
        ++i;
    }
}
BENCHMARK(BM_mu_eval)->Arg(3)->Arg(6);

void BM_phi(benchmark::State& state) {
    Signature sig = make_surface(1, 2);
    DoubleBracket kappa = kappa_bracket(sig);
    Connection conn = nabla_basis(sig);
    auto words = sample_words(sig, 64, int(state.range(0)));
    std::size_t i = 0;
    for (auto _ : state) {
        TripleTrace v = phi_map(sig, kappa, conn, words[i % words.size()]);
        benchmark::DoNotOptimize(v);
        ++i;
    }
}
BENCHMARK(BM_phi)->Arg(3)->Arg(6);

void BM_trace_project(benchmark::State& state) {
    Signature sig = make_surface(2, 2);
    auto words = sample_words(sig, 256, 12);
    std::size_t i = 0;
    for (auto _ : state) {
        TraceElem t = trace_project(words[i % words.size()]);
        benchmark::DoNotOptimize(t);
        ++i;
    }
}
BENCHMARK(BM_trace_project);

} // namespace

BENCHMARK_MAIN();
