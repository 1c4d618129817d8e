#include <benchmark/benchmark.h>

#include <random>

#include "skewclifford/fixtures.hpp"
#include "skewclifford/graded.hpp"
#include "skewclifford/matrix.hpp"
#include "skewclifford/rewrite.hpp"
#include "skewclifford/structure.hpp"

using namespace skcl;

namespace {

Presentation random_presentation(std::mt19937& rng, int n) {
    static const Rat mus[] = {Rat(1), Rat(-1), Rat(2), Rat(1, 2)};
    std::uniform_int_distribution<int> mu_pick(0, 3), b_pick(-2, 2);
    Mat mu(n, n), b(n, n);
    for (int i = 0; i < n; ++i) {
        mu.at(i, i) = Rat(1);
        for (int j = i + 1; j < n; ++j) {
            mu.at(i, j) = mus[mu_pick(rng)];
            mu.at(j, i) = mu.at(i, j).inv();
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            b.at(i, j) = Rat(b_pick(rng));
            b.at(j, i) = mu.at(j, i) * b.at(i, j);
        }
    }
    return validate(mu, b);
}

void BM_Completion(benchmark::State& state) {
    std::mt19937 rng(42);
    const int n = static_cast<int>(state.range(0));
    Presentation p = random_presentation(rng, n);
    for (auto _ : state) {
        RewriteSystem sys = complete(initial_system(p));
        benchmark::DoNotOptimize(sys.status());
    }
}
BENCHMARK(BM_Completion)->Arg(3)->Arg(5)->Arg(8);

void BM_NormalFormLongWord(benchmark::State& state) {
    Presentation p = make_fixture("fdex1");
    RewriteSystem sys = complete(initial_system(p));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 2);
    Word w;
    for (int k = 0; k < static_cast<int>(state.range(0)); ++k) w.letters.push_back(pick(rng));
    Element e = Element::from_word(w);
    for (auto _ : state) {
        Element nf = sys.normal_form(e);
        benchmark::DoNotOptimize(nf.term_count());
    }
}
BENCHMARK(BM_NormalFormLongWord)->Arg(8)->Arg(12)->Arg(16);

void BM_Rref(benchmark::State& state) {
    std::mt19937 rng(3);
    const int n = static_cast<int>(state.range(0));
    std::uniform_int_distribution<int> pick(-9, 9);
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rat(pick(rng), 1 + (i + j) % 5);
    for (auto _ : state) {
        RrefResult r = rref(m);
        benchmark::DoNotOptimize(r.rank);
    }
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_HilbertLambda(benchmark::State& state) {
    Presentation p = make_fixture("fdex2", {{"n", Rat(static_cast<long>(state.range(0)))}});
    GradedPresentation g = lambda_presentation(p.mu());
    for (auto _ : state) {
        HilbertPrefix hp = hilbert_prefix(g, 4, 8);
        benchmark::DoNotOptimize(hp.coefficients.back());
    }
}
BENCHMARK(BM_HilbertLambda)->Arg(3)->Arg(4);

void BM_ReducePresentation(benchmark::State& state) {
    std::mt19937 rng(11);
    const int n = static_cast<int>(state.range(0));
    Presentation p = random_presentation(rng, n);
    for (auto _ : state) {
        ReductionResult rr = reduce_presentation(p);
        benchmark::DoNotOptimize(rr.outcome);
    }
}
BENCHMARK(BM_ReducePresentation)->Arg(3)->Arg(5)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
