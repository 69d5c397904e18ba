#include <benchmark/benchmark.h>

#include <random>

#include "peterson/matrix.hpp"
#include "peterson/report.hpp"

namespace {

using namespace peterson;

void BM_BuchbergerEquivariant(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    PresentationRing pres = build_presentation(n, PresentationVariant::equivariant);
    for (auto _ : state) {
        GroebnerBasis g = buchberger(pres.ideal);
        benchmark::DoNotOptimize(g.elements().size());
    }
}
BENCHMARK(BM_BuchbergerEquivariant)->DenseRange(3, 7);

void BM_NormalForm(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    GroebnerBasis g = buchberger(build_presentation(n, PresentationVariant::equivariant).ideal);
    // a dense-ish class of cohomological degree 8
    Polynomial p = Polynomial::constant(g.variables(), g.order(), Rational(1));
    for (std::size_t v = 0; v < g.variables()->size(); ++v)
        p = p * Polynomial::variable(g.variables(), g.order(), v);
    p = p * p;
    for (auto _ : state) {
        Polynomial r = normal_form(p, g);
        benchmark::DoNotOptimize(r.is_zero());
    }
}
BENCHMARK(BM_NormalForm)->DenseRange(3, 6);

void BM_StandardMonomials(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    GroebnerBasis g = buchberger(build_presentation(n, PresentationVariant::equivariant).ideal);
    for (auto _ : state) {
        auto table = standard_monomials(g, 4 * n);
        benchmark::DoNotOptimize(table.size());
    }
}
BENCHMARK(BM_StandardMonomials)->DenseRange(3, 6);

void BM_RationalRank(benchmark::State& state) {
    std::size_t dim = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    RationalMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = Rational(num(rng), den(rng));
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RationalRank)->RangeMultiplier(2)->Range(4, 32);

void BM_BranchSolve(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    QuadraticSystem sys = peterson_system(n);
    for (auto _ : state) {
        BranchResult r = branch_solve(sys, 20);
        benchmark::DoNotOptimize(r.only_origin);
    }
}
BENCHMARK(BM_BranchSolve)->DenseRange(4, 11);

void BM_InjectivityCheck(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        InjectivityReport r = injectivity_check(n, 4 * n);
        benchmark::DoNotOptimize(r.all_pass);
    }
}
BENCHMARK(BM_InjectivityCheck)->DenseRange(2, 5);

void BM_FullVerification(benchmark::State& state) {
    VerificationOptions options;
    options.n = static_cast<int>(state.range(0));
    options.threads = 1;
    for (auto _ : state) {
        VerificationReport r = run_verification(options);
        benchmark::DoNotOptimize(r.all_pass);
    }
}
BENCHMARK(BM_FullVerification)->DenseRange(2, 5);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
}
