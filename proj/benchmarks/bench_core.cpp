#include <benchmark/benchmark.h>

#include "mhc/mhc.hpp"

namespace {

mhc::Automaton n1() {
    const auto a = mhc::Symbol::letter("a"), b = mhc::Symbol::letter("b");
    return mhc::Automaton("N1", {a, b}, {"p0", "p1", "p2", "p3"}, "p0",
                          {{"p0", a, "p0"}, {"p0", b, "p0"}, {"p0", b, "p1"}, {"p1", a, "p2"},
                           {"p1", b, "p2"}, {"p2", a, "p3"}, {"p2", b, "p3"}},
                          {"p3"});
}

mhc::Automaton n2() {
    const auto a = mhc::Symbol::letter("a"), b = mhc::Symbol::letter("b");
    return mhc::Automaton("N2", {a, b}, {"q0", "q1"}, "q0", {{"q0", a, "q0"}, {"q0", a, "q1"}, {"q1", b, "q1"}}, {"q1"});
}

mhc::DeviceEnvironment env() {
    mhc::DeviceEnvironment e;
    e.bind(n1());
    e.bind(n2());
    return e;
}

mhc::Word long_word(std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += (i * 7 % 3 == 0) ? 'b' : 'a';
    return mhc::word(s);
}

void BM_Accepts(benchmark::State& state) {
    const auto c = mhc::elaborate(*mhc::parse_expression("N1 ; N2").value, env());
    const auto w = long_word(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mhc::accepts(c, w));
}
BENCHMARK(BM_Accepts)->Range(8, 1024);

void BM_Witness(benchmark::State& state) {
    const auto c = mhc::elaborate(*mhc::parse_expression("N1 | N2").value, env());
    const auto w = long_word(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mhc::witness(c, w));
}
BENCHMARK(BM_Witness)->Range(8, 256);

void BM_Elaborate(benchmark::State& state) {
    const auto e = env();
    const auto expr = *mhc::parse_expression("(N1 ; N2) | (N2 ; N1) | N1").value;
    for (auto _ : state) benchmark::DoNotOptimize(mhc::elaborate(expr, e));
}
BENCHMARK(BM_Elaborate);

void BM_Determinize(benchmark::State& state) {
    const auto c = mhc::elaborate(*mhc::parse_expression("N1 ; N2 ; N1").value, env());
    for (auto _ : state) benchmark::DoNotOptimize(mhc::determinize(c));
}
BENCHMARK(BM_Determinize);

void BM_Equivalent(benchmark::State& state) {
    const auto e = env();
    const auto x = mhc::elaborate(*mhc::parse_expression("N1 ; N2").value, e);
    const auto y = mhc::elaborate(*mhc::parse_expression("N2 ; N1").value, e);
    for (auto _ : state) benchmark::DoNotOptimize(mhc::equivalent(x, y));
}
BENCHMARK(BM_Equivalent);

void BM_ClosureSuite(benchmark::State& state) {
    mhc::PropsOptions options;
    options.cases = 20;
    for (auto _ : state) benchmark::DoNotOptimize(mhc::run_closure_suite(options));
}
BENCHMARK(BM_ClosureSuite)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
