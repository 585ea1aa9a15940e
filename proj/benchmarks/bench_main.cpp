#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "gp/certificate.hpp"
#include "gp/isofunctions.hpp"
#include "gp/reduction.hpp"
#include "gp/thue.hpp"
#include "gp_cli.hpp"

namespace {

struct Loaded {
  explicit Loaded(std::string const& name)
      : p(gp::validate_presentation(gp::cli::parse_input(read(name)))), oracles(p) {}

  static std::string read(std::string const& name) {
    std::ifstream is(std::string(GP_BENCH_DATA_DIR) + "/" + name + ".gp");
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
  }

  gp::GraphProductPresentation p;
  gp::OracleSet oracles;
};

Loaded const& f3() {
  static Loaded const f("F3");
  return f;
}

// w followed by its reverse: trivial since every generator is an involution.
gp::LetterWord palindrome(gp::GraphProductPresentation const& p, std::size_t half) {
  std::string text;
  for (std::size_t k = 0; k < half; ++k) {
    text += "abcb"[k % 4];
    text += ' ';
  }
  std::string const forward = text;
  for (auto it = forward.rbegin(); it != forward.rend(); ++it) {
    text += *it;
  }
  return p.parse_letters(text);
}

void BM_Reduce(benchmark::State& state) {
  auto const& f = f3();
  auto const w = gp::alpha(f.p, palindrome(f.p, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gp::reduce(f.oracles, w));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Reduce)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_CertifyAndVerify(benchmark::State& state) {
  auto const& f = f3();
  auto const w = palindrome(f.p, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto const c = gp::certify(f.oracles, w);
    benchmark::DoNotOptimize(gp::verify_certificate(f.p, *c));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CertifyAndVerify)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_HuetCriterion(benchmark::State& state) {
  auto const& f = f3();
  gp::BoundedUniverse const u(f.oracles, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gp::check_huet_criterion(u, 3));
  }
}
BENCHMARK(BM_HuetCriterion)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_GTable(benchmark::State& state) {
  auto const f = gp::FunctionClass::polynomial(3);
  for (auto _ : state) {
    gp::GTable const g(f, static_cast<gp::Count>(state.range(0)));
    benchmark::DoNotOptimize(g(static_cast<gp::Count>(state.range(0))));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GTable)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oNSquared);

}  // namespace

BENCHMARK_MAIN();
