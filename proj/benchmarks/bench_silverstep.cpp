// Microbenchmarks for the hot paths: pattern construction, certificate
// assembly, the symmetric eigensolver on W2, and one feasibility probe of the
// shifted membership system.

#include <benchmark/benchmark.h>

#include "silverstep/certificate.hpp"
#include "silverstep/dense.hpp"
#include "silverstep/pep.hpp"
#include "silverstep/real.hpp"
#include "silverstep/sequence.hpp"
#include "silverstep/verify.hpp"

namespace {

using Real = silverstep::Real128;

void BM_PatternBuild(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    silverstep::Sequences<Real> seq;
    benchmark::DoNotOptimize(seq.building_block(k));
  }
}
BENCHMARK(BM_PatternBuild)->Arg(4)->Arg(8)->Arg(10);

void BM_LambdaCert(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  silverstep::Sequences<Real> seq;
  seq.building_block(k);  // warm the memo tables
  for (auto _ : state) {
    benchmark::DoNotOptimize(silverstep::lambda_cert(seq, k));
  }
}
BENCHMARK(BM_LambdaCert)->Arg(2)->Arg(4)->Arg(6);

void BM_W2Eigenvalues(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  silverstep::Sequences<Real> seq;
  const auto cert = silverstep::lambda_cert(seq, k);
  const auto w2 = silverstep::assemble_W2(cert);
  for (auto _ : state) {
    benchmark::DoNotOptimize(silverstep::symmetric_eigen(w2));
  }
}
BENCHMARK(BM_W2Eigenvalues)->Arg(2)->Arg(4)->Arg(6);

void BM_MembershipProbe(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  silverstep::Sequences<Real> seq;
  const auto cert = silverstep::lambda_cert(seq, k);
  const auto pattern = seq.building_block(k);
  const auto half = silverstep::scale_pattern(pattern, Real(1) / 2);
  const auto gamma =
      silverstep::gamma_from_phi(pattern.sum, silverstep::phi(seq, k)).scaled(Real(1) / 2);
  const Real delta = seq.delta_conservative(k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(silverstep::membership_S(half, delta, cert, gamma));
  }
}
BENCHMARK(BM_MembershipProbe)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
