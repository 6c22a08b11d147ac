// Wall-time comparison of the three OpenMP kernels against their serial
// reference implementations. Timings only: on a single-core host the
// parallel variants may not win, so nothing here asserts a speedup.
#include "u2/blocks.hpp"
#include "u2/finite_model.hpp"
#include "u2/subgroup.hpp"
#include "u2/unitary_oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

namespace {

double time_ms(const std::function<void()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  body();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s serial %8.1f ms   parallel %8.1f ms   ratio %.2fx\n", name, serial_ms,
              parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

} // namespace

int main() {
  using namespace u2;

  {
    auto K = full(ExtInt::of(5), ExtInt::of(6), FullLambda::Split);
    model::ModelGroup G(model::model_level(K));
    auto H = realize(G, K);
    long long a = 0, b = 0;
    double s = time_ms([&] { a = model::normalizer_order_serial(G, H); });
    double p = time_ms([&] { b = model::normalizer_order_parallel(G, H); });
    row("normalizer scan (level 240)", s, p);
    if (a != b) std::printf("  MISMATCH: serial %lld vs parallel %lld\n", a, b);
  }

  {
    numeric::FusionSampleReport ra, rb;
    double s = time_ms([&] { ra = numeric::sample_fusion(20000, 42, 1e-9, 1e-6, false); });
    double p = time_ms([&] { rb = numeric::sample_fusion(20000, 42, 1e-9, 1e-6, true); });
    row("fusion sampling (20k draws)", s, p);
    if (ra.violations != rb.violations || ra.kept != rb.kept)
      std::printf("  MISMATCH: reports differ between schedules\n");
  }

  {
    PartitionReport ra, rb;
    double s = time_ms([&] { ra = validate_partition_serial(8); });
    double p = time_ms([&] { rb = validate_partition(8); });
    row("partition pair scan (M = 8)", s, p);
    if (ra.to_json() != rb.to_json()) std::printf("  MISMATCH: reports differ\n");
  }

  return 0;
}
