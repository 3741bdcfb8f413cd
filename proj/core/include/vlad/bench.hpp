#pragma once

// Benchmark generator and sweep runner: an outer loop of n iterations whose
// inner loop runs a data-dependent number of Newton steps for sqrt(x) --
// short on most iterations, long on a few -- plus the CSV-producing sweep
// over gradient modes.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vlad/metrics.hpp"

namespace vlad {
namespace bench {

enum class Mode { Reverse, Binomial, Forward };
const char* mode_name(Mode m);
bool parse_mode(const std::string& s, Mode& out);

// Inner-loop bound l(x, i) = 2^(floor(lg n) - floor(lg(1 + 1007*floor(3^x)*i mod n))).
// n must be a power of two; the arithmetic after floor(3^x) is exact integers.
long long loop_bound(double x, long long i, long long n);

// Source text of the generated program: a unary function of x that threads
// y through n outer iterations, each running loop_bound(x, i, n) Newton
// steps y <- (y + x/y)/2, and returns y.
std::string gen_benchmark(long long n);

struct SweepParams {
  long long n_min = 1024;
  long long n_max = 16384;
  std::vector<Mode> modes;
  long long tau = 64;
  double x0 = 3.0;
  double seed = 1.0;
};

struct SweepRow {
  long long n = 0;
  Mode mode = Mode::Reverse;
  long long tau = 0;
  MetricsReport metrics;
  double y = 0.0;
  double grad = 0.0;
  std::string error;  // empty on success; sweep continues past failures
};

// One gradient run of the generated program under a fresh metrics collector.
SweepRow run_case(long long n, Mode mode, long long tau, double x0, double seed);

// One row per (n, mode), n doubling from n_min to n_max.
std::vector<SweepRow> run_sweep(const SweepParams& params);

extern const char* const kCsvHeader;
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const SweepRow& row);

}  // namespace bench
}  // namespace vlad
