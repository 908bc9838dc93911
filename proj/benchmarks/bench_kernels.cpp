// Times the OpenMP kernels against the serial reference paths and checks
// that both produce identical bytes.

#include <chrono>
#include <iostream>

#include "cforge/csv.hpp"
#include "cforge/experiments.hpp"
#include "cforge/parallel.hpp"

namespace {

using namespace cforge;

template <class Fn>
double time_ms(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
  std::cout << name << ": serial " << fmt9(serial_ms) << " ms, parallel " << fmt9(parallel_ms)
            << " ms, speedup " << fmt9(serial_ms / parallel_ms)
            << (identical ? "" : "  [MISMATCH]") << "\n";
}

}  // namespace

int main() {
  std::cout << "threads: " << max_threads() << "\n";
  constexpr std::uint64_t seed = 99;

  {
    std::string serial_csv, parallel_csv;
    const double s = time_ms(
        [&] { serial_csv = to_csv(fig2_scatter(4000, seed, {48, 16, 30}, ExecMode::serial)); });
    const double p = time_ms(
        [&] { parallel_csv = to_csv(fig2_scatter(4000, seed, {48, 16, 30}, ExecMode::parallel)); });
    report("fig2 scatter (4000 states)", s, p, serial_csv == parallel_csv);
  }
  {
    std::string serial_csv, parallel_csv;
    const double s =
        time_ms([&] { serial_csv = to_csv(fig3_decay(8, 4000, seed, ExecMode::serial)); });
    const double p =
        time_ms([&] { parallel_csv = to_csv(fig3_decay(8, 4000, seed, ExecMode::parallel)); });
    report("fig3 decay (n<=8, 4000/n)", s, p, serial_csv == parallel_csv);
  }
  {
    std::string serial_csv, parallel_csv;
    const double s =
        time_ms([&] { serial_csv = to_csv(fig4_successive(10, 4000, seed, ExecMode::serial)); });
    const double p =
        time_ms([&] { parallel_csv = to_csv(fig4_successive(10, 4000, seed, ExecMode::parallel)); });
    report("fig4 chain (10 x 4000)", s, p, serial_csv == parallel_csv);
  }
  {
    std::string serial_csv, parallel_csv;
    const double s = time_ms(
        [&] { serial_csv = to_csv(tradeoff_experiment(60, 10, seed, ExecMode::serial)); });
    const double p = time_ms(
        [&] { parallel_csv = to_csv(tradeoff_experiment(60, 10, seed, ExecMode::parallel)); });
    report("tradeoff audit (60 x 10)", s, p, serial_csv == parallel_csv);
  }
  return 0;
}
