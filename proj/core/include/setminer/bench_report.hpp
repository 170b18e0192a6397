#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace setminer {

// Patterns mined per second of kernel time.
inline double throughput(std::uint64_t patterns, double kernel_seconds) {
  if (!(kernel_seconds > 0.0))
    throw std::invalid_argument("kernel time must be positive");
  return static_cast<double>(patterns) / kernel_seconds;
}

// One benchmark execution: configuration echo, per-stage wall times, raw
// kernel times per repetition, the pattern count and memory figure.
// Aggregates (mean/min/stddev, confidence interval, throughput) are derived
// from the stored fields on demand.
//
// Serialization: to_json/from_json round-trip every stored field exactly.
// The CSV form is the flat per-repetition view with the fixed header
// `csv_header()`; fields outside those columns (seed, extras, total wall
// time) are not part of the CSV contract.
struct BenchReport {
  std::string input;      // path or generator spec string
  std::string set_impl;   // sorted | hybrid | hash
  std::string ordering;   // none | deg | dgr | adg(<eps>)
  std::string kernel;     // mc | kclique | kcliquestar | triangles | kcore | linkpred | jp
  std::uint32_t k = 0;    // kernel's k where applicable, else 0
  std::uint32_t threads = 1;
  std::uint32_t repetitions = 1;
  std::uint64_t seed = 0;

  double load_s = 0.0;
  double build_s = 0.0;
  double preprocess_s = 0.0;
  std::vector<double> kernel_raw_s;  // one entry per repetition, in order
  bool warmup_discarded = false;     // first repetition excluded from aggregates

  std::uint64_t pattern_count = 0;
  std::uint64_t adjacency_bytes = 0;
  double total_wall_s = 0.0;

  // Kernel-specific scalars (e.g. linkpred eff/precision, kcore degeneracy).
  std::map<std::string, double> extras;

  // Repetitions that count toward aggregates (warm-up removed).
  std::vector<double> kept_kernel_s() const;
  double kernel_mean_s() const;
  double kernel_min_s() const;
  double kernel_stddev_s() const;
  // Nonparametric 95% interval over kept repetitions; only emitted for
  // repetitions >= 10.
  std::optional<std::pair<double, double>> kernel_ci95() const;

  double mean_throughput() const { return throughput(pattern_count, kernel_mean_s()); }
  double rep_throughput(std::size_t rep) const {
    return throughput(pattern_count, kernel_raw_s.at(rep));
  }

  friend bool operator==(const BenchReport&, const BenchReport&) = default;

  std::string to_json() const;
  static BenchReport from_json(const std::string& text);

  static std::string csv_header();
  std::string to_csv_rows() const;  // one line per repetition, no header
  static BenchReport from_csv_rows(const std::string& rows);

  // Human-readable block for terminal output.
  std::string to_table() const;
};

}  // namespace setminer
