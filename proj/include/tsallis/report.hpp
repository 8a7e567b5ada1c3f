#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace tsallis::experiments {

// Bumped whenever the CSV columns change.
inline constexpr int kReportSchemaVersion = 1;

// Failure fraction above which a cell is flagged.
inline constexpr double kFlagFailureRate = 0.001;

struct Cell {
  std::string estimator;  // estimator or test statistic id
  std::string model;      // data-generating model (label)
  std::string scheme;     // censoring scheme, empty for complete samples
  std::size_t n = 0;
  int m = 0;
  std::optional<double> alpha;

  std::size_t reps = 0;      // replications attempted
  std::size_t failures = 0;  // excluded replications (ties, degenerate increments)
  bool flagged = false;
  std::uint64_t substream = 0;

  std::optional<double> true_value;
  std::optional<double> bias;
  std::optional<double> mse;
  std::optional<double> mean;
  std::optional<double> variance;
  std::optional<double> power;
  std::optional<double> critical_value;
  std::string note;
};

struct MCReport {
  std::string experiment;
  std::uint64_t seed = 0;
  std::size_t reps = 0;
  unsigned workers = 1;
  double wall_time_s = 0.0;
  std::vector<Cell> cells;
};

// Summary of a vector of replicate values; NaN entries count as failures.
struct Summary {
  std::size_t valid = 0;
  std::size_t failures = 0;
  double mean = 0.0;
  double variance = 0.0;  // (N - 1) divisor
  double bias = 0.0;      // mean - truth
  double mse = 0.0;       // mean of (x - truth)^2
};
Summary summarize(const std::vector<double>& values, double truth);

// Fills reps/failures/flag/mean/variance (and bias/mse when `truth` is set).
void apply_summary(Cell& cell, const std::vector<double>& values, std::optional<double> truth);

// First line "# tsallis-report v<version>,experiment=...,seed=...,reps=...",
// then a fixed header and one row per cell. Wall time is not written, so
// the CSV is a pure function of the inputs.
void write_csv(std::ostream& out, const MCReport& report);
nlohmann::json to_json(const MCReport& report);

}  // namespace tsallis::experiments
