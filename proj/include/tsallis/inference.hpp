#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tsallis/censoring.hpp"
#include "tsallis/distributions.hpp"
#include "tsallis/sample.hpp"

namespace tsallis::inference {

enum class StatisticId {
  NormalityTsallis,        // divergence from the normal MLE fit; alpha = 1 is KL
  NormalityKS,             // Kolmogorov-Smirnov distance to the normal MLE fit
  ExponentialityTsallis,   // divergence from the exponential MLE fit
  KLmn,                    // exp(H_mn - log mean - 1)
  BaratpourRadT,           // cumulative residual entropy statistic
  PC2ExponentialityTsallis // censored divergence from the exponential MLE fit
};

const char* statistic_name(StatisticId id);
StatisticId parse_statistic(const std::string& name);

enum class Tail { Upper, Lower };
const char* tail_name(Tail t);
// Direction in which each statistic rejects.
Tail rejection_tail(StatisticId id);

struct NullConfig {
  StatisticId statistic = StatisticId::NormalityTsallis;
  std::size_t n = 0;                                 // complete-sample statistics
  std::optional<censoring::CensoringScheme> scheme;  // PC-II statistic
  int m = 1;
  double alpha = 2.0;

  // "n=20" or "scheme=10,0*9;n=20" -- the size part of the cache key.
  std::string size_key() const;
  void validate() const;
};

double evaluate(const NullConfig& cfg, const Sample& s);
double evaluate(const NullConfig& cfg, const censoring::PC2Sample& s);

// The model the null is simulated from: N(0, 1) for normality statistics,
// Exp(1) for the exponentiality ones.
dist::DistributionModel unit_null_model(StatisticId id);

struct NullDistribution {
  NullConfig config;
  std::size_t reps = 0;    // requested replications
  std::uint64_t seed = 0;
  std::size_t failures = 0;  // replications whose statistic was undefined
  std::vector<double> values;  // ascending

  bool operator==(const NullDistribution& o) const;
};

// Replication k draws its data from Rng::substream(seed, {key, k}) with key
// a hash of the configuration, so the result does not depend on `workers`.
// `model` overrides the data-generating null (any member of the family is
// valid because the statistics re-fit the parameters).
NullDistribution simulate_null(const NullConfig& cfg, std::size_t reps, std::uint64_t seed,
                               unsigned workers = 1,
                               const std::optional<dist::DistributionModel>& model = {});

// Linear interpolation between order statistics at 1-based position
// (N - 1) p + 1.
double empirical_quantile(const std::vector<double>& sorted, double p);

// Upper: (1 - level)-quantile; Lower: level-quantile.
double critical_value(const NullDistribution& nd, double level, Tail tail);

// Upper: (1 + #{null >= stat}) / (N + 1); Lower uses <=.
double p_value(const NullDistribution& nd, double statistic, Tail tail);

struct TestResult {
  double statistic = 0.0;
  double p_value = 1.0;
  double critical_value = 0.0;
  double level = 0.05;
  bool reject = false;
  Tail tail = Tail::Upper;
  std::size_t reps = 0;
  double estimate = 0.0;  // fitted parameter (rate for the exponential tests, mean for normal)
};

TestResult decide(const NullDistribution& nd, double statistic, double level);

// Persisted null distributions, one text file per key. Values are written
// in shortest round-trip form, so a cache hit is bit-identical to a fresh
// simulation.
class NullCache {
 public:
  explicit NullCache(std::filesystem::path dir);

  std::filesystem::path path_for(const NullConfig& cfg, std::size_t reps, std::uint64_t seed) const;
  std::optional<NullDistribution> load(const NullConfig& cfg, std::size_t reps,
                                       std::uint64_t seed) const;
  void store(const NullDistribution& nd) const;
  NullDistribution get_or_simulate(const NullConfig& cfg, std::size_t reps, std::uint64_t seed,
                                   unsigned workers = 1) const;

 private:
  std::filesystem::path dir_;
};

void write_null(std::ostream& out, const NullDistribution& nd);
NullDistribution read_null(std::istream& in);

struct TestOptions {
  unsigned workers = 1;
  std::optional<std::filesystem::path> cache_dir;
};

inline constexpr std::size_t kDefaultReps = 10000;
inline constexpr std::size_t kDefaultRepsPC2 = 5000;

TestResult normality_test(const Sample& s, double alpha, int m, std::size_t reps,
                          std::uint64_t seed, double level, const TestOptions& opt = {});
TestResult exponentiality_test(const Sample& s, double alpha, int m, std::size_t reps,
                               std::uint64_t seed, double level, const TestOptions& opt = {});
TestResult pc2_exponentiality_test(const censoring::PC2Sample& s, double alpha, int m,
                                   std::size_t reps, std::uint64_t seed, double level,
                                   const TestOptions& opt = {});

// Generic form used by the competitors (KS, KL_mn, T).
TestResult run_test(const NullConfig& cfg, const Sample& s, std::size_t reps, std::uint64_t seed,
                    double level, const TestOptions& opt = {});

}  // namespace tsallis::inference
