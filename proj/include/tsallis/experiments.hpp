#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tsallis/censoring.hpp"
#include "tsallis/distributions.hpp"
#include "tsallis/inference.hpp"
#include "tsallis/report.hpp"
#include "tsallis/sample.hpp"
#include "tsallis/spacings.hpp"

namespace tsallis::experiments {

// ---- bias / MSE of the spacings estimators -------------------------------

struct GridPoint {
  std::size_t n;
  int m;
  double alpha;  // 1 selects the Shannon limit (true value: Shannon entropy)
};

// n in {20, 50, 100}, m from both window rules, alpha in {0.5, 1, ..., 3}.
std::vector<GridPoint> bias_mse_default_grid();

// All estimators and grid points sharing a sample size are evaluated on the
// same replicate samples; replicate k of (model, n) comes from
// Rng::substream(cell.substream, {k}).
MCReport run_bias_mse(const std::vector<spacings::Estimator>& estimators,
                      const std::vector<dist::DistributionModel>& models,
                      const std::vector<GridPoint>& grid, std::size_t reps, std::uint64_t seed,
                      unsigned workers = 1);

// ---- censored estimator: average estimate and variance -------------------

// The n = 20 schemes with r = 10 and r = 15.
std::vector<censoring::CensoringScheme> pc2_default_schemes();

// m = floor(sqrt(r) + 0.5) per scheme; cells carry mean (AE) and variance.
MCReport run_pc2_table(const std::vector<censoring::CensoringScheme>& schemes,
                       const std::vector<dist::DistributionModel>& models,
                       const std::vector<double>& alphas, std::size_t reps, std::uint64_t seed,
                       unsigned workers = 1);

// ---- power ----------------------------------------------------------------

enum class TestFamily { Normality, Exponentiality, PC2Exponentiality };
const char* test_family_name(TestFamily t);
TestFamily parse_test_family(const std::string& name);

struct PowerGridPoint {
  std::size_t n = 0;
  int m = 0;
  double alpha = 2.0;
  std::optional<censoring::CensoringScheme> scheme;  // PC-II tests only
};

// Alternatives and grids used for the published power comparisons.
std::vector<dist::DistributionModel> default_alternatives(TestFamily t);
std::vector<PowerGridPoint> default_power_grid(TestFamily t);

// Competing statistics evaluated alongside the proposed one: the KL limit
// and KS for normality, KL_mn and T for exponentiality. Critical values are
// simulated once per statistic configuration with `null_reps` replications
// and reused for every alternative.
MCReport run_power_table(TestFamily test, const std::vector<dist::DistributionModel>& alternatives,
                         const std::vector<PowerGridPoint>& grid, std::size_t reps,
                         std::uint64_t seed, double level, unsigned workers = 1,
                         std::size_t null_reps = 0);

// ---- empirical influence function ----------------------------------------

struct EIFCurve {
  std::string estimator;
  int m = 0;
  double alpha = 0.0;
  std::vector<double> r;
  std::vector<double> eif;
};

using EstimatorFn = std::function<double(const Sample&)>;

// X_i = mu + sigma * Phi^{-1}(i / (n + 1)), i = 1..n.
Sample normal_scores_sample(double mu, double sigma, std::size_t n);

// `points` evenly spaced values from mu - 4 sigma to mu + 4 sigma.
std::vector<double> eif_grid(double mu, double sigma, std::size_t points);

// (n + 1) (est(X u {r}) - est(X)) at every r; NaN where the estimator is
// undefined (an added point tying with the base sample at alpha >= 1).
std::vector<double> empirical_influence(const EstimatorFn& est, const Sample& base,
                                        const std::vector<double>& grid);

std::vector<EIFCurve> run_eif(spacings::Estimator estimator, double mu, double sigma,
                              std::size_t n, const std::vector<int>& m_list, double alpha,
                              const std::vector<double>& grid);
MCReport eif_report(const std::vector<EIFCurve>& curves);

// ---- quantile-based estimator ---------------------------------------------

struct QuantileGridPoint {
  std::size_t n;
  double alpha;
};

std::vector<dist::DistributionModel> quantile_default_models();
std::vector<QuantileGridPoint> quantile_default_grid(const dist::DistributionModel& model);

// Bias and MSE of tsallis_quantile (Gaussian kernel, reference-rule
// bandwidth). Cells whose entropy does not exist are reported with a note
// and no values.
MCReport run_quantile_table(const std::vector<dist::DistributionModel>& models,
                            const std::vector<QuantileGridPoint>& grid, std::size_t reps,
                            std::uint64_t seed, unsigned workers = 1);

// Per-model grids (used by the default table, where the Govindarajulu
// models use a different alpha/n grid).
MCReport run_quantile_table(
    const std::vector<std::pair<dist::DistributionModel, std::vector<QuantileGridPoint>>>& plan,
    std::size_t reps, std::uint64_t seed, unsigned workers = 1);

}  // namespace tsallis::experiments
