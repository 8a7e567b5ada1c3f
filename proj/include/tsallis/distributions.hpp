#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tsallis/rng.hpp"
#include "tsallis/sample.hpp"

namespace tsallis::dist {

enum class Family {
  Normal,         // (mu, sigma)
  Exponential,    // (rate)
  Cauchy,         // location 0, scale 1
  Gamma,          // (shape), rate 1
  Weibull,        // (shape), scale 1
  LogNormal,      // (log-sd), log-mean 0
  Uniform01,
  Beta,           // (a, b)
  Govindarajulu,  // (mu, sigma, gamma)
  Chen,           // (eta, lambda)
};

const char* family_name(Family f);

// A fully parametrised distribution. Parameters are validated on
// construction, so evaluation functions never see invalid models.
class DistributionModel {
 public:
  static DistributionModel normal(double mu = 0.0, double sigma = 1.0);
  static DistributionModel exponential(double rate = 1.0);
  static DistributionModel cauchy();
  static DistributionModel gamma(double shape);
  static DistributionModel weibull(double shape);
  static DistributionModel lognormal(double sigma);
  static DistributionModel uniform01();
  static DistributionModel beta(double a, double b);
  static DistributionModel govindarajulu(double mu, double sigma, double gamma);
  static DistributionModel chen(double eta, double lambda);

  // Parses "family:p1,p2,..." such as "exp:1", "normal:0,1", "gamma:0.4",
  // "gov:0,0.75,0.25", "cauchy", "uniform".
  static DistributionModel parse(const std::string& spec);

  Family family() const noexcept { return family_; }
  const std::vector<double>& params() const noexcept { return params_; }

  // Canonical spec string; parse(spec()) reproduces the model.
  std::string spec() const;
  // Short label in the style used by the power tables, e.g. "WE(2)".
  std::string label() const;

  double pdf(double x) const;
  double cdf(double x) const;
  double quantile(double w) const;
  // Q(1 - v), computed without forming 1 - v where the family allows.
  double quantile_complement(double v) const;
  // f(Q(w)) = 1/q(w) and f(Q(1 - v)); both avoid cancellation in the tails.
  double density_at_quantile(double w) const;
  double density_at_upper_quantile(double v) const;

  double support_lower() const;
  double support_upper() const;

  // One draw by inverse transform.
  double draw(Rng& rng) const { return quantile(rng.uniform()); }

 private:
  DistributionModel(Family f, std::vector<double> p);
  double gov_q(double w) const;  // Govindarajulu quantile density
  double gov_cdf(double x) const;

  Family family_;
  std::vector<double> params_;
};

double pdf(const DistributionModel& model, double x);
double cdf(const DistributionModel& model, double x);
double quantile(const DistributionModel& model, double w);

// n i.i.d. draws by inverse transform of consecutive uniforms from rng.
Sample sample(const DistributionModel& model, std::size_t n, Rng& rng);
std::vector<double> draw_values(const DistributionModel& model, std::size_t n,
                                Rng& rng);

enum class Provenance { ClosedForm, Quadrature };

struct TrueEntropyValue {
  double alpha;
  double value;
  Provenance provenance;
};

// True whenever the Tsallis integral of order alpha is finite.
bool tsallis_exists(const DistributionModel& model, double alpha);

// Closed form where one exists (Normal, Exponential, Uniform01), otherwise
// quadrature of the quantile-form integral. Throws NonexistentEntropy when
// the integral diverges.
TrueEntropyValue true_tsallis(const DistributionModel& model, double alpha);

// Always uses quadrature; lets callers cross-check the closed forms.
TrueEntropyValue true_tsallis_quadrature(const DistributionModel& model,
                                         double alpha);

// Integral of f(Q(w))^(alpha-1) over (0, 1), i.e. the integral of f^alpha.
double power_integral(const DistributionModel& model, double alpha);

// Shannon entropy (the alpha -> 1 limit): closed form for Normal,
// Exponential and Uniform01, quadrature of -log f(Q(w)) otherwise.
double true_shannon(const DistributionModel& model);

// Renyi entropy log(1 - (alpha - 1) t) / (1 - alpha); tends to t as
// alpha -> 1.
double renyi_from_tsallis(double t, double alpha);

}  // namespace tsallis::dist
