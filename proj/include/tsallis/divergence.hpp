#pragma once

#include <vector>

#include "tsallis/sample.hpp"

namespace tsallis::divergence {

enum class FamilyKind { Normal, Exponential };

// A normal or exponential cdf, usually with maximum-likelihood parameters.
class FittedFamily {
 public:
  // mu = mean, sigma^2 = (1/n) sum (x - mean)^2.
  static FittedFamily normal_mle(const Sample& s);
  // rate = 1 / mean; the mean must be positive.
  static FittedFamily exponential_mle(const Sample& s);

  static FittedFamily normal(double mu, double sigma);
  static FittedFamily exponential(double rate);

  FamilyKind kind() const noexcept { return kind_; }
  const std::vector<double>& theta() const noexcept { return theta_; }

  double cdf(double x) const;
  // F(b) - F(a) for a <= b, evaluated through the survival function in the
  // upper tail so small increments keep their relative precision.
  double increment(double a, double b) const;

 private:
  FittedFamily(FamilyKind k, std::vector<double> theta) : kind_(k), theta_(std::move(theta)) {}
  FamilyKind kind_;
  std::vector<double> theta_;
};

// Plug-in Tsallis divergence between the sample and the fitted cdf:
//   (1/(alpha-1)) ((1/n) sum (2m / (n dF_i))^(alpha-1) - 1),
// dF_i = F(X_(i+m)) - F(X_(i-m)) with clamped indices. alpha == 1 gives
// the Kullback-Leibler limit (1/n) sum log(2m / (n dF_i)). Large values
// indicate misfit.
double tsallis_divergence(const Sample& s, const FittedFamily& fit, int m, double alpha);

// exp(H_mn - log(mean) - 1) with H_mn the Vasicek estimate; small values
// reject exponentiality.
double kl_mn_statistic(const Sample& s, int m);

// Cumulative-residual-entropy statistic for exponentiality; large values
// reject.
double baratpour_rad_T(const Sample& s);

// sup |F_n - F| for the fitted cdf (Kolmogorov-Smirnov distance).
double ks_statistic(const Sample& s, const FittedFamily& fit);

}  // namespace tsallis::divergence
