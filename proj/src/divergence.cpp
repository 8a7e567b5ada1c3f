#include "tsallis/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tsallis/errors.hpp"
#include "tsallis/numeric.hpp"
#include "tsallis/spacings.hpp"

namespace tsallis::divergence {

namespace {

inline double phi_lower(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }
inline double phi_upper(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

}  // namespace

FittedFamily FittedFamily::normal_mle(const Sample& s) {
  if (s.size() < 2) throw DomainError("normal fit needs n >= 2");
  const double sd = s.sd(0);
  if (!(sd > 0.0)) throw DomainError("normal fit: sample has zero variance");
  return FittedFamily(FamilyKind::Normal, {s.mean(), sd});
}

FittedFamily FittedFamily::exponential_mle(const Sample& s) {
  if (!(s.mean() > 0.0)) throw DomainError("exponential fit: sample mean must be > 0");
  return FittedFamily(FamilyKind::Exponential, {1.0 / s.mean()});
}

FittedFamily FittedFamily::normal(double mu, double sigma) {
  if (!std::isfinite(mu) || !(sigma > 0.0)) throw DomainError("normal: need sigma > 0");
  return FittedFamily(FamilyKind::Normal, {mu, sigma});
}

FittedFamily FittedFamily::exponential(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) throw DomainError("exponential: need rate > 0");
  return FittedFamily(FamilyKind::Exponential, {rate});
}

double FittedFamily::cdf(double x) const {
  if (kind_ == FamilyKind::Normal) return phi_lower((x - theta_[0]) / theta_[1]);
  return x <= 0.0 ? 0.0 : -std::expm1(-theta_[0] * x);
}

double FittedFamily::increment(double a, double b) const {
  if (kind_ == FamilyKind::Normal) {
    const double za = (a - theta_[0]) / theta_[1];
    const double zb = (b - theta_[0]) / theta_[1];
    return za > 0.0 ? phi_upper(za) - phi_upper(zb) : phi_lower(zb) - phi_lower(za);
  }
  const double rate = theta_[0];
  a = std::max(a, 0.0);
  b = std::max(b, 0.0);
  // S(a) - S(b) = exp(-rate a) (1 - exp(-rate (b - a)))
  return -std::exp(-rate * a) * std::expm1(-rate * (b - a));
}

double tsallis_divergence(const Sample& s, const FittedFamily& fit, int m, double alpha) {
  const long n = static_cast<long>(s.size());
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be > 0");
  if (m < 1 || 2L * m >= n)
    throw DomainError("window m = " + std::to_string(m) + " must satisfy 1 <= m < n/2 (n = " +
                      std::to_string(n) + ")");
  const double target = 2.0 * m / static_cast<double>(n);
  const bool kl = alpha == 1.0;
  CompensatedSum acc;
  for (long i = 1; i <= n; ++i) {
    const double df = fit.increment(s.order_stat(i - m), s.order_stat(i + m));
    if (!(df > 0.0))
      throw DegenerateIncrement(static_cast<std::size_t>(i),
                                "fitted cdf increment is zero at i = " + std::to_string(i));
    const double log_r = std::log(target / df);
    acc.add(kl ? log_r : std::expm1((alpha - 1.0) * log_r));
  }
  const double mean = acc.value() / static_cast<double>(n);
  return kl ? mean : mean / (alpha - 1.0);
}

double kl_mn_statistic(const Sample& s, int m) {
  if (!(s.mean() > 0.0)) throw DomainError("KL_mn: sample mean must be > 0");
  const double h = spacings::shannon_vasicek(s, m);
  return std::exp(h - std::log(s.mean()) - 1.0);
}

double baratpour_rad_T(const Sample& s) {
  const long n = static_cast<long>(s.size());
  if (n < 2) throw DomainError("T statistic needs n >= 2");
  if (!(s.min() > 0.0)) throw DomainError("T statistic needs strictly positive data");
  CompensatedSum sum, sum_sq;
  for (double x : s.values()) {
    sum.add(x);
    sum_sq.add(x * x);
  }
  if (!(sum.value() > 0.0)) throw DomainError("T statistic: data sum must be > 0");
  const double d = sum_sq.value() / (2.0 * sum.value());
  CompensatedSum cre;
  for (long i = 1; i <= n - 1; ++i) {
    const double p = static_cast<double>(n - i) / static_cast<double>(n);
    cre.add(p * std::log(p) * (s.order_stat(i + 1) - s.order_stat(i)));
  }
  return (cre.value() + d) / d;
}

double ks_statistic(const Sample& s, const FittedFamily& fit) {
  const auto x = s.sorted();
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = fit.cdf(x[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

}  // namespace tsallis::divergence
