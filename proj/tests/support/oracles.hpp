#pragma once

// Independent reference implementations used as test oracles. They follow
// the textbook formulas directly in long double, without sharing any code
// path with the library.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using LD = long double;

inline std::vector<double> sorted(std::vector<double> x) {
  std::sort(x.begin(), x.end());
  return x;
}

// X_(i) with 1-based i clamped to [1, n].
inline LD xo(const std::vector<double>& s, long i) {
  const long n = static_cast<long>(s.size());
  if (i < 1) i = 1;
  if (i > n) i = n;
  return s[static_cast<std::size_t>(i - 1)];
}

inline LD c_weight(long i, long n, long m) {
  if (i <= m) return 1.0L + static_cast<LD>(i - 1) / m;
  if (i >= n - m + 1) return 1.0L + static_cast<LD>(n - i) / m;
  return 2.0L;
}

inline LD w_weight(long i, long n, long m) { return (i <= m || i >= n - m + 1) ? 1.0L : 2.0L; }

// Generic symmetric-window estimator with denominator den(i) * m / n.
inline double windowed(const std::vector<double>& x, long m, double alpha,
                       const std::function<LD(long)>& den) {
  const auto s = sorted(x);
  const long n = static_cast<long>(s.size());
  LD sum = 0.0L;
  for (long i = 1; i <= n; ++i) {
    const LD ratio = (xo(s, i + m) - xo(s, i - m)) / (den(i) * m / n);
    sum += alpha == 1.0 ? std::log(ratio) : std::pow(ratio, 1.0L - alpha);
  }
  const LD mean = sum / n;
  return static_cast<double>(alpha == 1.0 ? mean : (1.0L - mean) / (alpha - 1.0L));
}

inline double vasicek(const std::vector<double>& x, long m) {
  return windowed(x, m, 1.0, [](long) { return 2.0L; });
}
inline double tv(const std::vector<double>& x, long m, double a) {
  return windowed(x, m, a, [](long) { return 2.0L; });
}
inline double te(const std::vector<double>& x, long m, double a) {
  const long n = static_cast<long>(x.size());
  return windowed(x, m, a, [n, m](long i) { return c_weight(i, n, m); });
}
inline double tw(const std::vector<double>& x, long m, double a) {
  const long n = static_cast<long>(x.size());
  return windowed(x, m, a, [n, m](long i) { return w_weight(i, n, m); });
}
inline double th(const std::vector<double>& x, long m, double a) {
  const auto s = sorted(x);
  const long n = static_cast<long>(s.size());
  LD sum = 0.0L;
  for (long i = 1; i <= n - m; ++i) {
    const LD ratio = (xo(s, i + m) - xo(s, i)) / (static_cast<LD>(m) / (n + 1));
    sum += a == 1.0 ? std::log(ratio) : std::pow(ratio, 1.0L - a);
  }
  const LD mean = sum / (n - m);
  return static_cast<double>(a == 1.0 ? mean : (1.0L - mean) / (a - 1.0L));
}

// Plug-in divergence (1/(a-1)) (mean (2m / (n dF))^(a-1) - 1).
inline double divergence(const std::vector<double>& x, const std::function<LD(LD)>& cdf, long m,
                         double a) {
  const auto s = sorted(x);
  const long n = static_cast<long>(s.size());
  LD sum = 0.0L;
  for (long i = 1; i <= n; ++i) {
    const LD r = (2.0L * m / n) / (cdf(xo(s, i + m)) - cdf(xo(s, i - m)));
    sum += a == 1.0 ? std::log(r) : std::pow(r, a - 1.0L);
  }
  const LD mean = sum / n;
  return static_cast<double>(a == 1.0 ? mean : (mean - 1.0L) / (a - 1.0L));
}

inline LD normal_cdf(LD z) { return 0.5L * std::erfc(-z / std::sqrt(2.0L)); }

inline LD mean(const std::vector<double>& x) {
  LD s = 0.0L;
  for (double v : x) s += v;
  return s / x.size();
}

inline LD sd_pop(const std::vector<double>& x) {
  const LD mu = mean(x);
  LD s = 0.0L;
  for (double v : x) s += (v - mu) * (v - mu);
  return std::sqrt(s / x.size());
}

// Cumulative residual entropy statistic written straight from its ratio form.
inline double cre_T(const std::vector<double>& x) {
  const auto s = sorted(x);
  const long n = static_cast<long>(s.size());
  LD sx = 0.0L, sx2 = 0.0L;
  for (double v : s) {
    sx += v;
    sx2 += static_cast<LD>(v) * v;
  }
  LD num = 0.0L;
  for (long i = 1; i <= n - 1; ++i) {
    const LD p = static_cast<LD>(n - i) / n;
    num += p * std::log(p) * (xo(s, i + 1) - xo(s, i));
  }
  const LD d = sx2 / (2.0L * sx);
  return static_cast<double>((num + d) / d);
}

// Kolmogorov limiting survival function Q(l) = 2 sum (-1)^(k-1) exp(-2 k^2 l^2).
inline double kolmogorov_q(double l) {
  if (l < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * l * l);
    sum += (k % 2 ? 1.0 : -1.0) * term;
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

// p-value of the one-sample KS distance with Stephens' small-sample
// correction of the argument.
inline double ks_pvalue(double d, double n) {
  const double rn = std::sqrt(n);
  return kolmogorov_q((rn + 0.12 + 0.11 / rn) * d);
}

inline double ks_distance(std::vector<double> x, const std::function<double(double)>& cdf) {
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = cdf(x[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

inline double ks_two_sample_distance(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
  }
  return d;
}

inline double ks_two_sample_pvalue(double d, double n1, double n2) {
  return ks_pvalue(d, n1 * n2 / (n1 + n2));
}

// Normality of x by KS against the normal with the sample's own mean/sd.
inline double ks_normal_fit_pvalue(const std::vector<double>& x) {
  const LD mu = mean(x);
  LD ss = 0.0L;
  for (double v : x) ss += (v - mu) * (v - mu);
  const LD sd = std::sqrt(ss / (x.size() - 1));
  const double d = ks_distance(x, [&](double v) { return static_cast<double>(normal_cdf((v - mu) / sd)); });
  return ks_pvalue(d, static_cast<double>(x.size()));
}

// Govindarajulu Tsallis entropy via the Beta function:
// q(w) = s g (g + 1) w^(g - 1) (1 - w), integral of q^(1-a) is
// (s g (g + 1))^(1-a) B((g - 1)(1 - a) + 1, 2 - a).
inline double govindarajulu_tsallis(double sigma, double gamma, double a) {
  const double c = sigma * gamma * (gamma + 1.0);
  const double integral =
      std::pow(c, 1.0 - a) * std::beta((gamma - 1.0) * (1.0 - a) + 1.0, 2.0 - a);
  return (1.0 - integral) / (a - 1.0);
}

}  // namespace oracle
