#include "tsallis/spacings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "tsallis/errors.hpp"
#include "tsallis/numeric.hpp"

namespace tsallis::spacings {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw DomainError("alpha must be a finite value > 0");
}

// Symmetric-window estimators need 1 <= m and 2m < n.
void check_symmetric_window(const Sample& s, int m) {
  const auto n = static_cast<long>(s.size());
  if (n < 2) throw DomainError("spacings estimators need n >= 2");
  if (m < 1) throw DomainError("window m must be >= 1");
  if (2L * m >= n)
    throw DomainError("window m = " + std::to_string(m) + " must be < n/2 (n = " +
                      std::to_string(n) + ")");
}

[[noreturn]] void throw_tied(long i, int m) {
  throw TiedSpacings(static_cast<std::size_t>(i),
                     "zero spacing at i = " + std::to_string(i) + " (m = " +
                         std::to_string(m) + "); enable tie jitter for rounded data");
}

// Shared body of the symmetric-window estimators. `scale(i)` is the
// denominator c_i * m / n of the ratio for index i.
template <class Scale>
double symmetric_estimator(const Sample& s, const SpacingsConfig& cfg, Scale scale) {
  check_alpha(cfg.alpha);
  check_symmetric_window(s, cfg.m);
  const long n = static_cast<long>(s.size());
  const int m = cfg.m;
  const bool shannon = cfg.alpha == 1.0;
  CompensatedSum acc;
  for (long i = 1; i <= n; ++i) {
    const double d = s.order_stat(i + m) - s.order_stat(i - m);
    if (d <= 0.0 && cfg.alpha >= 1.0) throw_tied(i, m);
    const double log_t = std::log(d / scale(i));
    acc.add(shannon ? log_t : tsallis_term(log_t, cfg.alpha));
  }
  return acc.value() / static_cast<double>(n);
}

}  // namespace

int window_default(std::size_t n, WindowRule rule) {
  if (n < 4) throw DomainError("window_default needs n >= 4");
  long m = rule == WindowRule::Sqrt
               ? static_cast<long>(std::floor(std::sqrt(static_cast<double>(n)) + 0.5))
               : static_cast<long>(n / 3);
  const long nl = static_cast<long>(n);
  while (m > 1 && 2 * m >= nl) --m;
  return static_cast<int>(std::max(1L, m));
}

double weight(WeightScheme scheme, long i, long n, int m) {
  if (scheme == WeightScheme::Minimal_W) return (i <= m || i >= n - m + 1) ? 1.0 : 2.0;
  if (i <= m) return 1.0 + static_cast<double>(i - 1) / m;
  if (i >= n - m + 1) return 1.0 + static_cast<double>(n - i) / m;
  return 2.0;
}

const char* estimator_name(Estimator e) {
  switch (e) {
    case Estimator::V: return "tv";
    case Estimator::H: return "th";
    case Estimator::E: return "te";
    case Estimator::W: return "tw";
  }
  return "?";
}

Estimator parse_estimator(const std::string& name) {
  if (name == "tv" || name == "V") return Estimator::V;
  if (name == "th" || name == "H") return Estimator::H;
  if (name == "te" || name == "E") return Estimator::E;
  if (name == "tw" || name == "W" || name == "ta" || name == "A") return Estimator::W;
  throw DomainError("unknown spacings estimator '" + name + "' (expected tv, th, te or tw)");
}

double shannon_vasicek(const Sample& s, int m) { return tsallis_v(s, {m, 1.0}); }

double tsallis_v(const Sample& s, const SpacingsConfig& cfg) {
  const double scale = 2.0 * cfg.m / static_cast<double>(s.size());
  return symmetric_estimator(s, cfg, [scale](long) { return scale; });
}

double tsallis_e(const Sample& s, const SpacingsConfig& cfg) {
  const long n = static_cast<long>(s.size());
  const double unit = static_cast<double>(cfg.m) / static_cast<double>(n);
  return symmetric_estimator(s, cfg, [&](long i) {
    return weight(WeightScheme::Ebrahimi_C, i, n, cfg.m) * unit;
  });
}

double tsallis_w(const Sample& s, const SpacingsConfig& cfg) {
  const long n = static_cast<long>(s.size());
  const double unit = static_cast<double>(cfg.m) / static_cast<double>(n);
  return symmetric_estimator(s, cfg, [&](long i) {
    return weight(WeightScheme::Minimal_W, i, n, cfg.m) * unit;
  });
}

double tsallis_h(const Sample& s, const SpacingsConfig& cfg) {
  check_alpha(cfg.alpha);
  const long n = static_cast<long>(s.size());
  const int m = cfg.m;
  if (n < 2) throw DomainError("spacings estimators need n >= 2");
  if (m < 1 || m >= n) throw DomainError("window m must satisfy 1 <= m < n");
  const double scale = static_cast<double>(m) / static_cast<double>(n + 1);
  const bool shannon = cfg.alpha == 1.0;
  CompensatedSum acc;
  for (long i = 1; i <= n - m; ++i) {
    const double d = s.order_stat(i + m) - s.order_stat(i);
    if (d <= 0.0 && cfg.alpha >= 1.0) throw_tied(i, m);
    const double log_t = std::log(d / scale);
    acc.add(shannon ? log_t : tsallis_term(log_t, cfg.alpha));
  }
  return acc.value() / static_cast<double>(n - m);
}

double estimate(Estimator e, const Sample& s, const SpacingsConfig& cfg) {
  switch (e) {
    case Estimator::V: return tsallis_v(s, cfg);
    case Estimator::H: return tsallis_h(s, cfg);
    case Estimator::E: return tsallis_e(s, cfg);
    case Estimator::W: return tsallis_w(s, cfg);
  }
  throw DomainError("unknown estimator");
}

Sample jitter_ties(const Sample& s) {
  const auto sorted = s.sorted();
  const double range = s.max() - s.min();
  const double scale = std::max(std::fabs(s.min()), std::fabs(s.max()));
  const double step =
      std::max(1e-12 * range, 4.0 * std::numeric_limits<double>::epsilon() * scale);
  if (step == 0.0) return s;  // all values zero: nothing sensible to do
  std::vector<double> v(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] += static_cast<double>(k + 1) * step;
  return Sample(std::move(v));
}

}  // namespace tsallis::spacings
