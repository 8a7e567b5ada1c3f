#include "tsallis/quantile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "tsallis/errors.hpp"
#include "tsallis/numeric.hpp"

namespace tsallis::quantile {

namespace {

double gauss_density(double u) {
  return std::exp(-0.5 * u * u) * (0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2);
}

double gauss_cdf(double u) { return 0.5 * std::erfc(-u / std::numbers::sqrt2); }

void check_spec(const KernelSpec& spec) {
  if (!(spec.bandwidth > 0.0) || !std::isfinite(spec.bandwidth))
    throw DomainError("kernel bandwidth must be > 0");
}

void check_w(double w) {
  if (!(w > 0.0 && w < 1.0)) throw DomainError("w must lie in (0, 1)");
}

// Index i (1-based) with (i-1)/n < w <= i/n. The product w n can round
// across an integer, so the bracket is checked against i/n directly.
long step_index(std::size_t n, double w) {
  const double nd = static_cast<double>(n);
  auto i = std::clamp(static_cast<long>(std::ceil(w * nd)), 1L, static_cast<long>(n));
  if (i > 1 && w <= static_cast<double>(i - 1) / nd) --i;
  if (i < static_cast<long>(n) && w > static_cast<double>(i) / nd) ++i;
  return i;
}

}  // namespace

const Kernel& gaussian_kernel() {
  static const Kernel k{"gaussian", &gauss_density, &gauss_cdf};
  return k;
}

double bandwidth_nrr(const Sample& s) {
  if (s.size() < 2) throw DomainError("bandwidth rule needs n >= 2");
  const double sd = s.sd(1);
  if (!(sd > 0.0)) throw DomainError("bandwidth rule: sample has zero variance");
  return 1.06 * sd * std::pow(static_cast<double>(s.size()), -0.2);
}

KernelSpec default_spec(const Sample& s) { return {gaussian_kernel(), bandwidth_nrr(s)}; }

double kde(const Sample& s, const KernelSpec& spec, double x) {
  check_spec(spec);
  const double h = spec.bandwidth;
  CompensatedSum acc;
  for (double xi : s.values()) acc.add(spec.kernel.density((x - xi) / h));
  return acc.value() / (static_cast<double>(s.size()) * h);
}

double step_quantile(const Sample& s, double w) {
  if (!(w > 0.0 && w <= 1.0)) throw DomainError("w must lie in (0, 1]");
  return s.order_stat(step_index(s.size(), w));
}

double smooth_quantile(const Sample& s, double w) {
  if (!(w >= 0.0 && w <= 1.0)) throw DomainError("w must lie in [0, 1]");
  const double n = static_cast<double>(s.size());
  const long i = std::max(1L, step_index(s.size(), w));
  const double lower = i == 1 ? 0.0 : s.order_stat(i - 1);
  const double upper = s.order_stat(i);
  return n * (static_cast<double>(i) / n - w) * lower +
         n * (w - static_cast<double>(i - 1) / n) * upper;
}

double empirical_quantile(const Sample& s, QuantileKind kind, double w) {
  return kind == QuantileKind::StepQn ? step_quantile(s, w) : smooth_quantile(s, w);
}

double qdf_jones(const Sample& s, const KernelSpec& spec, double w) {
  return 1.0 / kde(s, spec, step_quantile(s, w));
}

std::vector<double> kde_at_order_stats(const Sample& s, const KernelSpec& spec) {
  check_spec(spec);
  const auto sorted = s.sorted();
  std::vector<double> f(sorted.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = kde(s, spec, sorted[i]);
  return f;
}

double tsallis_from_density(const std::vector<double>& f, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be > 0");
  if (f.empty()) throw DomainError("no density values");
  const bool shannon = alpha == 1.0;
  CompensatedSum acc;
  for (double fi : f) {
    const double log_f = std::log(fi);
    // With t = 1/f, tsallis_term gives (1 - f^(alpha-1)) / (alpha-1).
    acc.add(shannon ? -log_f : tsallis_term(-log_f, alpha));
  }
  return acc.value() / static_cast<double>(f.size());
}

double tsallis_quantile(const Sample& s, const KernelSpec& spec, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be > 0");
  return tsallis_from_density(kde_at_order_stats(s, spec), alpha);
}

double qdf_soni(const Sample& s, const KernelSpec& spec, double w) {
  check_w(w);
  // The inner integral is h * (Kcdf((1-w)/h) - Kcdf(-w/h)); the h cancels.
  const double h = spec.bandwidth;
  const double mass = spec.kernel.cdf((1.0 - w) / h) - spec.kernel.cdf(-w / h);
  return mass / kde(s, spec, step_quantile(s, w));
}

double tsallis_quantile_soni(const Sample& s, const KernelSpec& spec, double alpha,
                             std::size_t grid) {
  check_spec(spec);
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be > 0");
  if (grid < 1) throw DomainError("quadrature grid must have at least one point");
  // Q_n(w) only takes the order-statistic values.
  const auto f = kde_at_order_stats(s, spec);
  const double h = spec.bandwidth;
  const bool shannon = alpha == 1.0;
  CompensatedSum acc;
  for (std::size_t k = 0; k < grid; ++k) {
    const double w = (static_cast<double>(k) + 0.5) / static_cast<double>(grid);
    const double mass = spec.kernel.cdf((1.0 - w) / h) - spec.kernel.cdf(-w / h);
    const double log_q = std::log(mass) - std::log(f[static_cast<std::size_t>(step_index(f.size(), w) - 1)]);
    acc.add(shannon ? log_q : tsallis_term(log_q, alpha));
  }
  return acc.value() / static_cast<double>(grid);
}

std::vector<double> clt_error_samples(const dist::DistributionModel& model, std::size_t n,
                                      double alpha, std::size_t reps, std::uint64_t seed,
                                      unsigned workers) {
  const double truth = dist::true_tsallis(model, alpha).value;
  std::vector<double> out(reps);
  parallel_for(reps, workers, [&](std::size_t k) {
    Rng rng = Rng::substream(seed, {k});
    const Sample s = dist::sample(model, n, rng);
    out[k] = tsallis_quantile(s, default_spec(s), alpha) - truth;
  });
  return out;
}

void write_column_csv(std::ostream& out, const char* header, const std::vector<double>& values) {
  out << header << '\n';
  for (double v : values) out << format_double(v) << '\n';
}

}  // namespace tsallis::quantile
