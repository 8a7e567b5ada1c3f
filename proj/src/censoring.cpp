#include "tsallis/censoring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "tsallis/errors.hpp"
#include "tsallis/numeric.hpp"

namespace tsallis::censoring {

namespace {

int parse_int(const std::string& text, const std::string& context) {
  std::size_t b = text.find_first_not_of(" \t");
  std::size_t e = text.find_last_not_of(" \t");
  if (b == std::string::npos) throw DomainError("scheme '" + context + "': empty entry");
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data() + b, text.data() + e + 1, v);
  if (ec != std::errc() || ptr != text.data() + e + 1)
    throw DomainError("scheme '" + context + "': bad integer '" + text.substr(b, e - b + 1) + "'");
  return v;
}

std::vector<int> expand(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(start, comma - start);
    const auto star = item.find('*');
    if (star == std::string::npos) {
      out.push_back(parse_int(item, text));
    } else {
      const int value = parse_int(item.substr(0, star), text);
      const int count = parse_int(item.substr(star + 1), text);
      if (count < 1) throw DomainError("scheme '" + text + "': repeat count must be >= 1");
      out.insert(out.end(), static_cast<std::size_t>(count), value);
    }
    start = comma + 1;
  }
  return out;
}

double exp_increment(double rate, double a, double b) {
  a = std::max(a, 0.0);
  b = std::max(b, 0.0);
  return -std::exp(-rate * a) * std::expm1(-rate * (b - a));
}

void check_window(std::size_t r, int m) {
  if (m < 1 || 2L * m >= static_cast<long>(r))
    throw DomainError("window m = " + std::to_string(m) + " must satisfy 1 <= m < r/2 (r = " +
                      std::to_string(r) + ")");
}

}  // namespace

CensoringScheme::CensoringScheme(std::size_t n, std::vector<int> removals)
    : n_(n), removals_(std::move(removals)) {
  const std::size_t r = removals_.size();
  if (r < 2) throw DomainError("censoring scheme needs r >= 2 observed failures");
  if (r > n_) throw DomainError("censoring scheme needs r <= n");
  long total = 0;
  for (int v : removals_) {
    if (v < 0) throw DomainError("censoring scheme removals must be >= 0");
    total += v;
  }
  if (total != static_cast<long>(n_ - r))
    throw DomainError("censoring scheme removals sum to " + std::to_string(total) +
                      " but n - r = " + std::to_string(n_ - r));
}

CensoringScheme CensoringScheme::parse(const std::string& text) {
  auto r = expand(text);
  long total = 0;
  for (int v : r) total += std::max(v, 0);
  const std::size_t n = r.size() + static_cast<std::size_t>(total);
  return CensoringScheme(n, std::move(r));
}

CensoringScheme CensoringScheme::parse(const std::string& text, std::size_t n) {
  return CensoringScheme(n, expand(text));
}

CensoringScheme CensoringScheme::type2(std::size_t n, std::size_t r) {
  if (r < 2 || r > n) throw DomainError("type-II scheme needs 2 <= r <= n");
  std::vector<int> R(r, 0);
  R.back() = static_cast<int>(n - r);
  return CensoringScheme(n, std::move(R));
}

CensoringScheme CensoringScheme::complete(std::size_t n) {
  return CensoringScheme(n, std::vector<int>(n, 0));
}

bool CensoringScheme::is_type2() const noexcept {
  return std::all_of(removals_.begin(), removals_.end() - 1, [](int v) { return v == 0; });
}

std::string CensoringScheme::to_string() const {
  std::string out;
  std::size_t i = 0;
  while (i < removals_.size()) {
    std::size_t j = i;
    while (j < removals_.size() && removals_[j] == removals_[i]) ++j;
    const std::size_t run = j - i;
    auto emit = [&](const std::string& s) {
      if (!out.empty()) out += ',';
      out += s;
    };
    if (run >= 3) {
      emit(std::to_string(removals_[i]) + "*" + std::to_string(run));
    } else {
      for (std::size_t k = 0; k < run; ++k) emit(std::to_string(removals_[i]));
    }
    i = j;
  }
  return out;
}

int default_window(std::size_t r) {
  if (r < 3) throw DomainError("censored estimators need r >= 3");
  long m = static_cast<long>(std::floor(std::sqrt(static_cast<double>(r)) + 0.5));
  while (m > 1 && 2 * m >= static_cast<long>(r)) --m;
  return static_cast<int>(m);
}

BetaProducts::BetaProducts(const CensoringScheme& scheme) {
  const long r = static_cast<long>(scheme.r());
  beta_.resize(static_cast<std::size_t>(r));
  long s = 0;
  for (long i = 1; i <= r; ++i) {
    s += scheme.removal(r - i + 1);
    const double a = static_cast<double>(i + s);
    beta_[static_cast<std::size_t>(i - 1)] = a / (a + 1.0);
  }
  tail_.assign(static_cast<std::size_t>(r + 1), 1.0);
  for (long j = r; j >= 1; --j)
    tail_[static_cast<std::size_t>(j - 1)] =
        tail_[static_cast<std::size_t>(j)] * beta_[static_cast<std::size_t>(j - 1)];
}

double BetaProducts::beta(long k) const {
  const long r = static_cast<long>(beta_.size());
  k = std::clamp(k, 1L, r);
  return beta_[static_cast<std::size_t>(k - 1)];
}

double BetaProducts::tail_product(long j) const {
  const long r = static_cast<long>(beta_.size());
  j = std::clamp(j, 1L, r + 1);
  return tail_[static_cast<std::size_t>(j - 1)];
}

double BetaProducts::expected_uniform(long i) const {
  const long r = static_cast<long>(beta_.size());
  i = std::clamp(i, 1L, r);
  return 1.0 - tail_product(r - i + 1);
}

double BetaProducts::increment(long i, int m) const {
  const long r = static_cast<long>(beta_.size());
  const long lo = std::clamp(i - m, 1L, r);
  const long hi = std::clamp(i + m, 1L, r);
  return tail_product(r - lo + 1) - tail_product(r - hi + 1);
}

std::vector<double> expected_uniform(const CensoringScheme& scheme) {
  BetaProducts bp(scheme);
  std::vector<double> out(scheme.r());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = bp.expected_uniform(static_cast<long>(i + 1));
  return out;
}

PC2Sample::PC2Sample(std::vector<double> times, CensoringScheme scheme)
    : times_(std::move(times)), scheme_(std::move(scheme)) {
  if (times_.size() != scheme_.r())
    throw DomainError("PC-II sample has " + std::to_string(times_.size()) +
                      " times but the scheme observes r = " + std::to_string(scheme_.r()));
  for (double t : times_)
    if (!std::isfinite(t)) throw DomainError("PC-II sample contains a non-finite time");
  if (!std::is_sorted(times_.begin(), times_.end()))
    throw DomainError("PC-II failure times must be in ascending order");
}

double PC2Sample::time(long i) const noexcept {
  const long r = static_cast<long>(times_.size());
  i = std::clamp(i, 1L, r);
  return times_[static_cast<std::size_t>(i - 1)];
}

std::vector<double> generate_uniform_complements(const CensoringScheme& scheme, Rng& rng) {
  const long r = static_cast<long>(scheme.r());
  // V_i = W_i^(1/e_i), e_i = i + R_r + ... + R_(r-i+1).
  std::vector<double> log_v(static_cast<std::size_t>(r));
  long s = 0;
  for (long i = 1; i <= r; ++i) {
    s += scheme.removal(r - i + 1);
    log_v[static_cast<std::size_t>(i - 1)] = std::log(rng.uniform()) / static_cast<double>(i + s);
  }
  // 1 - U_i = prod_{j=r-i+1}^{r} V_j
  std::vector<double> log_c(static_cast<std::size_t>(r));
  double acc = 0.0;
  for (long i = 1; i <= r; ++i) {
    acc += log_v[static_cast<std::size_t>(r - i)];
    log_c[static_cast<std::size_t>(i - 1)] = acc;
  }
  for (auto& x : log_c) x = std::exp(x);
  return log_c;
}

PC2Sample generate_pc2(const dist::DistributionModel& model, const CensoringScheme& scheme,
                       Rng& rng) {
  if (scheme.is_complete()) {
    auto s = dist::sample(model, scheme.n(), rng);
    return PC2Sample(std::vector<double>(s.sorted().begin(), s.sorted().end()), scheme);
  }
  const auto comp = generate_uniform_complements(scheme, rng);
  std::vector<double> times(comp.size());
  for (std::size_t i = 0; i < comp.size(); ++i) {
    const double c = comp[i];
    times[i] = c > 0.5 ? model.quantile(-std::expm1(std::log(c))) : model.quantile_complement(c);
  }
  // Rounding in the quantile transform must not break the ordering.
  for (std::size_t i = 1; i < times.size(); ++i) times[i] = std::max(times[i], times[i - 1]);
  return PC2Sample(std::move(times), scheme);
}

PC2Sample censor_sample(const Sample& complete, const CensoringScheme& scheme, Rng& rng) {
  if (complete.size() != scheme.n())
    throw DomainError("censor_sample: sample size " + std::to_string(complete.size()) +
                      " differs from scheme n = " + std::to_string(scheme.n()));
  std::vector<double> survivors(complete.sorted().begin(), complete.sorted().end());
  std::vector<double> times;
  times.reserve(scheme.r());
  for (long i = 1; i <= static_cast<long>(scheme.r()); ++i) {
    times.push_back(survivors.front());
    survivors.erase(survivors.begin());
    for (int k = 0; k < scheme.removal(i); ++k) {
      const auto idx = static_cast<std::size_t>(rng.uniform() * static_cast<double>(survivors.size()));
      survivors.erase(survivors.begin() + static_cast<long>(std::min(idx, survivors.size() - 1)));
    }
  }
  return PC2Sample(std::move(times), scheme);
}

double tsallis_pc2(const PC2Sample& s, int m, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be > 0");
  const long r = static_cast<long>(s.r());
  check_window(s.r(), m);
  const BetaProducts bp(s.scheme());
  const bool shannon = alpha == 1.0;
  CompensatedSum acc;
  for (long i = 1; i <= r; ++i) {
    const double d = s.time(i + m) - s.time(i - m);
    if (d <= 0.0 && alpha >= 1.0)
      throw TiedSpacings(static_cast<std::size_t>(i),
                         "zero spacing of failure times at i = " + std::to_string(i));
    const double du = bp.increment(i, m);
    if (!(du > 0.0))
      throw DegenerateIncrement(static_cast<std::size_t>(i),
                                "expected-uniform increment is zero at i = " + std::to_string(i));
    const double log_t = std::log(d / du);
    acc.add(shannon ? log_t : tsallis_term(log_t, alpha));
  }
  return acc.value() / static_cast<double>(r);
}

double tsallis_divergence_pc2(const PC2Sample& s, double theta_hat, int m, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be > 0");
  if (!(theta_hat > 0.0) || !std::isfinite(theta_hat))
    throw DomainError("theta_hat must be > 0");
  const long r = static_cast<long>(s.r());
  check_window(s.r(), m);
  const BetaProducts bp(s.scheme());
  const bool kl = alpha == 1.0;
  CompensatedSum acc;
  for (long i = 1; i <= r; ++i) {
    const double df = exp_increment(theta_hat, s.time(i - m), s.time(i + m));
    if (!(df > 0.0))
      throw DegenerateIncrement(static_cast<std::size_t>(i),
                                "fitted cdf increment is zero at i = " + std::to_string(i));
    const double du = bp.increment(i, m);
    const double log_ratio = std::log(du / df);
    acc.add(kl ? log_ratio : std::expm1((alpha - 1.0) * log_ratio));
  }
  const double mean = acc.value() / static_cast<double>(r);
  return kl ? mean : mean / (alpha - 1.0);
}

double exp_mle_pc2(const PC2Sample& s) {
  CompensatedSum denom;
  for (long i = 1; i <= static_cast<long>(s.r()); ++i) {
    const double t = s.time(i);
    if (!(t > 0.0)) throw DomainError("exponential MLE needs strictly positive failure times");
    denom.add((1.0 + s.scheme().removal(i)) * t);
  }
  if (!(denom.value() > 0.0)) throw DomainError("exponential MLE: nonpositive denominator");
  return static_cast<double>(s.r()) / denom.value();
}

}  // namespace tsallis::censoring
