#include "tsallis/inference.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>

#include "tsallis/divergence.hpp"
#include "tsallis/errors.hpp"
#include "tsallis/numeric.hpp"

namespace tsallis::inference {

namespace {

constexpr const char* kCacheMagic = "# tsallis null distribution v1";

bool uses_window(StatisticId id) {
  return id != StatisticId::NormalityKS && id != StatisticId::BaratpourRadT;
}

bool uses_alpha(StatisticId id) {
  return id == StatisticId::NormalityTsallis || id == StatisticId::ExponentialityTsallis ||
         id == StatisticId::PC2ExponentialityTsallis;
}

std::string cache_key(const NullConfig& cfg, std::size_t reps, std::uint64_t seed) {
  std::ostringstream k;
  k << statistic_name(cfg.statistic) << '|' << cfg.size_key() << "|m=" << cfg.m
    << "|alpha=" << format_double(cfg.alpha) << "|reps=" << reps << "|seed=" << seed;
  return k.str();
}

}  // namespace

const char* statistic_name(StatisticId id) {
  switch (id) {
    case StatisticId::NormalityTsallis: return "normality-tsallis";
    case StatisticId::NormalityKS: return "normality-ks";
    case StatisticId::ExponentialityTsallis: return "exp-tsallis";
    case StatisticId::KLmn: return "exp-klmn";
    case StatisticId::BaratpourRadT: return "exp-cre-t";
    case StatisticId::PC2ExponentialityTsallis: return "exp-pc2-tsallis";
  }
  return "?";
}

StatisticId parse_statistic(const std::string& name) {
  for (auto id : {StatisticId::NormalityTsallis, StatisticId::NormalityKS,
                  StatisticId::ExponentialityTsallis, StatisticId::KLmn,
                  StatisticId::BaratpourRadT, StatisticId::PC2ExponentialityTsallis})
    if (name == statistic_name(id)) return id;
  throw DomainError("unknown statistic '" + name + "'");
}

const char* tail_name(Tail t) { return t == Tail::Upper ? "upper" : "lower"; }

Tail rejection_tail(StatisticId id) {
  return id == StatisticId::KLmn ? Tail::Lower : Tail::Upper;
}

std::string NullConfig::size_key() const {
  if (scheme) return "scheme=" + scheme->to_string() + ";n=" + std::to_string(scheme->n());
  return "n=" + std::to_string(n);
}

void NullConfig::validate() const {
  if (statistic == StatisticId::PC2ExponentialityTsallis) {
    if (!scheme) throw DomainError("PC-II statistic needs a censoring scheme");
    if (m < 1 || 2L * m >= static_cast<long>(scheme->r()))
      throw DomainError("window m must satisfy 1 <= m < r/2");
  } else {
    if (n < 2) throw DomainError("null configuration needs n >= 2");
    if (uses_window(statistic) && (m < 1 || 2L * m >= static_cast<long>(n)))
      throw DomainError("window m = " + std::to_string(m) + " must satisfy 1 <= m < n/2 (n = " +
                        std::to_string(n) + ")");
  }
  if (uses_alpha(statistic) && !(alpha > 0.0)) throw DomainError("alpha must be > 0");
}

double evaluate(const NullConfig& cfg, const Sample& s) {
  using namespace divergence;
  switch (cfg.statistic) {
    case StatisticId::NormalityTsallis:
      return tsallis_divergence(s, FittedFamily::normal_mle(s), cfg.m, cfg.alpha);
    case StatisticId::NormalityKS: return ks_statistic(s, FittedFamily::normal_mle(s));
    case StatisticId::ExponentialityTsallis:
      if (!(s.min() > 0.0)) throw DomainError("exponentiality statistics need positive data");
      return tsallis_divergence(s, FittedFamily::exponential_mle(s), cfg.m, cfg.alpha);
    case StatisticId::KLmn: return kl_mn_statistic(s, cfg.m);
    case StatisticId::BaratpourRadT: return baratpour_rad_T(s);
    case StatisticId::PC2ExponentialityTsallis:
      throw DomainError("PC-II statistic needs a censored sample");
  }
  throw DomainError("unknown statistic");
}

double evaluate(const NullConfig& cfg, const censoring::PC2Sample& s) {
  if (cfg.statistic != StatisticId::PC2ExponentialityTsallis)
    throw DomainError("statistic is defined on complete samples only");
  return censoring::tsallis_divergence_pc2(s, censoring::exp_mle_pc2(s), cfg.m, cfg.alpha);
}

dist::DistributionModel unit_null_model(StatisticId id) {
  if (id == StatisticId::NormalityTsallis || id == StatisticId::NormalityKS)
    return dist::DistributionModel::normal(0.0, 1.0);
  return dist::DistributionModel::exponential(1.0);
}

bool NullDistribution::operator==(const NullDistribution& o) const {
  return cache_key(config, reps, seed) == cache_key(o.config, o.reps, o.seed) &&
         failures == o.failures && values == o.values;
}

NullDistribution simulate_null(const NullConfig& cfg, std::size_t reps, std::uint64_t seed,
                               unsigned workers,
                               const std::optional<dist::DistributionModel>& model) {
  cfg.validate();
  if (reps < 1000) throw DomainError("null simulation needs reps >= 1000");
  const auto gen = model.value_or(unit_null_model(cfg.statistic));
  const std::uint64_t key = fnv1a(cache_key(cfg, 0, 0));
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> raw(reps, nan);
  parallel_for(reps, workers, [&](std::size_t k) {
    Rng rng = Rng::substream(seed, {key, k});
    try {
      if (cfg.scheme) {
        raw[k] = evaluate(cfg, censoring::generate_pc2(gen, *cfg.scheme, rng));
      } else {
        raw[k] = evaluate(cfg, dist::sample(gen, cfg.n, rng));
      }
    } catch (const TiedSpacings&) {
    } catch (const DegenerateIncrement&) {
    }
  });
  NullDistribution nd{cfg, reps, seed, 0, {}};
  nd.values.reserve(reps);
  for (double v : raw) {
    if (std::isfinite(v))
      nd.values.push_back(v);
    else
      ++nd.failures;
  }
  std::sort(nd.values.begin(), nd.values.end());
  if (nd.values.empty()) throw Error("null simulation produced no valid replications");
  return nd;
}

double empirical_quantile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) throw DomainError("empirical quantile of an empty set");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probability must lie in [0, 1]");
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double critical_value(const NullDistribution& nd, double level, Tail tail) {
  if (!(level > 0.0 && level < 1.0)) throw DomainError("level must lie in (0, 1)");
  return empirical_quantile(nd.values, tail == Tail::Upper ? 1.0 - level : level);
}

double p_value(const NullDistribution& nd, double statistic, Tail tail) {
  const auto& v = nd.values;
  std::size_t extreme;
  if (tail == Tail::Upper)
    extreme = static_cast<std::size_t>(v.end() - std::lower_bound(v.begin(), v.end(), statistic));
  else
    extreme = static_cast<std::size_t>(std::upper_bound(v.begin(), v.end(), statistic) - v.begin());
  return (1.0 + static_cast<double>(extreme)) / (1.0 + static_cast<double>(v.size()));
}

TestResult decide(const NullDistribution& nd, double statistic, double level) {
  TestResult r;
  r.statistic = statistic;
  r.level = level;
  r.tail = rejection_tail(nd.config.statistic);
  r.critical_value = critical_value(nd, level, r.tail);
  r.p_value = p_value(nd, statistic, r.tail);
  r.reject = r.tail == Tail::Upper ? statistic > r.critical_value : statistic < r.critical_value;
  r.reps = nd.values.size();
  return r;
}

NullCache::NullCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path NullCache::path_for(const NullConfig& cfg, std::size_t reps,
                                          std::uint64_t seed) const {
  std::ostringstream name;
  name << statistic_name(cfg.statistic) << '-' << std::hex << fnv1a(cache_key(cfg, reps, seed))
       << ".csv";
  return dir_ / name.str();
}

std::optional<NullDistribution> NullCache::load(const NullConfig& cfg, std::size_t reps,
                                                std::uint64_t seed) const {
  std::ifstream in(path_for(cfg, reps, seed));
  if (!in) return std::nullopt;
  try {
    NullDistribution nd = read_null(in);
    if (cache_key(nd.config, nd.reps, nd.seed) != cache_key(cfg, reps, seed)) return std::nullopt;
    return nd;
  } catch (const Error&) {
    return std::nullopt;  // unreadable or stale cache entry: regenerate
  }
}

void NullCache::store(const NullDistribution& nd) const {
  std::filesystem::create_directories(dir_);
  const auto path = path_for(nd.config, nd.reps, nd.seed);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write null cache file " + tmp);
    write_null(out, nd);
  }
  std::filesystem::rename(tmp, path);
}

NullDistribution NullCache::get_or_simulate(const NullConfig& cfg, std::size_t reps,
                                            std::uint64_t seed, unsigned workers) const {
  if (auto hit = load(cfg, reps, seed)) return *hit;
  NullDistribution nd = simulate_null(cfg, reps, seed, workers);
  store(nd);
  return nd;
}

void write_null(std::ostream& out, const NullDistribution& nd) {
  out << kCacheMagic << '\n'
      << "statistic," << statistic_name(nd.config.statistic) << '\n';
  if (nd.config.scheme)
    out << "scheme," << nd.config.scheme->n() << ';' << nd.config.scheme->to_string() << '\n';
  else
    out << "n," << nd.config.n << '\n';
  out << "m," << nd.config.m << '\n'
      << "alpha," << format_double(nd.config.alpha) << '\n'
      << "reps," << nd.reps << '\n'
      << "seed," << nd.seed << '\n'
      << "failures," << nd.failures << '\n'
      << "count," << nd.values.size() << '\n'
      << "value\n";
  for (double v : nd.values) out << format_double(v) << '\n';
}

NullDistribution read_null(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCacheMagic)
    throw Error("not a null distribution file (bad header)");
  NullDistribution nd;
  std::size_t count = 0;
  auto field = [&](const std::string& name) {
    if (!std::getline(in, line) || line.rfind(name + ",", 0) != 0)
      throw Error("null distribution file: expected field '" + name + "'");
    return line.substr(name.size() + 1);
  };
  auto to_size = [](const std::string& s) {
    return static_cast<std::size_t>(parse_double(s, "null distribution file"));
  };
  nd.config.statistic = parse_statistic(field("statistic"));
  if (!std::getline(in, line)) throw Error("null distribution file truncated");
  if (line.rfind("scheme,", 0) == 0) {
    const std::string rest = line.substr(7);
    const auto semi = rest.find(';');
    if (semi == std::string::npos) throw Error("null distribution file: bad scheme field");
    nd.config.scheme = censoring::CensoringScheme::parse(rest.substr(semi + 1), to_size(rest.substr(0, semi)));
  } else if (line.rfind("n,", 0) == 0) {
    nd.config.n = to_size(line.substr(2));
  } else {
    throw Error("null distribution file: expected n or scheme");
  }
  nd.config.m = static_cast<int>(parse_double(field("m"), "null distribution file"));
  nd.config.alpha = parse_double(field("alpha"), "null distribution file");
  nd.reps = to_size(field("reps"));
  nd.seed = std::stoull(field("seed"));
  nd.failures = to_size(field("failures"));
  count = to_size(field("count"));
  if (!std::getline(in, line) || line != "value") throw Error("null distribution file: no values");
  nd.values.reserve(count);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nd.values.push_back(parse_double(line, "null distribution file"));
  }
  if (nd.values.size() != count) throw Error("null distribution file: value count mismatch");
  return nd;
}

namespace {

NullDistribution obtain_null(const NullConfig& cfg, std::size_t reps, std::uint64_t seed,
                             const TestOptions& opt) {
  if (opt.cache_dir) return NullCache(*opt.cache_dir).get_or_simulate(cfg, reps, seed, opt.workers);
  return simulate_null(cfg, reps, seed, opt.workers);
}

}  // namespace

TestResult run_test(const NullConfig& cfg, const Sample& s, std::size_t reps, std::uint64_t seed,
                    double level, const TestOptions& opt) {
  const double stat = evaluate(cfg, s);
  return decide(obtain_null(cfg, reps, seed, opt), stat, level);
}

TestResult normality_test(const Sample& s, double alpha, int m, std::size_t reps,
                          std::uint64_t seed, double level, const TestOptions& opt) {
  if (s.size() < 6) throw DomainError("normality test needs n >= 6");
  NullConfig cfg{StatisticId::NormalityTsallis, s.size(), std::nullopt, m, alpha};
  auto r = run_test(cfg, s, reps, seed, level, opt);
  r.estimate = s.mean();
  return r;
}

TestResult exponentiality_test(const Sample& s, double alpha, int m, std::size_t reps,
                               std::uint64_t seed, double level, const TestOptions& opt) {
  if (!(s.min() > 0.0)) throw DomainError("exponentiality test needs strictly positive data");
  NullConfig cfg{StatisticId::ExponentialityTsallis, s.size(), std::nullopt, m, alpha};
  auto r = run_test(cfg, s, reps, seed, level, opt);
  r.estimate = 1.0 / s.mean();
  return r;
}

TestResult pc2_exponentiality_test(const censoring::PC2Sample& s, double alpha, int m,
                                   std::size_t reps, std::uint64_t seed, double level,
                                   const TestOptions& opt) {
  if (!(s.time(1) > 0.0)) throw DomainError("PC-II exponentiality test needs positive times");
  NullConfig cfg{StatisticId::PC2ExponentialityTsallis, s.scheme().n(), s.scheme(), m, alpha};
  const double stat = evaluate(cfg, s);
  auto r = decide(obtain_null(cfg, reps, seed, opt), stat, level);
  r.estimate = censoring::exp_mle_pc2(s);
  return r;
}

}  // namespace tsallis::inference
