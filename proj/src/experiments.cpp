#include "tsallis/experiments.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include <boost/math/distributions/normal.hpp>

#include "tsallis/divergence.hpp"
#include "tsallis/errors.hpp"
#include "tsallis/numeric.hpp"
#include "tsallis/quantile.hpp"

namespace tsallis::experiments {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Tag separating the null-simulation streams from the alternative streams.
constexpr std::uint64_t kNullTag = 0x6e756c6c;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::uint64_t hash(const std::string& s) { return fnv1a(s); }

// Statistic values that are undefined for a replicate are recorded as NaN.
template <class F>
double guarded(F&& f) {
  try {
    return f();
  } catch (const TiedSpacings&) {
  } catch (const DegenerateIncrement&) {
  } catch (const DomainError&) {
  }
  return kNaN;
}

}  // namespace

// ---- bias / MSE -------------------------------------------------------------

std::vector<GridPoint> bias_mse_default_grid() {
  // Window pairs (sqrt rule, n/3 rule) as tabulated.
  const std::vector<std::pair<std::size_t, std::vector<int>>> sizes = {
      {20, {4, 6}}, {50, {7, 16}}, {100, {10, 33}}};
  const std::vector<double> alphas = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
  std::vector<GridPoint> grid;
  for (const auto& [n, ms] : sizes)
    for (int m : ms)
      for (double a : alphas) grid.push_back({n, m, a});
  return grid;
}

MCReport run_bias_mse(const std::vector<spacings::Estimator>& estimators,
                      const std::vector<dist::DistributionModel>& models,
                      const std::vector<GridPoint>& grid, std::size_t reps, std::uint64_t seed,
                      unsigned workers) {
  if (reps < 1) throw DomainError("reps must be >= 1");
  const Stopwatch clock;
  MCReport report{"bias-mse", seed, reps, resolve_workers(workers), 0.0, {}};

  for (const auto& model : models) {
    // Group grid points by n so every cell of one size shares the samples.
    std::map<std::size_t, std::vector<GridPoint>> by_n;
    for (const auto& g : grid) {
      if (g.m < 1 || 2L * g.m >= static_cast<long>(g.n))
        throw DomainError("window m must satisfy 1 <= m < n/2");
      by_n[g.n].push_back(g);
    }
    for (const auto& [n, points] : by_n) {
      const std::uint64_t key = Rng::derive(seed, {hash(model.spec()), n});
      const std::size_t cells = estimators.size() * points.size();
      std::vector<std::vector<double>> values(cells, std::vector<double>(reps, kNaN));
      parallel_for(reps, workers, [&](std::size_t k) {
        Rng rng = Rng::substream(key, {k});
        const Sample s = dist::sample(model, n, rng);
        for (std::size_t e = 0; e < estimators.size(); ++e)
          for (std::size_t p = 0; p < points.size(); ++p)
            values[e * points.size() + p][k] = guarded([&] {
              return spacings::estimate(estimators[e], s, {points[p].m, points[p].alpha});
            });
      });
      for (std::size_t e = 0; e < estimators.size(); ++e) {
        for (std::size_t p = 0; p < points.size(); ++p) {
          const auto& g = points[p];
          Cell c;
          c.estimator = spacings::estimator_name(estimators[e]);
          c.model = model.label();
          c.n = n;
          c.m = g.m;
          c.alpha = g.alpha;
          c.substream = key;
          std::optional<double> truth;
          if (g.alpha == 1.0)
            truth = dist::true_shannon(model);
          else if (dist::tsallis_exists(model, g.alpha))
            truth = dist::true_tsallis(model, g.alpha).value;
          else
            c.note = "true entropy does not exist";
          apply_summary(c, values[e * points.size() + p], truth);
          report.cells.push_back(std::move(c));
        }
      }
    }
  }
  report.wall_time_s = clock.seconds();
  return report;
}

// ---- censored estimator -------------------------------------------------------

std::vector<censoring::CensoringScheme> pc2_default_schemes() {
  const char* r10[] = {"10,0*9", "0,10,0*8", "0*4,10,0*5", "0*5,10,0*4",
                       "0*8,10,0", "0*9,10",  "5,0*8,5",    "1*10"};
  const char* r15[] = {"5,0*14", "0,5,0*13", "0*7,5,0*7", "0*13,5,0", "0*14,5", "3,0*13,2"};
  std::vector<censoring::CensoringScheme> out;
  for (const char* s : r10) out.push_back(censoring::CensoringScheme::parse(s, 20));
  for (const char* s : r15) out.push_back(censoring::CensoringScheme::parse(s, 20));
  return out;
}

MCReport run_pc2_table(const std::vector<censoring::CensoringScheme>& schemes,
                       const std::vector<dist::DistributionModel>& models,
                       const std::vector<double>& alphas, std::size_t reps, std::uint64_t seed,
                       unsigned workers) {
  if (reps < 1) throw DomainError("reps must be >= 1");
  const Stopwatch clock;
  MCReport report{"pc2", seed, reps, resolve_workers(workers), 0.0, {}};
  for (const auto& model : models) {
    for (const auto& scheme : schemes) {
      const int m = censoring::default_window(scheme.r());
      const std::string sk = std::to_string(scheme.n()) + ";" + scheme.to_string();
      const std::uint64_t key = Rng::derive(seed, {hash(model.spec()), hash(sk)});
      std::vector<std::vector<double>> values(alphas.size(), std::vector<double>(reps, kNaN));
      parallel_for(reps, workers, [&](std::size_t k) {
        Rng rng = Rng::substream(key, {k});
        const auto s = censoring::generate_pc2(model, scheme, rng);
        for (std::size_t a = 0; a < alphas.size(); ++a)
          values[a][k] = guarded([&] { return censoring::tsallis_pc2(s, m, alphas[a]); });
      });
      for (std::size_t a = 0; a < alphas.size(); ++a) {
        Cell c;
        c.estimator = "tpc2";
        c.model = model.label();
        c.scheme = scheme.to_string();
        c.n = scheme.n();
        c.m = m;
        c.alpha = alphas[a];
        c.substream = key;
        std::optional<double> truth;
        if (alphas[a] == 1.0)
          truth = dist::true_shannon(model);
        else if (dist::tsallis_exists(model, alphas[a]))
          truth = dist::true_tsallis(model, alphas[a]).value;
        apply_summary(c, values[a], truth);
        report.cells.push_back(std::move(c));
      }
    }
  }
  report.wall_time_s = clock.seconds();
  return report;
}

// ---- power ----------------------------------------------------------------

const char* test_family_name(TestFamily t) {
  switch (t) {
    case TestFamily::Normality: return "normality";
    case TestFamily::Exponentiality: return "exponentiality";
    case TestFamily::PC2Exponentiality: return "exp-pc2";
  }
  return "?";
}

TestFamily parse_test_family(const std::string& name) {
  if (name == "normality" || name == "normal") return TestFamily::Normality;
  if (name == "exponentiality" || name == "exp") return TestFamily::Exponentiality;
  if (name == "exp-pc2" || name == "pc2") return TestFamily::PC2Exponentiality;
  throw DomainError("unknown test family '" + name + "'");
}

std::vector<dist::DistributionModel> default_alternatives(TestFamily t) {
  using M = dist::DistributionModel;
  switch (t) {
    case TestFamily::Normality:
      return {M::normal(0, 1), M::cauchy(),      M::exponential(1), M::gamma(2),
              M::gamma(0.5),   M::uniform01(),   M::beta(2, 1)};
    case TestFamily::Exponentiality:
      return {M::weibull(0.5),  M::weibull(2),    M::gamma(0.4),
              M::gamma(2),      M::gamma(3),      M::lognormal(0.6),
              M::lognormal(1.2), M::lognormal(2), M::exponential(1)};
    case TestFamily::PC2Exponentiality:
      return {M::exponential(1), M::weibull(2), M::gamma(2)};
  }
  return {};
}

std::vector<PowerGridPoint> default_power_grid(TestFamily t) {
  std::vector<PowerGridPoint> grid;
  const std::vector<std::pair<std::size_t, int>> sizes = {{10, 3}, {15, 4}, {20, 4}, {25, 5}};
  switch (t) {
    case TestFamily::Normality:
      for (const auto& [n, m] : sizes)
        for (double a : {0.5, 2.0, 3.0}) grid.push_back({n, m, a, std::nullopt});
      break;
    case TestFamily::Exponentiality:
      for (const auto& [n, m] : sizes) grid.push_back({n, m, 2.0, std::nullopt});
      break;
    case TestFamily::PC2Exponentiality: {
      const std::vector<std::pair<std::size_t, std::vector<std::string>>> plans = {
          {20, {"10,0*9", "0,10,0*8", "0*8,10,0", "0*9,10", "1*10"}},
          {20, {"5,0*14", "0,5,0*13", "0*13,5,0", "0*14,5", "1,1,0*5,1,0*5,1,1"}},
          {30, {"10,0*19", "0,10,0*18", "0*18,10,0", "0*19,10", "1,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0"}}};
      for (const auto& [n, schemes] : plans) {
        for (const auto& text : schemes) {
          auto scheme = censoring::CensoringScheme::parse(text, n);
          grid.push_back({n, censoring::default_window(scheme.r()), 2.0, scheme});
        }
      }
      break;
    }
  }
  return grid;
}

namespace {

struct Competitor {
  std::string label;
  inference::NullConfig cfg;
};

std::vector<Competitor> competitors(TestFamily t, const PowerGridPoint& g) {
  using inference::NullConfig;
  using inference::StatisticId;
  std::vector<Competitor> out;
  switch (t) {
    case TestFamily::Normality:
      out.push_back({"T_alpha", NullConfig{StatisticId::NormalityTsallis, g.n, {}, g.m, g.alpha}});
      out.push_back({"KL", NullConfig{StatisticId::NormalityTsallis, g.n, {}, g.m, 1.0}});
      out.push_back({"KS", NullConfig{StatisticId::NormalityKS, g.n, {}, 0, 0.0}});
      break;
    case TestFamily::Exponentiality:
      out.push_back(
          {"T_alpha", NullConfig{StatisticId::ExponentialityTsallis, g.n, {}, g.m, g.alpha}});
      out.push_back({"KL_mn", NullConfig{StatisticId::KLmn, g.n, {}, g.m, 0.0}});
      out.push_back({"T", NullConfig{StatisticId::BaratpourRadT, g.n, {}, 0, 0.0}});
      break;
    case TestFamily::PC2Exponentiality:
      if (!g.scheme) throw DomainError("PC-II power grid point needs a scheme");
      out.push_back({"T_alpha", NullConfig{StatisticId::PC2ExponentialityTsallis, g.scheme->n(),
                                           g.scheme, g.m, g.alpha}});
      break;
  }
  return out;
}

std::string config_id(const inference::NullConfig& cfg) {
  std::ostringstream k;
  k << inference::statistic_name(cfg.statistic) << '|' << cfg.size_key() << "|m=" << cfg.m
    << "|alpha=" << format_double(cfg.alpha);
  return k.str();
}

}  // namespace

MCReport run_power_table(TestFamily test, const std::vector<dist::DistributionModel>& alternatives,
                         const std::vector<PowerGridPoint>& grid, std::size_t reps,
                         std::uint64_t seed, double level, unsigned workers,
                         std::size_t null_reps) {
  if (reps < 1) throw DomainError("reps must be >= 1");
  if (!(level > 0.0 && level < 1.0)) throw DomainError("level must lie in (0, 1)");
  if (null_reps == 0)
    null_reps = test == TestFamily::PC2Exponentiality ? inference::kDefaultRepsPC2
                                                      : inference::kDefaultReps;
  const Stopwatch clock;
  MCReport report{std::string("power-") + test_family_name(test), seed, reps,
                  resolve_workers(workers), 0.0, {}};
  const std::uint64_t null_seed = Rng::derive(seed, {kNullTag});
  std::map<std::string, inference::NullDistribution> nulls;

  for (const auto& g : grid) {
    const auto stats = competitors(test, g);
    std::vector<double> crit(stats.size());
    for (std::size_t s = 0; s < stats.size(); ++s) {
      const std::string id = config_id(stats[s].cfg);
      auto it = nulls.find(id);
      if (it == nulls.end())
        it = nulls.emplace(id, inference::simulate_null(stats[s].cfg, null_reps, null_seed, workers))
                 .first;
      crit[s] = inference::critical_value(it->second, level,
                                          inference::rejection_tail(stats[s].cfg.statistic));
    }
    const std::string size_key = stats.front().cfg.size_key();
    for (const auto& alt : alternatives) {
      const std::uint64_t key = Rng::derive(seed, {hash(alt.spec()), hash(size_key)});
      std::vector<std::vector<double>> values(stats.size(), std::vector<double>(reps, kNaN));
      parallel_for(reps, workers, [&](std::size_t k) {
        Rng rng = Rng::substream(key, {k});
        if (g.scheme) {
          const auto s = censoring::generate_pc2(alt, *g.scheme, rng);
          for (std::size_t j = 0; j < stats.size(); ++j)
            values[j][k] = guarded([&] { return inference::evaluate(stats[j].cfg, s); });
        } else {
          const Sample s = dist::sample(alt, g.n, rng);
          for (std::size_t j = 0; j < stats.size(); ++j)
            values[j][k] = guarded([&] { return inference::evaluate(stats[j].cfg, s); });
        }
      });
      for (std::size_t j = 0; j < stats.size(); ++j) {
        const auto tail = inference::rejection_tail(stats[j].cfg.statistic);
        Cell c;
        c.estimator = stats[j].label;
        c.model = alt.label();
        c.scheme = g.scheme ? g.scheme->to_string() : std::string();
        c.n = g.n;
        c.m = g.m;
        c.alpha = g.alpha;
        c.substream = key;
        apply_summary(c, values[j], std::nullopt);
        std::size_t valid = 0, rejected = 0;
        for (double v : values[j]) {
          if (!std::isfinite(v)) continue;
          ++valid;
          if (tail == inference::Tail::Upper ? v > crit[j] : v < crit[j]) ++rejected;
        }
        if (valid > 0) c.power = static_cast<double>(rejected) / static_cast<double>(valid);
        c.critical_value = crit[j];
        report.cells.push_back(std::move(c));
      }
    }
  }
  report.wall_time_s = clock.seconds();
  return report;
}

// ---- empirical influence function ------------------------------------------

Sample normal_scores_sample(double mu, double sigma, std::size_t n) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (!(sigma > 0.0)) throw DomainError("sigma must be > 0");
  const boost::math::normal_distribution<double> z;
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = mu + sigma * boost::math::quantile(
                            z, static_cast<double>(i + 1) / static_cast<double>(n + 1));
  return Sample(std::move(x));
}

std::vector<double> eif_grid(double mu, double sigma, std::size_t points) {
  if (points < 2) throw DomainError("EIF grid needs at least two points");
  std::vector<double> r(points);
  const double lo = mu - 4.0 * sigma, hi = mu + 4.0 * sigma;
  for (std::size_t i = 0; i < points; ++i)
    r[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  return r;
}

std::vector<double> empirical_influence(const EstimatorFn& est, const Sample& base,
                                        const std::vector<double>& grid) {
  const double t0 = est(base);
  const double scale = static_cast<double>(base.size() + 1);
  std::vector<double> out;
  out.reserve(grid.size());
  for (double r : grid) out.push_back(guarded([&] { return scale * (est(base.with(r)) - t0); }));
  return out;
}

std::vector<EIFCurve> run_eif(spacings::Estimator estimator, double mu, double sigma,
                              std::size_t n, const std::vector<int>& m_list, double alpha,
                              const std::vector<double>& grid) {
  const Sample base = normal_scores_sample(mu, sigma, n);
  std::vector<EIFCurve> curves;
  for (int m : m_list) {
    if (m < 1 || static_cast<long>(n) < 2L * m + 2)
      throw DomainError("EIF needs n >= 2m + 2 (n = " + std::to_string(n) + ", m = " +
                        std::to_string(m) + ")");
    const spacings::SpacingsConfig cfg{m, alpha};
    EstimatorFn fn = [estimator, cfg](const Sample& s) {
      return spacings::estimate(estimator, s, cfg);
    };
    curves.push_back({spacings::estimator_name(estimator), m, alpha, grid,
                      empirical_influence(fn, base, grid)});
  }
  return curves;
}

MCReport eif_report(const std::vector<EIFCurve>& curves) {
  MCReport report{"eif", 0, 0, 1, 0.0, {}};
  for (const auto& c : curves) {
    for (std::size_t i = 0; i < c.r.size(); ++i) {
      Cell cell;
      cell.estimator = c.estimator;
      cell.model = "r=" + format_double(c.r[i]);
      cell.m = c.m;
      cell.alpha = c.alpha;
      cell.reps = 1;
      if (std::isfinite(c.eif[i]))
        cell.mean = c.eif[i];
      else
        cell.note = "undefined";
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

// ---- quantile-based estimator -------------------------------------------------

std::vector<dist::DistributionModel> quantile_default_models() {
  using M = dist::DistributionModel;
  return {M::normal(0, 1), M::exponential(1), M::govindarajulu(0, 0.75, 0.25),
          M::govindarajulu(0, 0.25, 0.75)};
}

std::vector<QuantileGridPoint> quantile_default_grid(const dist::DistributionModel& model) {
  std::vector<QuantileGridPoint> grid;
  if (model.family() == dist::Family::Govindarajulu) {
    for (std::size_t n : {50, 100, 200})
      for (double a : {0.15, 0.75}) grid.push_back({n, a});
  } else {
    for (std::size_t n : {20, 50, 100})
      for (double a : {0.5, 1.5, 2.0, 2.5, 3.0}) grid.push_back({n, a});
  }
  return grid;
}

MCReport run_quantile_table(const std::vector<dist::DistributionModel>& models,
                            const std::vector<QuantileGridPoint>& grid, std::size_t reps,
                            std::uint64_t seed, unsigned workers) {
  std::vector<std::pair<dist::DistributionModel, std::vector<QuantileGridPoint>>> plan;
  for (const auto& m : models) plan.emplace_back(m, grid);
  return run_quantile_table(plan, reps, seed, workers);
}

MCReport run_quantile_table(
    const std::vector<std::pair<dist::DistributionModel, std::vector<QuantileGridPoint>>>& plan,
    std::size_t reps, std::uint64_t seed, unsigned workers) {
  if (reps < 1) throw DomainError("reps must be >= 1");
  const Stopwatch clock;
  MCReport report{"quantile", seed, reps, resolve_workers(workers), 0.0, {}};
  for (const auto& [model, grid] : plan) {
    std::map<std::size_t, std::vector<double>> by_n;
    for (const auto& g : grid) {
      if (g.n < 2) throw DomainError("n must be >= 2");
      by_n[g.n].push_back(g.alpha);
    }
    for (const auto& [n, alphas] : by_n) {
      const std::uint64_t key = Rng::derive(seed, {hash(model.spec()), n});
      std::vector<bool> exists(alphas.size());
      for (std::size_t a = 0; a < alphas.size(); ++a)
        exists[a] = dist::tsallis_exists(model, alphas[a]);
      std::vector<std::vector<double>> values(alphas.size(), std::vector<double>(reps, kNaN));
      parallel_for(reps, workers, [&](std::size_t k) {
        Rng rng = Rng::substream(key, {k});
        const Sample s = dist::sample(model, n, rng);
        // The density estimate is shared by every alpha of this sample.
        const auto f = quantile::kde_at_order_stats(s, quantile::default_spec(s));
        for (std::size_t a = 0; a < alphas.size(); ++a)
          if (exists[a]) values[a][k] = quantile::tsallis_from_density(f, alphas[a]);
      });
      for (std::size_t a = 0; a < alphas.size(); ++a) {
        Cell c;
        c.estimator = "tq";
        c.model = model.label();
        c.n = n;
        c.alpha = alphas[a];
        c.substream = key;
        if (!exists[a]) {
          c.reps = reps;
          c.note = "true entropy does not exist";
        } else {
          apply_summary(c, values[a], dist::true_tsallis(model, alphas[a]).value);
        }
        report.cells.push_back(std::move(c));
      }
    }
  }
  report.wall_time_s = clock.seconds();
  return report;
}

}  // namespace tsallis::experiments
