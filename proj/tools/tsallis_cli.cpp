// Command-line front end: estimators, goodness-of-fit tests, PC-II sample
// generation, influence curves, Monte Carlo tables and the dataset registry.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tsallis/censoring.hpp"
#include "tsallis/datasets.hpp"
#include "tsallis/distributions.hpp"
#include "tsallis/divergence.hpp"
#include "tsallis/errors.hpp"
#include "tsallis/experiments.hpp"
#include "tsallis/inference.hpp"
#include "tsallis/numeric.hpp"
#include "tsallis/quantile.hpp"
#include "tsallis/spacings.hpp"

namespace {

using namespace tsallis;
using nlohmann::json;

struct Output {
  std::string format = "csv";
  std::string path;
};

void add_output(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", out.path, "write to file instead of stdout");
}

// Writes `text` to the requested destination.
void emit(const Output& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + out.path);
  f << text;
  if (!f) throw std::runtime_error("failed writing " + out.path);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// A flat table rendered as CSV or as a JSON array of objects.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<json>> rows;

  std::string render(const std::string& format) const {
    if (format == "json") {
      json arr = json::array();
      for (const auto& r : rows) {
        json o = json::object();
        for (std::size_t i = 0; i < header.size(); ++i)
          if (!r[i].is_null()) o[header[i]] = r[i];
        arr.push_back(std::move(o));
      }
      return arr.dump(2) + "\n";
    }
    std::ostringstream s;
    for (std::size_t i = 0; i < header.size(); ++i) s << (i ? "," : "") << header[i];
    s << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s << ',';
        const json& v = r[i];
        if (v.is_number_float())
          s << format_double(v.get<double>());
        else if (v.is_string())
          s << csv_field(v.get<std::string>());
        else if (v.is_boolean())
          s << (v.get<bool>() ? 1 : 0);
        else if (!v.is_null())
          s << v.dump();
      }
      s << '\n';
    }
    return s.str();
  }
};

std::string render_report(const experiments::MCReport& r, const std::string& format) {
  if (format == "json") return experiments::to_json(r).dump(2) + "\n";
  std::ostringstream s;
  experiments::write_csv(s, r);
  return s.str();
}

Sample load_sample(const std::string& source) { return Sample(experiments::load_values(source)); }

std::vector<dist::DistributionModel> parse_models(const std::vector<std::string>& specs) {
  std::vector<dist::DistributionModel> out;
  for (const auto& s : specs) out.push_back(dist::DistributionModel::parse(s));
  return out;
}

// ---- estimate ---------------------------------------------------------------

struct EstimateArgs {
  std::string data, estimator = "tv", window = "sqrt";
  double alpha = 2.0;
  std::optional<int> m;
  bool jitter = false;
  Output out;
};

void run_estimate(const EstimateArgs& a) {
  Sample s = load_sample(a.data);
  if (a.jitter) s = spacings::jitter_ties(s);
  double value;
  json m_col = nullptr;
  if (a.estimator == "tq" || a.estimator == "tqs") {
    const auto spec = quantile::default_spec(s);
    value = a.estimator == "tq" ? quantile::tsallis_quantile(s, spec, a.alpha)
                                : quantile::tsallis_quantile_soni(s, spec, a.alpha);
  } else {
    const auto est = spacings::parse_estimator(a.estimator);
    const int m = a.m ? *a.m
                      : spacings::window_default(s.size(), a.window == "third"
                                                               ? spacings::WindowRule::Third
                                                               : spacings::WindowRule::Sqrt);
    value = spacings::estimate(est, s, {m, a.alpha});
    m_col = m;
  }
  Table t{{"estimator", "n", "m", "alpha", "value"}, {}};
  t.rows.push_back({a.estimator, s.size(), m_col, a.alpha, value});
  emit(a.out, t.render(a.out.format));
}

// ---- divergence ---------------------------------------------------------------

struct DivergenceArgs {
  std::string data, family = "normal";
  double alpha = 2.0;
  std::optional<int> m;
  Output out;
};

void run_divergence(const DivergenceArgs& a) {
  const Sample s = load_sample(a.data);
  const auto fit = a.family == "normal" ? divergence::FittedFamily::normal_mle(s)
                                        : divergence::FittedFamily::exponential_mle(s);
  const int m = a.m ? *a.m : spacings::window_default(s.size(), spacings::WindowRule::Sqrt);
  const double t = divergence::tsallis_divergence(s, fit, m, a.alpha);
  Table tab{{"family", "n", "m", "alpha", "theta", "statistic"}, {}};
  std::string theta;
  for (std::size_t i = 0; i < fit.theta().size(); ++i)
    theta += (i ? ";" : "") + format_double(fit.theta()[i]);
  tab.rows.push_back({a.family, s.size(), m, a.alpha, theta, t});
  emit(a.out, tab.render(a.out.format));
}

// ---- gof ------------------------------------------------------------------------

struct GofArgs {
  std::string data, statistic = "tsallis", scheme;
  std::optional<std::size_t> n;
  double alpha = 2.0, level = 0.05;
  std::optional<int> m;
  std::optional<std::size_t> reps;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string cache_dir;
  Output out;
};

Table test_table(const std::string& test, const std::string& statistic, std::size_t n, int m,
                 double alpha, const inference::TestResult& r) {
  Table t{{"test", "statistic_id", "n", "m", "alpha", "statistic", "p_value", "critical_value",
           "level", "tail", "reject", "reps", "estimate"},
          {}};
  t.rows.push_back({test, statistic, n, m, alpha, r.statistic, r.p_value, r.critical_value,
                    r.level, inference::tail_name(r.tail), r.reject, r.reps, r.estimate});
  return t;
}

void run_gof(const std::string& test, const GofArgs& a) {
  inference::TestOptions opt;
  opt.workers = a.workers;
  if (!a.cache_dir.empty()) opt.cache_dir = a.cache_dir;

  if (test == "exp-pc2") {
    // Registry datasets carry their own scheme; files need --scheme.
    std::optional<censoring::CensoringScheme> scheme;
    std::vector<double> times;
    if (const auto* d = experiments::find_dataset(a.data); d && d->scheme) {
      scheme = d->scheme;
      times = d->values;
    } else {
      times = experiments::load_values(a.data);
    }
    if (!a.scheme.empty())
      scheme = a.n ? censoring::CensoringScheme::parse(a.scheme, *a.n)
                   : censoring::CensoringScheme::parse(a.scheme);
    if (!scheme) throw DomainError("exp-pc2 needs --scheme for data without a registered scheme");
    const censoring::PC2Sample s(times, *scheme);
    const int m = a.m ? *a.m : censoring::default_window(scheme->r());
    const auto r = inference::pc2_exponentiality_test(
        s, a.alpha, m, a.reps.value_or(inference::kDefaultRepsPC2), a.seed, a.level, opt);
    auto t = test_table(test, "exp-pc2-tsallis", scheme->n(), m, a.alpha, r);
    t.header.push_back("scheme");
    t.rows.back().push_back(scheme->to_string());
    emit(a.out, t.render(a.out.format));
    return;
  }

  const Sample s = load_sample(a.data);
  const int m = a.m ? *a.m : spacings::window_default(s.size(), spacings::WindowRule::Sqrt);
  const std::size_t reps = a.reps.value_or(inference::kDefaultReps);
  inference::NullConfig cfg;
  cfg.n = s.size();
  cfg.m = m;
  cfg.alpha = a.alpha;
  if (test == "normal") {
    if (a.statistic == "tsallis")
      cfg.statistic = inference::StatisticId::NormalityTsallis;
    else if (a.statistic == "ks")
      cfg.statistic = inference::StatisticId::NormalityKS;
    else
      throw DomainError("normal test statistic must be tsallis or ks");
  } else {
    if (a.statistic == "tsallis")
      cfg.statistic = inference::StatisticId::ExponentialityTsallis;
    else if (a.statistic == "klmn")
      cfg.statistic = inference::StatisticId::KLmn;
    else if (a.statistic == "cre")
      cfg.statistic = inference::StatisticId::BaratpourRadT;
    else
      throw DomainError("exp test statistic must be tsallis, klmn or cre");
  }
  inference::TestResult r;
  if (cfg.statistic == inference::StatisticId::NormalityTsallis)
    r = inference::normality_test(s, a.alpha, m, reps, a.seed, a.level, opt);
  else if (cfg.statistic == inference::StatisticId::ExponentialityTsallis)
    r = inference::exponentiality_test(s, a.alpha, m, reps, a.seed, a.level, opt);
  else
    r = inference::run_test(cfg, s, reps, a.seed, a.level, opt);
  emit(a.out, test_table(test, inference::statistic_name(cfg.statistic), s.size(), m, a.alpha, r)
                  .render(a.out.format));
}

// ---- pc2 gen ---------------------------------------------------------------------

struct Pc2GenArgs {
  std::string scheme, dist = "exp:1";
  std::optional<std::size_t> n;
  std::uint64_t seed = 0;
  Output out;
};

void run_pc2_gen(const Pc2GenArgs& a) {
  const auto scheme = a.n ? censoring::CensoringScheme::parse(a.scheme, *a.n)
                          : censoring::CensoringScheme::parse(a.scheme);
  const auto model = dist::DistributionModel::parse(a.dist);
  Rng rng(a.seed);
  const auto s = censoring::generate_pc2(model, scheme, rng);
  Table t{{"i", "time", "removal"}, {}};
  for (std::size_t i = 0; i < s.r(); ++i)
    t.rows.push_back({i + 1, s.times()[i], scheme.removals()[i]});
  emit(a.out, t.render(a.out.format));
}

// ---- eif ---------------------------------------------------------------------------

struct EifArgs {
  std::string estimator = "tv";
  double mu = 0.0, sigma = 0.25, alpha = 2.0;
  std::size_t n = 100, points = 161;
  std::vector<int> m = {5, 10, 15, 20};
  Output out;
};

void run_eif_cmd(const EifArgs& a) {
  const auto grid = experiments::eif_grid(a.mu, a.sigma, a.points);
  const auto curves = experiments::run_eif(spacings::parse_estimator(a.estimator), a.mu,
                                           a.sigma, a.n, a.m, a.alpha, grid);
  Table t{{"estimator", "n", "m", "alpha", "r", "eif"}, {}};
  for (const auto& c : curves)
    for (std::size_t i = 0; i < c.r.size(); ++i)
      t.rows.push_back({c.estimator, a.n, c.m, c.alpha, c.r[i],
                        std::isfinite(c.eif[i]) ? json(c.eif[i]) : json("nan")});
  emit(a.out, t.render(a.out.format));
}

// ---- table -------------------------------------------------------------------------

struct TableArgs {
  std::size_t reps = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::vector<std::string> models, estimators, schemes;
  std::vector<std::size_t> n;
  std::vector<int> m;
  std::vector<double> alpha;
  std::string test = "normality";
  double level = 0.0;
  std::size_t null_reps = 0;
  std::size_t scheme_n = 0;
  Output out;
};

experiments::MCReport run_table(const std::string& kind, const TableArgs& a) {
  using namespace experiments;
  if (kind == "bias-mse") {
    std::vector<spacings::Estimator> est;
    for (const auto& e : a.estimators.empty() ? std::vector<std::string>{"tv", "th", "te", "tw"}
                                              : a.estimators)
      est.push_back(spacings::parse_estimator(e));
    const auto models = a.models.empty() ? parse_models({"normal:0,1", "exp:1"})
                                         : parse_models(a.models);
    std::vector<GridPoint> grid;
    if (a.n.empty() && a.m.empty() && a.alpha.empty()) {
      grid = bias_mse_default_grid();
    } else {
      const auto ns = a.n.empty() ? std::vector<std::size_t>{20, 50, 100} : a.n;
      const auto alphas =
          a.alpha.empty() ? std::vector<double>{0.5, 1.0, 1.5, 2.0, 2.5, 3.0} : a.alpha;
      for (std::size_t n : ns) {
        std::vector<int> ms = a.m;
        if (ms.empty())
          ms = {spacings::window_default(n, spacings::WindowRule::Sqrt),
                spacings::window_default(n, spacings::WindowRule::Third)};
        for (int m : ms)
          for (double al : alphas) grid.push_back({n, m, al});
      }
    }
    return run_bias_mse(est, models, grid, a.reps ? a.reps : 10000, a.seed, a.workers);
  }
  if (kind == "pc2") {
    std::vector<censoring::CensoringScheme> schemes;
    if (a.schemes.empty()) {
      schemes = pc2_default_schemes();
    } else {
      for (const auto& s : a.schemes)
        schemes.push_back(a.scheme_n ? censoring::CensoringScheme::parse(s, a.scheme_n)
                                     : censoring::CensoringScheme::parse(s));
    }
    const auto models = a.models.empty() ? parse_models({"exp:1", "normal:0,1"})
                                         : parse_models(a.models);
    const auto alphas = a.alpha.empty() ? std::vector<double>{1.1, 1.5, 2.0} : a.alpha;
    return run_pc2_table(schemes, models, alphas, a.reps ? a.reps : 5000, a.seed, a.workers);
  }
  if (kind == "power") {
    const auto fam = parse_test_family(a.test);
    const auto alts = a.models.empty() ? default_alternatives(fam) : parse_models(a.models);
    std::vector<PowerGridPoint> grid;
    if (fam == TestFamily::PC2Exponentiality) {
      if (a.schemes.empty()) {
        grid = default_power_grid(fam);
      } else {
        for (const auto& s : a.schemes) {
          auto sc = a.scheme_n ? censoring::CensoringScheme::parse(s, a.scheme_n)
                               : censoring::CensoringScheme::parse(s);
          const int m = a.m.empty() ? censoring::default_window(sc.r()) : a.m.front();
          for (double al : a.alpha.empty() ? std::vector<double>{2.0} : a.alpha)
            grid.push_back({sc.n(), m, al, sc});
        }
      }
    } else if (a.n.empty() && a.alpha.empty() && a.m.empty()) {
      grid = default_power_grid(fam);
    } else {
      const auto ns = a.n.empty() ? std::vector<std::size_t>{10, 15, 20, 25} : a.n;
      if (!a.m.empty() && a.m.size() != ns.size() && a.m.size() != 1)
        throw DomainError("--m takes one value or one per --n value");
      const auto alphas = a.alpha.empty() ? std::vector<double>{2.0} : a.alpha;
      for (std::size_t i = 0; i < ns.size(); ++i) {
        const int m = a.m.empty()   ? spacings::window_default(ns[i], spacings::WindowRule::Sqrt)
                      : a.m.size() == 1 ? a.m.front()
                                        : a.m[i];
        for (double al : alphas) grid.push_back({ns[i], m, al, std::nullopt});
      }
    }
    const double level =
        a.level > 0.0 ? a.level : (fam == TestFamily::PC2Exponentiality ? 0.10 : 0.05);
    const std::size_t reps = a.reps ? a.reps
                                    : (fam == TestFamily::PC2Exponentiality
                                           ? inference::kDefaultRepsPC2
                                           : inference::kDefaultReps);
    return run_power_table(fam, alts, grid, reps, a.seed, level, a.workers, a.null_reps);
  }
  // quantile
  const std::size_t reps = a.reps ? a.reps : 5000;
  if (a.models.empty() && a.n.empty() && a.alpha.empty()) {
    std::vector<std::pair<dist::DistributionModel, std::vector<QuantileGridPoint>>> plan;
    for (const auto& model : quantile_default_models())
      plan.emplace_back(model, quantile_default_grid(model));
    return run_quantile_table(plan, reps, a.seed, a.workers);
  }
  const auto models = a.models.empty() ? parse_models({"normal:0,1", "exp:1"})
                                       : parse_models(a.models);
  std::vector<std::pair<dist::DistributionModel, std::vector<QuantileGridPoint>>> plan;
  for (const auto& model : models) {
    std::vector<QuantileGridPoint> grid;
    const auto def = quantile_default_grid(model);
    std::vector<std::size_t> ns = a.n;
    std::vector<double> alphas = a.alpha;
    if (ns.empty())
      for (const auto& g : def)
        if (std::find(ns.begin(), ns.end(), g.n) == ns.end()) ns.push_back(g.n);
    if (alphas.empty())
      for (const auto& g : def)
        if (std::find(alphas.begin(), alphas.end(), g.alpha) == alphas.end())
          alphas.push_back(g.alpha);
    for (std::size_t n : ns)
      for (double al : alphas) grid.push_back({n, al});
    plan.emplace_back(model, grid);
  }
  return run_quantile_table(plan, reps, a.seed, a.workers);
}

// ---- dataset ----------------------------------------------------------------------------

void run_dataset_list(const Output& out) {
  Table t{{"name", "n", "scheme", "checksum", "description"}, {}};
  for (const auto& d : experiments::dataset_registry()) {
    std::ostringstream cs;
    cs << std::hex << experiments::dataset_checksum(d);
    t.rows.push_back({d.name, d.scheme ? d.scheme->n() : d.values.size(),
                      d.scheme ? json(d.scheme->to_string()) : json(""), cs.str(),
                      d.description});
  }
  emit(out, t.render(out.format));
}

void run_dataset_show(const std::string& name, const Output& out) {
  const auto* d = experiments::find_dataset(name);
  if (!d) throw DomainError("unknown dataset '" + name + "' (see `dataset list`)");
  Table t{{"i", "value", "removal"}, {}};
  for (std::size_t i = 0; i < d->values.size(); ++i)
    t.rows.push_back({i + 1, d->values[i], d->scheme ? json(d->scheme->removals()[i]) : json("")});
  emit(out, t.render(out.format));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tsallis entropy estimation and entropy-based goodness-of-fit tests"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tsallis 1.0.0");

  // estimate
  EstimateArgs est;
  auto* c_est = app.add_subcommand("estimate", "estimate Tsallis entropy of a sample");
  c_est->add_option("--data", est.data, "file, registry name or inline:v1,v2,...")->required();
  c_est->add_option("--estimator", est.estimator, "tv, th, te, tw, tq or tqs")
      ->check(CLI::IsMember({"tv", "th", "te", "tw", "ta", "tq", "tqs"}));
  c_est->add_option("--alpha", est.alpha, "entropy order (1 = Shannon)");
  c_est->add_option("--m", est.m, "window size (default from --window)");
  c_est->add_option("--window", est.window, "default window rule")
      ->check(CLI::IsMember({"sqrt", "third"}));
  c_est->add_flag("--jitter-ties", est.jitter, "break exact ties before estimating");
  add_output(c_est, est.out);

  // divergence
  DivergenceArgs dv;
  auto* c_div = app.add_subcommand("divergence", "Tsallis divergence from a fitted family");
  c_div->add_option("--data", dv.data)->required();
  c_div->add_option("--family", dv.family)->check(CLI::IsMember({"normal", "exp"}));
  c_div->add_option("--alpha", dv.alpha);
  c_div->add_option("--m", dv.m);
  add_output(c_div, dv.out);

  // gof
  GofArgs gof;
  std::string gof_test;
  auto* c_gof = app.add_subcommand("gof", "goodness-of-fit test with simulated null");
  c_gof->add_option("test", gof_test, "normal, exp or exp-pc2")
      ->required()
      ->check(CLI::IsMember({"normal", "exp", "exp-pc2"}));
  c_gof->add_option("--data", gof.data)->required();
  c_gof->add_option("--statistic", gof.statistic, "tsallis, ks (normal), klmn or cre (exp)");
  c_gof->add_option("--scheme", gof.scheme, "censoring scheme for exp-pc2, e.g. 9,0*9");
  c_gof->add_option("--n", gof.n, "units on test for exp-pc2");
  c_gof->add_option("--alpha", gof.alpha);
  c_gof->add_option("--m", gof.m);
  c_gof->add_option("--level", gof.level)->check(CLI::Range(0.0, 1.0));
  c_gof->add_option("--reps", gof.reps, "null replications (>= 1000)");
  c_gof->add_option("--seed", gof.seed)->required();
  c_gof->add_option("--workers", gof.workers, "threads (0 = all cores)");
  c_gof->add_option("--cache-dir", gof.cache_dir, "directory for cached null distributions");
  add_output(c_gof, gof.out);

  // pc2 gen
  Pc2GenArgs pg;
  auto* c_pc2 = app.add_subcommand("pc2", "progressive type-II censoring tools");
  c_pc2->require_subcommand(1);
  auto* c_gen = c_pc2->add_subcommand("gen", "generate a censored sample");
  c_gen->add_option("--scheme", pg.scheme)->required();
  c_gen->add_option("--n", pg.n);
  c_gen->add_option("--dist", pg.dist, "distribution spec, e.g. exp:1");
  c_gen->add_option("--seed", pg.seed)->required();
  add_output(c_gen, pg.out);

  // eif
  EifArgs ea;
  auto* c_eif = app.add_subcommand("eif", "empirical influence function on normal scores");
  c_eif->add_option("--estimator", ea.estimator)
      ->check(CLI::IsMember({"tv", "th", "te", "tw", "ta"}));
  c_eif->add_option("--mu", ea.mu);
  c_eif->add_option("--sigma", ea.sigma);
  c_eif->add_option("--n", ea.n);
  c_eif->add_option("--m", ea.m)->delimiter(',');
  c_eif->add_option("--alpha", ea.alpha);
  c_eif->add_option("--points", ea.points, "grid points on [mu - 4 sigma, mu + 4 sigma]");
  add_output(c_eif, ea.out);

  // table
  TableArgs ta;
  std::string table_kind;
  auto* c_tab = app.add_subcommand("table", "Monte Carlo tables");
  c_tab->add_option("kind", table_kind, "bias-mse, pc2, power or quantile")
      ->required()
      ->check(CLI::IsMember({"bias-mse", "pc2", "power", "quantile"}));
  c_tab->add_option("--reps", ta.reps);
  c_tab->add_option("--seed", ta.seed)->required();
  c_tab->add_option("--workers", ta.workers, "threads (0 = all cores)");
  c_tab->add_option("--model", ta.models, "model or alternative spec (repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  c_tab->add_option("--estimators", ta.estimators)->delimiter(',');
  c_tab->add_option("--scheme", ta.schemes, "censoring scheme (repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  c_tab->add_option("--scheme-n", ta.scheme_n, "units on test for --scheme");
  c_tab->add_option("--n", ta.n)->delimiter(',');
  c_tab->add_option("--m", ta.m)->delimiter(',');
  c_tab->add_option("--alpha", ta.alpha)->delimiter(',');
  c_tab->add_option("--test", ta.test, "power: normality, exponentiality or exp-pc2");
  c_tab->add_option("--level", ta.level);
  c_tab->add_option("--null-reps", ta.null_reps);
  add_output(c_tab, ta.out);

  // dataset
  Output ds_out;
  std::string ds_name;
  auto* c_ds = app.add_subcommand("dataset", "built-in datasets");
  c_ds->require_subcommand(1);
  auto* c_list = c_ds->add_subcommand("list", "list datasets");
  add_output(c_list, ds_out);
  auto* c_show = c_ds->add_subcommand("show", "print a dataset");
  c_show->add_option("name", ds_name)->required();
  add_output(c_show, ds_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*c_est) {
      run_estimate(est);
    } else if (*c_div) {
      run_divergence(dv);
    } else if (*c_gof) {
      run_gof(gof_test, gof);
    } else if (*c_gen) {
      run_pc2_gen(pg);
    } else if (*c_eif) {
      run_eif_cmd(ea);
    } else if (*c_tab) {
      emit(ta.out, render_report(run_table(table_kind, ta), ta.out.format));
    } else if (*c_list) {
      run_dataset_list(ds_out);
    } else if (*c_show) {
      run_dataset_show(ds_name, ds_out);
    }
  } catch (const tsallis::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
