#include "tsallis/distributions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/cauchy.hpp>
#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/lognormal.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/weibull.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "tsallis/errors.hpp"
#include "tsallis/numeric.hpp"

namespace tsallis::dist {

namespace bm = boost::math;

namespace {

// Densities may legitimately be infinite at a support end (Beta, Gamma with
// shape < 1); return inf there instead of throwing.
using Policy = bm::policies::policy<bm::policies::overflow_error<bm::policies::ignore_error>>;

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const std::string& msg) {
  if (!ok) throw DomainError(msg);
}

bool positive(double x) { return std::isfinite(x) && x > 0.0; }

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string join(const std::vector<double>& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += format_double(p[i]);
  }
  return out;
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::Normal: return "normal";
    case Family::Exponential: return "exp";
    case Family::Cauchy: return "cauchy";
    case Family::Gamma: return "gamma";
    case Family::Weibull: return "weibull";
    case Family::LogNormal: return "lognormal";
    case Family::Uniform01: return "uniform";
    case Family::Beta: return "beta";
    case Family::Govindarajulu: return "gov";
    case Family::Chen: return "chen";
  }
  return "?";
}

DistributionModel::DistributionModel(Family f, std::vector<double> p)
    : family_(f), params_(std::move(p)) {}

DistributionModel DistributionModel::normal(double mu, double sigma) {
  require(std::isfinite(mu), "normal: mu must be finite");
  require(positive(sigma), "normal: sigma must be > 0");
  return {Family::Normal, {mu, sigma}};
}

DistributionModel DistributionModel::exponential(double rate) {
  require(positive(rate), "exponential: rate must be > 0");
  return {Family::Exponential, {rate}};
}

DistributionModel DistributionModel::cauchy() { return {Family::Cauchy, {}}; }

DistributionModel DistributionModel::gamma(double shape) {
  require(positive(shape), "gamma: shape must be > 0");
  return {Family::Gamma, {shape}};
}

DistributionModel DistributionModel::weibull(double shape) {
  require(positive(shape), "weibull: shape must be > 0");
  return {Family::Weibull, {shape}};
}

DistributionModel DistributionModel::lognormal(double sigma) {
  require(positive(sigma), "lognormal: sigma must be > 0");
  return {Family::LogNormal, {sigma}};
}

DistributionModel DistributionModel::uniform01() { return {Family::Uniform01, {}}; }

DistributionModel DistributionModel::beta(double a, double b) {
  require(positive(a) && positive(b), "beta: shapes must be > 0");
  return {Family::Beta, {a, b}};
}

DistributionModel DistributionModel::govindarajulu(double mu, double sigma, double gamma) {
  require(std::isfinite(mu), "govindarajulu: mu must be finite");
  require(positive(sigma), "govindarajulu: sigma must be > 0");
  require(positive(gamma), "govindarajulu: gamma must be > 0");
  return {Family::Govindarajulu, {mu, sigma, gamma}};
}

DistributionModel DistributionModel::chen(double eta, double lambda) {
  require(positive(eta) && positive(lambda), "chen: eta and lambda must be > 0");
  return {Family::Chen, {eta, lambda}};
}

DistributionModel DistributionModel::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = lower(text.substr(0, colon));
  std::vector<double> p;
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      auto comma = rest.find(',', start);
      if (comma == std::string::npos) comma = rest.size();
      p.push_back(parse_double(rest.substr(start, comma - start), "distribution '" + text + "'"));
      start = comma + 1;
    }
  }
  auto arity = [&](std::size_t k) {
    if (p.size() != k)
      throw DomainError("distribution '" + text + "' expects " + std::to_string(k) +
                        " parameter(s)");
  };
  auto get = [&](std::size_t i, double dflt) { return i < p.size() ? p[i] : dflt; };

  if (name == "normal" || name == "norm" || name == "n") {
    if (p.size() > 2) arity(2);
    return normal(get(0, 0.0), get(1, 1.0));
  }
  if (name == "exp" || name == "exponential") {
    if (p.size() > 1) arity(1);
    return exponential(get(0, 1.0));
  }
  if (name == "cauchy" || name == "c") {
    arity(0);
    return cauchy();
  }
  if (name == "gamma" || name == "ga") {
    arity(1);
    return gamma(p[0]);
  }
  if (name == "weibull" || name == "we") {
    arity(1);
    return weibull(p[0]);
  }
  if (name == "lognormal" || name == "ln") {
    arity(1);
    return lognormal(p[0]);
  }
  if (name == "uniform" || name == "u") {
    arity(0);
    return uniform01();
  }
  if (name == "beta") {
    arity(2);
    return beta(p[0], p[1]);
  }
  if (name == "gov" || name == "govindarajulu") {
    arity(3);
    return govindarajulu(p[0], p[1], p[2]);
  }
  if (name == "chen") {
    arity(2);
    return chen(p[0], p[1]);
  }
  throw DomainError("unknown distribution family '" + name + "'");
}

std::string DistributionModel::spec() const {
  std::string s = family_name(family_);
  if (!params_.empty()) s += ":" + join(params_);
  return s;
}

std::string DistributionModel::label() const {
  switch (family_) {
    case Family::Normal: return "N(" + join(params_) + ")";
    case Family::Exponential: return "Exp(" + join(params_) + ")";
    case Family::Cauchy: return "C(0,1)";
    case Family::Gamma: return "GA(" + join(params_) + ")";
    case Family::Weibull: return "WE(" + join(params_) + ")";
    case Family::LogNormal: return "LN(" + join(params_) + ")";
    case Family::Uniform01: return "U(0,1)";
    case Family::Beta: return "B(" + join(params_) + ")";
    case Family::Govindarajulu: return "Gov(" + join(params_) + ")";
    case Family::Chen: return "Chen(" + join(params_) + ")";
  }
  return spec();
}

double DistributionModel::support_lower() const {
  switch (family_) {
    case Family::Normal:
    case Family::Cauchy: return -kInf;
    case Family::Govindarajulu: return params_[0];
    default: return 0.0;
  }
}

double DistributionModel::support_upper() const {
  switch (family_) {
    case Family::Uniform01:
    case Family::Beta: return 1.0;
    case Family::Govindarajulu: return params_[0] + params_[1];
    default: return kInf;
  }
}

double DistributionModel::gov_q(double w) const {
  const double sigma = params_[1], g = params_[2];
  return sigma * g * (g + 1.0) * std::pow(w, g - 1.0) * (1.0 - w);
}

double DistributionModel::gov_cdf(double x) const {
  const double lo_x = support_lower(), hi_x = support_upper();
  if (x <= lo_x) return 0.0;
  if (x >= hi_x) return 1.0;
  // Q is strictly increasing on [0, 1]; bisect on w until the bracket
  // cannot shrink any further in double precision.
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (quantile(mid) < x)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double DistributionModel::pdf(double x) const {
  if (std::isnan(x)) return x;
  if (x < support_lower() || x > support_upper()) return 0.0;
  const auto& p = params_;
  switch (family_) {
    case Family::Normal:
      return bm::pdf(bm::normal_distribution<double, Policy>(p[0], p[1]), x);
    case Family::Exponential: return p[0] * std::exp(-p[0] * x);
    case Family::Cauchy: return bm::pdf(bm::cauchy_distribution<double, Policy>(0.0, 1.0), x);
    case Family::Gamma:
      if (x == 0.0) return p[0] < 1.0 ? kInf : (p[0] == 1.0 ? 1.0 : 0.0);
      return bm::pdf(bm::gamma_distribution<double, Policy>(p[0], 1.0), x);
    case Family::Weibull:
      if (x == 0.0) return p[0] < 1.0 ? kInf : (p[0] == 1.0 ? 1.0 : 0.0);
      return bm::pdf(bm::weibull_distribution<double, Policy>(p[0], 1.0), x);
    case Family::LogNormal:
      if (x == 0.0) return 0.0;
      return bm::pdf(bm::lognormal_distribution<double, Policy>(0.0, p[0]), x);
    case Family::Uniform01: return 1.0;
    case Family::Beta:
      if (x == 0.0) return p[0] < 1.0 ? kInf : (p[0] == 1.0 ? p[1] : 0.0);
      if (x == 1.0) return p[1] < 1.0 ? kInf : (p[1] == 1.0 ? p[0] : 0.0);
      return bm::pdf(bm::beta_distribution<double, Policy>(p[0], p[1]), x);
    case Family::Govindarajulu: {
      const double w = gov_cdf(x);
      if (w <= 0.0 || w >= 1.0) return p[2] < 1.0 && w <= 0.0 ? 0.0 : kInf;
      return 1.0 / gov_q(w);
    }
    case Family::Chen: {
      const double eta = p[0], lam = p[1];
      const double xl = std::pow(x, lam);
      return eta * lam * std::pow(x, lam - 1.0) * std::exp(xl + eta * (1.0 - std::exp(xl)));
    }
  }
  return 0.0;
}

double DistributionModel::cdf(double x) const {
  if (std::isnan(x)) return x;
  if (x <= support_lower()) return 0.0;
  if (x >= support_upper()) return 1.0;
  const auto& p = params_;
  switch (family_) {
    case Family::Normal: return bm::cdf(bm::normal_distribution<double, Policy>(p[0], p[1]), x);
    case Family::Exponential: return -std::expm1(-p[0] * x);
    case Family::Cauchy: return bm::cdf(bm::cauchy_distribution<double, Policy>(0.0, 1.0), x);
    case Family::Gamma: return bm::cdf(bm::gamma_distribution<double, Policy>(p[0], 1.0), x);
    case Family::Weibull: return -std::expm1(-std::pow(x, p[0]));
    case Family::LogNormal:
      return bm::cdf(bm::lognormal_distribution<double, Policy>(0.0, p[0]), x);
    case Family::Uniform01: return x;
    case Family::Beta: return bm::cdf(bm::beta_distribution<double, Policy>(p[0], p[1]), x);
    case Family::Govindarajulu: return gov_cdf(x);
    case Family::Chen:
      // 1 - exp(eta (1 - exp(x^lambda)))
      return -std::expm1(-p[0] * std::expm1(std::pow(x, p[1])));
  }
  return 0.0;
}

double DistributionModel::quantile(double w) const {
  if (!(w > 0.0 && w < 1.0)) {
    // Q(1) is finite for Govindarajulu and is used by its definition.
    if (family_ == Family::Govindarajulu && (w == 0.0 || w == 1.0))
      return w == 0.0 ? params_[0] : params_[0] + params_[1];
    throw DomainError("quantile: w must lie in (0, 1)");
  }
  const auto& p = params_;
  switch (family_) {
    case Family::Normal:
      return bm::quantile(bm::normal_distribution<double, Policy>(p[0], p[1]), w);
    case Family::Exponential: return -std::log1p(-w) / p[0];
    case Family::Cauchy: return std::tan(std::numbers::pi * (w - 0.5));
    case Family::Gamma: return bm::quantile(bm::gamma_distribution<double, Policy>(p[0], 1.0), w);
    case Family::Weibull: return std::pow(-std::log1p(-w), 1.0 / p[0]);
    case Family::LogNormal:
      return bm::quantile(bm::lognormal_distribution<double, Policy>(0.0, p[0]), w);
    case Family::Uniform01: return w;
    case Family::Beta: return bm::quantile(bm::beta_distribution<double, Policy>(p[0], p[1]), w);
    case Family::Govindarajulu: {
      const double g = p[2];
      return p[0] + p[1] * ((g + 1.0) * std::pow(w, g) - g * std::pow(w, g + 1.0));
    }
    case Family::Chen: return std::pow(std::log1p(-std::log1p(-w) / p[0]), 1.0 / p[1]);
  }
  return 0.0;
}

double DistributionModel::quantile_complement(double v) const {
  if (!(v > 0.0 && v < 1.0)) throw DomainError("quantile_complement: v must lie in (0, 1)");
  const auto& p = params_;
  switch (family_) {
    case Family::Normal:
      return bm::quantile(bm::complement(bm::normal_distribution<double, Policy>(p[0], p[1]), v));
    case Family::Exponential: return -std::log(v) / p[0];
    case Family::Cauchy: return std::tan(std::numbers::pi * (0.5 - v));
    case Family::Gamma:
      return bm::quantile(bm::complement(bm::gamma_distribution<double, Policy>(p[0], 1.0), v));
    case Family::Weibull: return std::pow(-std::log(v), 1.0 / p[0]);
    case Family::LogNormal:
      return bm::quantile(
          bm::complement(bm::lognormal_distribution<double, Policy>(0.0, p[0]), v));
    case Family::Uniform01: return 1.0 - v;
    case Family::Beta:
      return bm::quantile(bm::complement(bm::beta_distribution<double, Policy>(p[0], p[1]), v));
    case Family::Govindarajulu: return quantile(1.0 - v);
    case Family::Chen: return std::pow(std::log1p(-std::log(v) / p[0]), 1.0 / p[1]);
  }
  return 0.0;
}

double DistributionModel::density_at_quantile(double w) const {
  if (family_ == Family::Govindarajulu) return 1.0 / gov_q(w);
  if (family_ == Family::Exponential) return params_[0] * (1.0 - w);
  return pdf(quantile(w));
}

double DistributionModel::density_at_upper_quantile(double v) const {
  switch (family_) {
    case Family::Govindarajulu: {
      const double sigma = params_[1], g = params_[2];
      return 1.0 / (sigma * g * (g + 1.0) * std::pow(1.0 - v, g - 1.0) * v);
    }
    case Family::Exponential: return params_[0] * v;
    // Symmetric densities: f(Q(1 - v)) = f(Q(v)).
    case Family::Normal:
    case Family::Cauchy: return pdf(quantile(v));
    default: return pdf(quantile_complement(v));
  }
}

double pdf(const DistributionModel& model, double x) { return model.pdf(x); }
double cdf(const DistributionModel& model, double x) { return model.cdf(x); }
double quantile(const DistributionModel& model, double w) { return model.quantile(w); }

std::vector<double> draw_values(const DistributionModel& model, std::size_t n, Rng& rng) {
  std::vector<double> v(n);
  for (auto& x : v) x = model.draw(rng);
  return v;
}

Sample sample(const DistributionModel& model, std::size_t n, Rng& rng) {
  if (n < 1) throw DomainError("sample: n must be >= 1");
  return Sample(draw_values(model, n, rng));
}

bool tsallis_exists(const DistributionModel& model, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) return false;
  const auto& p = model.params();
  switch (model.family()) {
    case Family::Normal:
    case Family::Exponential:
    case Family::LogNormal:
    case Family::Uniform01: return true;
    // Tails decay like x^-2, so f^alpha is integrable only for alpha > 1/2.
    case Family::Cauchy: return alpha > 0.5;
    // Near 0 the density behaves like x^(k-1).
    case Family::Gamma:
    case Family::Weibull: return alpha * (p[0] - 1.0) > -1.0;
    case Family::Chen: return alpha * (p[1] - 1.0) > -1.0;
    case Family::Beta: return alpha * (p[0] - 1.0) > -1.0 && alpha * (p[1] - 1.0) > -1.0;
    // q(w)^(1-alpha) behaves like w^((gamma-1)(1-alpha)) at 0 and
    // (1-w)^(1-alpha) at 1.
    case Family::Govindarajulu: return (p[2] - 1.0) * (1.0 - alpha) > -1.0 && alpha < 2.0;
  }
  return false;
}

double power_integral(const DistributionModel& model, double alpha) {
  if (!tsallis_exists(model, alpha))
    throw NonexistentEntropy("Tsallis entropy of order " + format_double(alpha) +
                             " does not exist for " + model.spec());
  const double e = alpha - 1.0;
  // The integral is known to converge here, so a non-finite value can only
  // come from an abscissa so close to an endpoint that Q(w) underflows onto
  // the singularity; its quadrature weight is negligible.
  auto finite_or_zero = [](double v) { return std::isfinite(v) ? v : 0.0; };
  auto lower_half = [&](double w) {
    return finite_or_zero(std::pow(model.density_at_quantile(w), e));
  };
  auto upper_half = [&](double v) {
    return finite_or_zero(std::pow(model.density_at_upper_quantile(v), e));
  };
  bm::quadrature::tanh_sinh<double> integrator;
  const double tol = 1e-13;
  const double a = integrator.integrate(lower_half, 0.0, 0.5, tol);
  const double b = integrator.integrate(upper_half, 0.0, 0.5, tol);
  const double total = a + b;
  if (!std::isfinite(total))
    throw NonexistentEntropy("quadrature of the Tsallis integral did not converge for " +
                             model.spec());
  return total;
}

TrueEntropyValue true_tsallis_quadrature(const DistributionModel& model, double alpha) {
  if (alpha == 1.0) throw DomainError("true_tsallis: alpha must differ from 1");
  return {alpha, (1.0 - power_integral(model, alpha)) / (alpha - 1.0), Provenance::Quadrature};
}

TrueEntropyValue true_tsallis(const DistributionModel& model, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("true_tsallis: alpha must be > 0");
  if (alpha == 1.0) throw DomainError("true_tsallis: alpha must differ from 1");
  const auto& p = model.params();
  const double e = alpha - 1.0;
  switch (model.family()) {
    case Family::Normal: {
      const double s2 = p[1] * p[1];
      const double integral =
          std::pow(2.0 * std::numbers::pi * s2, -e / 2.0) / std::sqrt(alpha);
      return {alpha, (1.0 - integral) / e, Provenance::ClosedForm};
    }
    case Family::Exponential:
      return {alpha, (1.0 - std::pow(p[0], e) / alpha) / e, Provenance::ClosedForm};
    case Family::Uniform01: return {alpha, 0.0, Provenance::ClosedForm};
    default: return true_tsallis_quadrature(model, alpha);
  }
}

double true_shannon(const DistributionModel& model) {
  const auto& p = model.params();
  switch (model.family()) {
    case Family::Normal:
      return 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * p[1] * p[1]);
    case Family::Exponential: return 1.0 - std::log(p[0]);
    case Family::Uniform01: return 0.0;
    default: break;
  }
  bm::quadrature::tanh_sinh<double> integrator;
  auto lower_half = [&](double w) { return -std::log(model.density_at_quantile(w)); };
  auto upper_half = [&](double v) { return -std::log(model.density_at_upper_quantile(v)); };
  const double total = integrator.integrate(lower_half, 0.0, 0.5, 1e-13) +
                       integrator.integrate(upper_half, 0.0, 0.5, 1e-13);
  if (!std::isfinite(total))
    throw NonexistentEntropy("Shannon entropy does not exist for " + model.spec());
  return total;
}

double renyi_from_tsallis(double t, double alpha) {
  if (alpha == 1.0) return t;
  const double arg = -(alpha - 1.0) * t;
  if (!(arg > -1.0)) throw DomainError("renyi_from_tsallis: 1 - (alpha-1) t must be > 0");
  return std::log1p(arg) / (1.0 - alpha);
}

}  // namespace tsallis::dist
