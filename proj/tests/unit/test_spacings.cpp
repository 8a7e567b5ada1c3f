#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "tsallis/distributions.hpp"
#include "tsallis/errors.hpp"
#include "tsallis/spacings.hpp"

using namespace tsallis;
using namespace tsallis::spacings;

namespace {

const Estimator kAll[] = {Estimator::V, Estimator::H, Estimator::E, Estimator::W};

std::vector<double> vec(const Sample& s) { return {s.values().begin(), s.values().end()}; }

double oracle_for(Estimator e, const std::vector<double>& x, int m, double a) {
  switch (e) {
    case Estimator::V: return oracle::tv(x, m, a);
    case Estimator::H: return oracle::th(x, m, a);
    case Estimator::E: return oracle::te(x, m, a);
    case Estimator::W: return oracle::tw(x, m, a);
  }
  return 0;
}

Sample draw(const dist::DistributionModel& m, std::size_t n, std::uint64_t seed) {
  Rng r(seed);
  return dist::sample(m, n, r);
}

}  // namespace

TEST_CASE("window rules", "[spacings]") {
  REQUIRE(window_default(20, WindowRule::Sqrt) == 4);
  REQUIRE(window_default(50, WindowRule::Sqrt) == 7);
  REQUIRE(window_default(100, WindowRule::Sqrt) == 10);
  REQUIRE(window_default(20, WindowRule::Third) == 6);
  REQUIRE(window_default(50, WindowRule::Third) == 16);
  REQUIRE(window_default(100, WindowRule::Third) == 33);
  REQUIRE(window_default(4, WindowRule::Sqrt) == 1);
  REQUIRE_THROWS_AS(window_default(3, WindowRule::Sqrt), DomainError);
}

TEST_CASE("weights follow the three-branch definitions", "[spacings]") {
  for (long n : {8L, 20L})
    for (int m : {1, 2, 3}) {
      for (long i = 1; i <= n; ++i) {
        const double c = weight(WeightScheme::Ebrahimi_C, i, n, m);
        const double w = weight(WeightScheme::Minimal_W, i, n, m);
        REQUIRE(c == Catch::Approx(static_cast<double>(oracle::c_weight(i, n, m))));
        REQUIRE(w == static_cast<double>(oracle::w_weight(i, n, m)));
        REQUIRE(c >= 1.0);
        REQUIRE(c <= 2.0);
        REQUIRE(w <= c);
        if (m == 1) REQUIRE(c == w);
      }
    }
}

TEST_CASE("hand-computed values on (1,2,3,4)", "[spacings]") {
  const Sample s({1, 2, 3, 4});
  REQUIRE(shannon_vasicek(s, 1) == Catch::Approx(6 * std::log(2.0) / 4).epsilon(1e-14));
  REQUIRE(tsallis_v(s, {1, 2.0}) == Catch::Approx(0.625).epsilon(1e-14));
  REQUIRE(tsallis_h(s, {1, 2.0}) == Catch::Approx(0.8).epsilon(1e-14));
  REQUIRE(tsallis_h(s, {1, 1.0}) == Catch::Approx(std::log(5.0)).epsilon(1e-14));
  REQUIRE(tsallis_e(s, {1, 2.0}) == Catch::Approx(0.75).epsilon(1e-14));
  REQUIRE(tsallis_w(s, {1, 2.0}) == Catch::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("estimators agree with the long-double oracle", "[spacings]") {
  const auto models = {dist::DistributionModel::normal(0, 1), dist::DistributionModel::exponential(1),
                       dist::DistributionModel::uniform01()};
  std::uint64_t seed = 10;
  for (const auto& model : models)
    for (std::size_t n : {10u, 25u, 60u}) {
      const Sample s = draw(model, n, ++seed);
      const auto x = vec(s);
      for (int m : {1, 3, static_cast<int>(n / 2 - 1)})
        for (double a : {0.3, 0.5, 1.0, 1.5, 2.0, 3.0})
          for (auto e : kAll) {
            CAPTURE(model.spec(), n, m, a, estimator_name(e));
            REQUIRE(estimate(e, s, {m, a}) == Catch::Approx(oracle_for(e, x, m, a)).epsilon(1e-12));
          }
      REQUIRE(shannon_vasicek(s, 2) == Catch::Approx(oracle::vasicek(x, 2)).epsilon(1e-12));
    }
}

TEST_CASE("shift invariance is exact and scale covariance holds", "[spacings][property]") {
  // Shifts by powers of two keep every spacing exactly representable.
  const Sample base = draw(dist::DistributionModel::normal(0, 1), 40, 77);
  std::vector<double> shifted, scaled;
  const double b = 8.0, c = 3.7;
  for (double v : base.values()) {
    shifted.push_back(v + b);
    scaled.push_back(c * v);
  }
  const Sample sb(shifted), sc(scaled);
  for (auto e : kAll)
    for (double a : {0.5, 1.5, 2.0, 3.0}) {
      const SpacingsConfig cfg{5, a};
      CAPTURE(estimator_name(e), a);
      REQUIRE(estimate(e, sb, cfg) == Catch::Approx(estimate(e, base, cfg)).epsilon(1e-13));
      const double t = estimate(e, base, cfg);
      const double expect = (1 - std::pow(c, 1 - a) * (1 - (a - 1) * t)) / (a - 1);
      REQUIRE(estimate(e, sc, cfg) == Catch::Approx(expect).epsilon(1e-12));
    }
  // Integer data shifted by an integer: the spacings are bit-identical.
  const Sample ints({1, 4, 9, 16, 25, 36, 49, 64}), ints_b({101, 104, 109, 116, 125, 136, 149, 164});
  for (auto e : kAll) REQUIRE(estimate(e, ints, {2, 2.5}) == estimate(e, ints_b, {2, 2.5}));
}

TEST_CASE("alpha -> 1 continuity", "[spacings][property]") {
  const Sample s = draw(dist::DistributionModel::exponential(1), 30, 5);
  for (auto e : kAll) {
    const double lim = estimate(e, s, {4, 1.0});
    for (double d : {1e-5, -1e-5, 1e-7, -1e-7}) {
      CAPTURE(estimator_name(e), d);
      REQUIRE(std::fabs(estimate(e, s, {4, 1.0 + d}) - lim) < 1e-3);
    }
  }
  REQUIRE(std::fabs(tsallis_v(s, {4, 1 + 1e-7}) - shannon_vasicek(s, 4)) < 1e-4);
}

TEST_CASE("m = 1 gives identical E and W", "[spacings][property]") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Sample s = draw(dist::DistributionModel::normal(0, 1), 15, seed);
    for (double a : {0.5, 1.0, 2.0}) REQUIRE(tsallis_e(s, {1, a}) == tsallis_w(s, {1, a}));
  }
}

TEST_CASE("ties are an error for alpha >= 1 unless jittered", "[spacings]") {
  const Sample tied({1, 1, 1, 2, 3, 4, 5, 6});
  REQUIRE_THROWS_AS(tsallis_v(tied, {1, 2.0}), TiedSpacings);
  REQUIRE_THROWS_AS(shannon_vasicek(tied, 1), TiedSpacings);
  REQUIRE_NOTHROW(tsallis_v(tied, {1, 0.5}));
  const Sample j = jitter_ties(tied);
  REQUIRE(std::isfinite(tsallis_v(j, {1, 2.0})));
  for (std::size_t i = 1; i < j.size(); ++i) REQUIRE(j.sorted()[i] > j.sorted()[i - 1]);
  // Near-tie data far from zero still separates.
  const Sample big({1e6, 1e6, 1e6 + 1});
  const Sample jb = jitter_ties(big);
  REQUIRE(jb.sorted()[1] > jb.sorted()[0]);
}

TEST_CASE("invalid windows and orders are rejected", "[spacings]") {
  const Sample s({1, 2, 3, 4, 5, 6});
  REQUIRE_THROWS_AS(tsallis_v(s, {3, 2.0}), DomainError);
  REQUIRE_THROWS_AS(tsallis_v(s, {0, 2.0}), DomainError);
  REQUIRE_THROWS_AS(tsallis_v(s, {1, 0.0}), DomainError);
  REQUIRE_THROWS_AS(tsallis_e(s, {1, -1.0}), DomainError);
}

TEST_CASE("Vasicek consistency on Exp(1)", "[spacings][slow]") {
  const Sample s = draw(dist::DistributionModel::exponential(1), 10000, 31);
  REQUIRE(std::fabs(shannon_vasicek(s, window_default(10000, WindowRule::Sqrt)) - 1.0) < 0.05);
}

TEST_CASE("mean absolute error shrinks with n", "[spacings][slow][property]") {
  const auto model = dist::DistributionModel::exponential(1);
  const double truth = dist::true_tsallis(model, 2.0).value;
  for (auto e : kAll) {
    double mae[2] = {0, 0};
    const std::size_t ns[2] = {50, 400};
    for (int k = 0; k < 2; ++k) {
      const int m = window_default(ns[k], WindowRule::Sqrt);
      for (std::uint64_t rep = 0; rep < 2000; ++rep) {
        Rng r = Rng::substream(99, {ns[k], rep});
        mae[k] += std::fabs(estimate(e, dist::sample(model, ns[k], r), {m, 2.0}) - truth);
      }
    }
    CAPTURE(estimator_name(e), mae[0] / 2000, mae[1] / 2000);
    REQUIRE(mae[1] < mae[0]);
  }
}

TEST_CASE("estimator names round-trip", "[spacings]") {
  for (auto e : kAll) REQUIRE(parse_estimator(estimator_name(e)) == e);
  REQUIRE(parse_estimator("ta") == Estimator::W);
  REQUIRE_THROWS_AS(parse_estimator("tz"), DomainError);
}
