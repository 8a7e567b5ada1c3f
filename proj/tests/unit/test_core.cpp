#include <catch2/catch_amalgamated.hpp>

#include <atomic>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "tsallis/errors.hpp"
#include "tsallis/numeric.hpp"
#include "tsallis/rng.hpp"
#include "tsallis/sample.hpp"

using namespace tsallis;

TEST_CASE("rng streams are reproducible and distinct", "[rng]") {
  Rng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    REQUIRE(x == b.next());
    (void)c.next();
  }
  REQUIRE(Rng(42).next() != Rng(43).next());

  Rng s1 = Rng::substream(7, {1, 2});
  Rng s2 = Rng::substream(7, {1, 2});
  Rng s3 = Rng::substream(7, {2, 1});
  REQUIRE(s1.next() == s2.next());
  REQUIRE(Rng::substream(7, {1, 2}).next() != s3.next());
  REQUIRE(Rng::derive(7, {1, 2}) == Rng::derive(7, {1, 2}));
  REQUIRE(Rng::derive(7, {1, 2}) != Rng::derive(8, {1, 2}));
}

TEST_CASE("uniform draws lie strictly inside (0, 1) with the right mean", "[rng]") {
  Rng r(2026);
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  // sd of the mean is sqrt(1/12/n) ~ 6.5e-4
  REQUIRE(std::fabs(sum / n - 0.5) < 4 * std::sqrt(1.0 / 12.0 / n));
}

TEST_CASE("compensated summation recovers cancelled terms", "[numeric]") {
  CompensatedSum s;
  s.add(1e16);
  s.add(1.0);
  s.add(-1e16);
  REQUIRE(s.value() == 1.0);
  const std::vector<double> xs{0.1, 0.2, 0.3};
  REQUIRE(compensated_sum(xs) == Catch::Approx(0.6).epsilon(1e-15));
  REQUIRE(compensated_mean(xs) == Catch::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("format_double round-trips", "[numeric]") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 1e300, 0.43802243913933350, 123456789.0}) {
    REQUIRE(parse_double(format_double(x), "x") == x);
  }
  REQUIRE(format_double(0.625) == "0.625");
  REQUIRE_THROWS_AS(parse_double("1.5x", "value"), DomainError);
  REQUIRE_THROWS_AS(parse_double("", "value"), DomainError);
}

TEST_CASE("tsallis_term matches the naive form away from alpha = 1", "[numeric]") {
  for (double a : {0.5, 1.5, 2.0, 3.0})
    for (double t : {0.1, 1.0, 7.5}) {
      const double naive = (1.0 - std::pow(t, 1.0 - a)) / (a - 1.0);
      REQUIRE(tsallis_term(std::log(t), a) == Catch::Approx(naive).epsilon(1e-13));
    }
  // Near alpha = 1 the term tends to log t.
  REQUIRE(tsallis_term(std::log(5.0), 1.0 + 1e-9) == Catch::Approx(std::log(5.0)).epsilon(1e-8));
}

TEST_CASE("parallel_for writes every index once regardless of workers", "[numeric]") {
  for (unsigned w : {1u, 2u, 3u, 8u}) {
    std::vector<int> hits(1001, 0);
    parallel_for(hits.size(), w, [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) REQUIRE(h == 1);
  }
  REQUIRE_THROWS_AS(parallel_for(10, 2,
                                 [](std::size_t i) {
                                   if (i == 7) throw DomainError("boom");
                                 }),
                    DomainError);
}

TEST_CASE("fnv1a is the standard 64-bit hash", "[numeric]") {
  REQUIRE(fnv1a("") == 0xcbf29ce484222325ULL);
  REQUIRE(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("sample caches order statistics and moments", "[sample]") {
  const Sample s({3.0, 1.0, 2.0, 4.0});
  REQUIRE(s.size() == 4);
  REQUIRE(s.order_stat(1) == 1.0);
  REQUIRE(s.order_stat(0) == 1.0);
  REQUIRE(s.order_stat(-5) == 1.0);
  REQUIRE(s.order_stat(4) == 4.0);
  REQUIRE(s.order_stat(9) == 4.0);
  REQUIRE(s.mean() == 2.5);
  REQUIRE(s.variance(0) == Catch::Approx(1.25));
  REQUIRE(s.variance(1) == Catch::Approx(5.0 / 3.0));
  REQUIRE(s.min() == 1.0);
  REQUIRE(s.max() == 4.0);
  REQUIRE(s.values()[0] == 3.0);
  const Sample t = s.with(0.5);
  REQUIRE(t.size() == 5);
  REQUIRE(t.order_stat(1) == 0.5);
  REQUIRE(s.size() == 4);
}

TEST_CASE("sample rejects empty and non-finite input", "[sample]") {
  REQUIRE_THROWS_AS(Sample(std::vector<double>{}), DomainError);
  REQUIRE_THROWS_AS(Sample({1.0, std::nan("")}), DomainError);
  REQUIRE_THROWS_AS(Sample({1.0, INFINITY}), DomainError);
}
