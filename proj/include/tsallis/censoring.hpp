#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tsallis/distributions.hpp"
#include "tsallis/rng.hpp"
#include "tsallis/sample.hpp"

namespace tsallis::censoring {

// Progressive type-II removal plan: n units on test, r observed failures,
// R_i survivors withdrawn at the i-th failure.
class CensoringScheme {
 public:
  CensoringScheme(std::size_t n, std::vector<int> removals);

  // "10,0*9" style lists; "a*b" expands to b copies of a. n defaults to
  // r + sum(R).
  static CensoringScheme parse(const std::string& text);
  static CensoringScheme parse(const std::string& text, std::size_t n);
  // R = (0, ..., 0, n - r).
  static CensoringScheme type2(std::size_t n, std::size_t r);
  static CensoringScheme complete(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t r() const noexcept { return removals_.size(); }
  const std::vector<int>& removals() const noexcept { return removals_; }
  int removal(long i) const { return removals_.at(static_cast<std::size_t>(i - 1)); }

  bool is_complete() const noexcept { return n_ == r(); }
  bool is_type2() const noexcept;

  // Compact form; runs of three or more equal entries use "a*b".
  std::string to_string() const;

  bool operator==(const CensoringScheme& o) const {
    return n_ == o.n_ && removals_ == o.removals_;
  }

 private:
  std::size_t n_;
  std::vector<int> removals_;
};

// floor(sqrt(r) + 0.5), reduced until 2m < r.
int default_window(std::size_t r);

// beta_i = (i + S_i) / (1 + i + S_i), S_i = R_(r-i+1) + ... + R_r, and the
// tail products that give E(U_{i:r:n}) = 1 - prod_{k=r-i+1}^{r} beta_k.
class BetaProducts {
 public:
  explicit BetaProducts(const CensoringScheme& scheme);

  std::size_t r() const noexcept { return beta_.size(); }
  // beta_k with k clamped into [1, r].
  double beta(long k) const;
  // prod_{k=j}^{r} beta_k; j is clamped into [1, r + 1] (empty product 1).
  double tail_product(long j) const;
  // E(U_{i:r:n}) for 1 <= i <= r (i is clamped into [1, r]).
  double expected_uniform(long i) const;
  // E(U_{i+m}) - E(U_{i-m}) with both indices clamped into [1, r], the
  // same clamping applied to the failure times.
  double increment(long i, int m) const;

 private:
  std::vector<double> beta_;
  std::vector<double> tail_;  // tail_[j-1] = prod_{k=j}^{r} beta_k, size r+1
};

std::vector<double> expected_uniform(const CensoringScheme& scheme);

class PC2Sample {
 public:
  // times must be ascending and have length r.
  PC2Sample(std::vector<double> times, CensoringScheme scheme);

  const std::vector<double>& times() const noexcept { return times_; }
  const CensoringScheme& scheme() const noexcept { return scheme_; }
  std::size_t r() const noexcept { return times_.size(); }
  // X_{i:r:n}, clamped to the first/last failure outside [1, r].
  double time(long i) const noexcept;

 private:
  std::vector<double> times_;
  CensoringScheme scheme_;
};

// Uniform progressively censored order statistics (Balakrishnan-Sandhu):
// returns the upper-tail complements 1 - U_{i:r:n}, which keep full
// precision near 1.
std::vector<double> generate_uniform_complements(const CensoringScheme& scheme, Rng& rng);

// Failure times from the model. A scheme without removals yields the sorted
// complete sample drawn exactly as dist::sample would draw it.
PC2Sample generate_pc2(const dist::DistributionModel& model, const CensoringScheme& scheme,
                       Rng& rng);

// Applies the scheme to an observed complete sample by withdrawing R_i
// randomly chosen survivors after the i-th failure.
PC2Sample censor_sample(const Sample& complete, const CensoringScheme& scheme, Rng& rng);

// (1/(alpha-1)) (1 - (1/r) sum ((X_{i+m} - X_{i-m}) / dU_i)^(1-alpha)),
// dU_i = BetaProducts::increment(i, m). alpha == 1 gives the Shannon limit.
double tsallis_pc2(const PC2Sample& s, int m, double alpha);

// (1/(alpha-1)) ((1/r) sum (dU_i / dF_i)^(alpha-1) - 1) with dF_i the
// exponential(theta_hat) cdf increment over the clamped window.
double tsallis_divergence_pc2(const PC2Sample& s, double theta_hat, int m, double alpha);

// theta_hat = r / sum (1 + R_i) X_{i:r:n}.
double exp_mle_pc2(const PC2Sample& s);

}  // namespace tsallis::censoring
