#pragma once

#include <cstddef>
#include <string>

#include "tsallis/sample.hpp"

namespace tsallis::spacings {

enum class WindowRule { Sqrt, Third };

// floor(sqrt(n) + 0.5) or floor(n / 3), then clamped so that 2m < n.
int window_default(std::size_t n, WindowRule rule);

struct SpacingsConfig {
  int m = 1;
  double alpha = 2.0;  // alpha == 1 selects the Shannon limit
};

enum class WeightScheme { Ebrahimi_C, Minimal_W };

// C_i in [1, 2] (linear ramps at both ends) or W_i in {1, 2}.
double weight(WeightScheme scheme, long i, long n, int m);

enum class Estimator { V, H, E, W };

const char* estimator_name(Estimator e);  // "tv", "th", "te", "tw"
Estimator parse_estimator(const std::string& name);

// Vasicek's Shannon estimator: mean of log(n (X_(i+m) - X_(i-m)) / (2m)).
double shannon_vasicek(const Sample& s, int m);

// Tsallis estimators. All throw TiedSpacings when alpha >= 1 and a spacing
// entering the sum is zero; see jitter_ties for an opt-in workaround.
double tsallis_v(const Sample& s, const SpacingsConfig& cfg);
double tsallis_h(const Sample& s, const SpacingsConfig& cfg);
double tsallis_e(const Sample& s, const SpacingsConfig& cfg);
double tsallis_w(const Sample& s, const SpacingsConfig& cfg);

double estimate(Estimator e, const Sample& s, const SpacingsConfig& cfg);

// Breaks exact ties deterministically: the k-th order statistic gets
// k * eps * range added (eps = 1e-12, widened to a few ulps when needed so
// the shift survives rounding). Order is preserved.
Sample jitter_ties(const Sample& s);

}  // namespace tsallis::spacings
