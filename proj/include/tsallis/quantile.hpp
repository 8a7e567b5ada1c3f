#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tsallis/distributions.hpp"
#include "tsallis/sample.hpp"

namespace tsallis::quantile {

// A symmetric density kernel together with its cdf (needed by the
// Soni-type estimator, which integrates the kernel over (0, 1)).
struct Kernel {
  const char* name;
  double (*density)(double);
  double (*cdf)(double);
};

const Kernel& gaussian_kernel();

struct KernelSpec {
  Kernel kernel;
  double bandwidth;
};

// Gaussian kernel with the normal reference rule bandwidth.
KernelSpec default_spec(const Sample& s);

// 1.06 * sd * n^(-1/5), sd with the (n - 1) divisor.
double bandwidth_nrr(const Sample& s);

// (1/(n h)) sum K((x - X_i) / h)
double kde(const Sample& s, const KernelSpec& spec, double x);

enum class QuantileKind { StepQn, SmoothQbar };

// Q_n(w) = X_(i) for (i-1)/n < w <= i/n.
double step_quantile(const Sample& s, double w);
// Piecewise-linear interpolation of the order statistics with X_(0) = 0.
double smooth_quantile(const Sample& s, double w);
double empirical_quantile(const Sample& s, QuantileKind kind, double w);

// 1 / kde(Q_n(w))
double qdf_jones(const Sample& s, const KernelSpec& spec, double w);

// kde evaluated at each order statistic, ascending.
std::vector<double> kde_at_order_stats(const Sample& s, const KernelSpec& spec);

// (1/(alpha-1)) (1 - mean f_i^(alpha-1)) from precomputed density values.
double tsallis_from_density(const std::vector<double>& f, double alpha);

// (1/(alpha-1)) (1 - (1/n) sum kde(X_(i))^(alpha-1)); the integral over w
// of the step function is this mean exactly. alpha == 1 gives the Shannon
// limit -(1/n) sum log kde(X_(i)).
double tsallis_quantile(const Sample& s, const KernelSpec& spec, double alpha);

// (1/h) integral_0^1 K((z - w)/h) dz / kde(Q_n(w))
double qdf_soni(const Sample& s, const KernelSpec& spec, double w);

// (1/(alpha-1)) (1 - integral_0^1 qdf_soni(w)^(1-alpha) dw), outer integral
// by the midpoint rule on `grid` points.
double tsallis_quantile_soni(const Sample& s, const KernelSpec& spec, double alpha,
                             std::size_t grid = 2048);

// reps values of tsallis_quantile - true_tsallis on samples of size n,
// replication k drawn from Rng::substream(seed, {k}).
std::vector<double> clt_error_samples(const dist::DistributionModel& model, std::size_t n,
                                      double alpha, std::size_t reps, std::uint64_t seed,
                                      unsigned workers = 1);

// One-column CSV with a header line.
void write_column_csv(std::ostream& out, const char* header, const std::vector<double>& values);

}  // namespace tsallis::quantile
