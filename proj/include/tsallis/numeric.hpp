#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>

namespace tsallis {

// Neumaier's compensated summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double compensated_sum(std::span<const double> xs);
double compensated_mean(std::span<const double> xs);

// Shortest decimal string that parses back to exactly x.
std::string format_double(double x);

// Parse a full string as a double; throws DomainError naming `what`.
double parse_double(const std::string& text, const std::string& what);

// (1/(alpha-1)) * (1 - t^(1-alpha)) evaluated from log t without the
// cancellation of the naive form near alpha = 1.
inline double tsallis_term(double log_t, double alpha) {
  return -std::expm1((1.0 - alpha) * log_t) / (alpha - 1.0);
}

// Runs body(i) for i in [0, count) on `workers` threads (0 = hardware
// concurrency). Work is split in contiguous blocks; callers write results
// by index so the outcome never depends on the worker count.
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& body);

unsigned resolve_workers(unsigned requested);

// FNV-1a over bytes, used for dataset checksums and cache keys.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace tsallis
