#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace tsallis {

// Immutable batch of finite real observations. The ascending order
// statistics are computed once at construction and shared by copies.
class Sample {
 public:
  explicit Sample(std::vector<double> values);

  std::size_t size() const noexcept { return data_->values.size(); }
  std::span<const double> values() const noexcept { return data_->values; }
  std::span<const double> sorted() const noexcept { return data_->sorted; }

  // X_(i) for 1-based i, clamped to X_(1) below and X_(n) above.
  double order_stat(long i) const noexcept;

  double mean() const noexcept { return data_->mean; }
  // Sum of squared deviations divided by (n - ddof).
  double variance(int ddof) const;
  double sd(int ddof) const;

  double min() const noexcept { return data_->sorted.front(); }
  double max() const noexcept { return data_->sorted.back(); }

  // New sample with x appended.
  Sample with(double x) const;

 private:
  struct Data {
    std::vector<double> values;
    std::vector<double> sorted;
    double mean = 0.0;
    double ss = 0.0;  // centred sum of squares
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace tsallis
