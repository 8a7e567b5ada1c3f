#include "tsallis/sample.hpp"

#include <algorithm>
#include <cmath>

#include "tsallis/errors.hpp"
#include "tsallis/numeric.hpp"

namespace tsallis {

Sample::Sample(std::vector<double> values) {
  if (values.empty()) throw DomainError("sample must contain at least one value");
  for (double v : values)
    if (!std::isfinite(v)) throw DomainError("sample contains a non-finite value");

  auto data = std::make_shared<Data>();
  data->sorted = values;
  std::sort(data->sorted.begin(), data->sorted.end());
  data->mean = compensated_mean(values);
  CompensatedSum ss;
  for (double v : values) ss.add((v - data->mean) * (v - data->mean));
  data->ss = ss.value();
  data->values = std::move(values);
  data_ = std::move(data);
}

double Sample::order_stat(long i) const noexcept {
  const long n = static_cast<long>(size());
  if (i < 1) i = 1;
  if (i > n) i = n;
  return data_->sorted[static_cast<std::size_t>(i - 1)];
}

double Sample::variance(int ddof) const {
  const long denom = static_cast<long>(size()) - ddof;
  if (denom <= 0) throw DomainError("variance needs more observations than ddof");
  return data_->ss / static_cast<double>(denom);
}

double Sample::sd(int ddof) const { return std::sqrt(variance(ddof)); }

Sample Sample::with(double x) const {
  std::vector<double> v = data_->values;
  v.push_back(x);
  return Sample(std::move(v));
}

}  // namespace tsallis
