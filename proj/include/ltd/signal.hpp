#pragma once

#include <cstddef>
#include <vector>

#include "ltd/errors.hpp"

namespace ltd {

using Signal = std::vector<double>;

/// Mean squared error between two signals of equal, nonzero length.
inline double mean_squared_error(const Signal& a, const Signal& b) {
  if (a.size() != b.size()) {
    throw DimensionError("mean_squared_error: length mismatch");
  }
  if (a.empty()) {
    throw DimensionError("mean_squared_error: empty signals");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum / static_cast<double>(a.size());
}

}  // namespace ltd
