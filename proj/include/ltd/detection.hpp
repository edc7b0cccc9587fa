#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ltd/errors.hpp"
#include "ltd/signal.hpp"

namespace ltd {

/// Outcome of one noisy-sample scan over a working signal.
///
/// `indices` are 0-based positions into the scanned signal, restricted to
/// the interior 1..n-2 because the centered second difference is undefined
/// at the endpoints. `gt[j]` is the signal value at `indices[j]`.
struct DetectionResult {
  std::vector<double> dd;          // second differences, length n-2
  double max_abs = 0.0;            // max of |dd|
  std::vector<std::size_t> indices;
  std::vector<double> gt;
};

/// Centered second differences: out[i] = x[i+2] - 2*x[i+1] + x[i].
/// Length n-2; requires n >= 3.
inline std::vector<double> second_differences(const Signal& signal) {
  const std::size_t n = signal.size();
  if (n < 3) {
    throw TooShortError("second_differences: need at least 3 samples, got " +
                        std::to_string(n));
  }
  std::vector<double> dd(n - 2);
  for (std::size_t i = 0; i + 2 < n; ++i) {
    dd[i] = signal[i + 2] - 2.0 * signal[i + 1] + signal[i];
  }
  return dd;
}

/// Flags the most-noisy interior samples.
///
/// A position p in 1..n-2 is selected when |dd at p| - ratio*M > 0, where
/// M = max|dd|. The inequality is strict: positions whose magnitude equals
/// ratio*M exactly are excluded, so at ratio = 1 even the argmax is not
/// selected, while for ratio < 1 the argmax always is (when M > 0). A flat
/// dd (M = 0) yields an empty selection.
inline DetectionResult select_noisy_indices(const Signal& signal,
                                            double ratio = 0.7) {
  if (!(ratio > 0.0 && ratio <= 1.0)) {
    throw BadParamsError("select_noisy_indices: ratio must be in (0, 1]");
  }
  DetectionResult result;
  result.dd = second_differences(signal);
  for (double v : result.dd) {
    result.max_abs = std::max(result.max_abs, std::abs(v));
  }
  for (std::size_t i = 0; i < result.dd.size(); ++i) {
    if (std::abs(result.dd[i]) - ratio * result.max_abs > 0.0) {
      result.indices.push_back(i + 1);
      result.gt.push_back(signal[i + 1]);
    }
  }
  return result;
}

}  // namespace ltd
