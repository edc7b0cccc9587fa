#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "ltd/errors.hpp"
#include "ltd/signal.hpp"

namespace ltd {

/// Centered moving average with symmetric window shrink at the endpoints:
/// out[i] = mean(x[max(0,i-h) .. min(n-1,i+h)]) with h = window/2, so the
/// output keeps the input length and every value stays inside the input's
/// min/max hull. Window must be odd, 3 <= window <= n.
inline Signal moving_average(const Signal& signal, int window) {
  const std::size_t n = signal.size();
  if (window < 3 || window % 2 == 0) {
    throw BadParamsError("moving_average: window must be odd and >= 3, got " +
                         std::to_string(window));
  }
  if (static_cast<std::size_t>(window) > n) {
    throw BadParamsError("moving_average: window " + std::to_string(window) +
                         " exceeds signal length " + std::to_string(n));
  }
  const std::size_t h = static_cast<std::size_t>(window) / 2;
  Signal out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i >= h ? i - h : 0;
    const std::size_t hi = std::min(n - 1, i + h);
    double sum = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) sum += signal[j];
    out[i] = sum / static_cast<double>(hi - lo + 1);
  }
  return out;
}

/// Parameters of the singular-spectrum-analysis baseline.
struct SsaParams {
  std::size_t embed_dim = 0;  // trajectory window length L, 2 <= L <= n/2
  std::size_t rank = 0;       // reconstruction rank r, 1 <= r <= L
};

inline void validate(const SsaParams& params, std::size_t n) {
  if (params.embed_dim < 2 || params.embed_dim > n / 2) {
    throw BadParamsError("ssa: embed_dim must satisfy 2 <= L <= n/2, got L=" +
                         std::to_string(params.embed_dim) + " for n=" +
                         std::to_string(n));
  }
  if (params.rank < 1 || params.rank > params.embed_dim) {
    throw BadParamsError("ssa: rank must satisfy 1 <= r <= L, got r=" +
                         std::to_string(params.rank));
  }
}

/// Benchmark defaults: L = min(n/4, 50) clamped into [2, n/2], r = min(2, L).
inline SsaParams default_ssa_params(std::size_t n) {
  std::size_t embed = std::min<std::size_t>(n / 4, 50);
  embed = std::clamp<std::size_t>(embed, 2, std::max<std::size_t>(n / 2, 2));
  return SsaParams{embed, std::min<std::size_t>(2, embed)};
}

/// Singular spectrum analysis denoiser.
///
/// Embeds the signal into the L x (n-L+1) Hankel trajectory matrix
/// X(i,j) = x[i+j], truncates its SVD to the top-r singular triples, and
/// maps the result back to a series by averaging each anti-diagonal. At
/// r = L the reconstruction is the identity up to rounding.
inline Signal ssa_denoise(const Signal& signal, const SsaParams& params) {
  const std::size_t n = signal.size();
  validate(params, n);
  const std::size_t L = params.embed_dim;
  const std::size_t K = n - L + 1;

  Eigen::MatrixXd traj(L, K);
  for (std::size_t j = 0; j < K; ++j) {
    for (std::size_t i = 0; i < L; ++i) {
      traj(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          signal[i + j];
    }
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(traj,
                                     Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto r = static_cast<Eigen::Index>(params.rank);
  const Eigen::MatrixXd low_rank = svd.matrixU().leftCols(r) *
                                   svd.singularValues().head(r).asDiagonal() *
                                   svd.matrixV().leftCols(r).transpose();

  Signal out(n);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t i_lo = t + 1 >= K ? t + 1 - K : 0;
    const std::size_t i_hi = std::min(L - 1, t);
    double sum = 0.0;
    for (std::size_t i = i_lo; i <= i_hi; ++i) {
      sum += low_rank(static_cast<Eigen::Index>(i),
                      static_cast<Eigen::Index>(t - i));
    }
    out[t] = sum / static_cast<double>(i_hi - i_lo + 1);
  }
  return out;
}

}  // namespace ltd
