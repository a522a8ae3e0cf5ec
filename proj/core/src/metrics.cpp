// Copyright 2026 The imgfuse authors
// SPDX-License-Identifier: Apache-2.0

#include "imgfuse/metrics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "imgfuse/error.hpp"

namespace imgfuse {

namespace {

void require_same_size(const Image& ref, const Image& test) {
  if (!ref.same_size(test)) {
    throw ArgumentError(
        "metric inputs must have the same size, got " +
        std::to_string(ref.height()) + "x" + std::to_string(ref.width()) +
        " and " + std::to_string(test.height()) + "x" +
        std::to_string(test.width()));
  }
}

}  // namespace

double mse(const Image& ref, const Image& test) {
  require_same_size(ref, test);
  double acc = 0.0;
  for (int i = 0; i < ref.height(); ++i) {
    for (int j = 0; j < ref.width(); ++j) {
      const double d = ref.at(i, j) - test.at(i, j);
      acc += d * d;
    }
  }
  return acc / (static_cast<double>(ref.height()) *
                static_cast<double>(ref.width()));
}

double nae(const Image& ref, const Image& test) {
  require_same_size(ref, test);
  double diff_sum = 0.0;
  double ref_sum = 0.0;
  for (int i = 0; i < ref.height(); ++i) {
    for (int j = 0; j < ref.width(); ++j) {
      diff_sum += std::fabs(ref.at(i, j) - test.at(i, j));
      ref_sum += std::fabs(ref.at(i, j));
    }
  }
  if (ref_sum == 0.0) {
    throw UndefinedMetricError(
        "normalized absolute error is undefined for an all-zero reference");
  }
  return diff_sum / ref_sum;
}

double psnr_from_mse(double mse_value, double peak) {
  if (!(mse_value >= 0.0)) {
    throw ArgumentError("mean squared error must be >= 0, got " +
                        std::to_string(mse_value));
  }
  if (!(peak > 0.0)) {
    throw ArgumentError("peak must be positive, got " + std::to_string(peak));
  }
  if (mse_value == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return 10.0 * std::log10(peak * peak / mse_value);
}

double psnr(const Image& ref, const Image& test, double peak) {
  return psnr_from_mse(mse(ref, test), peak);
}

MetricsReport evaluate(const Image& ref, const Image& test, double peak) {
  const double m = mse(ref, test);
  return MetricsReport{m, nae(ref, test), psnr_from_mse(m, peak)};
}

}  // namespace imgfuse
