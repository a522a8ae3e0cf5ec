// Copyright 2026 The imgfuse authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "imgfuse/image.hpp"

namespace imgfuse {

struct MetricsReport {
  double mse = 0.0;
  double nae = 0.0;
  double psnr = 0.0;
};

/// Mean squared error over all pixels. Images must be the same size.
double mse(const Image& ref, const Image& test);

/// Normalized absolute error: sum |ref - test| / sum |ref|. Throws
/// UndefinedMetricError when the reference is identically zero.
double nae(const Image& ref, const Image& test);

/// Peak signal-to-noise ratio in dB against `peak`; +infinity when the
/// images are identical.
double psnr(const Image& ref, const Image& test, double peak = 255.0);

/// PSNR from a precomputed mean squared error. `mse_value` must be >= 0 and
/// `peak` > 0.
double psnr_from_mse(double mse_value, double peak = 255.0);

/// All three metrics in one pass-compatible report.
MetricsReport evaluate(const Image& ref, const Image& test,
                       double peak = 255.0);

}  // namespace imgfuse
