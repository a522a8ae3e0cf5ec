// Copyright 2026 The imgfuse authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "imgfuse/image.hpp"
#include "imgfuse/pyramid.hpp"

namespace imgfuse {

/// Pixelwise rule applied to detail coefficients (Laplacian bands, wavelet
/// LH/HL/HH subbands). Approximation data is always merged by averaging.
enum class DetailRule {
  kMaxAbs,   // keep the coefficient of larger magnitude, ties favor the first input
  kAverage,  // arithmetic mean of the two coefficients
};

enum class FusionMethod {
  kLaplacian,
  kWavelet,
};

/// Conventional detail rule for each method: magnitude selection for the
/// Laplacian path, averaging for the wavelet path.
constexpr DetailRule default_detail_rule(FusionMethod method) noexcept {
  return method == FusionMethod::kLaplacian ? DetailRule::kMaxAbs
                                            : DetailRule::kAverage;
}

/// n_levels is the Laplacian decomposition depth and must be feasible for
/// the input dimensions; the wavelet method is single-level by definition
/// and ignores it. kernel applies to the Laplacian method only.
struct FusionConfig {
  FusionMethod method = FusionMethod::kLaplacian;
  int n_levels = 4;
  DetailRule detail_rule = DetailRule::kMaxAbs;
  Kernel5 kernel;
};

/// Combines two equally sized detail images under `rule`.
Image merge_detail(const Image& b1, const Image& b2, DetailRule rule);

/// Combines two equally sized approximation images by arithmetic mean.
Image merge_base(const Image& a1, const Image& a2);

/// Laplacian-pyramid fusion: decompose both inputs to cfg.n_levels, merge
/// each detail band under cfg.detail_rule and the bases by mean, then
/// reconstruct. The result is real-valued and unclamped.
Image fuse_laplacian(const Image& im1, const Image& im2,
                     const FusionConfig& cfg);

/// Single-level Haar fusion: analyze both inputs, merge LL by mean and the
/// detail subbands under cfg.detail_rule, then synthesize.
Image fuse_wavelet(const Image& im1, const Image& im2,
                   const FusionConfig& cfg);

/// Dispatches on cfg.method. Inputs must be the same size.
Image fuse(const Image& im1, const Image& im2, const FusionConfig& cfg);

}  // namespace imgfuse
