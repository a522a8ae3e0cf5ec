// Copyright 2026 The imgfuse authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

#include "imgfuse/image.hpp"

namespace imgfuse {

/// Five-tap symmetric generating kernel w(-2..2) shared by reduce and expand.
/// Taps must sum to 1, and the even-index taps w(-2)+w(0)+w(2) and odd-index
/// taps w(-1)+w(1) must each sum to 1/2 so that expand preserves constants.
class Kernel5 {
 public:
  /// The classical kernel with center weight 0.4: {0.05, 0.25, 0.4, 0.25, 0.05}.
  Kernel5() : taps_{0.05, 0.25, 0.4, 0.25, 0.05} {}

  /// Validates and adopts explicit taps, ordered w(-2)..w(2).
  explicit Kernel5(const std::array<double, 5>& taps);

  /// {1/4 - a/2, 1/4, a, 1/4, 1/4 - a/2}; valid for any center weight a.
  static Kernel5 from_center_weight(double a);

  /// Tap lookup for m in [-2, 2].
  double tap(int m) const noexcept { return taps_[m + 2]; }
  const std::array<double, 5>& taps() const noexcept { return taps_; }

 private:
  std::array<double, 5> taps_;
};

/// Low-pass levels A_0..A_N; levels[0] is the source image and each further
/// level is the reduce of its predecessor.
struct GaussianPyramid {
  std::vector<Image> levels;
  Kernel5 kernel;

  int n_levels() const noexcept { return static_cast<int>(levels.size()) - 1; }
};

/// Band-pass bands B_0..B_{N-1} (signed, unclamped) plus the retained
/// coarsest low-pass level. A complete, exactly invertible representation.
struct LaplacianPyramid {
  std::vector<Image> bands;
  Image base;
  Kernel5 kernel;

  int n_levels() const noexcept { return static_cast<int>(bands.size()); }
};

/// Filters with the separable 5-tap kernel and subsamples by two at even
/// anchors, borders mirrored. Output is ceil(input / 2) per axis; a 1-pixel
/// axis passes through unchanged.
Image reduce(const Image& img, const Kernel5& kernel = Kernel5());

/// Upsample-then-filter step. Target dimensions must be 2*dim or 2*dim - 1
/// per axis so that expand inverts reduce's ceil-halving shape law. Only taps
/// whose source positions land on integer indices contribute; the result
/// carries a 4x gain that restores unit DC response.
Image expand(const Image& img, int target_height, int target_width,
             const Kernel5& kernel = Kernel5());

/// Number of reduce steps until the image reaches 1x1 under ceil-halving.
int max_pyramid_depth(int height, int width) noexcept;

/// Builds A_0..A_{n_levels}. n_levels must be between 1 and
/// max_pyramid_depth(img); the error message names the feasible maximum.
GaussianPyramid gaussian_pyramid(const Image& img, int n_levels,
                                 const Kernel5& kernel = Kernel5());

/// Builds bands B_i = A_i - expand(A_{i+1}) plus base A_N.
LaplacianPyramid laplacian_pyramid(const Image& img, int n_levels,
                                   const Kernel5& kernel = Kernel5());

/// Inverts laplacian_pyramid: A_i = B_i + expand(A_{i+1}) from the base down.
Image reconstruct(const LaplacianPyramid& pyr);

}  // namespace imgfuse
