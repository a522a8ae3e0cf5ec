// Copyright 2026 The imgfuse authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "imgfuse/image.hpp"

namespace imgfuse {

/// Subbands of a single-level 2D Haar analysis, each ceil(H/2) x ceil(W/2).
/// The filter order is rows first, then columns: lh holds row-lowpass /
/// column-highpass coefficients, hl the opposite. Source dimensions are
/// recorded so synthesis restores the exact original shape.
struct WaveletDecomposition {
  Image ll;
  Image lh;
  Image hl;
  Image hh;
  int source_height = 0;
  int source_width = 0;
};

/// Single-level 2D orthonormal Haar analysis (low filter {1/sqrt2, 1/sqrt2},
/// high filter {1/sqrt2, -1/sqrt2}), rows then columns, downsampled by two.
/// An odd axis is extended by one mirrored sample before filtering. Both
/// axes must be >= 2.
WaveletDecomposition dwt2(const Image& img);

/// Exact inverse of dwt2; for odd source axes the reconstruction is cropped
/// back to the recorded source dimensions.
Image idwt2(const WaveletDecomposition& dec);

}  // namespace imgfuse
