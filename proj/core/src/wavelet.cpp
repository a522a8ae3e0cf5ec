// Copyright 2026 The imgfuse authors
// SPDX-License-Identifier: Apache-2.0

#include "imgfuse/wavelet.hpp"

#include <numbers>
#include <string>
#include <utility>

#include "imgfuse/error.hpp"

namespace imgfuse {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

int half_up(int n) noexcept { return (n + 1) / 2; }

// Reads position p along the chosen axis, extending an odd axis by one
// mirrored sample: x[len] reads x[len - 2].
double axis_sample(const Image& img, int i, int j, int p, bool horizontal) {
  const int len = horizontal ? img.width() : img.height();
  if (p == len) p = len - 2;
  return horizontal ? img.at(i, p) : img.at(p, j);
}

// Haar analysis along one axis: low(p) and high(p) from the sample pair at
// positions 2p and 2p+1.
std::pair<Image, Image> analyze_axis(const Image& src, bool horizontal) {
  const int h = horizontal ? src.height() : half_up(src.height());
  const int w = horizontal ? half_up(src.width()) : src.width();
  Image low(h, w);
  Image high(h, w);
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      const int p = 2 * (horizontal ? j : i);
      const double x0 = axis_sample(src, i, j, p, horizontal);
      const double x1 = axis_sample(src, i, j, p + 1, horizontal);
      low.at(i, j) = (x0 + x1) * kInvSqrt2;
      high.at(i, j) = (x0 - x1) * kInvSqrt2;
    }
  }
  return {std::move(low), std::move(high)};
}

// Haar synthesis along one axis back to `target` samples; a 2p / 2p+1 output
// pair comes from coefficient pair p, and the last sample of an odd target
// drops the mirrored extension.
Image synthesize_axis(const Image& low, const Image& high, int target,
                      bool horizontal) {
  const int h = horizontal ? low.height() : target;
  const int w = horizontal ? target : low.width();
  Image out(h, w);
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      const int x = horizontal ? j : i;
      const int p = x / 2;
      const double lo = horizontal ? low.at(i, p) : low.at(p, j);
      const double hi = horizontal ? high.at(i, p) : high.at(p, j);
      out.at(i, j) = (x % 2 == 0 ? lo + hi : lo - hi) * kInvSqrt2;
    }
  }
  return out;
}

std::string shape(const Image& img) {
  return std::to_string(img.height()) + "x" + std::to_string(img.width());
}

}  // namespace

WaveletDecomposition dwt2(const Image& img) {
  if (img.height() < 2 || img.width() < 2) {
    throw ArgumentError("wavelet analysis needs both axes >= 2, got " +
                        shape(img));
  }
  auto [row_low, row_high] = analyze_axis(img, /*horizontal=*/true);
  auto [ll, lh] = analyze_axis(row_low, /*horizontal=*/false);
  auto [hl, hh] = analyze_axis(row_high, /*horizontal=*/false);
  return WaveletDecomposition{std::move(ll), std::move(lh), std::move(hl),
                              std::move(hh), img.height(), img.width()};
}

Image idwt2(const WaveletDecomposition& dec) {
  if (!dec.ll.same_size(dec.lh) || !dec.ll.same_size(dec.hl) ||
      !dec.ll.same_size(dec.hh)) {
    throw StructureError("subbands disagree in shape: ll " + shape(dec.ll) +
                         ", lh " + shape(dec.lh) + ", hl " + shape(dec.hl) +
                         ", hh " + shape(dec.hh));
  }
  if (half_up(dec.source_height) != dec.ll.height() ||
      half_up(dec.source_width) != dec.ll.width()) {
    throw StructureError(
        "recorded source dimensions " + std::to_string(dec.source_height) +
        "x" + std::to_string(dec.source_width) +
        " do not ceil-halve to the subband dimensions " + shape(dec.ll));
  }
  const Image row_low =
      synthesize_axis(dec.ll, dec.lh, dec.source_height, /*horizontal=*/false);
  const Image row_high =
      synthesize_axis(dec.hl, dec.hh, dec.source_height, /*horizontal=*/false);
  return synthesize_axis(row_low, row_high, dec.source_width,
                         /*horizontal=*/true);
}

}  // namespace imgfuse
