// Copyright 2026 The imgfuse authors
// SPDX-License-Identifier: Apache-2.0

#include "imgfuse/fusion.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "imgfuse/error.hpp"
#include "imgfuse/wavelet.hpp"

namespace imgfuse {

namespace {

std::string shape(const Image& img) {
  return std::to_string(img.height()) + "x" + std::to_string(img.width());
}

void require_same_size(const Image& a, const Image& b, const char* what) {
  if (!a.same_size(b)) {
    throw StructureError(std::string(what) + " requires equal shapes, got " +
                         shape(a) + " and " + shape(b));
  }
}

}  // namespace

Image merge_detail(const Image& b1, const Image& b2, DetailRule rule) {
  require_same_size(b1, b2, "detail merge");
  Image out(b1.height(), b1.width());
  for (int i = 0; i < b1.height(); ++i) {
    for (int j = 0; j < b1.width(); ++j) {
      const double v1 = b1.at(i, j);
      const double v2 = b2.at(i, j);
      out.at(i, j) = rule == DetailRule::kMaxAbs
                         ? (std::fabs(v1) >= std::fabs(v2) ? v1 : v2)
                         : 0.5 * (v1 + v2);
    }
  }
  return out;
}

Image merge_base(const Image& a1, const Image& a2) {
  require_same_size(a1, a2, "base merge");
  Image out(a1.height(), a1.width());
  for (int i = 0; i < a1.height(); ++i) {
    for (int j = 0; j < a1.width(); ++j) {
      out.at(i, j) = 0.5 * (a1.at(i, j) + a2.at(i, j));
    }
  }
  return out;
}

namespace {

void require_fusable(const Image& im1, const Image& im2) {
  if (!im1.same_size(im2)) {
    throw ArgumentError("fusion inputs must have the same size, got " +
                        shape(im1) + " and " + shape(im2));
  }
}

}  // namespace

Image fuse_laplacian(const Image& im1, const Image& im2,
                     const FusionConfig& cfg) {
  require_fusable(im1, im2);
  const LaplacianPyramid p1 = laplacian_pyramid(im1, cfg.n_levels, cfg.kernel);
  const LaplacianPyramid p2 = laplacian_pyramid(im2, cfg.n_levels, cfg.kernel);
  std::vector<Image> bands;
  bands.reserve(p1.bands.size());
  for (std::size_t i = 0; i < p1.bands.size(); ++i) {
    bands.push_back(merge_detail(p1.bands[i], p2.bands[i], cfg.detail_rule));
  }
  const LaplacianPyramid merged{std::move(bands),
                                merge_base(p1.base, p2.base), cfg.kernel};
  return reconstruct(merged);
}

Image fuse_wavelet(const Image& im1, const Image& im2,
                   const FusionConfig& cfg) {
  require_fusable(im1, im2);
  const WaveletDecomposition d1 = dwt2(im1);
  const WaveletDecomposition d2 = dwt2(im2);
  const WaveletDecomposition merged{
      merge_base(d1.ll, d2.ll),
      merge_detail(d1.lh, d2.lh, cfg.detail_rule),
      merge_detail(d1.hl, d2.hl, cfg.detail_rule),
      merge_detail(d1.hh, d2.hh, cfg.detail_rule),
      d1.source_height,
      d1.source_width};
  return idwt2(merged);
}

Image fuse(const Image& im1, const Image& im2, const FusionConfig& cfg) {
  return cfg.method == FusionMethod::kLaplacian
             ? fuse_laplacian(im1, im2, cfg)
             : fuse_wavelet(im1, im2, cfg);
}

}  // namespace imgfuse
