// Copyright 2026 The imgfuse authors
// SPDX-License-Identifier: Apache-2.0

#include "imgfuse/image.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "imgfuse/error.hpp"

namespace imgfuse {

Image::Image(int height, int width, double fill)
    : height_(height), width_(width) {
  if (height <= 0 || width <= 0) {
    throw ArgumentError("image dimensions must be positive, got " +
                        std::to_string(height) + "x" + std::to_string(width));
  }
  pixels_.assign(static_cast<std::size_t>(height) *
                     static_cast<std::size_t>(width),
                 fill);
}

Image Image::from_pixels(int height, int width, std::vector<double> pixels) {
  Image img(height, width);
  if (pixels.size() != img.pixels_.size()) {
    throw ArgumentError("pixel buffer holds " + std::to_string(pixels.size()) +
                        " values, expected " +
                        std::to_string(img.pixels_.size()));
  }
  for (std::size_t n = 0; n < pixels.size(); ++n) {
    if (!std::isfinite(pixels[n])) {
      throw ArgumentError("pixel " + std::to_string(n) + " is not finite");
    }
  }
  img.pixels_ = std::move(pixels);
  return img;
}

namespace {

void require_same_size(const Image& a, const Image& b, const char* op) {
  if (!a.same_size(b)) {
    throw StructureError(std::string(op) + " requires equal shapes, got " +
                         std::to_string(a.height()) + "x" +
                         std::to_string(a.width()) + " and " +
                         std::to_string(b.height()) + "x" +
                         std::to_string(b.width()));
  }
}

// One axis of the separable mean filter; `horizontal` selects the axis.
Image mean_pass(const Image& src, int k, bool horizontal) {
  const int radius = k / 2;
  const double inv_k = 1.0 / k;
  Image out(src.height(), src.width());
  for (int i = 0; i < src.height(); ++i) {
    for (int j = 0; j < src.width(); ++j) {
      double acc = 0.0;
      for (int t = -radius; t <= radius; ++t) {
        acc += horizontal ? sample_reflected(src, i, j + t)
                          : sample_reflected(src, i + t, j);
      }
      out.at(i, j) = acc * inv_k;
    }
  }
  return out;
}

}  // namespace

Image box_blur(const Image& img, int k) {
  if (k < 1 || k % 2 == 0) {
    throw ArgumentError("box blur size must be odd and >= 1, got " +
                        std::to_string(k));
  }
  if (k == 1) return img;
  return mean_pass(mean_pass(img, k, /*horizontal=*/true), k,
                   /*horizontal=*/false);
}

Image operator+(const Image& a, const Image& b) {
  require_same_size(a, b, "image addition");
  Image out(a.height(), a.width());
  for (int i = 0; i < a.height(); ++i) {
    for (int j = 0; j < a.width(); ++j) {
      out.at(i, j) = a.at(i, j) + b.at(i, j);
    }
  }
  return out;
}

Image operator-(const Image& a, const Image& b) {
  require_same_size(a, b, "image subtraction");
  Image out(a.height(), a.width());
  for (int i = 0; i < a.height(); ++i) {
    for (int j = 0; j < a.width(); ++j) {
      out.at(i, j) = a.at(i, j) - b.at(i, j);
    }
  }
  return out;
}

Image operator*(double scale, const Image& img) {
  Image out(img.height(), img.width());
  for (int i = 0; i < img.height(); ++i) {
    for (int j = 0; j < img.width(); ++j) {
      out.at(i, j) = scale * img.at(i, j);
    }
  }
  return out;
}

}  // namespace imgfuse
