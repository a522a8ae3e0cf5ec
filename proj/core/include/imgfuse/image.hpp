// Copyright 2026 The imgfuse authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace imgfuse {

/// Row-major grid of real-valued luminance samples, nominally in [0, 255].
/// Pixel values stay real through the whole processing chain; quantization to
/// the 8-bit grid happens only when a PGM is written. Detail bands produced
/// by the pyramid code are stored in the same type and may be negative.
class Image {
 public:
  Image(int height, int width, double fill = 0.0);

  /// Takes ownership of a row-major pixel buffer. pixels.size() must equal
  /// height * width and every value must be finite.
  static Image from_pixels(int height, int width, std::vector<double> pixels);

  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }

  double at(int i, int j) const noexcept { return pixels_[index(i, j)]; }
  double& at(int i, int j) noexcept { return pixels_[index(i, j)]; }

  std::span<const double> pixels() const noexcept { return pixels_; }

  bool same_size(const Image& other) const noexcept {
    return height_ == other.height_ && width_ == other.width_;
  }

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(j);
  }

  int height_;
  int width_;
  std::vector<double> pixels_;
};

/// Mirrors an index into [0, n) without repeating the boundary sample:
/// -1 -> 1, -2 -> 2, n -> n - 2. For n == 1 every index maps to 0.
inline int reflect_index(int i, int n) noexcept {
  if (n == 1) return 0;
  const int period = 2 * (n - 1);
  i = (i < 0 ? -i : i) % period;
  return i < n ? i : period - i;
}

/// Pixel lookup with mirrored borders; i and j may lie outside the image.
inline double sample_reflected(const Image& img, int i, int j) noexcept {
  return img.at(reflect_index(i, img.height()), reflect_index(j, img.width()));
}

/// Mean of the k x k neighborhood around each pixel, borders mirrored.
/// k must be odd and positive; output dimensions equal input dimensions.
Image box_blur(const Image& img, int k);

/// Elementwise arithmetic. Operands must have identical dimensions.
Image operator+(const Image& a, const Image& b);
Image operator-(const Image& a, const Image& b);
Image operator*(double scale, const Image& img);

}  // namespace imgfuse
