// Copyright 2026 The imgfuse authors
// SPDX-License-Identifier: Apache-2.0

#include "imgfuse/pyramid.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "imgfuse/error.hpp"

namespace imgfuse {

namespace {

constexpr double kKernelTolerance = 1e-12;

int half_up(int n) noexcept { return (n + 1) / 2; }

std::string dims(const Image& img) {
  return std::to_string(img.height()) + "x" + std::to_string(img.width());
}

// One pass of the separable filter-and-subsample step along the chosen axis.
// Reflection happens per axis, so two passes equal the full 2D weighted sum.
Image reduce_axis(const Image& src, const Kernel5& kernel, bool horizontal) {
  const int h = horizontal ? src.height() : half_up(src.height());
  const int w = horizontal ? half_up(src.width()) : src.width();
  Image out(h, w);
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      double acc = 0.0;
      for (int m = -2; m <= 2; ++m) {
        acc += kernel.tap(m) * (horizontal
                                    ? sample_reflected(src, i, 2 * j + m)
                                    : sample_reflected(src, 2 * i + m, j));
      }
      out.at(i, j) = acc;
    }
  }
  return out;
}

// One pass of the upsample-and-filter step. Each pass carries gain 2, so the
// two passes together realize the 4x gain of the 2D operator. Only taps at
// source positions (x - m) / 2 with even x - m contribute.
Image expand_axis(const Image& src, int target, const Kernel5& kernel,
                  bool horizontal) {
  const int h = horizontal ? src.height() : target;
  const int w = horizontal ? target : src.width();
  const int n = horizontal ? src.width() : src.height();
  Image out(h, w);
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      const int x = horizontal ? j : i;
      double acc = 0.0;
      for (int m = -2; m <= 2; ++m) {
        if ((x - m) % 2 != 0) continue;
        const int s = reflect_index((x - m) / 2, n);
        acc += kernel.tap(m) * (horizontal ? src.at(i, s) : src.at(s, j));
      }
      out.at(i, j) = 2.0 * acc;
    }
  }
  return out;
}

void check_expand_target(int target, int source, const char* axis) {
  if (target != 2 * source && target != 2 * source - 1) {
    throw ArgumentError(std::string("expand target ") + axis + " " +
                        std::to_string(target) + " is not in {" +
                        std::to_string(2 * source - 1) + ", " +
                        std::to_string(2 * source) + "} for source " + axis +
                        " " + std::to_string(source));
  }
}

}  // namespace

Kernel5::Kernel5(const std::array<double, 5>& taps) : taps_(taps) {
  for (double t : taps_) {
    if (!std::isfinite(t)) {
      throw ArgumentError("kernel taps must be finite");
    }
  }
  if (std::abs(taps_[0] - taps_[4]) > kKernelTolerance ||
      std::abs(taps_[1] - taps_[3]) > kKernelTolerance) {
    throw ArgumentError("kernel must be symmetric: w(m) = w(-m)");
  }
  const double sum = taps_[0] + taps_[1] + taps_[2] + taps_[3] + taps_[4];
  if (std::abs(sum - 1.0) > kKernelTolerance) {
    throw ArgumentError("kernel taps must sum to 1, got " +
                        std::to_string(sum));
  }
  const double even = taps_[0] + taps_[2] + taps_[4];
  if (std::abs(even - 0.5) > kKernelTolerance) {
    throw ArgumentError(
        "even- and odd-parity taps must each sum to 1/2; even-parity sum is " +
        std::to_string(even));
  }
}

Kernel5 Kernel5::from_center_weight(double a) {
  return Kernel5(std::array<double, 5>{0.25 - a / 2.0, 0.25, a, 0.25,
                                       0.25 - a / 2.0});
}

Image reduce(const Image& img, const Kernel5& kernel) {
  return reduce_axis(reduce_axis(img, kernel, /*horizontal=*/true), kernel,
                     /*horizontal=*/false);
}

Image expand(const Image& img, int target_height, int target_width,
             const Kernel5& kernel) {
  check_expand_target(target_height, img.height(), "height");
  check_expand_target(target_width, img.width(), "width");
  return expand_axis(expand_axis(img, target_height, kernel,
                                 /*horizontal=*/false),
                     target_width, kernel, /*horizontal=*/true);
}

int max_pyramid_depth(int height, int width) noexcept {
  int depth = 0;
  while (height > 1 || width > 1) {
    height = half_up(height);
    width = half_up(width);
    ++depth;
  }
  return depth;
}

GaussianPyramid gaussian_pyramid(const Image& img, int n_levels,
                                 const Kernel5& kernel) {
  if (n_levels < 1) {
    throw ArgumentError("n_levels must be >= 1, got " +
                        std::to_string(n_levels));
  }
  const int max_depth = max_pyramid_depth(img.height(), img.width());
  if (n_levels > max_depth) {
    throw ArgumentError("n_levels " + std::to_string(n_levels) +
                        " is too deep for a " + dims(img) +
                        " image; the maximum feasible depth is " +
                        std::to_string(max_depth));
  }
  std::vector<Image> levels;
  levels.reserve(static_cast<std::size_t>(n_levels) + 1);
  levels.push_back(img);
  for (int l = 1; l <= n_levels; ++l) {
    levels.push_back(reduce(levels.back(), kernel));
  }
  return GaussianPyramid{std::move(levels), kernel};
}

LaplacianPyramid laplacian_pyramid(const Image& img, int n_levels,
                                   const Kernel5& kernel) {
  GaussianPyramid gp = gaussian_pyramid(img, n_levels, kernel);
  std::vector<Image> bands;
  bands.reserve(static_cast<std::size_t>(n_levels));
  for (int i = 0; i < n_levels; ++i) {
    const Image& fine = gp.levels[static_cast<std::size_t>(i)];
    const Image& coarse = gp.levels[static_cast<std::size_t>(i) + 1];
    bands.push_back(fine -
                    expand(coarse, fine.height(), fine.width(), kernel));
  }
  return LaplacianPyramid{std::move(bands), std::move(gp.levels.back()),
                          kernel};
}

Image reconstruct(const LaplacianPyramid& pyr) {
  Image current = pyr.base;
  for (int i = static_cast<int>(pyr.bands.size()) - 1; i >= 0; --i) {
    const Image& band = pyr.bands[static_cast<std::size_t>(i)];
    const bool height_ok = band.height() == 2 * current.height() ||
                           band.height() == 2 * current.height() - 1;
    const bool width_ok = band.width() == 2 * current.width() ||
                          band.width() == 2 * current.width() - 1;
    if (!height_ok || !width_ok) {
      throw StructureError("band " + std::to_string(i) + " is " + dims(band) +
                           " but the level below it is " + dims(current) +
                           "; bands must ceil-halve level by level");
    }
    current =
        band + expand(current, band.height(), band.width(), pyr.kernel);
  }
  return current;
}

}  // namespace imgfuse
