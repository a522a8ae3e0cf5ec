// Copyright 2026 The imgfuse authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "imgfuse/image.hpp"

namespace testutil {

inline imgfuse::Image random_image(std::mt19937& rng, int height, int width,
                                   double lo = 0.0, double hi = 255.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  imgfuse::Image img(height, width);
  for (int i = 0; i < height; ++i) {
    for (int j = 0; j < width; ++j) {
      img.at(i, j) = dist(rng);
    }
  }
  return img;
}

inline imgfuse::Image random_integer_image(std::mt19937& rng, int height,
                                           int width) {
  std::uniform_int_distribution<int> dist(0, 255);
  imgfuse::Image img(height, width);
  for (int i = 0; i < height; ++i) {
    for (int j = 0; j < width; ++j) {
      img.at(i, j) = static_cast<double>(dist(rng));
    }
  }
  return img;
}

inline double max_abs(const imgfuse::Image& img) {
  double m = 0.0;
  for (int i = 0; i < img.height(); ++i) {
    for (int j = 0; j < img.width(); ++j) {
      m = std::max(m, std::fabs(img.at(i, j)));
    }
  }
  return m;
}

inline double max_abs_diff(const imgfuse::Image& a, const imgfuse::Image& b) {
  double m = 0.0;
  for (int i = 0; i < a.height(); ++i) {
    for (int j = 0; j < a.width(); ++j) {
      m = std::max(m, std::fabs(a.at(i, j) - b.at(i, j)));
    }
  }
  return m;
}

/// Procedural grayscale scene with natural-image statistics: a luminance
/// gradient, opaque rectangles and disks at assigned levels, and band-limited
/// sinusoidal texture. Values are integers in [0, 255], so a PGM round trip
/// is lossless.
inline imgfuse::Image synth_scene(int height, int width, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  imgfuse::Image img(height, width);

  const double base = 60.0 + 100.0 * unit(rng);
  const double slope_i = (unit(rng) - 0.5) * 80.0 / height;
  const double slope_j = (unit(rng) - 0.5) * 80.0 / width;
  for (int i = 0; i < height; ++i) {
    for (int j = 0; j < width; ++j) {
      img.at(i, j) = base + slope_i * i + slope_j * j;
    }
  }

  for (int r = 0; r < 12; ++r) {
    const int rh = 4 + static_cast<int>(unit(rng) * height / 3);
    const int rw = 4 + static_cast<int>(unit(rng) * width / 3);
    const int top = static_cast<int>(unit(rng) * (height - rh));
    const int left = static_cast<int>(unit(rng) * (width - rw));
    const double level = 255.0 * unit(rng);
    for (int i = top; i < top + rh; ++i) {
      for (int j = left; j < left + rw; ++j) {
        img.at(i, j) = level;
      }
    }
  }

  for (int d = 0; d < 10; ++d) {
    const int radius = 3 + static_cast<int>(unit(rng) * height / 8);
    const int ci = radius + static_cast<int>(unit(rng) * (height - 2 * radius));
    const int cj = radius + static_cast<int>(unit(rng) * (width - 2 * radius));
    const double level = 255.0 * unit(rng);
    for (int i = ci - radius; i <= ci + radius; ++i) {
      for (int j = cj - radius; j <= cj + radius; ++j) {
        const int di = i - ci;
        const int dj = j - cj;
        if (di * di + dj * dj <= radius * radius) {
          img.at(i, j) = level;
        }
      }
    }
  }

  constexpr double kPi = 3.14159265358979323846;
  for (int s = 0; s < 24; ++s) {
    const double amp = 3.0 + 9.0 * unit(rng);
    const double cycles = 2.0 + 22.0 * unit(rng);
    const double theta = 2.0 * kPi * unit(rng);
    const double phase = 2.0 * kPi * unit(rng);
    const double fu = std::cos(theta) * cycles / height;
    const double fv = std::sin(theta) * cycles / width;
    for (int i = 0; i < height; ++i) {
      for (int j = 0; j < width; ++j) {
        img.at(i, j) += amp * std::sin(2.0 * kPi * (fu * i + fv * j) + phase);
      }
    }
  }

  for (int i = 0; i < height; ++i) {
    for (int j = 0; j < width; ++j) {
      img.at(i, j) = std::floor(std::clamp(img.at(i, j), 0.0, 255.0) + 0.5);
    }
  }
  return img;
}

}  // namespace testutil
