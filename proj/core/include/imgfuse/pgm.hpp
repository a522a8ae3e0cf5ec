// Copyright 2026 The imgfuse authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "imgfuse/image.hpp"

namespace imgfuse {

/// Parses a binary (P5) or ASCII (P2) PGM with maxval <= 255. Comment lines
/// beginning '#' are permitted after the magic. Pixel values are copied
/// exactly as stored. Throws ParseError naming the byte offset of the first
/// offending byte.
Image decode_pgm(std::span<const std::uint8_t> bytes);

/// Encodes as binary P5 with maxval 255 and exactly one whitespace byte after
/// the maxval. Each pixel is clamped to [0, 255] and rounded half away from
/// zero; decode_pgm(encode_pgm(img)) == img whenever img already holds
/// integers in range.
std::vector<std::uint8_t> encode_pgm(const Image& img);

/// The writer's quantization rule for a single sample.
std::uint8_t quantize_u8(double v) noexcept;

/// Applies the writer's quantization to every pixel, keeping the Image type.
Image quantized(const Image& img);

/// File convenience wrappers around decode_pgm / encode_pgm.
Image read_pgm(const std::filesystem::path& path);
void write_pgm(const Image& img, const std::filesystem::path& path);

}  // namespace imgfuse
