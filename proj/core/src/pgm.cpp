// Copyright 2026 The imgfuse authors
// SPDX-License-Identifier: Apache-2.0

#include "imgfuse/pgm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "imgfuse/error.hpp"

namespace imgfuse {

namespace {

bool is_pgm_space(std::uint8_t c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

bool is_digit(std::uint8_t c) noexcept { return c >= '0' && c <= '9'; }

// Byte-offset-tracking scanner over the raw PGM stream.
struct Cursor {
  std::span<const std::uint8_t> bytes;
  std::size_t pos = 0;

  bool done() const noexcept { return pos >= bytes.size(); }
  std::uint8_t peek() const noexcept { return bytes[pos]; }

  // Whitespace and '#'-to-end-of-line comments are interchangeable between
  // header tokens.
  void skip_space_and_comments() {
    while (!done()) {
      if (is_pgm_space(peek())) {
        ++pos;
      } else if (peek() == '#') {
        while (!done() && peek() != '\n') ++pos;
      } else {
        return;
      }
    }
  }

  // Reads one unsigned decimal token; `what` names it in error messages.
  // Returns the value and stores the token's starting offset in *tok_pos.
  unsigned parse_uint(const char* what, std::size_t* tok_pos) {
    skip_space_and_comments();
    if (done()) {
      throw ParseError(std::string("unexpected end of data while reading ") +
                           what,
                       pos);
    }
    *tok_pos = pos;
    if (!is_digit(peek())) {
      throw ParseError(std::string("expected unsigned integer for ") + what,
                       pos);
    }
    unsigned value = 0;
    while (!done() && is_digit(peek())) {
      value = value * 10 + (peek() - '0');
      if (value > 1000000u) {
        throw ParseError(std::string(what) + " is implausibly large",
                         *tok_pos);
      }
      ++pos;
    }
    return value;
  }
};

}  // namespace

Image decode_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.empty() || bytes[0] != 'P') {
    throw ParseError("expected PGM magic \"P2\" or \"P5\"", 0);
  }
  if (bytes.size() < 2 || (bytes[1] != '2' && bytes[1] != '5')) {
    throw ParseError("expected PGM magic \"P2\" or \"P5\"", 1);
  }
  const bool binary = bytes[1] == '5';
  if (bytes.size() < 3 || !is_pgm_space(bytes[2])) {
    throw ParseError("expected whitespace after the PGM magic", 2);
  }

  Cursor cur{bytes, 2};
  std::size_t tok = 0;
  const unsigned width = cur.parse_uint("width", &tok);
  if (width == 0) throw ParseError("width must be positive", tok);
  const unsigned height = cur.parse_uint("height", &tok);
  if (height == 0) throw ParseError("height must be positive", tok);
  const unsigned maxval = cur.parse_uint("maxval", &tok);
  if (maxval == 0) throw ParseError("maxval must be positive", tok);
  if (maxval > 255) {
    throw ParseError("maxval " + std::to_string(maxval) +
                         " exceeds the supported maximum 255",
                     tok);
  }

  const std::size_t n_samples =
      static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<double> pixels;
  pixels.reserve(n_samples);

  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (cur.done()) {
      throw ParseError("truncated pixel data: stream ends after maxval",
                       cur.pos);
    }
    if (!is_pgm_space(cur.peek())) {
      throw ParseError("expected a single whitespace byte after maxval",
                       cur.pos);
    }
    ++cur.pos;
    if (bytes.size() - cur.pos < n_samples) {
      throw ParseError(
          "truncated pixel data: have " +
              std::to_string(bytes.size() - cur.pos) + " of " +
              std::to_string(n_samples) + " samples",
          bytes.size());
    }
    for (std::size_t s = 0; s < n_samples; ++s) {
      const std::uint8_t v = bytes[cur.pos + s];
      if (v > maxval) {
        throw ParseError("sample value " + std::to_string(v) +
                             " exceeds maxval " + std::to_string(maxval),
                         cur.pos + s);
      }
      pixels.push_back(static_cast<double>(v));
    }
  } else {
    for (std::size_t s = 0; s < n_samples; ++s) {
      cur.skip_space_and_comments();
      if (cur.done()) {
        throw ParseError("truncated pixel data: have " + std::to_string(s) +
                             " of " + std::to_string(n_samples) + " samples",
                         cur.pos);
      }
      const unsigned v = cur.parse_uint("sample", &tok);
      if (v > maxval) {
        throw ParseError("sample value " + std::to_string(v) +
                             " exceeds maxval " + std::to_string(maxval),
                         tok);
      }
      pixels.push_back(static_cast<double>(v));
    }
  }

  return Image::from_pixels(static_cast<int>(height), static_cast<int>(width),
                            std::move(pixels));
}

std::uint8_t quantize_u8(double v) noexcept {
  const double clamped = std::clamp(v, 0.0, 255.0);
  return static_cast<std::uint8_t>(std::llround(clamped));
}

Image quantized(const Image& img) {
  Image out(img.height(), img.width());
  for (int i = 0; i < img.height(); ++i) {
    for (int j = 0; j < img.width(); ++j) {
      out.at(i, j) = static_cast<double>(quantize_u8(img.at(i, j)));
    }
  }
  return out;
}

std::vector<std::uint8_t> encode_pgm(const Image& img) {
  const std::string header = "P5\n" + std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + static_cast<std::size_t>(img.height()) *
                               static_cast<std::size_t>(img.width()));
  for (int i = 0; i < img.height(); ++i) {
    for (int j = 0; j < img.width(); ++j) {
      out.push_back(quantize_u8(img.at(i, j)));
    }
  }
  return out;
}

Image read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ArgumentError("cannot open " + path.string() + " for reading");
  }
  std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                  std::istreambuf_iterator<char>()};
  if (in.bad()) {
    throw ArgumentError("read failure on " + path.string());
  }
  return decode_pgm(bytes);
}

void write_pgm(const Image& img, const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = encode_pgm(img);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw ArgumentError("cannot open " + path.string() + " for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw ArgumentError("write failure on " + path.string());
  }
}

}  // namespace imgfuse
