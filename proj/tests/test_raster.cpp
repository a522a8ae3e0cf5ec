// Copyright 2026 The imgfuse authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "imgfuse/error.hpp"
#include "imgfuse/image.hpp"
#include "imgfuse/pgm.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using imgfuse::Image;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) {
  return std::vector<std::uint8_t>(s.begin(), s.end());
}

}  // namespace

TEST_CASE("image construction validates dimensions and buffer") {
  CHECK_THROWS_AS(Image(0, 4), imgfuse::ArgumentError);
  CHECK_THROWS_AS(Image(4, -1), imgfuse::ArgumentError);
  CHECK_THROWS_AS(Image::from_pixels(2, 2, {1.0, 2.0, 3.0}),
                  imgfuse::ArgumentError);
  CHECK_THROWS_AS(Image::from_pixels(1, 2, {1.0, std::nan("")}),
                  imgfuse::ArgumentError);

  const Image img = Image::from_pixels(2, 3, {1, 2, 3, 4, 5, 6});
  CHECK(img.height() == 2);
  CHECK(img.width() == 3);
  CHECK(img.at(1, 2) == 6.0);
}

TEST_CASE("image arithmetic requires matching shapes") {
  const Image a(2, 2, 1.0);
  const Image b(2, 3, 1.0);
  CHECK_THROWS_AS(a + b, imgfuse::StructureError);
  CHECK_THROWS_AS(a - b, imgfuse::StructureError);
  const Image sum = a + a;
  CHECK(sum.at(0, 0) == 2.0);
  const Image scaled = 3.0 * a;
  CHECK(scaled.at(1, 1) == 3.0);
}

TEST_CASE("reflected indexing mirrors without repeating the edge") {
  const Image row = Image::from_pixels(1, 3, {10, 20, 30});
  CHECK(imgfuse::sample_reflected(row, 0, -1) == 20);
  CHECK(imgfuse::sample_reflected(row, 0, 3) == 20);
  CHECK(imgfuse::sample_reflected(row, 0, 1) == 20);
  CHECK(imgfuse::sample_reflected(row, 0, -2) == 30);
  CHECK(imgfuse::sample_reflected(row, 0, 4) == 10);

  CHECK(imgfuse::reflect_index(0, 5) == 0);
  CHECK(imgfuse::reflect_index(4, 5) == 4);
  CHECK(imgfuse::reflect_index(5, 5) == 3);
  CHECK(imgfuse::reflect_index(-3, 5) == 3);
  for (int i = -6; i <= 6; ++i) {
    CHECK(imgfuse::reflect_index(i, 1) == 0);
  }
}

TEST_CASE("ascii decode transcribes header and samples") {
  const Image img = imgfuse::decode_pgm(bytes_of("P2 2 2 255 0 255 128 64"));
  CHECK(img.height() == 2);
  CHECK(img.width() == 2);
  CHECK(img.at(0, 0) == 0);
  CHECK(img.at(0, 1) == 255);
  CHECK(img.at(1, 0) == 128);
  CHECK(img.at(1, 1) == 64);
}

TEST_CASE("binary decode reads a 256x256 raster") {
  std::string data = "P5\n256 256\n255\n";
  data.resize(data.size() + 256 * 256, '\x42');
  const Image img = imgfuse::decode_pgm(bytes_of(data));
  CHECK(img.height() == 256);
  CHECK(img.width() == 256);
  CHECK(img.at(255, 255) == 0x42);
}

TEST_CASE("decode accepts comments between header tokens") {
  const Image img = imgfuse::decode_pgm(
      bytes_of("P2\n# a comment\n2 # inline\n1\n# before maxval\n255\n7 9\n"));
  CHECK(img.height() == 1);
  CHECK(img.width() == 2);
  CHECK(img.at(0, 0) == 7);
  CHECK(img.at(0, 1) == 9);
}

TEST_CASE("decode reports malformed input with byte offsets") {
  SUBCASE("wrong magic") {
    CHECK_THROWS_AS(imgfuse::decode_pgm(bytes_of("P6 1 1 255 x")),
                    imgfuse::ParseError);
    try {
      imgfuse::decode_pgm(bytes_of("P6 1 1 255 x"));
    } catch (const imgfuse::ParseError& e) {
      CHECK(e.byte_offset() == 1);
      CHECK(std::string(e.what()).find("byte offset 1") != std::string::npos);
    }
  }
  SUBCASE("missing samples in ascii data") {
    CHECK_THROWS_AS(imgfuse::decode_pgm(bytes_of("P2 2 2 255 0 255 128")),
                    imgfuse::ParseError);
  }
  SUBCASE("missing samples in binary data") {
    CHECK_THROWS_AS(imgfuse::decode_pgm(bytes_of("P5\n2 2\n255\nab")),
                    imgfuse::ParseError);
  }
  SUBCASE("maxval too large") {
    try {
      imgfuse::decode_pgm(bytes_of("P2 1 1 65535 0"));
      FAIL("expected ParseError");
    } catch (const imgfuse::ParseError& e) {
      CHECK(e.byte_offset() == 7);
      CHECK(std::string(e.what()).find("255") != std::string::npos);
    }
  }
  SUBCASE("non-numeric header token") {
    CHECK_THROWS_AS(imgfuse::decode_pgm(bytes_of("P2 two 2 255 0 0")),
                    imgfuse::ParseError);
  }
  SUBCASE("zero dimension") {
    CHECK_THROWS_AS(imgfuse::decode_pgm(bytes_of("P2 0 2 255")),
                    imgfuse::ParseError);
  }
  SUBCASE("junk after maxval in binary header") {
    CHECK_THROWS_AS(imgfuse::decode_pgm(bytes_of("P5\n1 1 255x\n\x10")),
                    imgfuse::ParseError);
  }
  SUBCASE("ascii sample above maxval") {
    CHECK_THROWS_AS(imgfuse::decode_pgm(bytes_of("P2 1 1 100 101")),
                    imgfuse::ParseError);
  }
  SUBCASE("binary sample above maxval") {
    std::string data = "P5\n1 1\n100\n";
    data.push_back('\xC8');
    CHECK_THROWS_AS(imgfuse::decode_pgm(bytes_of(data)), imgfuse::ParseError);
  }
}

TEST_CASE("encode emits a canonical binary header") {
  const Image img = Image::from_pixels(1, 2, {100.0, 200.0});
  const std::vector<std::uint8_t> bytes = imgfuse::encode_pgm(img);
  const std::string header(bytes.begin(), bytes.begin() + 11);
  CHECK(header == "P5\n2 1\n255\n");
  REQUIRE(bytes.size() == 13);
  CHECK(bytes[11] == 100);
  CHECK(bytes[12] == 200);
}

TEST_CASE("encode quantizes by clamp then round half away from zero") {
  CHECK(imgfuse::encode_pgm(Image(1, 1, 100.0)).back() == 100);
  CHECK(imgfuse::encode_pgm(Image(1, 1, -3.2)).back() == 0);
  CHECK(imgfuse::encode_pgm(Image(1, 1, 254.5)).back() == 255);

  CHECK(imgfuse::quantize_u8(0.5) == 1);
  CHECK(imgfuse::quantize_u8(1.5) == 2);
  CHECK(imgfuse::quantize_u8(-0.4) == 0);
  CHECK(imgfuse::quantize_u8(300.0) == 255);

  const Image q = imgfuse::quantized(Image(2, 2, 17.6));
  CHECK(q.at(1, 1) == 18.0);
}

TEST_CASE("decode of encode is the identity on integer images") {
  std::mt19937 rng(11);
  const Image img = testutil::random_integer_image(rng, 13, 29);
  const Image back = imgfuse::decode_pgm(imgfuse::encode_pgm(img));
  CHECK(testutil::max_abs_diff(img, back) == 0.0);
}

TEST_CASE("file read and write round-trip through the filesystem") {
  std::mt19937 rng(12);
  const Image img = testutil::random_integer_image(rng, 9, 17);
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "imgfuse_raster_rt.pgm";
  imgfuse::write_pgm(img, path);
  const Image back = imgfuse::read_pgm(path);
  CHECK(testutil::max_abs_diff(img, back) == 0.0);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(imgfuse::read_pgm(path), imgfuse::ArgumentError);
}

TEST_CASE("box blur validates the filter size") {
  const Image img(4, 4, 1.0);
  CHECK_THROWS_AS(imgfuse::box_blur(img, 4), imgfuse::ArgumentError);
  CHECK_THROWS_AS(imgfuse::box_blur(img, 0), imgfuse::ArgumentError);
  CHECK_THROWS_AS(imgfuse::box_blur(img, -3), imgfuse::ArgumentError);
}

TEST_CASE("box blur of a constant image is the same constant") {
  const Image img(6, 5, 42.0);
  for (int k : {1, 3, 5, 7}) {
    const Image out = imgfuse::box_blur(img, k);
    CHECK(testutil::max_abs_diff(out, img) < 1e-12);
  }
}

TEST_CASE("box blur with size 1 is the identity") {
  std::mt19937 rng(13);
  const Image img = testutil::random_image(rng, 7, 8);
  CHECK(testutil::max_abs_diff(imgfuse::box_blur(img, 1), img) == 0.0);
}

TEST_CASE("box blur of a center impulse matches the reference routine") {
  Image img(3, 3, 0.0);
  img.at(1, 1) = 9.0;
  const Image out = imgfuse::box_blur(img, 3);
  const Image expected = oracle::box_blur(img, 3);
  CHECK(testutil::max_abs_diff(out, expected) < 1e-12);
  // With mirrored borders every 3x3 window sees the impulse at least once;
  // corners see it four times, edge centers twice.
  CHECK(out.at(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(out.at(0, 1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(out.at(0, 0) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("box blur matches the reference routine on random images") {
  std::mt19937 rng(14);
  for (int k : {3, 5}) {
    const Image img = testutil::random_image(rng, 7, 5);
    CHECK(testutil::max_abs_diff(imgfuse::box_blur(img, k),
                                 oracle::box_blur(img, k)) < 1e-10);
  }
}

TEST_CASE("box blur output stays within the input range") {
  std::mt19937 rng(15);
  const Image img = testutil::random_image(rng, 16, 16, 10.0, 90.0);
  const Image out = imgfuse::box_blur(img, 5);
  for (int i = 0; i < out.height(); ++i) {
    for (int j = 0; j < out.width(); ++j) {
      CHECK(out.at(i, j) >= 10.0);
      CHECK(out.at(i, j) <= 90.0);
    }
  }
}

TEST_CASE("box blur is linear") {
  std::mt19937 rng(16);
  const Image x = testutil::random_image(rng, 12, 9);
  const Image y = testutil::random_image(rng, 12, 9);
  const double alpha = 0.7;
  const double beta = -1.3;
  const Image lhs = imgfuse::box_blur(alpha * x + beta * y, 5);
  const Image rhs = alpha * imgfuse::box_blur(x, 5) +
                    beta * imgfuse::box_blur(y, 5);
  CHECK(testutil::max_abs_diff(lhs, rhs) < 1e-9 * 255.0);
}
