// Copyright 2026 The imgfuse authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line harness for the imgfuse library. Subcommands:
//
//   degrade     blur an image with an equal-weight box filter
//   fuse        fuse two same-size images (Laplacian pyramid or Haar wavelet)
//   evaluate    print MSE / NAE / PSNR of a test image against a reference
//   experiment  degrade two scenes, fuse each degraded pair, score everything
//
// All image I/O is 8-bit PGM. Reports are CSV with 4-decimal fixed-point
// numbers and LF line endings; an infinite PSNR prints as "inf".

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "imgfuse/error.hpp"
#include "imgfuse/fusion.hpp"
#include "imgfuse/image.hpp"
#include "imgfuse/metrics.hpp"
#include "imgfuse/pgm.hpp"
#include "imgfuse/pyramid.hpp"
#include "imgfuse/wavelet.hpp"

namespace {

namespace fs = std::filesystem;
using imgfuse::DetailRule;
using imgfuse::FusionConfig;
using imgfuse::FusionMethod;
using imgfuse::Image;

const std::map<std::string, FusionMethod> kMethodNames{
    {"laplacian", FusionMethod::kLaplacian},
    {"wavelet", FusionMethod::kWavelet},
};
const std::map<std::string, DetailRule> kRuleNames{
    {"maxabs", DetailRule::kMaxAbs},
    {"average", DetailRule::kAverage},
};

const char* method_name(FusionMethod m) {
  return m == FusionMethod::kLaplacian ? "laplacian" : "wavelet";
}
const char* rule_name(DetailRule r) {
  return r == DetailRule::kMaxAbs ? "maxabs" : "average";
}

// Accepts only odd positive integers (box filters need a center sample).
struct OddSizeValidator : CLI::Validator {
  OddSizeValidator() : CLI::Validator("ODD") {
    func_ = [](std::string& s) -> std::string {
      int v = 0;
      try {
        v = std::stoi(s);
      } catch (...) {
        return "blur size must be an integer, got '" + s + "'";
      }
      if (v < 1 || v % 2 == 0) {
        return "blur size must be an odd positive integer, got " + s;
      }
      return {};
    };
  }
};

std::string format_metric(double v) {
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string metrics_csv(const imgfuse::MetricsReport& r) {
  return format_metric(r.mse) + "," + format_metric(r.nae) + "," +
         format_metric(r.psnr);
}

void run_degrade(const std::string& input, const std::string& output, int k) {
  imgfuse::write_pgm(imgfuse::box_blur(imgfuse::read_pgm(input), k), output);
}

// Fuses through the same public operations fuse() composes, so the merged
// pyramid is available for the debug dump without a second code path
// diverging from it.
Image fuse_with_dump(const Image& a, const Image& b, const FusionConfig& cfg,
                     const fs::path& dump_dir) {
  const imgfuse::LaplacianPyramid p1 =
      imgfuse::laplacian_pyramid(a, cfg.n_levels, cfg.kernel);
  const imgfuse::LaplacianPyramid p2 =
      imgfuse::laplacian_pyramid(b, cfg.n_levels, cfg.kernel);
  std::vector<Image> bands;
  bands.reserve(p1.bands.size());
  for (std::size_t i = 0; i < p1.bands.size(); ++i) {
    bands.push_back(
        imgfuse::merge_detail(p1.bands[i], p2.bands[i], cfg.detail_rule));
  }
  const imgfuse::LaplacianPyramid merged{
      std::move(bands), imgfuse::merge_base(p1.base, p2.base), cfg.kernel};

  fs::create_directories(dump_dir);
  for (std::size_t i = 0; i < merged.bands.size(); ++i) {
    // Signed band values shifted to mid-gray for inspection; the dump is
    // lossy and never read back.
    Image shifted(merged.bands[i].height(), merged.bands[i].width());
    for (int r = 0; r < shifted.height(); ++r) {
      for (int c = 0; c < shifted.width(); ++c) {
        shifted.at(r, c) = merged.bands[i].at(r, c) + 128.0;
      }
    }
    imgfuse::write_pgm(shifted,
                       dump_dir / ("band" + std::to_string(i) + ".pgm"));
  }
  imgfuse::write_pgm(merged.base, dump_dir / "base.pgm");

  return imgfuse::reconstruct(merged);
}

void run_fuse(const std::string& in1, const std::string& in2,
              const std::string& output, const FusionConfig& cfg,
              const std::string& dump_dir) {
  if (!dump_dir.empty() && cfg.method != FusionMethod::kLaplacian) {
    throw imgfuse::ArgumentError(
        "--dump-pyramids applies only to --method laplacian");
  }
  const Image a = imgfuse::read_pgm(in1);
  const Image b = imgfuse::read_pgm(in2);
  std::cout << "fuse method=" << method_name(cfg.method)
            << " levels=" << cfg.n_levels << " rule=" << rule_name(cfg.detail_rule)
            << '\n';
  const Image fused = dump_dir.empty()
                          ? imgfuse::fuse(a, b, cfg)
                          : fuse_with_dump(a, b, cfg, dump_dir);
  imgfuse::write_pgm(fused, output);
}

void run_evaluate(const std::string& ref_path, const std::string& test_path) {
  const Image ref = imgfuse::read_pgm(ref_path);
  const Image test = imgfuse::read_pgm(test_path);
  const imgfuse::MetricsReport r = imgfuse::evaluate(ref, test);
  std::cout << ref_path << "," << test_path << "," << metrics_csv(r) << '\n';
}

struct ExperimentOptions {
  std::vector<std::string> sources;
  std::string out_dir;
  int blur_size = 5;
  int n_levels = 4;
  std::vector<FusionMethod> methods;  // empty = both
  bool has_rule = false;
  DetailRule rule = DetailRule::kAverage;
  bool uniform_blur = false;
  bool score_unquantized = false;
};

// Degrades one scene into a complementary pair: copy 1 carries the blur on
// the left half, copy 2 on the right half. With uniform_blur both copies are
// blurred everywhere, which makes them identical.
std::pair<Image, Image> degraded_pair(const Image& src, int k, bool uniform) {
  const Image blurred = imgfuse::box_blur(src, k);
  if (uniform) return {blurred, blurred};
  Image left(src.height(), src.width());
  Image right(src.height(), src.width());
  const int split = src.width() / 2;
  for (int i = 0; i < src.height(); ++i) {
    for (int j = 0; j < src.width(); ++j) {
      const bool in_left = j < split;
      left.at(i, j) = in_left ? blurred.at(i, j) : src.at(i, j);
      right.at(i, j) = in_left ? src.at(i, j) : blurred.at(i, j);
    }
  }
  return {std::move(left), std::move(right)};
}

void run_experiment(const ExperimentOptions& opt) {
  bool do_wavelet = opt.methods.empty();
  bool do_laplacian = opt.methods.empty();
  for (FusionMethod m : opt.methods) {
    (m == FusionMethod::kWavelet ? do_wavelet : do_laplacian) = true;
  }

  fs::create_directories(opt.out_dir);
  std::string csv = "image,variant,mse,nae,psnr\n";

  for (const std::string& source : opt.sources) {
    const Image pristine = imgfuse::read_pgm(source);
    const std::string stem = fs::path(source).stem().string();

    // The degraded copies are written as 8-bit files and the fusion consumes
    // exactly the quantized pixels those files hold.
    auto [copy1, copy2] =
        degraded_pair(pristine, opt.blur_size, opt.uniform_blur);
    copy1 = imgfuse::quantized(copy1);
    copy2 = imgfuse::quantized(copy2);
    imgfuse::write_pgm(copy1, fs::path(opt.out_dir) / (stem + "_input1.pgm"));
    imgfuse::write_pgm(copy2, fs::path(opt.out_dir) / (stem + "_input2.pgm"));

    const auto score = [&](const Image& test) {
      return imgfuse::evaluate(pristine,
                               opt.score_unquantized ? test
                                                     : imgfuse::quantized(test));
    };
    const auto add_row = [&](const std::string& variant,
                             const imgfuse::MetricsReport& r) {
      csv += stem + "," + variant + "," + metrics_csv(r) + "\n";
    };

    add_row("input", score(copy1));

    FusionConfig cfg;
    cfg.n_levels = opt.n_levels;
    if (do_wavelet) {
      cfg.method = FusionMethod::kWavelet;
      cfg.detail_rule =
          opt.has_rule ? opt.rule : imgfuse::default_detail_rule(cfg.method);
      const Image fused = imgfuse::fuse(copy1, copy2, cfg);
      imgfuse::write_pgm(imgfuse::quantized(fused),
                         fs::path(opt.out_dir) / (stem + "_wavelet.pgm"));
      add_row("wavelet", score(fused));
    }
    if (do_laplacian) {
      cfg.method = FusionMethod::kLaplacian;
      cfg.detail_rule =
          opt.has_rule ? opt.rule : imgfuse::default_detail_rule(cfg.method);
      const Image fused = imgfuse::fuse(copy1, copy2, cfg);
      imgfuse::write_pgm(imgfuse::quantized(fused),
                         fs::path(opt.out_dir) / (stem + "_laplacian.pgm"));
      add_row("laplacian", score(fused));
    }
  }

  const fs::path csv_path = fs::path(opt.out_dir) / "results.csv";
  std::ofstream out(csv_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw imgfuse::ArgumentError("cannot open " + csv_path.string() +
                                 " for writing");
  }
  out << csv;
  if (!out) {
    throw imgfuse::ArgumentError("write failure on " + csv_path.string());
  }
  std::cout << csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "imgfuse: grayscale image fusion via Laplacian pyramids or a "
      "single-level Haar wavelet, with an evaluation harness"};
  app.require_subcommand(1);
  const OddSizeValidator odd_size;

  // degrade
  std::string deg_in, deg_out;
  int deg_k = 5;
  CLI::App* degrade = app.add_subcommand(
      "degrade", "Blur an image with an equal-weight box filter");
  degrade->add_option("--k", deg_k, "Odd box filter size")->check(odd_size);
  degrade->add_option("input", deg_in, "Input PGM")->required();
  degrade->add_option("output", deg_out, "Output PGM")->required();
  degrade->callback([&] { run_degrade(deg_in, deg_out, deg_k); });

  // fuse
  std::string fuse_in1, fuse_in2, fuse_out, fuse_dump;
  FusionConfig fuse_cfg;
  CLI::App* fuse = app.add_subcommand(
      "fuse", "Fuse two same-size images into one");
  fuse->add_option("--method", fuse_cfg.method, "Fusion method")
      ->transform(CLI::CheckedTransformer(kMethodNames, CLI::ignore_case));
  fuse->add_option("--levels", fuse_cfg.n_levels,
                   "Pyramid decomposition depth (laplacian method)")
      ->check(CLI::PositiveNumber);
  CLI::Option* fuse_rule_opt =
      fuse->add_option("--rule", fuse_cfg.detail_rule,
                       "Detail coefficient rule (default per method)")
          ->transform(CLI::CheckedTransformer(kRuleNames, CLI::ignore_case));
  fuse->add_option("--dump-pyramids", fuse_dump,
                   "Directory for a debug dump of the merged pyramid "
                   "(laplacian only; bands shifted by +128)");
  fuse->add_option("input1", fuse_in1, "First input PGM")->required();
  fuse->add_option("input2", fuse_in2, "Second input PGM")->required();
  fuse->add_option("output", fuse_out, "Fused output PGM")->required();
  fuse->callback([&] {
    if (fuse_rule_opt->count() == 0) {
      fuse_cfg.detail_rule = imgfuse::default_detail_rule(fuse_cfg.method);
    }
    run_fuse(fuse_in1, fuse_in2, fuse_out, fuse_cfg, fuse_dump);
  });

  // evaluate
  std::string eval_ref, eval_test;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Print ref,test,mse,nae,psnr as one CSV row");
  evaluate->add_option("reference", eval_ref, "Reference PGM")->required();
  evaluate->add_option("test", eval_test, "Test PGM")->required();
  evaluate->callback([&] { run_evaluate(eval_ref, eval_test); });

  // experiment
  ExperimentOptions exp;
  CLI::App* experiment = app.add_subcommand(
      "experiment",
      "Degrade each scene into a complementary blurred pair, fuse the pair "
      "per method, and score all variants against the pristine scene");
  experiment->add_option("--k", exp.blur_size, "Odd box filter size")
      ->check(odd_size);
  experiment->add_option("--levels", exp.n_levels, "Pyramid depth")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--out", exp.out_dir, "Output directory")->required();
  experiment
      ->add_option("--methods", exp.methods,
                   "Subset of fusion methods to run (default: both)")
      ->transform(CLI::CheckedTransformer(kMethodNames, CLI::ignore_case));
  CLI::Option* exp_rule_opt =
      experiment
          ->add_option("--rule", exp.rule,
                       "Detail rule for every method (default per method)")
          ->transform(CLI::CheckedTransformer(kRuleNames, CLI::ignore_case));
  experiment->add_flag("--uniform-blur", exp.uniform_blur,
                       "Blur both copies over the full frame instead of "
                       "complementary halves");
  experiment->add_flag("--unquantized", exp.score_unquantized,
                       "Score real-valued fusion outputs instead of the "
                       "saved 8-bit images");
  std::string exp_src1, exp_src2;
  experiment->add_option("source1", exp_src1, "First source PGM")->required();
  experiment->add_option("source2", exp_src2, "Second source PGM")->required();
  experiment->callback([&] {
    exp.sources = {exp_src1, exp_src2};
    exp.has_rule = exp_rule_opt->count() > 0;
    run_experiment(exp);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "imgfuse: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
