// Copyright 2026 The qubomatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "qubomatch/graph_model.hpp"

namespace qubomatch {

/// Dense row-major 2-D field of doubles. Values are unconstrained; used for
/// blurred images, filter responses and gradients.
class ScalarField {
  public:
    ScalarField() = default;
    ScalarField(std::size_t width, std::size_t height, double fill = 0.0)
            : width_(width), height_(height), values_(width * height, fill) {}

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::span<const double> values() const noexcept { return values_; }

    double& operator()(std::size_t x, std::size_t y) { return values_[y * width_ + x]; }
    double operator()(std::size_t x, std::size_t y) const { return values_[y * width_ + x]; }

    /// Edge-clamped access.
    double clamped(long x, long y) const noexcept;

  private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<double> values_;
};

/// Grayscale image with intensities in [0, 1]; at least 3x3 pixels.
class RasterImage {
  public:
    /// Throws InvalidArgument on a size mismatch, a side shorter than 3 or a
    /// pixel outside [0, 1].
    RasterImage(std::size_t width, std::size_t height, std::vector<double> pixels);

    std::size_t width() const noexcept { return field_.width(); }
    std::size_t height() const noexcept { return field_.height(); }
    std::span<const double> pixels() const noexcept { return field_.values(); }
    double operator()(std::size_t x, std::size_t y) const { return field_(x, y); }
    const ScalarField& field() const noexcept { return field_; }

  private:
    ScalarField field_;
};

struct DetectorParams {
    int n_scales = 8;
    double sigma0 = 1.6;
    double scale_step = 1.2599210498948732;  // 2^(1/3)
    double response_threshold = 0.02;
    std::size_t max_points = 500;
    std::size_t descriptor_bins = 16;

    void validate() const;
};

/// Separable Gaussian blur, kernel radius ceil(3 sigma), edge-clamped borders.
ScalarField gaussian_blur(const ScalarField& img, double sigma);

/// 5-point Laplacian with edge-clamped borders.
ScalarField laplacian(const ScalarField& img);

/// Scale-normalized Laplacian-of-Gaussian response sigma^2 * lap(G_sigma * img).
ScalarField log_response(const RasterImage& img, double sigma);

/// Scale-space LoG extremum detector.
///
/// Builds the response stack at sigma0 * scale_step^k for k in [0, n_scales),
/// keeps strict 3x3x3 extrema on interior scales and pixels whose magnitude
/// exceeds response_threshold, and returns at most max_points of them ordered
/// by decreasing magnitude (ties by scale index, y, x). Orientation is the
/// direction of the smoothed gradient at the point; the descriptor is a
/// gradient-orientation histogram over a disk of radius 3 sigma measured
/// relative to that orientation.
std::vector<InterestPoint> detect(const RasterImage& img, const DetectorParams& params);

/// Parses a PGM image, ASCII (P2) or binary (P5), maxval up to 65535.
/// Intensities are divided by maxval. Throws ParseError.
RasterImage read_pgm(std::string_view data);
RasterImage read_pgm_file(const std::string& path);

/// Binary (P5) encoding with the given maxval; pixels are rounded.
std::vector<unsigned char> write_pgm(const RasterImage& img, unsigned maxval = 255);

}  // namespace qubomatch
