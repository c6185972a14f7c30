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

#include "qubomatch/detector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qubomatch/errors.hpp"

namespace qubomatch {

double ScalarField::clamped(long x, long y) const noexcept {
    const long cx = std::clamp(x, 0L, static_cast<long>(width_) - 1);
    const long cy = std::clamp(y, 0L, static_cast<long>(height_) - 1);
    return values_[static_cast<std::size_t>(cy) * width_ + static_cast<std::size_t>(cx)];
}

RasterImage::RasterImage(std::size_t width, std::size_t height, std::vector<double> pixels) {
    if (width < 3 || height < 3) {
        throw InvalidArgument("image must be at least 3x3, got " + std::to_string(width) + "x" +
                              std::to_string(height));
    }
    if (pixels.size() != width * height) {
        throw InvalidArgument("pixel count " + std::to_string(pixels.size()) +
                              " does not match " + std::to_string(width) + "x" +
                              std::to_string(height));
    }
    field_ = ScalarField(width, height);
    for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t x = 0; x < width; ++x) {
            const double v = pixels[y * width + x];
            if (!(v >= 0.0 && v <= 1.0)) {
                throw InvalidArgument("pixel value outside [0, 1] at (" + std::to_string(x) +
                                      ", " + std::to_string(y) + ")");
            }
            field_(x, y) = v;
        }
    }
}

void DetectorParams::validate() const {
    if (n_scales < 3) throw InvalidArgument("n_scales must be at least 3");
    if (!(sigma0 > 0.0)) throw InvalidArgument("sigma0 must be positive");
    if (!(scale_step > 1.0)) throw InvalidArgument("scale_step must exceed 1");
    if (!(response_threshold >= 0.0)) {
        throw InvalidArgument("response_threshold must be nonnegative");
    }
    if (max_points < 1) throw InvalidArgument("max_points must be at least 1");
    if (descriptor_bins < 4) throw InvalidArgument("descriptor_bins must be at least 4");
}

namespace {

std::vector<double> gaussian_kernel(double sigma) {
    const auto radius = static_cast<long>(std::ceil(3.0 * sigma));
    std::vector<double> kernel(static_cast<std::size_t>(2 * radius + 1));
    double sum = 0.0;
    for (long k = -radius; k <= radius; ++k) {
        const double w = std::exp(-0.5 * static_cast<double>(k * k) / (sigma * sigma));
        kernel[static_cast<std::size_t>(k + radius)] = w;
        sum += w;
    }
    for (double& w : kernel) w /= sum;
    return kernel;
}

struct Gradient {
    double gx;
    double gy;
};

Gradient gradient_at(const ScalarField& f, long x, long y) {
    return {0.5 * (f.clamped(x + 1, y) - f.clamped(x - 1, y)),
            0.5 * (f.clamped(x, y + 1) - f.clamped(x, y - 1))};
}

struct Extremum {
    std::size_t scale_index;
    std::size_t x;
    std::size_t y;
    double magnitude;
};

bool is_strict_extremum(const std::vector<ScalarField>& stack, std::size_t k, std::size_t x,
                        std::size_t y) {
    const double v = stack[k](x, y);
    bool is_max = true;
    bool is_min = true;
    for (std::size_t dk = k - 1; dk <= k + 1; ++dk) {
        for (std::size_t yy = y - 1; yy <= y + 1; ++yy) {
            for (std::size_t xx = x - 1; xx <= x + 1; ++xx) {
                if (dk == k && yy == y && xx == x) continue;
                const double n = stack[dk](xx, yy);
                is_max = is_max && v > n;
                is_min = is_min && v < n;
                if (!is_max && !is_min) return false;
            }
        }
    }
    return true;
}

// Gradient-orientation histogram relative to `orientation`, magnitude and
// Gaussian weighted, with linear interpolation between adjacent bins.
std::vector<double> orientation_histogram(const ScalarField& blurred, std::size_t cx,
                                          std::size_t cy, double sigma, double orientation,
                                          std::size_t bins) {
    std::vector<double> hist(bins, 0.0);
    const double radius = 3.0 * sigma;
    const auto r = static_cast<long>(std::floor(radius));
    const double weight_sigma = 1.5 * sigma;
    const auto w = static_cast<long>(blurred.width());
    const auto h = static_cast<long>(blurred.height());
    const double bin_width = 2.0 * std::numbers::pi / static_cast<double>(bins);

    for (long dy = -r; dy <= r; ++dy) {
        for (long dx = -r; dx <= r; ++dx) {
            const auto d2 = static_cast<double>(dx * dx + dy * dy);
            if (d2 > radius * radius) continue;
            const long px = static_cast<long>(cx) + dx;
            const long py = static_cast<long>(cy) + dy;
            if (px < 0 || py < 0 || px >= w || py >= h) continue;
            const auto [gx, gy] = gradient_at(blurred, px, py);
            const double mag = std::hypot(gx, gy);
            if (mag == 0.0) continue;
            const double weight = mag * std::exp(-0.5 * d2 / (weight_sigma * weight_sigma));
            const double rel = wrap_angle(std::atan2(gy, gx) - orientation);
            const double pos = (rel + std::numbers::pi) / bin_width - 0.5;
            const double lower = std::floor(pos);
            const double frac = pos - lower;
            const auto nb = static_cast<long>(bins);
            const auto b0 = static_cast<std::size_t>(((static_cast<long>(lower) % nb) + nb) % nb);
            const std::size_t b1 = (b0 + 1) % bins;
            hist[b0] += (1.0 - frac) * weight;
            hist[b1] += frac * weight;
        }
    }
    return hist;
}

}  // namespace

ScalarField gaussian_blur(const ScalarField& img, double sigma) {
    if (!(sigma > 0.0)) throw InvalidArgument("blur sigma must be positive");
    const std::vector<double> kernel = gaussian_kernel(sigma);
    const auto radius = static_cast<long>(kernel.size() / 2);
    const std::size_t w = img.width();
    const std::size_t h = img.height();

    ScalarField horizontal(w, h);
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            double acc = 0.0;
            for (long k = -radius; k <= radius; ++k) {
                acc += kernel[static_cast<std::size_t>(k + radius)] *
                       img.clamped(static_cast<long>(x) + k, static_cast<long>(y));
            }
            horizontal(x, y) = acc;
        }
    }
    ScalarField out(w, h);
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            double acc = 0.0;
            for (long k = -radius; k <= radius; ++k) {
                acc += kernel[static_cast<std::size_t>(k + radius)] *
                       horizontal.clamped(static_cast<long>(x), static_cast<long>(y) + k);
            }
            out(x, y) = acc;
        }
    }
    return out;
}

ScalarField laplacian(const ScalarField& img) {
    ScalarField out(img.width(), img.height());
    for (std::size_t y = 0; y < img.height(); ++y) {
        for (std::size_t x = 0; x < img.width(); ++x) {
            const auto lx = static_cast<long>(x);
            const auto ly = static_cast<long>(y);
            const double c = img(x, y);
            // differences first, so a locally constant field gives exactly 0
            out(x, y) = (img.clamped(lx - 1, ly) - c) + (img.clamped(lx + 1, ly) - c) +
                        (img.clamped(lx, ly - 1) - c) + (img.clamped(lx, ly + 1) - c);
        }
    }
    return out;
}

namespace {

ScalarField scale_normalized_laplacian(const ScalarField& blurred, double sigma) {
    ScalarField out = laplacian(blurred);
    ScalarField scaled(out.width(), out.height());
    for (std::size_t y = 0; y < out.height(); ++y) {
        for (std::size_t x = 0; x < out.width(); ++x) scaled(x, y) = sigma * sigma * out(x, y);
    }
    return scaled;
}

}  // namespace

ScalarField log_response(const RasterImage& img, double sigma) {
    return scale_normalized_laplacian(gaussian_blur(img.field(), sigma), sigma);
}

std::vector<InterestPoint> detect(const RasterImage& img, const DetectorParams& params) {
    params.validate();
    const auto n_scales = static_cast<std::size_t>(params.n_scales);

    std::vector<double> sigmas(n_scales);
    std::vector<ScalarField> blurred(n_scales);
    std::vector<ScalarField> responses(n_scales);
    for (std::size_t k = 0; k < n_scales; ++k) {
        sigmas[k] = params.sigma0 * std::pow(params.scale_step, static_cast<double>(k));
        blurred[k] = gaussian_blur(img.field(), sigmas[k]);
        responses[k] = scale_normalized_laplacian(blurred[k], sigmas[k]);
    }

    // candidates are generated in (scale, y, x) order; the stable sort keeps it
    // as the tie-break
    std::vector<Extremum> extrema;
    for (std::size_t k = 1; k + 1 < n_scales; ++k) {
        for (std::size_t y = 1; y + 1 < img.height(); ++y) {
            for (std::size_t x = 1; x + 1 < img.width(); ++x) {
                const double magnitude = std::abs(responses[k](x, y));
                if (!(magnitude > params.response_threshold)) continue;
                if (is_strict_extremum(responses, k, x, y)) {
                    extrema.push_back({k, x, y, magnitude});
                }
            }
        }
    }
    std::stable_sort(extrema.begin(), extrema.end(),
                     [](const Extremum& a, const Extremum& b) { return a.magnitude > b.magnitude; });

    std::vector<InterestPoint> points;
    for (const Extremum& e : extrema) {
        if (points.size() >= params.max_points) break;
        const double sigma = sigmas[e.scale_index];
        const ScalarField& smooth = blurred[e.scale_index];
        const auto [gx, gy] =
                gradient_at(smooth, static_cast<long>(e.x), static_cast<long>(e.y));
        const double orientation = std::atan2(gy, gx);
        std::vector<double> hist = orientation_histogram(smooth, e.x, e.y, sigma, orientation,
                                                         params.descriptor_bins);
        if (std::all_of(hist.begin(), hist.end(), [](double v) { return v == 0.0; })) continue;
        points.emplace_back(static_cast<double>(e.x), static_cast<double>(e.y), sigma,
                            orientation, std::move(hist));
    }
    return points;
}

}  // namespace qubomatch
