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

#include "qubomatch/graph_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qubomatch/errors.hpp"

namespace qubomatch {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kUnitTolerance = 1e-12;

}  // namespace

double wrap_angle(double theta) noexcept {
    if (theta >= -kPi && theta < kPi) return theta;
    double r = std::fmod(theta + kPi, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    double wrapped = r - kPi;
    // fmod can return values that round up to exactly pi after the shift
    if (wrapped >= kPi) wrapped -= kTwoPi;
    return wrapped;
}

double angular_distance(double a, double b) noexcept {
    double d = std::fmod(std::max(a, b) - std::min(a, b), kTwoPi);
    return d > kPi ? kTwoPi - d : d;
}

InterestPoint::InterestPoint(double x, double y, double scale, double orientation,
                             std::vector<double> descriptor)
        : x_(x), y_(y), scale_(scale), orientation_(wrap_angle(orientation)),
          descriptor_(std::move(descriptor)) {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(orientation)) {
        throw InvalidArgument("interest point has a non-finite coordinate");
    }
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw InvalidArgument("interest point scale must be positive, got " +
                              std::to_string(scale));
    }
    double sq = 0.0;
    for (double v : descriptor_) sq += v * v;
    if (!(sq > 0.0) || !std::isfinite(sq)) {
        throw InvalidArgument("interest point descriptor must be a nonzero finite vector");
    }
    if (std::abs(sq - 1.0) > kUnitTolerance) {
        const double norm = std::sqrt(sq);
        for (double& v : descriptor_) v /= norm;
    }
}

void GeomWeights::validate() const {
    for (double w : {dist, bearing, scale, orient}) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw InvalidArgument("geometric weights must be finite and nonnegative");
        }
    }
    if (dist + bearing + scale + orient <= 0.0) {
        throw InvalidArgument("at least one geometric weight must be positive");
    }
    if (!(r0 > 0.0) || !std::isfinite(r0)) {
        throw InvalidArgument("residual scale r0 must be positive");
    }
}

ImageGraph::ImageGraph(std::string id, std::vector<InterestPoint> points)
        : id_(std::move(id)), points_(std::move(points)) {
    for (std::size_t k = 1; k < points_.size(); ++k) {
        if (points_[k].dimension() != points_[0].dimension()) {
            throw DimensionMismatch("point " + std::to_string(k) + " has descriptor dimension " +
                                    std::to_string(points_[k].dimension()) + ", expected " +
                                    std::to_string(points_[0].dimension()));
        }
    }
}

std::size_t ImageGraph::dimension() const noexcept {
    return points_.empty() ? 0 : points_.front().dimension();
}

InterestPoint transformed(const InterestPoint& p, const SimilarityTransform& t) {
    const double c = std::cos(t.rotation);
    const double s = std::sin(t.rotation);
    return InterestPoint(t.scale * (c * p.x() - s * p.y()) + t.tx,
                         t.scale * (s * p.x() + c * p.y()) + t.ty, t.scale * p.scale(),
                         p.orientation() + t.rotation,
                         std::vector<double>(p.descriptor().begin(), p.descriptor().end()));
}

ImageGraph transformed(const ImageGraph& g, const SimilarityTransform& t) {
    std::vector<InterestPoint> points;
    points.reserve(g.size());
    for (const InterestPoint& p : g.points()) points.push_back(transformed(p, t));
    return ImageGraph(g.id(), std::move(points));
}

GeomRelation geom_relation(const InterestPoint& a, const InterestPoint& b) {
    const double dx = b.x() - a.x();
    const double dy = b.y() - a.y();
    const double dist = std::hypot(dx, dy);
    if (!(dist > 0.0)) {
        throw DegenerateGeometry("geometric relation of coincident points is undefined");
    }
    return GeomRelation{
            .log_dist = std::log(dist / a.scale()),
            .bearing = wrap_angle(std::atan2(dy, dx) - a.orientation()),
            .log_scale_ratio = std::log(b.scale() / a.scale()),
            .d_orient = wrap_angle(b.orientation() - a.orientation()),
    };
}

double feature_similarity(std::span<const double> f1, std::span<const double> f2) {
    if (f1.size() != f2.size()) {
        throw DimensionMismatch("descriptor dimensions differ: " + std::to_string(f1.size()) +
                                " vs " + std::to_string(f2.size()));
    }
    double dot = 0.0;
    for (std::size_t k = 0; k < f1.size(); ++k) dot += f1[k] * f2[k];
    return std::clamp(dot, -1.0, 1.0);
}

double geometric_consistency(const GeomRelation& g1, const GeomRelation& g2,
                             const GeomWeights& w) noexcept {
    const double d_dist = g1.log_dist - g2.log_dist;
    const double d_bearing = angular_distance(g1.bearing, g2.bearing);
    const double d_scale = g1.log_scale_ratio - g2.log_scale_ratio;
    const double d_orient = angular_distance(g1.d_orient, g2.d_orient);
    const double r = std::sqrt(w.dist * d_dist * d_dist + w.bearing * d_bearing * d_bearing +
                               w.scale * d_scale * d_scale + w.orient * d_orient * d_orient);
    return std::max(-1.0, 1.0 - 2.0 * r / w.r0);
}

}  // namespace qubomatch
