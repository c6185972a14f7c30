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
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace qubomatch {

/// Wraps an angle into [-pi, pi).
double wrap_angle(double theta) noexcept;

/// Unsigned angular distance |wrap(a - b)| in [0, pi]. Bit-exact symmetric in
/// its arguments.
double angular_distance(double a, double b) noexcept;

/// A salient image location: position, scale, orientation and a unit-norm
/// local descriptor.
///
/// The orientation is wrapped into [-pi, pi) and the descriptor normalized on
/// construction. Both steps leave already-valid values untouched, so
/// reconstructing a point from its own fields is exact. A non-positive scale
/// or a zero descriptor is rejected with InvalidArgument.
class InterestPoint {
  public:
    InterestPoint(double x, double y, double scale, double orientation,
                  std::vector<double> descriptor);

    double x() const noexcept { return x_; }
    double y() const noexcept { return y_; }
    double scale() const noexcept { return scale_; }
    double orientation() const noexcept { return orientation_; }
    std::span<const double> descriptor() const noexcept { return descriptor_; }
    std::size_t dimension() const noexcept { return descriptor_.size(); }

    bool operator==(const InterestPoint&) const = default;

  private:
    double x_;
    double y_;
    double scale_;
    double orientation_;
    std::vector<double> descriptor_;
};

/// Similarity-invariant relation between an ordered pair of points (a, b).
///
/// Every component is unchanged by a rotation, uniform scaling and translation
/// applied to both endpoints.
struct GeomRelation {
    double log_dist = 0.0;         // ln(|b - a| / a.scale)
    double bearing = 0.0;          // direction of b - a relative to a.orientation
    double log_scale_ratio = 0.0;  // ln(b.scale / a.scale)
    double d_orient = 0.0;         // b.orientation - a.orientation, wrapped

    bool operator==(const GeomRelation&) const = default;
};

/// Weights of the residual norm used by geometric_consistency, and the
/// residual r0 that maps to consistency -1.
struct GeomWeights {
    double dist = 1.0;
    double bearing = 1.0;
    double scale = 1.0;
    double orient = 1.0;
    double r0 = 1.0;

    /// Throws InvalidArgument unless all weights are >= 0, at least one is
    /// positive, and r0 > 0.
    void validate() const;

    bool operator==(const GeomWeights&) const = default;
};

/// The labeled graph of one image. Vertices are the interest points (indexed
/// from 0 in insertion order); edge labels are computed on demand with
/// geom_relation.
class ImageGraph {
  public:
    ImageGraph() = default;
    /// Throws DimensionMismatch if the descriptors differ in dimension.
    ImageGraph(std::string id, std::vector<InterestPoint> points);

    const std::string& id() const noexcept { return id_; }
    std::span<const InterestPoint> points() const noexcept { return points_; }
    const InterestPoint& operator[](std::size_t i) const { return points_.at(i); }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    /// Descriptor dimension, 0 for an empty graph.
    std::size_t dimension() const noexcept;

    bool operator==(const ImageGraph&) const = default;

  private:
    std::string id_;
    std::vector<InterestPoint> points_;
};

/// Global similarity transform p -> scale * R(rotation) p + (tx, ty).
struct SimilarityTransform {
    double rotation = 0.0;
    double scale = 1.0;
    double tx = 0.0;
    double ty = 0.0;
};

/// Moves, rescales and rotates a point; the descriptor is carried over.
InterestPoint transformed(const InterestPoint& p, const SimilarityTransform& t);
ImageGraph transformed(const ImageGraph& g, const SimilarityTransform& t);

/// Throws DegenerateGeometry if a and b are coincident.
GeomRelation geom_relation(const InterestPoint& a, const InterestPoint& b);

/// Scalar product of two unit descriptors, clamped to [-1, 1].
/// Throws DimensionMismatch on unequal lengths.
double feature_similarity(std::span<const double> f1, std::span<const double> f2);

/// Maps the weighted residual r between two relations to 1 - 2 r / r0, clamped
/// below at -1. Angular components are compared modulo 2 pi.
double geometric_consistency(const GeomRelation& g1, const GeomRelation& g2,
                             const GeomWeights& w) noexcept;

}  // namespace qubomatch
