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

#include <cmath>
#include <numbers>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "qubomatch/errors.hpp"
#include "qubomatch/graph_model.hpp"
#include "qubomatch/rng.hpp"

using namespace qubomatch;
using Catch::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

InterestPoint point(double x, double y, double s, double theta) {
    return InterestPoint(x, y, s, theta, {1.0, 0.0});
}

void check_same_relation(const GeomRelation& a, const GeomRelation& b, double tol) {
    CHECK(std::abs(a.log_dist - b.log_dist) <= tol);
    CHECK(angular_distance(a.bearing, b.bearing) <= tol);
    CHECK(std::abs(a.log_scale_ratio - b.log_scale_ratio) <= tol);
    CHECK(angular_distance(a.d_orient, b.d_orient) <= tol);
}

}  // namespace

TEST_CASE("wrap_angle stays in [-pi, pi) and is 2 pi periodic", "[graph_model]") {
    CHECK(wrap_angle(kPi) == -kPi);
    CHECK(wrap_angle(-kPi) == -kPi);
    CHECK(wrap_angle(0.5) == 0.5);
    CHECK(wrap_angle(3 * kPi / 2) == Approx(-kPi / 2));

    Rng rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const double theta = rng.uniform(-50.0, 50.0);
        const double w = wrap_angle(theta);
        REQUIRE(w >= -kPi);
        REQUIRE(w < kPi);
        const auto k = static_cast<int>(rng.below(11)) - 5;
        CHECK(angular_distance(wrap_angle(theta + 2 * kPi * k), w) <= 1e-9);
        CHECK(wrap_angle(w) == w);
    }
}

TEST_CASE("angular_distance is symmetric and folds through pi", "[graph_model]") {
    CHECK(angular_distance(kPi - 0.1, -kPi + 0.1) == Approx(0.2));
    CHECK(angular_distance(0.3, -0.2) == angular_distance(-0.2, 0.3));
    CHECK(angular_distance(0.0, kPi) == Approx(kPi));
}

TEST_CASE("InterestPoint normalizes and validates", "[graph_model]") {
    const InterestPoint p(1, 2, 3, 3 * kPi, {3.0, 4.0});
    CHECK(p.descriptor()[0] == Approx(0.6));
    CHECK(p.descriptor()[1] == Approx(0.8));
    CHECK(p.orientation() == Approx(-kPi));

    CHECK_THROWS_AS(InterestPoint(0, 0, 0.0, 0, {1.0}), InvalidArgument);
    CHECK_THROWS_AS(InterestPoint(0, 0, -1.0, 0, {1.0}), InvalidArgument);
    CHECK_THROWS_AS(InterestPoint(0, 0, 1.0, 0, {0.0, 0.0}), InvalidArgument);
    CHECK_THROWS_AS(InterestPoint(0, 0, 1.0, 0, {}), InvalidArgument);
    CHECK_THROWS_AS(InterestPoint(NAN, 0, 1.0, 0, {1.0}), InvalidArgument);

    // rebuilding from its own fields is the identity
    const InterestPoint again(p.x(), p.y(), p.scale(), p.orientation(),
                              std::vector<double>(p.descriptor().begin(), p.descriptor().end()));
    CHECK(again == p);
}

TEST_CASE("ImageGraph requires one descriptor dimension", "[graph_model]") {
    CHECK_NOTHROW(ImageGraph("g", {point(0, 0, 1, 0), point(1, 1, 1, 0)}));
    CHECK_THROWS_AS(ImageGraph("g", {point(0, 0, 1, 0), InterestPoint(1, 1, 1, 0, {1, 0, 0})}),
                    DimensionMismatch);
    CHECK(ImageGraph().dimension() == 0);
}

TEST_CASE("geom_relation examples", "[graph_model]") {
    SECTION("unit displacement along the orientation axis") {
        const GeomRelation g = geom_relation(point(0, 0, 1, 0), point(1, 0, 1, 0));
        CHECK(g == GeomRelation{0, 0, 0, 0});
    }
    SECTION("the same pair rotated by pi/2 about the origin") {
        const GeomRelation g = geom_relation(point(0, 0, 1, kPi / 2), point(0, 1, 1, kPi / 2));
        CHECK(g.log_dist == Approx(0.0).margin(1e-15));
        CHECK(g.bearing == Approx(0.0).margin(1e-15));
        CHECK(g.log_scale_ratio == 0.0);
        CHECK(g.d_orient == 0.0);
    }
    SECTION("anchored at the first point") {
        // ln(2/2), atan2(2, 0) - 0, ln(4/2), pi/2 - 0
        const GeomRelation g = geom_relation(point(0, 0, 2, 0), point(0, 2, 4, kPi / 2));
        CHECK(g.log_dist == Approx(0.0).margin(1e-15));
        CHECK(g.bearing == Approx(kPi / 2));
        CHECK(g.log_scale_ratio == Approx(std::log(2.0)));
        CHECK(g.d_orient == Approx(kPi / 2));
    }
    SECTION("coincident points") {
        CHECK_THROWS_AS(geom_relation(point(1, 1, 1, 0), point(1, 1, 2, 1)), DegenerateGeometry);
    }
}

TEST_CASE("geom_relation is invariant under similarity transforms", "[graph_model][property]") {
    Rng rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        const InterestPoint a(rng.uniform(-100, 100), rng.uniform(-100, 100), rng.uniform(0.5, 10),
                              rng.uniform(-kPi, kPi), {1.0});
        const InterestPoint b(rng.uniform(-100, 100), rng.uniform(-100, 100), rng.uniform(0.5, 10),
                              rng.uniform(-kPi, kPi), {1.0});
        const SimilarityTransform t{rng.uniform(-kPi, kPi), std::exp(rng.uniform(-2, 2)),
                                    rng.uniform(-500, 500), rng.uniform(-500, 500)};
        const GeomRelation g = geom_relation(a, b);
        REQUIRE(g.bearing >= -kPi);
        REQUIRE(g.bearing < kPi);
        REQUIRE(g.d_orient >= -kPi);
        REQUIRE(g.d_orient < kPi);
        check_same_relation(geom_relation(transformed(a, t), transformed(b, t)), g, 1e-9);
    }
}

TEST_CASE("feature_similarity", "[graph_model]") {
    const std::vector<double> e0{1, 0, 0};
    const std::vector<double> e1{0, 1, 0};
    const std::vector<double> neg{-1, 0, 0};
    CHECK(feature_similarity(e0, e0) == 1.0);
    CHECK(feature_similarity(e0, e1) == 0.0);
    CHECK(feature_similarity(e0, neg) == -1.0);
    CHECK_THROWS_AS(feature_similarity(e0, std::vector<double>{1, 0}), DimensionMismatch);

    Rng rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> a(8);
        std::vector<double> b(8);
        for (auto& v : a) v = rng.normal();
        for (auto& v : b) v = rng.normal();
        const InterestPoint pa(0, 0, 1, 0, a);
        const InterestPoint pb(0, 0, 1, 0, b);
        const double d = feature_similarity(pa.descriptor(), pb.descriptor());
        CHECK(d == feature_similarity(pb.descriptor(), pa.descriptor()));
        CHECK(std::abs(d) <= 1.0 + 1e-12);
        CHECK(feature_similarity(pa.descriptor(), pa.descriptor()) == Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("geometric_consistency", "[graph_model]") {
    const GeomWeights unit{1, 1, 1, 1, 2.0};
    const GeomRelation g{0.5, -1.0, 0.25, 2.0};

    CHECK(geometric_consistency(g, g, GeomWeights{}) == 1.0);

    SECTION("residual equal to r0 saturates at -1") {
        GeomRelation h = g;
        h.log_dist += 2.0;
        CHECK(geometric_consistency(g, h, unit) == -1.0);
        h.log_dist += 5.0;
        CHECK(geometric_consistency(g, h, unit) == -1.0);
    }
    SECTION("log_dist residual of 0.5 with r0 = 2") {
        GeomRelation h = g;
        h.log_dist += 0.5;
        // 1 - 2 * 0.5 / 2
        CHECK(geometric_consistency(g, h, unit) == Approx(0.5));
    }
    SECTION("angles are compared across the wrap") {
        const GeomRelation a{0, kPi - 0.05, 0, 0};
        const GeomRelation b{0, -kPi + 0.05, 0, 0};
        CHECK(geometric_consistency(a, b, GeomWeights{}) == Approx(1.0 - 2.0 * 0.1));
    }
    SECTION("weights select components") {
        GeomRelation h = g;
        h.d_orient += 0.25;
        const GeomWeights no_orient{1, 1, 1, 0, 1.0};
        CHECK(geometric_consistency(g, h, no_orient) == 1.0);
        CHECK(geometric_consistency(g, h, GeomWeights{}) == Approx(0.5));
    }
    SECTION("symmetric and bounded") {
        Rng rng(5);
        for (int trial = 0; trial < 1000; ++trial) {
            const GeomRelation a{rng.uniform(-3, 3), rng.uniform(-kPi, kPi), rng.uniform(-3, 3),
                                 rng.uniform(-kPi, kPi)};
            const GeomRelation b{rng.uniform(-3, 3), rng.uniform(-kPi, kPi), rng.uniform(-3, 3),
                                 rng.uniform(-kPi, kPi)};
            const GeomWeights w{rng.uniform(0.1, 2), rng.uniform(0.1, 2), rng.uniform(0.1, 2),
                                rng.uniform(0.1, 2), rng.uniform(0.1, 5)};
            const double d = geometric_consistency(a, b, w);
            CHECK(d == geometric_consistency(b, a, w));
            CHECK(d >= -1.0);
            CHECK(d <= 1.0);
            CHECK(d < 1.0);
        }
    }
}

TEST_CASE("GeomWeights validation", "[graph_model]") {
    CHECK_NOTHROW(GeomWeights{}.validate());
    CHECK_THROWS_AS((GeomWeights{0, 0, 0, 0, 1}).validate(), InvalidArgument);
    CHECK_THROWS_AS((GeomWeights{-1, 1, 1, 1, 1}).validate(), InvalidArgument);
    CHECK_THROWS_AS((GeomWeights{1, 1, 1, 1, 0}).validate(), InvalidArgument);
}
