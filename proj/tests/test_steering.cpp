// SPDX-License-Identifier: Apache-2.0
//
// polardict: polar-domain dictionaries for near-field planar arrays
// Copyright (C) 2026 The polardict authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "polardict/errors.hpp"
#include "polardict/geometry.hpp"
#include "polardict/steering.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace polardict;

namespace
{
    constexpr double pi = std::numbers::pi;

    // Straight Cartesian evaluation of exp(-i k (|p - u_m| - r)) in long double
    std::vector<cplx> reference_exact(const ArrayConfig &cfg, const PolarCoordinate &c)
    {
        const long double x = c.range * std::cos((long double)c.elevation) * std::cos((long double)c.azimuth);
        const long double y = c.range * std::cos((long double)c.elevation) * std::sin((long double)c.azimuth);
        const long double z = c.range * std::sin((long double)c.elevation);
        const long double k = 2.0L * std::numbers::pi_v<long double> / cfg.wavelength();
        std::vector<cplx> out;
        for (std::size_t j = 0; j < cfg.m_v(); ++j)
            for (std::size_t i = 0; i < cfg.m_h(); ++i)
            {
                const long double dy = y - (long double)i * cfg.spacing();
                const long double dz = z - (long double)j * cfg.spacing();
                const long double rm = std::sqrt(x * x + dy * dy + dz * dz);
                const long double phase = -k * (rm - (long double)c.range);
                out.emplace_back(double(std::cos(phase)), double(std::sin(phase)));
            }
        return out;
    }

    PolarCoordinate random_coordinate(std::mt19937_64 &rng, double span, double r_lo, double r_hi)
    {
        std::uniform_real_distribution<double> ang(-span * pi / 2, span * pi / 2), rr(r_lo, r_hi);
        const double az = ang(rng), el = ang(rng);
        return {az, el, rr(rng)};
    }
}

TEST(Steering, AngularTransform)
{
    auto a = angular_transform({0.0, 0.0, 1.0});
    EXPECT_EQ(a.phi_s, 0.0);
    EXPECT_EQ(a.omega_s, 0.0);
    a = angular_transform({pi / 2, 0.0, 1.0});
    EXPECT_DOUBLE_EQ(a.phi_s, 1.0);
    EXPECT_EQ(a.omega_s, 0.0);
    a = angular_transform({pi / 4, pi / 6, 1.0});
    EXPECT_NEAR(a.phi_s, 0.61237243569579452455, 1e-15);
    EXPECT_NEAR(a.omega_s, 0.5, 1e-15);
}

TEST(Steering, VisibleRegion)
{
    std::mt19937_64 rng(11);
    for (int n = 0; n < 10000; ++n)
    {
        const auto c = random_coordinate(rng, 1.0, 1.0, 2.0);
        const auto a = angular_transform(c);
        const double lhs = a.phi_s * a.phi_s + a.omega_s * a.omega_s;
        const double rhs = 1.0 - std::pow(std::cos(c.elevation) * std::cos(c.azimuth), 2);
        EXPECT_NEAR(lhs, rhs, 1e-14);
        EXPECT_LE(lhs, 1.0 + 1e-15);
    }
}

TEST(Steering, ExactDistance)
{
    const auto cfg = reference_array();
    const PolarCoordinate c{0.4, -0.3, 12.0};
    EXPECT_NEAR(exact_distance(cfg, c, 1), 12.0, 1e-13);
    EXPECT_NEAR(exact_distance(cfg, {0.0, 0.0, 10.0}, 2), 10.000031249951172028, 1e-13);

    // UE straight in front of antenna m at depth x
    const std::size_t m = 200;
    const Vec3 u = antenna_position(cfg, m);
    const double x = 3.5;
    const double r = std::sqrt(x * x + u[1] * u[1] + u[2] * u[2]);
    const PolarCoordinate front{std::atan2(u[1], x), std::asin(u[2] / r), r};
    EXPECT_NEAR(exact_distance(cfg, front, m), x, 1e-12);
}

TEST(Steering, ExactResponseMatchesCartesianReference)
{
    const auto cfg = ArrayConfig::from_wavelengths(16, 8, 0.25, 0.1);
    std::mt19937_64 rng(3);
    for (int n = 0; n < 50; ++n)
    {
        const auto c = random_coordinate(rng, 0.95, 0.3, 40.0);
        const auto v = exact_response(cfg, c);
        const auto ref = reference_exact(cfg, c);
        ASSERT_EQ(v.size(), cfg.size());
        EXPECT_EQ(v.model, ResponseModel::exact);
        for (std::size_t m = 0; m < ref.size(); ++m)
            EXPECT_LT(std::abs(v.entries[m] - ref[m]), 1e-10);
    }
}

TEST(Steering, ExactResponseFirstEntryAndTwoElementPhase)
{
    const auto cfg = reference_array();
    const auto v = exact_response(cfg, {0.7, 0.2, 9.0});
    EXPECT_EQ(v.entries[0], cplx(1.0, 0.0));

    const double lambda = 0.1, delta = lambda / 4;
    const ArrayConfig two(2, 1, delta, lambda);
    const auto w = exact_response(two, {0.0, 0.0, 1.0});
    const double expected = -(2 * pi / lambda) * (std::sqrt(1.0 + delta * delta) - 1.0);
    EXPECT_NEAR(std::arg(w.entries[1]), expected, 1e-12);
}

TEST(Steering, FarFieldConvergence)
{
    const auto cfg = reference_array();
    const double fh = fraunhofer_distance(cfg);
    const auto ff = far_field_response(cfg, {0.0, 0.0});
    double prev = 0.0;
    for (int step = 1; step <= 10; ++step)
    {
        const double sim = similarity(exact_response(cfg, {0.0, 0.0, step * fh}), ff);
        EXPECT_GE(sim, prev - 1e-12) << "r = " << step * fh;
        prev = sim;
    }
    EXPECT_GE(prev, 0.99);

    // off-broadside direction as well
    const PolarCoordinate c{0.5, -0.2, 10 * fh};
    EXPECT_GE(similarity(exact_response(cfg, c), far_field_response(cfg, angular_transform(c))), 0.99);
}

TEST(Steering, ExpansionModel)
{
    const auto cfg = reference_array();
    EXPECT_EQ(expansion_response(cfg, {0.3, 0.1, 8.0}).entries[0], cplx(1.0, 0.0));

    const ArrayConfig single(1, 1, 0.05, 0.1);
    const PolarCoordinate c{0.3, 0.2, 5.0};
    EXPECT_EQ(expansion_response(single, c).entries, exact_response(single, c).entries);
}

TEST(Steering, ProposedReducesToExpansionForHorizontalUla)
{
    const ArrayConfig ula(64, 1, 0.025, 0.1);
    for (double az : {-1.2, -0.4, 0.0, 0.9, 1.5})
        for (double r : {2.0, 8.0, 30.0})
        {
            const PolarCoordinate c{az, 0.0, r};
            const auto p = proposed_response(ula, c), e = expansion_response(ula, c);
            for (std::size_t m = 0; m < p.size(); ++m)
                EXPECT_LT(std::abs(p.entries[m] - e.entries[m]), 1e-12);
        }
}

TEST(Steering, ProposedRegressionValues)
{
    const auto cfg = reference_array();
    EXPECT_EQ(proposed_response(cfg, {0.2, 0.3, 8.0}).entries[0], cplx(1.0, 0.0));
    // frozen from an independent numpy evaluation
    EXPECT_NEAR(similarity(proposed_response(cfg, {0.0, 0.0, 8.0}), exact_response(cfg, {0.0, 0.0, 8.0})),
                0.9995264588307659, 1e-12);
    const PolarCoordinate c{0.3, -0.2, 20.0};
    EXPECT_NEAR(similarity(proposed_response(cfg, c), exact_response(cfg, c)), 0.9980003849702028, 1e-12);
}

TEST(Steering, FarFieldModel)
{
    const auto cfg = reference_array();
    for (const auto &e : far_field_response(cfg, {0.0, 0.0}).entries)
        EXPECT_EQ(e, cplx(1.0, 0.0));

    const ArrayConfig two(2, 1, 0.05, 0.1);
    const auto v = far_field_response(two, {1.0, 0.0});
    EXPECT_NEAR(std::abs(v.entries[0] - cplx(1.0, 0.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(v.entries[1] - cplx(-1.0, 0.0)), 0.0, 1e-15);

    const AngularPair a{0.31, -0.42};
    const auto far = far_field_response(cfg, a);
    const auto inf = proposed_response(cfg, a, std::numeric_limits<double>::infinity());
    EXPECT_EQ(far.entries, inf.entries);
    EXPECT_GT(similarity(far, proposed_response(cfg, a, 1e9)), 1.0 - 1e-9);

    EXPECT_THROW(far_field_response(cfg, {0.9, 0.9}), InputDomainError);
}

TEST(Steering, Similarity)
{
    const auto cfg = ArrayConfig::from_wavelengths(16, 8, 0.5, 0.1);
    const auto v = proposed_response(cfg, {0.4, 0.3, 3.0});
    EXPECT_NEAR(similarity(v, v), 1.0, 1e-14);

    ResponseVector rotated = v;
    for (auto &e : rotated.entries)
        e *= std::polar(1.0, 1.234);
    EXPECT_NEAR(similarity(v, rotated), 1.0, 1e-14);

    // adjacent lattice points 1/16 apart in phi_s at half-wavelength spacing
    const auto a = far_field_response(cfg, {0.25, 0.0});
    const auto b = far_field_response(cfg, {0.25 + 2.0 / 16.0, 0.0});
    EXPECT_NEAR(similarity(a, b), 0.0, 1e-14);

    const auto small = far_field_response(ArrayConfig(4, 4, 0.05, 0.1), {0.0, 0.0});
    EXPECT_THROW(similarity(v, small), InputDomainError);
}

TEST(Steering, UnitModulusAllModels)
{
    const auto cfg = ArrayConfig::from_wavelengths(24, 12, 0.3, 0.1);
    std::mt19937_64 rng(5);
    for (int n = 0; n < 40; ++n)
    {
        const auto c = random_coordinate(rng, 1.0, 0.2, 50.0);
        for (const auto &v : {exact_response(cfg, c), expansion_response(cfg, c), proposed_response(cfg, c),
                              far_field_response(cfg, angular_transform(c))})
            for (const auto &e : v.entries)
                ASSERT_NEAR(std::abs(e), 1.0, 1e-12);
    }
}

TEST(Steering, CrossTermBoundHolds)
{
    // max(1 - phi^2, 1 - omega^2) >= |phi omega| everywhere in front of the array
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ang(-pi / 2, pi / 2);
    for (int n = 0; n < 100000; ++n)
    {
        const auto a = angular_transform({ang(rng), ang(rng), 1.0});
        ASSERT_GE(std::max(1.0 - a.phi_s * a.phi_s, 1.0 - a.omega_s * a.omega_s), std::abs(a.phi_s * a.omega_s));
    }
}

TEST(Steering, FusedSimilarityMatchesVectors)
{
    const auto cfg = ArrayConfig::from_wavelengths(32, 16, 0.25, 0.1);
    std::mt19937_64 rng(23);
    for (int n = 0; n < 20; ++n)
    {
        const auto c = random_coordinate(rng, 0.9, 1.0, 16.0);
        const auto fused = similarity_to_exact(cfg, c);
        const auto exact = exact_response(cfg, c);
        EXPECT_NEAR(fused.expansion, similarity(expansion_response(cfg, c), exact), 1e-12);
        EXPECT_NEAR(fused.proposed, similarity(proposed_response(cfg, c), exact), 1e-12);
    }
}

TEST(Steering, ExpansionBeatsProposedOnAverage)
{
    const auto cfg = reference_array();
    std::mt19937_64 rng(29);
    double sum_exp = 0.0, sum_prop = 0.0;
    for (int n = 0; n < 300; ++n)
    {
        const auto s = similarity_to_exact(cfg, random_coordinate(rng, 0.9, 8.0, 64.0));
        sum_exp += s.expansion;
        sum_prop += s.proposed;
    }
    EXPECT_GE(sum_exp, sum_prop);
}

TEST(Steering, RejectsInvalidCoordinates)
{
    const auto cfg = reference_array();
    EXPECT_THROW(exact_response(cfg, {2.0, 0.0, 1.0}), InputDomainError);
    EXPECT_THROW(exact_response(cfg, {0.0, -1.6, 1.0}), InputDomainError);
    EXPECT_THROW(proposed_response(cfg, {0.0, 0.0, 0.0}), InputDomainError);
    EXPECT_NO_THROW(exact_response(cfg, {pi / 2, -pi / 2, 1.0}));
}
