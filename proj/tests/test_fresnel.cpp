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

#include "polardict/fresnel.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace polardict;

TEST(Fresnel, Origin)
{
    EXPECT_EQ(fresnel_c(0.0), 0.0);
    EXPECT_EQ(fresnel_s(0.0), 0.0);
    EXPECT_EQ(fresnel_ratio(0.0), 1.0);
    EXPECT_NEAR(fresnel_ratio(1e-3), 1.0, 1e-10);
    EXPECT_NEAR(fresnel_ratio(2e-4), 1.0, 1e-12);
}

TEST(Fresnel, HighPrecisionValues)
{
    // 30-digit reference values
    struct Row
    {
        double x, c, s;
    };
    for (const auto &r : {Row{0.5, 0.49234422587144639288, 0.064732432859999277611},
                          Row{1.0, 0.77989340037682282947, 0.43825914739035476608},
                          Row{2.0, 0.4882534060753407545, 0.3434156783636982422},
                          Row{3.7, 0.5419456621544874129, 0.57498034988747290657},
                          Row{5.0, 0.5636311887040122311, 0.49919138191711688675}})
    {
        EXPECT_NEAR(fresnel_c(r.x), r.c, 1e-12) << "x = " << r.x;
        EXPECT_NEAR(fresnel_s(r.x), r.s, 1e-12) << "x = " << r.x;
    }
}

TEST(Fresnel, MatchesQuadratureOracle)
{
    for (int k = 1; k <= 50; ++k)
    {
        const double x = k / 10.0;
        const auto [c, s] = oracle::fresnel(x);
        EXPECT_NEAR(fresnel_c(x), c, 1e-10) << "x = " << x;
        EXPECT_NEAR(fresnel_s(x), s, 1e-10) << "x = " << x;
    }
}

TEST(Fresnel, OddSymmetry)
{
    for (double x : {0.3, 1.7, 4.2})
    {
        EXPECT_EQ(fresnel_c(-x), -fresnel_c(x));
        EXPECT_EQ(fresnel_s(-x), -fresnel_s(x));
    }
}

TEST(Fresnel, LargeArgumentsApproachOneHalf)
{
    // 30-digit references on both sides of the asymptotic branch
    const auto below = fresnel_cs(63.999999), above = fresnel_cs(64.000001), mid = fresnel_cs(20.5);
    EXPECT_NEAR(below.real(), 0.499998613490402085291149372398, 1e-10);
    EXPECT_NEAR(below.imag(), 0.495026408219018961506367125625, 1e-10);
    EXPECT_NEAR(above.real(), 0.500000613490383560476818811569, 1e-10);
    EXPECT_NEAR(above.imag(), 0.49502640821901896255356465619, 1e-10);
    EXPECT_NEAR(mid.real(), 0.505931169127561313008675548654, 1e-10);
    EXPECT_NEAR(mid.imag(), 0.485650158736676325892605779389, 1e-10);
    for (double x : {80.0, 500.0, 1e4})
    {
        EXPECT_NEAR(fresnel_c(x), 0.5, 1.0 / (std::numbers::pi * x) * (1.0 + 1e-6));
        EXPECT_NEAR(fresnel_s(x), 0.5, 1.0 / (std::numbers::pi * x) * (1.0 + 1e-6));
    }
}

TEST(Fresnel, RatioDecaysOverall)
{
    EXPECT_LT(fresnel_ratio(5.0), fresnel_ratio(1.0));
    EXPECT_LT(fresnel_ratio(1.0), 1.0);
    for (double x = 0.5; x < 10.0; x += 0.5)
        EXPECT_LE(fresnel_ratio(x), 1.0);
}
