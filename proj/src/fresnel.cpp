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

#include <array>
#include <cmath>
#include <numbers>

namespace polardict
{
    namespace
    {
        using cplx = std::complex<double>;

        // 15-point Kronrod abscissae on [-1, 1] (non-negative half) with its embedded 7-point Gauss rule
        constexpr std::array<double, 8> kronrod_nodes = {
            0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
        constexpr std::array<double, 8> kronrod_weights = {
            0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
        constexpr std::array<double, 4> gauss_weights = {
            0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
            0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

        constexpr double panel_tolerance = 1e-14;
        constexpr int max_depth = 40;
        // beyond this argument the asymptotic expansion is accurate to machine precision
        constexpr double asymptotic_threshold = 64.0;

        cplx integrand(double t)
        {
            return std::polar(1.0, 0.5 * std::numbers::pi * t * t);
        }

        cplx adaptive_gk15(double a, double b, int depth)
        {
            const double center = 0.5 * (a + b), half = 0.5 * (b - a);
            cplx kronrod = kronrod_weights[7] * integrand(center);
            cplx gauss = gauss_weights[3] * integrand(center);
            for (int n = 0; n < 7; ++n)
            {
                const double dx = half * kronrod_nodes[n];
                const cplx pair = integrand(center - dx) + integrand(center + dx);
                kronrod += kronrod_weights[n] * pair;
                if (n % 2 == 1)
                    gauss += gauss_weights[n / 2] * pair;
            }
            kronrod *= half;
            gauss *= half;
            if (std::abs(kronrod - gauss) <= panel_tolerance || depth >= max_depth)
                return kronrod;
            return adaptive_gk15(a, center, depth + 1) + adaptive_gk15(center, b, depth + 1);
        }

        // C + iS = (1+i)/2 - i exp(i pi x^2 / 2) (f + i g) with the auxiliary functions
        // f ~ 1/(pi x) sum (-1)^n (4n-1)!! / (pi x^2)^(2n), g ~ 1/(pi^2 x^3) sum (-1)^n (4n+1)!! / (pi x^2)^(2n)
        cplx asymptotic(double x)
        {
            const double z = std::numbers::pi * x * x;
            const double z2 = z * z;
            const double f = (1.0 - 3.0 / z2 + 105.0 / (z2 * z2) - 10395.0 / (z2 * z2 * z2)) / (std::numbers::pi * x);
            const double g = (1.0 - 15.0 / z2 + 945.0 / (z2 * z2) - 135135.0 / (z2 * z2 * z2)) /
                             (std::numbers::pi * std::numbers::pi * x * x * x);
            const double s = std::sin(0.5 * z), c = std::cos(0.5 * z);
            return {0.5 + f * s - g * c, 0.5 - f * c - g * s};
        }

        cplx fresnel_nonnegative(double x)
        {
            if (x == 0.0)
                return {0.0, 0.0};
            if (x > asymptotic_threshold)
                return asymptotic(x);
            // the local frequency of the integrand grows like t; keep each panel within about one period
            const auto panels = static_cast<int>(std::ceil(std::max(1.0, x * x)));
            const double width = x / panels;
            cplx sum{0.0, 0.0};
            for (int p = 0; p < panels; ++p)
                sum += adaptive_gk15(p * width, (p + 1 == panels) ? x : (p + 1) * width, 0);
            return sum;
        }
    }

    cplx fresnel_cs(double x)
    {
        const cplx v = fresnel_nonnegative(std::abs(x));
        return x < 0.0 ? -v : v;
    }

    double fresnel_c(double x)
    {
        return fresnel_cs(x).real();
    }

    double fresnel_s(double x)
    {
        return fresnel_cs(x).imag();
    }

    double fresnel_ratio(double x)
    {
        // C + iS = x (1 + i pi x^2 / 6 + ...), so the ratio is 1 - O(x^4)
        if (std::abs(x) < 1e-4)
            return 1.0;
        return std::abs(fresnel_cs(x)) / std::abs(x);
    }
}
