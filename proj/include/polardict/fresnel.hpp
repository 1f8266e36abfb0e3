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

#ifndef POLARDICT_FRESNEL_HPP
#define POLARDICT_FRESNEL_HPP

#include <complex>

namespace polardict
{
    // Fresnel integrals C(x) = int_0^x cos(pi t^2 / 2) dt and S(x) = int_0^x sin(pi t^2 / 2) dt.
    // Evaluated by adaptive Gauss-Kronrod quadrature to an absolute error below 1e-10.
    // Both are odd functions of x.
    double fresnel_c(double x);
    double fresnel_s(double x);
    std::complex<double> fresnel_cs(double x); // C(x) + i S(x)

    // |C(x) + i S(x)| / x, continued by its limit 1 at x = 0
    double fresnel_ratio(double x);
}

#endif
