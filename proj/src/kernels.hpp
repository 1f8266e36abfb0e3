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

#ifndef POLARDICT_KERNELS_HPP
#define POLARDICT_KERNELS_HPP

#include <cmath>
#include <cstddef>

namespace polardict::detail
{
    // |sum conj(a) b| over split real/imaginary planes. Fixed four-way accumulation order,
    // so a given pair always produces the same bits.
    inline double conj_dot_mag(const double *are, const double *aim, const double *bre, const double *bim,
                               std::size_t n)
    {
        double re[4] = {0.0, 0.0, 0.0, 0.0};
        double im[4] = {0.0, 0.0, 0.0, 0.0};
        std::size_t m = 0;
        for (; m + 4 <= n; m += 4)
        {
            for (std::size_t l = 0; l < 4; ++l)
            {
                re[l] += are[m + l] * bre[m + l] + aim[m + l] * bim[m + l];
                im[l] += are[m + l] * bim[m + l] - aim[m + l] * bre[m + l];
            }
        }
        for (std::size_t l = 0; m < n; ++m, ++l)
        {
            re[l] += are[m] * bre[m] + aim[m] * bim[m];
            im[l] += are[m] * bim[m] - aim[m] * bre[m];
        }
        return std::hypot((re[0] + re[1]) + (re[2] + re[3]), (im[0] + im[1]) + (im[2] + im[3]));
    }
}

#endif
