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

#ifndef POLARDICT_STEERING_HPP
#define POLARDICT_STEERING_HPP

#include "polardict/geometry.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace polardict
{
    using cplx = std::complex<double>;

    // Source location seen from the array origin
    struct PolarCoordinate
    {
        double azimuth = 0.0;   // [rad], in [-pi/2, pi/2]
        double elevation = 0.0; // [rad], in [-pi/2, pi/2]
        double range = 1.0;     // [m], > 0
    };

    // Sine-space image of a direction: phi_s = cos(el) sin(az), omega_s = sin(el)
    struct AngularPair
    {
        double phi_s = 0.0;
        double omega_s = 0.0;
        bool operator==(const AngularPair &) const = default;
    };

    enum class ResponseModel
    {
        exact,
        near_field_expansion,
        proposed,
        far_field
    };

    const char *to_string(ResponseModel model);

    // Unit-modulus array response, entry index m-1 = j * m_h + i
    struct ResponseVector
    {
        std::vector<cplx> entries;
        ResponseModel model = ResponseModel::exact;

        std::size_t size() const { return entries.size(); }
    };

    // Throws InputDomainError when angles leave [-pi/2, pi/2] or range <= 0
    void validate(const PolarCoordinate &coord);

    AngularPair angular_transform(const PolarCoordinate &coord);

    // [r cos(el) cos(az), r cos(el) sin(az), r sin(el)]
    Vec3 polar_to_cartesian(const PolarCoordinate &coord);

    // Euclidean distance between the source and antenna m (1-based)
    double exact_distance(const ArrayConfig &cfg, const PolarCoordinate &coord, std::size_t m);

    ResponseVector exact_response(const ArrayConfig &cfg, const PolarCoordinate &coord);
    ResponseVector expansion_response(const ArrayConfig &cfg, const PolarCoordinate &coord);
    ResponseVector proposed_response(const ArrayConfig &cfg, const PolarCoordinate &coord);

    // Proposed model addressed directly in sine space. An infinite range drops the
    // quadratic terms and yields the far-field response.
    ResponseVector proposed_response(const ArrayConfig &cfg, const AngularPair &angular, double range);

    ResponseVector far_field_response(const ArrayConfig &cfg, const AngularPair &angular);

    // |a^H b| / M
    double similarity(const ResponseVector &a, const ResponseVector &b);
    double similarity(std::span<const cplx> a, std::span<const cplx> b);

    struct ModelSimilarity
    {
        double expansion = 0.0;
        double proposed = 0.0;
    };

    // Similarity of the expansion and proposed models against the exact response,
    // computed in one pass without materializing the vectors.
    ModelSimilarity similarity_to_exact(const ArrayConfig &cfg, const PolarCoordinate &coord);
}

#endif
