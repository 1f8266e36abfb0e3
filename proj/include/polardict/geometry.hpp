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

#ifndef POLARDICT_GEOMETRY_HPP
#define POLARDICT_GEOMETRY_HPP

#include <array>
#include <cstddef>

namespace polardict
{
    using Vec3 = std::array<double, 3>;

    inline constexpr double speed_of_light = 299792458.0;

    // Uniform planar array in the y-z plane with its first element at the origin.
    // Elements are numbered row by row: m = 1..M walks along a row of m_h elements first.
    class ArrayConfig
    {
    public:
        // spacing and wavelength in meters
        ArrayConfig(std::size_t m_h, std::size_t m_v, double spacing, double wavelength);

        // spacing given as a fraction of the wavelength
        static ArrayConfig from_wavelengths(std::size_t m_h, std::size_t m_v, double spacing_wl, double wavelength);

        // spacing as a fraction of the wavelength at the given carrier frequency [Hz]
        static ArrayConfig from_carrier(std::size_t m_h, std::size_t m_v, double spacing_wl, double carrier_hz);

        std::size_t m_h() const { return m_h_; }
        std::size_t m_v() const { return m_v_; }
        std::size_t size() const { return m_h_ * m_v_; }
        double spacing() const { return spacing_; }
        double wavelength() const { return wavelength_; }
        double wavenumber() const; // 2 pi / lambda

        bool operator==(const ArrayConfig &) const = default;

    private:
        std::size_t m_h_;
        std::size_t m_v_;
        double spacing_;
        double wavelength_;
    };

    // 64 x 32 elements, quarter-wavelength spacing, 0.1 m wavelength (3 GHz)
    ArrayConfig reference_array();

    struct AntennaIndex
    {
        std::size_t i; // horizontal, 0..m_h-1
        std::size_t j; // vertical, 0..m_v-1
        bool operator==(const AntennaIndex &) const = default;
    };

    // m is 1-based; throws InputDomainError outside 1..M
    AntennaIndex antenna_indices(const ArrayConfig &cfg, std::size_t m);
    Vec3 antenna_position(const ArrayConfig &cfg, std::size_t m);

    double aperture_length(const ArrayConfig &cfg);
    double fraunhofer_distance(const ArrayConfig &cfg);
    double fresnel_distance(const ArrayConfig &cfg);
}

#endif
