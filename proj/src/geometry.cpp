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

#include "polardict/geometry.hpp"
#include "polardict/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace polardict
{
    ArrayConfig::ArrayConfig(std::size_t m_h, std::size_t m_v, double spacing, double wavelength)
        : m_h_(m_h), m_v_(m_v), spacing_(spacing), wavelength_(wavelength)
    {
        if (m_h == 0 || m_v == 0)
            throw ConfigError("ArrayConfig: antenna counts must be positive");
        if (!(spacing > 0.0) || !std::isfinite(spacing))
            throw ConfigError("ArrayConfig: spacing must be positive and finite");
        if (!(wavelength > 0.0) || !std::isfinite(wavelength))
            throw ConfigError("ArrayConfig: wavelength must be positive and finite");
    }

    ArrayConfig ArrayConfig::from_wavelengths(std::size_t m_h, std::size_t m_v, double spacing_wl, double wavelength)
    {
        return ArrayConfig(m_h, m_v, spacing_wl * wavelength, wavelength);
    }

    ArrayConfig ArrayConfig::from_carrier(std::size_t m_h, std::size_t m_v, double spacing_wl, double carrier_hz)
    {
        if (!(carrier_hz > 0.0))
            throw ConfigError("ArrayConfig: carrier frequency must be positive");
        return from_wavelengths(m_h, m_v, spacing_wl, speed_of_light / carrier_hz);
    }

    double ArrayConfig::wavenumber() const
    {
        return 2.0 * std::numbers::pi / wavelength_;
    }

    ArrayConfig reference_array()
    {
        return ArrayConfig::from_wavelengths(64, 32, 0.25, 0.1);
    }

    AntennaIndex antenna_indices(const ArrayConfig &cfg, std::size_t m)
    {
        if (m < 1 || m > cfg.size())
            throw InputDomainError("antenna index " + std::to_string(m) + " outside 1.." + std::to_string(cfg.size()));
        return {(m - 1) % cfg.m_h(), (m - 1) / cfg.m_h()};
    }

    Vec3 antenna_position(const ArrayConfig &cfg, std::size_t m)
    {
        const auto [i, j] = antenna_indices(cfg, m);
        return {0.0, double(i) * cfg.spacing(), double(j) * cfg.spacing()};
    }

    double aperture_length(const ArrayConfig &cfg)
    {
        const double h = double(cfg.m_h()), v = double(cfg.m_v());
        return std::sqrt(h * h + v * v) * cfg.spacing();
    }

    double fraunhofer_distance(const ArrayConfig &cfg)
    {
        const double d = aperture_length(cfg);
        return 2.0 * d * d / cfg.wavelength();
    }

    double fresnel_distance(const ArrayConfig &cfg)
    {
        const double d = aperture_length(cfg);
        return 0.62 * std::sqrt(d * d * d / cfg.wavelength());
    }
}
