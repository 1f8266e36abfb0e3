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

#include "polardict/steering.hpp"
#include "polardict/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace polardict
{
    namespace
    {
        constexpr double half_pi = std::numbers::pi / 2.0;

        // Fills entries with exp(-i k d(i, j)), d being the model's estimate of r_m - r
        template <typename PathDifference>
        ResponseVector generate(const ArrayConfig &cfg, ResponseModel model, PathDifference &&diff)
        {
            const double k = cfg.wavenumber();
            ResponseVector v;
            v.model = model;
            v.entries.resize(cfg.size());
            std::size_t idx = 0;
            for (std::size_t j = 0; j < cfg.m_v(); ++j)
                for (std::size_t i = 0; i < cfg.m_h(); ++i)
                    v.entries[idx++] = std::polar(1.0, -k * diff(double(i), double(j)));
            return v;
        }

        void check_lengths(std::size_t a, std::size_t b)
        {
            if (a != b)
                throw InputDomainError("response vector lengths differ: " + std::to_string(a) + " vs " +
                                       std::to_string(b));
            if (a == 0)
                throw InputDomainError("empty response vector");
        }
    }

    const char *to_string(ResponseModel model)
    {
        switch (model)
        {
        case ResponseModel::exact:
            return "exact";
        case ResponseModel::near_field_expansion:
            return "near_field_expansion";
        case ResponseModel::proposed:
            return "proposed";
        case ResponseModel::far_field:
            return "far_field";
        }
        return "unknown";
    }

    void validate(const PolarCoordinate &coord)
    {
        if (!(std::abs(coord.azimuth) <= half_pi))
            throw InputDomainError("azimuth outside [-pi/2, pi/2]");
        if (!(std::abs(coord.elevation) <= half_pi))
            throw InputDomainError("elevation outside [-pi/2, pi/2]");
        if (!(coord.range > 0.0))
            throw InputDomainError("range must be positive");
    }

    AngularPair angular_transform(const PolarCoordinate &coord)
    {
        return {std::cos(coord.elevation) * std::sin(coord.azimuth), std::sin(coord.elevation)};
    }

    Vec3 polar_to_cartesian(const PolarCoordinate &coord)
    {
        const double ce = std::cos(coord.elevation);
        return {coord.range * ce * std::cos(coord.azimuth), coord.range * ce * std::sin(coord.azimuth),
                coord.range * std::sin(coord.elevation)};
    }

    double exact_distance(const ArrayConfig &cfg, const PolarCoordinate &coord, std::size_t m)
    {
        const Vec3 ue = polar_to_cartesian(coord);
        const Vec3 ant = antenna_position(cfg, m);
        const double dx = ue[0] - ant[0], dy = ue[1] - ant[1], dz = ue[2] - ant[2];
        return std::sqrt(dx * dx + dy * dy + dz * dz);
    }

    ResponseVector exact_response(const ArrayConfig &cfg, const PolarCoordinate &coord)
    {
        validate(coord);
        const auto [phi, omega] = angular_transform(coord);
        const double r = coord.range, delta = cfg.spacing();
        // r_m - r = (r_m^2 - r^2) / (r_m + r) avoids cancellation at large r
        return generate(cfg, ResponseModel::exact, [&](double i, double j) {
            const double excess = -2.0 * r * delta * (i * phi + j * omega) + delta * delta * (i * i + j * j);
            const double r_m = std::sqrt(r * r + excess);
            return excess / (r_m + r);
        });
    }

    ResponseVector expansion_response(const ArrayConfig &cfg, const PolarCoordinate &coord)
    {
        validate(coord);
        const auto [phi, omega] = angular_transform(coord);
        const double r = coord.range, delta = cfg.spacing();
        return generate(cfg, ResponseModel::near_field_expansion, [&](double i, double j) {
            const double proj = i * phi + j * omega;
            return -delta * proj + delta * delta * (i * i + j * j - proj * proj) / (2.0 * r);
        });
    }

    ResponseVector proposed_response(const ArrayConfig &cfg, const PolarCoordinate &coord)
    {
        validate(coord);
        return proposed_response(cfg, angular_transform(coord), coord.range);
    }

    ResponseVector proposed_response(const ArrayConfig &cfg, const AngularPair &angular, double range)
    {
        if (!(range > 0.0))
            throw InputDomainError("range must be positive");
        const double phi = angular.phi_s, omega = angular.omega_s, delta = cfg.spacing();
        const double curv = std::isinf(range) ? 0.0 : delta * delta / (2.0 * range);
        const double ch = 1.0 - phi * phi, cv = 1.0 - omega * omega;
        return generate(cfg, ResponseModel::proposed, [&](double i, double j) {
            return -delta * (i * phi + j * omega) + curv * (i * i * ch + j * j * cv);
        });
    }

    ResponseVector far_field_response(const ArrayConfig &cfg, const AngularPair &angular)
    {
        if (angular.phi_s * angular.phi_s + angular.omega_s * angular.omega_s > 1.0 + 1e-12)
            throw InputDomainError("far-field direction outside the visible region");
        const double delta = cfg.spacing();
        return generate(cfg, ResponseModel::far_field,
                        [&](double i, double j) { return -delta * (i * angular.phi_s + j * angular.omega_s); });
    }

    double similarity(std::span<const cplx> a, std::span<const cplx> b)
    {
        check_lengths(a.size(), b.size());
        cplx acc{0.0, 0.0};
        for (std::size_t m = 0; m < a.size(); ++m)
            acc += std::conj(a[m]) * b[m];
        return std::abs(acc) / double(a.size());
    }

    double similarity(const ResponseVector &a, const ResponseVector &b)
    {
        return similarity(std::span<const cplx>(a.entries), std::span<const cplx>(b.entries));
    }

    ModelSimilarity similarity_to_exact(const ArrayConfig &cfg, const PolarCoordinate &coord)
    {
        validate(coord);
        const auto [phi, omega] = angular_transform(coord);
        const double r = coord.range, delta = cfg.spacing(), k = cfg.wavenumber();
        const double ch = 1.0 - phi * phi, cv = 1.0 - omega * omega;
        double exp_re = 0.0, exp_im = 0.0, prop_re = 0.0, prop_im = 0.0;
        for (std::size_t jj = 0; jj < cfg.m_v(); ++jj)
        {
            const double j = double(jj);
            for (std::size_t ii = 0; ii < cfg.m_h(); ++ii)
            {
                const double i = double(ii);
                const double proj = i * phi + j * omega;
                const double excess = -2.0 * r * delta * proj + delta * delta * (i * i + j * j);
                const double exact = excess / (std::sqrt(r * r + excess) + r);
                const double linear = -delta * proj;
                const double expansion = linear + delta * delta * (i * i + j * j - proj * proj) / (2.0 * r);
                const double proposed = linear + delta * delta * (i * i * ch + j * j * cv) / (2.0 * r);
                // conj(approx) * exact = exp(-i k (exact - approx))
                const double pe = -k * (exact - expansion);
                const double pp = -k * (exact - proposed);
                exp_re += std::cos(pe);
                exp_im += std::sin(pe);
                prop_re += std::cos(pp);
                prop_im += std::sin(pp);
            }
        }
        const double n = double(cfg.size());
        return {std::hypot(exp_re, exp_im) / n, std::hypot(prop_re, prop_im) / n};
    }
}
