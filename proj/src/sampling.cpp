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

#include "polardict/sampling.hpp"
#include "polardict/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>

namespace polardict
{
    namespace
    {
        // count * spacing / wavelength, snapped to the nearest integer when it is one up to rounding
        double axis_ratio(std::size_t count, const ArrayConfig &cfg)
        {
            const double ratio = double(count) * cfg.spacing() / cfg.wavelength();
            const double nearest = std::round(ratio);
            return std::abs(ratio - nearest) < 1e-9 * std::max(1.0, nearest) ? nearest : ratio;
        }
    }

    const char *to_string(DistanceMode mode)
    {
        return mode == DistanceMode::proposed ? "proposed" : "uniform";
    }

    const char *to_string(UniformPlacement placement)
    {
        return placement == UniformPlacement::endpoints ? "endpoints" : "cell_centered";
    }

    SamplingConfig SamplingConfig::proposed(double alpha_thr, double r_min, double r_max)
    {
        SamplingConfig s;
        s.mode = DistanceMode::proposed;
        s.alpha_thr = alpha_thr;
        s.r_min = r_min;
        s.r_max = r_max;
        return s;
    }

    SamplingConfig SamplingConfig::uniform(std::size_t n_points, double r_min, double r_max)
    {
        SamplingConfig s;
        s.mode = DistanceMode::uniform;
        s.n_points = n_points;
        s.r_min = r_min;
        s.r_max = r_max;
        return s;
    }

    void SamplingConfig::validate() const
    {
        if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max))
            throw ConfigError("sampling: require 0 < r_min < r_max < infinity");
        if (mode == DistanceMode::proposed && !(alpha_thr > 0.0 && std::isfinite(alpha_thr)))
            throw ConfigError("sampling: alpha_thr must be positive");
        if (mode == DistanceMode::uniform && n_points == 0)
            throw ConfigError("sampling: n_points must be at least 1");
        if (!(angle_fill > 0.0 && angle_fill <= 1.0))
            throw ConfigError("sampling: angle_fill must lie in (0, 1]");
    }

    int lattice_extent(std::size_t count, const ArrayConfig &cfg)
    {
        return static_cast<int>(std::floor(axis_ratio(count, cfg)));
    }

    std::vector<LatticePoint> angular_grid(const ArrayConfig &cfg, double angle_fill)
    {
        const double ratio_h = axis_ratio(cfg.m_h(), cfg), ratio_v = axis_ratio(cfg.m_v(), cfg);
        const int ext_h = lattice_extent(cfg.m_h(), cfg), ext_v = lattice_extent(cfg.m_v(), cfg);
        std::vector<LatticePoint> grid;
        for (int n = -ext_v; n <= ext_v; ++n)
        {
            const double omega = n / ratio_v;
            for (int m = -ext_h; m <= ext_h; ++m)
            {
                const double phi = m / ratio_h;
                if (phi * phi + omega * omega <= angle_fill + 1e-12)
                    grid.push_back({{phi, omega}, m, n});
            }
        }
        return grid;
    }

    double ring_scale(const ArrayConfig &cfg, double alpha_thr)
    {
        const double d = cfg.spacing();
        return 2.0 * double(cfg.m_h()) * double(cfg.m_v()) * d * d / (cfg.wavelength() * alpha_thr);
    }

    double ring_constant(const ArrayConfig &cfg, double alpha_thr, std::size_t s)
    {
        return double(s) / ring_scale(cfg, alpha_thr);
    }

    std::vector<RingSample> proposed_distances(const ArrayConfig &cfg, double alpha_thr, const AngularPair &angular,
                                               double r_min, double r_max)
    {
        if (!(alpha_thr > 0.0))
            throw InputDomainError("alpha_thr must be positive");
        const double weight = (1.0 - angular.phi_s * angular.phi_s) * (1.0 - angular.omega_s * angular.omega_s);
        std::vector<RingSample> out;
        if (!(weight > 0.0))
            return out;
        const double numer = ring_scale(cfg, alpha_thr) * weight;
        // r(s) = numer / s is decreasing: start just below the first ring inside r_max
        auto s = static_cast<std::size_t>(std::max(1.0, std::floor(numer / r_max)));
        for (;; ++s)
        {
            const double r = numer / double(s);
            if (r < r_min)
                break;
            if (r <= r_max)
                out.push_back({s, r});
        }
        return out;
    }

    std::vector<double> uniform_distances(std::size_t n_points, double r_min, double r_max,
                                          UniformPlacement placement)
    {
        if (n_points == 0)
            throw InputDomainError("n_points must be at least 1");
        std::vector<double> out(n_points);
        if (n_points == 1)
        {
            out[0] = 0.5 * (r_min + r_max);
            return out;
        }
        const double span = r_max - r_min;
        for (std::size_t k = 0; k < n_points; ++k)
        {
            out[k] = placement == UniformPlacement::endpoints
                         ? r_min + span * double(k) / double(n_points - 1)
                         : r_min + span * (double(k) + 0.5) / double(n_points);
        }
        out.back() = placement == UniformPlacement::endpoints ? r_max : out.back();
        return out;
    }

    bool GridPoint::is_far_field() const
    {
        return std::isinf(range);
    }

    PolarCoordinate GridPoint::polar() const
    {
        const double elevation = std::asin(std::clamp(angular.omega_s, -1.0, 1.0));
        const double ce = std::cos(elevation);
        const double azimuth = ce > 0.0 ? std::asin(std::clamp(angular.phi_s / ce, -1.0, 1.0)) : 0.0;
        return {azimuth, elevation, range};
    }

    Vec3 GridPoint::cartesian() const
    {
        const double depth = std::sqrt(std::max(0.0, 1.0 - angular.phi_s * angular.phi_s -
                                                         angular.omega_s * angular.omega_s));
        return {range * depth, range * angular.phi_s, range * angular.omega_s};
    }

    ColumnMatrix::ColumnMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), re_(rows * cols), im_(rows * cols)
    {
    }

    struct Dictionary::MatrixCache
    {
        std::once_flag once;
        ColumnMatrix matrix;
    };

    Dictionary::Dictionary(ArrayConfig array, SamplingConfig sampling, std::vector<GridPoint> points)
        : array_(std::move(array)), sampling_(std::move(sampling)), points_(std::move(points)),
          cache_(std::make_shared<MatrixCache>())
    {
        for (const auto &p : points_)
        {
            if (!(std::abs(p.angular.phi_s) <= 1.0 && std::abs(p.angular.omega_s) <= 1.0))
                throw ConfigError("dictionary: direction outside [-1, 1]^2");
            if (!p.is_far_field() && !(p.range >= sampling_.r_min && p.range <= sampling_.r_max))
                throw ConfigError("dictionary: grid range " + std::to_string(p.range) + " outside [r_min, r_max]");
        }

        std::vector<std::size_t> order(points_.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        auto key = [&](std::size_t k) {
            const auto &p = points_[k];
            return std::tuple(p.angular.phi_s, p.angular.omega_s, p.range);
        };
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
        for (std::size_t n = 1; n < order.size(); ++n)
        {
            const auto &a = points_[order[n - 1]], &b = points_[order[n]];
            const bool same_range = a.range == b.range ||
                                    std::abs(a.range - b.range) <= 1e-12 * std::max(1.0, std::abs(a.range));
            if (std::abs(a.angular.phi_s - b.angular.phi_s) <= 1e-12 &&
                std::abs(a.angular.omega_s - b.angular.omega_s) <= 1e-12 && same_range)
                throw ConfigError("dictionary: duplicate grid points " + std::to_string(order[n - 1]) + " and " +
                                  std::to_string(order[n]));
        }
    }

    ResponseVector Dictionary::column(std::size_t k) const
    {
        const auto &p = points_.at(k);
        return proposed_response(array_, p.angular, p.range);
    }

    const ColumnMatrix &Dictionary::matrix() const
    {
        std::call_once(cache_->once, [this] {
            ColumnMatrix mat(array_.size(), points_.size());
            for (std::size_t k = 0; k < points_.size(); ++k)
            {
                const ResponseVector col = column(k);
                auto re = mat.real(k), im = mat.imag(k);
                for (std::size_t m = 0; m < col.size(); ++m)
                {
                    re[m] = col.entries[m].real();
                    im[m] = col.entries[m].imag();
                }
            }
            cache_->matrix = std::move(mat);
        });
        return cache_->matrix;
    }

    Dictionary build_dictionary(const ArrayConfig &cfg, const SamplingConfig &sampling)
    {
        sampling.validate();
        std::vector<double> uniform;
        if (sampling.mode == DistanceMode::uniform)
            uniform = uniform_distances(sampling.n_points, sampling.r_min, sampling.r_max, sampling.placement);

        std::vector<GridPoint> points;
        for (const auto &dir : angular_grid(cfg, sampling.angle_fill))
        {
            if (sampling.append_far_field)
                points.push_back({dir.angular, std::numeric_limits<double>::infinity(), 0, dir.m, dir.n});
            if (sampling.mode == DistanceMode::proposed)
            {
                for (const auto &[s, r] : proposed_distances(cfg, sampling.alpha_thr, dir.angular, sampling.r_min,
                                                             sampling.r_max))
                    points.push_back({dir.angular, r, s, dir.m, dir.n});
            }
            else
            {
                for (std::size_t k = uniform.size(); k-- > 0;)
                    points.push_back({dir.angular, uniform[k], k + 1, dir.m, dir.n});
            }
        }
        if (points.empty())
            throw ConfigError("dictionary: no grid point survives the distance window");
        return Dictionary(cfg, sampling, std::move(points));
    }
}
