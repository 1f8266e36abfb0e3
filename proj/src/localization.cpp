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

#include "polardict/localization.hpp"
#include "polardict/errors.hpp"

#include "kernels.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace polardict
{
    namespace
    {
        std::uint64_t splitmix64(std::uint64_t x)
        {
            x += 0x9e3779b97f4a7c15ULL;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            return x ^ (x >> 31);
        }

        double squared_distance(const Vec3 &a, const Vec3 &b)
        {
            const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
            return dx * dx + dy * dy + dz * dz;
        }

        std::size_t nearest_of(const std::vector<Vec3> &grid, const Vec3 &target)
        {
            std::size_t best = 0;
            double best_d = squared_distance(grid[0], target);
            for (std::size_t k = 1; k < grid.size(); ++k)
            {
                const double d = squared_distance(grid[k], target);
                if (d < best_d)
                {
                    best_d = d;
                    best = k;
                }
            }
            return best;
        }

        std::vector<Vec3> grid_cartesian(const Dictionary &dict)
        {
            std::vector<Vec3> out;
            out.reserve(dict.size());
            for (const auto &p : dict.points())
                out.push_back(p.cartesian());
            return out;
        }
    }

    RandomStream trial_stream(std::uint64_t master_seed, std::uint64_t snr_index, std::uint64_t trial)
    {
        const std::uint64_t a = splitmix64(master_seed);
        const std::uint64_t b = splitmix64(a ^ splitmix64(snr_index + 0x632be59bd9b4e019ULL));
        const std::uint64_t c = splitmix64(b ^ splitmix64(trial + 0x85157af5ULL));
        std::seed_seq seq{std::uint32_t(c), std::uint32_t(c >> 32), std::uint32_t(snr_index), std::uint32_t(trial)};
        return RandomStream(seq);
    }

    void TrialConfig::validate() const
    {
        if (!(angle_span >= 0.0 && angle_span <= 1.0))
            throw ConfigError("trials: angle_span must lie in [0, 1]");
        if (!(r_min > 0.0) || !(r_max > r_min))
            throw ConfigError("trials: require 0 < r_min < r_max");
        if (n_trials == 0)
            throw ConfigError("trials: n_trials must be at least 1");
        if (snr_db.empty())
            throw ConfigError("trials: empty SNR grid");
        for (double s : snr_db)
            if (std::isnan(s) || s == -std::numeric_limits<double>::infinity())
                throw ConfigError("trials: SNR values must be finite or +inf");
    }

    PolarCoordinate drop_ue(RandomStream &rng, const TrialConfig &trial)
    {
        const double half = trial.angle_span * std::numbers::pi / 2.0;
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        PolarCoordinate c;
        c.azimuth = -half + 2.0 * half * unit(rng);
        c.elevation = -half + 2.0 * half * unit(rng);
        c.range = trial.r_min + (trial.r_max - trial.r_min) * unit(rng);
        return c;
    }

    std::size_t nearest_grid_point(const Dictionary &dict, const PolarCoordinate &coord)
    {
        if (dict.size() == 0)
            throw InputDomainError("nearest grid point of an empty dictionary");
        return nearest_of(grid_cartesian(dict), polar_to_cartesian(coord));
    }

    std::vector<cplx> received_signal(const ArrayConfig &cfg, const PolarCoordinate &coord, double snr_db,
                                      RandomStream &rng)
    {
        std::vector<cplx> y = exact_response(cfg, coord).entries;
        if (snr_db == std::numeric_limits<double>::infinity())
            return y;
        const double sigma = std::sqrt(0.5 * std::pow(10.0, -snr_db / 10.0));
        std::normal_distribution<double> gauss(0.0, sigma);
        for (auto &v : y)
        {
            const double re = gauss(rng);
            const double im = gauss(rng);
            v += cplx(re, im);
        }
        return y;
    }

    std::size_t matched_filter_estimate(const Dictionary &dict, std::span<const cplx> y)
    {
        const ColumnMatrix &mat = dict.matrix();
        if (y.size() != mat.rows())
            throw InputDomainError("received signal length " + std::to_string(y.size()) + " does not match M = " +
                                   std::to_string(mat.rows()));
        std::vector<double> yre(y.size()), yim(y.size());
        for (std::size_t m = 0; m < y.size(); ++m)
        {
            yre[m] = y[m].real();
            yim[m] = y[m].imag();
        }
        std::size_t best = 0;
        double best_v = -1.0;
        for (std::size_t k = 0; k < mat.cols(); ++k)
        {
            const double v = detail::conj_dot_mag(mat.real(k).data(), mat.imag(k).data(), yre.data(), yim.data(),
                                                  y.size());
            if (v > best_v)
            {
                best_v = v;
                best = k;
            }
        }
        return best;
    }

    DictionaryDescriptor describe(const Dictionary &dict)
    {
        const auto &s = dict.sampling();
        return {s.mode, s.mode == DistanceMode::proposed ? s.alpha_thr : double(s.n_points), dict.size()};
    }

    RmseCurve rmse_experiment(const Dictionary &dict, const TrialConfig &trial, unsigned threads)
    {
        trial.validate();
        std::vector<double> snrs = trial.snr_db;
        std::sort(snrs.begin(), snrs.end());

        const std::vector<Vec3> grid = grid_cartesian(dict);
        dict.matrix();

        const std::size_t n = trial.n_trials;
        std::vector<double> sq_err(snrs.size() * n);
        detail::parallel_chunks(sq_err.size(), 4, threads, [&](std::size_t b, std::size_t e, unsigned) {
            for (std::size_t idx = b; idx < e; ++idx)
            {
                const std::size_t si = idx / n, t = idx % n;
                RandomStream rng = trial_stream(trial.master_seed, si, t);
                const PolarCoordinate ue = drop_ue(rng, trial);
                const std::size_t nearest = nearest_of(grid, polar_to_cartesian(ue));
                const std::vector<cplx> y = received_signal(dict.array(), ue, snrs[si], rng);
                const std::size_t est = matched_filter_estimate(dict, y);
                sq_err[idx] = est == nearest ? 0.0 : squared_distance(grid[nearest], grid[est]);
            }
        });

        RmseCurve curve;
        curve.dictionary = describe(dict);
        for (std::size_t si = 0; si < snrs.size(); ++si)
        {
            double acc = 0.0;
            for (std::size_t t = 0; t < n; ++t)
                acc += sq_err[si * n + t];
            curve.points.push_back({snrs[si], std::sqrt(acc / double(n)), n});
        }
        return curve;
    }
}
