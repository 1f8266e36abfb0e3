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

#ifndef POLARDICT_LOCALIZATION_HPP
#define POLARDICT_LOCALIZATION_HPP

#include "polardict/geometry.hpp"
#include "polardict/sampling.hpp"
#include "polardict/steering.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace polardict
{
    using RandomStream = std::mt19937_64;

    // Independent stream for one Monte Carlo trial, keyed by (seed, snr index, trial index)
    RandomStream trial_stream(std::uint64_t master_seed, std::uint64_t snr_index, std::uint64_t trial);

    struct TrialConfig
    {
        double angle_span = 0.9; // azimuth and elevation uniform on +-angle_span * pi / 2
        double r_min = 8.0;
        double r_max = 64.0;
        std::vector<double> snr_db{-10.0, -5.0, 0.0, 5.0, 10.0, 15.0, 20.0};
        std::size_t n_trials = 1000;
        std::uint64_t master_seed = 1;

        void validate() const; // throws ConfigError
    };

    PolarCoordinate drop_ue(RandomStream &rng, const TrialConfig &trial);

    // Closest grid point in Cartesian distance, lowest index on ties
    std::size_t nearest_grid_point(const Dictionary &dict, const PolarCoordinate &coord);

    // Exact response plus circular Gaussian noise of per-antenna variance 10^(-snr_db/10).
    // snr_db = +infinity returns the noiseless response.
    std::vector<cplx> received_signal(const ArrayConfig &cfg, const PolarCoordinate &coord, double snr_db,
                                      RandomStream &rng);

    // argmax_k |w_k^H y|, lowest index on ties
    std::size_t matched_filter_estimate(const Dictionary &dict, std::span<const cplx> y);

    struct DictionaryDescriptor
    {
        DistanceMode mode = DistanceMode::proposed;
        double param = 0.0; // alpha_thr or n_points
        std::size_t size = 0;
    };

    DictionaryDescriptor describe(const Dictionary &dict);

    struct RmsePoint
    {
        double snr_db = 0.0;
        double rmse_m = 0.0;
        std::size_t n_trials = 0;
    };

    struct RmseCurve
    {
        std::vector<RmsePoint> points; // sorted by snr_db
        DictionaryDescriptor dictionary;
    };

    // Per SNR, the RMS Cartesian distance between the grid point nearest to each dropped UE
    // and the matched-filter estimate. Trial t at SNR index i draws from
    // trial_stream(master_seed, i, t), so the curve is identical for any thread count.
    RmseCurve rmse_experiment(const Dictionary &dict, const TrialConfig &trial, unsigned threads = 0);
}

#endif
