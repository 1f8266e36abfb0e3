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

#ifndef POLARDICT_EXPERIMENTS_HPP
#define POLARDICT_EXPERIMENTS_HPP

#include "polardict/coherence.hpp"
#include "polardict/localization.hpp"
#include "polardict/sampling.hpp"
#include "polardict/serialization.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace polardict
{
    enum class Experiment
    {
        similarity_cdf,
        coherence_sweep,
        rmse_vs_snr,
        dict_build,
        dict_info
    };

    const char *to_string(Experiment experiment);

    struct SimilarityCdfConfig
    {
        std::size_t n_azimuth = 50;
        std::size_t n_elevation = 50;
        std::size_t n_range = 50;
        double angle_span = 0.9;
        double r_min = 8.0;
        double r_max = 64.0;
        std::size_t subsample = 0; // 0 = every grid point, otherwise a seeded subset of this size
    };

    struct CoherenceSweepConfig
    {
        std::vector<double> alpha_thr;
        double r_min = 8.0;
        double r_max = 64.0;
        double angle_fill = 1.0;
        CoherenceMethod method = CoherenceMethod::factorized;
    };

    struct RmseConfig
    {
        std::vector<SamplingConfig> variants;
        TrialConfig trial;
    };

    struct DictBuildConfig
    {
        SamplingConfig sampling;
    };

    struct DictInfoConfig
    {
        std::string path;
    };

    using ExperimentBlock =
        std::variant<SimilarityCdfConfig, CoherenceSweepConfig, RmseConfig, DictBuildConfig, DictInfoConfig>;

    struct ExperimentConfig
    {
        Experiment experiment = Experiment::similarity_cdf;
        ArrayConfig array = reference_array();
        std::uint64_t master_seed = 1;
        ExperimentBlock block;
    };

    // Defaults reproduce the reference setup; `reduced` swaps in a 16 x 8 array with the
    // distance window scaled to the same fraction of its Fraunhofer distance, a 10^3
    // similarity grid, and 200 trials.
    ExperimentConfig default_config(Experiment experiment, bool reduced = false);

    // Overlay a parsed config document on the defaults. The document may hold "experiment",
    // "seed", "array", and the block of the selected experiment only. Throws ConfigError.
    ExperimentConfig resolve_config(Experiment experiment, const json &document, bool reduced = false);

    void validate(const ExperimentConfig &config); // throws ConfigError

    // Fully resolved config as recorded in output headers
    json to_json(const ExperimentConfig &config);

    struct SimilaritySamples
    {
        std::vector<double> expansion; // in grid order
        std::vector<double> proposed;
    };

    struct SweepRow
    {
        double alpha_thr = 0.0;
        std::size_t dict_size = 0;
        std::optional<CoherenceReport> report; // absent for fewer than two columns
    };

    SimilaritySamples similarity_samples(const ExperimentConfig &config, unsigned threads = 0);
    std::vector<SweepRow> coherence_sweep(const ExperimentConfig &config, unsigned threads = 0);
    std::vector<RmseCurve> rmse_vs_snr(const ExperimentConfig &config, unsigned threads = 0);

    // Each run_* returns the CSV text: a "# config: {...}" comment line, a header row, data rows.
    // Output bytes depend only on the config, never on `threads`.
    std::string run_similarity_cdf(const ExperimentConfig &config, unsigned threads = 0);
    std::string run_coherence_sweep(const ExperimentConfig &config, unsigned threads = 0);
    std::string run_rmse_vs_snr(const ExperimentConfig &config, unsigned threads = 0);

    // Builds and persists the dictionary, returns it
    Dictionary run_dict_build(const ExperimentConfig &config, const std::string &path);

    // Summary of a persisted dictionary: sizes, distance histogram, ring constants,
    // per-direction ring counts. Throws std::runtime_error when the file cannot be read.
    json run_dict_info(const std::string &path);
    json dictionary_summary(const Dictionary &dict);

    // CSV rows for an RMSE curve, header snr_db,rmse_m,n_trials,dict_mode,dict_param,dict_size
    std::string rmse_csv_header();
    std::string rmse_csv_rows(const RmseCurve &curve);
}

#endif
