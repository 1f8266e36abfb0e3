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

#include "polardict/experiments.hpp"
#include "polardict/errors.hpp"

#include "parallel.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

namespace polardict
{
    namespace
    {
        constexpr const char *block_key(Experiment e)
        {
            switch (e)
            {
            case Experiment::similarity_cdf:
                return "similarity_cdf";
            case Experiment::coherence_sweep:
                return "coherence_sweep";
            case Experiment::rmse_vs_snr:
                return "rmse";
            case Experiment::dict_build:
                return "dict";
            case Experiment::dict_info:
                return "dict_info";
            }
            return "";
        }

        constexpr Experiment all_experiments[] = {Experiment::similarity_cdf, Experiment::coherence_sweep,
                                                  Experiment::rmse_vs_snr, Experiment::dict_build,
                                                  Experiment::dict_info};

        template <typename T>
        T read(const json &j, const char *key, T fallback)
        {
            if (!j.contains(key))
                return fallback;
            try
            {
                return j.at(key).get<T>();
            }
            catch (const json::exception &e)
            {
                throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
            }
        }

        void only_keys(const json &j, std::initializer_list<std::string_view> allowed, const std::string &context)
        {
            if (!j.is_object())
                throw ConfigError(context + ": expected an object");
            for (const auto &item : j.items())
                if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
                    throw ConfigError(context + ": unknown key '" + item.key() + "'");
        }

        // n points across [lo, hi], the midpoint when n = 1
        std::vector<double> linspace(double lo, double hi, std::size_t n)
        {
            std::vector<double> v(n);
            if (n == 1)
            {
                v[0] = 0.5 * (lo + hi);
                return v;
            }
            for (std::size_t k = 0; k < n; ++k)
                v[k] = lo + (hi - lo) * double(k) / double(n - 1);
            v.back() = hi;
            return v;
        }

        std::string header_comment(const ExperimentConfig &config)
        {
            return "# config: " + to_json(config).dump() + "\n";
        }

        CoherenceMethod method_from_string(const std::string &s)
        {
            if (s == "direct")
                return CoherenceMethod::direct;
            if (s == "factorized")
                return CoherenceMethod::factorized;
            throw ConfigError("unknown coherence method '" + s + "'");
        }

        json block_to_json(const ExperimentBlock &block)
        {
            return std::visit(
                [](const auto &b) -> json {
                    using T = std::decay_t<decltype(b)>;
                    if constexpr (std::is_same_v<T, SimilarityCdfConfig>)
                        return {{"n_azimuth", b.n_azimuth}, {"n_elevation", b.n_elevation}, {"n_range", b.n_range},
                                {"angle_span", b.angle_span},  {"r_min", b.r_min},             {"r_max", b.r_max},
                                {"subsample", b.subsample}};
                    else if constexpr (std::is_same_v<T, CoherenceSweepConfig>)
                        return {{"alpha_thr", b.alpha_thr}, {"r_min", b.r_min},          {"r_max", b.r_max},
                                {"angle_fill", b.angle_fill}, {"method", to_string(b.method)}};
                    else if constexpr (std::is_same_v<T, RmseConfig>)
                    {
                        json variants = json::array();
                        for (const auto &v : b.variants)
                            variants.push_back(to_json(v));
                        return {{"variants", variants},       {"angle_span", b.trial.angle_span},
                                {"r_min", b.trial.r_min},     {"r_max", b.trial.r_max},
                                {"snr_db", b.trial.snr_db},   {"n_trials", b.trial.n_trials}};
                    }
                    else if constexpr (std::is_same_v<T, DictBuildConfig>)
                        return to_json(b.sampling);
                    else
                        return json::object();
                },
                block);
        }
    }

    const char *to_string(Experiment experiment)
    {
        switch (experiment)
        {
        case Experiment::similarity_cdf:
            return "similarity_cdf";
        case Experiment::coherence_sweep:
            return "coherence_sweep";
        case Experiment::rmse_vs_snr:
            return "rmse_vs_snr";
        case Experiment::dict_build:
            return "dict_build";
        case Experiment::dict_info:
            return "dict_info";
        }
        return "unknown";
    }

    ExperimentConfig default_config(Experiment experiment, bool reduced)
    {
        ExperimentConfig c;
        c.experiment = experiment;
        c.array = reduced ? ArrayConfig::from_wavelengths(16, 8, 0.25, 0.1) : reference_array();
        // [Fraunhofer / 8, Fraunhofer]: 8..64 m for the reference array, 0.5..4 m reduced
        const double r_min = reduced ? 0.5 : 8.0, r_max = reduced ? 4.0 : 64.0;
        switch (experiment)
        {
        case Experiment::similarity_cdf:
        {
            SimilarityCdfConfig b;
            b.n_azimuth = b.n_elevation = b.n_range = reduced ? 10 : 50;
            b.r_min = r_min;
            b.r_max = r_max;
            c.block = b;
            break;
        }
        case Experiment::coherence_sweep:
        {
            CoherenceSweepConfig b;
            for (int k = 2; k <= 20; ++k)
                b.alpha_thr.push_back(k / 10.0);
            b.r_min = r_min;
            b.r_max = r_max;
            c.block = b;
            break;
        }
        case Experiment::rmse_vs_snr:
        {
            RmseConfig b;
            b.variants = {SamplingConfig::proposed(0.6525, r_min, r_max), SamplingConfig::proposed(1.0485, r_min, r_max),
                          SamplingConfig::uniform(2, r_min, r_max), SamplingConfig::uniform(4, r_min, r_max),
                          SamplingConfig::uniform(6, r_min, r_max)};
            b.trial.r_min = r_min;
            b.trial.r_max = r_max;
            b.trial.snr_db = {-10.0, -5.0, 0.0, 5.0, 10.0, 15.0, 20.0};
            b.trial.n_trials = reduced ? 200 : 1000;
            c.block = b;
            break;
        }
        case Experiment::dict_build:
            c.block = DictBuildConfig{SamplingConfig::proposed(1.0485, r_min, r_max)};
            break;
        case Experiment::dict_info:
            c.block = DictInfoConfig{};
            break;
        }
        return c;
    }

    ExperimentConfig resolve_config(Experiment experiment, const json &document, bool reduced)
    {
        ExperimentConfig c = default_config(experiment, reduced);
        if (document.is_null())
            return c;
        if (!document.is_object())
            throw ConfigError("config: expected a JSON object");

        const std::string own = block_key(experiment);
        for (const auto &item : document.items())
        {
            const std::string &key = item.key();
            if (key == "experiment" || key == "seed" || key == "array" || key == own)
                continue;
            bool other_block = false;
            for (auto e : all_experiments)
                other_block = other_block || key == block_key(e);
            if (other_block)
                throw ConfigError("config: block '" + key + "' does not belong to experiment '" +
                                  to_string(experiment) + "'");
            throw ConfigError("config: unknown key '" + key + "'");
        }
        if (document.contains("experiment") && read<std::string>(document, "experiment", "") != to_string(experiment))
            throw ConfigError("config: experiment '" + read<std::string>(document, "experiment", "") +
                              "' does not match the requested '" + to_string(experiment) + "'");

        c.master_seed = read<std::uint64_t>(document, "seed", c.master_seed);
        if (document.contains("array"))
            c.array = array_from_json(document.at("array"), c.array);

        if (document.contains(own))
        {
            const json &b = document.at(own);
            switch (experiment)
            {
            case Experiment::similarity_cdf:
            {
                only_keys(b, {"n_azimuth", "n_elevation", "n_range", "angle_span", "r_min", "r_max", "subsample"}, own);
                auto &s = std::get<SimilarityCdfConfig>(c.block);
                s.n_azimuth = read(b, "n_azimuth", s.n_azimuth);
                s.n_elevation = read(b, "n_elevation", s.n_elevation);
                s.n_range = read(b, "n_range", s.n_range);
                s.angle_span = read(b, "angle_span", s.angle_span);
                s.r_min = read(b, "r_min", s.r_min);
                s.r_max = read(b, "r_max", s.r_max);
                s.subsample = read(b, "subsample", s.subsample);
                break;
            }
            case Experiment::coherence_sweep:
            {
                only_keys(b, {"alpha_thr", "r_min", "r_max", "angle_fill", "method"}, own);
                auto &s = std::get<CoherenceSweepConfig>(c.block);
                s.alpha_thr = read(b, "alpha_thr", s.alpha_thr);
                s.r_min = read(b, "r_min", s.r_min);
                s.r_max = read(b, "r_max", s.r_max);
                s.angle_fill = read(b, "angle_fill", s.angle_fill);
                if (b.contains("method"))
                    s.method = method_from_string(read<std::string>(b, "method", ""));
                break;
            }
            case Experiment::rmse_vs_snr:
            {
                only_keys(b, {"variants", "angle_span", "r_min", "r_max", "snr_db", "n_trials"}, own);
                auto &s = std::get<RmseConfig>(c.block);
                s.trial.angle_span = read(b, "angle_span", s.trial.angle_span);
                s.trial.r_min = read(b, "r_min", s.trial.r_min);
                s.trial.r_max = read(b, "r_max", s.trial.r_max);
                s.trial.snr_db = read(b, "snr_db", s.trial.snr_db);
                s.trial.n_trials = read(b, "n_trials", s.trial.n_trials);
                if (b.contains("variants"))
                {
                    if (!b.at("variants").is_array())
                        throw ConfigError("rmse: variants must be an array");
                    SamplingConfig base;
                    base.r_min = s.trial.r_min;
                    base.r_max = s.trial.r_max;
                    s.variants.clear();
                    for (const auto &v : b.at("variants"))
                        s.variants.push_back(sampling_from_json(v, base));
                }
                else
                {
                    for (auto &v : s.variants)
                    {
                        v.r_min = s.trial.r_min;
                        v.r_max = s.trial.r_max;
                    }
                }
                break;
            }
            case Experiment::dict_build:
            {
                auto &s = std::get<DictBuildConfig>(c.block);
                s.sampling = sampling_from_json(b, s.sampling);
                break;
            }
            case Experiment::dict_info:
                only_keys(b, {}, own);
                break;
            }
        }
        validate(c);
        return c;
    }

    void validate(const ExperimentConfig &config)
    {
        std::visit(
            [](const auto &b) {
                using T = std::decay_t<decltype(b)>;
                if constexpr (std::is_same_v<T, SimilarityCdfConfig>)
                {
                    if (b.n_azimuth == 0 || b.n_elevation == 0 || b.n_range == 0)
                        throw ConfigError("similarity_cdf: grid densities must be at least 1");
                    if (!(b.angle_span >= 0.0 && b.angle_span <= 1.0))
                        throw ConfigError("similarity_cdf: angle_span must lie in [0, 1]");
                    if (!(b.r_min > 0.0 && b.r_max >= b.r_min))
                        throw ConfigError("similarity_cdf: require 0 < r_min <= r_max");
                }
                else if constexpr (std::is_same_v<T, CoherenceSweepConfig>)
                {
                    if (b.alpha_thr.empty())
                        throw ConfigError("coherence_sweep: empty alpha_thr list");
                    for (double a : b.alpha_thr)
                        SamplingConfig::proposed(a, b.r_min, b.r_max).validate();
                    if (!(b.angle_fill > 0.0 && b.angle_fill <= 1.0))
                        throw ConfigError("coherence_sweep: angle_fill must lie in (0, 1]");
                }
                else if constexpr (std::is_same_v<T, RmseConfig>)
                {
                    if (b.variants.empty())
                        throw ConfigError("rmse: no dictionary variants");
                    for (const auto &v : b.variants)
                        v.validate();
                    b.trial.validate();
                }
                else if constexpr (std::is_same_v<T, DictBuildConfig>)
                    b.sampling.validate();
            },
            config.block);
    }

    json to_json(const ExperimentConfig &config)
    {
        return {{"experiment", to_string(config.experiment)},
                {"seed", config.master_seed},
                {"array", to_json(config.array)},
                {block_key(config.experiment), block_to_json(config.block)}};
    }

    SimilaritySamples similarity_samples(const ExperimentConfig &config, unsigned threads)
    {
        const auto &b = std::get<SimilarityCdfConfig>(config.block);
        const double half = b.angle_span * std::numbers::pi / 2.0;
        const auto az = linspace(-half, half, b.n_azimuth);
        const auto el = linspace(-half, half, b.n_elevation);
        const auto rg = linspace(b.r_min, b.r_max, b.n_range);
        const std::size_t total = az.size() * el.size() * rg.size();

        std::vector<std::size_t> picks(total);
        std::iota(picks.begin(), picks.end(), std::size_t{0});
        if (b.subsample > 0 && b.subsample < total)
        {
            std::vector<std::size_t> chosen;
            chosen.reserve(b.subsample);
            RandomStream rng = trial_stream(config.master_seed, 0xffffffffULL, 0);
            std::sample(picks.begin(), picks.end(), std::back_inserter(chosen), b.subsample, rng);
            picks = std::move(chosen);
        }

        SimilaritySamples out;
        out.expansion.resize(picks.size());
        out.proposed.resize(picks.size());
        detail::parallel_chunks(picks.size(), 64, threads, [&](std::size_t lo, std::size_t hi, unsigned) {
            for (std::size_t k = lo; k < hi; ++k)
            {
                const std::size_t idx = picks[k];
                const std::size_t ir = idx % rg.size();
                const std::size_t ie = (idx / rg.size()) % el.size();
                const std::size_t ia = idx / (rg.size() * el.size());
                const auto s = similarity_to_exact(config.array, {az[ia], el[ie], rg[ir]});
                out.expansion[k] = s.expansion;
                out.proposed[k] = s.proposed;
            }
        });
        return out;
    }

    std::string run_similarity_cdf(const ExperimentConfig &config, unsigned threads)
    {
        SimilaritySamples s = similarity_samples(config, threads);
        std::string csv = header_comment(config) + "model,similarity,cdf\n";
        auto emit = [&csv](const char *model, std::vector<double> &values) {
            std::sort(values.begin(), values.end());
            const double n = double(values.size());
            for (std::size_t k = 0; k < values.size(); ++k)
                csv += fmt::format("{},{},{}\n", model, values[k], double(k + 1) / n);
        };
        emit("near_field_expansion", s.expansion);
        emit("proposed", s.proposed);
        return csv;
    }

    std::vector<SweepRow> coherence_sweep(const ExperimentConfig &config, unsigned threads)
    {
        const auto &b = std::get<CoherenceSweepConfig>(config.block);
        std::vector<SweepRow> rows;
        for (double alpha : b.alpha_thr)
        {
            SamplingConfig sampling = SamplingConfig::proposed(alpha, b.r_min, b.r_max);
            sampling.angle_fill = b.angle_fill;
            SweepRow row;
            row.alpha_thr = alpha;
            try
            {
                const Dictionary dict = build_dictionary(config.array, sampling);
                row.dict_size = dict.size();
                if (dict.size() >= 2)
                    row.report = dictionary_coherence(dict, b.method, threads);
            }
            catch (const ConfigError &)
            {
                row.dict_size = 0;
            }
            rows.push_back(row);
        }
        return rows;
    }

    std::string run_coherence_sweep(const ExperimentConfig &config, unsigned threads)
    {
        std::string csv = header_comment(config) + "alpha_thr,normalized_mu,dict_size\n";
        for (const auto &row : coherence_sweep(config, threads))
        {
            const std::string mu = row.report ? fmt::format("{}", row.report->normalized_mu) : std::string();
            csv += fmt::format("{},{},{}\n", row.alpha_thr, mu, row.dict_size);
        }
        return csv;
    }

    std::vector<RmseCurve> rmse_vs_snr(const ExperimentConfig &config, unsigned threads)
    {
        const auto &b = std::get<RmseConfig>(config.block);
        TrialConfig trial = b.trial;
        trial.master_seed = config.master_seed;
        std::vector<RmseCurve> curves;
        for (const auto &variant : b.variants)
            curves.push_back(rmse_experiment(build_dictionary(config.array, variant), trial, threads));
        return curves;
    }

    std::string rmse_csv_header()
    {
        return "snr_db,rmse_m,n_trials,dict_mode,dict_param,dict_size\n";
    }

    std::string rmse_csv_rows(const RmseCurve &curve)
    {
        std::string out;
        for (const auto &p : curve.points)
            out += fmt::format("{},{},{},{},{},{}\n", p.snr_db, p.rmse_m, p.n_trials, to_string(curve.dictionary.mode),
                               curve.dictionary.param, curve.dictionary.size);
        return out;
    }

    std::string run_rmse_vs_snr(const ExperimentConfig &config, unsigned threads)
    {
        std::string csv = header_comment(config) + rmse_csv_header();
        for (const auto &curve : rmse_vs_snr(config, threads))
            csv += rmse_csv_rows(curve);
        return csv;
    }

    Dictionary run_dict_build(const ExperimentConfig &config, const std::string &path)
    {
        const auto &b = std::get<DictBuildConfig>(config.block);
        Dictionary dict = build_dictionary(config.array, b.sampling);
        save_dictionary(dict, path);
        return dict;
    }

    json dictionary_summary(const Dictionary &dict)
    {
        const auto &s = dict.sampling();
        constexpr std::size_t n_bins = 8;
        std::vector<std::size_t> counts(n_bins, 0);
        std::vector<double> edges = linspace(s.r_min, s.r_max, n_bins + 1);
        std::size_t far_field = 0, max_ring = 0;
        std::set<std::size_t> rings;
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;

        // per-direction statistics in first-appearance order
        std::vector<std::pair<int, int>> order;
        std::map<std::pair<int, int>, std::pair<std::size_t, std::size_t>> per_dir; // columns, max ring
        std::map<std::pair<int, int>, AngularPair> dir_angles;

        for (const auto &p : dict.points())
        {
            const auto key = std::make_pair(p.lattice_m, p.lattice_n);
            if (!per_dir.count(key))
            {
                order.push_back(key);
                dir_angles[key] = p.angular;
            }
            auto &stat = per_dir[key];
            ++stat.first;
            if (p.is_far_field())
            {
                ++far_field;
                continue;
            }
            stat.second = std::max(stat.second, p.ring_index);
            max_ring = std::max(max_ring, p.ring_index);
            rings.insert(p.ring_index);
            lo = std::min(lo, p.range);
            hi = std::max(hi, p.range);
            const double pos = (p.range - s.r_min) / (s.r_max - s.r_min) * double(n_bins);
            counts[std::min(n_bins - 1, static_cast<std::size_t>(std::max(0.0, pos)))]++;
        }

        json directions = json::array();
        for (const auto &key : order)
        {
            const auto &[n_cols, ring] = per_dir[key];
            directions.push_back({{"lattice", {key.first, key.second}},
                                  {"phi_s", dir_angles[key].phi_s},
                                  {"omega_s", dir_angles[key].omega_s},
                                  {"n_columns", n_cols},
                                  {"max_ring_index", ring}});
        }

        json summary = {{"n_columns", dict.size()},
                        {"array", to_json(dict.array())},
                        {"sampling", to_json(s)},
                        {"n_lattice_directions", angular_grid(dict.array(), s.angle_fill).size()},
                        {"n_directions_with_columns", order.size()},
                        {"range_min", hi > 0.0 ? json(lo) : json(nullptr)},
                        {"range_max", hi > 0.0 ? json(hi) : json(nullptr)},
                        {"far_field_columns", far_field},
                        {"distance_histogram", {{"edges", edges}, {"counts", counts}}},
                        {"max_ring_index", max_ring},
                        {"directions", directions}};
        if (s.mode == DistanceMode::proposed)
        {
            json constants = json::array();
            for (std::size_t r : rings)
                constants.push_back({{"s", r}, {"c", ring_constant(dict.array(), s.alpha_thr, r)}});
            summary["ring_scale_m"] = ring_scale(dict.array(), s.alpha_thr);
            summary["ring_constants"] = constants;
        }
        return summary;
    }

    json run_dict_info(const std::string &path)
    {
        return dictionary_summary(load_dictionary(path));
    }
}
