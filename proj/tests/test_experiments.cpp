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

#include "polardict/errors.hpp"
#include "polardict/experiments.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <sstream>

using namespace polardict;

namespace
{
    std::vector<std::string> lines(const std::string &text)
    {
        std::vector<std::string> out;
        std::istringstream in(text);
        for (std::string line; std::getline(in, line);)
            out.push_back(line);
        return out;
    }
}

TEST(Experiments, ReducedDefaultsValidate)
{
    for (auto e : {Experiment::similarity_cdf, Experiment::coherence_sweep, Experiment::rmse_vs_snr,
                   Experiment::dict_build})
    {
        EXPECT_NO_THROW(validate(default_config(e, false)));
        EXPECT_NO_THROW(validate(default_config(e, true)));
    }
    EXPECT_EQ(default_config(Experiment::rmse_vs_snr).array, reference_array());
    EXPECT_EQ(default_config(Experiment::rmse_vs_snr, true).array.m_h(), 16u);
}

TEST(Experiments, ResolveConfigOverlay)
{
    const json doc = {{"experiment", "coherence_sweep"},
                      {"seed", 9},
                      {"array", {{"m_h", 8}, {"m_v", 8}}},
                      {"coherence_sweep", {{"alpha_thr", {0.5, 1.0}}, {"method", "direct"}}}};
    const auto c = resolve_config(Experiment::coherence_sweep, doc, true);
    EXPECT_EQ(c.master_seed, 9u);
    EXPECT_EQ(c.array.m_h(), 8u);
    const auto &b = std::get<CoherenceSweepConfig>(c.block);
    EXPECT_EQ(b.alpha_thr, (std::vector<double>{0.5, 1.0}));
    EXPECT_EQ(b.method, CoherenceMethod::direct);

    const auto again = resolve_config(Experiment::coherence_sweep, to_json(c));
    EXPECT_EQ(to_json(again), to_json(c));
}

TEST(Experiments, ResolveConfigErrors)
{
    EXPECT_THROW(resolve_config(Experiment::coherence_sweep, json{{"rmse", json::object()}}), ConfigError);
    EXPECT_THROW(resolve_config(Experiment::coherence_sweep, json{{"colour", 1}}), ConfigError);
    EXPECT_THROW(resolve_config(Experiment::coherence_sweep, json{{"experiment", "rmse_vs_snr"}}), ConfigError);
    EXPECT_THROW(resolve_config(Experiment::coherence_sweep, json::array()), ConfigError);
    EXPECT_THROW(resolve_config(Experiment::coherence_sweep, json{{"coherence_sweep", {{"alpha_thr", json::array()}}}}),
                 ConfigError);
    EXPECT_THROW(resolve_config(Experiment::similarity_cdf, json{{"similarity_cdf", {{"n_range", 0}}}}), ConfigError);
    EXPECT_THROW(resolve_config(Experiment::rmse_vs_snr, json{{"rmse", {{"variants", json::array()}}}}), ConfigError);
}

TEST(Experiments, SimilaritySingleGridPoint)
{
    auto c = default_config(Experiment::similarity_cdf);
    auto &b = std::get<SimilarityCdfConfig>(c.block);
    b.n_azimuth = b.n_elevation = b.n_range = 1;
    b.r_min = b.r_max = 64.0;
    const auto csv = lines(run_similarity_cdf(c));
    ASSERT_EQ(csv.size(), 4u);
    EXPECT_EQ(csv[0].rfind("# config: ", 0), 0u);
    EXPECT_EQ(csv[1], "model,similarity,cdf");
    EXPECT_EQ(csv[2].rfind("near_field_expansion,", 0), 0u);
    EXPECT_EQ(csv[2].substr(csv[2].size() - 2), ",1");
    EXPECT_EQ(csv[3].rfind("proposed,", 0), 0u);
    EXPECT_EQ(csv[3].substr(csv[3].size() - 2), ",1");
}

TEST(Experiments, SimilaritySubsampledReferenceGrid)
{
    auto c = default_config(Experiment::similarity_cdf);
    std::get<SimilarityCdfConfig>(c.block).subsample = 1000;
    const auto s = similarity_samples(c, 1);
    ASSERT_EQ(s.proposed.size(), 1000u);
    ASSERT_EQ(s.expansion.size(), 1000u);
    const auto good = std::count_if(s.proposed.begin(), s.proposed.end(), [](double v) { return v >= 0.9; });
    EXPECT_GE(double(good) / 1000.0, 0.95);
    for (std::size_t k = 0; k < 1000; ++k)
    {
        ASSERT_GE(s.proposed[k], 0.0);
        ASSERT_LE(s.proposed[k], 1.0 + 1e-12);
    }
}

TEST(Experiments, SimilaritySubsample)
{
    auto c = default_config(Experiment::similarity_cdf, true);
    std::get<SimilarityCdfConfig>(c.block).subsample = 50;
    const auto a = similarity_samples(c, 1);
    EXPECT_EQ(a.proposed.size(), 50u);
    EXPECT_EQ(run_similarity_cdf(c, 1), run_similarity_cdf(c, 2));
}

TEST(Experiments, CoherenceSweepRows)
{
    auto c = default_config(Experiment::coherence_sweep, true);
    std::get<CoherenceSweepConfig>(c.block).alpha_thr = {0.3, 1.0, 50.0};
    const auto rows = coherence_sweep(c, 1);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_GE(rows[0].dict_size, rows[1].dict_size);
    ASSERT_TRUE(rows[0].report.has_value());
    EXPECT_LT(rows[0].report->normalized_mu, 1.0);
    EXPECT_LT(rows[2].dict_size, 2u);
    EXPECT_FALSE(rows[2].report.has_value());

    const auto csv = lines(run_coherence_sweep(c, 1));
    ASSERT_EQ(csv.size(), 5u);
    EXPECT_EQ(csv[1], "alpha_thr,normalized_mu,dict_size");
    EXPECT_EQ(csv[4], "50,," + std::to_string(rows[2].dict_size));
}

TEST(Experiments, RmseSingleVariant)
{
    auto c = default_config(Experiment::rmse_vs_snr, true);
    auto &b = std::get<RmseConfig>(c.block);
    b.variants = {SamplingConfig::uniform(2, b.trial.r_min, b.trial.r_max)};
    b.trial.n_trials = 20;
    b.trial.snr_db = {0.0, 10.0};
    const auto csv = lines(run_rmse_vs_snr(c, 1));
    ASSERT_EQ(csv.size(), 4u);
    EXPECT_EQ(csv[1], "snr_db,rmse_m,n_trials,dict_mode,dict_param,dict_size");
    EXPECT_EQ(csv[2].rfind("0,", 0), 0u);
    EXPECT_NE(csv[2].find(",20,uniform,2,"), std::string::npos);
    EXPECT_EQ(run_rmse_vs_snr(c, 1), run_rmse_vs_snr(c, 3));
}

TEST(Experiments, DictBuildAndInfo)
{
    const auto path = (std::filesystem::temp_directory_path() / "polardict_build_info.json").string();
    const auto c = default_config(Experiment::dict_build);
    const auto dict = run_dict_build(c, path);
    const auto info = run_dict_info(path);
    std::filesystem::remove(path);

    EXPECT_EQ(info.at("n_columns").get<std::size_t>(), dict.size());
    EXPECT_EQ(dict.size(), 457u);
    EXPECT_EQ(info.at("n_lattice_directions").get<std::size_t>(), 393u);

    std::size_t total = 0;
    for (const auto &h : info.at("distance_histogram").at("counts"))
        total += h.get<std::size_t>();
    EXPECT_EQ(total, dict.size());

    // deepest ring per direction: floor(ring_scale (1 - phi^2)(1 - omega^2) / r_min)
    const double scale = info.at("ring_scale_m").get<double>();
    EXPECT_NEAR(scale, ring_scale(reference_array(), 1.0485), 1e-12);
    for (const auto &d : info.at("directions"))
    {
        const double phi = d.at("phi_s"), omega = d.at("omega_s");
        const double g = scale * (1 - phi * phi) * (1 - omega * omega);
        EXPECT_EQ(d.at("max_ring_index").get<std::size_t>(), std::size_t(std::floor(g / 8.0)));
    }
}

TEST(Experiments, DictInfoErrors)
{
    EXPECT_THROW(run_dict_info(""), std::runtime_error);
    EXPECT_THROW(run_dict_info("/nonexistent/polardict.json"), std::runtime_error);
}

TEST(Experiments, CsvIndependentOfThreads)
{
    auto c = default_config(Experiment::coherence_sweep, true);
    EXPECT_EQ(run_coherence_sweep(c, 1), run_coherence_sweep(c, 4));
    const auto s = default_config(Experiment::similarity_cdf, true);
    EXPECT_EQ(run_similarity_cdf(s, 1), run_similarity_cdf(s, 3));
}
