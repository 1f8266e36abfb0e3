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

// Experiment driver: similarity CDF, coherence sweep, RMSE vs SNR, dictionary build/info.
// Exit codes: 0 success, 2 invalid arguments or configuration, 3 runtime failure.

#include "polardict/errors.hpp"
#include "polardict/experiments.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace
{
    constexpr int exit_config = 2;
    constexpr int exit_runtime = 3;

    struct CommonOptions
    {
        std::string config_path;
        std::string out_path;
        std::optional<std::uint64_t> seed;
        unsigned threads = 0;
        bool reduced = false;
    };

    void add_common(CLI::App *cmd, CommonOptions &opt, bool with_out = true)
    {
        cmd->add_option("--config", opt.config_path, "JSON config file")->check(CLI::ExistingFile);
        if (with_out)
            cmd->add_option("--out", opt.out_path, "Output path (default: stdout)");
        cmd->add_option("--seed", opt.seed, "Master seed, overrides the config file");
        cmd->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
        cmd->add_flag("--reduced", opt.reduced, "Small 16x8 array and CI-scale grids");
    }

    polardict::ExperimentConfig load_config(polardict::Experiment experiment, const CommonOptions &opt)
    {
        polardict::json document;
        if (!opt.config_path.empty())
        {
            std::ifstream in(opt.config_path);
            if (!in)
                throw polardict::ConfigError("cannot open config '" + opt.config_path + "'");
            try
            {
                in >> document;
            }
            catch (const polardict::json::exception &e)
            {
                throw polardict::ConfigError("config '" + opt.config_path + "' is not valid JSON: " + e.what());
            }
        }
        auto config = polardict::resolve_config(experiment, document, opt.reduced);
        if (opt.seed)
            config.master_seed = *opt.seed;
        return config;
    }

    void emit(const std::string &text, const std::string &path)
    {
        if (path.empty())
        {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out || !(out << text))
            throw std::runtime_error("cannot write '" + path + "'");
    }
}

int main(int argc, char **argv)
{
    using polardict::Experiment;

    CLI::App app{"Polar-domain dictionaries for near-field uniform planar arrays"};
    app.require_subcommand(1);

    CommonOptions sim_opt, coh_opt, rmse_opt, build_opt, info_opt;
    std::string info_path;

    auto *sim = app.add_subcommand("similarity-cdf", "CDF of approximation similarity against the exact response");
    add_common(sim, sim_opt);
    auto *coh = app.add_subcommand("coherence-sweep", "Normalized column coherence and size versus alpha_thr");
    add_common(coh, coh_opt);
    auto *rmse = app.add_subcommand("rmse", "Matched-filter grid localization RMSE versus SNR");
    add_common(rmse, rmse_opt);

    auto *dict = app.add_subcommand("dict", "Build or inspect a persisted dictionary");
    dict->require_subcommand(1);
    auto *build = dict->add_subcommand("build", "Build a dictionary and write it as JSON");
    add_common(build, build_opt);
    build->get_option("--out")->required();
    auto *info = dict->add_subcommand("info", "Summarize a persisted dictionary");
    info->add_option("path", info_path, "Dictionary file")->required();
    info->add_option("--out", info_opt.out_path, "Output path (default: stdout)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_config;
    }

    try
    {
        if (sim->parsed())
            emit(polardict::run_similarity_cdf(load_config(Experiment::similarity_cdf, sim_opt), sim_opt.threads),
                 sim_opt.out_path);
        else if (coh->parsed())
            emit(polardict::run_coherence_sweep(load_config(Experiment::coherence_sweep, coh_opt), coh_opt.threads),
                 coh_opt.out_path);
        else if (rmse->parsed())
            emit(polardict::run_rmse_vs_snr(load_config(Experiment::rmse_vs_snr, rmse_opt), rmse_opt.threads),
                 rmse_opt.out_path);
        else if (build->parsed())
        {
            const auto dictionary = polardict::run_dict_build(load_config(Experiment::dict_build, build_opt),
                                                              build_opt.out_path);
            std::cerr << "wrote " << dictionary.size() << " columns to " << build_opt.out_path << '\n';
        }
        else if (info->parsed())
            emit(polardict::run_dict_info(info_path).dump(2) + "\n", info_opt.out_path);
    }
    catch (const polardict::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_runtime;
    }
    return 0;
}
