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

#include "polardict/serialization.hpp"
#include "polardict/errors.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string_view>

namespace polardict
{
    namespace
    {
        void check_keys(const json &j, std::initializer_list<std::string_view> allowed, const char *context)
        {
            if (!j.is_object())
                throw ConfigError(std::string(context) + ": expected an object");
            for (const auto &item : j.items())
            {
                bool known = false;
                for (auto a : allowed)
                    known = known || item.key() == a;
                if (!known)
                    throw ConfigError(std::string(context) + ": unknown key '" + item.key() + "'");
            }
        }

        template <typename T>
        T get_or(const json &j, const char *key, T fallback)
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

        DistanceMode mode_from_string(const std::string &s)
        {
            if (s == "proposed")
                return DistanceMode::proposed;
            if (s == "uniform")
                return DistanceMode::uniform;
            throw ConfigError("unknown distance mode '" + s + "'");
        }

        UniformPlacement placement_from_string(const std::string &s)
        {
            if (s == "endpoints")
                return UniformPlacement::endpoints;
            if (s == "cell_centered")
                return UniformPlacement::cell_centered;
            throw ConfigError("unknown uniform placement '" + s + "'");
        }
    }

    ArrayConfig array_from_json(const json &j, const ArrayConfig &defaults)
    {
        check_keys(j, {"m_h", "m_v", "spacing_m", "spacing_wavelengths", "wavelength_m", "carrier_hz"}, "array");
        if (j.contains("spacing_m") && j.contains("spacing_wavelengths"))
            throw ConfigError("array: give either spacing_m or spacing_wavelengths");
        if (j.contains("wavelength_m") && j.contains("carrier_hz"))
            throw ConfigError("array: give either wavelength_m or carrier_hz");

        const auto m_h = get_or<std::size_t>(j, "m_h", defaults.m_h());
        const auto m_v = get_or<std::size_t>(j, "m_v", defaults.m_v());
        double wavelength = defaults.wavelength();
        if (j.contains("wavelength_m"))
            wavelength = get_or<double>(j, "wavelength_m", wavelength);
        else if (j.contains("carrier_hz"))
        {
            const double f = get_or<double>(j, "carrier_hz", 0.0);
            if (!(f > 0.0))
                throw ConfigError("array: carrier_hz must be positive");
            wavelength = speed_of_light / f;
        }
        double spacing = defaults.spacing() / defaults.wavelength() * wavelength;
        if (j.contains("spacing_m"))
            spacing = get_or<double>(j, "spacing_m", spacing);
        else if (j.contains("spacing_wavelengths"))
            spacing = get_or<double>(j, "spacing_wavelengths", 0.0) * wavelength;
        return ArrayConfig(m_h, m_v, spacing, wavelength);
    }

    json to_json(const ArrayConfig &cfg)
    {
        return {{"m_h", cfg.m_h()}, {"m_v", cfg.m_v()}, {"spacing_m", cfg.spacing()}, {"wavelength_m", cfg.wavelength()}};
    }

    SamplingConfig sampling_from_json(const json &j, const SamplingConfig &defaults)
    {
        check_keys(j,
                   {"mode", "alpha_thr", "n_points", "r_min", "r_max", "angle_fill", "placement", "append_far_field"},
                   "sampling");
        SamplingConfig s = defaults;
        if (j.contains("mode"))
            s.mode = mode_from_string(get_or<std::string>(j, "mode", ""));
        s.alpha_thr = get_or(j, "alpha_thr", s.alpha_thr);
        s.n_points = get_or(j, "n_points", s.n_points);
        s.r_min = get_or(j, "r_min", s.r_min);
        s.r_max = get_or(j, "r_max", s.r_max);
        s.angle_fill = get_or(j, "angle_fill", s.angle_fill);
        if (j.contains("placement"))
            s.placement = placement_from_string(get_or<std::string>(j, "placement", ""));
        s.append_far_field = get_or(j, "append_far_field", s.append_far_field);
        s.validate();
        return s;
    }

    json to_json(const SamplingConfig &s)
    {
        json j = {{"mode", to_string(s.mode)}};
        if (s.mode == DistanceMode::proposed)
            j["alpha_thr"] = s.alpha_thr;
        else
        {
            j["n_points"] = s.n_points;
            j["placement"] = to_string(s.placement);
        }
        j["r_min"] = s.r_min;
        j["r_max"] = s.r_max;
        j["angle_fill"] = s.angle_fill;
        j["append_far_field"] = s.append_far_field;
        return j;
    }

    json to_json(const GridPoint &p)
    {
        return {{"phi_s", p.angular.phi_s},
                {"omega_s", p.angular.omega_s},
                {"range", p.is_far_field() ? json(nullptr) : json(p.range)},
                {"ring_index", p.ring_index},
                {"lattice", {p.lattice_m, p.lattice_n}}};
    }

    GridPoint grid_point_from_json(const json &j)
    {
        check_keys(j, {"phi_s", "omega_s", "range", "ring_index", "lattice"}, "grid point");
        try
        {
            GridPoint p;
            p.angular = {j.at("phi_s").get<double>(), j.at("omega_s").get<double>()};
            p.range = j.at("range").is_null() ? std::numeric_limits<double>::infinity() : j.at("range").get<double>();
            p.ring_index = j.at("ring_index").get<std::size_t>();
            p.lattice_m = j.at("lattice").at(0).get<int>();
            p.lattice_n = j.at("lattice").at(1).get<int>();
            return p;
        }
        catch (const json::exception &e)
        {
            throw ConfigError(std::string("grid point: ") + e.what());
        }
    }

    json to_json(const CoherenceReport &r)
    {
        return {{"mu", r.mu},
                {"normalized_mu", r.normalized_mu},
                {"argmax_pair", {r.argmax_pair.first, r.argmax_pair.second}},
                {"n_columns", r.n_columns},
                {"method", to_string(r.method)}};
    }

    json to_json(const Dictionary &dict)
    {
        json points = json::array();
        for (const auto &p : dict.points())
            points.push_back(to_json(p));
        return {{"format", dictionary_format_tag},
                {"version", dictionary_format_version},
                {"array", to_json(dict.array())},
                {"sampling", to_json(dict.sampling())},
                {"grid_points", std::move(points)}};
    }

    Dictionary dictionary_from_json(const json &j)
    {
        check_keys(j, {"format", "version", "array", "sampling", "grid_points"}, "dictionary");
        if (get_or<std::string>(j, "format", "") != dictionary_format_tag)
            throw ConfigError("dictionary: not a polardict dictionary document");
        if (get_or<int>(j, "version", 0) != dictionary_format_version)
            throw ConfigError("dictionary: unsupported format version");
        if (!j.contains("array") || !j.contains("sampling") || !j.contains("grid_points"))
            throw ConfigError("dictionary: missing array, sampling, or grid_points");
        const json &a = j.at("array");
        for (const char *key : {"m_h", "m_v", "spacing_m", "wavelength_m"})
            if (!a.contains(key))
                throw ConfigError(std::string("dictionary: array block lacks ") + key);
        ArrayConfig array = array_from_json(a, reference_array());
        SamplingConfig sampling = sampling_from_json(j.at("sampling"), SamplingConfig{});
        std::vector<GridPoint> points;
        for (const auto &p : j.at("grid_points"))
            points.push_back(grid_point_from_json(p));
        return Dictionary(std::move(array), std::move(sampling), std::move(points));
    }

    void save_dictionary(const Dictionary &dict, const std::string &path)
    {
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("cannot open '" + path + "' for writing");
        out << to_json(dict).dump(1) << '\n';
        if (!out)
            throw std::runtime_error("failed writing '" + path + "'");
    }

    Dictionary load_dictionary(const std::string &path)
    {
        if (path.empty())
            throw std::runtime_error("empty dictionary path");
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open '" + path + "'");
        json j;
        try
        {
            in >> j;
        }
        catch (const json::exception &e)
        {
            throw std::runtime_error("'" + path + "' is not valid JSON: " + e.what());
        }
        return dictionary_from_json(j);
    }
}
