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

#ifndef POLARDICT_SERIALIZATION_HPP
#define POLARDICT_SERIALIZATION_HPP

#include "polardict/coherence.hpp"
#include "polardict/geometry.hpp"
#include "polardict/sampling.hpp"

#include <json.hpp>

#include <string>

namespace polardict
{
    using json = nlohmann::json;

    // Array block. Spacing may be given as "spacing_m" or "spacing_wavelengths", the wavelength
    // as "wavelength_m" or "carrier_hz". Missing keys fall back to `defaults`.
    ArrayConfig array_from_json(const json &j, const ArrayConfig &defaults);
    json to_json(const ArrayConfig &cfg);

    SamplingConfig sampling_from_json(const json &j, const SamplingConfig &defaults);
    json to_json(const SamplingConfig &sampling);

    json to_json(const GridPoint &point);
    GridPoint grid_point_from_json(const json &j);

    json to_json(const CoherenceReport &report);

    // Persisted dictionary: array, sampling, and grid points. Columns are regenerated on load.
    json to_json(const Dictionary &dict);
    Dictionary dictionary_from_json(const json &j);

    void save_dictionary(const Dictionary &dict, const std::string &path);
    Dictionary load_dictionary(const std::string &path); // throws std::runtime_error on I/O failure

    inline constexpr const char *dictionary_format_tag = "polardict-dictionary";
    inline constexpr int dictionary_format_version = 1;
}

#endif
