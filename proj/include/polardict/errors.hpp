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

#ifndef POLARDICT_ERRORS_HPP
#define POLARDICT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polardict
{
    // Argument outside the domain of an operation (bad index, length mismatch, ...)
    class InputDomainError : public std::invalid_argument
    {
    public:
        explicit InputDomainError(const std::string &what) : std::invalid_argument(what) {}
    };

    // Inconsistent or unusable configuration (also raised for empty dictionaries)
    class ConfigError : public std::runtime_error
    {
    public:
        explicit ConfigError(const std::string &what) : std::runtime_error(what) {}
    };
}

#endif
