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

#ifndef POLARDICT_SAMPLING_HPP
#define POLARDICT_SAMPLING_HPP

#include "polardict/geometry.hpp"
#include "polardict/steering.hpp"

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace polardict
{
    enum class DistanceMode
    {
        proposed, // closed-form ring sampling controlled by alpha_thr
        uniform   // n_points equally spaced distances per direction
    };

    enum class UniformPlacement
    {
        endpoints,    // r_min and r_max are both grid points
        cell_centered // midpoints of n_points equal cells
    };

    const char *to_string(DistanceMode mode);
    const char *to_string(UniformPlacement placement);

    struct SamplingConfig
    {
        DistanceMode mode = DistanceMode::proposed;
        double alpha_thr = 1.0;    // proposed mode only
        std::size_t n_points = 2;  // uniform mode only
        double r_min = 8.0;        // [m], inclusive
        double r_max = 64.0;       // [m], inclusive
        double angle_fill = 1.0;   // keep lattice directions with phi_s^2 + omega_s^2 <= angle_fill
        UniformPlacement placement = UniformPlacement::endpoints;
        bool append_far_field = false; // one r = infinity column per direction

        static SamplingConfig proposed(double alpha_thr, double r_min = 8.0, double r_max = 64.0);
        static SamplingConfig uniform(std::size_t n_points, double r_min = 8.0, double r_max = 64.0);

        void validate() const; // throws ConfigError
        bool operator==(const SamplingConfig &) const = default;
    };

    // Direction on the orthogonal sine-space lattice: phi_s = m lambda / (M_H delta), omega_s = n lambda / (M_V delta)
    struct LatticePoint
    {
        AngularPair angular;
        int m = 0;
        int n = 0;
    };

    // Row-major in (n, m): n ascending outer, m ascending inner
    std::vector<LatticePoint> angular_grid(const ArrayConfig &cfg, double angle_fill = 1.0);

    // Largest lattice index along one axis, floor(count * spacing / wavelength)
    int lattice_extent(std::size_t count, const ArrayConfig &cfg);

    struct RingSample
    {
        std::size_t s = 0; // ring index, >= 1
        double range = 0.0;
    };

    // 2 M_H M_V delta^2 / (lambda alpha_thr): range of ring s = 1 for a broadside direction
    double ring_scale(const ArrayConfig &cfg, double alpha_thr);

    // Ring constant (1 - phi_s^2)(1 - omega_s^2) / r shared by every column with ring index s
    double ring_constant(const ArrayConfig &cfg, double alpha_thr, std::size_t s);

    // r(s) = ring_scale * (1 - phi_s^2)(1 - omega_s^2) / s, s = 1, 2, ..., kept when r_min <= r <= r_max.
    // Ordered by ascending s (descending range).
    std::vector<RingSample> proposed_distances(const ArrayConfig &cfg, double alpha_thr, const AngularPair &angular,
                                               double r_min, double r_max);

    // Ascending. n_points = 1 gives the midpoint for either placement.
    std::vector<double> uniform_distances(std::size_t n_points, double r_min, double r_max,
                                          UniformPlacement placement = UniformPlacement::endpoints);

    struct GridPoint
    {
        AngularPair angular;
        double range = 0.0;         // [m]; +infinity marks a far-field column
        std::size_t ring_index = 0; // ring s (proposed), 1-based sample index (uniform), 0 (far field)
        int lattice_m = 0;
        int lattice_n = 0;

        bool is_far_field() const;
        PolarCoordinate polar() const;
        Vec3 cartesian() const;
    };

    // Column-major M x K matrix of response vectors split into real and imaginary planes
    class ColumnMatrix
    {
    public:
        ColumnMatrix() = default;
        ColumnMatrix(std::size_t rows, std::size_t cols);

        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }

        std::span<const double> real(std::size_t k) const { return {re_.data() + k * rows_, rows_}; }
        std::span<const double> imag(std::size_t k) const { return {im_.data() + k * rows_, rows_}; }
        std::span<double> real(std::size_t k) { return {re_.data() + k * rows_, rows_}; }
        std::span<double> imag(std::size_t k) { return {im_.data() + k * rows_, rows_}; }

    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<double> re_;
        std::vector<double> im_;
    };

    // Polar-domain dictionary: grid points plus their proposed-model response vectors.
    // The matrix is generated on first access; copies share it.
    class Dictionary
    {
    public:
        // Throws ConfigError when two grid points coincide
        Dictionary(ArrayConfig array, SamplingConfig sampling, std::vector<GridPoint> points);

        const ArrayConfig &array() const { return array_; }
        const SamplingConfig &sampling() const { return sampling_; }
        const std::vector<GridPoint> &points() const { return points_; }
        std::size_t size() const { return points_.size(); }

        ResponseVector column(std::size_t k) const;
        const ColumnMatrix &matrix() const; // thread-safe

    private:
        struct MatrixCache;

        ArrayConfig array_;
        SamplingConfig sampling_;
        std::vector<GridPoint> points_;
        std::shared_ptr<MatrixCache> cache_;
    };

    // Column order: angular grid order, then descending range (a far-field column comes first).
    // Throws ConfigError when no grid point survives.
    Dictionary build_dictionary(const ArrayConfig &cfg, const SamplingConfig &sampling);
}

#endif
