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

#include "polardict/coherence.hpp"
#include "polardict/errors.hpp"
#include "polardict/fresnel.hpp"

#include "kernels.hpp"
#include "parallel.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace polardict
{
    namespace
    {
        // 1 / (2 r) with the far-field limit
        double half_curvature(double range)
        {
            return std::isinf(range) ? 0.0 : 1.0 / (2.0 * range);
        }

        // |sum_{m=0}^{count-1} exp(i k [delta m (s_q - s_p) + delta^2 m^2 quad])|
        double axis_sum_mag(std::size_t count, double k, double delta, double ds, double quad)
        {
            double re = 0.0, im = 0.0;
            for (std::size_t m = 0; m < count; ++m)
            {
                const double x = double(m);
                const double phase = k * (delta * x * ds + delta * delta * x * x * quad);
                re += std::cos(phase);
                im += std::sin(phase);
            }
            return std::hypot(re, im);
        }

        struct Best
        {
            double value = -1.0;
            std::size_t p = 0, q = 0;

            void offer(double v, std::size_t vp, std::size_t vq)
            {
                if (v > value || (v == value && std::tie(vp, vq) < std::tie(p, q)))
                {
                    value = v;
                    p = vp;
                    q = vq;
                }
            }
        };

        // One axis of every proposed-model column: exp(i k [delta x s - delta^2 x^2 (1 - s^2) / (2 r)])
        struct AxisFactors
        {
            std::size_t count = 0;
            std::vector<double> re, im;

            AxisFactors(const Dictionary &dict, bool horizontal)
            {
                const auto &cfg = dict.array();
                count = horizontal ? cfg.m_h() : cfg.m_v();
                const std::size_t k_cols = dict.size();
                re.resize(count * k_cols);
                im.resize(count * k_cols);
                const double k = cfg.wavenumber(), delta = cfg.spacing();
                for (std::size_t c = 0; c < k_cols; ++c)
                {
                    const auto &pt = dict.points()[c];
                    const double s = horizontal ? pt.angular.phi_s : pt.angular.omega_s;
                    const double curv = (1.0 - s * s) * half_curvature(pt.range);
                    for (std::size_t m = 0; m < count; ++m)
                    {
                        const double x = double(m);
                        const double phase = k * (delta * x * s - delta * delta * x * x * curv);
                        re[c * count + m] = std::cos(phase);
                        im[c * count + m] = std::sin(phase);
                    }
                }
            }

            double mag(std::size_t p, std::size_t q) const
            {
                return detail::conj_dot_mag(&re[p * count], &im[p * count], &re[q * count], &im[q * count], count);
            }
        };
    }

    double inner_product_mag(std::span<const cplx> a, std::span<const cplx> b)
    {
        if (a.size() != b.size())
            throw InputDomainError("inner product of vectors with lengths " + std::to_string(a.size()) + " and " +
                                   std::to_string(b.size()));
        cplx acc{0.0, 0.0};
        for (std::size_t m = 0; m < a.size(); ++m)
            acc += std::conj(a[m]) * b[m];
        return std::abs(acc);
    }

    double inner_product_mag(const ResponseVector &a, const ResponseVector &b)
    {
        return inner_product_mag(std::span<const cplx>(a.entries), std::span<const cplx>(b.entries));
    }

    double factorized_inner_mag(const ArrayConfig &cfg, const SamplePoint &p, const SamplePoint &q)
    {
        const double k = cfg.wavenumber(), delta = cfg.spacing();
        const double hp = half_curvature(p.range), hq = half_curvature(q.range);
        const double phi_p = p.angular.phi_s, phi_q = q.angular.phi_s;
        const double om_p = p.angular.omega_s, om_q = q.angular.omega_s;
        const double quad_h = (1.0 - phi_p * phi_p) * hp - (1.0 - phi_q * phi_q) * hq;
        const double quad_v = (1.0 - om_p * om_p) * hp - (1.0 - om_q * om_q) * hq;
        return axis_sum_mag(cfg.m_h(), k, delta, phi_q - phi_p, quad_h) *
               axis_sum_mag(cfg.m_v(), k, delta, om_q - om_p, quad_v);
    }

    double dirichlet_mag(std::size_t n, double x)
    {
        if (std::abs(x - std::round(x)) < 1e-12)
            return double(n);
        return std::abs(std::sin(double(n) * std::numbers::pi * x) / std::sin(std::numbers::pi * x));
    }

    double pair_alpha(const ArrayConfig &cfg, const AngularPair &angular, double r_p, double r_q)
    {
        const double d = cfg.spacing();
        const double weight = (1.0 - angular.phi_s * angular.phi_s) * (1.0 - angular.omega_s * angular.omega_s);
        return 2.0 * double(cfg.m_h()) * double(cfg.m_v()) * d * d * std::sqrt(std::max(0.0, weight)) /
               cfg.wavelength() * std::abs(1.0 / r_p - 1.0 / r_q);
    }

    SameAngleCoherence same_angle_coherence_approx(const ArrayConfig &cfg, const AngularPair &angular, double r_p,
                                                   double r_q, double alpha_thr)
    {
        if (!(r_p > 0.0) || !(r_q > 0.0))
            throw InputDomainError("ranges must be positive");
        const double d = cfg.spacing(), lambda = cfg.wavelength();
        const double gap = std::abs(1.0 / r_p - 1.0 / r_q);
        const double mh = double(cfg.m_h()), mv = double(cfg.m_v());
        SameAngleCoherence out;
        out.params.alpha_h =
            std::sqrt(2.0 * mh * mh * d * d * std::max(0.0, 1.0 - angular.phi_s * angular.phi_s) / lambda * gap);
        out.params.alpha_v =
            std::sqrt(2.0 * mv * mv * d * d * std::max(0.0, 1.0 - angular.omega_s * angular.omega_s) / lambda * gap);
        out.params.alpha = out.params.alpha_h * out.params.alpha_v;
        out.params.alpha_thr = alpha_thr;
        out.magnitude = double(cfg.size()) * fresnel_ratio(out.params.alpha_h) * fresnel_ratio(out.params.alpha_v);
        return out;
    }

    const char *to_string(CoherenceMethod method)
    {
        return method == CoherenceMethod::direct ? "direct" : "factorized";
    }

    CoherenceReport dictionary_coherence(const Dictionary &dict, CoherenceMethod method, unsigned threads)
    {
        const std::size_t k_cols = dict.size();
        if (k_cols < 2)
            throw InputDomainError("coherence needs at least two columns");

        std::function<double(std::size_t, std::size_t)> pair_mag;
        std::optional<AxisFactors> horiz, vert;
        if (method == CoherenceMethod::factorized)
        {
            horiz.emplace(dict, true);
            vert.emplace(dict, false);
            pair_mag = [&](std::size_t p, std::size_t q) { return horiz->mag(p, q) * vert->mag(p, q); };
        }
        else
        {
            const ColumnMatrix &mat = dict.matrix();
            pair_mag = [&mat](std::size_t p, std::size_t q) {
                return detail::conj_dot_mag(mat.real(p).data(), mat.imag(p).data(), mat.real(q).data(),
                                            mat.imag(q).data(), mat.rows());
            };
        }

        constexpr std::size_t rows_per_chunk = 8;
        const unsigned workers = detail::worker_count(k_cols - 1, rows_per_chunk, threads);
        std::vector<Best> best(workers);
        detail::parallel_chunks(k_cols - 1, rows_per_chunk, workers, [&](std::size_t b, std::size_t e, unsigned id) {
            Best local = best[id];
            for (std::size_t p = b; p < e; ++p)
                for (std::size_t q = p + 1; q < k_cols; ++q)
                    local.offer(pair_mag(p, q), p, q);
            best[id] = local;
        });
        Best total;
        for (const auto &b : best)
            if (b.value >= 0.0)
                total.offer(b.value, b.p, b.q);

        CoherenceReport report;
        report.mu = total.value;
        report.normalized_mu = total.value / double(dict.array().size());
        report.argmax_pair = {total.p, total.q};
        report.n_columns = k_cols;
        report.method = method;
        return report;
    }
}
