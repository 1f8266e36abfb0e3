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

#ifndef POLARDICT_COHERENCE_HPP
#define POLARDICT_COHERENCE_HPP

#include "polardict/geometry.hpp"
#include "polardict/sampling.hpp"
#include "polardict/steering.hpp"

#include <cstddef>
#include <span>
#include <utility>

namespace polardict
{
    // A column addressed in sine space
    struct SamplePoint
    {
        AngularPair angular;
        double range = 1.0; // [m], may be +infinity
    };

    // |a^H b|; throws InputDomainError on length mismatch
    double inner_product_mag(const ResponseVector &a, const ResponseVector &b);
    double inner_product_mag(std::span<const cplx> a, std::span<const cplx> b);

    // |a^H b| of two proposed-model columns as the product of a horizontal sum over
    // M_H elements and a vertical sum over M_V elements.
    double factorized_inner_mag(const ArrayConfig &cfg, const SamplePoint &p, const SamplePoint &q);

    // |sin(n pi x) / sin(pi x)|, equal to n when x is within 1e-12 of an integer
    double dirichlet_mag(std::size_t n, double x);

    struct CoherenceParams
    {
        double alpha_h = 0.0;
        double alpha_v = 0.0;
        double alpha = 0.0; // alpha_h * alpha_v
        double alpha_thr = 0.0;
    };

    struct SameAngleCoherence
    {
        double magnitude = 0.0;
        CoherenceParams params;
    };

    // Fresnel-integral estimate M |C(a_h)+iS(a_h)|/a_h |C(a_v)+iS(a_v)|/a_v of the inner product
    // between two columns sharing a direction at ranges r_p and r_q.
    SameAngleCoherence same_angle_coherence_approx(const ArrayConfig &cfg, const AngularPair &angular, double r_p,
                                                   double r_q, double alpha_thr = 0.0);

    // alpha = 2 M_H M_V delta^2 sqrt((1-phi^2)(1-omega^2)) / lambda * |1/r_p - 1/r_q|
    double pair_alpha(const ArrayConfig &cfg, const AngularPair &angular, double r_p, double r_q);

    enum class CoherenceMethod
    {
        direct,    // full-length inner products of the generated columns
        factorized // horizontal x vertical split, O(M_H + M_V) per pair
    };

    const char *to_string(CoherenceMethod method);

    struct CoherenceReport
    {
        double mu = 0.0;
        double normalized_mu = 0.0;
        std::pair<std::size_t, std::size_t> argmax_pair{0, 1};
        std::size_t n_columns = 0;
        CoherenceMethod method = CoherenceMethod::factorized;
    };

    // Largest |w_p^H w_q| over p < q. Ties resolve to the lexicographically smallest (p, q),
    // so the report does not depend on the thread count (0 = hardware concurrency).
    // Throws InputDomainError for fewer than two columns.
    CoherenceReport dictionary_coherence(const Dictionary &dict, CoherenceMethod method, unsigned threads = 0);
}

#endif
