// SPDX-License-Identifier: Apache-2.0
//
// holoris - RIS-aided holographic MIMO link design library
// Copyright (C) 2026 The holoris authors
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

#ifndef holoris_legendre_H
#define holoris_legendre_H

#include "holoris/types.hpp"

namespace holoris
{
    // L2-normalized Legendre polynomials sqrt((2m+1)/2) P_m(x), m = 0 .. count-1
    template <typename Real>
    RVector<Real> normalized_legendre(Real x, Index count);

    // Sum_m coeffs(m) * normalized P_m(x), evaluated with the three-term recurrence
    template <typename Real>
    Real normalized_legendre_series(const Eigen::Ref<const RVector<Real>> &coeffs, Real x);

    template <typename Real>
    struct QuadratureRule
    {
        RVector<Real> nodes;   // Ascending abscissas in (-1, 1)
        RVector<Real> weights; // Positive weights, summing to 2
    };

    // n-point Gauss-Legendre rule on [-1, 1], Newton iteration on P_n
    template <typename Real>
    QuadratureRule<Real> gauss_legendre(Index n);
}

#endif
