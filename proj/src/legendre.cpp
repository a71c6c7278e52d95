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

#include "holoris/legendre.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace holoris
{
    template <typename Real>
    RVector<Real> normalized_legendre(Real x, Index count)
    {
        RVector<Real> p(count);
        if (count == 0)
            return p;
        p(0) = std::sqrt(Real(0.5));
        if (count > 1)
            p(1) = std::sqrt(Real(1.5)) * x;
        for (Index m = 1; m + 1 < count; ++m)
        {
            const Real mm = Real(m);
            const Real a = std::sqrt((Real(2) * mm + 1) * (Real(2) * mm + 3)) / (mm + 1);
            const Real b = mm / (mm + 1) * std::sqrt((Real(2) * mm + 3) / (Real(2) * mm - 1));
            p(m + 1) = a * x * p(m) - b * p(m - 1);
        }
        return p;
    }

    template <typename Real>
    Real normalized_legendre_series(const Eigen::Ref<const RVector<Real>> &coeffs, Real x)
    {
        const Index n = coeffs.size();
        if (n == 0)
            return Real(0);
        Real prev = std::sqrt(Real(0.5));
        Real sum = coeffs(0) * prev;
        if (n == 1)
            return sum;
        Real cur = std::sqrt(Real(1.5)) * x;
        sum += coeffs(1) * cur;
        for (Index m = 1; m + 1 < n; ++m)
        {
            const Real mm = Real(m);
            const Real a = std::sqrt((Real(2) * mm + 1) * (Real(2) * mm + 3)) / (mm + 1);
            const Real b = mm / (mm + 1) * std::sqrt((Real(2) * mm + 3) / (Real(2) * mm - 1));
            const Real next = a * x * cur - b * prev;
            sum += coeffs(m + 1) * next;
            prev = cur;
            cur = next;
        }
        return sum;
    }

    template <typename Real>
    QuadratureRule<Real> gauss_legendre(Index n)
    {
        if (n < 1)
            throw std::invalid_argument("gauss_legendre: need at least one node");

        QuadratureRule<Real> rule{RVector<Real>(n), RVector<Real>(n)};
        const Real eps = std::numeric_limits<Real>::epsilon();
        const Index half = (n + 1) / 2;
        for (Index i = 0; i < half; ++i)
        {
            // Tricomi initial guess for the i-th largest root
            Real x = std::cos(std::numbers::pi_v<Real> * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
            Real dp = Real(1);
            for (int iter = 0; iter < 100; ++iter)
            {
                Real p0 = Real(1), p1 = x;
                for (Index k = 2; k <= n; ++k)
                {
                    const Real p2 = ((Real(2 * k - 1)) * x * p1 - Real(k - 1) * p0) / Real(k);
                    p0 = p1;
                    p1 = p2;
                }
                if (n == 1)
                {
                    p1 = x;
                    p0 = Real(1);
                }
                dp = Real(n) * (x * p1 - p0) / (x * x - Real(1));
                const Real step = p1 / dp;
                x -= step;
                if (std::abs(step) <= Real(2) * eps)
                    break;
            }
            // Derivative at the converged root
            Real p0 = Real(1), p1 = x;
            for (Index k = 2; k <= n; ++k)
            {
                const Real p2 = ((Real(2 * k - 1)) * x * p1 - Real(k - 1) * p0) / Real(k);
                p0 = p1;
                p1 = p2;
            }
            dp = n == 1 ? Real(1) : Real(n) * (x * p1 - p0) / (x * x - Real(1));
            const Real w = Real(2) / ((Real(1) - x * x) * dp * dp);
            rule.nodes(n - 1 - i) = x;
            rule.nodes(i) = -x;
            rule.weights(n - 1 - i) = w;
            rule.weights(i) = w;
        }
        if (n % 2 == 1)
            rule.nodes(n / 2) = Real(0);
        return rule;
    }

#define HOLORIS_INSTANTIATE(Real)                                                              \
    template RVector<Real> normalized_legendre<Real>(Real, Index);                             \
    template Real normalized_legendre_series<Real>(const Eigen::Ref<const RVector<Real>> &, Real); \
    template QuadratureRule<Real> gauss_legendre<Real>(Index);

    HOLORIS_INSTANTIATE(double)
    HOLORIS_INSTANTIATE(long double)
#undef HOLORIS_INSTANTIATE
}
