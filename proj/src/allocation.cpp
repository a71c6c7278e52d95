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

#include "holoris/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace holoris
{
    template <typename Real>
    PowerAllocation<Real> water_fill(const Eigen::Ref<const RVector<Real>> &snrs, Real total_power)
    {
        if (snrs.size() == 0)
            throw std::invalid_argument("water_fill: no modes");
        if (!(total_power > Real(0)) || !std::isfinite(double(total_power)))
            throw std::invalid_argument("water_fill: total power must be positive and finite");

        std::vector<Index> order;
        for (Index i = 0; i < snrs.size(); ++i)
        {
            if (!(snrs(i) >= Real(0)) || !std::isfinite(double(snrs(i))))
                throw std::invalid_argument("water_fill: SNRs must be finite and non-negative");
            if (snrs(i) >= negligible_snr<Real>)
                order.push_back(i);
        }
        if (order.empty())
            throw std::invalid_argument("water_fill: all SNRs are zero");

        // Stable sort keeps equal SNRs in input order, so permuted inputs give permuted outputs
        std::stable_sort(order.begin(), order.end(), [&](Index a, Index b)
                         { return snrs(a) > snrs(b); });

        // Largest prefix whose water level rises above the noise floor 1/s of its weakest member
        Real inv_sum = Real(0);
        Index active = 0;
        Real level = Real(0);
        for (std::size_t n = 0; n < order.size(); ++n)
        {
            const Real inv = Real(1) / snrs(order[n]);
            const Real candidate = (total_power + inv_sum + inv) / Real(n + 1);
            if (candidate <= inv)
                break;
            inv_sum += inv;
            active = Index(n + 1);
            level = candidate;
        }

        PowerAllocation<Real> out;
        out.powers = RVector<Real>::Zero(snrs.size());
        out.active_count = active;
        for (Index n = 0; n < active; ++n)
            out.powers(order[n]) = level - Real(1) / snrs(order[n]);

        // level - 1/s cancels when the level is far above P_T; the rounding residual goes to the
        // strongest mode, whose power is at least P_T / active
        for (int pass = 0; pass < 2; ++pass)
            out.powers(order[0]) += total_power - out.powers.sum();
        out.water_level = level;
        return out;
    }

    template PowerAllocation<double> water_fill<double>(const Eigen::Ref<const RVector<double>> &, double);
    template PowerAllocation<long double> water_fill<long double>(const Eigen::Ref<const RVector<long double>> &, long double);
}
