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

#ifndef holoris_allocation_H
#define holoris_allocation_H

#include "holoris/types.hpp"

namespace holoris
{
    template <typename Real>
    struct PowerAllocation
    {
        RVector<Real> powers;         // P_k [W], in the order of the input SNRs
        Real water_level = Real(0);   // [W]; P_k = max(0, water_level - 1/s_k)
        Index active_count = 0;       // Modes with P_k > 0
    };

    // Per-watt SNRs below this are treated as switched-off modes
    template <typename Real>
    inline constexpr Real negligible_snr = Real(1e-30);

    // Exact water-filling over per-watt mode SNRs s_k with sum P_k = total_power
    // - Active set found in closed form after sorting; no iteration
    // - Throws std::invalid_argument for empty or all-zero SNRs, negative SNRs, or total_power <= 0
    template <typename Real>
    PowerAllocation<Real> water_fill(const Eigen::Ref<const RVector<Real>> &snrs, Real total_power);
}

#endif
