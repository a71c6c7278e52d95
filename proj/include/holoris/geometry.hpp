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

#ifndef holoris_geometry_H
#define holoris_geometry_H

#include "holoris/types.hpp"

#include <utility>

namespace holoris
{
    enum class SurfaceRole
    {
        Transmitter, // HoloS parallel to the xz plane at y = d_t
        Receiver,    // HoloS parallel to the xz plane at y = -d_r
        Ris          // reflecting surface in the x = 0 plane
    };

    const char *to_string(SurfaceRole role);

    // Planar uniform rectangular array
    // - Axis "a" is x for the HoloS surfaces and y for the RIS; axis "b" is always z
    // - Linear element index runs fastest over axis b: n = (n_a - 1) * count_b + n_b (1-based)
    template <typename Real>
    struct SurfaceSpec
    {
        Index count_a = 1;                          // Elements along the first in-plane axis
        Index count_b = 1;                          // Elements along z
        Real spacing = Real(0);                     // Element pitch in [m]
        SurfaceRole role = SurfaceRole::Transmitter; // Which surface this is

        Index count() const { return count_a * count_b; }
        Real half_a() const { return spacing * Real(count_a) / Real(2); } // Half side length along a
        Real half_b() const { return spacing * Real(count_b) / Real(2); } // Half side length along z
        Real area() const { return Real(4) * half_a() * half_b(); }
        void validate() const;
    };

    // Half side lengths of the three surfaces
    template <typename Real>
    struct HalfAperture
    {
        Real dx_t, dz_t, dx_r, dz_r, dy_ris, dz_ris;

        Real area_tx() const { return Real(4) * dx_t * dz_t; }
        Real area_rx() const { return Real(4) * dx_r * dz_r; }
        Real area_ris() const { return Real(4) * dy_ris * dz_ris; }
    };

    // Deployment geometry and radio parameters of one link
    template <typename Real>
    struct Scenario
    {
        SurfaceSpec<Real> tx{1, 1, Real(0), SurfaceRole::Transmitter};
        SurfaceSpec<Real> rx{1, 1, Real(0), SurfaceRole::Receiver};
        SurfaceSpec<Real> ris{1, 1, Real(0), SurfaceRole::Ris};
        Real d_t = Real(5);              // Tx plane to RIS center [m]
        Real d_r = Real(5);              // Rx plane to RIS center [m]
        Real l_t = Real(5);              // Tx center to RIS plane [m]
        Real l_r = Real(5);              // Rx center to RIS plane [m]
        Real frequency = Real(3.5e9);    // Carrier [Hz]
        Real power_budget = Real(1e-5);  // P_T [W]
        Real noise_power = Real(2e-13);  // sigma^2 [W]

        Real wavelength() const { return Real(speed_of_light) / frequency; }
        Real wavenumber() const;
        Real r1() const; // Tx center to RIS center
        Real r2() const; // Rx center to RIS center
        Real gamma1() const;
        Real gamma2() const;

        const SurfaceSpec<Real> &surface(SurfaceRole role) const;
        HalfAperture<Real> half_aperture() const;

        // Throws std::invalid_argument naming the offending field
        void validate() const;
    };

    // Reference deployment: Tx/Rx with holo_side x holo_side elements, RIS with ris_side x ris_side cells,
    // spacing lambda/2, l_t = d_t = l_r = d_r = 5 m, f = 3.5 GHz, P_T = -20 dBm, sigma^2 = -97 dBm
    template <typename Real>
    Scenario<Real> reference_scenario(Index holo_side = 8, Index ris_side = 32);

    template <typename Real>
    Real dbm_to_watt(Real dbm);

    template <typename Real>
    Real watt_to_dbm(Real watt);

    // 1-based (a, b) grid indices of a 1-based linear element index
    std::pair<Index, Index> grid_indices(Index count_b, Index index);

    // Position of element "index" (1-based) of the given surface
    // - Throws std::out_of_range if index is outside [1, count]
    template <typename Real>
    Vec3<Real> element_position(const Scenario<Real> &scenario, SurfaceRole role, Index index);

    // All element positions as columns of a 3 x count matrix (column j holds element j + 1)
    template <typename Real>
    Eigen::Matrix<Real, 3, Eigen::Dynamic> element_positions(const Scenario<Real> &scenario, SurfaceRole role);

    template <typename Real>
    Vec3<Real> surface_center(const Scenario<Real> &scenario, SurfaceRole role);

    // In-plane offsets of every element from the surface center, normalized by the half side lengths
    // - Row 0 holds the axis-a coordinate, row 1 the z coordinate, both inside (-1, 1)
    template <typename Real>
    Eigen::Matrix<Real, 2, Eigen::Dynamic> normalized_coordinates(const Scenario<Real> &scenario, SurfaceRole role);

    // (r1 / max(dx_t, dz_t, dy_ris, dz_ris), r2 / max(dx_r, dz_r, dy_ris, dz_ris))
    template <typename Real>
    std::pair<Real, Real> far_field_margin(const Scenario<Real> &scenario);
}

#endif
