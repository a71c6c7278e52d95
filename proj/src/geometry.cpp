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

#include "holoris/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace holoris
{
    const char *to_string(SurfaceRole role)
    {
        switch (role)
        {
        case SurfaceRole::Transmitter:
            return "transmitter";
        case SurfaceRole::Receiver:
            return "receiver";
        case SurfaceRole::Ris:
            return "ris";
        }
        return "unknown";
    }

    template <typename Real>
    void SurfaceSpec<Real>::validate() const
    {
        const std::string name = to_string(role);
        if (count_a < 1 || count_b < 1)
            throw std::invalid_argument(name + ": element counts must be >= 1");
        if (!(spacing > Real(0)) || !std::isfinite(double(spacing)))
            throw std::invalid_argument(name + ": spacing must be positive and finite");
    }

    template <typename Real>
    Real Scenario<Real>::wavenumber() const
    {
        return Real(2) * std::numbers::pi_v<Real> / wavelength();
    }

    template <typename Real>
    Real Scenario<Real>::r1() const { return std::hypot(l_t, d_t); }

    template <typename Real>
    Real Scenario<Real>::r2() const { return std::hypot(l_r, d_r); }

    template <typename Real>
    Real Scenario<Real>::gamma1() const { return std::asin(l_t / r1()); }

    template <typename Real>
    Real Scenario<Real>::gamma2() const { return std::asin(l_r / r2()); }

    template <typename Real>
    const SurfaceSpec<Real> &Scenario<Real>::surface(SurfaceRole role) const
    {
        switch (role)
        {
        case SurfaceRole::Transmitter:
            return tx;
        case SurfaceRole::Receiver:
            return rx;
        default:
            return ris;
        }
    }

    template <typename Real>
    HalfAperture<Real> Scenario<Real>::half_aperture() const
    {
        return {tx.half_a(), tx.half_b(), rx.half_a(), rx.half_b(), ris.half_a(), ris.half_b()};
    }

    template <typename Real>
    void Scenario<Real>::validate() const
    {
        tx.validate();
        rx.validate();
        ris.validate();
        auto positive = [](Real v, const char *field)
        {
            if (!(v > Real(0)) || !std::isfinite(double(v)))
                throw std::invalid_argument(std::string("scenario: ") + field + " must be positive and finite");
        };
        positive(d_t, "d_t");
        positive(d_r, "d_r");
        positive(l_t, "l_t");
        positive(l_r, "l_r");
        positive(frequency, "frequency");
        positive(power_budget, "power_budget");
        positive(noise_power, "noise_power");
    }

    template <typename Real>
    Real dbm_to_watt(Real dbm)
    {
        return std::pow(Real(10), (dbm - Real(30)) / Real(10));
    }

    template <typename Real>
    Real watt_to_dbm(Real watt)
    {
        return Real(10) * std::log10(watt) + Real(30);
    }

    template <typename Real>
    Scenario<Real> reference_scenario(Index holo_side, Index ris_side)
    {
        Scenario<Real> s;
        s.frequency = Real(3.5e9);
        const Real delta = s.wavelength() / Real(2);
        s.tx = {holo_side, holo_side, delta, SurfaceRole::Transmitter};
        s.rx = {holo_side, holo_side, delta, SurfaceRole::Receiver};
        s.ris = {ris_side, ris_side, delta, SurfaceRole::Ris};
        s.d_t = s.l_t = s.d_r = s.l_r = Real(5);
        s.power_budget = dbm_to_watt(Real(-20));
        s.noise_power = dbm_to_watt(Real(-97));
        return s;
    }

    std::pair<Index, Index> grid_indices(Index count_b, Index index)
    {
        return {(index - 1) / count_b + 1, (index - 1) % count_b + 1};
    }

    template <typename Real>
    Vec3<Real> element_position(const Scenario<Real> &scenario, SurfaceRole role, Index index)
    {
        const auto &s = scenario.surface(role);
        if (index < 1 || index > s.count())
            throw std::out_of_range(std::string(to_string(role)) + ": element index " + std::to_string(index) +
                                    " outside [1, " + std::to_string(s.count()) + "]");

        const auto [ia, ib] = grid_indices(s.count_b, index);
        const Real d = s.spacing;
        const Real a = d * Real(ia) - d / Real(2) * Real(s.count_a + 1);
        const Real b = d * Real(ib) - d / Real(2) * Real(s.count_b + 1);
        switch (role)
        {
        case SurfaceRole::Transmitter:
            return {scenario.l_t + a, scenario.d_t, b};
        case SurfaceRole::Receiver:
            return {scenario.l_r + a, -scenario.d_r, b};
        default:
            return {Real(0), a, b};
        }
    }

    template <typename Real>
    Eigen::Matrix<Real, 3, Eigen::Dynamic> element_positions(const Scenario<Real> &scenario, SurfaceRole role)
    {
        const Index n = scenario.surface(role).count();
        Eigen::Matrix<Real, 3, Eigen::Dynamic> out(3, n);
        for (Index j = 0; j < n; ++j)
            out.col(j) = element_position(scenario, role, j + 1);
        return out;
    }

    template <typename Real>
    Vec3<Real> surface_center(const Scenario<Real> &scenario, SurfaceRole role)
    {
        switch (role)
        {
        case SurfaceRole::Transmitter:
            return {scenario.l_t, scenario.d_t, Real(0)};
        case SurfaceRole::Receiver:
            return {scenario.l_r, -scenario.d_r, Real(0)};
        default:
            return Vec3<Real>::Zero();
        }
    }

    template <typename Real>
    Eigen::Matrix<Real, 2, Eigen::Dynamic> normalized_coordinates(const Scenario<Real> &scenario, SurfaceRole role)
    {
        const auto &s = scenario.surface(role);
        const Index n = s.count();
        Eigen::Matrix<Real, 2, Eigen::Dynamic> out(2, n);
        const Real ha = s.half_a(), hb = s.half_b();
        for (Index j = 0; j < n; ++j)
        {
            const auto [ia, ib] = grid_indices(s.count_b, j + 1);
            out(0, j) = (s.spacing * (Real(ia) - Real(0.5)) - ha) / ha;
            out(1, j) = (s.spacing * (Real(ib) - Real(0.5)) - hb) / hb;
        }
        return out;
    }

    template <typename Real>
    std::pair<Real, Real> far_field_margin(const Scenario<Real> &scenario)
    {
        const auto h = scenario.half_aperture();
        const Real ris = std::max(h.dy_ris, h.dz_ris);
        const Real first = scenario.r1() / std::max({h.dx_t, h.dz_t, ris});
        const Real second = scenario.r2() / std::max({h.dx_r, h.dz_r, ris});
        return {first, second};
    }

#define HOLORIS_INSTANTIATE(Real)                                                                                   \
    template struct SurfaceSpec<Real>;                                                                              \
    template struct Scenario<Real>;                                                                                 \
    template Scenario<Real> reference_scenario<Real>(Index, Index);                                                 \
    template Real dbm_to_watt<Real>(Real);                                                                          \
    template Real watt_to_dbm<Real>(Real);                                                                          \
    template Vec3<Real> element_position<Real>(const Scenario<Real> &, SurfaceRole, Index);                         \
    template Eigen::Matrix<Real, 3, Eigen::Dynamic> element_positions<Real>(const Scenario<Real> &, SurfaceRole);   \
    template Vec3<Real> surface_center<Real>(const Scenario<Real> &, SurfaceRole);                                  \
    template Eigen::Matrix<Real, 2, Eigen::Dynamic> normalized_coordinates<Real>(const Scenario<Real> &, SurfaceRole); \
    template std::pair<Real, Real> far_field_margin<Real>(const Scenario<Real> &);

    HOLORIS_INSTANTIATE(double)
    HOLORIS_INSTANTIATE(long double)
#undef HOLORIS_INSTANTIATE
}
