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

#include <catch2/catch_amalgamated.hpp>
#include "holoris/geometry.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <tuple>

using namespace holoris;

namespace
{
    Scenario<double> small_scenario(double delta = 0.05)
    {
        Scenario<double> s;
        s.tx = {3, 2, delta, SurfaceRole::Transmitter};
        s.rx = {2, 4, delta, SurfaceRole::Receiver};
        s.ris = {5, 3, delta, SurfaceRole::Ris};
        s.d_t = 4.0;
        s.l_t = 3.0;
        s.d_r = 2.0;
        s.l_r = 6.0;
        return s;
    }

    constexpr SurfaceRole roles[] = {SurfaceRole::Transmitter, SurfaceRole::Receiver, SurfaceRole::Ris};
}

TEST_CASE("geometry - single element sits at the surface center")
{
    Scenario<double> s;
    s.tx = {1, 1, 0.04, SurfaceRole::Transmitter};
    s.l_t = 5.0;
    s.d_t = 5.0;
    const auto p = element_position(s, SurfaceRole::Transmitter, 1);
    CHECK(p.x() == 5.0);
    CHECK(p.y() == 5.0);
    CHECK(p.z() == 0.0);
}

TEST_CASE("geometry - 2x2 RIS first element")
{
    Scenario<double> s;
    s.ris = {2, 2, 0.04, SurfaceRole::Ris};
    const auto p = element_position(s, SurfaceRole::Ris, 1);
    CHECK(p.x() == 0.0);
    CHECK(std::abs(p.y() + 0.02) < 1e-15);
    CHECK(std::abs(p.z() + 0.02) < 1e-15);
}

TEST_CASE("geometry - reference 8x8 transmitter, first element")
{
    const auto s = reference_scenario<double>(8, 32);
    // Independent substitution: delta = c0 / (2 f)
    const double delta = 299792458.0 / 3.5e9 / 2.0;
    CHECK(std::abs(delta - 0.0428274940) < 1e-9);
    CHECK(std::abs(s.tx.spacing - delta) < 1e-16);

    const auto p = element_position(s, SurfaceRole::Transmitter, 1);
    CHECK(std::abs(p.x() - (5.0 + delta - 4.5 * delta)) < 1e-14);
    CHECK(p.y() == 5.0);
    CHECK(std::abs(p.z() - (delta - 4.5 * delta)) < 1e-14);

    // Index 2 advances along z, index 9 along x
    const auto p2 = element_position(s, SurfaceRole::Transmitter, 2);
    const auto p9 = element_position(s, SurfaceRole::Transmitter, 9);
    CHECK(std::abs(p2.z() - p.z() - delta) < 1e-14);
    CHECK(p2.x() == p.x());
    CHECK(std::abs(p9.x() - p.x() - delta) < 1e-14);
    CHECK(p9.z() == p.z());
}

TEST_CASE("geometry - receiver plane and RIS plane")
{
    const auto s = small_scenario();
    for (Index i = 1; i <= s.rx.count(); ++i)
        CHECK(element_position(s, SurfaceRole::Receiver, i).y() == -s.d_r);
    for (Index i = 1; i <= s.ris.count(); ++i)
        CHECK(element_position(s, SurfaceRole::Ris, i).x() == 0.0);
    CHECK(surface_center(s, SurfaceRole::Receiver).isApprox(Vec3<double>(s.l_r, -s.d_r, 0.0)));
}

TEST_CASE("geometry - out-of-range index names surface and bound")
{
    const auto s = small_scenario();
    CHECK_THROWS_AS(element_position(s, SurfaceRole::Ris, 0), std::out_of_range);
    try
    {
        element_position(s, SurfaceRole::Ris, 16);
        FAIL("expected std::out_of_range");
    }
    catch (const std::out_of_range &e)
    {
        const std::string msg = e.what();
        CHECK(msg.find("ris") != std::string::npos);
        CHECK(msg.find("15") != std::string::npos);
    }
}

TEST_CASE("geometry - centroid equals surface center")
{
    const auto s = small_scenario(0.0371);
    for (auto role : roles)
    {
        const auto pos = element_positions(s, role);
        const Vec3<double> centroid = pos.rowwise().mean();
        CHECK((centroid - surface_center(s, role)).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("geometry - adjacent elements are exactly delta apart")
{
    const auto s = small_scenario(0.0371);
    for (auto role : roles)
    {
        const auto &surf = s.surface(role);
        for (Index i = 1; i <= surf.count(); ++i)
        {
            const auto [a, b] = grid_indices(surf.count_b, i);
            const auto p = element_position(s, role, i);
            if (b < surf.count_b)
                CHECK(std::abs((element_position(s, role, i + 1) - p).norm() - surf.spacing) < 1e-15);
            if (a < surf.count_a)
                CHECK(std::abs((element_position(s, role, i + surf.count_b) - p).norm() - surf.spacing) < 1e-15);
        }
    }
}

TEST_CASE("geometry - element positions are distinct")
{
    const auto s = small_scenario();
    for (auto role : roles)
    {
        std::set<std::tuple<double, double, double>> seen;
        const auto &surf = s.surface(role);
        for (Index i = 1; i <= surf.count(); ++i)
        {
            const auto p = element_position(s, role, i);
            seen.emplace(p.x(), p.y(), p.z());
        }
        CHECK(Index(seen.size()) == surf.count());
    }
}

TEST_CASE("geometry - derived scalars")
{
    auto s = small_scenario();
    CHECK(std::abs(s.r1() - 5.0) < 1e-15);
    CHECK(std::abs(s.gamma1() - std::asin(0.6)) < 1e-15);
    CHECK(std::abs(s.r2() - std::sqrt(40.0)) < 1e-15);
    CHECK(std::abs(s.wavenumber() - 2.0 * std::numbers::pi / s.wavelength()) < 1e-12);

    const auto h = s.half_aperture();
    CHECK(std::abs(2 * h.dx_t - 3 * 0.05) < 1e-16);
    CHECK(std::abs(2 * h.dz_t - 2 * 0.05) < 1e-16);
    CHECK(std::abs(2 * h.dx_r - 2 * 0.05) < 1e-16);
    CHECK(std::abs(2 * h.dz_r - 4 * 0.05) < 1e-16);
    CHECK(std::abs(2 * h.dy_ris - 5 * 0.05) < 1e-16);
    CHECK(std::abs(2 * h.dz_ris - 3 * 0.05) < 1e-16);
    CHECK(std::abs(h.area_ris() - 0.25 * 0.15) < 1e-16);
}

TEST_CASE("geometry - far-field margin of the reference setup")
{
    const auto s = reference_scenario<double>(8, 32);
    const double delta = 299792458.0 / 3.5e9 / 2.0;
    const auto [m1, m2] = far_field_margin(s);
    // Largest half-aperture is the RIS: 16 delta
    CHECK(std::abs(m1 - std::sqrt(50.0) / (16 * delta)) < 1e-12);
    CHECK(std::abs(m1 - 10.3) < 0.05);
    CHECK(m1 == m2);
}

TEST_CASE("geometry - far-field margin with l_t = d_t and under scaling")
{
    auto s = small_scenario();
    s.d_t = s.l_t = 3.0;
    const auto h = s.half_aperture();
    const double expected = 3.0 * std::sqrt(2.0) / std::max({h.dx_t, h.dz_t, h.dy_ris, h.dz_ris});
    CHECK(std::abs(far_field_margin(s).first - expected) < 1e-12);

    auto big = s;
    big.d_t *= 2, big.l_t *= 2, big.d_r *= 2, big.l_r *= 2;
    big.tx.spacing *= 2, big.rx.spacing *= 2, big.ris.spacing *= 2;
    const auto [a1, a2] = far_field_margin(s);
    const auto [b1, b2] = far_field_margin(big);
    CHECK(std::abs(a1 - b1) < 1e-12 * a1);
    CHECK(std::abs(a2 - b2) < 1e-12 * a2);
}

TEST_CASE("geometry - validation")
{
    auto s = small_scenario();
    CHECK_NOTHROW(s.validate());
    s.tx.count_a = 0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = small_scenario();
    s.l_r = 0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = small_scenario();
    s.ris.spacing = -1;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = small_scenario();
    s.noise_power = 0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("geometry - dBm conversion")
{
    CHECK(std::abs(dbm_to_watt(-20.0) - 1e-5) < 1e-20);
    CHECK(std::abs(dbm_to_watt(-97.0) - std::pow(10.0, -12.7)) < 1e-25);
    CHECK(std::abs(watt_to_dbm(1e-3) - 0.0) < 1e-12);
}

TEST_CASE("geometry - normalized coordinates span [-1, 1]")
{
    const auto s = small_scenario();
    const auto u = normalized_coordinates(s, SurfaceRole::Ris);
    CHECK(u.cols() == s.ris.count());
    CHECK(u.cwiseAbs().maxCoeff() < 1.0);
    // Element centers sit at (2i - 1 - count) / count in units of the half aperture
    CHECK(std::abs(u(0, 0) - (1.0 - 5.0) / 5.0) < 1e-14);
    CHECK(std::abs(u(1, 0) - (1.0 - 3.0) / 3.0) < 1e-14);
}

TEST_CASE("geometry - long double instantiation agrees")
{
    const auto sd = reference_scenario<double>(4, 16);
    const auto sl = reference_scenario<long double>(4, 16);
    const auto pd = element_position(sd, SurfaceRole::Ris, 37);
    const auto pl = element_position(sl, SurfaceRole::Ris, 37);
    CHECK(std::abs(double(pl.y()) - pd.y()) < 1e-15);
    CHECK(std::abs(double(pl.z()) - pd.z()) < 1e-15);
}
