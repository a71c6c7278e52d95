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
#include "holoris/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace holoris;

namespace
{
    RVector<double> vec(std::initializer_list<double> v)
    {
        RVector<double> out(Index(v.size()));
        std::copy(v.begin(), v.end(), out.data());
        return out;
    }

    double sum_rate(const RVector<double> &s, const RVector<double> &p)
    {
        double r = 0;
        for (Index k = 0; k < s.size(); ++k)
            r += std::log2(1 + s(k) * p(k));
        return r;
    }

    // Exact KKT certificate of the water-filling solution
    void check_kkt(const RVector<double> &s, double total, const PowerAllocation<double> &a)
    {
        REQUIRE(a.powers.size() == s.size());
        CHECK(std::abs(a.powers.sum() - total) <= 1e-12 * total);
        Index active = 0;
        for (Index k = 0; k < s.size(); ++k)
        {
            CHECK(a.powers(k) >= 0);
            if (a.powers(k) > 0)
            {
                ++active;
                CHECK(a.water_level > 1 / s(k));
                CHECK(std::abs(a.powers(k) - (a.water_level - 1 / s(k))) <= 1e-12 * a.water_level);
            }
            else
                CHECK((s(k) < negligible_snr<double> || a.water_level <= 1 / s(k)));
        }
        CHECK(active == a.active_count);
    }
}

TEST_CASE("allocation - two-mode closed form")
{
    const auto a = water_fill<double>(vec({1.0, 0.25}), 5.0);
    CHECK(a.water_level == 5.0);
    CHECK(a.powers(0) == 4.0);
    CHECK(a.powers(1) == 1.0);
    CHECK(a.active_count == 2);
}

TEST_CASE("allocation - symmetric and single mode")
{
    const auto a = water_fill<double>(vec({3e9, 3e9}), 1e-5);
    CHECK(std::abs(a.powers(0) - 0.5e-5) < 1e-20);
    CHECK(std::abs(a.powers(1) - 0.5e-5) < 1e-20);
    const auto b = water_fill<double>(vec({42.0}), 0.7);
    CHECK(b.powers(0) == 0.7);
    CHECK(b.active_count == 1);
}

TEST_CASE("allocation - weak mode stays off")
{
    // Level with both active would be (1 + 1 + 100) / 2 = 51 < 100
    const auto a = water_fill<double>(vec({1.0, 0.01}), 1.0);
    CHECK(a.powers(0) == 1.0);
    CHECK(a.powers(1) == 0.0);
    CHECK(a.active_count == 1);
    CHECK(a.water_level == 2.0);
}

TEST_CASE("allocation - zero and negligible SNRs receive nothing")
{
    const auto a = water_fill<double>(vec({0.0, 2.0, 1e-40, 0.5}), 3.0);
    CHECK(a.powers(0) == 0.0);
    CHECK(a.powers(2) == 0.0);
    check_kkt(vec({0.0, 2.0, 1e-40, 0.5}), 3.0, a);
}

TEST_CASE("allocation - errors")
{
    CHECK_THROWS_AS(water_fill<double>(RVector<double>(0), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(water_fill<double>(vec({0.0, 0.0}), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(water_fill<double>(vec({1.0, -1.0}), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(water_fill<double>(vec({1.0}), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(water_fill<double>(vec({1.0}), -2.0), std::invalid_argument);
}

TEST_CASE("allocation - KKT certificate on random instances")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> size(1, 40);
    std::uniform_real_distribution<double> log_snr(-3.0, 12.0), log_power(-6.0, 2.0);
    for (int trial = 0; trial < 1000; ++trial)
    {
        RVector<double> s(size(rng));
        for (Index k = 0; k < s.size(); ++k)
            s(k) = std::pow(10.0, log_snr(rng));
        const double total = std::pow(10.0, log_power(rng));
        check_kkt(s, total, water_fill<double>(s, total));
    }
}

TEST_CASE("allocation - beats random feasible allocations")
{
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> size(1, 6);
    std::uniform_real_distribution<double> log_snr(-1.0, 3.0);
    std::gamma_distribution<double> gamma(1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial)
    {
        RVector<double> s(size(rng));
        for (Index k = 0; k < s.size(); ++k)
            s(k) = std::pow(10.0, log_snr(rng));
        const double total = 0.5 + trial * 0.2;
        const double best = sum_rate(s, water_fill<double>(s, total).powers);
        for (int draw = 0; draw < 10000; ++draw)
        {
            RVector<double> p(s.size());
            for (Index k = 0; k < s.size(); ++k)
                p(k) = gamma(rng);
            p *= total / p.sum();
            REQUIRE(sum_rate(s, p) <= best + 1e-12);
        }
    }
}

TEST_CASE("allocation - permutation equivariance")
{
    std::mt19937_64 rng(5);
    RVector<double> s = vec({0.3, 5.0, 1.2, 0.05, 2.2, 9.0});
    const auto a = water_fill<double>(s, 2.0);
    std::vector<Index> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 10; ++t)
    {
        std::shuffle(perm.begin(), perm.end(), rng);
        RVector<double> sp(6);
        for (Index k = 0; k < 6; ++k)
            sp(k) = s(perm[k]);
        const auto b = water_fill<double>(sp, 2.0);
        for (Index k = 0; k < 6; ++k)
            CHECK(std::abs(b.powers(k) - a.powers(perm[k])) <= 1e-15);
    }
}

TEST_CASE("allocation - powers are monotone in the budget")
{
    RVector<double> s = vec({0.3, 5.0, 1.2, 0.05, 2.2, 9.0});
    RVector<double> previous = RVector<double>::Zero(6);
    for (double total = 0.01; total < 100; total *= 1.7)
    {
        const auto a = water_fill<double>(s, total);
        for (Index k = 0; k < 6; ++k)
            CHECK(a.powers(k) >= previous(k) - 1e-15 * total);
        previous = a.powers;
    }
}

TEST_CASE("allocation - extreme dynamic range")
{
    // Realistic per-watt SNRs span tens of decades
    const RVector<double> s = vec({1.3e12, 1.2e8, 7e6, 1e2, 1e-12});
    const auto a = water_fill<double>(s, 1e-5);
    check_kkt(s, 1e-5, a);
    CHECK(a.active_count == 3);
}

TEST_CASE("allocation - long double")
{
    RVector<long double> s(2);
    s << 1.0L, 0.25L;
    const auto a = water_fill<long double>(s, 5.0L);
    CHECK(a.powers(0) == 4.0L);
    CHECK(a.powers(1) == 1.0L);
}
