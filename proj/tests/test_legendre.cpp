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
#include "holoris/legendre.hpp"

#include <cmath>
#include <numbers>

using namespace holoris;

TEST_CASE("legendre - first polynomials match closed forms")
{
    for (double x : {-1.0, -0.7, -0.1, 0.0, 0.3, 0.95, 1.0})
    {
        const auto p = normalized_legendre(x, 5);
        const double raw[] = {1.0, x, 0.5 * (3 * x * x - 1), 0.5 * (5 * x * x * x - 3 * x),
                              0.125 * (35 * std::pow(x, 4) - 30 * x * x + 3)};
        for (int m = 0; m < 5; ++m)
            CHECK(std::abs(p(m) - std::sqrt((2 * m + 1) / 2.0) * raw[m]) < 1e-14);
    }
}

TEST_CASE("legendre - series equals weighted sum of polynomials")
{
    RVector<double> c(7);
    c << 0.3, -1.2, 0.5, 0.0, 2.0, -0.25, 0.1;
    for (double x : {-0.9, 0.0, 0.42, 1.0})
    {
        const double direct = normalized_legendre(x, 7).dot(c);
        CHECK(std::abs(normalized_legendre_series<double>(c, x) - direct) < 1e-13);
    }
}

TEST_CASE("legendre - two-point Gauss rule")
{
    const auto q = gauss_legendre<double>(2);
    CHECK(std::abs(q.nodes(0) + 1.0 / std::sqrt(3.0)) < 1e-15);
    CHECK(std::abs(q.nodes(1) - 1.0 / std::sqrt(3.0)) < 1e-15);
    CHECK(std::abs(q.weights(0) - 1.0) < 1e-15);
    CHECK(std::abs(q.weights(1) - 1.0) < 1e-15);
}

TEST_CASE("legendre - Gauss rule is exact to degree 2n-1")
{
    for (Index n : {3, 10, 64, 201})
    {
        const auto q = gauss_legendre<double>(n);
        CHECK(std::abs(q.weights.sum() - 2.0) < 1e-13);
        for (Index i = 1; i < n; ++i)
            CHECK(q.nodes(i) > q.nodes(i - 1));
        for (int k : {2, int(std::min<Index>(6, 2 * n - 2)), int(2 * n - 2)})
        {
            const double integral = (q.weights.array() * q.nodes.array().pow(double(k))).sum();
            CHECK(std::abs(integral - 2.0 / (k + 1)) < 1e-13);
        }
    }
}

TEST_CASE("legendre - discrete orthonormality under the rule")
{
    const Index terms = 40;
    const auto q = gauss_legendre<double>(64);
    RMatrix<double> p(terms, q.nodes.size());
    for (Index i = 0; i < q.nodes.size(); ++i)
        p.col(i) = normalized_legendre(q.nodes(i), terms);
    const RMatrix<double> gram = p * q.weights.asDiagonal() * p.transpose();
    CHECK((gram - RMatrix<double>::Identity(terms, terms)).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("legendre - smooth integral")
{
    const auto q = gauss_legendre<double>(30);
    const double integral = (q.weights.array() * q.nodes.array().cos()).sum();
    CHECK(std::abs(integral - 2.0 * std::sin(1.0)) < 1e-15);
}

TEST_CASE("legendre - long double rule")
{
    const auto q = gauss_legendre<long double>(20);
    CHECK(std::abs(q.weights.sum() - 2.0L) < 1e-17L);
}
