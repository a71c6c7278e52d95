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
#include "holoris/pswf.hpp"

#include <cmath>
#include <complex>

using namespace holoris;

namespace
{
    // Composite Simpson rule for int_{-1}^{1} exp(j c x y) psi_k(y) dy; independent of the Gauss rule
    std::complex<double> finite_fourier(const PswfBasis<double> &b, Index k, double x, int intervals = 4000)
    {
        const double h = 2.0 / intervals;
        std::complex<double> acc = 0;
        for (int i = 0; i <= intervals; ++i)
        {
            const double y = std::min(1.0, -1.0 + i * h);
            const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            acc += w * std::exp(std::complex<double>(0, b.bandwidth() * x * y)) * b(k, y);
        }
        return acc * h / 3.0;
    }

    double sup_residual(const PswfBasis<double> &b, Index k)
    {
        double worst = 0;
        for (int i = 0; i <= 100; ++i)
        {
            const double x = -1.0 + 0.02 * i;
            worst = std::max(worst, std::abs(finite_fourier(b, k, x) - b.couplings()(k) * b(k, x)));
        }
        return worst;
    }

    RMatrix<double> gram(const PswfBasis<double> &b)
    {
        const Index k = b.order_count();
        const auto q = gauss_legendre<double>(std::max<Index>(64, 4 * k));
        RMatrix<double> v(k, q.nodes.size());
        for (Index i = 0; i < q.nodes.size(); ++i)
            for (Index o = 0; o < k; ++o)
                v(o, i) = b(o, q.nodes(i));
        return v * q.weights.asDiagonal() * v.transpose();
    }
}

TEST_CASE("pswf - zero-bandwidth limit is the constant Legendre function")
{
    const auto b = build_basis(1e-6, 4);
    for (double x : {-1.0, -0.5, 0.0, 0.33, 1.0})
        CHECK(std::abs(eval(b, 0, x) - 1.0 / std::sqrt(2.0)) < 1e-10);
    // All of the Hilbert-Schmidt norm in the first mode
    const auto spec = coupling_spectrum(b);
    CHECK(std::abs(spec(0) - 4.0) < 1e-10);
}

TEST_CASE("pswf - parity")
{
    for (double c : {0.5, 3.0, 10.0})
    {
        const auto b = build_basis(c, 10);
        for (Index k = 0; k < 10; ++k)
            for (double x : {0.1, 0.45, 0.8, 1.0})
                CHECK(std::abs(b(k, -x) - (k % 2 ? -1.0 : 1.0) * b(k, x)) < 1e-12);
        CHECK(std::abs(b(1, 0.0)) < 1e-15);
        CHECK(std::abs(b(3, 0.0)) < 1e-15);
    }
}

TEST_CASE("pswf - sign convention psi_k(1) > 0")
{
    const auto b = build_basis(4.0, 12);
    for (Index k = 0; k < 12; ++k)
        CHECK(b(k, 1.0) > 0);
}

TEST_CASE("pswf - normalization by 200-point quadrature")
{
    for (double c : {0.5, 5.0})
    {
        const auto b = build_basis(c, 3);
        const auto q = gauss_legendre<double>(200);
        double norm = 0;
        for (Index i = 0; i < 200; ++i)
            norm += q.weights(i) * b(0, q.nodes(i)) * b(0, q.nodes(i));
        CHECK(std::abs(norm - 1.0) <= 1e-10);
    }
}

TEST_CASE("pswf - orthonormality")
{
    for (double c : {0.5, 2.0, 5.0, 10.0})
    {
        const auto b = build_basis(c, 13);
        const RMatrix<double> g = gram(b);
        CHECK((g - RMatrix<double>::Identity(13, 13)).cwiseAbs().maxCoeff() <= 1e-8);
    }
}

TEST_CASE("pswf - eigen-relation of the finite Fourier transform")
{
    const auto b = build_basis(5.0, 9);
    for (Index k = 0; k <= 8; ++k)
        CHECK(sup_residual(b, k) <= 1e-6);
}

TEST_CASE("pswf - coupling phase is j^k")
{
    const auto b = build_basis(3.0, 8);
    const std::complex<double> j(0, 1);
    for (Index k = 0; k < 8; ++k)
    {
        const auto mu = b.couplings()(k);
        CHECK(std::abs(mu / std::abs(mu) - std::pow(j, double(k))) < 1e-9);
    }
}

TEST_CASE("pswf - Hilbert-Schmidt sum rule")
{
    // ||exp(j c x y)||^2 over [-1, 1]^2 is 4 for any c
    const auto b = build_basis(3.0, 20);
    const double total = b.coupling_spectrum().sum();
    CHECK(total <= 4.0 + 1e-12);
    CHECK(std::abs(total - 4.0) <= 1e-6);

    // Too few orders leave part of the norm unaccounted
    const auto few = build_basis(10.0, 4);
    CHECK(few.coupling_spectrum().sum() < 4.0 - 1e-3);
}

TEST_CASE("pswf - plateau then collapse at c = 10")
{
    const auto b = build_basis(10.0, 13);
    const auto s = b.coupling_spectrum();
    for (Index k = 0; k <= 4; ++k)
        CHECK(s(k) >= 0.95 * s(0));
    CHECK(s(12) / s(0) < 1e-3);
    for (Index k = 1; k < s.size(); ++k)
        CHECK(s(k) <= s(k - 1));
    // Spectrum order equals order index: magnitudes fall with k
    for (Index k = 1; k < 13; ++k)
        CHECK(std::abs(b.couplings()(k)) < std::abs(b.couplings()(k - 1)));
}

TEST_CASE("pswf - tiny couplings keep relative accuracy")
{
    // Direct quadrature oracle for a mode deep in the collapse: mu_k = int exp(jcy) psi_k(y) dy / psi_k(1)
    const auto b = build_basis(2.0, 10);
    for (Index k : {6, 8})
    {
        const auto direct = finite_fourier(b, k, 1.0, 20000) / b(k, 1.0);
        const auto mu = b.couplings()(k);
        CHECK(std::abs(direct - mu) <= 1e-6 * std::abs(mu) + 1e-15);
    }
}

TEST_CASE("pswf - truncation convergence")
{
    const Index orders = 12;
    for (double c : {0.5, 5.0, 10.0})
    {
        const auto b = build_basis(c, orders);
        const Index more = b.legendre_terms() + b.legendre_terms() / 2;
        const auto r = build_basis(c, orders, more);
        const RMatrix<double> head = r.legendre_coeffs().topRows(b.legendre_terms());
        CHECK((head - b.legendre_coeffs()).cwiseAbs().maxCoeff() <= 1e-9);
        CHECK(r.legendre_coeffs().bottomRows(more - b.legendre_terms()).cwiseAbs().maxCoeff() <= 1e-9);
    }
}

TEST_CASE("pswf - operator eigenvalues are increasing")
{
    const auto b = build_basis(6.0, 10);
    for (Index k = 1; k < 10; ++k)
        CHECK(b.operator_eigenvalues()(k) > b.operator_eigenvalues()(k - 1));
    // c -> 0: chi_k -> k (k + 1)
    const auto z = build_basis(1e-6, 5);
    for (Index k = 0; k < 5; ++k)
        CHECK(std::abs(z.operator_eigenvalues()(k) - double(k * (k + 1))) < 1e-9);
}

TEST_CASE("pswf - errors")
{
    CHECK_THROWS_AS(build_basis(0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_basis(-1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_basis(1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_basis(20.0, 10, 12), NumericalError);
    const auto b = build_basis(1.0, 3);
    CHECK_THROWS_AS(b(0, 1.0001), std::domain_error);
    CHECK_THROWS_AS(b(3, 0.0), std::out_of_range);
}

TEST_CASE("pswf - long double agrees with double")
{
    const auto bd = build_basis(4.0, 8);
    const auto bl = build_basis<long double>(4.0L, 8);
    for (Index k = 0; k < 8; ++k)
    {
        CHECK(std::abs(double(bl(k, 0.3L)) - bd(k, 0.3)) < 1e-12);
        const double rel = std::abs(std::complex<double>(bl.couplings()(k)) - bd.couplings()(k)) /
                           std::abs(bd.couplings()(k));
        CHECK(rel < 1e-10);
    }
}
