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

#include "holoris/pswf.hpp"
#include "holoris/legendre.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace holoris
{
    namespace
    {
        // <x^2 Pn_m, Pn_m> and <x^2 Pn_m, Pn_{m+2}> for normalized Legendre Pn
        template <typename Real>
        Real x2_diagonal(Index m)
        {
            const Real mm = Real(m);
            return (Real(2) * mm * mm + Real(2) * mm - Real(1)) / ((Real(2) * mm - Real(1)) * (Real(2) * mm + Real(3)));
        }

        template <typename Real>
        Real x2_offdiagonal(Index m)
        {
            const Real mm = Real(m);
            return (mm + Real(1)) * (mm + Real(2)) /
                   ((Real(2) * mm + Real(3)) * std::sqrt((Real(2) * mm + Real(1)) * (Real(2) * mm + Real(5))));
        }

        // <x Pn_m, Pn_{m+1}>
        template <typename Real>
        Real x_offdiagonal(Index m)
        {
            const Real mm = Real(m);
            return (mm + Real(1)) / std::sqrt((Real(2) * mm + Real(1)) * (Real(2) * mm + Real(3)));
        }

        // int x f g for Legendre series f, g
        template <typename Real>
        Real moment_x(const Eigen::Ref<const RVector<Real>> &f, const Eigen::Ref<const RVector<Real>> &g)
        {
            Real sum = Real(0);
            for (Index m = 0; m + 1 < f.size(); ++m)
                sum += x_offdiagonal<Real>(m) * (f(m) * g(m + 1) + f(m + 1) * g(m));
            return sum;
        }

        // int f g' for Legendre series f, g
        template <typename Real>
        Real moment_derivative(const Eigen::Ref<const RVector<Real>> &f, const Eigen::Ref<const RVector<Real>> &g)
        {
            // Pn_m' = sum_{k < m, m-k odd} sqrt((2m+1)(2k+1)) Pn_k; tail[k] accumulates sum over m > k of
            // the same parity as k+1
            const Index n = f.size();
            RVector<Real> tail = RVector<Real>::Zero(n + 2);
            for (Index k = n - 2; k >= 0; --k)
                tail(k) = tail(k + 2) + g(k + 1) * std::sqrt(Real(2 * (k + 1) + 1));
            Real sum = Real(0);
            for (Index k = 0; k + 1 < n; ++k)
                sum += f(k) * std::sqrt(Real(2 * k + 1)) * tail(k);
            return sum;
        }
    }

    template <typename Real>
    PswfBasis<Real> PswfBasis<Real>::build(Real bandwidth, Index order_count, Index legendre_terms)
    {
        if (!(bandwidth > Real(0)) || !std::isfinite(double(bandwidth)))
            throw std::invalid_argument("PswfBasis: bandwidth must be positive and finite");
        if (order_count < 1)
            throw std::invalid_argument("PswfBasis: order_count must be >= 1");

        const Index terms = legendre_terms > 0
                                ? legendre_terms
                                : 2 * order_count + std::max<Index>(30, Index(std::ceil(double(2 * bandwidth))));
        if (terms < order_count + 2)
            throw NumericalError("PswfBasis: " + std::to_string(terms) + " Legendre terms cannot resolve " +
                                 std::to_string(order_count) + " orders; increase legendre_terms");

        const Real c2 = bandwidth * bandwidth;
        PswfBasis basis;
        basis.bandwidth_ = bandwidth;
        basis.coeffs_ = RMatrix<Real>::Zero(terms, order_count);
        basis.chi_ = RVector<Real>(order_count);

        for (Index parity = 0; parity < 2; ++parity)
        {
            const Index block = (terms - parity + 1) / 2; // degrees parity, parity+2, ... < terms
            const Index wanted = (order_count - parity + 1) / 2;
            if (wanted == 0)
                continue;
            RVector<Real> diag(block), sub(std::max<Index>(block - 1, 0));
            for (Index i = 0; i < block; ++i)
            {
                const Index m = 2 * i + parity;
                diag(i) = Real(m) * Real(m + 1) + c2 * x2_diagonal<Real>(m);
                if (i + 1 < block)
                    sub(i) = c2 * x2_offdiagonal<Real>(m);
            }
            Eigen::SelfAdjointEigenSolver<RMatrix<Real>> eig;
            eig.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
            if (eig.info() != Eigen::Success)
                throw NumericalError("PswfBasis: tridiagonal eigensolver failed");

            for (Index j = 0; j < wanted; ++j)
            {
                const Index order = 2 * j + parity;
                RVector<Real> col = RVector<Real>::Zero(terms);
                for (Index i = 0; i < block; ++i)
                    col(2 * i + parity) = eig.eigenvectors()(i, j);

                // Tail of the expansion must have decayed for the truncation to be trustworthy
                const Real tail = std::abs(eig.eigenvectors()(block - 1, j)) +
                                  (block > 1 ? std::abs(eig.eigenvectors()(block - 2, j)) : Real(0));
                if (tail > Real(1e-12))
                    throw NumericalError("PswfBasis: order " + std::to_string(order) + " not resolved with " +
                                         std::to_string(terms) + " Legendre terms; increase legendre_terms");

                Real at_one = Real(0);
                for (Index m = 0; m < terms; ++m)
                    at_one += col(m) * std::sqrt((Real(2 * m) + Real(1)) / Real(2));
                if (at_one < Real(0))
                    col = -col;
                basis.coeffs_.col(order) = col;
                basis.chi_(order) = eig.eigenvalues()(j);
            }
        }

        basis.couplings_ = CVector<Real>(order_count);
        const Real psi0_at_zero = normalized_legendre_series<Real>(basis.coeffs_.col(0), Real(0));
        basis.couplings_(0) = Complex<Real>(std::sqrt(Real(2)) * basis.coeffs_(0, 0) / psi0_at_zero, Real(0));
        for (Index k = 0; k + 1 < order_count; ++k)
        {
            const Real x = moment_x<Real>(basis.coeffs_.col(k), basis.coeffs_.col(k + 1));
            const Real d = moment_derivative<Real>(basis.coeffs_.col(k), basis.coeffs_.col(k + 1));
            if (d == Real(0))
                throw NumericalError("PswfBasis: degenerate coupling ratio at order " + std::to_string(k));
            basis.couplings_(k + 1) = basis.couplings_(k) * Complex<Real>(Real(0), bandwidth * x / d);
        }
        return basis;
    }

    template <typename Real>
    Real PswfBasis<Real>::operator()(Index order, Real x) const
    {
        if (order < 0 || order >= order_count())
            throw std::out_of_range("PswfBasis: order " + std::to_string(order) + " outside [0, " +
                                    std::to_string(order_count()) + ")");
        if (!(std::abs(x) <= Real(1)))
            throw std::domain_error("PswfBasis: argument outside [-1, 1]");
        return normalized_legendre_series<Real>(coeffs_.col(order), x);
    }

    template <typename Real>
    RVector<Real> PswfBasis<Real>::coupling_spectrum() const
    {
        RVector<Real> out = couplings_.cwiseAbs2();
        std::sort(out.data(), out.data() + out.size(), std::greater<Real>());
        return out;
    }

    template class PswfBasis<double>;
    template class PswfBasis<long double>;
}
