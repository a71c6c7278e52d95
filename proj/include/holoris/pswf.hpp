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

#ifndef holoris_pswf_H
#define holoris_pswf_H

#include "holoris/types.hpp"

namespace holoris
{
    // Order-zero prolate spheroidal wave functions psi_k(x; c), k = 0 .. order_count-1, on [-1, 1]
    //
    // Each psi_k is stored as a series in L2-normalized Legendre polynomials. The coefficients are the
    // eigenvectors of the commuting Sturm-Liouville operator -d/dx (1-x^2) d/dx + c^2 x^2, which is
    // tridiagonal within each parity class. Normalization: unit L2 norm, psi_k(1) > 0.
    //
    // couplings(k) is the eigenvalue mu_k of the finite Fourier transform
    //     int_{-1}^{1} exp(j c x y) psi_k(y) dy = mu_k psi_k(x).
    // mu_0 follows from the series at x = 0 and higher orders from the exact ratio
    //     mu_{k+1} / mu_k = j c <x psi_k, psi_{k+1}> / <psi_k, psi_{k+1}'>,
    // which keeps full relative accuracy even when |mu_k| is far below machine epsilon.
    template <typename Real>
    class PswfBasis
    {
    public:
        // Throws std::invalid_argument for bandwidth <= 0 or order_count < 1, and NumericalError when
        // legendre_terms is too small to resolve the requested orders. legendre_terms = 0 selects
        // 2 * order_count + max(30, ceil(2c)).
        static PswfBasis build(Real bandwidth, Index order_count, Index legendre_terms = 0);

        Real bandwidth() const { return bandwidth_; }
        Index order_count() const { return coeffs_.cols(); }
        Index legendre_terms() const { return coeffs_.rows(); }

        const RMatrix<Real> &legendre_coeffs() const { return coeffs_; } // [legendre_terms, order_count]
        const CVector<Real> &couplings() const { return couplings_; }
        const RVector<Real> &operator_eigenvalues() const { return chi_; } // Sturm-Liouville eigenvalues

        // psi_order(x); throws std::domain_error for |x| > 1, std::out_of_range for bad order
        Real operator()(Index order, Real x) const;

        // |mu_k|^2 in non-increasing order
        RVector<Real> coupling_spectrum() const;

    private:
        Real bandwidth_ = Real(0);
        RMatrix<Real> coeffs_;
        CVector<Real> couplings_;
        RVector<Real> chi_;
    };

    template <typename Real>
    PswfBasis<Real> build_basis(Real bandwidth, Index order_count, Index legendre_terms = 0)
    {
        return PswfBasis<Real>::build(bandwidth, order_count, legendre_terms);
    }

    template <typename Real>
    Real eval(const PswfBasis<Real> &basis, Index order, Real x)
    {
        return basis(order, x);
    }

    template <typename Real>
    RVector<Real> coupling_spectrum(const PswfBasis<Real> &basis)
    {
        return basis.coupling_spectrum();
    }
}

#endif
