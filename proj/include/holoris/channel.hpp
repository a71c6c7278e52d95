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

#ifndef holoris_channel_H
#define holoris_channel_H

#include "holoris/geometry.hpp"

#include <memory>
#include <mutex>

namespace holoris
{
    // Thin singular value decomposition A = U diag(s) V^H with s sorted non-increasing
    template <typename Real>
    struct Svd
    {
        CMatrix<Real> u;
        RVector<Real> s;
        CMatrix<Real> v;
    };

    template <typename Real>
    Svd<Real> thin_svd(const CMatrix<Real> &a);

    // Completes a matrix with orthonormal columns (n x k, k <= n) to an n x n unitary matrix
    // whose leading k columns are the input columns
    template <typename Real>
    CMatrix<Real> complete_unitary(const CMatrix<Real> &orthonormal_columns);

    // Orthonormalizes the columns of "seed" in order (Householder QR, column k keeps the phase of its
    // projection onto the k-th direction) and completes the result to a square unitary matrix
    template <typename Real>
    CMatrix<Real> orthonormalize_and_complete(const CMatrix<Real> &seed);

    // LoS channel matrices H (RIS x Tx) and G (Rx x RIS), SVDs computed once on first request
    // Copies share the SVD cache; all accessors are safe to call concurrently
    template <typename Real>
    class ChannelPair
    {
    public:
        ChannelPair(CMatrix<Real> h, CMatrix<Real> g);

        const CMatrix<Real> &h() const { return h_; }
        const CMatrix<Real> &g() const { return g_; }
        Index tx_count() const { return h_.cols(); }
        Index ris_count() const { return h_.rows(); }
        Index rx_count() const { return g_.rows(); }

        const Svd<Real> &svd_h() const;
        const Svd<Real> &svd_g() const;

    private:
        struct Cache
        {
            std::once_flag h_once, g_once;
            Svd<Real> h, g;
        };
        CMatrix<Real> h_;
        CMatrix<Real> g_;
        std::shared_ptr<Cache> cache_;
    };

    enum class RisKind
    {
        Diagonal,
        NonDiagonal
    };

    // N x N reflection matrix with Phi Phi^H = I
    template <typename Real>
    struct RisConfig
    {
        CMatrix<Real> phi;
        RisKind kind = RisKind::NonDiagonal;

        static RisConfig diagonal(const CVector<Real> &coefficients);
        static RisConfig non_diagonal(CMatrix<Real> phi);

        Index size() const { return phi.rows(); }
        Real unitarity_error() const; // max |Phi Phi^H - I|

        // Throws NumericalError when unitarity exceeds "tolerance" or a diagonal config is malformed
        void validate(Real tolerance = Real(1e-10)) const;
    };

    // H(n,l) = exp(j k0 d1) / (4 pi d1), G(m,n) = exp(j k0 d2) / (4 pi d2)
    // - Throws std::invalid_argument on coincident elements
    template <typename Real>
    ChannelPair<Real> build_channels(const Scenario<Real> &scenario);

    // Z = G Phi H
    template <typename Real>
    CMatrix<Real> end_to_end(const ChannelPair<Real> &channels, const RisConfig<Real> &ris);

    // log2 det(I + Z Q Z^H / sigma^2) in [bits/s/Hz], through the eigenvalues of the Hermitian argument
    // - Throws std::invalid_argument if Q is not Hermitian to 1e-10 relative or dimensions disagree
    template <typename Real>
    Real achievable_rate(const CMatrix<Real> &z, const CMatrix<Real> &q, Real noise_power);
}

#endif
