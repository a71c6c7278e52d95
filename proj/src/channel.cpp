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

#include "holoris/channel.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace holoris
{
    template <typename Real>
    Svd<Real> thin_svd(const CMatrix<Real> &a)
    {
        Eigen::BDCSVD<CMatrix<Real>> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
        if (svd.info() != Eigen::Success)
            throw NumericalError("thin_svd: decomposition did not converge");
        return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
    }

    template <typename Real>
    CMatrix<Real> complete_unitary(const CMatrix<Real> &orthonormal_columns)
    {
        const Index n = orthonormal_columns.rows(), k = orthonormal_columns.cols();
        if (k > n)
            throw std::invalid_argument("complete_unitary: more columns than rows");
        Eigen::HouseholderQR<CMatrix<Real>> qr(orthonormal_columns);
        CMatrix<Real> q = qr.householderQ();
        q.leftCols(k) = orthonormal_columns;
        return q;
    }

    template <typename Real>
    CMatrix<Real> orthonormalize_and_complete(const CMatrix<Real> &seed)
    {
        const Index n = seed.rows(), k = seed.cols();
        if (k > n)
            throw std::invalid_argument("orthonormalize_and_complete: more columns than rows");
        Eigen::HouseholderQR<CMatrix<Real>> qr(seed);
        CMatrix<Real> q = qr.householderQ();
        for (Index j = 0; j < k; ++j)
        {
            const Complex<Real> r = qr.matrixQR()(j, j);
            if (std::abs(r) > Real(0))
                q.col(j) *= r / std::abs(r);
        }
        return q;
    }

    template <typename Real>
    ChannelPair<Real>::ChannelPair(CMatrix<Real> h, CMatrix<Real> g)
        : h_(std::move(h)), g_(std::move(g)), cache_(std::make_shared<Cache>())
    {
        if (g_.cols() != h_.rows())
            throw std::invalid_argument("ChannelPair: G has " + std::to_string(g_.cols()) + " columns but H has " +
                                        std::to_string(h_.rows()) + " rows");
    }

    template <typename Real>
    const Svd<Real> &ChannelPair<Real>::svd_h() const
    {
        std::call_once(cache_->h_once, [this]
                       { cache_->h = thin_svd<Real>(h_); });
        return cache_->h;
    }

    template <typename Real>
    const Svd<Real> &ChannelPair<Real>::svd_g() const
    {
        std::call_once(cache_->g_once, [this]
                       { cache_->g = thin_svd<Real>(g_); });
        return cache_->g;
    }

    template <typename Real>
    RisConfig<Real> RisConfig<Real>::diagonal(const CVector<Real> &coefficients)
    {
        RisConfig<Real> r;
        r.phi = coefficients.asDiagonal();
        r.kind = RisKind::Diagonal;
        return r;
    }

    template <typename Real>
    RisConfig<Real> RisConfig<Real>::non_diagonal(CMatrix<Real> phi)
    {
        if (phi.rows() != phi.cols())
            throw std::invalid_argument("RisConfig: reflection matrix must be square");
        RisConfig<Real> r;
        r.phi = std::move(phi);
        r.kind = RisKind::NonDiagonal;
        return r;
    }

    template <typename Real>
    Real RisConfig<Real>::unitarity_error() const
    {
        if (kind == RisKind::Diagonal)
            return (phi.diagonal().cwiseAbs2().array() - Real(1)).abs().maxCoeff();
        return holoris::unitarity_error(phi);
    }

    template <typename Real>
    void RisConfig<Real>::validate(Real tolerance) const
    {
        if (phi.rows() != phi.cols())
            throw NumericalError("RisConfig: reflection matrix is not square");
        if (kind == RisKind::Diagonal)
        {
            CMatrix<Real> off = phi;
            off.diagonal().setZero();
            if (max_abs(off) != Real(0))
                throw NumericalError("RisConfig: diagonal configuration has off-diagonal entries");
            const Real modulus = (phi.diagonal().cwiseAbs().array() - Real(1)).abs().maxCoeff();
            if (modulus > Real(1e-12))
                throw NumericalError("RisConfig: diagonal coefficient off the unit circle by " + std::to_string(double(modulus)));
        }
        const Real err = unitarity_error();
        if (!(err <= tolerance))
            throw NumericalError("RisConfig: |Phi Phi^H - I|_max = " + std::to_string(double(err)));
    }

    template <typename Real>
    ChannelPair<Real> build_channels(const Scenario<Real> &scenario)
    {
        scenario.validate();
        const auto tx = element_positions(scenario, SurfaceRole::Transmitter);
        const auto rx = element_positions(scenario, SurfaceRole::Receiver);
        const auto ris = element_positions(scenario, SurfaceRole::Ris);
        const Real k0 = scenario.wavenumber();
        const Real four_pi = Real(4) * std::numbers::pi_v<Real>;

        auto green = [&](const auto &a, const auto &b, const char *link)
        {
            const Real d = (a - b).norm();
            if (!(d > Real(0)))
                throw std::invalid_argument(std::string("build_channels: coincident elements on the ") + link + " link");
            return std::polar(Real(1) / (four_pi * d), k0 * d);
        };

        CMatrix<Real> h(ris.cols(), tx.cols());
        for (Index l = 0; l < tx.cols(); ++l)
            for (Index n = 0; n < ris.cols(); ++n)
                h(n, l) = green(ris.col(n), tx.col(l), "Tx-RIS");

        CMatrix<Real> g(rx.cols(), ris.cols());
        for (Index n = 0; n < ris.cols(); ++n)
            for (Index m = 0; m < rx.cols(); ++m)
                g(m, n) = green(rx.col(m), ris.col(n), "RIS-Rx");

        return ChannelPair<Real>(std::move(h), std::move(g));
    }

    template <typename Real>
    CMatrix<Real> end_to_end(const ChannelPair<Real> &channels, const RisConfig<Real> &ris)
    {
        if (ris.phi.rows() != channels.ris_count() || ris.phi.cols() != channels.ris_count())
            throw std::invalid_argument("end_to_end: RIS matrix is " + std::to_string(ris.phi.rows()) + "x" +
                                        std::to_string(ris.phi.cols()) + ", channels expect " +
                                        std::to_string(channels.ris_count()));
        if (ris.kind == RisKind::Diagonal)
            return (channels.g() * ris.phi.diagonal().asDiagonal()) * channels.h();
        return (channels.g() * ris.phi) * channels.h();
    }

    template <typename Real>
    Real achievable_rate(const CMatrix<Real> &z, const CMatrix<Real> &q, Real noise_power)
    {
        if (q.rows() != q.cols() || q.rows() != z.cols())
            throw std::invalid_argument("achievable_rate: covariance is " + std::to_string(q.rows()) + "x" +
                                        std::to_string(q.cols()) + ", channel has " + std::to_string(z.cols()) +
                                        " inputs");
        if (!(noise_power > Real(0)))
            throw std::invalid_argument("achievable_rate: noise power must be positive");

        const Real scale = max_abs(q);
        const Real asym = max_abs(CMatrix<Real>(q - q.adjoint()));
        if (asym > Real(1e-10) * scale)
            throw std::invalid_argument("achievable_rate: covariance is not Hermitian");
        if (scale == Real(0) || z.size() == 0)
            return Real(0);

        CMatrix<Real> a = z * q * z.adjoint() / noise_power;
        a = (a + a.adjoint()).eval() * Real(0.5);
        Eigen::SelfAdjointEigenSolver<CMatrix<Real>> eig(a, Eigen::EigenvaluesOnly);
        Real nats = Real(0);
        for (Index i = 0; i < eig.eigenvalues().size(); ++i)
            nats += std::log1p(std::max(eig.eigenvalues()(i), Real(0)));
        return nats / std::numbers::ln2_v<Real>;
    }

    template struct Svd<double>;
    template Svd<double> thin_svd<double>(const CMatrix<double> &);
    template CMatrix<double> complete_unitary<double>(const CMatrix<double> &);
    template CMatrix<double> orthonormalize_and_complete<double>(const CMatrix<double> &);
    template class ChannelPair<double>;
    template struct RisConfig<double>;
    template ChannelPair<double> build_channels<double>(const Scenario<double> &);
    template CMatrix<double> end_to_end<double>(const ChannelPair<double> &, const RisConfig<double> &);
    template double achievable_rate<double>(const CMatrix<double> &, const CMatrix<double> &, double);
}
