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

#ifndef holoris_schemes_H
#define holoris_schemes_H

#include "holoris/allocation.hpp"
#include "holoris/channel.hpp"
#include "holoris/pswf.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace holoris
{
    // Canonical order; CSV columns and reports follow it
    enum class Scheme
    {
        NdNum,      // Non-diagonal RIS, SVD of H and G
        NdPswf,     // Non-diagonal RIS, sampled prolate modes
        FocNum,     // Focusing (diagonal) RIS, SVD of the end-to-end channel
        FocPswf,    // Focusing RIS, prolate-mode covariance
        RandomRis,  // Diagonal RIS with i.i.d. uniform phases
        SpecularRis // Diagonal RIS with uniform phase profile (Phi = I)
    };

    inline constexpr std::array<Scheme, 6> all_schemes = {Scheme::NdNum, Scheme::NdPswf, Scheme::FocNum,
                                                          Scheme::FocPswf, Scheme::RandomRis, Scheme::SpecularRis};

    const char *to_string(Scheme scheme);                  // "nd_num", "nd_pswf", ...
    std::optional<Scheme> parse_scheme(std::string_view name); // Accepts the to_string names and "ND-NUM" style

    enum class Link
    {
        TxRis,
        RisRx
    };

    template <typename Real>
    struct SchemeOptions
    {
        Index max_modes = 64;                  // Prolate modes built per link (further capped by surface sizes)
        Real far_field_threshold = Real(5);    // Below this margin the prolate design is flagged in warnings
        std::uint64_t seed = 0;                // Random-RIS baseline seed
    };

    // Diagonals of the focusing matrices
    // - f_tx_ris(l) = exp(-j k0 d_Tx,RIS(l)), f_ris_tx(n) = exp(+j k0 d_RIS,Tx(n))
    // - f_ris_rx(n) = exp(-j k0 d_RIS,Rx(n)), f_rx_ris(m) = exp(+j k0 d_Rx,RIS(m))
    template <typename Real>
    struct FocusingMatrices
    {
        CVector<Real> f_tx_ris; // L
        CVector<Real> f_ris_tx; // N
        CVector<Real> f_ris_rx; // N
        CVector<Real> f_rx_ris; // M
    };

    template <typename Real>
    FocusingMatrices<Real> focusing_matrices(const Scenario<Real> &scenario);

    // Prolate communication modes of one link
    template <typename Real>
    struct PswfModeSet
    {
        Link link = Link::TxRis;
        Real c_xy = Real(0);                               // Bandwidth along x (HoloS) / y (RIS)
        Real c_zz = Real(0);                               // Bandwidth along z
        std::vector<std::pair<Index, Index>> mode_index_pairs; // (k_a, k_z), strongest first
        RVector<Real> couplings_2d;                        // |nu_ka|^2 |nu_kz|^2, non-increasing
        RVector<Real> eigenvalues;                         // Discrete |lambda_k^PSWF|^2 of H or G
        RMatrix<Real> holo_samples;                        // Unit-norm sampled modes on the HoloS, before orthonormalization
        RMatrix<Real> ris_samples;                         // Same on the RIS
        CMatrix<Real> n_holo;                              // Unitary N_Tx,RIS (L x L) or N_Rx,RIS (M x M)
        CMatrix<Real> n_ris;                               // Unitary N_RIS,Tx or N_RIS,Rx (N x N)
        Real margin = Real(0);                             // Far-field margin of the link
        bool far_field_ok = true;                          // margin >= SchemeOptions::far_field_threshold

        Index mode_count() const { return Index(mode_index_pairs.size()); }
    };

    // Throws std::invalid_argument if a bandwidth parameter is not positive (e.g. gamma = 0)
    template <typename Real>
    PswfModeSet<Real> pswf_mode_set(const Scenario<Real> &scenario, Link link, const SchemeOptions<Real> &options = {});

    template <typename Real>
    struct SchemeResult
    {
        Scheme scheme = Scheme::NdNum;
        RisConfig<Real> ris;
        CMatrix<Real> q;               // Transmit covariance, L x L
        RVector<Real> mode_snrs;       // Per-watt SNRs s_k used for water-filling
        PowerAllocation<Real> power;   // Allocation over mode_snrs
        Real rate = Real(0);           // log2 det(I + Z Q Z^H / sigma^2) on the true channel
        std::vector<std::string> warnings;
    };

    // Closed-form prolate design shared by ND-PSWF and FOC-PSWF
    template <typename Real>
    struct PswfDesign
    {
        PswfModeSet<Real> tx_link;
        PswfModeSet<Real> rx_link;
        FocusingMatrices<Real> focusing;
        CMatrix<Real> v_h;             // F_Tx,RIS N_Tx,RIS
        CMatrix<Real> u_h;             // F_RIS,Tx N_RIS,Tx
        CMatrix<Real> v_g;             // F_RIS,Rx N_RIS,Rx
        RVector<Real> mode_snrs;
        PowerAllocation<Real> power;
        CMatrix<Real> q;               // Q^PSWF
        std::vector<std::string> warnings;
    };

    template <typename Real>
    PswfDesign<Real> pswf_design(const Scenario<Real> &scenario, const SchemeOptions<Real> &options = {});

    template <typename Real>
    SchemeResult<Real> nd_num(const ChannelPair<Real> &channels, const Scenario<Real> &scenario);

    template <typename Real>
    SchemeResult<Real> nd_pswf(const ChannelPair<Real> &channels, const Scenario<Real> &scenario,
                               const PswfDesign<Real> &design);

    template <typename Real>
    SchemeResult<Real> nd_pswf(const ChannelPair<Real> &channels, const Scenario<Real> &scenario,
                               const SchemeOptions<Real> &options = {});

    // Phi = F_RIS,Rx F_RIS,Tx^H
    template <typename Real>
    RisConfig<Real> foc_ris(const Scenario<Real> &scenario);

    template <typename Real>
    SchemeResult<Real> foc_num(const ChannelPair<Real> &channels, const Scenario<Real> &scenario);

    template <typename Real>
    SchemeResult<Real> foc_pswf(const ChannelPair<Real> &channels, const Scenario<Real> &scenario,
                                const PswfDesign<Real> &design);

    template <typename Real>
    SchemeResult<Real> foc_pswf(const ChannelPair<Real> &channels, const Scenario<Real> &scenario,
                                const SchemeOptions<Real> &options = {});

    // Random or specular RIS; the transmitter still gets SVD precoding with water-filling
    // - Random phases are drawn from a generator keyed by (seed, scenario_hash(scenario))
    template <typename Real>
    SchemeResult<Real> baseline(const ChannelPair<Real> &channels, const Scenario<Real> &scenario, Scheme kind,
                                std::uint64_t seed);

    // Given a fixed RIS: SVD precoding of Z = G Phi H plus water-filling
    template <typename Real>
    SchemeResult<Real> matched_transmitter(const ChannelPair<Real> &channels, const Scenario<Real> &scenario,
                                           Scheme scheme, RisConfig<Real> ris);

    // (N1, N2) degree-of-freedom estimates
    template <typename Real>
    std::pair<Real, Real> dof_estimates(const Scenario<Real> &scenario);

    // Stable hash of every scenario field
    template <typename Real>
    std::uint64_t scenario_hash(const Scenario<Real> &scenario);

    // Evaluates the listed schemes, sharing the prolate design between ND-PSWF and FOC-PSWF
    template <typename Real>
    std::vector<SchemeResult<Real>> evaluate_schemes(const ChannelPair<Real> &channels, const Scenario<Real> &scenario,
                                                     const std::vector<Scheme> &schemes,
                                                     const SchemeOptions<Real> &options = {});

    // Throws NumericalError if Phi is not unitary to 1e-10, Q is not Hermitian PSD, or Tr(Q) > P_T (1 + 1e-9)
    template <typename Real>
    void check_invariants(const SchemeResult<Real> &result, const Scenario<Real> &scenario);
}

#endif
