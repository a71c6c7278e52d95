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

#include "holoris/schemes.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace holoris
{
    const char *to_string(Scheme scheme)
    {
        switch (scheme)
        {
        case Scheme::NdNum:
            return "nd_num";
        case Scheme::NdPswf:
            return "nd_pswf";
        case Scheme::FocNum:
            return "foc_num";
        case Scheme::FocPswf:
            return "foc_pswf";
        case Scheme::RandomRis:
            return "random";
        case Scheme::SpecularRis:
            return "specular";
        }
        return "unknown";
    }

    std::optional<Scheme> parse_scheme(std::string_view name)
    {
        std::string key;
        for (char ch : name)
            key.push_back(ch == '-' ? '_' : char(std::tolower(static_cast<unsigned char>(ch))));
        if (key == "random_ris")
            key = "random";
        if (key == "specular_ris")
            key = "specular";
        for (Scheme s : all_schemes)
            if (key == to_string(s))
                return s;
        return std::nullopt;
    }

    template <typename Real>
    FocusingMatrices<Real> focusing_matrices(const Scenario<Real> &scenario)
    {
        const Real k0 = scenario.wavenumber();
        const Vec3<Real> tx_center = surface_center(scenario, SurfaceRole::Transmitter);
        const Vec3<Real> rx_center = surface_center(scenario, SurfaceRole::Receiver);
        const auto tx = element_positions(scenario, SurfaceRole::Transmitter);
        const auto rx = element_positions(scenario, SurfaceRole::Receiver);
        const auto ris = element_positions(scenario, SurfaceRole::Ris);

        FocusingMatrices<Real> f;
        f.f_tx_ris.resize(tx.cols());
        for (Index l = 0; l < tx.cols(); ++l)
            f.f_tx_ris(l) = std::polar(Real(1), -k0 * tx.col(l).norm());
        f.f_ris_tx.resize(ris.cols());
        f.f_ris_rx.resize(ris.cols());
        for (Index n = 0; n < ris.cols(); ++n)
        {
            f.f_ris_tx(n) = std::polar(Real(1), k0 * (ris.col(n) - tx_center).norm());
            f.f_ris_rx(n) = std::polar(Real(1), -k0 * (ris.col(n) - rx_center).norm());
        }
        f.f_rx_ris.resize(rx.cols());
        for (Index m = 0; m < rx.cols(); ++m)
            f.f_rx_ris(m) = std::polar(Real(1), k0 * rx.col(m).norm());
        return f;
    }

    namespace
    {
        // Unit-norm columns of products psi_ka(coords(0, .)) psi_kz(coords(1, .))
        template <typename Real>
        RMatrix<Real> sample_modes(const PswfBasis<Real> &basis_a, const PswfBasis<Real> &basis_z,
                                   const Eigen::Matrix<Real, 2, Eigen::Dynamic> &coords,
                                   const std::vector<std::pair<Index, Index>> &pairs)
        {
            const Index n = coords.cols();
            RMatrix<Real> va(n, basis_a.order_count()), vz(n, basis_z.order_count());
            for (Index e = 0; e < n; ++e)
            {
                for (Index k = 0; k < basis_a.order_count(); ++k)
                    va(e, k) = basis_a(k, coords(0, e));
                for (Index k = 0; k < basis_z.order_count(); ++k)
                    vz(e, k) = basis_z(k, coords(1, e));
            }
            RMatrix<Real> out(n, Index(pairs.size()));
            for (std::size_t j = 0; j < pairs.size(); ++j)
            {
                out.col(Index(j)) = va.col(pairs[j].first).cwiseProduct(vz.col(pairs[j].second));
                const Real norm = out.col(Index(j)).norm();
                if (norm > Real(0))
                    out.col(Index(j)) /= norm;
            }
            return out;
        }

        template <typename Real>
        CMatrix<Real> hermitian_covariance(const CMatrix<Real> &basis, const RVector<Real> &powers)
        {
            const Index k = powers.size();
            CMatrix<Real> q = basis.leftCols(k) * powers.template cast<Complex<Real>>().asDiagonal() *
                              basis.leftCols(k).adjoint();
            return (q + q.adjoint()).eval() * Real(0.5);
        }

        template <typename Real>
        SchemeResult<Real> finish(const ChannelPair<Real> &channels, const Scenario<Real> &scenario, Scheme scheme,
                                  RisConfig<Real> ris, CMatrix<Real> q, RVector<Real> snrs,
                                  PowerAllocation<Real> power)
        {
            SchemeResult<Real> r;
            r.scheme = scheme;
            r.ris = std::move(ris);
            r.q = std::move(q);
            r.mode_snrs = std::move(snrs);
            r.power = std::move(power);
            r.rate = achievable_rate(end_to_end(channels, r.ris), r.q, scenario.noise_power);
            return r;
        }
    }

    template <typename Real>
    PswfModeSet<Real> pswf_mode_set(const Scenario<Real> &scenario, Link link, const SchemeOptions<Real> &options)
    {
        scenario.validate();
        const bool tx_link = link == Link::TxRis;
        const SurfaceSpec<Real> &holo = tx_link ? scenario.tx : scenario.rx;
        const SurfaceSpec<Real> &ris = scenario.ris;
        const Real r = tx_link ? scenario.r1() : scenario.r2();
        const Real gamma = tx_link ? scenario.gamma1() : scenario.gamma2();
        const Real k0 = scenario.wavenumber();

        PswfModeSet<Real> set;
        set.link = link;
        set.c_xy = holo.half_a() * ris.half_a() * k0 / r * std::sin(Real(2) * gamma) / Real(2);
        set.c_zz = holo.half_b() * ris.half_b() * k0 / r;
        if (!(set.c_xy > Real(0)) || !(set.c_zz > Real(0)))
            throw std::invalid_argument("pswf_mode_set: non-positive bandwidth parameter (degenerate geometry)");

        const auto margins = far_field_margin(scenario);
        set.margin = tx_link ? margins.first : margins.second;
        set.far_field_ok = set.margin >= options.far_field_threshold;

        const Index orders_a = std::min(holo.count_a, ris.count_a);
        const Index orders_z = std::min(holo.count_b, ris.count_b);
        const auto basis_a = build_basis(set.c_xy, orders_a);
        const auto basis_z = build_basis(set.c_zz, orders_z);
        const RVector<Real> mu_a = basis_a.couplings().cwiseAbs2();
        const RVector<Real> mu_z = basis_z.couplings().cwiseAbs2();

        std::vector<std::pair<Index, Index>> pairs;
        for (Index a = 0; a < orders_a; ++a)
            for (Index z = 0; z < orders_z; ++z)
                pairs.emplace_back(a, z);
        std::stable_sort(pairs.begin(), pairs.end(), [&](const auto &p, const auto &q)
                         { return mu_a(p.first) * mu_z(p.second) > mu_a(q.first) * mu_z(q.second); });
        const Index keep = std::min({options.max_modes, Index(pairs.size()), holo.count(), ris.count()});
        pairs.resize(std::size_t(keep));

        set.mode_index_pairs = pairs;
        set.couplings_2d.resize(keep);
        for (Index k = 0; k < keep; ++k)
            set.couplings_2d(k) = mu_a(pairs[k].first) * mu_z(pairs[k].second);

        // Continuous-to-discrete scaling: sampling at pitch 2/count in normalized coordinates turns the
        // kernel singular value |nu| into |nu| sqrt(count_holo count_ris) / 4, times the 1/(4 pi r) amplitude
        const Real four_pi_r = Real(4) * std::numbers::pi_v<Real> * r;
        const Real scale = Real(holo.count()) * Real(ris.count()) / (Real(16) * four_pi_r * four_pi_r);
        set.eigenvalues = set.couplings_2d * scale;

        const SurfaceRole holo_role = tx_link ? SurfaceRole::Transmitter : SurfaceRole::Receiver;
        set.holo_samples = sample_modes(basis_a, basis_z, normalized_coordinates(scenario, holo_role), pairs);
        set.ris_samples = sample_modes(basis_a, basis_z, normalized_coordinates(scenario, SurfaceRole::Ris), pairs);
        set.n_holo = orthonormalize_and_complete<Real>(set.holo_samples.template cast<Complex<Real>>());
        set.n_ris = orthonormalize_and_complete<Real>(set.ris_samples.template cast<Complex<Real>>());
        return set;
    }

    template <typename Real>
    PswfDesign<Real> pswf_design(const Scenario<Real> &scenario, const SchemeOptions<Real> &options)
    {
        PswfDesign<Real> d;
        d.tx_link = pswf_mode_set(scenario, Link::TxRis, options);
        d.rx_link = pswf_mode_set(scenario, Link::RisRx, options);
        d.focusing = focusing_matrices(scenario);
        d.v_h = d.focusing.f_tx_ris.asDiagonal() * d.tx_link.n_holo;
        d.u_h = d.focusing.f_ris_tx.asDiagonal() * d.tx_link.n_ris;
        d.v_g = d.focusing.f_ris_rx.asDiagonal() * d.rx_link.n_ris;

        const Index modes = std::min({d.tx_link.mode_count(), d.rx_link.mode_count(), scenario.tx.count(),
                                      scenario.rx.count(), scenario.ris.count()});
        d.mode_snrs = d.tx_link.eigenvalues.head(modes).cwiseProduct(d.rx_link.eigenvalues.head(modes)) /
                      scenario.noise_power;
        d.power = water_fill<Real>(d.mode_snrs, scenario.power_budget);
        d.q = hermitian_covariance(d.v_h, d.power.powers);

        for (const auto *set : {&d.tx_link, &d.rx_link})
            if (!set->far_field_ok)
                d.warnings.push_back(std::string(set->link == Link::TxRis ? "Tx-RIS" : "RIS-Rx") +
                                     " far-field margin " + std::to_string(double(set->margin)) +
                                     " below threshold " + std::to_string(double(options.far_field_threshold)) +
                                     "; prolate closed forms may be inaccurate");
        return d;
    }

    template <typename Real>
    SchemeResult<Real> nd_num(const ChannelPair<Real> &channels, const Scenario<Real> &scenario)
    {
        const Svd<Real> &sh = channels.svd_h();
        const Svd<Real> &sg = channels.svd_g();
        const Index modes = std::min(sh.s.size(), sg.s.size());

        const CMatrix<Real> u_h = complete_unitary(sh.u);
        const CMatrix<Real> v_g = complete_unitary(sg.v);
        auto ris = RisConfig<Real>::non_diagonal(v_g * u_h.adjoint());

        RVector<Real> snrs = sh.s.head(modes).cwiseAbs2().cwiseProduct(sg.s.head(modes).cwiseAbs2()) /
                             scenario.noise_power;
        auto power = water_fill<Real>(snrs, scenario.power_budget);
        CMatrix<Real> q = hermitian_covariance(sh.v, power.powers);
        return finish(channels, scenario, Scheme::NdNum, std::move(ris), std::move(q), std::move(snrs),
                      std::move(power));
    }

    template <typename Real>
    SchemeResult<Real> nd_pswf(const ChannelPair<Real> &channels, const Scenario<Real> &scenario,
                               const PswfDesign<Real> &design)
    {
        auto ris = RisConfig<Real>::non_diagonal(design.v_g * design.u_h.adjoint());
        auto r = finish(channels, scenario, Scheme::NdPswf, std::move(ris), design.q, design.mode_snrs, design.power);
        r.warnings = design.warnings;
        return r;
    }

    template <typename Real>
    SchemeResult<Real> nd_pswf(const ChannelPair<Real> &channels, const Scenario<Real> &scenario,
                               const SchemeOptions<Real> &options)
    {
        return nd_pswf(channels, scenario, pswf_design(scenario, options));
    }

    template <typename Real>
    RisConfig<Real> foc_ris(const Scenario<Real> &scenario)
    {
        const auto f = focusing_matrices(scenario);
        return RisConfig<Real>::diagonal(f.f_ris_rx.cwiseProduct(f.f_ris_tx.conjugate()));
    }

    template <typename Real>
    SchemeResult<Real> matched_transmitter(const ChannelPair<Real> &channels, const Scenario<Real> &scenario,
                                           Scheme scheme, RisConfig<Real> ris)
    {
        const CMatrix<Real> z = end_to_end(channels, ris);
        const Svd<Real> svd = thin_svd<Real>(z);
        RVector<Real> snrs = svd.s.cwiseAbs2() / scenario.noise_power;
        auto power = water_fill<Real>(snrs, scenario.power_budget);
        CMatrix<Real> q = hermitian_covariance(svd.v, power.powers);

        SchemeResult<Real> r;
        r.scheme = scheme;
        r.ris = std::move(ris);
        r.q = std::move(q);
        r.mode_snrs = std::move(snrs);
        r.power = std::move(power);
        r.rate = achievable_rate(z, r.q, scenario.noise_power);
        return r;
    }

    template <typename Real>
    SchemeResult<Real> foc_num(const ChannelPair<Real> &channels, const Scenario<Real> &scenario)
    {
        return matched_transmitter(channels, scenario, Scheme::FocNum, foc_ris(scenario));
    }

    template <typename Real>
    SchemeResult<Real> foc_pswf(const ChannelPair<Real> &channels, const Scenario<Real> &scenario,
                                const PswfDesign<Real> &design)
    {
        auto r = finish(channels, scenario, Scheme::FocPswf, foc_ris(scenario), design.q, design.mode_snrs,
                        design.power);
        r.warnings = design.warnings;
        return r;
    }

    template <typename Real>
    SchemeResult<Real> foc_pswf(const ChannelPair<Real> &channels, const Scenario<Real> &scenario,
                                const SchemeOptions<Real> &options)
    {
        return foc_pswf(channels, scenario, pswf_design(scenario, options));
    }

    template <typename Real>
    std::uint64_t scenario_hash(const Scenario<Real> &scenario)
    {
        // FNV-1a over the IEEE-754 bit patterns of every field
        std::uint64_t h = 0xcbf29ce484222325ull;
        auto mix = [&h](std::uint64_t v)
        {
            for (int i = 0; i < 8; ++i)
            {
                h ^= (v >> (8 * i)) & 0xffu;
                h *= 0x100000001b3ull;
            }
        };
        auto mix_real = [&](Real v)
        { mix(std::bit_cast<std::uint64_t>(double(v))); };
        for (const auto *s : {&scenario.tx, &scenario.rx, &scenario.ris})
        {
            mix(std::uint64_t(s->count_a));
            mix(std::uint64_t(s->count_b));
            mix_real(s->spacing);
        }
        for (Real v : {scenario.d_t, scenario.d_r, scenario.l_t, scenario.l_r, scenario.frequency,
                       scenario.power_budget, scenario.noise_power})
            mix_real(v);
        return h;
    }

    template <typename Real>
    SchemeResult<Real> baseline(const ChannelPair<Real> &channels, const Scenario<Real> &scenario, Scheme kind,
                                std::uint64_t seed)
    {
        const Index n = channels.ris_count();
        CVector<Real> coeffs(n);
        if (kind == Scheme::RandomRis)
        {
            const std::uint64_t key = scenario_hash(scenario);
            std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(key),
                              std::uint32_t(key >> 32)};
            std::mt19937_64 engine(seq);
            const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
            for (Index i = 0; i < n; ++i)
            {
                // 53 random bits -> [0, 1), independent of the standard library's distribution code
                const Real u = Real(engine() >> 11) * Real(0x1.0p-53);
                coeffs(i) = std::polar(Real(1), two_pi * u);
            }
        }
        else if (kind == Scheme::SpecularRis)
            coeffs.setOnes();
        else
            throw std::invalid_argument("baseline: kind must be RandomRis or SpecularRis");
        return matched_transmitter(channels, scenario, kind, RisConfig<Real>::diagonal(coeffs));
    }

    template <typename Real>
    std::pair<Real, Real> dof_estimates(const Scenario<Real> &scenario)
    {
        const auto h = scenario.half_aperture();
        const Real lambda2 = scenario.wavelength() * scenario.wavelength();
        const Real r1 = scenario.r1(), r2 = scenario.r2();
        const Real n1 = h.area_tx() * h.area_ris() * std::sin(Real(2) * scenario.gamma1()) / (Real(2) * lambda2 * r1 * r1);
        const Real n2 = h.area_rx() * h.area_ris() * std::sin(Real(2) * scenario.gamma2()) / (Real(2) * lambda2 * r2 * r2);
        return {n1, n2};
    }

    template <typename Real>
    std::vector<SchemeResult<Real>> evaluate_schemes(const ChannelPair<Real> &channels, const Scenario<Real> &scenario,
                                                     const std::vector<Scheme> &schemes,
                                                     const SchemeOptions<Real> &options)
    {
        std::optional<PswfDesign<Real>> design;
        auto shared_design = [&]() -> const PswfDesign<Real> &
        {
            if (!design)
                design = pswf_design(scenario, options);
            return *design;
        };

        std::vector<SchemeResult<Real>> out;
        out.reserve(schemes.size());
        for (Scheme s : schemes)
        {
            switch (s)
            {
            case Scheme::NdNum:
                out.push_back(nd_num(channels, scenario));
                break;
            case Scheme::NdPswf:
                out.push_back(nd_pswf(channels, scenario, shared_design()));
                break;
            case Scheme::FocNum:
                out.push_back(foc_num(channels, scenario));
                break;
            case Scheme::FocPswf:
                out.push_back(foc_pswf(channels, scenario, shared_design()));
                break;
            case Scheme::RandomRis:
            case Scheme::SpecularRis:
                out.push_back(baseline(channels, scenario, s, options.seed));
                break;
            }
        }
        return out;
    }

    template <typename Real>
    void check_invariants(const SchemeResult<Real> &result, const Scenario<Real> &scenario)
    {
        const std::string name = to_string(result.scheme);
        try
        {
            result.ris.validate(Real(1e-10));
        }
        catch (const NumericalError &e)
        {
            throw NumericalError(name + ": " + e.what());
        }

        const CMatrix<Real> &q = result.q;
        const Real scale = max_abs(q);
        if (max_abs(CMatrix<Real>(q - q.adjoint())) > Real(1e-10) * scale)
            throw NumericalError(name + ": covariance is not Hermitian");
        if (scale > Real(0))
        {
            Eigen::SelfAdjointEigenSolver<CMatrix<Real>> eig(q, Eigen::EigenvaluesOnly);
            if (eig.eigenvalues().minCoeff() < -Real(1e-12) * scale * Real(q.rows()))
                throw NumericalError(name + ": covariance is not positive semidefinite");
        }
        const Real trace = q.trace().real();
        if (trace > scenario.power_budget * (Real(1) + Real(1e-9)))
            throw NumericalError(name + ": covariance trace " + std::to_string(double(trace)) + " exceeds P_T");
        if (!std::isfinite(double(result.rate)) || result.rate < Real(0))
            throw NumericalError(name + ": rate is not a finite non-negative number");
    }

    template struct FocusingMatrices<double>;
    template FocusingMatrices<double> focusing_matrices<double>(const Scenario<double> &);
    template PswfModeSet<double> pswf_mode_set<double>(const Scenario<double> &, Link, const SchemeOptions<double> &);
    template PswfDesign<double> pswf_design<double>(const Scenario<double> &, const SchemeOptions<double> &);
    template SchemeResult<double> nd_num<double>(const ChannelPair<double> &, const Scenario<double> &);
    template SchemeResult<double> nd_pswf<double>(const ChannelPair<double> &, const Scenario<double> &,
                                                  const PswfDesign<double> &);
    template SchemeResult<double> nd_pswf<double>(const ChannelPair<double> &, const Scenario<double> &,
                                                  const SchemeOptions<double> &);
    template RisConfig<double> foc_ris<double>(const Scenario<double> &);
    template SchemeResult<double> foc_num<double>(const ChannelPair<double> &, const Scenario<double> &);
    template SchemeResult<double> foc_pswf<double>(const ChannelPair<double> &, const Scenario<double> &,
                                                   const PswfDesign<double> &);
    template SchemeResult<double> foc_pswf<double>(const ChannelPair<double> &, const Scenario<double> &,
                                                   const SchemeOptions<double> &);
    template SchemeResult<double> baseline<double>(const ChannelPair<double> &, const Scenario<double> &, Scheme,
                                                   std::uint64_t);
    template SchemeResult<double> matched_transmitter<double>(const ChannelPair<double> &, const Scenario<double> &,
                                                              Scheme, RisConfig<double>);
    template std::pair<double, double> dof_estimates<double>(const Scenario<double> &);
    template std::uint64_t scenario_hash<double>(const Scenario<double> &);
    template std::vector<SchemeResult<double>> evaluate_schemes<double>(const ChannelPair<double> &,
                                                                        const Scenario<double> &,
                                                                        const std::vector<Scheme> &,
                                                                        const SchemeOptions<double> &);
    template void check_invariants<double>(const SchemeResult<double> &, const Scenario<double> &);
}
