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

#ifndef holoris_types_H
#define holoris_types_H

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace holoris
{
    using Index = Eigen::Index;

    template <typename Real>
    using Complex = std::complex<Real>;

    template <typename Real>
    using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

    template <typename Real>
    using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

    template <typename Real>
    using RMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

    template <typename Real>
    using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

    template <typename Real>
    using Vec3 = Eigen::Matrix<Real, 3, 1>;

    inline constexpr double speed_of_light = 299792458.0; // [m/s]

    // Raised when a computed quantity violates an invariant it is supposed to satisfy
    class NumericalError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Largest absolute entry, 0 for empty matrices
    template <typename Derived>
    auto max_abs(const Eigen::MatrixBase<Derived> &m)
    {
        using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
        return m.size() == 0 ? Real(0) : m.cwiseAbs().maxCoeff();
    }

    // max |A A^H - I|, the unitarity defect of a square matrix
    template <typename Derived>
    auto unitarity_error(const Eigen::MatrixBase<Derived> &a)
    {
        using Scalar = typename Derived::Scalar;
        using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
        Mat gram = a * a.adjoint();
        gram.diagonal().array() -= Scalar(1);
        return max_abs(gram);
    }
}

#endif
