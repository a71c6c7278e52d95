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

#ifndef holoris_matrix_io_H
#define holoris_matrix_io_H

#include "holoris/types.hpp"

#include <string>

namespace holoris
{
    // Plain-text complex matrix:
    //     # holoris complex matrix
    //     <rows> <cols>
    //     re im re im ...   (one line per row, %.17g)
    void write_matrix(const std::string &path, const CMatrix<double> &m);

    // Throws std::runtime_error on malformed files
    CMatrix<double> read_matrix(const std::string &path);
}

#endif
