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

#include "holoris/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace holoris
{
    void write_matrix(const std::string &path, const CMatrix<double> &m)
    {
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("write_matrix: cannot open '" + path + "'");
        out << "# holoris complex matrix\n"
            << m.rows() << ' ' << m.cols() << '\n';
        char buf[64];
        for (Index i = 0; i < m.rows(); ++i)
        {
            for (Index j = 0; j < m.cols(); ++j)
            {
                std::snprintf(buf, sizeof buf, "%.17g %.17g", m(i, j).real(), m(i, j).imag());
                out << (j ? " " : "") << buf;
            }
            out << '\n';
        }
        if (!out)
            throw std::runtime_error("write_matrix: failed writing '" + path + "'");
    }

    CMatrix<double> read_matrix(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("read_matrix: cannot open '" + path + "'");
        std::string line;
        while (std::getline(in, line) && (line.empty() || line[0] == '#'))
        {
        }
        std::istringstream header(line);
        Index rows = -1, cols = -1;
        header >> rows >> cols;
        if (!header || rows < 0 || cols < 0)
            throw std::runtime_error("read_matrix: bad dimension line in '" + path + "'");
        CMatrix<double> m(rows, cols);
        for (Index i = 0; i < rows; ++i)
            for (Index j = 0; j < cols; ++j)
            {
                double re = 0, im = 0;
                if (!(in >> re >> im))
                    throw std::runtime_error("read_matrix: truncated data in '" + path + "'");
                m(i, j) = {re, im};
            }
        return m;
    }
}
