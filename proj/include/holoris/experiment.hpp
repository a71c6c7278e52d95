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

#ifndef holoris_experiment_H
#define holoris_experiment_H

#include "holoris/config.hpp"
#include "holoris/schemes.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace holoris
{
    enum class OutputFormat
    {
        Csv,
        Json
    };

    enum class SweepKind
    {
        None,     // Base scenario only
        Grid,     // Rectangular grid over (l_r, d_r)
        Ensemble  // Receiver placements drawn uniformly from the rectangle
    };

    // Receiver-position rectangle; for grids, steps >= 1 points per axis including both ends
    struct ReceiverSweep
    {
        double l_r_min = 1, l_r_max = 10;
        Index l_r_steps = 10;
        double d_r_min = 1, d_r_max = 10;
        Index d_r_steps = 10;
        Index count = 200;        // Ensemble size
        std::uint64_t seed = 0;   // Ensemble sampler seed
    };

    struct ExperimentSpec
    {
        Scenario<double> base_scenario = reference_scenario<double>(4, 16);
        SweepKind sweep_kind = SweepKind::None;
        ReceiverSweep sweep;
        std::vector<Scheme> schemes{all_schemes.begin(), all_schemes.end()}; // Canonical order, NdNum included
        SchemeOptions<double> options;
        std::string output_path;           // Empty: standard output
        OutputFormat output_format = OutputFormat::Csv;
        unsigned workers = 1;

        // Sorts schemes into canonical order, removes duplicates and adds NdNum
        // - Throws std::invalid_argument for an empty scheme list or an invalid sweep
        void normalize();
    };

    // Parses the configuration format described in the README; throws ConfigError
    ExperimentSpec parse_experiment(const KeyValueConfig &config);
    ExperimentSpec load_experiment(const std::string &path);
    ExperimentSpec parse_experiment_text(const std::string &text, const std::string &source = "<string>");

    // Scenario at one receiver position
    Scenario<double> with_receiver(const Scenario<double> &base, double l_r, double d_r);

    std::vector<std::pair<double, double>> grid_points(const ReceiverSweep &sweep);
    std::vector<std::pair<double, double>> ensemble_points(const ReceiverSweep &sweep);

    // Every scheme on one scenario, invariants checked (NumericalError on violation)
    struct ScenarioOutcome
    {
        double l_r = 0, d_r = 0;
        double margin1 = 0, margin2 = 0;
        std::vector<SchemeResult<double>> results; // Same order as ExperimentSpec::schemes

        double rate(Scheme s) const;
        double ratio(Scheme s) const; // rate / rate(NdNum)
    };

    ScenarioOutcome evaluate_scenario(const Scenario<double> &scenario, const std::vector<Scheme> &schemes,
                                      const SchemeOptions<double> &options);

    // Evaluates points on "workers" threads; results returned in input order
    std::vector<ScenarioOutcome> evaluate_points(const ExperimentSpec &spec,
                                                 const std::vector<std::pair<double, double>> &points);

    using Cell = std::variant<double, long long, std::string>;

    struct Table
    {
        std::vector<std::string> comments; // Emitted as "# ..." lines before the CSV header
        std::vector<std::string> columns;
        std::vector<std::vector<Cell>> rows;

        // Column lookup by name; throws std::out_of_range
        Index column(const std::string &name) const;
    };

    // Columns l_r,d_r,margin1,margin2,rate_<scheme>...,ratio_<scheme>...
    Table run_heatmap(const ExperimentSpec &spec);

    struct CcdfCurve
    {
        Scheme scheme = Scheme::NdNum;
        std::vector<double> rates;    // Ascending
        std::vector<double> survival; // Fraction of samples with rate >= rates[i]
        double q10 = 0, q50 = 0, q90 = 0;

        // Empirical fraction of samples with rate >= r
        double survival_at(double r) const;
        // Linear-interpolated empirical quantile, p in [0, 1]
        double quantile(double p) const;
    };

    struct CcdfResult
    {
        std::string sampler;                     // Human-readable sampler definition
        std::vector<std::pair<double, double>> points;
        std::vector<CcdfCurve> curves;           // ExperimentSpec::schemes order
        std::vector<ScenarioOutcome> outcomes;
    };

    // Throws std::invalid_argument for ensembles with fewer than 2 samples
    CcdfResult run_ccdf(const ExperimentSpec &spec);
    Table ccdf_table(const CcdfResult &result);

    struct SingleReport
    {
        Scenario<double> scenario;
        ScenarioOutcome outcome;
        std::pair<double, double> dof{0, 0};
        std::vector<std::string> warnings;
    };

    SingleReport run_single(const ExperimentSpec &spec);
    std::string format_single(const SingleReport &report, OutputFormat format);

    // Fixed formatting (12 significant digits in CSV) so identical inputs give identical bytes
    std::string format_table(const Table &table, OutputFormat format, const std::string &kind);

    // Writes to path, or standard output for an empty path; throws std::runtime_error if unwritable
    void write_text(const std::string &path, const std::string &text);

    // Writes <prefix>_<scheme>_phi.txt and <prefix>_<scheme>_q.txt; returns the file names
    std::vector<std::string> dump_matrices(const SingleReport &report, const std::string &prefix);
}

#endif
