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

#include "holoris/experiment.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

namespace
{
    enum ExitCode
    {
        exit_ok = 0,
        exit_config = 2,
        exit_numerical = 3
    };

    struct Options
    {
        std::string config;
        std::string out;
        std::string format;
        std::optional<std::uint64_t> seed;
        std::optional<unsigned> workers;
        bool dump = false;
    };

    void add_common(CLI::App *cmd, Options &o, bool with_dump)
    {
        cmd->add_option("--config", o.config, "Experiment configuration file")->required()->check(CLI::ExistingFile);
        cmd->add_option("--out", o.out, "Output path (default: [output] path, or standard output)");
        cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--seed", o.seed, "Seed for the random RIS and the receiver sampler");
        cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
        if (with_dump)
            cmd->add_flag("--dump", o.dump, "Write Phi and Q of every scheme next to the output");
    }

    holoris::ExperimentSpec load(const Options &o)
    {
        auto spec = holoris::load_experiment(o.config);
        if (!o.out.empty())
            spec.output_path = o.out;
        if (!o.format.empty())
            spec.output_format = o.format == "json" ? holoris::OutputFormat::Json : holoris::OutputFormat::Csv;
        if (o.seed)
            spec.options.seed = spec.sweep.seed = *o.seed;
        if (o.workers)
            spec.workers = *o.workers;
        return spec;
    }

    // Dump prefix: output path without extension, or "holoris" when writing to standard output
    std::string dump_prefix(const std::string &out)
    {
        if (out.empty() || out == "-")
            return "holoris";
        const auto slash = out.find_last_of('/');
        const auto dot = out.find_last_of('.');
        return dot != std::string::npos && (slash == std::string::npos || dot > slash) ? out.substr(0, dot) : out;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"holoris: RIS-aided holographic MIMO link design"};
    app.require_subcommand(1);

    Options o;
    auto *single = app.add_subcommand("single", "Evaluate every configured scheme on the base scenario");
    auto *heatmap = app.add_subcommand("heatmap", "Rate ratios over a grid of receiver positions");
    auto *ccdf = app.add_subcommand("ccdf", "Rate C-CDF over an ensemble of receiver positions");
    add_common(single, o, true);
    add_common(heatmap, o, false);
    add_common(ccdf, o, false);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_config;
    }

    try
    {
        const auto spec = load(o);
        if (single->parsed())
        {
            const auto report = holoris::run_single(spec);
            holoris::write_text(spec.output_path, holoris::format_single(report, spec.output_format));
            if (o.dump)
                for (const auto &f : holoris::dump_matrices(report, dump_prefix(spec.output_path)))
                    std::cerr << "wrote " << f << "\n";
        }
        else if (heatmap->parsed())
        {
            if (spec.sweep_kind != holoris::SweepKind::Grid)
                throw holoris::ConfigError(o.config, 0, "[sweep] kind", "heatmap requires kind = grid");
            const auto table = holoris::run_heatmap(spec);
            holoris::write_text(spec.output_path, holoris::format_table(table, spec.output_format, "heatmap"));
        }
        else if (ccdf->parsed())
        {
            if (spec.sweep_kind != holoris::SweepKind::Ensemble)
                throw holoris::ConfigError(o.config, 0, "[sweep] kind", "ccdf requires kind = ensemble");
            const auto table = holoris::ccdf_table(holoris::run_ccdf(spec));
            holoris::write_text(spec.output_path, holoris::format_table(table, spec.output_format, "ccdf"));
        }
    }
    catch (const holoris::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    }
    catch (const holoris::NumericalError &e)
    {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_config;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_ok;
}
