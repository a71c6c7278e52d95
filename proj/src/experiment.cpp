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
#include "holoris/matrix_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

namespace holoris
{
    namespace
    {
        std::string format_number(double v)
        {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.12g", v);
            return buf;
        }

        std::string format_cell(const Cell &cell)
        {
            if (const auto *d = std::get_if<double>(&cell))
                return format_number(*d);
            if (const auto *i = std::get_if<long long>(&cell))
                return std::to_string(*i);
            return std::get<std::string>(cell);
        }

        std::string lowercase(std::string s)
        {
            std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return char(std::tolower(c)); });
            return s;
        }

        // "8x8" -> (8, 8); a plain "8" means a square grid
        std::pair<Index, Index> parse_elements(const KeyValueConfig &config, const std::string &key, Index fallback)
        {
            const auto text = config.get("scenario", key);
            if (!text)
                return {fallback, fallback};
            const std::string s = lowercase(*text);
            const auto x = s.find('x');
            try
            {
                std::size_t used = 0;
                if (x == std::string::npos)
                {
                    const long long n = std::stoll(s, &used);
                    if (used != s.size() || n < 1)
                        throw std::invalid_argument("");
                    return {Index(n), Index(n)};
                }
                const std::string lhs = s.substr(0, x), rhs = s.substr(x + 1);
                const long long a = std::stoll(lhs, &used);
                if (used != lhs.size())
                    throw std::invalid_argument("");
                const long long b = std::stoll(rhs, &used);
                if (used != rhs.size() || a < 1 || b < 1)
                    throw std::invalid_argument("");
                return {Index(a), Index(b)};
            }
            catch (const std::exception &)
            {
                config.fail("scenario", key, "expected <count_x>x<count_z> with positive integers, got '" + *text + "'");
            }
        }

        // Element pitch; "auto" is half a wavelength
        double parse_spacing(const KeyValueConfig &config, const std::string &key, double fallback, double wavelength)
        {
            const auto text = config.get("scenario", key);
            if (!text)
                return fallback;
            if (lowercase(*text) == "auto")
                return wavelength / 2;
            const double v = config.get_double("scenario", key, 0);
            if (!(v > 0) || !std::isfinite(v))
                config.fail("scenario", key, "spacing must be positive");
            return v;
        }

        double positive(const KeyValueConfig &config, const std::string &section, const std::string &key,
                        double fallback)
        {
            const double v = config.get_double(section, key, fallback);
            if (!(v > 0) || !std::isfinite(v))
                config.fail(section, key, "must be positive and finite");
            return v;
        }

        double finite(const KeyValueConfig &config, const std::string &section, const std::string &key,
                      double fallback)
        {
            const double v = config.get_double(section, key, fallback);
            if (!std::isfinite(v))
                config.fail(section, key, "must be finite");
            return v;
        }

        Index at_least_one(const KeyValueConfig &config, const std::string &section, const std::string &key,
                           Index fallback)
        {
            const long long v = config.get_int(section, key, fallback);
            if (v < 1)
                config.fail(section, key, "must be at least 1");
            return Index(v);
        }

        std::vector<Scheme> parse_schemes(const KeyValueConfig &config)
        {
            if (!config.has("schemes", "list"))
                return {all_schemes.begin(), all_schemes.end()};
            const auto names = config.get_list("schemes", "list");
            if (names.empty())
                config.fail("schemes", "list", "scheme list is empty");
            std::vector<Scheme> out;
            for (const auto &name : names)
            {
                if (lowercase(name) == "all")
                {
                    out.insert(out.end(), all_schemes.begin(), all_schemes.end());
                    continue;
                }
                const auto s = parse_scheme(name);
                if (!s)
                    config.fail("schemes", "list", "unknown scheme '" + name + "'");
                out.push_back(*s);
            }
            return out;
        }

        std::string sampler_definition(const ReceiverSweep &s)
        {
            return "receiver (l_r, d_r) i.i.d. uniform on [" + format_number(s.l_r_min) + ", " +
                   format_number(s.l_r_max) + "] x [" + format_number(s.d_r_min) + ", " + format_number(s.d_r_max) +
                   "] m; mt19937_64 seed " + std::to_string(s.seed) + "; count " + std::to_string(s.count);
        }

        std::string scenario_summary(const Scenario<double> &s)
        {
            auto surface = [](const SurfaceSpec<double> &x) {
                return std::to_string(x.count_a) + "x" + std::to_string(x.count_b) + " @ " +
                       format_number(x.spacing) + " m";
            };
            return "tx " + surface(s.tx) + ", rx " + surface(s.rx) + ", ris " + surface(s.ris) +
                   "; d_t " + format_number(s.d_t) + ", l_t " + format_number(s.l_t) + ", frequency " +
                   format_number(s.frequency * 1e-9) + " GHz, P_T " + format_number(watt_to_dbm(s.power_budget)) +
                   " dBm, noise " + format_number(watt_to_dbm(s.noise_power)) + " dBm";
        }

        void check_receiver_range(double lo, double hi, const char *axis)
        {
            if (!(lo > 0) || !std::isfinite(hi) || hi < lo)
                throw std::invalid_argument(std::string("sweep: ") + axis + " range must satisfy 0 < min <= max");
        }
    }

    void ExperimentSpec::normalize()
    {
        if (schemes.empty())
            throw std::invalid_argument("scheme list is empty");
        std::vector<Scheme> canonical{Scheme::NdNum};
        for (Scheme s : all_schemes)
            if (s != Scheme::NdNum && std::find(schemes.begin(), schemes.end(), s) != schemes.end())
                canonical.push_back(s);
        schemes = std::move(canonical);

        if (sweep_kind != SweepKind::None)
        {
            check_receiver_range(sweep.l_r_min, sweep.l_r_max, "l_r");
            check_receiver_range(sweep.d_r_min, sweep.d_r_max, "d_r");
        }
        if (sweep_kind == SweepKind::Grid && (sweep.l_r_steps < 1 || sweep.d_r_steps < 1))
            throw std::invalid_argument("sweep: grid steps must be at least 1");
        if (workers == 0)
            workers = 1;
        base_scenario.validate();
    }

    ExperimentSpec parse_experiment(const KeyValueConfig &config)
    {
        ExperimentSpec spec;
        Scenario<double> &s = spec.base_scenario;

        const double frequency_ghz = positive(config, "scenario", "frequency_ghz", s.frequency * 1e-9);
        s.frequency = frequency_ghz * 1e9;
        const double wavelength = s.wavelength();

        const auto [tx_a, tx_b] = parse_elements(config, "tx_elements", 4);
        const auto [rx_a, rx_b] = parse_elements(config, "rx_elements", 0);
        const auto [ris_a, ris_b] = parse_elements(config, "ris_elements", 16);
        const double spacing = parse_spacing(config, "spacing", wavelength / 2, wavelength);
        s.tx = {tx_a, tx_b, parse_spacing(config, "tx_spacing", spacing, wavelength), SurfaceRole::Transmitter};
        // Receiver defaults to the transmitter's layout
        s.rx = {rx_a ? rx_a : tx_a, rx_b ? rx_b : tx_b, parse_spacing(config, "rx_spacing", spacing, wavelength),
                SurfaceRole::Receiver};
        s.ris = {ris_a, ris_b, parse_spacing(config, "ris_spacing", spacing, wavelength), SurfaceRole::Ris};

        s.d_t = positive(config, "scenario", "d_t", s.d_t);
        s.l_t = positive(config, "scenario", "l_t", s.l_t);
        s.d_r = positive(config, "scenario", "d_r", s.d_r);
        s.l_r = positive(config, "scenario", "l_r", s.l_r);
        s.power_budget = dbm_to_watt(finite(config, "scenario", "power_dbm", watt_to_dbm(s.power_budget)));
        s.noise_power = dbm_to_watt(finite(config, "scenario", "noise_dbm", watt_to_dbm(s.noise_power)));
        try
        {
            s.validate();
        }
        catch (const std::invalid_argument &e)
        {
            config.fail("scenario", "", e.what());
        }

        const std::string kind = lowercase(config.get_string("sweep", "kind", "none"));
        if (kind == "none")
            spec.sweep_kind = SweepKind::None;
        else if (kind == "grid")
            spec.sweep_kind = SweepKind::Grid;
        else if (kind == "ensemble")
            spec.sweep_kind = SweepKind::Ensemble;
        else
            config.fail("sweep", "kind", "expected none, grid or ensemble, got '" + kind + "'");

        ReceiverSweep &w = spec.sweep;
        w.l_r_min = positive(config, "sweep", "l_r_min", w.l_r_min);
        w.l_r_max = positive(config, "sweep", "l_r_max", w.l_r_max);
        w.d_r_min = positive(config, "sweep", "d_r_min", w.d_r_min);
        w.d_r_max = positive(config, "sweep", "d_r_max", w.d_r_max);
        if (w.l_r_max < w.l_r_min)
            config.fail("sweep", "l_r_max", "must not be below l_r_min");
        if (w.d_r_max < w.d_r_min)
            config.fail("sweep", "d_r_max", "must not be below d_r_min");
        w.l_r_steps = at_least_one(config, "sweep", "l_r_steps", w.l_r_steps);
        w.d_r_steps = at_least_one(config, "sweep", "d_r_steps", w.d_r_steps);
        w.count = Index(config.get_int("sweep", "count", w.count));
        if (spec.sweep_kind == SweepKind::Ensemble && w.count < 2)
            config.fail("sweep", "count", "ensemble needs at least 2 samples");

        spec.schemes = parse_schemes(config);

        spec.options.max_modes = at_least_one(config, "options", "max_modes", spec.options.max_modes);
        spec.options.far_field_threshold =
            positive(config, "options", "far_field_threshold", spec.options.far_field_threshold);
        spec.options.seed = config.get_uint("options", "seed", 0);
        w.seed = config.get_uint("sweep", "seed", spec.options.seed);
        spec.workers = unsigned(at_least_one(config, "options", "workers", 1));

        spec.output_path = config.get_string("output", "path", "");
        const std::string format = lowercase(config.get_string("output", "format", "csv"));
        if (format == "csv")
            spec.output_format = OutputFormat::Csv;
        else if (format == "json")
            spec.output_format = OutputFormat::Json;
        else
            config.fail("output", "format", "expected csv or json, got '" + format + "'");

        config.reject_unused();
        try
        {
            spec.normalize();
        }
        catch (const std::invalid_argument &e)
        {
            config.fail("sweep", "", e.what());
        }
        return spec;
    }

    ExperimentSpec load_experiment(const std::string &path)
    {
        return parse_experiment(KeyValueConfig::load(path));
    }

    ExperimentSpec parse_experiment_text(const std::string &text, const std::string &source)
    {
        std::istringstream in(text);
        return parse_experiment(KeyValueConfig::parse(in, source));
    }

    Scenario<double> with_receiver(const Scenario<double> &base, double l_r, double d_r)
    {
        Scenario<double> s = base;
        s.l_r = l_r;
        s.d_r = d_r;
        return s;
    }

    std::vector<std::pair<double, double>> grid_points(const ReceiverSweep &sweep)
    {
        auto axis = [](double lo, double hi, Index steps) {
            std::vector<double> v(static_cast<std::size_t>(steps));
            for (Index i = 0; i < steps; ++i)
                v[std::size_t(i)] = steps == 1 ? lo : lo + (hi - lo) * double(i) / double(steps - 1);
            return v;
        };
        const auto ls = axis(sweep.l_r_min, sweep.l_r_max, sweep.l_r_steps);
        const auto ds = axis(sweep.d_r_min, sweep.d_r_max, sweep.d_r_steps);
        std::vector<std::pair<double, double>> points;
        points.reserve(ls.size() * ds.size());
        for (double d : ds)
            for (double l : ls)
                points.emplace_back(l, d);
        return points;
    }

    std::vector<std::pair<double, double>> ensemble_points(const ReceiverSweep &sweep)
    {
        std::mt19937_64 engine(sweep.seed);
        // 53-bit uniforms so the stream does not depend on the standard library's distributions
        auto uniform = [&engine](double lo, double hi) {
            const double u = double(engine() >> 11) * 0x1.0p-53;
            return lo + (hi - lo) * u;
        };
        std::vector<std::pair<double, double>> points;
        points.reserve(std::size_t(std::max<Index>(sweep.count, 0)));
        for (Index i = 0; i < sweep.count; ++i)
        {
            const double l = uniform(sweep.l_r_min, sweep.l_r_max);
            const double d = uniform(sweep.d_r_min, sweep.d_r_max);
            points.emplace_back(l, d);
        }
        return points;
    }

    double ScenarioOutcome::rate(Scheme s) const
    {
        for (const auto &r : results)
            if (r.scheme == s)
                return r.rate;
        throw std::out_of_range(std::string("scheme not evaluated: ") + to_string(s));
    }

    double ScenarioOutcome::ratio(Scheme s) const
    {
        const double reference = rate(Scheme::NdNum);
        return reference > 0 ? rate(s) / reference : 0.0;
    }

    ScenarioOutcome evaluate_scenario(const Scenario<double> &scenario, const std::vector<Scheme> &schemes,
                                      const SchemeOptions<double> &options)
    {
        ScenarioOutcome out;
        out.l_r = scenario.l_r;
        out.d_r = scenario.d_r;
        std::tie(out.margin1, out.margin2) = far_field_margin(scenario);
        const auto channels = build_channels(scenario);
        out.results = evaluate_schemes(channels, scenario, schemes, options);
        for (const auto &r : out.results)
            check_invariants(r, scenario);
        return out;
    }

    std::vector<ScenarioOutcome> evaluate_points(const ExperimentSpec &spec,
                                                 const std::vector<std::pair<double, double>> &points)
    {
        std::vector<ScenarioOutcome> outcomes(points.size());
        std::vector<std::exception_ptr> errors(points.size());
        std::atomic<std::size_t> next{0};

        auto work = [&]() {
            for (std::size_t i = next++; i < points.size(); i = next++)
            {
                try
                {
                    const auto s = with_receiver(spec.base_scenario, points[i].first, points[i].second);
                    outcomes[i] = evaluate_scenario(s, spec.schemes, spec.options);
                }
                catch (...)
                {
                    errors[i] = std::current_exception();
                }
            }
        };

        const std::size_t n_threads = std::min<std::size_t>(std::max(1u, spec.workers), points.size());
        if (n_threads <= 1)
            work();
        else
        {
            std::vector<std::thread> pool;
            pool.reserve(n_threads);
            for (std::size_t t = 0; t < n_threads; ++t)
                pool.emplace_back(work);
            for (auto &t : pool)
                t.join();
        }

        // Report the failure of the earliest point so the error does not depend on scheduling
        for (const auto &e : errors)
            if (e)
                std::rethrow_exception(e);
        return outcomes;
    }

    Index Table::column(const std::string &name) const
    {
        const auto it = std::find(columns.begin(), columns.end(), name);
        if (it == columns.end())
            throw std::out_of_range("no column '" + name + "'");
        return Index(it - columns.begin());
    }

    Table run_heatmap(const ExperimentSpec &spec)
    {
        if (spec.sweep_kind != SweepKind::Grid)
            throw std::invalid_argument("heatmap requires [sweep] kind = grid");
        const auto points = grid_points(spec.sweep);
        const auto outcomes = evaluate_points(spec, points);

        Table t;
        t.comments.push_back("holoris heatmap: " + scenario_summary(spec.base_scenario));
        t.columns = {"l_r", "d_r", "margin1", "margin2"};
        for (Scheme s : spec.schemes)
            t.columns.push_back(std::string("rate_") + to_string(s));
        for (Scheme s : spec.schemes)
            t.columns.push_back(std::string("ratio_") + to_string(s));

        for (const auto &o : outcomes)
        {
            std::vector<Cell> row{o.l_r, o.d_r, o.margin1, o.margin2};
            for (Scheme s : spec.schemes)
                row.emplace_back(o.rate(s));
            for (Scheme s : spec.schemes)
                row.emplace_back(o.ratio(s));
            t.rows.push_back(std::move(row));
        }
        return t;
    }

    double CcdfCurve::survival_at(double r) const
    {
        if (rates.empty())
            return 0.0;
        const auto it = std::lower_bound(rates.begin(), rates.end(), r);
        return double(rates.end() - it) / double(rates.size());
    }

    double CcdfCurve::quantile(double p) const
    {
        if (rates.empty())
            throw std::out_of_range("quantile of an empty curve");
        p = std::clamp(p, 0.0, 1.0);
        const double h = p * double(rates.size() - 1);
        const auto lo = std::size_t(std::floor(h));
        const auto hi = std::min(lo + 1, rates.size() - 1);
        return rates[lo] + (h - double(lo)) * (rates[hi] - rates[lo]);
    }

    CcdfResult run_ccdf(const ExperimentSpec &spec)
    {
        if (spec.sweep_kind != SweepKind::Ensemble)
            throw std::invalid_argument("ccdf requires [sweep] kind = ensemble");
        if (spec.sweep.count < 2)
            throw std::invalid_argument("ccdf ensemble needs at least 2 samples, got " +
                                        std::to_string(spec.sweep.count));

        CcdfResult res;
        res.sampler = sampler_definition(spec.sweep);
        res.points = ensemble_points(spec.sweep);
        res.outcomes = evaluate_points(spec, res.points);

        for (Scheme s : spec.schemes)
        {
            CcdfCurve c;
            c.scheme = s;
            c.rates.reserve(res.outcomes.size());
            for (const auto &o : res.outcomes)
                c.rates.push_back(o.rate(s));
            std::sort(c.rates.begin(), c.rates.end());
            c.survival.reserve(c.rates.size());
            for (double r : c.rates)
                c.survival.push_back(c.survival_at(r));
            c.q10 = c.quantile(0.1);
            c.q50 = c.quantile(0.5);
            c.q90 = c.quantile(0.9);
            res.curves.push_back(std::move(c));
        }
        return res;
    }

    Table ccdf_table(const CcdfResult &result)
    {
        Table t;
        t.comments.push_back("holoris ccdf");
        t.comments.push_back("sampler: " + result.sampler);
        t.comments.push_back("kind=ccdf: value is the fraction of samples with rate >= rate");
        t.comments.push_back("kind=quantile: index is the percentile, value the probability");
        t.columns = {"kind", "scheme", "index", "rate", "value"};
        for (const auto &c : result.curves)
            for (std::size_t i = 0; i < c.rates.size(); ++i)
                t.rows.push_back({std::string("ccdf"), std::string(to_string(c.scheme)), (long long)i, c.rates[i],
                                  c.survival[i]});
        for (const auto &c : result.curves)
        {
            const std::string name = to_string(c.scheme);
            t.rows.push_back({std::string("quantile"), name, 10LL, c.q10, 0.1});
            t.rows.push_back({std::string("quantile"), name, 50LL, c.q50, 0.5});
            t.rows.push_back({std::string("quantile"), name, 90LL, c.q90, 0.9});
        }
        return t;
    }

    SingleReport run_single(const ExperimentSpec &spec)
    {
        if (spec.schemes.empty())
            throw std::invalid_argument("scheme list is empty");
        SingleReport rep;
        rep.scenario = spec.base_scenario;
        rep.outcome = evaluate_scenario(rep.scenario, spec.schemes, spec.options);
        rep.dof = dof_estimates(rep.scenario);
        for (const auto &r : rep.outcome.results)
            for (const auto &w : r.warnings)
                if (std::find(rep.warnings.begin(), rep.warnings.end(), w) == rep.warnings.end())
                    rep.warnings.push_back(w);
        return rep;
    }

    namespace
    {
        // 10 log10(s_k P_T) of the strongest modes
        std::vector<double> top_mode_snr_db(const SchemeResult<double> &r, double power_budget, std::size_t count)
        {
            std::vector<double> s(r.mode_snrs.data(), r.mode_snrs.data() + r.mode_snrs.size());
            std::sort(s.begin(), s.end(), std::greater<>());
            s.resize(std::min(s.size(), count));
            for (double &v : s)
                v = 10.0 * std::log10(v * power_budget);
            return s;
        }

        constexpr std::size_t report_modes = 10;
    }

    std::string format_single(const SingleReport &report, OutputFormat format)
    {
        const auto &sc = report.scenario;
        const double p_dbm = watt_to_dbm(sc.power_budget);
        const double n_dbm = watt_to_dbm(sc.noise_power);

        if (format == OutputFormat::Json)
        {
            nlohmann::ordered_json j;
            j["kind"] = "single";
            j["scenario"] = {{"tx_elements", {sc.tx.count_a, sc.tx.count_b}},
                             {"rx_elements", {sc.rx.count_a, sc.rx.count_b}},
                             {"ris_elements", {sc.ris.count_a, sc.ris.count_b}},
                             {"spacing", {sc.tx.spacing, sc.rx.spacing, sc.ris.spacing}},
                             {"d_t", sc.d_t}, {"l_t", sc.l_t}, {"d_r", sc.d_r}, {"l_r", sc.l_r},
                             {"frequency_ghz", sc.frequency * 1e-9},
                             {"power_dbm", p_dbm}, {"noise_dbm", n_dbm}};
            j["dof"] = {{"n1", report.dof.first}, {"n2", report.dof.second}};
            j["margins"] = {report.outcome.margin1, report.outcome.margin2};
            j["warnings"] = report.warnings;
            auto &schemes = j["schemes"] = nlohmann::ordered_json::array();
            for (const auto &r : report.outcome.results)
                schemes.push_back({{"scheme", to_string(r.scheme)},
                                   {"rate", r.rate},
                                   {"ratio", report.outcome.ratio(r.scheme)},
                                   {"active_modes", r.power.active_count},
                                   {"water_level", r.power.water_level},
                                   {"mode_snr_db", top_mode_snr_db(r, sc.power_budget, report_modes)}});
            return j.dump(2) + "\n";
        }

        std::ostringstream out;
        out << "# holoris single-scenario report\n";
        out << "# scenario: " << scenario_summary(sc) << ", d_r " << format_number(sc.d_r) << ", l_r "
            << format_number(sc.l_r) << "\n";
        out << "# power_dbm " << format_number(p_dbm) << "\n";
        out << "# noise_dbm " << format_number(n_dbm) << "\n";
        out << "# snr_db " << format_number(p_dbm - n_dbm) << "\n";
        out << "# dof n1 " << format_number(report.dof.first) << " n2 " << format_number(report.dof.second) << "\n";
        out << "# margins " << format_number(report.outcome.margin1) << " " << format_number(report.outcome.margin2)
            << "\n";
        for (const auto &w : report.warnings)
            out << "# warning: " << w << "\n";
        out << "scheme,rate,ratio,active_modes,water_level";
        for (std::size_t k = 1; k <= report_modes; ++k)
            out << ",mode_snr_db_" << k;
        out << "\n";
        for (const auto &r : report.outcome.results)
        {
            out << to_string(r.scheme) << ',' << format_number(r.rate) << ','
                << format_number(report.outcome.ratio(r.scheme)) << ',' << r.power.active_count << ','
                << format_number(r.power.water_level);
            const auto snr = top_mode_snr_db(r, sc.power_budget, report_modes);
            for (std::size_t k = 0; k < report_modes; ++k)
                out << ',' << (k < snr.size() ? format_number(snr[k]) : std::string());
            out << "\n";
        }
        return out.str();
    }

    std::string format_table(const Table &table, OutputFormat format, const std::string &kind)
    {
        if (format == OutputFormat::Json)
        {
            nlohmann::ordered_json j;
            j["kind"] = kind;
            j["comments"] = table.comments;
            j["columns"] = table.columns;
            auto &rows = j["rows"] = nlohmann::ordered_json::array();
            for (const auto &row : table.rows)
            {
                auto r = nlohmann::ordered_json::array();
                for (const auto &cell : row)
                    std::visit([&r](const auto &v) { r.push_back(v); }, cell);
                rows.push_back(std::move(r));
            }
            return j.dump(2) + "\n";
        }

        std::ostringstream out;
        for (const auto &c : table.comments)
            out << "# " << c << "\n";
        for (std::size_t i = 0; i < table.columns.size(); ++i)
            out << (i ? "," : "") << table.columns[i];
        out << "\n";
        for (const auto &row : table.rows)
        {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << format_cell(row[i]);
            out << "\n";
        }
        return out.str();
    }

    void write_text(const std::string &path, const std::string &text)
    {
        if (path.empty() || path == "-")
        {
            std::cout << text << std::flush;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot open '" + path + "' for writing");
        f << text;
        f.close();
        if (!f)
            throw std::runtime_error("failed writing '" + path + "'");
    }

    std::vector<std::string> dump_matrices(const SingleReport &report, const std::string &prefix)
    {
        std::vector<std::string> files;
        for (const auto &r : report.outcome.results)
        {
            const std::string base = prefix + "_" + to_string(r.scheme);
            write_matrix(base + "_phi.txt", r.ris.phi);
            write_matrix(base + "_q.txt", r.q);
            files.push_back(base + "_phi.txt");
            files.push_back(base + "_q.txt");
        }
        return files;
    }
}
