#include <netform/efficiency.hpp>
#include <netform/sweep.hpp>
#include <netform/thresholds.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

namespace netform
{
    auto parse_sweep_parameter(const std::string & name) -> SweepParameter
    {
        if (name == "F12")
            return SweepParameter::F12;
        if (name == "s1")
            return SweepParameter::S1;
        if (name == "delta")
            return SweepParameter::Delta;
        if (name == "cost")
            return SweepParameter::Cost;
        throw InvalidModel{"sweep parameter must be one of F12, s1, delta, cost; got \"" + name + "\""};
    }

    auto to_string(SweepParameter parameter) -> std::string
    {
        switch (parameter) {
            case SweepParameter::F12:   return "F12";
            case SweepParameter::S1:    return "s1";
            case SweepParameter::Delta: return "delta";
            case SweepParameter::Cost:  return "cost";
        }
        return "?";
    }

    auto sweep_grid(const SweepSpec & spec) -> std::vector<double>
    {
        if (! (spec.step > 0.0) || ! std::isfinite(spec.step))
            throw InvalidModel{"sweep step must be positive"};
        if (! (spec.to >= spec.from))
            throw InvalidModel{"sweep range is empty"};
        auto count = static_cast<std::size_t>(std::floor((spec.to - spec.from) / spec.step + 1e-9)) + 1;
        std::vector<double> result;
        for (std::size_t t = 0 ; t < count ; ++t)
            result.push_back(std::round((spec.from + static_cast<double>(t) * spec.step) * 1e12) / 1e12);
        return result;
    }

    auto apply_sweep_value(const Scenario & scenario, SweepParameter parameter, double value) -> Scenario
    {
        Scenario result = scenario;
        switch (parameter) {
            case SweepParameter::F12:
                if (result.group_sizes.size() != 2)
                    throw InvalidModel{"an F12 sweep needs exactly two groups"};
                result.coordination = {value};
                break;
            case SweepParameter::S1: {
                if (result.group_sizes.size() != 2)
                    throw InvalidModel{"an s1 sweep needs exactly two groups"};
                if (value != std::floor(value))
                    throw InvalidModel{"s1 must be an integer"};
                int n = result.group_sizes[0] + result.group_sizes[1];
                int s1 = static_cast<int>(value);
                if (s1 < 3 || n - s1 < 3)
                    throw InvalidModel{"s1 = " + std::to_string(s1) + " leaves s2 = " + std::to_string(n - s1)
                        + " with n = " + std::to_string(n) + "; both groups need at least 3 members"};
                result.group_sizes = {s1, n - s1};
                break;
            }
            case SweepParameter::Delta:
                result.delta = value;
                break;
            case SweepParameter::Cost:
                result.cost = value;
                break;
        }
        result.validate();
        return result;
    }

    namespace
    {
        auto two_group_structure(int s1, int s2, int interconnections) -> Network
        {
            auto partition = GroupPartition::from_sizes({s1, s2});
            if (interconnections == s1 * s2)
                return Network::complete(s1 + s2);
            Network result = disjoint_cliques(partition);
            // a matching: interconnection t joins the t-th member of each group
            for (int t = 0 ; t < interconnections ; ++t)
                result.add_edge(t, s1 + t);
            return result;
        }

        auto predicted_row(const Scenario & scenario, double value) -> SweepRow
        {
            SweepRow row;
            row.value = value;
            int s1 = scenario.group_sizes[0], s2 = scenario.group_sizes[1];
            double f12 = scenario.coordination.at(0);
            auto params = scenario.params();
            RegimePrediction stable, efficient;
            try {
                stable = classify_two_group_stable(s1, s2, params, f12);
                efficient = classify_two_group_efficient(s1, s2, params, f12);
            }
            catch (const RegimeUndefined &) {
                row.method = "undefined";
                return row;
            }
            row.method = "predicted";
            std::tie(row.stable_lo, row.stable_hi) = predicted_interconnections(stable, s1, s2);
            std::tie(row.efficient_lo, row.efficient_hi) = predicted_interconnections(efficient, s1, s2);

            auto society = scenario.society();
            // stable structures of ExactK are matchings, and a structure is pinned down whenever the count is
            if (row.stable_lo == row.stable_hi)
                row.stable_min_welfare = welfare(two_group_structure(s1, s2, row.stable_lo), society);
            if (row.efficient_lo == row.efficient_hi && (row.efficient_lo <= 1 || row.efficient_lo == s1 * s2))
                row.efficient_welfare = welfare(two_group_structure(s1, s2, row.efficient_lo), society);
            if (row.stable_min_welfare && row.efficient_welfare && *row.stable_min_welfare > 0.0)
                row.poa = *row.efficient_welfare / *row.stable_min_welfare;
            return row;
        }

        auto sweep_point(const Scenario & base, SweepParameter parameter, double value, unsigned workers) -> SweepRow
        {
            Scenario scenario = apply_sweep_value(base, parameter, value);
            std::optional<SearchSpace> space;
            try {
                space = scenario.search_space();
            }
            catch (const CapExceeded &) {
                if (scenario.group_sizes.size() != 2)
                    throw;
                return predicted_row(scenario, value);
            }

            auto society = scenario.society();
            auto analysis = analyze_space(*space, society, workers);
            SweepRow row;
            row.value = value;
            row.method = "enumerated:" + space->label();
            row.efficient_welfare = analysis.best_welfare;
            auto range = [] (const std::vector<ScoredNetwork> & set, int & lo, int & hi) {
                for (auto & s : set) {
                    int k = static_cast<int>(s.interconnections);
                    lo = lo < 0 ? k : std::min(lo, k);
                    hi = std::max(hi, k);
                }
            };
            range(analysis.stable, row.stable_lo, row.stable_hi);
            range(analysis.efficient, row.efficient_lo, row.efficient_hi);
            if (! analysis.stable.empty()) {
                double lowest = analysis.stable.front().welfare;
                for (auto & s : analysis.stable)
                    lowest = std::min(lowest, s.welfare);
                row.stable_min_welfare = lowest;
                if (lowest > 0.0)
                    row.poa = analysis.best_welfare / lowest;
            }
            return row;
        }
    }

    auto run_sweep(const Scenario & scenario, const SweepSpec & spec, unsigned workers) -> std::vector<SweepRow>
    {
        auto grid = sweep_grid(spec);
        // validate every grid point before spending time on any of them
        for (double v : grid)
            (void) apply_sweep_value(scenario, spec.parameter, v);

        if (workers == 0)
            workers = default_workers();
        std::vector<SweepRow> rows(grid.size());
        if (workers == 1 || grid.size() == 1) {
            for (std::size_t t = 0 ; t < grid.size() ; ++t)
                rows[t] = sweep_point(scenario, spec.parameter, grid[t], workers);
            return rows;
        }

        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> threads;
        for (unsigned w = 0 ; w < workers ; ++w)
            threads.emplace_back([&, w] {
                try {
                    for (std::size_t t ; (t = next++) < grid.size() ; )
                        rows[t] = sweep_point(scenario, spec.parameter, grid[t], 1);
                }
                catch (...) {
                    errors[w] = std::current_exception();
                    next = grid.size();
                }
            });
        for (auto & t : threads)
            t.join();
        for (auto & e : errors)
            if (e)
                std::rethrow_exception(e);
        return rows;
    }

    auto format_count(int lo, int hi) -> std::string
    {
        if (lo < 0)
            return {};
        if (lo == hi)
            return std::to_string(lo);
        return std::to_string(lo) + ".." + std::to_string(hi);
    }

    auto format_real(double value) -> std::string
    {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.12g", value);
        return buf;
    }

    void write_sweep_csv(std::ostream & out, SweepParameter parameter, const std::vector<SweepRow> & rows)
    {
        auto opt = [] (const std::optional<double> & v) { return v ? format_real(*v) : std::string{}; };
        out << to_string(parameter) << ",stable_inter,efficient_inter,stable_min_welfare,efficient_welfare,poa,method\n";
        for (auto & r : rows)
            out << format_real(r.value) << ',' << format_count(r.stable_lo, r.stable_hi) << ','
                << format_count(r.efficient_lo, r.efficient_hi) << ',' << opt(r.stable_min_welfare) << ','
                << opt(r.efficient_welfare) << ',' << opt(r.poa) << ',' << r.method << '\n';
    }

    void write_sweep_svg(std::ostream & out, SweepParameter parameter, const std::vector<SweepRow> & rows)
    {
        constexpr double width = 640, panel = 240, margin = 50;
        double x_lo = rows.empty() ? 0.0 : rows.front().value, x_hi = rows.empty() ? 1.0 : rows.back().value;
        if (x_hi <= x_lo)
            x_hi = x_lo + 1.0;
        double count_hi = 1.0, poa_lo = 1.0, poa_hi = 1.0;
        for (auto & r : rows) {
            count_hi = std::max({count_hi, static_cast<double>(r.stable_hi), static_cast<double>(r.efficient_hi)});
            if (r.poa) {
                poa_lo = std::min(poa_lo, *r.poa);
                poa_hi = std::max(poa_hi, *r.poa);
            }
        }
        if (poa_hi <= poa_lo)
            poa_hi = poa_lo + 0.1;

        auto x_of = [&] (double v) { return margin + (v - x_lo) / (x_hi - x_lo) * (width - 2 * margin); };
        auto polyline = [&] (double top, double lo, double hi, auto value_of, const char * colour) {
            out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
            for (auto & r : rows)
                if (auto v = value_of(r))
                    out << format_real(x_of(r.value)) << ',' << format_real(top + panel - (*v - lo) / (hi - lo) * panel) << ' ';
            out << "\"/>\n";
        };
        auto axes = [&] (double top, const std::string & label, double lo, double hi) {
            out << "<rect x=\"" << margin << "\" y=\"" << top << "\" width=\"" << width - 2 * margin << "\" height=\"" << panel
                << "\" fill=\"none\" stroke=\"#444\"/>\n"
                << "<text x=\"5\" y=\"" << top + 12 << "\" font-size=\"11\">" << label << "</text>\n"
                << "<text x=\"5\" y=\"" << top + panel << "\" font-size=\"10\">" << format_real(lo) << "</text>\n"
                << "<text x=\"5\" y=\"" << top + 24 << "\" font-size=\"10\">" << format_real(hi) << "</text>\n";
        };

        double total = 2 * panel + 3 * margin;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << total << "\">\n";
        axes(margin / 2, "interconnections", 0.0, count_hi);
        polyline(margin / 2, 0.0, count_hi, [] (const SweepRow & r) -> std::optional<double> {
            return r.stable_hi < 0 ? std::nullopt : std::optional<double>(r.stable_hi); }, "#1f77b4");
        polyline(margin / 2, 0.0, count_hi, [] (const SweepRow & r) -> std::optional<double> {
            return r.efficient_hi < 0 ? std::nullopt : std::optional<double>(r.efficient_hi); }, "#d62728");
        double second = margin * 1.5 + panel;
        axes(second, "price of anarchy", poa_lo, poa_hi);
        polyline(second, poa_lo, poa_hi, [] (const SweepRow & r) { return r.poa; }, "#2ca02c");
        out << "<text x=\"" << width / 2 << "\" y=\"" << total - 10 << "\" font-size=\"12\">" << to_string(parameter)
            << "</text>\n</svg>\n";
    }
}
