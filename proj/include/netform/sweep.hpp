#pragma once

#include <netform/scenario.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace netform
{
    enum class SweepParameter
    {
        F12,
        S1,
        Delta,
        Cost
    };

    auto parse_sweep_parameter(const std::string & name) -> SweepParameter;
    auto to_string(SweepParameter parameter) -> std::string;

    struct SweepSpec
    {
        SweepParameter parameter = SweepParameter::F12;
        double from = 0.0;
        double to = 1.0;
        double step = 0.01;
    };

    /// Grid values from, from+step, ..., up to `to` (inclusive within 1e-9),
    /// each rounded to 12 decimals so that nominal points such as 0.8 land
    /// exactly on the decimal value.
    auto sweep_grid(const SweepSpec & spec) -> std::vector<double>;

    /// Applies one grid value to a copy of the scenario. Throws InvalidModel
    /// when the result violates a model invariant (e.g. s2 = n - s1 < 3).
    auto apply_sweep_value(const Scenario & scenario, SweepParameter parameter, double value) -> Scenario;

    struct SweepRow
    {
        double value = 0.0;
        int stable_lo = -1, stable_hi = -1;        ///< -1 when unknown
        int efficient_lo = -1, efficient_hi = -1;
        std::optional<double> stable_min_welfare;
        std::optional<double> efficient_welfare;
        std::optional<double> poa;
        /// "enumerated:<space>" when the space was searched exhaustively,
        /// "predicted" when it exceeded the cap and closed-form regimes were used,
        /// "undefined" when neither applies (e.g. cost >= y3).
        std::string method;
    };

    /// One row per grid point, in grid order regardless of worker count.
    auto run_sweep(const Scenario & scenario, const SweepSpec & spec, unsigned workers = 0) -> std::vector<SweepRow>;

    /// CSV header: <parameter>,stable_inter,efficient_inter,stable_min_welfare,efficient_welfare,poa,method.
    /// Counts print as "k", or "lo..hi" when the set holds several counts; unknown fields are empty.
    void write_sweep_csv(std::ostream & out, SweepParameter parameter, const std::vector<SweepRow> & rows);

    /// Static two-panel SVG (interconnection counts, price of anarchy) drawn from the rows.
    void write_sweep_svg(std::ostream & out, SweepParameter parameter, const std::vector<SweepRow> & rows);

    auto format_count(int lo, int hi) -> std::string;
    auto format_real(double value) -> std::string;
}
