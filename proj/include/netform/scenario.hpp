#pragma once

#include <netform/model.hpp>
#include <netform/search_space.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace netform
{
    /// A society plus run settings, as read from a scenario file.
    ///
    /// File format: one "key = value" per line, '#' starts a comment.
    ///
    ///     group_sizes = 3 5          # required, each >= 3
    ///     F = 0.4                    # cross entries, upper triangle row by row
    ///     delta = 0.5                # required
    ///     cost = 0.2                 # required
    ///     epsilon = 1e-9
    ///     seed = 7
    ///     space = inter              # full | inter
    ///     max_full_n = 7
    ///     max_free_pairs = 24
    ///     max_steps = 10000
    ///     convergence_window = 0
    struct Scenario
    {
        std::vector<int> group_sizes;
        std::vector<double> coordination;  ///< upper-triangular cross entries
        double delta = 0.0;
        double cost = 0.0;
        double epsilon = 1e-9;
        std::optional<std::uint64_t> seed;
        SearchSpace::Kind space = SearchSpace::Kind::Interconnection;
        int max_full_n = kDefaultFullCap;
        int max_free_pairs = kDefaultFreePairCap;
        std::size_t max_steps = 10000;
        std::size_t convergence_window = 0;

        auto params() const -> ModelParams { return {delta, cost, epsilon}; }
        auto partition() const -> GroupPartition;
        auto society() const -> Society;

        /// Throws CapExceeded when the configured space is over its cap.
        auto search_space() const -> SearchSpace;

        /// Re-checks every model invariant; throws InvalidModel.
        void validate() const;
    };

    auto parse_scenario(std::istream & in, const std::string & source = "<scenario>") -> Scenario;
    auto load_scenario(const std::filesystem::path & path) -> Scenario;

    /// Writes a scenario in the format parse_scenario reads.
    void write_scenario(std::ostream & out, const Scenario & scenario);

    auto parse_space(const std::string & text) -> SearchSpace::Kind;
}
