#pragma once

#include <netform/model.hpp>
#include <netform/search_space.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace netform
{
    /// Payoff changes for both endpoints when the pair (i,j) is toggled:
    /// adding it when absent, removing it when present.
    struct ToggleDeltas
    {
        bool present;   ///< (i,j) was an edge before the toggle
        double gain_i;  ///< U_i(toggled) - U_i(current)
        double gain_j;
    };

    auto toggle_deltas(const Network & network, int i, int j, const IndividualMatrix & individual, const ModelParams & params)
        -> ToggleDeltas;

    /// U_i(E ∪ (i,j)) > U_i(E \ (i,j)) + epsilon.
    auto benefits_from_edge(const Network & network, int i, int j, const IndividualMatrix & individual,
        const ModelParams & params) -> bool;

    /// No endpoint gains by severing an edge, and no non-edge is wanted by one
    /// side without the other side strictly losing.
    auto is_pairwise_stable(const Network & network, const IndividualMatrix & individual, const ModelParams & params) -> bool;

    inline auto is_pairwise_stable(const Network & network, const Society & society) -> bool
    {
        return is_pairwise_stable(network, society.individual, society.params);
    }

    /// Whether `challenger` defeats `incumbent`. The two must differ in exactly one edge.
    auto defeats(const Network & challenger, const Network & incumbent, const IndividualMatrix & individual,
        const ModelParams & params) -> bool;

    /// Every pairwise-stable network of the space, in canonical bitmask order.
    /// Stability is always judged against all node pairs, including intra-group
    /// deviations in an interconnection space. Output does not depend on `workers`.
    auto enumerate_stable(const SearchSpace & space, const Society & society, unsigned workers = 0) -> std::vector<Network>;

    class NoStableNetwork : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class UndefinedRatio : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    struct PriceOfAnarchy
    {
        double value;               ///< max welfare / min stable welfare
        double max_welfare;
        double min_stable_welfare;
        std::size_t stable_count;
        std::string space;          ///< label of the space the figures were taken over
    };

    /// Throws NoStableNetwork when the space holds no stable network and
    /// UndefinedRatio when the smallest stable welfare is not positive.
    auto price_of_anarchy(const SearchSpace & space, const Society & society, unsigned workers = 0) -> PriceOfAnarchy;
}
