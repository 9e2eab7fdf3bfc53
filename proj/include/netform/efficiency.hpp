#pragma once

#include <netform/model.hpp>
#include <netform/search_space.hpp>

#include <stdexcept>
#include <vector>

namespace netform
{
    struct EfficientStructures
    {
        double best_welfare;
        std::vector<Network> argmax;  ///< every network within epsilon of best_welfare, canonical order
    };

    auto efficient_search(const SearchSpace & space, const Society & society, unsigned workers = 0) -> EfficientStructures;

    /// A stable network together with its welfare and interconnection count.
    struct ScoredNetwork
    {
        Network network;
        double welfare;
        std::size_t interconnections;
    };

    /// Stable set and efficient set of a space, gathered in one pass.
    struct SpaceAnalysis
    {
        std::vector<ScoredNetwork> stable;     ///< canonical order
        std::vector<ScoredNetwork> efficient;  ///< canonical order
        double best_welfare;
    };

    auto analyze_space(const SearchSpace & space, const Society & society, unsigned workers = 0) -> SpaceAnalysis;

    class NotCliques : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    class ConsolidationCollision : public std::runtime_error
    {
        public:
            ConsolidationCollision(int a, int b);

            int alpha;
            int beta;
    };

    /// Moves every interconnection endpoint onto one representative per group:
    /// the lowest-indexed member already carrying an interconnection, or the
    /// lowest member when none does. The set of connected group pairs is kept.
    /// Throws NotCliques when some group is not a clique, and
    /// ConsolidationCollision when two interconnections would land on one pair.
    auto consolidate_representatives(const Network & network, const GroupPartition & partition) -> Network;
}
