#include <netform/efficiency.hpp>
#include <netform/stability.hpp>

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

namespace netform
{
    namespace
    {
        struct Candidate
        {
            std::uint64_t index;
            double welfare;
        };

        /// Keeps every candidate within epsilon of the running maximum.
        struct Leaders
        {
            double best = -std::numeric_limits<double>::infinity();
            std::vector<Candidate> near;

            void offer(std::uint64_t index, double v, double eps)
            {
                if (v > best) {
                    best = v;
                    std::erase_if(near, [&] (const Candidate & c) { return c.welfare < best - eps; });
                }
                if (v >= best - eps)
                    near.push_back({index, v});
            }
        };

        auto merge_leaders(std::vector<Leaders> & parts, double eps) -> Leaders
        {
            Leaders merged;
            for (auto & p : parts)
                merged.best = std::max(merged.best, p.best);
            for (auto & p : parts)
                for (auto & c : p.near)
                    if (c.welfare >= merged.best - eps)
                        merged.near.push_back(c);
            return merged;
        }
    }

    auto efficient_search(const SearchSpace & space, const Society & society, unsigned workers) -> EfficientStructures
    {
        if (space.node_count() != society.node_count())
            throw InvalidModel{"search space and society disagree on the node count"};
        if (workers == 0)
            workers = default_workers();
        double eps = society.params.epsilon;
        std::vector<Leaders> parts(workers);
        parallel_chunks(space.cardinality(), workers, [&] (std::uint64_t begin, std::uint64_t end, unsigned w) {
            for (auto b = begin ; b < end ; ++b)
                parts[w].offer(b, welfare(space.network_at(b), society), eps);
        });
        auto merged = merge_leaders(parts, eps);
        EfficientStructures result{merged.best, {}};
        for (auto & c : merged.near)
            result.argmax.push_back(space.network_at(c.index));
        return result;
    }

    auto analyze_space(const SearchSpace & space, const Society & society, unsigned workers) -> SpaceAnalysis
    {
        if (space.node_count() != society.node_count())
            throw InvalidModel{"search space and society disagree on the node count"};
        if (workers == 0)
            workers = default_workers();
        double eps = society.params.epsilon;
        std::vector<Leaders> parts(workers);
        std::vector<std::vector<Candidate>> stable(workers);
        parallel_chunks(space.cardinality(), workers, [&] (std::uint64_t begin, std::uint64_t end, unsigned w) {
            for (auto b = begin ; b < end ; ++b) {
                Network candidate = space.network_at(b);
                double v = welfare(candidate, society);
                parts[w].offer(b, v, eps);
                if (is_pairwise_stable(candidate, society))
                    stable[w].push_back({b, v});
            }
        });

        auto score = [&] (const Candidate & c) {
            Network net = space.network_at(c.index);
            auto inter = count_connections(net, society.partition).inter;
            return ScoredNetwork{std::move(net), c.welfare, inter};
        };

        auto merged = merge_leaders(parts, eps);
        SpaceAnalysis result{{}, {}, merged.best};
        for (auto & part : stable)
            for (auto & c : part)
                result.stable.push_back(score(c));
        for (auto & c : merged.near)
            result.efficient.push_back(score(c));
        return result;
    }

    ConsolidationCollision::ConsolidationCollision(int a, int b) :
        std::runtime_error("groups " + std::to_string(a) + " and " + std::to_string(b)
            + " share more than one interconnection; consolidation would merge them"),
        alpha(a),
        beta(b)
    {
    }

    auto consolidate_representatives(const Network & network, const GroupPartition & partition) -> Network
    {
        if (network.size() != partition.node_count())
            throw InvalidModel{"network and partition disagree on the node count"};
        if (! groups_are_cliques(network, partition))
            throw NotCliques{"consolidation needs every group to be a clique"};

        int m = partition.group_count();
        std::vector<int> representative(static_cast<std::size_t>(m), -1);
        for (int g = 0 ; g < m ; ++g) {
            std::uint64_t own = partition.members_mask(g);
            for (auto mask = own ; mask ; mask &= mask - 1) {
                int v = std::countr_zero(mask);
                if (network.neighbours(v) & ~own) {
                    representative[static_cast<std::size_t>(g)] = v;
                    break;
                }
            }
            if (representative[static_cast<std::size_t>(g)] < 0)
                representative[static_cast<std::size_t>(g)] = std::countr_zero(own);
        }

        Network result = disjoint_cliques(partition);
        for (auto [i, j] : network.edges()) {
            int a = partition.group_of(i), b = partition.group_of(j);
            if (a == b)
                continue;
            int ri = representative[static_cast<std::size_t>(a)], rj = representative[static_cast<std::size_t>(b)];
            if (result.has_edge(ri, rj))
                throw ConsolidationCollision{std::min(a, b), std::max(a, b)};
            result.add_edge(ri, rj);
        }
        return result;
    }
}
