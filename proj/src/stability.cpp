#include <netform/stability.hpp>

#include <algorithm>
#include <limits>

namespace netform
{
    auto toggle_deltas(const Network & network, int i, int j, const IndividualMatrix & individual, const ModelParams & params)
        -> ToggleDeltas
    {
        bool present = network.has_edge(i, j);
        double gi = payoff_after_toggle(network, i, i, j, individual, params) - payoff(network, i, individual, params);
        double gj = payoff_after_toggle(network, j, i, j, individual, params) - payoff(network, j, individual, params);
        return {present, gi, gj};
    }

    auto benefits_from_edge(const Network & network, int i, int j, const IndividualMatrix & individual,
        const ModelParams & params) -> bool
    {
        Network with = network.with_edge(i, j), without = network.without_edge(i, j);
        return payoff(with, i, individual, params) > payoff(without, i, individual, params) + params.epsilon;
    }

    auto is_pairwise_stable(const Network & network, const IndividualMatrix & individual, const ModelParams & params) -> bool
    {
        int n = network.size();
        double eps = params.epsilon;
        std::vector<double> current(static_cast<std::size_t>(n));
        for (int i = 0 ; i < n ; ++i)
            current[static_cast<std::size_t>(i)] = payoff(network, i, individual, params);

        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j) {
                double u_i = current[static_cast<std::size_t>(i)], u_j = current[static_cast<std::size_t>(j)];
                double v_i = payoff_after_toggle(network, i, i, j, individual, params);
                double v_j = payoff_after_toggle(network, j, i, j, individual, params);
                if (network.has_edge(i, j)) {
                    // v is the payoff without the edge
                    if (! (u_i >= v_i - eps && u_j >= v_j - eps))
                        return false;
                }
                else {
                    // v is the payoff with the edge; a strict gain on one side
                    // must be met by a strict loss on the other
                    if (u_i < v_i - eps && ! (u_j > v_j + eps))
                        return false;
                    if (u_j < v_j - eps && ! (u_i > v_i + eps))
                        return false;
                }
            }
        return true;
    }

    auto defeats(const Network & challenger, const Network & incumbent, const IndividualMatrix & individual,
        const ModelParams & params) -> bool
    {
        auto diff = challenger.difference(incumbent);
        if (diff.size() != 1)
            throw InvalidNetwork{"defeat is defined only between networks differing in exactly one edge, these differ in "
                + std::to_string(diff.size())};
        auto [i, j] = diff.front();
        double eps = params.epsilon;
        double gi = payoff(challenger, i, individual, params) - payoff(incumbent, i, individual, params);
        double gj = payoff(challenger, j, individual, params) - payoff(incumbent, j, individual, params);
        if (incumbent.has_edge(i, j))
            return gi > eps || gj > eps;
        return gi >= -eps && gj >= -eps && (gi > eps || gj > eps);
    }

    auto enumerate_stable(const SearchSpace & space, const Society & society, unsigned workers) -> std::vector<Network>
    {
        if (space.node_count() != society.node_count())
            throw InvalidModel{"search space and society disagree on the node count"};
        if (workers == 0)
            workers = default_workers();
        std::vector<std::vector<Network>> found(workers);
        parallel_chunks(space.cardinality(), workers, [&] (std::uint64_t begin, std::uint64_t end, unsigned w) {
            for (auto b = begin ; b < end ; ++b) {
                Network candidate = space.network_at(b);
                if (is_pairwise_stable(candidate, society))
                    found[w].push_back(std::move(candidate));
            }
        });
        std::vector<Network> result;
        for (auto & part : found)
            for (auto & net : part)
                result.push_back(std::move(net));
        return result;
    }

    auto price_of_anarchy(const SearchSpace & space, const Society & society, unsigned workers) -> PriceOfAnarchy
    {
        if (space.node_count() != society.node_count())
            throw InvalidModel{"search space and society disagree on the node count"};
        if (workers == 0)
            workers = default_workers();
        constexpr double inf = std::numeric_limits<double>::infinity();
        std::vector<double> best(workers, -inf), worst_stable(workers, inf);
        std::vector<std::size_t> stable(workers, 0);
        parallel_chunks(space.cardinality(), workers, [&] (std::uint64_t begin, std::uint64_t end, unsigned w) {
            for (auto b = begin ; b < end ; ++b) {
                Network candidate = space.network_at(b);
                double v = welfare(candidate, society);
                best[w] = std::max(best[w], v);
                if (is_pairwise_stable(candidate, society)) {
                    ++stable[w];
                    worst_stable[w] = std::min(worst_stable[w], v);
                }
            }
        });

        PriceOfAnarchy result{};
        result.space = space.label();
        result.max_welfare = *std::max_element(best.begin(), best.end());
        result.min_stable_welfare = *std::min_element(worst_stable.begin(), worst_stable.end());
        for (auto s : stable)
            result.stable_count += s;
        if (result.stable_count == 0)
            throw NoStableNetwork{"no pairwise-stable network in the " + result.space + " space"};
        if (! (result.min_stable_welfare > 0.0))
            throw UndefinedRatio{"smallest stable welfare is " + std::to_string(result.min_stable_welfare)
                + "; price of anarchy is undefined"};
        result.value = result.max_welfare / result.min_stable_welfare;
        return result;
    }
}
