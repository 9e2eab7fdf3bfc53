#include <netform/model.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace netform
{
    auto GroupPartition::from_sizes(const std::vector<int> & sizes) -> GroupPartition
    {
        GroupPartition result;
        for (std::size_t g = 0 ; g < sizes.size() ; ++g) {
            if (sizes[g] < 0)
                throw InvalidModel{"negative group size"};
            result._membership.insert(result._membership.end(), static_cast<std::size_t>(sizes[g]), static_cast<int>(g));
        }
        result.finish();
        return result;
    }

    auto GroupPartition::from_membership(const std::vector<int> & membership) -> GroupPartition
    {
        GroupPartition result;
        result._membership = membership;
        result.finish();
        return result;
    }

    void GroupPartition::finish()
    {
        int n = node_count();
        if (n < 3)
            throw InvalidModel{"need at least 3 nodes, got " + std::to_string(n)};
        if (n > kMaxNodes)
            throw InvalidModel{"at most " + std::to_string(kMaxNodes) + " nodes supported, got " + std::to_string(n)};

        int m = 0;
        for (int g : _membership) {
            if (g < 0)
                throw InvalidModel{"negative group id"};
            m = std::max(m, g + 1);
        }
        _sizes.assign(static_cast<std::size_t>(m), 0);
        _masks.assign(static_cast<std::size_t>(m), 0);
        for (int i = 0 ; i < n ; ++i) {
            auto g = static_cast<std::size_t>(_membership[static_cast<std::size_t>(i)]);
            ++_sizes[g];
            _masks[g] |= std::uint64_t{1} << i;
        }
        for (int g = 0 ; g < m ; ++g)
            if (_sizes[static_cast<std::size_t>(g)] < 3)
                throw InvalidModel{"group " + std::to_string(g) + " has size " + std::to_string(_sizes[static_cast<std::size_t>(g)])
                    + "; every group needs at least 3 members"};
    }

    auto GroupPartition::members(int group) const -> std::vector<int>
    {
        std::vector<int> result;
        for (auto mask = members_mask(group) ; mask ; mask &= mask - 1)
            result.push_back(std::countr_zero(mask));
        return result;
    }

    CoordinationMatrix::CoordinationMatrix(int m, std::vector<double> entries) :
        _m(m),
        _f(std::move(entries))
    {
        if (m < 1)
            throw InvalidModel{"coordination matrix needs at least one group"};
        if (_f.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(m))
            throw InvalidModel{"coordination matrix has " + std::to_string(_f.size()) + " entries, expected "
                + std::to_string(m * m)};
        for (int a = 0 ; a < m ; ++a) {
            if (at(a, a) != 1.0)
                throw InvalidModel{"coordination matrix diagonal entry " + std::to_string(a) + " must be exactly 1"};
            for (int b = 0 ; b < m ; ++b) {
                double v = at(a, b);
                if (! std::isfinite(v) || v < 0.0 || v > 1.0)
                    throw InvalidModel{"coordination entry F(" + std::to_string(a) + "," + std::to_string(b) + ") = "
                        + std::to_string(v) + " outside [0,1]"};
                if (v != at(b, a))
                    throw InvalidModel{"coordination matrix is not symmetric at (" + std::to_string(a) + ","
                        + std::to_string(b) + ")"};
            }
        }
    }

    auto CoordinationMatrix::from_upper(int m, const std::vector<double> & upper) -> CoordinationMatrix
    {
        if (m < 1)
            throw InvalidModel{"coordination matrix needs at least one group"};
        auto expected = static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1) / 2;
        if (upper.size() != expected)
            throw InvalidModel{"expected " + std::to_string(expected) + " cross-group coordination entries for "
                + std::to_string(m) + " groups, got " + std::to_string(upper.size())};
        std::vector<double> full(static_cast<std::size_t>(m) * m, 1.0);
        std::size_t k = 0;
        for (int a = 0 ; a < m ; ++a)
            for (int b = a + 1 ; b < m ; ++b, ++k) {
                full[static_cast<std::size_t>(a) * m + b] = upper[k];
                full[static_cast<std::size_t>(b) * m + a] = upper[k];
            }
        return CoordinationMatrix{m, std::move(full)};
    }

    auto CoordinationMatrix::uniform(int m, double value) -> CoordinationMatrix
    {
        return from_upper(m, std::vector<double>(static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1) / 2, value));
    }

    void validate(const ModelParams & params)
    {
        if (! (params.delta > 0.0 && params.delta < 1.0))
            throw InvalidModel{"delta must lie in (0,1), got " + std::to_string(params.delta)};
        if (! (params.cost > 0.0) || ! std::isfinite(params.cost))
            throw InvalidModel{"cost must be positive, got " + std::to_string(params.cost)};
        if (! (params.epsilon >= 0.0) || ! std::isfinite(params.epsilon))
            throw InvalidModel{"epsilon must be non-negative, got " + std::to_string(params.epsilon)};
    }

    auto expand_matrix(const CoordinationMatrix & coordination, const GroupPartition & partition) -> IndividualMatrix
    {
        if (coordination.group_count() != partition.group_count())
            throw InvalidModel{"coordination matrix has " + std::to_string(coordination.group_count())
                + " groups but the partition has " + std::to_string(partition.group_count())};
        int n = partition.node_count();
        IndividualMatrix result(n);
        for (int i = 0 ; i < n ; ++i)
            for (int j = 0 ; j < n ; ++j)
                if (i != j)
                    result.at(i, j) = coordination.at(partition.group_of(i), partition.group_of(j));
        return result;
    }

    Society::Society(GroupPartition p, CoordinationMatrix f, ModelParams mp) :
        partition(std::move(p)),
        coordination(std::move(f)),
        individual(expand_matrix(coordination, partition)),
        params(mp)
    {
        validate(params);
    }

    namespace
    {
        template <typename Neighbours_>
        auto benefit_bfs(int node, int n, const Neighbours_ & neighbours, const double * row, double delta) -> double
        {
            double benefit = 0.0;
            double hop = 1.0;
            std::uint64_t visited = std::uint64_t{1} << node;
            std::uint64_t frontier = visited;
            std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
            while (true) {
                std::uint64_t next = 0;
                for (std::uint64_t f = frontier ; f ; f &= f - 1)
                    next |= neighbours(std::countr_zero(f));
                next &= ~visited;
                if (! next)
                    break;
                hop *= delta;
                double level = 0.0;
                for (std::uint64_t f = next ; f ; f &= f - 1)
                    level += row[std::countr_zero(f)];
                benefit += hop * level;
                visited |= next;
                if (visited == all)
                    break;
                frontier = next;
            }
            return benefit;
        }

        void require_matching(const Network & network, const IndividualMatrix & individual)
        {
            if (network.size() != individual.size())
                throw InvalidNetwork{"network has " + std::to_string(network.size()) + " nodes but the society has "
                    + std::to_string(individual.size())};
        }
    }

    auto payoff(const Network & network, int node, const IndividualMatrix & individual, const ModelParams & params) -> double
    {
        auto neighbours = [&network] (int v) { return network.neighbours(v); };
        return benefit_bfs(node, network.size(), neighbours, individual.row(node), params.delta)
            - network.degree(node) * params.cost;
    }

    auto payoff_after_toggle(const Network & network, int node, int i, int j, const IndividualMatrix & individual,
        const ModelParams & params) -> double
    {
        std::uint64_t bit_i = std::uint64_t{1} << i, bit_j = std::uint64_t{1} << j;
        auto neighbours = [&] (int v) {
            std::uint64_t row = network.neighbours(v);
            if (v == i)
                row ^= bit_j;
            else if (v == j)
                row ^= bit_i;
            return row;
        };
        int degree = std::popcount(neighbours(node));
        return benefit_bfs(node, network.size(), neighbours, individual.row(node), params.delta) - degree * params.cost;
    }

    auto payoff(const Network & network, int node, const Society & society) -> double
    {
        require_matching(network, society.individual);
        if (node < 0 || node >= network.size())
            throw InvalidNetwork{"node " + std::to_string(node) + " out of range"};
        return payoff(network, node, society.individual, society.params);
    }

    auto payoffs(const Network & network, const Society & society) -> std::vector<double>
    {
        require_matching(network, society.individual);
        std::vector<double> result(static_cast<std::size_t>(network.size()));
        for (int i = 0 ; i < network.size() ; ++i)
            result[static_cast<std::size_t>(i)] = payoff(network, i, society);
        return result;
    }

    auto welfare(const Network & network, const IndividualMatrix & individual, const ModelParams & params) -> double
    {
        require_matching(network, individual);
        double total = 0.0;
        for (int i = 0 ; i < network.size() ; ++i)
            total += payoff(network, i, individual, params);
        return total;
    }

    auto welfare(const Network & network, const Society & society) -> double
    {
        return welfare(network, society.individual, society.params);
    }

    auto in_invariant_set(const Network & network, const GroupPartition & partition) -> bool
    {
        return count_connections(network, partition).inter == 0;
    }

    auto count_connections(const Network & network, const GroupPartition & partition) -> ConnectionCounts
    {
        ConnectionCounts result;
        for (int i = 0 ; i < network.size() ; ++i) {
            std::uint64_t own = partition.members_mask(partition.group_of(i));
            result.intra += static_cast<std::size_t>(std::popcount(network.neighbours(i) & own));
            result.inter += static_cast<std::size_t>(std::popcount(network.neighbours(i) & ~own));
        }
        result.intra /= 2;
        result.inter /= 2;
        return result;
    }

    auto disjoint_cliques(const GroupPartition & partition) -> Network
    {
        Network result(partition.node_count());
        for (int i = 0 ; i < partition.node_count() ; ++i)
            for (int j = i + 1 ; j < partition.node_count() ; ++j)
                if (partition.same_group(i, j))
                    result.add_edge(i, j);
        return result;
    }

    auto groups_are_cliques(const Network & network, const GroupPartition & partition) -> bool
    {
        for (int i = 0 ; i < network.size() ; ++i) {
            std::uint64_t others = partition.members_mask(partition.group_of(i)) & ~(std::uint64_t{1} << i);
            if ((network.neighbours(i) & others) != others)
                return false;
        }
        return true;
    }
}
