#include <netform/network.hpp>

#include <bit>
#include <string>

namespace netform
{
    auto pair_at(int n, std::size_t index) -> NodePair
    {
        if (index >= pair_count(n))
            throw InvalidNetwork{"edge index " + std::to_string(index) + " out of range for n=" + std::to_string(n)};
        int i = 0;
        auto row = static_cast<std::size_t>(n - 1);
        while (index >= row) {
            index -= row;
            --row;
            ++i;
        }
        return {i, i + 1 + static_cast<int>(index)};
    }

    Network::Network(int n) :
        _n(n)
    {
        if (n < 0 || n > kMaxNodes)
            throw InvalidNetwork{"node count " + std::to_string(n) + " outside [0, " + std::to_string(kMaxNodes) + "]"};
        _adj.assign(static_cast<std::size_t>(n), 0);
    }

    auto Network::from_code(int n, std::uint64_t code) -> Network
    {
        if (pair_count(n) > 64)
            throw InvalidNetwork{"bitmask encoding needs C(n,2) <= 64, got n=" + std::to_string(n)};
        if (pair_count(n) < 64 && (code >> pair_count(n)) != 0)
            throw InvalidNetwork{"bitmask has bits beyond C(n,2)"};
        Network result(n);
        std::size_t idx = 0;
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j, ++idx)
                if ((code >> idx) & 1u) {
                    result._adj[i] |= std::uint64_t{1} << j;
                    result._adj[j] |= std::uint64_t{1} << i;
                }
        return result;
    }

    auto Network::from_edges(int n, const std::vector<NodePair> & edges) -> Network
    {
        Network result(n);
        for (auto [i, j] : edges)
            result.add_edge(i, j);
        return result;
    }

    auto Network::complete(int n) -> Network
    {
        Network result(n);
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                result.add_edge(i, j);
        return result;
    }

    void Network::check_pair(int i, int j) const
    {
        if (i < 0 || j < 0 || i >= _n || j >= _n)
            throw InvalidNetwork{"node pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for n="
                + std::to_string(_n)};
        if (i == j)
            throw InvalidNetwork{"self-loop at node " + std::to_string(i)};
    }

    auto Network::has_edge(int i, int j) const -> bool
    {
        check_pair(i, j);
        return (_adj[i] >> j) & 1u;
    }

    void Network::add_edge(int i, int j)
    {
        check_pair(i, j);
        _adj[i] |= std::uint64_t{1} << j;
        _adj[j] |= std::uint64_t{1} << i;
    }

    void Network::remove_edge(int i, int j)
    {
        check_pair(i, j);
        _adj[i] &= ~(std::uint64_t{1} << j);
        _adj[j] &= ~(std::uint64_t{1} << i);
    }

    void Network::toggle_edge(int i, int j)
    {
        check_pair(i, j);
        _adj[i] ^= std::uint64_t{1} << j;
        _adj[j] ^= std::uint64_t{1} << i;
    }

    auto Network::with_edge(int i, int j) const -> Network
    {
        Network result = *this;
        result.add_edge(i, j);
        return result;
    }

    auto Network::without_edge(int i, int j) const -> Network
    {
        Network result = *this;
        result.remove_edge(i, j);
        return result;
    }

    auto Network::degree(int i) const -> int
    {
        return std::popcount(_adj.at(static_cast<std::size_t>(i)));
    }

    auto Network::edge_count() const -> std::size_t
    {
        std::size_t twice = 0;
        for (auto row : _adj)
            twice += static_cast<std::size_t>(std::popcount(row));
        return twice / 2;
    }

    auto Network::edges() const -> std::vector<NodePair>
    {
        std::vector<NodePair> result;
        for (int i = 0 ; i < _n ; ++i) {
            std::uint64_t higher = _adj[i] & (i + 1 < 64 ? ~((std::uint64_t{1} << (i + 1)) - 1) : 0);
            while (higher) {
                int j = std::countr_zero(higher);
                result.emplace_back(i, j);
                higher &= higher - 1;
            }
        }
        return result;
    }

    auto Network::code() const -> std::uint64_t
    {
        if (pair_count(_n) > 64)
            throw InvalidNetwork{"bitmask encoding needs C(n,2) <= 64, got n=" + std::to_string(_n)};
        std::uint64_t result = 0;
        for (auto [i, j] : edges())
            result |= std::uint64_t{1} << edge_index(_n, i, j);
        return result;
    }

    auto Network::difference(const Network & other) const -> std::vector<NodePair>
    {
        if (other._n != _n)
            throw InvalidNetwork{"networks have different node counts"};
        std::vector<NodePair> result;
        for (int i = 0 ; i < _n ; ++i)
            for (int j = i + 1 ; j < _n ; ++j)
                if (((_adj[i] ^ other._adj[i]) >> j) & 1u)
                    result.emplace_back(i, j);
        return result;
    }

    auto Network::operator<=> (const Network & other) const -> std::strong_ordering
    {
        if (_n != other._n)
            return _n <=> other._n;
        for (int i = _n - 1 ; i >= 0 ; --i)
            for (int j = _n - 1 ; j > i ; --j) {
                bool a = (_adj[i] >> j) & 1u, b = (other._adj[i] >> j) & 1u;
                if (a != b)
                    return a ? std::strong_ordering::greater : std::strong_ordering::less;
            }
        return std::strong_ordering::equal;
    }

    auto Network::density() const -> double
    {
        if (_n < 2)
            return 0.0;
        return static_cast<double>(edge_count()) / static_cast<double>(pair_count(_n));
    }

    auto distances_from(const Network & network, int source) -> std::vector<int>
    {
        int n = network.size();
        std::vector<int> result(static_cast<std::size_t>(n), kUnreachable);
        result.at(static_cast<std::size_t>(source)) = 0;
        std::uint64_t visited = std::uint64_t{1} << source;
        std::uint64_t frontier = visited;
        for (int depth = 1 ; frontier ; ++depth) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier ; f ; f &= f - 1)
                next |= network.neighbours(std::countr_zero(f));
            next &= ~visited;
            visited |= next;
            for (std::uint64_t f = next ; f ; f &= f - 1)
                result[static_cast<std::size_t>(std::countr_zero(f))] = depth;
            frontier = next;
        }
        return result;
    }

    auto all_pairs_distances(const Network & network) -> DistanceMatrix
    {
        DistanceMatrix result(network.size());
        for (int i = 0 ; i < network.size() ; ++i) {
            auto row = distances_from(network, i);
            for (int j = 0 ; j < network.size() ; ++j)
                result.at(i, j) = row[static_cast<std::size_t>(j)];
        }
        return result;
    }
}
