#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace netform
{
    using NodePair = std::pair<int, int>;

    /// Largest node count a Network can hold (one 64-bit adjacency row per node).
    inline constexpr int kMaxNodes = 64;

    /// Distance sentinel for pairs with no connecting path.
    inline constexpr int kUnreachable = std::numeric_limits<int>::max();

    class InvalidNetwork : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// Number of unordered node pairs, C(n,2).
    constexpr auto pair_count(int n) -> std::size_t
    {
        return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    }

    /// Lexicographic index of the pair (i,j), i<j, among all C(n,2) pairs:
    /// (0,1), (0,2), ..., (0,n-1), (1,2), ...
    constexpr auto edge_index(int n, int i, int j) -> std::size_t
    {
        if (i > j)
            std::swap(i, j);
        auto ui = static_cast<std::size_t>(i), un = static_cast<std::size_t>(n);
        return ui * un - ui * (ui + 1) / 2 + static_cast<std::size_t>(j - i - 1);
    }

    /// Inverse of edge_index.
    auto pair_at(int n, std::size_t index) -> NodePair;

    /// Labeled undirected simple graph on nodes 0..n-1, stored as one
    /// adjacency bit row per node.
    class Network
    {
        public:
            Network() = default;
            explicit Network(int n);

            /// Builds the network whose edge set is the bitmask `code` over the
            /// canonical lexicographic edge index. Requires C(n,2) <= 64.
            static auto from_code(int n, std::uint64_t code) -> Network;
            static auto from_edges(int n, const std::vector<NodePair> & edges) -> Network;
            static auto complete(int n) -> Network;

            auto size() const -> int { return _n; }
            auto has_edge(int i, int j) const -> bool;
            void add_edge(int i, int j);
            void remove_edge(int i, int j);
            void toggle_edge(int i, int j);
            auto with_edge(int i, int j) const -> Network;
            auto without_edge(int i, int j) const -> Network;

            auto degree(int i) const -> int;
            auto neighbours(int i) const -> std::uint64_t { return _adj[i]; }
            auto edge_count() const -> std::size_t;

            /// Edges in lexicographic order, each with i < j.
            auto edges() const -> std::vector<NodePair>;

            /// Canonical bitmask; throws when C(n,2) > 64.
            auto code() const -> std::uint64_t;

            /// Symmetric difference of edge sets.
            auto difference(const Network & other) const -> std::vector<NodePair>;

            auto operator== (const Network & other) const -> bool = default;

            /// Canonical order: compare the edge bit-vectors as binary numbers
            /// whose most significant bit is the highest edge index.
            auto operator<=> (const Network & other) const -> std::strong_ordering;

            /// Edge density 2|E| / (n(n-1)).
            auto density() const -> double;

        private:
            void check_pair(int i, int j) const;

            int _n = 0;
            std::vector<std::uint64_t> _adj;
    };

    /// Hop distances from `source`; kUnreachable where no path exists.
    auto distances_from(const Network & network, int source) -> std::vector<int>;

    class DistanceMatrix
    {
        public:
            explicit DistanceMatrix(int n) : _n(n), _d(static_cast<std::size_t>(n) * n, kUnreachable) {}

            auto size() const -> int { return _n; }
            auto at(int i, int j) const -> int { return _d[static_cast<std::size_t>(i) * _n + j]; }
            auto at(int i, int j) -> int & { return _d[static_cast<std::size_t>(i) * _n + j]; }

        private:
            int _n;
            std::vector<int> _d;
    };

    /// Breadth-first search from every node.
    auto all_pairs_distances(const Network & network) -> DistanceMatrix;
}
