#pragma once

#include <netform/network.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace netform
{
    class InvalidModel : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// Set partition of the nodes 0..n-1 into m groups, each of size >= 3.
    class GroupPartition
    {
        public:
            /// Assigns consecutive node blocks: group 0 gets nodes 0..s0-1, and so on.
            static auto from_sizes(const std::vector<int> & sizes) -> GroupPartition;

            /// membership[i] is the group of node i; groups must be 0..m-1.
            static auto from_membership(const std::vector<int> & membership) -> GroupPartition;

            auto node_count() const -> int { return static_cast<int>(_membership.size()); }
            auto group_count() const -> int { return static_cast<int>(_sizes.size()); }
            auto group_of(int node) const -> int { return _membership.at(static_cast<std::size_t>(node)); }
            auto size_of(int group) const -> int { return _sizes.at(static_cast<std::size_t>(group)); }
            auto sizes() const -> const std::vector<int> & { return _sizes; }
            auto membership() const -> const std::vector<int> & { return _membership; }

            /// Bit row of the members of `group`.
            auto members_mask(int group) const -> std::uint64_t { return _masks.at(static_cast<std::size_t>(group)); }
            auto members(int group) const -> std::vector<int>;

            auto same_group(int i, int j) const -> bool { return group_of(i) == group_of(j); }

        private:
            GroupPartition() = default;
            void finish();

            std::vector<int> _membership;
            std::vector<int> _sizes;
            std::vector<std::uint64_t> _masks;
    };

    /// Symmetric m x m group coordination matrix, unit diagonal, entries in [0,1].
    class CoordinationMatrix
    {
        public:
            /// Row-major full matrix; validated.
            CoordinationMatrix(int m, std::vector<double> entries);

            /// Builds from the m(m-1)/2 cross entries in upper-triangular
            /// row-major order: F01, F02, ..., F0(m-1), F12, ...
            static auto from_upper(int m, const std::vector<double> & upper) -> CoordinationMatrix;

            /// All cross entries equal to `value`.
            static auto uniform(int m, double value) -> CoordinationMatrix;

            auto group_count() const -> int { return _m; }
            auto at(int alpha, int beta) const -> double { return _f[static_cast<std::size_t>(alpha) * _m + beta]; }

        private:
            int _m;
            std::vector<double> _f;
    };

    /// n x n individual coordination matrix derived from F and the partition.
    class IndividualMatrix
    {
        public:
            explicit IndividualMatrix(int n) : _n(n), _f(static_cast<std::size_t>(n) * n, 0.0) {}

            auto size() const -> int { return _n; }
            auto at(int i, int j) const -> double { return _f[static_cast<std::size_t>(i) * _n + j]; }
            auto at(int i, int j) -> double & { return _f[static_cast<std::size_t>(i) * _n + j]; }
            auto row(int i) const -> const double * { return _f.data() + static_cast<std::size_t>(i) * _n; }

        private:
            int _n;
            std::vector<double> _f;
    };

    struct ModelParams
    {
        double delta = 0.5;     ///< one-hop benefit, 0 < delta < 1
        double cost = 0.2;      ///< per-link cost paid by each endpoint, > 0
        double epsilon = 1e-9;  ///< indifference tolerance for payoff comparisons
    };

    void validate(const ModelParams & params);

    auto expand_matrix(const CoordinationMatrix & coordination, const GroupPartition & partition) -> IndividualMatrix;

    /// Everything a payoff evaluation needs, built once and shared read-only.
    struct Society
    {
        GroupPartition partition;
        CoordinationMatrix coordination;
        IndividualMatrix individual;
        ModelParams params;

        Society(GroupPartition p, CoordinationMatrix f, ModelParams mp);

        auto node_count() const -> int { return partition.node_count(); }
    };

    /// Payoff U_i(E) = sum_k F̂_ik delta^d_ik - deg(i) c, with unreachable nodes contributing nothing.
    auto payoff(const Network & network, int node, const IndividualMatrix & individual, const ModelParams & params) -> double;
    auto payoff(const Network & network, int node, const Society & society) -> double;

    /// Payoff of `node` in the network with the pair (i,j) toggled, without copying the network.
    auto payoff_after_toggle(const Network & network, int node, int i, int j, const IndividualMatrix & individual,
        const ModelParams & params) -> double;

    auto payoffs(const Network & network, const Society & society) -> std::vector<double>;

    /// Social welfare v(E) = sum_i U_i(E).
    auto welfare(const Network & network, const IndividualMatrix & individual, const ModelParams & params) -> double;
    auto welfare(const Network & network, const Society & society) -> double;

    /// True iff no edge joins nodes of different groups.
    auto in_invariant_set(const Network & network, const GroupPartition & partition) -> bool;

    struct ConnectionCounts
    {
        std::size_t intra = 0;
        std::size_t inter = 0;
    };

    auto count_connections(const Network & network, const GroupPartition & partition) -> ConnectionCounts;

    /// The union of complete graphs on every group.
    auto disjoint_cliques(const GroupPartition & partition) -> Network;

    /// True iff every group's members are pairwise adjacent.
    auto groups_are_cliques(const Network & network, const GroupPartition & partition) -> bool;
}
