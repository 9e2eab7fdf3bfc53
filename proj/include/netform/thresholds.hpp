#pragma once

#include <netform/model.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace netform
{
    /// Raised when a closed-form regime result is asked for outside its
    /// hypotheses, e.g. cost >= y3(delta).
    class RegimeUndefined : public std::domain_error
    {
        public:
            using std::domain_error::domain_error;
    };

    // Threshold functions. All require s >= 3 and 0 < delta < 1.
    auto y1(int s, double delta) -> double;   ///< delta + (s-1) delta^2
    auto y2(int s, double delta) -> double;   ///< (1-delta) y1(s)
    auto y3(double delta) -> double;          ///< delta - delta^2

    enum class RegimeKind
    {
        Disjoint,
        Bridge,
        ExactK,
        Redundant,
        Maximal,
        BoundaryTie
    };

    auto to_string(RegimeKind kind) -> std::string;

    /// A parameter-space band [lower, upper] and the structure predicted in it.
    /// For BoundaryTie, lower == upper == the boundary that was hit and
    /// `below` / `above` describe the regimes on either side.
    struct RegimePrediction
    {
        RegimeKind kind = RegimeKind::Disjoint;
        int k = 0;             ///< interconnection count for ExactK
        double lower = 0.0;
        double upper = 0.0;
        RegimeKind below = RegimeKind::Disjoint;
        int below_k = 0;
        RegimeKind above = RegimeKind::Disjoint;
        int above_k = 0;

        /// "Disjoint", "ExactK(3)", "BoundaryTie(0.4)".
        auto describe() const -> std::string;
    };

    /// Interconnection count a non-tie regime pins down, given group sizes;
    /// returns {lo, hi} (inclusive). Redundant gives {2, s1*s2 - 1}; a tie
    /// spans the neighbouring regimes.
    auto predicted_interconnections(const RegimePrediction & prediction, int s1, int s2) -> std::pair<int, int>;

    /// Stable-structure boundaries for two groups, ascending:
    /// c/y1(smin), then c/(y2(smin) - j delta y3) for j = 0..smin-1 (the last equals c/y3).
    auto stable_boundaries(int s1, int s2, const ModelParams & params) -> std::vector<double>;

    /// Efficient-structure boundaries for two groups, ascending:
    /// c delta/(y1(s1) y1(s2)), 2c/(y2(s1)+y2(s2)+(s1+s2-4) delta y3), c/y3.
    auto efficient_boundaries(int s1, int s2, const ModelParams & params) -> std::vector<double>;

    auto classify_two_group_stable(int s1, int s2, const ModelParams & params, double f12) -> RegimePrediction;
    auto classify_two_group_efficient(int s1, int s2, const ModelParams & params, double f12) -> RegimePrediction;

    /// True iff the efficient and the pairwise-stable two-group structures coincide at f12.
    auto stability_efficiency_overlap(int s1, int s2, const ModelParams & params, double f12) -> bool;

    /// The closed intervals on which stable and efficient structures coincide.
    auto overlap_intervals(int s1, int s2, const ModelParams & params) -> std::vector<std::pair<double, double>>;

    struct RedundancyBounds
    {
        double redundant_lb;  ///< max_s c/y2(s): redundant interconnections form above this
        double maximal_lb;    ///< c/y3: maximal interconnections form above this
    };

    auto redundancy_bounds(int s_alpha, int s_beta, const ModelParams & params) -> RedundancyBounds;

    /// Simple undirected graph on group ids.
    class GroupGraph
    {
        public:
            explicit GroupGraph(int m) : _m(m), _adj(static_cast<std::size_t>(m) * m, false) {}
            GroupGraph(int m, const std::vector<std::pair<int, int>> & edges);

            static auto star(int m, int centre) -> GroupGraph;
            static auto ring(const std::vector<int> & order) -> GroupGraph;

            auto group_count() const -> int { return _m; }
            auto has_edge(int a, int b) const -> bool { return _adj[static_cast<std::size_t>(a) * _m + b]; }
            void set_edge(int a, int b, bool present);
            auto edges() const -> std::vector<std::pair<int, int>>;
            auto connected() const -> bool;

            /// Hop distances from `source`; kUnreachable where disconnected.
            auto distances_from(int source) const -> std::vector<int>;

            auto operator== (const GroupGraph &) const -> bool = default;

        private:
            int _m;
            std::vector<bool> _adj;
    };

    /// Group graph of a network: an edge wherever at least one interconnection exists.
    auto group_graph(const Network & network, const GroupPartition & partition) -> GroupGraph;

    /// Marginal value for the representative of `from` of having the group
    /// edge (alpha,beta) present versus absent:
    /// sum_{lambda != from} F(from,lambda) (delta^d' - delta^d) (1 + (s_lambda - 1) delta).
    auto group_edge_gain(const GroupGraph & graph, int alpha, int beta, int from, const CoordinationMatrix & coordination,
        const GroupPartition & partition, const ModelParams & params) -> double;

    /// Sufficient condition for a pairwise-stable structure of minimally
    /// connected cliques along `graph`. Throws if `graph` is disconnected.
    auto minimally_connected_sufficient(const GroupGraph & graph, const CoordinationMatrix & coordination,
        const GroupPartition & partition, const ModelParams & params) -> bool;
}
