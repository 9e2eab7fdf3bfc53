#include <netform/thresholds.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>

namespace netform
{
    namespace
    {
        void check_size(int s)
        {
            if (s < 3)
                throw InvalidModel{"group size must be at least 3, got " + std::to_string(s)};
        }

        void check_delta(double delta)
        {
            if (! (delta > 0.0 && delta < 1.0))
                throw InvalidModel{"delta must lie in (0,1), got " + std::to_string(delta)};
        }

        void check_two_group(int s1, int s2, const ModelParams & params, double f12)
        {
            check_size(s1);
            check_size(s2);
            validate(params);
            if (! (f12 >= 0.0 && f12 <= 1.0))
                throw InvalidModel{"F12 must lie in [0,1], got " + std::to_string(f12)};
            if (! (params.cost < y3(params.delta)))
                throw RegimeUndefined{"cost " + std::to_string(params.cost) + " is not below y3(delta) = "
                    + std::to_string(y3(params.delta)) + "; groups need not be cliques and the two-group regimes do not apply"};
        }

        struct Band
        {
            RegimeKind kind;
            int k;
        };

        /// Classifies f12 against ascending boundaries; bands[t] covers
        /// (boundaries[t-1], boundaries[t]), with bands.size() == boundaries.size() + 1.
        auto classify(const std::vector<double> & boundaries, const std::vector<Band> & bands, double f12, double epsilon)
            -> RegimePrediction
        {
            RegimePrediction result;
            for (std::size_t t = 0 ; t < boundaries.size() ; ++t)
                if (std::abs(f12 - boundaries[t]) <= epsilon) {
                    result.kind = RegimeKind::BoundaryTie;
                    result.lower = result.upper = boundaries[t];
                    result.below = bands[t].kind;
                    result.below_k = bands[t].k;
                    result.above = bands[t + 1].kind;
                    result.above_k = bands[t + 1].k;
                    return result;
                }

            std::size_t t = 0;
            while (t < boundaries.size() && f12 > boundaries[t])
                ++t;
            result.kind = bands[t].kind;
            result.k = bands[t].k;
            result.lower = t == 0 ? 0.0 : boundaries[t - 1];
            result.upper = t == boundaries.size() ? 1.0 : boundaries[t];
            result.below = result.above = result.kind;
            result.below_k = result.above_k = result.k;
            return result;
        }

        auto range_of(RegimeKind kind, int k, int s1, int s2) -> std::pair<int, int>
        {
            switch (kind) {
                case RegimeKind::Disjoint:    return {0, 0};
                case RegimeKind::Bridge:      return {1, 1};
                case RegimeKind::ExactK:      return {k, k};
                case RegimeKind::Redundant:   return {2, s1 * s2 - 1};
                case RegimeKind::Maximal:     return {s1 * s2, s1 * s2};
                case RegimeKind::BoundaryTie: break;
            }
            throw std::logic_error{"boundary tie has no single interconnection count"};
        }

        auto power(double delta, int d) -> double
        {
            return d == kUnreachable ? 0.0 : std::pow(delta, d);
        }
    }

    auto y1(int s, double delta) -> double
    {
        check_size(s);
        check_delta(delta);
        return delta + (s - 1) * delta * delta;
    }

    auto y2(int s, double delta) -> double
    {
        return (1.0 - delta) * y1(s, delta);
    }

    auto y3(double delta) -> double
    {
        check_delta(delta);
        return delta - delta * delta;
    }

    auto to_string(RegimeKind kind) -> std::string
    {
        switch (kind) {
            case RegimeKind::Disjoint:    return "Disjoint";
            case RegimeKind::Bridge:      return "Bridge";
            case RegimeKind::ExactK:      return "ExactK";
            case RegimeKind::Redundant:   return "Redundant";
            case RegimeKind::Maximal:     return "Maximal";
            case RegimeKind::BoundaryTie: return "BoundaryTie";
        }
        return "?";
    }

    auto RegimePrediction::describe() const -> std::string
    {
        char buf[64];
        switch (kind) {
            case RegimeKind::ExactK:
                std::snprintf(buf, sizeof buf, "ExactK(%d)", k);
                return buf;
            case RegimeKind::BoundaryTie:
                std::snprintf(buf, sizeof buf, "BoundaryTie(%.10g)", lower);
                return buf;
            default:
                return to_string(kind);
        }
    }

    auto predicted_interconnections(const RegimePrediction & prediction, int s1, int s2) -> std::pair<int, int>
    {
        if (prediction.kind != RegimeKind::BoundaryTie)
            return range_of(prediction.kind, prediction.k, s1, s2);
        auto lo = range_of(prediction.below, prediction.below_k, s1, s2);
        auto hi = range_of(prediction.above, prediction.above_k, s1, s2);
        return {std::min(lo.first, hi.first), std::max(lo.second, hi.second)};
    }

    auto stable_boundaries(int s1, int s2, const ModelParams & params) -> std::vector<double>
    {
        check_two_group(s1, s2, params, 0.0);
        // y1, y2 increase in s, so the max over both sizes of c/y(s) sits at the smaller group.
        int smin = std::min(s1, s2);
        double delta = params.delta, c = params.cost;
        std::vector<double> result{c / y1(smin, delta)};
        for (int j = 0 ; j < smin ; ++j)
            result.push_back(c / (y2(smin, delta) - j * delta * y3(delta)));
        return result;
    }

    auto efficient_boundaries(int s1, int s2, const ModelParams & params) -> std::vector<double>
    {
        check_two_group(s1, s2, params, 0.0);
        double delta = params.delta, c = params.cost;
        return {
            c * delta / (y1(s1, delta) * y1(s2, delta)),
            2 * c / (y2(s1, delta) + y2(s2, delta) + (s1 + s2 - 4) * delta * y3(delta)),
            c / y3(delta)
        };
    }

    auto classify_two_group_stable(int s1, int s2, const ModelParams & params, double f12) -> RegimePrediction
    {
        check_two_group(s1, s2, params, f12);
        auto boundaries = stable_boundaries(s1, s2, params);
        std::vector<Band> bands{{RegimeKind::Disjoint, 0}, {RegimeKind::Bridge, 1}};
        for (int k = 2 ; k <= std::min(s1, s2) ; ++k)
            bands.push_back({RegimeKind::ExactK, k});
        bands.push_back({RegimeKind::Maximal, s1 * s2});
        return classify(boundaries, bands, f12, params.epsilon);
    }

    auto classify_two_group_efficient(int s1, int s2, const ModelParams & params, double f12) -> RegimePrediction
    {
        check_two_group(s1, s2, params, f12);
        std::vector<Band> bands{
            {RegimeKind::Disjoint, 0}, {RegimeKind::Bridge, 1}, {RegimeKind::Redundant, 0}, {RegimeKind::Maximal, s1 * s2}};
        return classify(efficient_boundaries(s1, s2, params), bands, f12, params.epsilon);
    }

    auto overlap_intervals(int s1, int s2, const ModelParams & params) -> std::vector<std::pair<double, double>>
    {
        check_two_group(s1, s2, params, 0.0);
        double c = params.cost, delta = params.delta;
        int n = s1 + s2, smax = std::max(s1, s2), smin = std::min(s1, s2);
        auto eff = efficient_boundaries(s1, s2, params);
        double high_benefit = static_cast<double>(smax - 3) / static_cast<double>(n - 3);
        if (delta >= high_benefit)
            return {{0.0, eff[0]}, {c / y1(smin, delta), eff[1]}, {c / y3(delta), 1.0}};
        return {{0.0, eff[0]}, {c / y3(delta), 1.0}};
    }

    auto stability_efficiency_overlap(int s1, int s2, const ModelParams & params, double f12) -> bool
    {
        check_two_group(s1, s2, params, f12);
        for (auto [lo, hi] : overlap_intervals(s1, s2, params))
            if (f12 >= lo - params.epsilon && f12 <= hi + params.epsilon)
                return true;
        return false;
    }

    auto redundancy_bounds(int s_alpha, int s_beta, const ModelParams & params) -> RedundancyBounds
    {
        check_two_group(s_alpha, s_beta, params, 0.0);
        int smin = std::min(s_alpha, s_beta);
        return {params.cost / y2(smin, params.delta), params.cost / y3(params.delta)};
    }

    GroupGraph::GroupGraph(int m, const std::vector<std::pair<int, int>> & edges) :
        GroupGraph(m)
    {
        for (auto [a, b] : edges)
            set_edge(a, b, true);
    }

    auto GroupGraph::star(int m, int centre) -> GroupGraph
    {
        GroupGraph result(m);
        for (int a = 0 ; a < m ; ++a)
            if (a != centre)
                result.set_edge(a, centre, true);
        return result;
    }

    auto GroupGraph::ring(const std::vector<int> & order) -> GroupGraph
    {
        GroupGraph result(static_cast<int>(order.size()));
        for (std::size_t t = 0 ; t < order.size() ; ++t)
            result.set_edge(order[t], order[(t + 1) % order.size()], true);
        return result;
    }

    void GroupGraph::set_edge(int a, int b, bool present)
    {
        if (a < 0 || b < 0 || a >= _m || b >= _m || a == b)
            throw InvalidModel{"bad group pair (" + std::to_string(a) + "," + std::to_string(b) + ")"};
        _adj[static_cast<std::size_t>(a) * _m + b] = present;
        _adj[static_cast<std::size_t>(b) * _m + a] = present;
    }

    auto GroupGraph::edges() const -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> result;
        for (int a = 0 ; a < _m ; ++a)
            for (int b = a + 1 ; b < _m ; ++b)
                if (has_edge(a, b))
                    result.emplace_back(a, b);
        return result;
    }

    auto GroupGraph::distances_from(int source) const -> std::vector<int>
    {
        std::vector<int> dist(static_cast<std::size_t>(_m), kUnreachable);
        std::queue<int> queue;
        dist[static_cast<std::size_t>(source)] = 0;
        queue.push(source);
        while (! queue.empty()) {
            int a = queue.front();
            queue.pop();
            for (int b = 0 ; b < _m ; ++b)
                if (has_edge(a, b) && dist[static_cast<std::size_t>(b)] == kUnreachable) {
                    dist[static_cast<std::size_t>(b)] = dist[static_cast<std::size_t>(a)] + 1;
                    queue.push(b);
                }
        }
        return dist;
    }

    auto GroupGraph::connected() const -> bool
    {
        if (_m == 0)
            return true;
        auto dist = distances_from(0);
        return std::none_of(dist.begin(), dist.end(), [] (int d) { return d == kUnreachable; });
    }

    auto group_graph(const Network & network, const GroupPartition & partition) -> GroupGraph
    {
        GroupGraph result(partition.group_count());
        for (auto [i, j] : network.edges())
            if (! partition.same_group(i, j))
                result.set_edge(partition.group_of(i), partition.group_of(j), true);
        return result;
    }

    auto group_edge_gain(const GroupGraph & graph, int alpha, int beta, int from, const CoordinationMatrix & coordination,
        const GroupPartition & partition, const ModelParams & params) -> double
    {
        GroupGraph with = graph, without = graph;
        with.set_edge(alpha, beta, true);
        without.set_edge(alpha, beta, false);
        auto d_with = with.distances_from(from), d_without = without.distances_from(from);
        double total = 0.0;
        for (int lambda = 0 ; lambda < graph.group_count() ; ++lambda) {
            if (lambda == from)
                continue;
            auto l = static_cast<std::size_t>(lambda);
            total += coordination.at(from, lambda)
                * (power(params.delta, d_with[l]) - power(params.delta, d_without[l]))
                * (1.0 + (partition.size_of(lambda) - 1) * params.delta);
        }
        return total;
    }

    auto minimally_connected_sufficient(const GroupGraph & graph, const CoordinationMatrix & coordination,
        const GroupPartition & partition, const ModelParams & params) -> bool
    {
        int m = graph.group_count();
        if (coordination.group_count() != m || partition.group_count() != m)
            throw InvalidModel{"group graph, coordination matrix and partition disagree on the group count"};
        validate(params);
        if (! (params.cost < y3(params.delta)))
            throw RegimeUndefined{"cost is not below y3(delta)"};
        if (! graph.connected())
            throw InvalidModel{"group graph is not connected"};

        double c = params.cost, eps = params.epsilon;
        for (int a = 0 ; a < m ; ++a)
            for (int b = a + 1 ; b < m ; ++b) {
                double gain_a = group_edge_gain(graph, a, b, a, coordination, partition, params);
                double gain_b = group_edge_gain(graph, a, b, b, coordination, partition, params);
                if (graph.has_edge(a, b)) {
                    int smin = std::min(partition.size_of(a), partition.size_of(b));
                    if (! (gain_a > c + eps && gain_b > c + eps && coordination.at(a, b) < c / y2(smin, params.delta) - eps))
                        return false;
                }
                else if (! (gain_a < c - eps || gain_b < c - eps))
                    return false;
            }
        return true;
    }
}
