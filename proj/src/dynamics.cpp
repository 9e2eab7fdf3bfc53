#include <netform/dynamics.hpp>
#include <netform/stability.hpp>
#include <netform/thresholds.hpp>

#include <functional>
#include <limits>
#include <ostream>

namespace netform
{
    auto to_string(Action action) -> std::string
    {
        switch (action) {
            case Action::Added:    return "added";
            case Action::Removed:  return "removed";
            case Action::NoChange: return "none";
        }
        return "?";
    }

    auto UniformPairs::next(int n) -> NodePair
    {
        auto count = static_cast<std::uint64_t>(pair_count(n));
        if (count == 0)
            throw InvalidNetwork{"cannot draw a pair from fewer than two nodes"};
        // 2^64 mod count, computed without overflow
        std::uint64_t excess = (std::numeric_limits<std::uint64_t>::max() % count + 1) % count;
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - excess;  // accept x <= limit
        std::uint64_t x;
        do
            x = _engine();
        while (x > limit);
        return pair_at(n, static_cast<std::size_t>(x % count));
    }

    auto ScriptedPairs::next() -> std::optional<NodePair>
    {
        if (_position >= _script.size())
            return std::nullopt;
        return _script[_position++];
    }

    auto PairSelector::next(int n) -> std::optional<NodePair>
    {
        if (auto * uniform = std::get_if<UniformPairs>(&_source))
            return uniform->next(n);
        return std::get<ScriptedPairs>(_source).next();
    }

    auto step(const Network & network, NodePair pair, const IndividualMatrix & individual, const ModelParams & params)
        -> StepResult
    {
        auto [i, j] = pair;
        auto d = toggle_deltas(network, i, j, individual, params);
        double eps = params.epsilon;
        if (d.present) {
            if (d.gain_i > eps || d.gain_j > eps)
                return {network.without_edge(i, j), Action::Removed};
            return {network, Action::NoChange};
        }
        bool marginal = (d.gain_i > eps && d.gain_j >= -eps) || (d.gain_j > eps && d.gain_i >= -eps);
        if (marginal)
            return {network.with_edge(i, j), Action::Added};
        return {network, Action::NoChange};
    }

    namespace
    {
        using Observer = std::function<void (const StepRecord &, const Network &)>;

        auto run_impl(const Network & start, PairSelector & selector, const Society & society, const RunOptions & options,
            const Observer & observe) -> DynamicsTrace
        {
            if (start.size() != society.node_count())
                throw InvalidNetwork{"start network and society disagree on the node count"};
            if (options.max_steps < 1)
                throw InvalidModel{"max_steps must be at least 1"};

            DynamicsTrace trace;
            Network current = start;
            if (is_pairwise_stable(current, society)) {
                trace.final = current;
                trace.converged = true;
                trace.steps_to_convergence = 0;
                return trace;
            }

            std::size_t last_change = 0, quiet = 0;
            int n = current.size();
            for (std::size_t t = 1 ; t <= options.max_steps ; ++t) {
                auto pair = selector.next(n);
                if (! pair)
                    break;
                auto result = step(current, *pair, society.individual, society.params);
                current = std::move(result.network);
                auto counts = count_connections(current, society.partition);
                StepRecord record{t, *pair, result.action, counts.intra, counts.inter};
                trace.steps.push_back(record);
                if (observe)
                    observe(record, current);

                if (result.action != Action::NoChange) {
                    last_change = t;
                    quiet = 0;
                }
                else
                    ++quiet;

                bool verify = options.convergence_window == 0 || (quiet > 0 && quiet % options.convergence_window == 0);
                if (verify && is_pairwise_stable(current, society)) {
                    trace.converged = true;
                    break;
                }
            }

            if (! trace.converged)
                trace.converged = is_pairwise_stable(current, society);
            if (trace.converged)
                trace.steps_to_convergence = last_change;
            trace.final = std::move(current);
            return trace;
        }
    }

    auto run(const Network & start, PairSelector selector, const Society & society, const RunOptions & options) -> DynamicsTrace
    {
        return run_impl(start, selector, society, options, {});
    }

    auto run_from_invariant_set(const Network & start, PairSelector selector, const Society & society,
        const RunOptions & options) -> DynamicsTrace
    {
        const auto & partition = society.partition;
        if (start.size() != partition.node_count())
            throw InvalidNetwork{"start network and society disagree on the node count"};
        if (! in_invariant_set(start, partition))
            throw InvalidNetwork{"start network has interconnections; it is not in the invariant set"};

        const auto & params = society.params;
        bool guarded = params.cost < y3(params.delta);
        for (int a = 0 ; guarded && a < partition.group_count() ; ++a)
            for (int b = a + 1 ; b < partition.group_count() ; ++b) {
                int smin = std::min(partition.size_of(a), partition.size_of(b));
                if (society.coordination.at(a, b) > params.cost / y1(smin, params.delta) + params.epsilon)
                    guarded = false;
            }

        Observer observe;
        if (guarded)
            observe = [] (const StepRecord & record, const Network &) {
                if (record.inter_count != 0)
                    throw InvariantSetViolation{"interconnection formed at step " + std::to_string(record.index)
                        + " although every coordination value is below the disjoint-cliques bound"};
            };
        return run_impl(start, selector, society, options, observe);
    }

    void write_trace_csv(std::ostream & out, const DynamicsTrace & trace)
    {
        out << "step,i,j,action,intra_count,inter_count\n";
        for (auto & s : trace.steps)
            out << s.index << ',' << s.pair.first << ',' << s.pair.second << ',' << to_string(s.action) << ','
                << s.intra_count << ',' << s.inter_count << '\n';
    }
}
