#pragma once

#include <netform/model.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace netform
{
    enum class Action
    {
        Added,
        Removed,
        NoChange
    };

    auto to_string(Action action) -> std::string;

    /// Draws unordered node pairs uniformly from all C(n,2) pairs.
    ///
    /// Generator contract (part of the trace format): std::mt19937_64 seeded
    /// with the 64-bit seed; each draw takes one 64-bit output x, rejects it
    /// while x >= 2^64 - (2^64 mod C(n,2)), and maps x mod C(n,2) to a pair
    /// through the lexicographic edge index (0,1), (0,2), ..., (n-2,n-1).
    class UniformPairs
    {
        public:
            explicit UniformPairs(std::uint64_t seed) : _engine(seed) {}

            auto next(int n) -> NodePair;

        private:
            std::mt19937_64 _engine;
    };

    /// Replays a fixed list of pairs, then reports exhaustion.
    class ScriptedPairs
    {
        public:
            explicit ScriptedPairs(std::vector<NodePair> script) : _script(std::move(script)) {}

            auto next() -> std::optional<NodePair>;

        private:
            std::vector<NodePair> _script;
            std::size_t _position = 0;
    };

    class PairSelector
    {
        public:
            static auto seeded_uniform(std::uint64_t seed) -> PairSelector { return PairSelector{UniformPairs{seed}}; }
            static auto scripted(std::vector<NodePair> script) -> PairSelector { return PairSelector{ScriptedPairs{std::move(script)}}; }

            /// Next pair to activate, or nothing once a script is used up.
            auto next(int n) -> std::optional<NodePair>;

            auto is_scripted() const -> bool { return std::holds_alternative<ScriptedPairs>(_source); }

        private:
            explicit PairSelector(std::variant<UniformPairs, ScriptedPairs> source) : _source(std::move(source)) {}

            std::variant<UniformPairs, ScriptedPairs> _source;
    };

    struct StepResult
    {
        Network network;
        Action action;
    };

    /// One period of the formation process for the activated pair (i,j).
    /// A non-edge is added when one endpoint gains more than epsilon and the
    /// other gains or is within epsilon of indifferent; an edge is removed when
    /// either endpoint gains more than epsilon by dropping it.
    auto step(const Network & network, NodePair pair, const IndividualMatrix & individual, const ModelParams & params)
        -> StepResult;

    struct StepRecord
    {
        std::size_t index;
        NodePair pair;
        Action action;
        std::size_t intra_count;
        std::size_t inter_count;

        auto operator== (const StepRecord &) const -> bool = default;
    };

    struct DynamicsTrace
    {
        std::vector<StepRecord> steps;
        Network final;
        bool converged = false;
        /// Period after which the network stopped changing, when converged.
        std::optional<std::size_t> steps_to_convergence;
    };

    struct RunOptions
    {
        std::size_t max_steps = 10000;
        /// 0 verifies stability after every period; w > 0 verifies after every
        /// w consecutive NoChange periods. A final check always runs at the end.
        std::size_t convergence_window = 0;
    };

    auto run(const Network & start, PairSelector selector, const Society & society, const RunOptions & options) -> DynamicsTrace;

    class InvariantSetViolation : public std::logic_error
    {
        public:
            using std::logic_error::logic_error;
    };

    /// As run, from a start with no interconnections. When every cross-group
    /// coordination value is at most max_s c/y1(s) and c < y3, each visited
    /// network is checked to stay interconnection-free; a breach throws
    /// InvariantSetViolation.
    auto run_from_invariant_set(const Network & start, PairSelector selector, const Society & society,
        const RunOptions & options) -> DynamicsTrace;

    /// CSV with header step,i,j,action,intra_count,inter_count.
    void write_trace_csv(std::ostream & out, const DynamicsTrace & trace);
}
