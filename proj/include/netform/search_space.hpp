#pragma once

#include <netform/model.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace netform
{
    class CapExceeded : public std::runtime_error
    {
        public:
            CapExceeded(const std::string & what, int required_cap) :
                std::runtime_error(what),
                required(required_cap)
            {
            }

            int required;  ///< the smallest cap setting that would admit the request
    };

    inline constexpr int kDefaultFullCap = 7;
    inline constexpr int kDefaultFreePairCap = 24;

    /// A finite set of networks on n nodes: every subset of `free_pairs`
    /// added to a fixed `base` network. Index b of a member sets free pair t
    /// iff bit t of b is set; free pairs are kept in lexicographic order so
    /// ascending index is ascending canonical bitmask order.
    class SearchSpace
    {
        public:
            enum class Kind
            {
                Full,
                Interconnection
            };

            /// All 2^C(n,2) networks. Throws CapExceeded when n > max_n.
            static auto full(int n, int max_n = kDefaultFullCap) -> SearchSpace;

            /// Every intra-group pair present, cross pairs free. Throws
            /// CapExceeded when there are more than max_free_pairs cross pairs.
            static auto interconnection(const GroupPartition & partition, int max_free_pairs = kDefaultFreePairCap) -> SearchSpace;

            auto kind() const -> Kind { return _kind; }
            auto label() const -> std::string { return _kind == Kind::Full ? "full" : "inter"; }
            auto node_count() const -> int { return _base.size(); }
            auto base() const -> const Network & { return _base; }
            auto free_pairs() const -> const std::vector<NodePair> & { return _free; }
            auto cardinality() const -> std::uint64_t { return std::uint64_t{1} << _free.size(); }

            auto network_at(std::uint64_t index) const -> Network;

        private:
            SearchSpace(Kind kind, Network base, std::vector<NodePair> free);

            Kind _kind;
            Network _base;
            std::vector<NodePair> _free;
    };

    /// Visits every index of the space in contiguous chunks, one chunk per
    /// worker. `visit(begin, end, worker)` must only touch worker-local state.
    void parallel_chunks(std::uint64_t count, unsigned workers,
        const std::function<void (std::uint64_t, std::uint64_t, unsigned)> & visit);

    /// Worker count used when callers pass 0: the hardware concurrency, at least 1.
    auto default_workers() -> unsigned;
}
