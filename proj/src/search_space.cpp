#include <netform/search_space.hpp>

#include <algorithm>
#include <thread>

namespace netform
{
    SearchSpace::SearchSpace(Kind kind, Network base, std::vector<NodePair> free) :
        _kind(kind),
        _base(std::move(base)),
        _free(std::move(free))
    {
    }

    auto SearchSpace::full(int n, int max_n) -> SearchSpace
    {
        if (n > max_n)
            throw CapExceeded{"full graph space on " + std::to_string(n) + " nodes exceeds the cap of "
                + std::to_string(max_n) + " nodes; rerun with a cap of at least " + std::to_string(n), n};
        if (pair_count(n) > 62)
            throw CapExceeded{"full graph space on " + std::to_string(n) + " nodes cannot be indexed", n};
        std::vector<NodePair> free;
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                free.emplace_back(i, j);
        return SearchSpace{Kind::Full, Network(n), std::move(free)};
    }

    auto SearchSpace::interconnection(const GroupPartition & partition, int max_free_pairs) -> SearchSpace
    {
        int n = partition.node_count();
        std::vector<NodePair> free;
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                if (! partition.same_group(i, j))
                    free.emplace_back(i, j);
        auto count = static_cast<int>(free.size());
        if (count > max_free_pairs)
            throw CapExceeded{"interconnection space has " + std::to_string(count) + " free cross-group pairs, above the cap of "
                + std::to_string(max_free_pairs) + "; rerun with a cap of at least " + std::to_string(count), count};
        if (count > 62)
            throw CapExceeded{"interconnection space with " + std::to_string(count) + " free pairs cannot be indexed", count};
        return SearchSpace{Kind::Interconnection, disjoint_cliques(partition), std::move(free)};
    }

    auto SearchSpace::network_at(std::uint64_t index) const -> Network
    {
        Network result = _base;
        for (std::size_t t = 0 ; index ; ++t, index >>= 1)
            if (index & 1u)
                result.add_edge(_free[t].first, _free[t].second);
        return result;
    }

    auto default_workers() -> unsigned
    {
        return std::max(1u, std::thread::hardware_concurrency());
    }

    void parallel_chunks(std::uint64_t count, unsigned workers,
        const std::function<void (std::uint64_t, std::uint64_t, unsigned)> & visit)
    {
        if (workers == 0)
            workers = default_workers();
        if (workers == 1 || count < 4096) {
            visit(0, count, 0);
            return;
        }
        std::vector<std::thread> threads;
        std::uint64_t chunk = (count + workers - 1) / workers;
        for (unsigned w = 0 ; w < workers ; ++w) {
            std::uint64_t begin = std::min(count, w * chunk), end = std::min(count, begin + chunk);
            threads.emplace_back([&visit, begin, end, w] { visit(begin, end, w); });
        }
        for (auto & t : threads)
            t.join();
    }
}
