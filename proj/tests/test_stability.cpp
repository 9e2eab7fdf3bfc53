#include <doctest.h>
#include <oracle.hpp>

#include <netform/dynamics.hpp>
#include <netform/stability.hpp>
#include <netform/thresholds.hpp>

#include <algorithm>
#include <set>

using namespace netform;

namespace
{
    auto two_groups(int s1, int s2, double f12, ModelParams params = {0.5, 0.2, 1e-9}) -> Society
    {
        return Society{GroupPartition::from_sizes({s1, s2}), CoordinationMatrix::from_upper(2, {f12}), params};
    }

    auto inter_counts(const std::vector<Network> & networks, const GroupPartition & p) -> std::set<std::size_t>
    {
        std::set<std::size_t> out;
        for (auto & e : networks)
            out.insert(count_connections(e, p).inter);
        return out;
    }
}

TEST_CASE("benefit from a single edge")
{
    auto weak = two_groups(3, 5, 0.1);
    auto cliques = disjoint_cliques(weak.partition);
    CHECK_FALSE(benefits_from_edge(cliques, 0, 3, weak.individual, weak.params));
    CHECK_FALSE(benefits_from_edge(cliques, 3, 0, weak.individual, weak.params));

    auto strong = two_groups(3, 5, 0.3);
    CHECK(benefits_from_edge(cliques, 0, 3, strong.individual, strong.params));

    // an intra pair always wants its link once cost is below y3
    std::mt19937_64 rng(4);
    for (int t = 0 ; t < 200 ; ++t) {
        auto e = oracle::random_network(8, 0.4, rng);
        for (int i = 0 ; i < 3 ; ++i)
            for (int j = i + 1 ; j < 3 ; ++j)
                CHECK(benefits_from_edge(e, i, j, weak.individual, weak.params));
    }
}

TEST_CASE("pairwise stability examples")
{
    Society one{GroupPartition::from_sizes({3}), CoordinationMatrix::uniform(1, 0.0), {0.5, 0.2, 1e-9}};
    CHECK(is_pairwise_stable(Network::complete(3), one));
    CHECK_FALSE(is_pairwise_stable(Network::from_edges(3, {{0, 1}, {1, 2}}), one));

    auto weak = two_groups(3, 5, 0.15);
    CHECK(is_pairwise_stable(disjoint_cliques(weak.partition), weak));
}

TEST_CASE("pairwise stability agrees with the definition-level reference")
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0 ; t < 1500 ; ++t) {
        std::vector<int> sizes = t % 3 == 0 ? std::vector<int>{3} : std::vector<int>{3, 3 + static_cast<int>(rng() % 2)};
        double f = t % 7 == 0 ? 0.4 : u(rng);
        ModelParams params{t % 7 == 0 ? 0.5 : 0.1 + 0.8 * u(rng), t % 7 == 0 ? 0.2 : 0.3 * u(rng) + 0.01, 1e-9};
        Society society{GroupPartition::from_sizes(sizes),
            sizes.size() == 1 ? CoordinationMatrix::uniform(1, 0.0) : CoordinationMatrix::from_upper(2, {f}), params};
        auto fhat = sizes.size() == 1 ? oracle::kronecker(sizes, {{1.0}}) : oracle::kronecker(sizes, oracle::two_group_f(f));
        auto e = t % 5 == 0 ? disjoint_cliques(society.partition) : oracle::random_network(society.node_count(), 0.5, rng);
        if (t % 5 == 0 && sizes.size() == 2)
            e.add_edge(0, 3);
        CHECK(is_pairwise_stable(e, society) == oracle::stable(e, fhat, params.delta, params.cost, params.epsilon));
    }
}

TEST_CASE("defeat relation")
{
    Society one{GroupPartition::from_sizes({3}), CoordinationMatrix::uniform(1, 0.0), {0.5, 0.2, 1e-9}};
    auto path = Network::from_edges(3, {{0, 1}, {1, 2}});
    auto k3 = Network::complete(3);
    CHECK(defeats(k3, path, one.individual, one.params));
    CHECK_FALSE(defeats(k3.without_edge(0, 1), k3, one.individual, one.params));
    CHECK_FALSE(defeats(path, k3, one.individual, one.params));
    CHECK_THROWS_AS(defeats(k3, k3, one.individual, one.params), InvalidNetwork);
    CHECK_THROWS_AS(defeats(k3, Network(3), one.individual, one.params), InvalidNetwork);

    // a network defeated by a neighbour is never stable
    auto society = two_groups(3, 3, 0.35);
    std::mt19937_64 rng(9);
    int defeated = 0;
    for (int t = 0 ; t < 500 ; ++t) {
        auto e = oracle::random_network(6, 0.5, rng);
        auto [i, j] = pair_at(6, rng() % 15);
        auto other = e.has_edge(i, j) ? e.without_edge(i, j) : e.with_edge(i, j);
        if (defeats(other, e, society.individual, society.params)) {
            ++defeated;
            CHECK_FALSE(is_pairwise_stable(e, society));
        }
    }
    CHECK(defeated > 0);
}

TEST_CASE("enumeration over the interconnection space")
{
    auto at = [] (double f) {
        auto s = two_groups(3, 5, f);
        return std::pair{enumerate_stable(SearchSpace::interconnection(s.partition), s), s.partition};
    };

    auto [disjoint, p] = at(0.1);
    REQUIRE(disjoint.size() == 1);
    CHECK(disjoint.front() == disjoint_cliques(p));

    auto [bridge, p2] = at(0.3);
    CHECK(! bridge.empty());
    CHECK(inter_counts(bridge, p2) == std::set<std::size_t>{1});

    auto [maximal, p3] = at(0.85);
    REQUIRE(maximal.size() == 1);
    CHECK(maximal.front() == Network::complete(8));
    CHECK(std::is_sorted(bridge.begin(), bridge.end()));
}

TEST_CASE("interconnection-space enumeration still judges intra deviations")
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0 ; t < 12 ; ++t) {
        double f = u(rng), delta = 0.2 + 0.6 * u(rng), cost = 0.35 * u(rng) + 0.01;
        auto society = two_groups(3, 3, f, {delta, cost, 1e-9});
        auto space = SearchSpace::interconnection(society.partition);
        auto stable = enumerate_stable(space, society, 1);
        std::vector<Network> expected;
        auto fhat = oracle::kronecker({3, 3}, oracle::two_group_f(f));
        for (std::uint64_t b = 0 ; b < space.cardinality() ; ++b) {
            auto e = space.network_at(b);
            if (oracle::stable(e, fhat, delta, cost, 1e-9))
                expected.push_back(e);
        }
        CHECK(stable == expected);
    }
}

TEST_CASE("full and interconnection spaces give the same stable sets when cost is below y3")
{
    for (auto [s1, s2] : {std::pair{3, 3}, std::pair{3, 4}})
        for (double f : {0.1, 0.3, 0.5, 0.9}) {
            auto society = two_groups(s1, s2, f, {0.5, 0.2, 1e-9});
            auto full = enumerate_stable(SearchSpace::full(s1 + s2), society);
            auto inter = enumerate_stable(SearchSpace::interconnection(society.partition), society);
            CHECK(full == inter);
            for (auto & e : full)
                CHECK(groups_are_cliques(e, society.partition));
        }
}

TEST_CASE("enumeration does not depend on the worker count")
{
    auto society = two_groups(3, 3, 0.45);
    auto space = SearchSpace::full(6);
    auto one = enumerate_stable(space, society, 1);
    CHECK(enumerate_stable(space, society, 3) == one);
    CHECK(enumerate_stable(space, society, 8) == one);
}

TEST_CASE("caps are enforced")
{
    CHECK_THROWS_AS(SearchSpace::full(8), CapExceeded);
    CHECK_NOTHROW(SearchSpace::full(8, 8));
    auto big = GroupPartition::from_sizes({5, 5});
    try {
        (void) SearchSpace::interconnection(big);
        FAIL("expected CapExceeded");
    }
    catch (const CapExceeded & e) {
        CHECK(e.required == 25);
    }
}

TEST_CASE("price of anarchy")
{
    Society one{GroupPartition::from_sizes({4}), CoordinationMatrix::uniform(1, 0.0), {0.5, 0.2, 1e-9}};
    auto single = price_of_anarchy(SearchSpace::full(4), one);
    CHECK(single.value == doctest::Approx(1.0));
    CHECK(single.stable_count == 1);

    auto overlap = two_groups(3, 5, 0.05);
    CHECK(price_of_anarchy(SearchSpace::interconnection(overlap.partition), overlap).value == doctest::Approx(1.0).epsilon(1e-12));
    auto gap = two_groups(3, 5, 0.1);
    auto poa = price_of_anarchy(SearchSpace::interconnection(gap.partition), gap);
    CHECK(poa.value > 1.0);
    CHECK(poa.space == "inter");

    Society costly{GroupPartition::from_sizes({3}), CoordinationMatrix::uniform(1, 0.0), {0.5, 0.6, 1e-9}};
    CHECK_THROWS_AS(price_of_anarchy(SearchSpace::full(3), costly), UndefinedRatio);

    // with cost above y3 no member of the interconnection space is stable
    Society loose{GroupPartition::from_sizes({3, 3}), CoordinationMatrix::uniform(2, 0.0), {0.5, 0.3, 1e-9}};
    CHECK_THROWS_AS(price_of_anarchy(SearchSpace::interconnection(loose.partition), loose), NoStableNetwork);
}
