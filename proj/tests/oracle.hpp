#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the Network container: distances come from
// Floyd-Warshall or path enumeration, matrices from a Kronecker product.

#include <netform/model.hpp>
#include <netform/network.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace oracle
{
    using Matrix = std::vector<std::vector<double>>;

    inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

    inline auto floyd(const netform::Network & e) -> std::vector<std::vector<int>>
    {
        int n = e.size();
        std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
        for (int i = 0 ; i < n ; ++i) {
            d[i][i] = 0;
            for (int j = 0 ; j < n ; ++j)
                if (i != j && e.has_edge(std::min(i, j), std::max(i, j)))
                    d[i][j] = 1;
        }
        for (int k = 0 ; k < n ; ++k)
            for (int i = 0 ; i < n ; ++i)
                for (int j = 0 ; j < n ; ++j)
                    if (d[i][k] + d[k][j] < d[i][j])
                        d[i][j] = d[i][k] + d[k][j];
        return d;
    }

    /// Shortest path length by enumerating every simple path from i; tiny n only.
    inline auto path_enumeration_distance(const netform::Network & e, int i, int j) -> int
    {
        int n = e.size(), best = kInf;
        std::vector<bool> on(n, false);
        auto walk = [&] (auto && self, int at, int length) -> void {
            if (at == j) {
                best = std::min(best, length);
                return;
            }
            on[at] = true;
            for (int k = 0 ; k < n ; ++k)
                if (! on[k] && k != at && e.has_edge(std::min(at, k), std::max(at, k)))
                    self(self, k, length + 1);
            on[at] = false;
        };
        walk(walk, i, 0);
        return best;
    }

    /// F expanded as F ⊗ J(s) with the diagonal zeroed, built block by block.
    inline auto kronecker(const std::vector<int> & sizes, const Matrix & f) -> Matrix
    {
        int n = 0;
        for (int s : sizes)
            n += s;
        Matrix out(n, std::vector<double>(n, 0.0));
        int row = 0;
        for (std::size_t a = 0 ; a < sizes.size() ; ++a) {
            for (int r = 0 ; r < sizes[a] ; ++r) {
                int col = 0;
                for (std::size_t b = 0 ; b < sizes.size() ; ++b)
                    for (int t = 0 ; t < sizes[b] ; ++t, ++col)
                        out[row][col] = f[a][b];
                ++row;
            }
        }
        for (int i = 0 ; i < n ; ++i)
            out[i][i] = 0.0;
        return out;
    }

    inline auto two_group_f(double f12) -> Matrix
    {
        return {{1.0, f12}, {f12, 1.0}};
    }

    inline auto payoff(const netform::Network & e, int i, const Matrix & fhat, double delta, double cost) -> double
    {
        auto d = floyd(e);
        double total = 0.0;
        int degree = 0;
        for (int k = 0 ; k < e.size() ; ++k) {
            if (k == i)
                continue;
            if (d[i][k] < kInf)
                total += fhat[i][k] * std::pow(delta, d[i][k]);
            if (d[i][k] == 1)
                ++degree;
        }
        return total - degree * cost;
    }

    inline auto welfare(const netform::Network & e, const Matrix & fhat, double delta, double cost) -> double
    {
        double total = 0.0;
        for (int i = 0 ; i < e.size() ; ++i)
            total += payoff(e, i, fhat, delta, cost);
        return total;
    }

    /// Definition-level pairwise stability with explicit network copies.
    inline auto stable(const netform::Network & e, const Matrix & fhat, double delta, double cost, double eps) -> bool
    {
        int n = e.size();
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j) {
                auto with = e.with_edge(i, j), without = e.without_edge(i, j);
                double gi = payoff(with, i, fhat, delta, cost) - payoff(without, i, fhat, delta, cost);
                double gj = payoff(with, j, fhat, delta, cost) - payoff(without, j, fhat, delta, cost);
                if (e.has_edge(i, j)) {
                    if (gi < -eps || gj < -eps)
                        return false;
                }
                else if ((gi > eps && gj >= -eps) || (gj > eps && gi >= -eps))
                    return false;
            }
        return true;
    }

    inline auto random_network(int n, double p, std::mt19937_64 & rng) -> netform::Network
    {
        std::bernoulli_distribution coin(p);
        netform::Network e(n);
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                if (coin(rng))
                    e.add_edge(i, j);
        return e;
    }

    inline auto inter_count(const netform::Network & e, const std::vector<int> & group) -> int
    {
        int count = 0;
        for (auto [i, j] : e.edges())
            count += group[i] != group[j];
        return count;
    }
}
