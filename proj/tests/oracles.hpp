#pragma once

// Brute-force reference computations, deliberately independent of the library algorithms.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "cslab/graph.hpp"
#include "cslab/partition.hpp"

namespace oracle {

using cslab::Graph;
using cslab::Integer;
using cslab::Partition;

/// p(n) by Euler's pentagonal number recurrence.
inline std::vector<Integer> partition_numbers(int max_n) {
    std::vector<Integer> p(static_cast<std::size_t>(max_n) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        Integer total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n)
                break;
            const int sign = (k % 2) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n)
                total += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = total;
    }
    return p;
}

inline bool semigroup_brute(int k, int n) {
    for (int x = 0; x <= n; ++x)
        for (int y = 0; y <= n; ++y)
            if (x * k + y * (k + 1) == n)
                return true;
    return false;
}

/// Every set partition of {0..n-1}, as block label per vertex (restricted growth strings).
inline void for_each_set_partition(int n, const std::function<void(const std::vector<int>&, int)>& visit) {
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int v, int blocks) {
        if (v == n) {
            visit(label, blocks);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            label[static_cast<std::size_t>(v)] = b;
            rec(v + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
}

/// a_λ for every type by filtering all set partitions.
inline std::map<Partition, Integer, cslab::RevLexLess> stable_partition_counts(const Graph& g) {
    std::map<Partition, Integer, cslab::RevLexLess> out;
    for_each_set_partition(g.order(), [&](const std::vector<int>& label, int blocks) {
        for (const auto& [u, v] : g.edges())
            if (label[static_cast<std::size_t>(u)] == label[static_cast<std::size_t>(v)])
                return;
        std::vector<int> sizes(static_cast<std::size_t>(blocks), 0);
        for (int b : label)
            ++sizes[static_cast<std::size_t>(b)];
        out[Partition::from_unsorted(sizes)] += 1;
    });
    return out;
}

/// Tuples (B_1, ..., B_l) of disjoint stable sets covering V with |B_i| = λ_i.
inline Integer semi_ordered_brute(const Graph& g, const Partition& lambda) {
    const int n = g.order();
    Integer count = 0;
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<int> room = lambda.parts();
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            count += 1;
            return;
        }
        for (std::size_t b = 0; b < room.size(); ++b) {
            if (room[b] == 0)
                continue;
            bool ok = true;
            for (int w : g.neighbors(v))
                if (w < v && label[static_cast<std::size_t>(w)] == static_cast<int>(b))
                    ok = false;
            if (!ok)
                continue;
            --room[b];
            label[static_cast<std::size_t>(v)] = static_cast<int>(b);
            rec(v + 1);
            ++room[b];
            label[static_cast<std::size_t>(v)] = -1;
        }
    };
    rec(0);
    return count;
}

/// Number of proper colorings with k colors, by exhaustive assignment.
inline Integer proper_colorings(const Graph& g, int k) {
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    Integer count = 0;
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            count += 1;
            return;
        }
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (w < v && color[static_cast<std::size_t>(w)] == c)
                    ok = false;
            if (!ok)
                continue;
            color[static_cast<std::size_t>(v)] = c;
            rec(v + 1);
        }
    };
    rec(0);
    return count;
}

/// [m_λ] X_G: proper colorings using color i exactly λ_i times.
inline Integer monomial_coefficient_brute(const Graph& g, const Partition& lambda) {
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    std::vector<int> room = lambda.parts();
    Integer count = 0;
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            count += 1;
            return;
        }
        for (std::size_t c = 0; c < room.size(); ++c) {
            if (room[c] == 0)
                continue;
            bool ok = true;
            for (int w : g.neighbors(v))
                if (w < v && color[static_cast<std::size_t>(w)] == static_cast<int>(c))
                    ok = false;
            if (!ok)
                continue;
            --room[c];
            color[static_cast<std::size_t>(v)] = static_cast<int>(c);
            rec(v + 1);
            ++room[c];
        }
    };
    rec(0);
    return count;
}

/// Polynomials in a fixed number of variables: exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, Integer>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    return out;
}

/// Explicit e_k(x_1..x_vars).
inline Poly elementary(int k, int vars) {
    Poly out;
    for (unsigned mask = 0; mask < (1U << vars); ++mask)
        if (__builtin_popcount(mask) == k) {
            std::vector<int> e(static_cast<std::size_t>(vars), 0);
            for (int i = 0; i < vars; ++i)
                e[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
            out[e] += 1;
        }
    return out;
}

/// Explicit p_k(x_1..x_vars).
inline Poly power_sum(int k, int vars) {
    Poly out;
    for (int i = 0; i < vars; ++i) {
        std::vector<int> e(static_cast<std::size_t>(vars), 0);
        e[static_cast<std::size_t>(i)] = k;
        out[e] += 1;
    }
    return out;
}

/// Explicit monomial symmetric polynomial m_λ(x_1..x_vars).
inline Poly monomial(const Partition& lambda, int vars) {
    Poly out;
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    for (int i = 0; i < lambda.length() && i < vars; ++i)
        e[static_cast<std::size_t>(i)] = lambda[i];
    if (lambda.length() > vars)
        return out;
    std::sort(e.begin(), e.end());
    do {
        out[e] = 1;
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

inline Poly product(const std::vector<Poly>& factors, int vars) {
    Poly acc{{std::vector<int>(static_cast<std::size_t>(vars), 0), Integer(1)}};
    for (const auto& f : factors)
        acc = poly_mul(acc, f);
    return acc;
}

/// Coefficient of x^λ (λ padded with zeros), i.e. [m_λ] of a symmetric polynomial.
inline Integer coefficient_of(const Poly& p, const Partition& lambda, int vars) {
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    for (int i = 0; i < lambda.length(); ++i)
        e[static_cast<std::size_t>(i)] = lambda[i];
    auto it = p.find(e);
    return it == p.end() ? Integer(0) : it->second;
}

/// Semistandard tableaux of shape λ and content μ, by filling cells row by row.
inline Integer ssyt_count(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        return 0;
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda[r]; ++c)
            cells.emplace_back(r, c);
    std::vector<std::vector<int>> t(static_cast<std::size_t>(lambda.length()));
    for (int r = 0; r < lambda.length(); ++r)
        t[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda[r]), 0);
    std::vector<int> room = mu.parts();
    Integer count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            count += 1;
            return;
        }
        const auto [r, c] = cells[idx];
        for (int v = 1; v <= mu.length(); ++v) {
            if (room[static_cast<std::size_t>(v - 1)] == 0)
                continue;
            if (c > 0 && t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] > v)
                continue;
            if (r > 0 && t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] >= v)
                continue;
            t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            --room[static_cast<std::size_t>(v - 1)];
            rec(idx + 1);
            ++room[static_cast<std::size_t>(v - 1)];
        }
    };
    rec(0);
    return count;
}

/// Connected partition of the given type, by filtering all set partitions.
inline bool connected_partition_brute(const Graph& g, const Partition& type) {
    bool found = false;
    for_each_set_partition(g.order(), [&](const std::vector<int>& label, int blocks) {
        if (found)
            return;
        std::vector<int> sizes(static_cast<std::size_t>(blocks), 0);
        for (int b : label)
            ++sizes[static_cast<std::size_t>(b)];
        if (!(Partition::from_unsorted(sizes) == type))
            return;
        for (int b = 0; b < blocks; ++b) {
            std::vector<int> members;
            for (int v = 0; v < g.order(); ++v)
                if (label[static_cast<std::size_t>(v)] == b)
                    members.push_back(v);
            std::vector<int> seen{members[0]};
            for (std::size_t i = 0; i < seen.size(); ++i)
                for (int w : g.neighbors(seen[i]))
                    if (label[static_cast<std::size_t>(w)] == b && std::find(seen.begin(), seen.end(), w) == seen.end())
                        seen.push_back(w);
            if (seen.size() != members.size())
                return;
        }
        found = true;
    });
    return found;
}

}  // namespace oracle
