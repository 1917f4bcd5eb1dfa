#include "cslab/rimhook.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "cslab/csf.hpp"
#include "cslab/errors.hpp"

namespace cslab {

namespace {

// Peels the hook through the last row's first cell, once per possible top row.
void peel(const std::vector<int>& shape, std::vector<std::vector<Cell>>& hooks, int even_spans,
          std::vector<SpecialRimHookTabloid>& out, const Partition& full) {
    const int ell = static_cast<int>(shape.size());
    if (ell == 0) {
        SpecialRimHookTabloid t;
        t.shape = full;
        t.hooks.assign(hooks.rbegin(), hooks.rend());
        std::vector<int> sizes;
        for (const auto& h : t.hooks)
            sizes.push_back(static_cast<int>(h.size()));
        t.content = Composition(sizes);
        t.sign_exponent = even_spans;
        out.push_back(std::move(t));
        return;
    }
    for (int r = ell - 1; r >= 0; --r) {
        std::vector<Cell> cells;
        for (int c = 0; c < shape[static_cast<std::size_t>(ell - 1)]; ++c)
            cells.emplace_back(ell - 1, c);
        for (int i = ell - 2; i >= r; --i)
            for (int c = shape[static_cast<std::size_t>(i + 1)] - 1; c < shape[static_cast<std::size_t>(i)]; ++c)
                cells.emplace_back(i, c);
        std::vector<int> rest(shape.begin(), shape.begin() + r);
        for (int i = r; i < ell - 1; ++i)
            if (shape[static_cast<std::size_t>(i + 1)] > 1)
                rest.push_back(shape[static_cast<std::size_t>(i + 1)] - 1);
        const int span = ell - r;
        hooks.push_back(std::move(cells));
        peel(rest, hooks, even_spans + (span % 2 == 0 ? 1 : 0), out, full);
        hooks.pop_back();
    }
}

std::mutex g_srht_mutex;
std::unordered_map<Partition, std::vector<SpecialRimHookTabloid>, PartitionHash> g_srht_cache;

}  // namespace

std::vector<SpecialRimHookTabloid> enumerate_srht(const Partition& lambda) {
    if (lambda.size() > kSrhtMaxSize || lambda.length() > kSrhtMaxLength)
        throw TooLarge("enumerate_srht: shape " + lambda.to_string() + " exceeds |λ| <= " +
                       std::to_string(kSrhtMaxSize) + ", ℓ(λ) <= " + std::to_string(kSrhtMaxLength));
    {
        std::lock_guard lock(g_srht_mutex);
        if (auto it = g_srht_cache.find(lambda); it != g_srht_cache.end())
            return it->second;
    }
    std::vector<SpecialRimHookTabloid> out;
    std::vector<std::vector<Cell>> hooks;
    peel(lambda.parts(), hooks, 0, out, lambda);
    std::lock_guard lock(g_srht_mutex);
    return g_srht_cache.emplace(lambda, std::move(out)).first->second;
}

std::map<Partition, int, RevLexLess> srht_signed_contents(const Partition& lambda) {
    std::map<Partition, int, RevLexLess> out;
    for (const auto& t : enumerate_srht(lambda))
        out[t.content.sorted()] += t.sign();
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

SchurCoefficientTrace schur_coefficient(const Graph& g, const Partition& lambda, int block_cap) {
    if (lambda.size() != g.order())
        throw DegreeMismatch("schur_coefficient: " + lambda.to_string() + " is not a partition of " +
                             std::to_string(g.order()));
    SchurCoefficientTrace trace;
    trace.shape = lambda;
    trace.total = 0;
    std::map<Partition, Integer, RevLexLess> counts;
    for (const auto& t : enumerate_srht(lambda)) {
        const Partition type = t.content.sorted();
        auto it = counts.find(type);
        if (it == counts.end())
            it = counts.emplace(type, count_stable_partitions(g, type, block_cap).semi_ordered_count).first;
        if (it->second == 0) {
            ++trace.unrealizable;
            continue;
        }
        trace.tabloids.push_back({t.content, t.sign(), it->second});
        trace.total += t.sign() * it->second;
    }
    return trace;
}

SymFunc schur_expansion_solve(const Graph& g, int max_vertices) {
    if (g.order() > max_vertices)
        throw TooLarge("schur_expansion_solve: more than " + std::to_string(max_vertices) + " vertices");
    return change_basis(csf_via_stable_partitions(g), Basis::S, std::max(max_vertices, default_degree_cap()));
}

}  // namespace cslab
