#include "cslab/csf.hpp"

#include <mutex>
#include <numeric>

#include "cslab/errors.hpp"

namespace cslab {

std::string route_name(CsfRoute route) {
    switch (route) {
    case CsfRoute::StableM: return "stable-m";
    case CsfRoute::EdgeP: return "edge-p";
    case CsfRoute::TripleDeletion: return "triple-deletion";
    case CsfRoute::FamilyRecurrence: return "family-recurrence";
    }
    return "?";
}

CsfRoute parse_route(std::string_view text) {
    if (text == "stable-m")
        return CsfRoute::StableM;
    if (text == "edge-p")
        return CsfRoute::EdgeP;
    if (text == "triple-deletion")
        return CsfRoute::TripleDeletion;
    if (text == "family-recurrence")
        return CsfRoute::FamilyRecurrence;
    throw BadSpec("unknown route '" + std::string(text) + "'");
}

SymFunc csf_via_stable_partitions(const Graph& g) {
    if (g.order() > kStableRouteMaxVertices)
        throw TooLarge("stable-partition route: more than " + std::to_string(kStableRouteMaxVertices) + " vertices");
    SymFunc out(Basis::M, g.order());
    for (const auto& [type, count] : enumerate_stable_partitions(g))
        out.add_term(type, Rational(count * factorials(type).multiplicity_factorial));
    return out;
}

SymFunc csf_via_edge_subsets(const Graph& g) {
    if (g.edge_count() > kEdgeRouteMaxEdges)
        throw TooLarge("edge-subset route: more than " + std::to_string(kEdgeRouteMaxEdges) + " edges");
    const int n = g.order();
    const auto& edges = g.edges();
    const std::size_t m = edges.size();
    std::map<Partition, Integer, RevLexLess> counts;
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<int> sizes;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
        std::iota(parent.begin(), parent.end(), 0);
        for (std::size_t e = 0; e < m; ++e)
            if ((subset >> e) & 1U) {
                int a = find(edges[e].first), b = find(edges[e].second);
                if (a != b)
                    parent[static_cast<std::size_t>(a)] = b;
            }
        sizes.assign(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            ++sizes[static_cast<std::size_t>(find(v))];
        Integer& slot = counts[Partition::from_unsorted(sizes)];
        if (std::popcount(subset) % 2)
            slot -= 1;
        else
            slot += 1;
    }
    SymFunc out(Basis::P, n);
    for (const auto& [type, c] : counts)
        if (c != 0)
            out.add_term(type, Rational(c));
    return out;
}

// ---------------------------------------------------------------- paths

namespace {

std::mutex g_path_mutex;
std::vector<SymFunc> g_path_cache;

SymFunc e_times(const SymFunc& f, const Partition& index, const Rational& scalar) {
    return multiply(SymFunc::unit(Basis::E, index, scalar), f);
}

}  // namespace

SymFunc path_csf_e(int n, int cap) {
    if (n < 0)
        throw BadSpec("path length must be nonnegative");
    if (n > cap)
        throw TooLarge("path recurrence: degree " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    std::lock_guard lock(g_path_mutex);
    if (g_path_cache.empty())
        g_path_cache.push_back(SymFunc::one(Basis::E));
    while (static_cast<int>(g_path_cache.size()) <= n) {
        const int m = static_cast<int>(g_path_cache.size());
        SymFunc next = SymFunc::unit(Basis::E, Partition{m});
        for (int k = 2; k <= m; ++k)
            next += e_times(g_path_cache[static_cast<std::size_t>(m - k)], Partition{k}, Rational(k - 1));
        g_path_cache.push_back(std::move(next));
    }
    return g_path_cache[static_cast<std::size_t>(n)];
}

Integer path_closed_form_coefficient(const Partition& lambda, int d) {
    if (lambda.size() != d)
        throw DegreeMismatch("path_closed_form_coefficient: partition size differs from d");
    const MultiplicityForm form = MultiplicityForm::of(lambda);
    const int ell = lambda.length();
    auto multinomial = [](int total, const std::map<int, int>& mult) {
        Integer value = factorial(total);
        for (const auto& [part, a] : mult)
            value /= factorial(a);
        return value;
    };
    auto power = [](int base, int exp) {
        Integer out;
        mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
        return out;
    };
    Integer first = multinomial(ell, form.mult);
    for (const auto& [j, a] : form.mult)
        first *= power(j - 1, a);
    Integer second = 0;
    for (const auto& [i, ai] : form.mult) {
        std::map<int, int> reduced = form.mult;
        reduced[i] -= 1;
        Integer term = multinomial(ell - 1, reduced) * power(i - 1, ai - 1);
        for (const auto& [j, aj] : form.mult)
            if (j != i && j != 2)
                term *= power(j - 1, aj);
        second += term;
    }
    return first + second;
}

// ---------------------------------------------------------------- triple deletion

Graph triple_graph(const Graph& g, const StableTriple& t, EdgeSet3 s) {
    const int n = g.order();
    for (int x : {t.u, t.v, t.w})
        if (x < 0 || x >= n)
            throw NotStableTriple("triple vertex out of range");
    if (t.u == t.v || t.v == t.w || t.u == t.w)
        throw NotStableTriple("triple vertices must be distinct");
    if (g.adjacent(t.u, t.v) || g.adjacent(t.v, t.w) || g.adjacent(t.u, t.w))
        throw NotStableTriple("{" + std::to_string(t.u) + "," + std::to_string(t.v) + "," + std::to_string(t.w) +
                              "} is not stable");
    std::vector<Edge> extra;
    if (s & 1U)
        extra.emplace_back(t.u, t.v);
    if (s & 2U)
        extra.emplace_back(t.v, t.w);
    if (s & 4U)
        extra.emplace_back(t.w, t.u);
    return g.with_edges(extra);
}

SymFunc triple_deletion(const Graph& g, const StableTriple& t, EdgeSet3 s, const CsfFunction& base) {
    auto X = [&](EdgeSet3 set) { return base(triple_graph(g, t, set)); };
    constexpr EdgeSet3 e1 = 1, e2 = 2, e3 = 4;
    switch (s & 7U) {
    case e1 | e2: return X(e1) + X(e2 | e3) - X(e3);
    case e2 | e3: return X(e2) + X(e1 | e3) - X(e1);
    case e1 | e3: return X(e3) + X(e1 | e2) - X(e2);
    // X_{123} = X_{12} + X_{23} - X_2 and the two rewritings above collapse to this.
    case e1 | e2 | e3: return X(e2 | e3) + X(e1 | e3) - X(e3);
    default: return X(s & 7U);
    }
}

TripleDeletionCheck verify_triple_deletion(const Graph& g, const StableTriple& t, const CsfFunction& base) {
    std::vector<SymFunc> x;
    for (EdgeSet3 s = 0; s < 8; ++s)
        x.push_back(base(triple_graph(g, t, s)));
    TripleDeletionCheck check;
    check.first_identity = x[3] == x[1] + x[6] - x[4];
    check.second_identity = x[7] == x[3] + x[6] - x[2];
    check.rewriting_matches = true;
    for (EdgeSet3 s = 0; s < 8; ++s)
        if (!(triple_deletion(g, t, s, base) == x[s]))
            check.rewriting_matches = false;
    return check;
}

std::optional<StableTriple> find_stable_triple(const Graph& g) {
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v))
                continue;
            for (int w = v + 1; w < n; ++w)
                if (!g.adjacent(u, w) && !g.adjacent(v, w))
                    return StableTriple{u, v, w};
        }
    return std::nullopt;
}

// ---------------------------------------------------------------- family recurrences

SymFunc spider_csf(int a, int b, int c, int cap) {
    if (!(a >= b && b >= c && c >= 1))
        throw BadSpec("spider_csf needs a >= b >= c >= 1");
    const int n = a + b + c + 1;
    if (n > cap)
        throw TooLarge("spider recurrence: degree " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    SymFunc out = path_csf_e(n, cap);
    for (int i = 1; i <= c; ++i) {
        out += multiply(path_csf_e(i, cap), path_csf_e(n - i, cap));
        out -= multiply(path_csf_e(b + i, cap), path_csf_e(n - b - i, cap));
    }
    return out;
}

SymFunc spider_ab1_csf(int a, int b, int cap) {
    if (a < 1 || b < 1)
        throw BadSpec("spider_ab1_csf needs a, b >= 1");
    const int n = a + b + 2;
    if (n > cap)
        throw TooLarge("spider recurrence: degree " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    SymFunc out = multiply(SymFunc::unit(Basis::E, Partition{1}), path_csf_e(n - 1, cap));
    out += path_csf_e(n, cap);
    out -= multiply(path_csf_e(a + 1, cap), path_csf_e(b + 1, cap));
    return out;
}

SymFunc odd_broom_csf(int a, int cap) {
    if (a < 1)
        throw BadSpec("odd_broom_csf needs a >= 1");
    if (2 * a + 2 > cap)
        throw TooLarge("broom recurrence: degree exceeds cap");
    SymFunc out = e_times(path_csf_e(2 * a + 1, cap), Partition{1}, 1);
    out += path_csf_e(2 * a + 2, cap);
    out -= e_times(path_csf_e(2 * a, cap), Partition{2}, 2);
    return out;
}

SymFunc double_broom_22_csf(int p, int cap) {
    if (p < 1)
        throw BadSpec("double_broom_22_csf needs p >= 1");
    if (2 * p + 4 > cap)
        throw TooLarge("double broom recurrence: degree exceeds cap");
    SymFunc out = e_times(spider_csf(2 * p, 1, 1, cap), Partition{1}, 1);
    out += odd_broom_csf(p + 1, cap);
    out -= e_times(odd_broom_csf(p, cap), Partition{2}, 2);
    return out;
}

std::optional<SymFunc> family_csf_e(const FamilySpec& spec, int cap) {
    const auto& p = spec.params;
    switch (spec.kind) {
    case FamilyKind::Path:
        if (p.size() == 1 && p[0] >= 1)
            return path_csf_e(p[0], cap);
        break;
    case FamilyKind::Claw: return spider_csf(1, 1, 1, cap);
    case FamilyKind::Star:
        if (p.size() == 1 && p[0] >= 1 && p[0] <= 2)
            return path_csf_e(p[0] + 1, cap);
        if (p.size() == 1 && p[0] == 3)
            return spider_csf(1, 1, 1, cap);
        break;
    case FamilyKind::Spider:
        if (p.size() == 3 && p[0] >= p[1] && p[1] >= p[2] && p[2] >= 1)
            return spider_csf(p[0], p[1], p[2], cap);
        break;
    case FamilyKind::Broom:
        if (p.size() == 2 && p[0] >= 1 && p[1] == 1)
            return path_csf_e(p[0] + 2, cap);
        if (p.size() == 2 && p[0] >= 1 && p[1] == 2)
            return spider_csf(p[0], 1, 1, cap);
        break;
    case FamilyKind::DoubleBroom:
        if (p.size() == 3 && p[0] == 2 && p[2] == 2 && p[1] >= 1 && p[1] % 2 == 1)
            return double_broom_22_csf((p[1] + 1) / 2, cap);
        break;
    default: break;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- front door

namespace {

SymFunc via_triple_deletion(const Graph& g) {
    // Find v with two non-adjacent neighbours u, w; then G = G'_{12} for G' = G - uv - vw.
    for (int v = 0; v < g.order(); ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const int u = nb[i], w = nb[j];
                if (g.adjacent(u, w))
                    continue;
                std::vector<Edge> kept;
                for (const Edge& e : g.edges())
                    if (e != Edge{std::min(u, v), std::max(u, v)} && e != Edge{std::min(v, w), std::max(v, w)})
                        kept.push_back(e);
                return triple_deletion(Graph(g.order(), kept), StableTriple{u, v, w}, 3U,
                                       csf_via_stable_partitions);
            }
    }
    return csf_via_stable_partitions(g);
}

}  // namespace

CsfResult csf_by_route(const FamilySpec& spec, CsfRoute route, int recurrence_cap) {
    CsfResult result;
    result.graph = spec.to_string();
    result.route = route;
    switch (route) {
    case CsfRoute::FamilyRecurrence: {
        auto value = family_csf_e(spec, recurrence_cap);
        if (!value)
            throw BadSpec("no family recurrence for " + spec.to_string());
        result.value = std::move(*value);
        break;
    }
    case CsfRoute::StableM: result.value = csf_via_stable_partitions(build_family(spec)); break;
    case CsfRoute::EdgeP: result.value = csf_via_edge_subsets(build_family(spec)); break;
    case CsfRoute::TripleDeletion: {
        const Graph g = build_family(spec);
        if (g.order() > kStableRouteMaxVertices)
            throw TooLarge("triple-deletion route: more than " + std::to_string(kStableRouteMaxVertices) +
                           " vertices");
        result.value = via_triple_deletion(g);
        break;
    }
    }
    return result;
}

CsfResult csf_default(const FamilySpec& spec, int recurrence_cap) {
    if (auto value = family_csf_e(spec, recurrence_cap))
        return CsfResult{spec.to_string(), CsfRoute::FamilyRecurrence, std::move(*value)};
    const Graph g = build_family(spec);
    if (g.order() <= kStableRouteMaxVertices)
        return CsfResult{spec.to_string(), CsfRoute::StableM, csf_via_stable_partitions(g)};
    if (g.edge_count() <= kEdgeRouteMaxEdges)
        return CsfResult{spec.to_string(), CsfRoute::EdgeP, csf_via_edge_subsets(g)};
    throw TooLarge("no route within caps for " + spec.to_string());
}

SymFunc convert(const SymFunc& f, Basis target, int degree_cap) {
    if (f.basis() == target)
        return f;
    if (f.basis() == Basis::E && target == Basis::S)
        return e_to_s(f);
    return change_basis(f, target, degree_cap);
}

Rational extract_coefficient(const SymFunc& f, Basis basis, const Partition& lambda, int degree_cap) {
    if (lambda.size() != f.degree())
        throw DegreeMismatch("extract_coefficient: " + lambda.to_string() + " is not a partition of " +
                             std::to_string(f.degree()));
    if (f.basis() == basis)
        return f.coefficient(lambda);
    if (f.basis() == Basis::E && basis == Basis::S)
        return e_to_s_coefficient(f, lambda);
    return change_basis(f, basis, degree_cap).coefficient(lambda);
}

}  // namespace cslab
