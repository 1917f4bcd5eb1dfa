#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "cslab/graph.hpp"
#include "cslab/symfunc.hpp"

namespace cslab {

enum class CsfRoute { StableM, EdgeP, TripleDeletion, FamilyRecurrence };

std::string route_name(CsfRoute route);
/// Accepts "stable-m", "edge-p", "triple-deletion", "family-recurrence".
CsfRoute parse_route(std::string_view text);

/// E-basis recurrences (paths, spiders, brooms) stay sparse well past the
/// dense-solve cap, so they get their own limit.
inline constexpr int kDefaultRecurrenceCap = 50;

/// Largest graph the stable-partition route accepts.
inline constexpr int kStableRouteMaxVertices = 16;
/// Largest edge count the edge-subset route accepts.
inline constexpr int kEdgeRouteMaxEdges = 24;

struct CsfResult {
    std::string graph;
    CsfRoute route = CsfRoute::StableM;
    SymFunc value{Basis::M, 0};
};

/// X_G = sum over types of a_λ λ^! m_λ.
SymFunc csf_via_stable_partitions(const Graph& g);

/// X_G = sum over edge subsets of (-1)^{|E'|} p_{λ(E')}.
SymFunc csf_via_edge_subsets(const Graph& g);

/// e-expansion of the path on n vertices from
/// X_{P_n} = e_n + sum_{k>=2} (k-1) e_k X_{P_{n-k}}, X_{P_0} = 1. Memoized.
SymFunc path_csf_e(int n, int cap = kDefaultRecurrenceCap);

/// Closed form for [e_λ] X_{P_d} as a two-term multinomial sum.
Integer path_closed_form_coefficient(const Partition& lambda, int d);

// ------------------------------------------------------------------ triple deletion

struct StableTriple {
    int u = 0, v = 0, w = 0;
};

/// Edge bits of S: bit 0 is uv, bit 1 is vw, bit 2 is wu.
using EdgeSet3 = unsigned;

/// G with the edges of S added. Throws NotStableTriple unless {u,v,w} is stable in g.
Graph triple_graph(const Graph& g, const StableTriple& t, EdgeSet3 s);

using CsfFunction = std::function<SymFunc(const Graph&)>;

/// X_{G_S} rewritten through the two deletion identities so that only graphs
/// with at most one triangle edge, plus one two-edge graph, reach `base`.
SymFunc triple_deletion(const Graph& g, const StableTriple& t, EdgeSet3 s, const CsfFunction& base);

struct TripleDeletionCheck {
    bool first_identity = false;   // X_{12} = X_1 + X_{23} - X_3
    bool second_identity = false;  // X_{123} = X_{12} + X_{23} - X_2
    bool rewriting_matches = false;
    bool ok() const { return first_identity && second_identity && rewriting_matches; }
};

/// Computes all eight X_{G_S} directly with `base` and checks both identities
/// plus the rewriting route for every S.
TripleDeletionCheck verify_triple_deletion(const Graph& g, const StableTriple& t, const CsfFunction& base);

/// Some stable triple of g (lexicographically first), if any.
std::optional<StableTriple> find_stable_triple(const Graph& g);

// ------------------------------------------------------------------ family recurrences

/// X_{P_n} + sum_{i=1}^{c} (X_{P_i} X_{P_{n-i}} - X_{P_{b+i}} X_{P_{n-b-i}}), n = a+b+c+1.
SymFunc spider_csf(int a, int b, int c, int cap = kDefaultRecurrenceCap);

/// S(a,b,1): e_1 X_{P_{N-1}} + X_{P_N} - X_{P_{a+1}} X_{P_{b+1}}.
SymFunc spider_ab1_csf(int a, int b, int cap = kDefaultRecurrenceCap);

/// br(2a-1,2): e_1 X_{P_{2a+1}} + X_{P_{2a+2}} - 2 e_2 X_{P_{2a}}.
SymFunc odd_broom_csf(int a, int cap = kDefaultRecurrenceCap);

/// br'(2,2p-1,2): e_1 X_{br(2p,2)} + X_{br(2p+1,2)} - 2 e_2 X_{br(2p-1,2)}.
SymFunc double_broom_22_csf(int p, int cap = kDefaultRecurrenceCap);

/// e-expansion by a family recurrence when the descriptor has one
/// (paths, 3-leg spiders, claw, star:3, broom:p,1, broom:p,2, dbroom:2,odd,2).
std::optional<SymFunc> family_csf_e(const FamilySpec& spec, int cap = kDefaultRecurrenceCap);

// ------------------------------------------------------------------ front door

/// Computes X_G by the given route and returns it in the route's native basis
/// (M, P, or E for family recurrences; triple deletion returns M).
CsfResult csf_by_route(const FamilySpec& spec, CsfRoute route, int recurrence_cap = kDefaultRecurrenceCap);

/// Picks the cheapest available route: family recurrence, then stable partitions
/// (n <= 16), then edge subsets (|E| <= 24). Throws TooLarge otherwise.
CsfResult csf_default(const FamilySpec& spec, int recurrence_cap = kDefaultRecurrenceCap);

/// Expresses f in `target`; E to S skips the dense solve.
SymFunc convert(const SymFunc& f, Basis target, int degree_cap = default_degree_cap());

/// [b_λ] f after conversion to `basis`. Throws DegreeMismatch when λ is not a partition of deg f.
Rational extract_coefficient(const SymFunc& f, Basis basis, const Partition& lambda,
                             int degree_cap = default_degree_cap());

}  // namespace cslab
