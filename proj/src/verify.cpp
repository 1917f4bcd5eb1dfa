#include "cslab/verify.hpp"

#include <random>

#include "cslab/csf.hpp"
#include "cslab/errors.hpp"
#include "cslab/positivity.hpp"
#include "cslab/rimhook.hpp"

namespace cslab {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"route-equivalence", "triple-deletion",     "specialization",
                                                "path-closed-form",  "srht-inverse-kostka", "screener-soundness"};
    return names;
}

namespace {

std::string edges_spec(const Graph& g) {
    std::string s = "edges:" + std::to_string(g.order());
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        s += (i ? "," : ":") + std::to_string(g.edges()[i].first) + "-" + std::to_string(g.edges()[i].second);
    return s;
}

void check(SuiteReport& r, bool ok, const std::string& reproducer) {
    ++r.checks;
    if (!ok) {
        r.passed = false;
        r.failures.push_back(reproducer);
    }
}

int random_between(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// All routes that apply to spec, compared in the monomial basis.
void compare_routes(SuiteReport& r, const FamilySpec& spec) {
    const Graph g = build_family(spec);
    const SymFunc reference = csf_via_stable_partitions(g);
    check(r, to_monomial(csf_via_edge_subsets(g)) == reference, "edge-p differs on " + spec.to_string());
    check(r, csf_by_route(spec, CsfRoute::TripleDeletion).value == reference,
          "triple-deletion differs on " + spec.to_string());
    if (auto f = family_csf_e(spec))
        check(r, to_monomial(*f) == reference, "family-recurrence differs on " + spec.to_string());
}

SuiteReport route_equivalence(std::uint64_t seed, int count) {
    SuiteReport r{"route-equivalence", true, 0, {}};
    for (int n = 1; n <= 11; ++n)
        compare_routes(r, parse_graph_spec("path:" + std::to_string(n)));
    for (int a = 1; a <= 8; ++a)
        for (int b = 1; b <= a; ++b)
            for (int c = 1; c <= b && a + b + c + 1 <= 11; ++c)
                compare_routes(r, parse_graph_spec("spider:" + std::to_string(a) + "," + std::to_string(b) + "," +
                                                   std::to_string(c)));
    for (int p = 1; p <= 8; ++p)
        for (int l = 1; p + l + 1 <= 11; ++l)
            compare_routes(r, parse_graph_spec("broom:" + std::to_string(p) + "," + std::to_string(l)));
    for (int q = 1; q + 5 <= 11; q += 2)
        compare_routes(r, parse_graph_spec("dbroom:2," + std::to_string(q) + ",2"));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < (count ? count : 20); ++i) {
        const Graph t = random_tree(random_between(rng, 2, 9), rng);
        compare_routes(r, parse_graph_spec(edges_spec(t)));
    }
    return r;
}

SuiteReport triple_deletion_suite(std::uint64_t seed, int count) {
    SuiteReport r{"triple-deletion", true, 0, {}};
    std::mt19937_64 rng(seed);
    int done = 0;
    const int target = count ? count : 50;
    while (done < target) {
        const Graph g = random_graph(random_between(rng, 7, 9), 1, 3, rng);
        std::vector<StableTriple> triples;
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                for (int w = v + 1; w < g.order(); ++w)
                    if (!g.adjacent(u, v) && !g.adjacent(v, w) && !g.adjacent(u, w))
                        triples.push_back({u, v, w});
        if (triples.empty())
            continue;
        const StableTriple t = triples[uniform_below(rng, triples.size())];
        const TripleDeletionCheck c = verify_triple_deletion(g, t, csf_via_stable_partitions);
        check(r, c.ok(),
              edges_spec(g) + " triple " + std::to_string(t.u) + "," + std::to_string(t.v) + "," +
                  std::to_string(t.w));
        ++done;
    }
    return r;
}

SuiteReport specialization(std::uint64_t seed, int count) {
    SuiteReport r{"specialization", true, 0, {}};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < (count ? count : 30); ++i) {
        const Graph t = random_tree(random_between(rng, 1, 10), rng);
        const SymFunc m = csf_via_stable_partitions(t);
        const SymFunc p = csf_via_edge_subsets(t);
        const SymFunc e = change_basis(m, Basis::E);
        for (int k = 1; k <= 5; ++k) {
            const Rational expected(chromatic_polynomial(t, k));
            const bool ok = specialize_ones(m, k) == expected && specialize_ones(p, k) == expected &&
                            specialize_ones(e, k) == expected;
            check(r, ok, edges_spec(t) + " k=" + std::to_string(k));
        }
    }
    return r;
}

SuiteReport path_closed_form() {
    SuiteReport r{"path-closed-form", true, 0, {}};
    for (int d = 1; d <= 12; ++d) {
        const SymFunc path = path_csf_e(d);
        for (const Partition& lambda : enumerate_partitions(d))
            check(r, Rational(path_closed_form_coefficient(lambda, d)) == path.coefficient(lambda),
                  "d=" + std::to_string(d) + " lambda=" + lambda.to_string());
    }
    return r;
}

SuiteReport srht_inverse_kostka() {
    SuiteReport r{"srht-inverse-kostka", true, 0, {}};
    for (int n = 1; n <= 6; ++n) {
        const auto parts = enumerate_partitions(n);
        // signed[λ][ν] summed over tabloids; K[λ][μ] Kostka numbers.
        std::vector<std::vector<Integer>> signed_counts(parts.size(), std::vector<Integer>(parts.size(), 0));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const auto contents = srht_signed_contents(parts[i]);
            for (std::size_t j = 0; j < parts.size(); ++j)
                if (auto it = contents.find(parts[j]); it != contents.end())
                    signed_counts[i][j] = it->second;
        }
        for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = 0; b < parts.size(); ++b) {
                Integer left = 0, right = 0;
                for (std::size_t c = 0; c < parts.size(); ++c) {
                    left += signed_counts[c][a] * kostka(parts[c], parts[b]);
                    right += kostka(parts[a], parts[c]) * signed_counts[b][c];
                }
                const Integer id = a == b ? 1 : 0;
                check(r, left == id && right == id,
                      "n=" + std::to_string(n) + " at " + parts[a].to_string() + "," + parts[b].to_string());
            }
    }
    return r;
}

// Each failing screener must be matched by a negative coefficient in the full expansion.
void soundness_on(SuiteReport& r, const std::string& family, const std::vector<RangeSpec>& ranges) {
    PositivityOptions opts;
    opts.always_expand = true;
    const SweepResult sweep = run_sweep(family, ranges, opts);
    for (const auto& inst : sweep.instances) {
        if (!inst.error.empty())
            continue;
        const auto& rep = inst.report;
        if (rep.screener_failed(Basis::E) && rep.e_min)
            check(r, rep.e_min->second < 0, "e screener unsound on " + inst.graph);
        if (rep.screener_failed(Basis::S) && rep.s_min)
            check(r, rep.s_min->second < 0, "s screener unsound on " + inst.graph);
        if (rep.e_positive == Verdict::Yes && rep.s_min)
            check(r, rep.schur_positive == Verdict::Yes, "e-positive but not Schur positive: " + inst.graph);
    }
}

SuiteReport screener_soundness() {
    SuiteReport r{"screener-soundness", true, 0, {}};
    soundness_on(r, "spider:a,2,1", {{"a", 2, 30}});
    soundness_on(r, "spider:a,4,1", {{"a", 4, 25}});
    soundness_on(r, "spider:a,8,1", {{"a", 8, 20}});
    soundness_on(r, "spider:a,b,2", {{"b", 2, 6}, {"a", 6, 14}});
    soundness_on(r, "spider:a,b,c", {{"a", 1, 8}, {"b", 1, 4}, {"c", 1, 3}});
    soundness_on(r, "broom:p,l", {{"p", 1, 10}, {"l", 1, 4}});
    soundness_on(r, "dbroom:l,q,m", {{"l", 2, 3}, {"q", 1, 5}, {"m", 2, 4}});
    return r;
}

}  // namespace

SuiteReport run_suite(const std::string& name, std::uint64_t seed, int count) {
    if (name == "route-equivalence")
        return route_equivalence(seed, count);
    if (name == "triple-deletion")
        return triple_deletion_suite(seed, count);
    if (name == "specialization")
        return specialization(seed, count);
    if (name == "path-closed-form")
        return path_closed_form();
    if (name == "srht-inverse-kostka")
        return srht_inverse_kostka();
    if (name == "screener-soundness")
        return screener_soundness();
    throw BadSpec("unknown suite '" + name + "'");
}

}  // namespace cslab
