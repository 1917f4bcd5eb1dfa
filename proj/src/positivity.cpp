#include "cslab/positivity.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <thread>

#include "cslab/errors.hpp"
#include "cslab/rimhook.hpp"

namespace cslab {

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::UnknownAtCap: return "unknown-at-cap";
    }
    return "?";
}

bool PositivityReport::screener_failed(Basis target) const {
    return std::any_of(screeners.begin(), screeners.end(),
                       [&](const ScreenerResult& s) { return s.target == target && !s.passed; });
}

std::vector<std::string> PositivityReport::failed_screeners() const {
    std::vector<std::string> out;
    for (const auto& s : screeners)
        if (!s.passed)
            out.push_back(s.name);
    return out;
}

std::optional<Partition> spider_legs(const FamilySpec& spec) {
    const auto& p = spec.params;
    switch (spec.kind) {
    case FamilyKind::Claw: return Partition{1, 1, 1};
    case FamilyKind::Spider:
        if (p.size() >= 3 && std::all_of(p.begin(), p.end(), [](int x) { return x >= 1; }))
            return Partition::from_unsorted(p);
        break;
    case FamilyKind::Star:
        if (p.size() == 1 && p[0] >= 3)
            return Partition(std::vector<int>(static_cast<std::size_t>(p[0]), 1));
        break;
    case FamilyKind::Broom:
        if (p.size() == 2 && p[0] >= 1 && p[1] >= 2) {
            std::vector<int> legs(static_cast<std::size_t>(p[1]), 1);
            legs.push_back(p[0]);
            return Partition::from_unsorted(legs);
        }
        break;
    default: break;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- screeners

namespace {

std::string str(const Integer& x) { return x.get_str(); }

ScreenerResult screener(std::string name, bool passed, std::string detail) {
    return ScreenerResult{std::move(name), Basis::E, passed, std::move(detail)};
}

int mod(int x, int m) { return ((x % m) + m) % m; }

}  // namespace

Integer two_odd_legs_coefficient(const Partition& legs) {
    std::vector<int> odd, even;
    for (int part : legs.parts())
        (part % 2 ? odd : even).push_back(part);
    if (odd.size() != 2)
        throw BadParity("exactly two legs must be odd, got " + std::to_string(odd.size()));
    const int d = legs.length();
    Integer value = 4 * ((odd[0] - 1) / 2 + (odd[1] - 1) / 2);
    for (int part : even)
        value -= 4 * (part / 2);
    return value + 2 * d - 1;
}

int ab1_e_positive_bound(int b) { return mod(b, 3) == 2 ? 2 * b + 2 : b * b + b; }

std::vector<ScreenerResult> screen_spider(const Partition& legs) {
    std::vector<ScreenerResult> out;
    const int d = legs.length();
    const int n = legs.size() + 1;

    {
        const bool long_leg = legs[0] >= n / 2;
        const bool few_legs = d - 1 < 63 && (std::int64_t{1} << (d - 1)) < n;
        out.push_back(screener("leg-length", long_leg && few_legs,
                               "longest leg " + std::to_string(legs[0]) + " vs floor(n/2) = " +
                                   std::to_string(n / 2) + "; legs d = " + std::to_string(d) + ", n = " +
                                   std::to_string(n) + " needs 2^(d-1) < n"));
    }
    {
        std::string detail = "R_m < 2m and residue condition for m = 1.." + std::to_string(n);
        bool ok = true;
        for (int m = 1; m <= n && ok; ++m) {
            int big_r = 1;
            for (int part : legs.parts())
                big_r += part % m;
            const int r = n % m;
            const bool has_large =
                std::any_of(legs.parts().begin(), legs.parts().end(), [&](int part) { return part % m >= r; });
            if (big_r >= 2 * m) {
                ok = false;
                detail = "m = " + std::to_string(m) + ": R_m = " + std::to_string(big_r) + " >= 2m";
            } else if (big_r >= m && !has_large) {
                ok = false;
                detail = "m = " + std::to_string(m) + ": R_m = " + std::to_string(big_r) +
                         " >= m but every residue is below n mod m = " + std::to_string(r);
            }
        }
        out.push_back(screener("leg-residues", ok, detail));
    }
    if (d == 3 && legs[1] % 2 == 1 && legs[2] % 2 == 1)
        out.push_back(screener("odd-legs", legs[0] == legs[1] + legs[2],
                               "b, c odd requires a = b + c: " + std::to_string(legs[0]) + " vs " +
                                   std::to_string(legs[1] + legs[2])));
    {
        int odd = 0;
        for (int part : legs.parts())
            odd += part % 2;
        if (odd == 2) {
            const Integer value = two_odd_legs_coefficient(legs);
            const int k = (n - 3) / 2;
            out.push_back(screener("two-odd-coefficient", value >= 0,
                                   "[e_{3,2^" + std::to_string(k) + "}] = " + str(value)));
        }
    }
    if (d == 3 && legs[2] == 1 && legs[1] % 2 == 0 && legs[1] >= 2) {
        const int a = legs[0], b = legs[1];
        bool ok = true;
        std::string detail;
        if (mod(b, 3) == 2) {
            ok = (mod(a, 3) == 0 && a <= 2 * b + 2) || (mod(a, 3) == 1 && a <= 2 * b - 3);
            detail = "b = 2 mod 3 needs a = 0 mod 3, a <= " + std::to_string(2 * b + 2) + " or a = 1 mod 3, a <= " +
                     std::to_string(2 * b - 3);
        } else {
            ok = a <= b * b - 1 || a == b * b + b;
            detail = "needs a <= " + std::to_string(b * b - 1) + " or a = " + std::to_string(b * b + b);
        }
        if (a % 2 == 0) {
            const long t = 2L * a - 2L * b - 1;
            const bool even_ok = t > 0 && t * t > 8L * b - 3;
            ok = ok && even_ok;
            detail += "; a even needs (2a-2b-1)^2 > 8b-3 with 2a-2b-1 > 0: " + std::to_string(t) +
                      "^2 vs " + std::to_string(8L * b - 3);
        }
        out.push_back(screener("ab1-bounds", ok, detail));
    }
    if (d == 3 && legs[2] == 2) {
        const int a = legs[0], b = legs[1];
        const int ra = mod(a, 3), rb = mod(b, 3);
        out.push_back(screener("ab2-residues", (ra == 0 && rb == 1) || rb == 0,
                               "(a mod 3, b mod 3) = (" + std::to_string(ra) + "," + std::to_string(rb) + ")"));
        const int total = a + b + 3;
        const bool splits = numerical_semigroup_gap(b + 1, total);
        const bool cap_ok = !(ra == 0 && rb == 1) || a <= 2 * b + 4;
        out.push_back(screener("ab2-upper-bound", !splits && cap_ok,
                               std::string("n = ") + std::to_string(total) +
                                   (splits ? " is a sum of " : " is not a sum of ") + std::to_string(b + 1) +
                                   "s and " + std::to_string(b + 2) + "s" +
                                   (ra == 0 && rb == 1 ? "; needs a <= " + std::to_string(2 * b + 4) : "")));
        if (b >= 12 && b % 3 == 0 && a >= b) {
            bool ok = true;
            std::string detail;
            const long la = a, lb = b;
            if (ra == 0) {
                ok = la >= 3 * lb + 3;
                detail = "a = 0 mod 3 needs a >= " + std::to_string(3 * lb + 3);
            } else if (ra == 1) {
                const long t = 4 * la - 2 * lb - 9;
                ok = t >= 0 && t * t >= 12 * lb * lb - 180 * lb + 565;
                detail = "a = 1 mod 3 needs 4a-2b-9 >= sqrt(12b^2-180b+565)";
            } else {
                const long t = 6 * la - 3 * lb - 2;
                ok = t >= 0 && t * t >= 27 * lb * lb - 54 * lb + 112;
                detail = "a = 2 mod 3 needs 6a-3b-2 >= sqrt(27b^2-54b+112)";
            }
            out.push_back(screener("ab2-lower-bound", ok, detail));
        }
    }
    return out;
}

// ---------------------------------------------------------------- reports

namespace {

inline constexpr int kConnectedScreenMax = 20;

std::optional<SymFunc> e_expansion(const FamilySpec& spec, const std::optional<Graph>& g,
                                   const PositivityOptions& opts, std::vector<std::string>& notes) {
    try {
        if (auto f = family_csf_e(spec, opts.recurrence_cap))
            return f;
    } catch (const TooLarge& e) {
        notes.push_back(e.what());
        return std::nullopt;
    }
    if (!g)
        return std::nullopt;
    try {
        if (g->order() > opts.degree_cap)
            throw TooLarge("degree " + std::to_string(g->order()) + " exceeds cap " + std::to_string(opts.degree_cap));
        if (g->order() <= kStableRouteMaxVertices)
            return change_basis(csf_via_stable_partitions(*g), Basis::E, opts.degree_cap);
        return change_basis(csf_via_edge_subsets(*g), Basis::E, opts.degree_cap);
    } catch (const TooLarge& e) {
        notes.push_back(e.what());
        return std::nullopt;
    }
}

Witness coefficient_witness(Basis basis, const std::pair<Partition, Rational>& term) {
    return Witness{basis, "coefficient", term.first, term.second};
}

Witness screener_witness(Basis basis, const std::vector<ScreenerResult>& screeners, const std::optional<Partition>& legs) {
    for (const auto& s : screeners)
        if (s.target == basis && !s.passed) {
            Witness w{basis, s.name, std::nullopt, std::nullopt};
            if (s.name == "two-odd-coefficient" && legs) {
                const int k = (legs->size() + 1 - 3) / 2;
                std::vector<int> parts{3};
                parts.insert(parts.end(), static_cast<std::size_t>(k), 2);
                w.partition = Partition(parts);
                w.coeff = Rational(two_odd_legs_coefficient(*legs));
            }
            return w;
        }
    return Witness{basis, "screener", std::nullopt, std::nullopt};
}

}  // namespace

PositivityReport positivity(const FamilySpec& spec, const PositivityOptions& opts) {
    PositivityReport report;
    report.graph = spec.to_string();
    std::optional<Graph> g;
    try {
        g = build_family(spec);
        report.order = g->order();
    } catch (const BadSpec& e) {
        // Family recurrences reach past the explicit graph size limit.
        if (!family_csf_e(spec, opts.recurrence_cap))
            throw;
        report.notes.push_back(std::string("graph not built: ") + e.what());
    }
    const std::optional<Partition> legs = spider_legs(spec);
    if (!g && legs)
        report.order = legs->size() + 1;

    if (opts.check_e) {
        if (legs)
            for (auto& s : screen_spider(*legs))
                report.screeners.push_back(std::move(s));
        if (g && g->is_tree() && g->order() <= kConnectedScreenMax) {
            const auto types = tree_connected_partition_types(*g);
            std::string detail = "every type has a connected partition";
            bool ok = true;
            for (const Partition& p : enumerate_partitions(g->order()))
                if (!types.count(p)) {
                    ok = false;
                    detail = "no connected partition of type " + p.to_string();
                    break;
                }
            report.screeners.push_back(screener("connected-partitions", ok, detail));
        }
    }
    if (opts.check_s && g && g->is_connected()) {
        try {
            const BipartitionSizes sizes = bipartition_sizes(*g);
            report.screeners.push_back(ScreenerResult{
                "balanced-bipartition", Basis::S, std::abs(sizes.first - sizes.second) <= 1,
                "color classes " + std::to_string(sizes.first) + " and " + std::to_string(sizes.second)});
        } catch (const NotBipartite&) {
        }
    }

    const bool e_screen_fail = report.screener_failed(Basis::E);
    const bool s_screen_fail = report.screener_failed(Basis::S);
    std::optional<SymFunc> e_func;
    const bool need_e = opts.check_e && (!e_screen_fail || opts.always_expand);
    const bool need_s = opts.check_s && (!s_screen_fail || opts.always_expand);
    if (need_e || (need_s && report.order <= opts.degree_cap))
        e_func = e_expansion(spec, g, opts, report.notes);

    report.e_checked = opts.check_e;
    report.s_checked = opts.check_s;
    if (opts.check_e) {
        if (need_e && e_func) {
            report.e_min = min_coefficient(*e_func);
            if (report.e_min->second < 0) {
                report.e_positive = Verdict::No;
                report.e_witness = coefficient_witness(Basis::E, *report.e_min);
            } else {
                report.e_positive = Verdict::Yes;
                if (e_screen_fail)
                    report.notes.push_back("screener failed but the e-expansion is nonnegative");
            }
        } else if (e_screen_fail) {
            report.e_positive = Verdict::No;
            report.e_witness = screener_witness(Basis::E, report.screeners, legs);
        }
    }

    if (opts.check_s) {
        std::optional<SymFunc> s_func;
        if (need_s && report.order <= opts.degree_cap) {
            try {
                if (e_func)
                    s_func = e_to_s(*e_func);
                else if (g && g->order() <= kStableRouteMaxVertices)
                    s_func = change_basis(csf_via_stable_partitions(*g), Basis::S, opts.degree_cap);
            } catch (const TooLarge& e) {
                report.notes.push_back(e.what());
            }
        }
        std::optional<std::pair<Partition, Integer>> targeted_negative;
        if (g)
            for (const Partition& lambda : opts.schur_targets) {
                try {
                    const Integer value = schur_coefficient(*g, lambda, opts.block_cap).total;
                    report.schur_targeted.emplace_back(lambda, value);
                    if (value < 0 && !targeted_negative)
                        targeted_negative.emplace(lambda, value);
                    if (s_func && s_func->coefficient(lambda) != Rational(value))
                        report.notes.push_back("targeted coefficient disagrees with full expansion at " +
                                               lambda.to_string());
                } catch (const TooLarge& e) {
                    report.notes.push_back(e.what());
                }
            }
        if (s_func) {
            report.s_min = min_coefficient(*s_func);
            if (report.s_min->second < 0) {
                report.schur_positive = Verdict::No;
                report.s_witness = coefficient_witness(Basis::S, *report.s_min);
            } else {
                report.schur_positive = Verdict::Yes;
                if (s_screen_fail)
                    report.notes.push_back("screener failed but the s-expansion is nonnegative");
            }
        } else if (s_screen_fail) {
            report.schur_positive = Verdict::No;
            report.s_witness = screener_witness(Basis::S, report.screeners, legs);
        } else if (targeted_negative) {
            report.schur_positive = Verdict::No;
            report.s_witness = Witness{Basis::S, "coefficient", targeted_negative->first, Rational(targeted_negative->second)};
        } else if (report.e_positive == Verdict::Yes) {
            report.schur_positive = Verdict::Yes;
            report.notes.push_back("Schur positivity follows from e-positivity");
        }
    }
    return report;
}

PositivityReport e_positivity(const FamilySpec& spec, const PositivityOptions& opts) {
    PositivityOptions o = opts;
    o.check_e = true;
    o.check_s = false;
    return positivity(spec, o);
}

PositivityReport schur_positivity(const FamilySpec& spec, const PositivityOptions& opts) {
    PositivityOptions o = opts;
    o.check_e = false;
    o.check_s = true;
    return positivity(spec, o);
}

// ---------------------------------------------------------------- sweeps

RangeSpec parse_range(std::string_view text) {
    const std::size_t eq = text.find('=');
    const std::size_t dots = text.find("..");
    if (eq == std::string_view::npos || dots == std::string_view::npos || dots < eq || eq == 0)
        throw BadSpec("range '" + std::string(text) + "' is not of the form VAR=a..b");
    RangeSpec r;
    r.var = std::string(text.substr(0, eq));
    try {
        r.lo = std::stoi(std::string(text.substr(eq + 1, dots - eq - 1)));
        r.hi = std::stoi(std::string(text.substr(dots + 2)));
    } catch (const std::exception&) {
        throw BadSpec("range '" + std::string(text) + "' has non-integer bounds");
    }
    if (r.lo > r.hi)
        throw BadSpec("range '" + std::string(text) + "' is empty");
    return r;
}

int eval_affine(std::string_view expr, const std::map<std::string, int>& values) {
    long total = 0;
    std::size_t i = 0;
    bool any = false;
    while (i < expr.size()) {
        int sign = 1;
        if (expr[i] == '+' || expr[i] == '-') {
            sign = expr[i] == '-' ? -1 : 1;
            ++i;
        } else if (any) {
            throw BadSpec("bad expression '" + std::string(expr) + "'");
        }
        long coeff = 1;
        bool has_number = false;
        std::size_t start = i;
        while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i])))
            ++i;
        if (i > start) {
            coeff = std::stol(std::string(expr.substr(start, i - start)));
            has_number = true;
        }
        if (i < expr.size() && expr[i] == '*')
            ++i;
        start = i;
        while (i < expr.size() && std::isalpha(static_cast<unsigned char>(expr[i])))
            ++i;
        if (i > start) {
            const std::string var(expr.substr(start, i - start));
            auto it = values.find(var);
            if (it == values.end())
                throw BadSpec("unbound variable '" + var + "' in '" + std::string(expr) + "'");
            coeff *= it->second;
        } else if (!has_number) {
            throw BadSpec("bad expression '" + std::string(expr) + "'");
        }
        total += sign * coeff;
        any = true;
    }
    if (!any)
        throw BadSpec("empty expression");
    return static_cast<int>(total);
}

FamilyTemplate FamilyTemplate::parse(std::string_view text) {
    FamilyTemplate t;
    const std::size_t colon = text.find(':');
    t.kind = std::string(text.substr(0, colon));
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        std::size_t pos = 0;
        while (true) {
            std::size_t end = rest.find(',', pos);
            t.slots.emplace_back(rest.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
            if (end == std::string_view::npos)
                break;
            pos = end + 1;
        }
    }
    return t;
}

FamilySpec FamilyTemplate::instantiate(const std::map<std::string, int>& values) const {
    if (kind == "claw")
        return parse_graph_spec("claw");
    std::vector<int> params;
    for (const auto& s : slots)
        params.push_back(eval_affine(s, values));
    if (kind == "spider")
        std::sort(params.begin(), params.end(), std::greater<>());
    std::string text = kind + ":";
    for (std::size_t i = 0; i < params.size(); ++i)
        text += (i ? "," : "") + std::to_string(params[i]);
    FamilySpec spec = parse_graph_spec(text);
    return spec;
}

std::string SweepResult::params_label(const SweepInstance& inst) const {
    if (inst.params.size() == 1)
        return std::to_string(inst.params.begin()->second);
    std::string out;
    for (const auto& r : ranges)
        out += (out.empty() ? "" : ";") + r.var + "=" + std::to_string(inst.params.at(r.var));
    return out;
}

namespace {

// Finite range certified by the e-positivity bounds for S(a,b,1) with b even.
std::optional<std::string> ab1_bound_note(const FamilyTemplate& t, const std::vector<RangeSpec>& ranges) {
    if (t.kind != "spider" || t.slots.size() != 3 || ranges.size() != 1 || t.slots[2] != "1")
        return std::nullopt;
    int b = 0;
    try {
        b = eval_affine(t.slots[1], {});
    } catch (const BadSpec&) {
        return std::nullopt;
    }
    if (b < 2 || b % 2)
        return std::nullopt;
    const int bound = ab1_e_positive_bound(b);
    const std::string rule = mod(b, 3) == 2 ? "a <= 2b+2 = " : "a <= b^2+b = ";
    const bool covered = ranges[0].hi >= bound;
    return "bound: S(a," + std::to_string(b) + ",1) e-positive needs " + rule + std::to_string(bound) +
           (covered ? "; range covers it" : "; range stops below it");
}

}  // namespace

SweepResult run_sweep(const std::string& family_template, const std::vector<RangeSpec>& ranges,
                      const PositivityOptions& opts, int jobs) {
    const FamilyTemplate tmpl = FamilyTemplate::parse(family_template);
    SweepResult result;
    result.family = family_template;
    result.ranges = ranges;

    std::vector<std::map<std::string, int>> points{{}};
    for (const auto& r : ranges) {
        std::vector<std::map<std::string, int>> next;
        for (const auto& base : points)
            for (int x = r.lo; x <= r.hi; ++x) {
                auto p = base;
                p[r.var] = x;
                next.push_back(std::move(p));
            }
        points = std::move(next);
    }
    result.instances.resize(points.size());

    std::atomic<std::size_t> next_index{0};
    auto worker = [&] {
        for (std::size_t i = next_index++; i < points.size(); i = next_index++) {
            SweepInstance& inst = result.instances[i];
            inst.params = points[i];
            try {
                const FamilySpec spec = tmpl.instantiate(points[i]);
                inst.graph = spec.to_string();
                inst.report = positivity(spec, opts);
            } catch (const std::exception& e) {
                inst.error = e.what();
            }
        }
    };
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(points.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    for (const auto& inst : result.instances) {
        if (!inst.error.empty())
            continue;
        if (inst.report.e_positive == Verdict::Yes)
            result.positive.push_back(result.params_label(inst));
        if (inst.report.schur_positive == Verdict::Yes)
            result.schur_positive.push_back(result.params_label(inst));
    }
    if (auto note = ab1_bound_note(tmpl, ranges))
        result.bounds.push_back(*note);
    return result;
}

// ---------------------------------------------------------------- conjecture checks

namespace {

std::string canonical_conjecture_id(const std::string& id) {
    static const std::map<std::string, std::string> aliases{{"3.5", "spider-ab1-e"},
                                                             {"3.6", "spider-ab1-schur"},
                                                             {"3.7", "spider-ab1-schur-small"},
                                                             {"5.4", "double-broom-schur"}};
    if (auto it = aliases.find(id); it != aliases.end())
        return it->second;
    for (const auto& [alias, name] : aliases)
        if (name == id)
            return name;
    throw BadSpec("unknown conjecture id '" + id + "'");
}

bool record(ConjectureReport& report, ConjectureInstance inst) {
    if (inst.verdict == Verdict::UnknownAtCap)
        ++report.unknown;
    report.instances.push_back(inst);
    if (inst.verdict == Verdict::No) {
        report.counterexample = inst;
        return false;
    }
    return true;
}

ConjectureInstance schur_instance(const std::string& spec_text, const std::string& item, const PositivityOptions& opts) {
    const PositivityReport r = schur_positivity(parse_graph_spec(spec_text), opts);
    return ConjectureInstance{r.graph, item, r.schur_positive, r.s_witness};
}

// Items of the two S(a,b,1) Schur lists that apply to (a,b); b even, a >= b.
std::vector<std::string> ab1_schur_items(int a, int b, bool small_list) {
    std::vector<std::string> items;
    const bool b2 = mod(b, 3) == 2;
    if (!small_list) {
        if (b2 && mod(a, 3) == 0 && a >= 2 * b + 5)
            items.emplace_back("1");
        if (b2 && mod(a, 3) == 1 && a >= 2 * b)
            items.emplace_back("2");
        if (b2 && mod(a, 3) == 2 && a >= b)
            items.emplace_back("3");
        if (!b2 && a >= b * b)
            items.emplace_back("4");
        const long t = 2L * a - 2L * b - 1;
        if (a % 2 == 0 && (t < 0 || t * t <= 8L * b - 3))
            items.emplace_back("5");
    } else {
        if (b2 && mod(a, 3) == 0 && a <= 2 * b + 2)
            items.emplace_back("1");
        if (b2 && mod(a, 3) == 1 && a <= 2 * b - 3)
            items.emplace_back("2");
        if (!b2 && a <= b * b - 1)
            items.emplace_back("3");
    }
    return items;
}

}  // namespace

ConjectureReport check_conjecture(const std::string& id, const ConjectureLimits& limits, const PositivityOptions& opts) {
    ConjectureReport report;
    report.id = canonical_conjecture_id(id);
    if (report.id == "spider-ab1-e") {
        report.statement = "b even, b != 2 mod 3: S(b^2+b, b, 1) is e-positive";
        const int max_b = limits.max_b ? limits.max_b : 4;
        for (int b = 2; b <= max_b; b += 2) {
            if (mod(b, 3) == 2)
                continue;
            const std::string spec = "spider:" + std::to_string(b * b + b) + "," + std::to_string(b) + ",1";
            const PositivityReport r = e_positivity(parse_graph_spec(spec), opts);
            if (!record(report, ConjectureInstance{r.graph, "b=" + std::to_string(b), r.e_positive, r.e_witness}))
                break;
        }
    } else if (report.id == "spider-ab1-schur" || report.id == "spider-ab1-schur-small") {
        const bool small_list = report.id == "spider-ab1-schur-small";
        report.statement = small_list
                               ? "b even, a >= b: S(a,b,1) Schur positive under the bounded-a conditions"
                               : "b even, a >= b: S(a,b,1) Schur positive under the large-a conditions";
        if (small_list)
            report.notes.push_back("the item for even a above b+(1+sqrt(8b-3))/2 has no stated verification range "
                                   "and is not checked");
        const int max_b = limits.max_b ? limits.max_b : 8;
        const int max_n = limits.max_n ? limits.max_n : 20;
        bool go = true;
        for (int b = 2; b <= max_b && go; b += 2)
            for (int a = b; a + b + 2 <= max_n && go; ++a) {
                const auto items = ab1_schur_items(a, b, small_list);
                if (items.empty())
                    continue;
                std::string label = "item";
                for (const auto& it : items)
                    label += " " + it;
                go = record(report, schur_instance("spider:" + std::to_string(a) + "," + std::to_string(b) + ",1",
                                                   label, opts));
            }
    } else {
        report.statement = "br'(2,2p-1,2) is Schur positive";
        const int max_p = limits.max_p ? limits.max_p : 5;
        for (int p = 1; p <= max_p; ++p)
            if (!record(report, schur_instance("dbroom:2," + std::to_string(2 * p - 1) + ",2",
                                               "p=" + std::to_string(p), opts)))
                break;
    }
    return report;
}

}  // namespace cslab
