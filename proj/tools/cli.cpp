#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include "CLI11.hpp"

#include "cslab/csf.hpp"
#include "cslab/errors.hpp"
#include "cslab/positivity.hpp"
#include "cslab/rimhook.hpp"
#include "cslab/serialize.hpp"
#include "cslab/verify.hpp"

namespace cslab::cli {

namespace {

constexpr const char* kGrammar =
    "usage: cslab <verb> [--graph SPEC | --family TEMPLATE --range VAR=a..b] [--basis m|e|p|s]\n"
    "             [--partition CSV] [--route NAME] [--cap N] [--out json|csv] [--pretty]\n"
    "             [--jobs N] [--seed N] [--trace]\n"
    "verbs: csf, coeff, schur-coeff, positivity, sweep, conjecture, verify\n"
    "graph SPEC: path:n cycle:n star:l spider:a,b,... broom:p,l dbroom:l,q,l' complete:n claw edges:n:u-v,...\n";

struct Options {
    std::string graph;
    std::string family;
    std::vector<std::string> ranges;
    std::string basis = "e";
    std::vector<std::string> partitions;
    std::string route;
    int cap = 0;
    std::string out_format;
    bool pretty = false;
    int jobs = 1;
    std::uint64_t seed = 0;
    bool trace = false;
    std::string expect;
    std::string kind = "both";
    bool always_expand = false;
    bool screen_only = false;
    std::string suite;
    int count = 0;
    std::string id;
    int max_p = 0, max_b = 0, max_n = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
    if (!ok)
        throw UsageError(message);
}

int degree_cap(const Options& o) { return o.cap > 0 ? o.cap : default_degree_cap(); }

PositivityOptions positivity_options(const Options& o) {
    PositivityOptions p;
    p.degree_cap = degree_cap(o);
    p.always_expand = !o.screen_only;
    p.check_e = o.kind != "s";
    p.check_s = o.kind != "e";
    for (const auto& text : o.partitions)
        p.schur_targets.push_back(parse_partition(text));
    return p;
}

std::string dump(const Json& j) { return j.dump(); }

int cmd_csf(const Options& o, std::ostream& out) {
    require(!o.graph.empty(), "csf needs --graph");
    const FamilySpec spec = parse_graph_spec(o.graph);
    const CsfResult result = o.route.empty() ? csf_default(spec) : csf_by_route(spec, parse_route(o.route));
    const SymFunc value = convert(result.value, parse_basis(o.basis), degree_cap(o));
    if (o.pretty)
        out << pretty(value);
    else if (o.trace)
        out << dump(Json{{"graph", result.graph}, {"route", route_name(result.route)}, {"value", to_json(value)}})
            << "\n";
    else
        out << dump(to_json(value)) << "\n";
    return kOk;
}

int cmd_coeff(const Options& o, std::ostream& out) {
    require(!o.graph.empty(), "coeff needs --graph");
    require(o.partitions.size() == 1, "coeff needs exactly one --partition");
    const FamilySpec spec = parse_graph_spec(o.graph);
    const Partition lambda = parse_partition(o.partitions[0]);
    const CsfResult result = o.route.empty() ? csf_default(spec) : csf_by_route(spec, parse_route(o.route));
    const Basis basis = parse_basis(o.basis);
    const Rational c = extract_coefficient(result.value, basis, lambda, degree_cap(o));
    out << dump(Json{{"graph", result.graph},
                     {"basis", std::string(1, basis_letter(basis))},
                     {"partition", partition_json(lambda)},
                     {"coeff", rational_string(c)}})
        << "\n";
    return kOk;
}

int cmd_schur_coeff(const Options& o, std::ostream& out) {
    require(!o.graph.empty(), "schur-coeff needs --graph");
    require(o.partitions.size() == 1, "schur-coeff needs exactly one --partition");
    const FamilySpec spec = parse_graph_spec(o.graph);
    const SchurCoefficientTrace trace = schur_coefficient(build_family(spec), parse_partition(o.partitions[0]));
    if (o.trace) {
        Json j = to_json(trace);
        j["graph"] = spec.to_string();
        out << dump(j) << "\n";
    } else {
        out << dump(Json{{"graph", spec.to_string()},
                         {"partition", partition_json(trace.shape)},
                         {"coeff", trace.total.get_str()}})
            << "\n";
    }
    return kOk;
}

int verdict_exit(const PositivityReport& r, const Options& o) {
    std::vector<Verdict> checked;
    if (o.kind != "s")
        checked.push_back(r.e_positive);
    if (o.kind != "e")
        checked.push_back(r.schur_positive);
    const bool any_no = std::count(checked.begin(), checked.end(), Verdict::No) > 0;
    const bool any_unknown = std::count(checked.begin(), checked.end(), Verdict::UnknownAtCap) > 0;
    if (o.expect == "positive" && any_no)
        return kNotPositive;
    if (any_unknown)
        return kUnknownAtCap;
    return kOk;
}

int cmd_positivity(const Options& o, std::ostream& out) {
    require(!o.graph.empty(), "positivity needs --graph");
    require(o.expect.empty() || o.expect == "positive", "--expect accepts only 'positive'");
    const PositivityReport r = positivity(parse_graph_spec(o.graph), positivity_options(o));
    out << dump(to_json(r)) << "\n";
    return verdict_exit(r, o);
}

std::string join(const std::vector<std::string>& items) {
    std::string s;
    for (const auto& x : items)
        s += (s.empty() ? "" : ",") + x;
    return s;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    require(!o.family.empty(), "sweep needs --family");
    require(!o.ranges.empty(), "sweep needs at least one --range");
    std::vector<RangeSpec> ranges;
    for (const auto& text : o.ranges)
        ranges.push_back(parse_range(text));
    PositivityOptions p = positivity_options(o);
    p.always_expand = o.always_expand;
    const SweepResult sweep = run_sweep(o.family, ranges, p, o.jobs);
    if (o.out_format == "json") {
        out << dump(to_json(sweep)) << "\n";
    } else {
        out << sweep_csv(sweep);
        if (o.kind != "s")
            out << "positive: " << join(sweep.positive) << "\n";
        if (o.kind != "e")
            out << "schur-positive: " << join(sweep.schur_positive) << "\n";
        for (const auto& b : sweep.bounds)
            out << b << "\n";
    }
    return kOk;
}

int cmd_conjecture(const Options& o, std::ostream& out) {
    require(!o.id.empty(), "conjecture needs --id");
    PositivityOptions p;
    p.degree_cap = degree_cap(o);
    const ConjectureReport r = check_conjecture(o.id, ConjectureLimits{o.max_b, o.max_p, o.max_n}, p);
    out << dump(to_json(r)) << "\n";
    return r.consistent() ? kOk : kNotPositive;
}

int cmd_verify(const Options& o, std::ostream& out) {
    require(!o.suite.empty(), "verify needs --suite");
    std::vector<std::string> names = o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
    bool all_passed = true;
    for (const auto& name : names) {
        const SuiteReport r = run_suite(name, o.seed, o.count);
        out << dump(to_json(r)) << "\n";
        all_passed = all_passed && r.passed;
    }
    return all_passed ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chromatic symmetric function toolkit", "cslab"};
    app.require_subcommand(1);
    Options o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--graph", o.graph, "graph SPEC");
        sub->add_option("--basis", o.basis, "m, e, p or s")->check(CLI::IsMember({"m", "e", "p", "s", "M", "E", "P", "S"}));
        sub->add_option("--partition", o.partitions, "partition as CSV, e.g. 3,2,2");
        sub->add_option("--route", o.route, "stable-m, edge-p, triple-deletion, family-recurrence");
        sub->add_option("--cap", o.cap, "degree cap for full expansions")->check(CLI::PositiveNumber);
        sub->add_option("--out", o.out_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--pretty", o.pretty, "aligned table instead of JSON");
        sub->add_option("--jobs", o.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);
        sub->add_option("--seed", o.seed, "seed for random suites");
        sub->add_flag("--trace", o.trace, "include the computation trace");
    };
    auto* csf = app.add_subcommand("csf", "chromatic symmetric function of a graph");
    auto* coeff = app.add_subcommand("coeff", "one coefficient of X_G");
    auto* schur = app.add_subcommand("schur-coeff", "Schur coefficient through rim hook tabloids");
    auto* pos = app.add_subcommand("positivity", "e- and Schur positivity report");
    auto* sweep = app.add_subcommand("sweep", "positivity over a parameterized family");
    auto* conj = app.add_subcommand("conjecture", "check instances of a stated conjecture");
    auto* verify = app.add_subcommand("verify", "run a property suite");
    for (auto* sub : {csf, coeff, schur, pos, sweep, conj, verify})
        add_common(sub);
    for (auto* sub : {pos, sweep})
        sub->add_option("--kind", o.kind, "e, s or both")->check(CLI::IsMember({"e", "s", "both"}));
    sweep->add_flag("--always-expand", o.always_expand, "expand even when a screener decides");
    pos->add_option("--expect", o.expect, "exit 2 when the verdict is 'no'");
    pos->add_flag("--screen-only", o.screen_only, "skip the expansion when a screener decides");
    sweep->add_option("--family", o.family, "family template, e.g. spider:a,2,1");
    sweep->add_option("--range", o.ranges, "VAR=a..b (repeatable)");
    conj->add_option("--id", o.id, "conjecture id");
    conj->add_option("--max-p", o.max_p);
    conj->add_option("--max-b", o.max_b);
    conj->add_option("--max-n", o.max_n);
    verify->add_option("--suite", o.suite, "suite name or 'all'");
    verify->add_option("--count", o.count, "random instances")->check(CLI::NonNegativeNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << kGrammar;
        return kUsage;
    }

    try {
        if (*csf)
            return cmd_csf(o, out);
        if (*coeff)
            return cmd_coeff(o, out);
        if (*schur)
            return cmd_schur_coeff(o, out);
        if (*pos)
            return cmd_positivity(o, out);
        if (*sweep)
            return cmd_sweep(o, out);
        if (*conj)
            return cmd_conjecture(o, out);
        if (*verify)
            return cmd_verify(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << kGrammar;
        return kUsage;
    } catch (const TooLarge& e) {
        out << "unknown-at-cap: " << e.what() << "\n";
        return kUnknownAtCap;
    } catch (const BadSpec& e) {
        err << "error: " << e.what() << "\n" << kGrammar;
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n" << kGrammar;
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    err << kGrammar;
    return kUsage;
}

}  // namespace cslab::cli
