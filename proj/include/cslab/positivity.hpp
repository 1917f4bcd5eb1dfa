#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cslab/csf.hpp"
#include "cslab/graph.hpp"
#include "cslab/symfunc.hpp"

namespace cslab {

enum class Verdict { Yes, No, UnknownAtCap };

/// "yes", "no", "unknown-at-cap".
std::string verdict_name(Verdict v);

struct ScreenerResult {
    std::string name;
    Basis target = Basis::E;  // which positivity the screener is necessary for
    bool passed = true;
    std::string detail;
};

struct Witness {
    Basis basis = Basis::E;
    /// "coefficient" for an extracted negative coefficient, otherwise the failing screener's name.
    std::string source = "coefficient";
    std::optional<Partition> partition;
    std::optional<Rational> coeff;
};

struct PositivityOptions {
    int recurrence_cap = kDefaultRecurrenceCap;
    /// Cap for generic routes and full Schur expansions.
    int degree_cap = default_degree_cap();
    int block_cap = kDefaultBlockCap;
    /// Expand even when a screener already decided the verdict (sweeps turn this off).
    bool always_expand = true;
    bool check_e = true;
    bool check_s = true;
    /// Schur coefficients to compute through rim hook tabloids in addition to (or instead of) a full expansion.
    std::vector<Partition> schur_targets;
};

struct PositivityReport {
    std::string graph;
    int order = 0;
    Verdict e_positive = Verdict::UnknownAtCap;
    Verdict schur_positive = Verdict::UnknownAtCap;
    bool e_checked = false;
    bool s_checked = false;
    std::optional<Witness> e_witness;
    std::optional<Witness> s_witness;
    std::vector<ScreenerResult> screeners;
    /// Least coefficient of the full expansion, when one was computed.
    std::optional<std::pair<Partition, Rational>> e_min;
    std::optional<std::pair<Partition, Rational>> s_min;
    std::vector<std::pair<Partition, Integer>> schur_targeted;
    std::vector<std::string> notes;

    bool screener_failed(Basis target) const;
    std::vector<std::string> failed_screeners() const;
};

/// Legs of the spider a descriptor denotes (spider, claw, star:l with l >= 3, broom:p,l with l >= 2).
std::optional<Partition> spider_legs(const FamilySpec& spec);

/// Every arithmetic necessary condition for e-positivity that applies to S(λ).
std::vector<ScreenerResult> screen_spider(const Partition& legs);

/// [e_{3,2^K}] X_{S(λ)} = 4(k_1+k_2-k_3-...-k_d)+2d-1 for legs {2k_1+1, 2k_2+1, 2k_3, ..., 2k_d}.
/// Throws BadParity unless exactly two legs are odd.
Integer two_odd_legs_coefficient(const Partition& legs);

/// Largest a for which S(a,b,1), b even, can be e-positive (2b+2 when b = 2 mod 3, else b^2+b).
int ab1_e_positive_bound(int b);

PositivityReport e_positivity(const FamilySpec& spec, const PositivityOptions& opts = {});
PositivityReport schur_positivity(const FamilySpec& spec, const PositivityOptions& opts = {});
/// Both verdicts in one report, sharing the e-expansion.
PositivityReport positivity(const FamilySpec& spec, const PositivityOptions& opts = {});

// ------------------------------------------------------------------ sweeps

struct RangeSpec {
    std::string var;
    int lo = 0;
    int hi = 0;
};

/// Parses "a=2..30".
RangeSpec parse_range(std::string_view text);

/// A family descriptor whose integer slots are affine expressions in named variables, e.g. "dbroom:2,2p-1,2".
struct FamilyTemplate {
    std::string kind;               // text before ':'
    std::vector<std::string> slots; // raw expressions

    static FamilyTemplate parse(std::string_view text);
    /// Substitutes the variables; spider legs are sorted into weakly decreasing order.
    FamilySpec instantiate(const std::map<std::string, int>& values) const;
};

/// Value of an affine expression such as "2p-1", "b+1", "3*a", "7".
int eval_affine(std::string_view expr, const std::map<std::string, int>& values);

struct SweepInstance {
    std::map<std::string, int> params;
    std::string graph;
    PositivityReport report;
    std::string error;  // nonempty when the instance could not be built or evaluated
};

struct SweepResult {
    std::string family;
    std::vector<RangeSpec> ranges;
    std::vector<SweepInstance> instances;  // in parameter order
    std::vector<std::string> positive;         // e verdict yes
    std::vector<std::string> schur_positive;   // Schur verdict yes
    std::vector<std::string> bounds;           // finite-range provenance, when known

    std::string params_label(const SweepInstance& inst) const;
};

/// Evaluates every instance (in parallel with `jobs` threads) and merges in parameter order.
SweepResult run_sweep(const std::string& family_template, const std::vector<RangeSpec>& ranges,
                      const PositivityOptions& opts = {}, int jobs = 1);

// ------------------------------------------------------------------ conjecture checks

struct ConjectureLimits {
    int max_b = 0;  // 0 selects the per-conjecture default
    int max_p = 0;
    int max_n = 0;
};

struct ConjectureInstance {
    std::string graph;
    std::string item;
    Verdict verdict = Verdict::UnknownAtCap;
    std::optional<Witness> witness;
};

struct ConjectureReport {
    std::string id;
    std::string statement;
    std::vector<ConjectureInstance> instances;
    std::optional<ConjectureInstance> counterexample;
    int unknown = 0;
    std::vector<std::string> notes;

    bool consistent() const { return !counterexample.has_value(); }
};

/// Known ids: spider-ab1-e, spider-ab1-schur, spider-ab1-schur-small, double-broom-schur
/// (short aliases 3.5, 3.6, 3.7, 5.4). Checks instances only; stops at the first counterexample.
ConjectureReport check_conjecture(const std::string& id, const ConjectureLimits& limits = {},
                                  const PositivityOptions& opts = {});

}  // namespace cslab
