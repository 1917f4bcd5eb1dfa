#include "cslab/symfunc.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "cslab/errors.hpp"
#include "cslab/linear_solve.hpp"

namespace cslab {

char basis_letter(Basis b) {
    switch (b) {
    case Basis::M: return 'm';
    case Basis::E: return 'e';
    case Basis::P: return 'p';
    case Basis::S: return 's';
    }
    return '?';
}

Basis parse_basis(std::string_view text) {
    if (text == "m" || text == "M") return Basis::M;
    if (text == "e" || text == "E") return Basis::E;
    if (text == "p" || text == "P") return Basis::P;
    if (text == "s" || text == "S") return Basis::S;
    throw std::invalid_argument("unknown basis '" + std::string(text) + "' (expected m, e, p or s)");
}

int default_degree_cap() {
    if (const char* env = std::getenv("CSLAB_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 1000)
            return static_cast<int>(v);
    }
    return kDefaultDegreeCap;
}

// ---------------------------------------------------------------- SymFunc

SymFunc::SymFunc(Basis basis, int degree) : basis_(basis), degree_(degree) {
    if (degree < 0)
        throw std::invalid_argument("SymFunc: negative degree");
}

SymFunc SymFunc::unit(Basis basis, const Partition& index, const Rational& coeff) {
    SymFunc f(basis, index.size());
    f.add_term(index, coeff);
    return f;
}

Rational SymFunc::coefficient(const Partition& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add_term(const Partition& index, const Rational& coeff) {
    if (index.size() != degree_)
        throw DegreeMismatch("term " + index.to_string() + " does not have degree " +
                             std::to_string(degree_));
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(index, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void SymFunc::check_compatible(const SymFunc& other) const {
    if (basis_ != other.basis_)
        throw std::invalid_argument("SymFunc: basis mismatch in addition");
    if (degree_ != other.degree_)
        throw DegreeMismatch("SymFunc: degree mismatch in addition");
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
    check_compatible(other);
    for (const auto& [p, c] : other.terms_)
        add_term(p, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
    check_compatible(other);
    for (const auto& [p, c] : other.terms_)
        add_term(p, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, c] : terms_)
        c *= scalar;
    return *this;
}

bool SymFunc::operator==(const SymFunc& other) const {
    return basis_ == other.basis_ && degree_ == other.degree_ && terms_ == other.terms_;
}

std::string SymFunc::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        Rational mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1 || p.empty())
            out << mag.get_str();
        if (!p.empty())
            out << basis_letter(basis_) << "_{" << format_partition(p) << "}";
    }
    return out.str();
}

// ---------------------------------------------------------------- monomial products

namespace {

using ValueCounts = std::map<int, int>;  // value -> remaining count; key 0 tracks padding zeros

std::string counts_key(const ValueCounts& c) {
    std::string key;
    for (auto [v, n] : c)
        if (n > 0) {
            key += std::to_string(v);
            key += ':';
            key += std::to_string(n);
            key += ';';
        }
    return key;
}

// Number of pairs (alpha, beta) of distinct rearrangements with alpha + beta = target,
// where alpha uses the multiset `a` and beta uses `b` (both including padding zeros).
Integer count_pairs(const std::vector<int>& target, std::size_t pos, ValueCounts& a, ValueCounts& b,
                    std::unordered_map<std::string, Integer>& memo) {
    if (pos == target.size())
        return 1;
    std::string key = std::to_string(pos) + "|" + counts_key(a) + "|" + counts_key(b);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    Integer total = 0;
    const int t = target[pos];
    for (auto& [va, na] : a) {
        if (na == 0 || va > t)
            continue;
        const int vb = t - va;
        auto itb = b.find(vb);
        if (itb == b.end() || itb->second == 0)
            continue;
        --na;
        --itb->second;
        total += count_pairs(target, pos + 1, a, b, memo);
        ++na;
        ++itb->second;
    }
    memo.emplace(std::move(key), total);
    return total;
}

void merge_candidates(const Partition& mu, std::size_t idx, std::vector<int>& base,
                      std::vector<bool>& used, std::vector<int>& extra,
                      std::map<Partition, bool, RevLexLess>& out) {
    if (idx == mu.parts().size()) {
        std::vector<int> parts = base;
        parts.insert(parts.end(), extra.begin(), extra.end());
        out[Partition::from_unsorted(std::move(parts))] = true;
        return;
    }
    const int part = mu.parts()[idx];
    extra.push_back(part);
    merge_candidates(mu, idx + 1, base, used, extra, out);
    extra.pop_back();
    int last_value = -1;
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (used[i] || base[i] == last_value)
            continue;
        last_value = base[i];
        used[i] = true;
        base[i] += part;
        merge_candidates(mu, idx + 1, base, used, extra, out);
        base[i] -= part;
        used[i] = false;
    }
}

struct PairKey {
    Partition a, b;
    bool operator==(const PairKey& o) const { return a == o.a && b == o.b; }
};
struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const noexcept {
        PartitionHash h;
        return h(k.a) * 31 + h(k.b);
    }
};

std::mutex g_product_mutex;
std::unordered_map<PairKey, std::vector<std::pair<Partition, Integer>>, PairKeyHash> g_product_cache;

}  // namespace

std::vector<std::pair<Partition, Integer>> monomial_product(const Partition& lambda, const Partition& mu) {
    PairKey key{lambda, mu};
    {
        std::lock_guard lock(g_product_mutex);
        if (auto it = g_product_cache.find(key); it != g_product_cache.end())
            return it->second;
    }
    std::map<Partition, bool, RevLexLess> candidates;
    std::vector<int> base = lambda.parts();
    std::vector<bool> used(base.size(), false);
    std::vector<int> extra;
    merge_candidates(mu, 0, base, used, extra, candidates);

    std::vector<std::pair<Partition, Integer>> result;
    for (const auto& [nu, unused] : candidates) {
        const int k = nu.length();
        ValueCounts a, b;
        for (int x : lambda.parts())
            ++a[x];
        for (int x : mu.parts())
            ++b[x];
        a[0] += k - lambda.length();
        b[0] += k - mu.length();
        std::unordered_map<std::string, Integer> memo;
        Integer c = count_pairs(nu.parts(), 0, a, b, memo);
        if (c != 0)
            result.emplace_back(nu, c);
    }
    std::lock_guard lock(g_product_mutex);
    g_product_cache.emplace(std::move(key), result);
    return result;
}

SymFunc m_multiply(const SymFunc& f, const SymFunc& g) {
    if (f.basis() != Basis::M || g.basis() != Basis::M)
        throw std::invalid_argument("m_multiply: both factors must be in the monomial basis");
    SymFunc out(Basis::M, f.degree() + g.degree());
    for (const auto& [lambda, c] : f.terms())
        for (const auto& [mu, d] : g.terms()) {
            const Rational cd = c * d;
            for (const auto& [nu, k] : monomial_product(lambda, mu))
                out.add_term(nu, cd * Rational(k));
        }
    return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    if (f.basis() != g.basis())
        throw std::invalid_argument("multiply: basis mismatch");
    switch (f.basis()) {
    case Basis::M:
        return m_multiply(f, g);
    case Basis::E:
    case Basis::P: {
        SymFunc out(f.basis(), f.degree() + g.degree());
        for (const auto& [lambda, c] : f.terms())
            for (const auto& [mu, d] : g.terms())
                out.add_term(merge(lambda, mu), c * d);
        return out;
    }
    case Basis::S:
        break;
    }
    throw std::invalid_argument("multiply: Schur products are not supported");
}

// ---------------------------------------------------------------- expansions in m

namespace {

template <class Fn>
SymFunc cached_expansion(std::mutex& mtx, std::unordered_map<Partition, SymFunc, PartitionHash>& cache,
                         const Partition& lambda, Fn compute) {
    {
        std::lock_guard lock(mtx);
        if (auto it = cache.find(lambda); it != cache.end())
            return it->second;
    }
    SymFunc value = compute();
    std::lock_guard lock(mtx);
    cache.emplace(lambda, value);
    return value;
}

std::mutex g_e_mutex, g_p_mutex, g_s_mutex;
std::unordered_map<Partition, SymFunc, PartitionHash> g_e_cache, g_p_cache, g_s_cache;

}  // namespace

SymFunc e_to_m(const Partition& lambda) {
    return cached_expansion(g_e_mutex, g_e_cache, lambda, [&] {
        SymFunc acc = SymFunc::one(Basis::M);
        for (int part : lambda.parts())
            acc = m_multiply(acc, SymFunc::unit(Basis::M, Partition(std::vector<int>(static_cast<std::size_t>(part), 1))));
        return acc;
    });
}

SymFunc p_to_m(const Partition& lambda) {
    return cached_expansion(g_p_mutex, g_p_cache, lambda, [&] {
        SymFunc acc = SymFunc::one(Basis::M);
        for (int part : lambda.parts())
            acc = m_multiply(acc, SymFunc::unit(Basis::M, Partition{part}));
        return acc;
    });
}

// ---------------------------------------------------------------- Kostka numbers

namespace {

// All shapes obtained from `shape` by adding a horizontal strip of `size` cells.
void add_horizontal_strips(const std::vector<int>& shape, int size, std::vector<std::vector<int>>& out) {
    const std::size_t len = shape.size();
    std::vector<int> next(len + 1, 0);
    // Row i may grow up to shape[i-1] (row 0 unbounded).
    auto rec = [&](auto&& self, std::size_t row, int remaining) -> void {
        if (row == len + 1) {
            if (remaining == 0) {
                std::vector<int> shaped = next;
                while (!shaped.empty() && shaped.back() == 0)
                    shaped.pop_back();
                out.push_back(std::move(shaped));
            }
            return;
        }
        const int current = row < len ? shape[row] : 0;
        const int cap = row == 0 ? current + remaining : std::min(shape[row - 1], current + remaining);
        for (int v = current; v <= cap; ++v) {
            next[row] = v;
            self(self, row + 1, remaining - (v - current));
        }
    };
    rec(rec, 0, size);
}

// Shapes nu such that shape/nu is a horizontal strip of `size` cells.
void remove_horizontal_strips(const std::vector<int>& shape, int size, std::vector<std::vector<int>>& out) {
    const std::size_t len = shape.size();
    std::vector<int> next(len, 0);
    auto rec = [&](auto&& self, std::size_t row, int remaining) -> void {
        if (row == len) {
            if (remaining == 0) {
                std::vector<int> shaped = next;
                while (!shaped.empty() && shaped.back() == 0)
                    shaped.pop_back();
                out.push_back(std::move(shaped));
            }
            return;
        }
        // nu_row lies in [shape[row+1], shape[row]].
        const int lo = row + 1 < len ? shape[row + 1] : 0;
        for (int v = shape[row]; v >= lo; --v) {
            const int removed = shape[row] - v;
            if (removed > remaining)
                break;
            next[row] = v;
            self(self, row + 1, remaining - removed);
        }
    };
    rec(rec, 0, size);
}

struct KostkaKey {
    std::vector<int> shape;
    std::vector<int> content;
    bool operator==(const KostkaKey& o) const { return shape == o.shape && content == o.content; }
};
struct KostkaKeyHash {
    std::size_t operator()(const KostkaKey& k) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (int x : k.shape)
            h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
        h = (h ^ 0xff) * 1099511628211ULL;
        for (int x : k.content)
            h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
        return h;
    }
};

std::mutex g_kostka_mutex;
std::unordered_map<KostkaKey, Integer, KostkaKeyHash> g_kostka_cache;

// SSYT of `shape` with content[0..len): the cells holding the largest entry form a
// horizontal strip of size content[len-1]; peel it and recurse.
Integer kostka_rec(const std::vector<int>& shape, const std::vector<int>& content, std::size_t len) {
    if (len == 0)
        return shape.empty() ? 1 : 0;
    // Column strictness: at most `len` rows can be filled with `len` distinct values.
    if (shape.size() > len)
        return 0;
    if (shape.empty())
        return 0;
    KostkaKey key{shape, std::vector<int>(content.begin(), content.begin() + static_cast<long>(len))};
    {
        std::lock_guard lock(g_kostka_mutex);
        if (auto it = g_kostka_cache.find(key); it != g_kostka_cache.end())
            return it->second;
    }
    std::vector<std::vector<int>> smaller;
    remove_horizontal_strips(shape, content[len - 1], smaller);
    Integer total = 0;
    for (const auto& nu : smaller)
        total += kostka_rec(nu, content, len - 1);
    std::lock_guard lock(g_kostka_mutex);
    g_kostka_cache.emplace(std::move(key), total);
    return total;
}

}  // namespace

Integer kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        return 0;
    if (!dominates(lambda, mu))
        return 0;
    return kostka_rec(lambda.parts(), mu.parts(), mu.parts().size());
}

SymFunc s_to_m(const Partition& lambda) {
    return cached_expansion(g_s_mutex, g_s_cache, lambda, [&] {
        SymFunc out(Basis::M, lambda.size());
        for (const Partition& mu : enumerate_partitions(lambda.size()))
            out.add_term(mu, Rational(kostka(lambda, mu)));
        return out;
    });
}

SymFunc to_monomial(const SymFunc& f) {
    if (f.basis() == Basis::M)
        return f;
    SymFunc out(Basis::M, f.degree());
    for (const auto& [lambda, c] : f.terms()) {
        SymFunc expansion = f.basis() == Basis::E   ? e_to_m(lambda)
                            : f.basis() == Basis::P ? p_to_m(lambda)
                                                    : s_to_m(lambda);
        out += expansion * c;
    }
    return out;
}

// ---------------------------------------------------------------- change of basis

namespace {

struct TransitionSystem {
    std::vector<Partition> index;  // reverse-lexicographic
    std::map<Partition, int, RevLexLess> position;
    SparseMatrix matrix{0};        // matrix[mu][lambda] = [m_mu] b_lambda
};

std::mutex g_transition_mutex;
std::map<std::pair<Basis, int>, std::shared_ptr<const TransitionSystem>> g_transition_cache;

std::shared_ptr<const TransitionSystem> transition_system(Basis basis, int n) {
    {
        std::lock_guard lock(g_transition_mutex);
        if (auto it = g_transition_cache.find({basis, n}); it != g_transition_cache.end())
            return it->second;
    }
    auto sys = std::make_shared<TransitionSystem>();
    sys->index = enumerate_partitions(n);
    for (std::size_t i = 0; i < sys->index.size(); ++i)
        sys->position[sys->index[i]] = static_cast<int>(i);
    sys->matrix = SparseMatrix(static_cast<int>(sys->index.size()));
    for (std::size_t col = 0; col < sys->index.size(); ++col) {
        SymFunc expansion = to_monomial(SymFunc::unit(basis, sys->index[col]));
        for (const auto& [mu, c] : expansion.terms())
            sys->matrix.set(sys->position.at(mu), static_cast<int>(col), c);
    }
    std::lock_guard lock(g_transition_mutex);
    auto [it, inserted] = g_transition_cache.emplace(std::make_pair(basis, n), sys);
    return it->second;
}

}  // namespace

SymFunc change_basis(const SymFunc& f, Basis target, int degree_cap) {
    if (f.basis() == target)
        return f;
    if (f.degree() > degree_cap)
        throw TooLarge("change_basis: degree " + std::to_string(f.degree()) + " exceeds cap " +
                       std::to_string(degree_cap));
    SymFunc in_m = to_monomial(f);
    if (target == Basis::M)
        return in_m;
    auto sys = transition_system(target, f.degree());
    std::vector<Rational> rhs(sys->index.size(), 0);
    for (const auto& [mu, c] : in_m.terms())
        rhs[static_cast<std::size_t>(sys->position.at(mu))] = c;
    std::vector<Rational> x = solve_exact(sys->matrix, rhs);
    SymFunc out(target, f.degree());
    for (std::size_t i = 0; i < x.size(); ++i)
        out.add_term(sys->index[i], x[i]);
    return out;
}

// ---------------------------------------------------------------- e -> s via Kostka numbers

namespace {

using ShapeCounts = std::map<std::vector<int>, Integer>;

ShapeCounts add_strips(const ShapeCounts& state, int size) {
    ShapeCounts next;
    std::vector<std::vector<int>> grown;
    for (const auto& [shape, count] : state) {
        grown.clear();
        add_horizontal_strips(shape, size, grown);
        for (auto& g : grown)
            next[std::move(g)] += count;
    }
    return next;
}

// Terms sharing the first `depth` parts share the same table of Kostka numbers K_{nu, prefix}.
void e_to_s_rec(const std::vector<std::pair<Partition, Rational>>& terms, std::size_t begin, std::size_t end,
                std::size_t depth, const ShapeCounts& state, SymFunc& out) {
    std::size_t i = begin;
    while (i < end) {
        const Partition& mu = terms[i].first;
        if (static_cast<std::size_t>(mu.length()) == depth) {
            for (const auto& [shape, k] : state)
                out.add_term(conjugate(Partition(shape)), terms[i].second * Rational(k));
            ++i;
            continue;
        }
        const int part = mu.parts()[depth];
        std::size_t j = i;
        while (j < end && static_cast<std::size_t>(terms[j].first.length()) > depth &&
               terms[j].first.parts()[depth] == part)
            ++j;
        e_to_s_rec(terms, i, j, depth + 1, add_strips(state, part), out);
        i = j;
    }
}

}  // namespace

SymFunc e_to_s(const SymFunc& f) {
    if (f.basis() != Basis::E)
        throw std::invalid_argument("e_to_s: input must be in the elementary basis");
    // Reverse-lexicographic order groups equal prefixes together, with shorter
    // (complete) prefixes ahead of their extensions.
    std::vector<std::pair<Partition, Rational>> terms(f.terms().begin(), f.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.first.parts().begin(), a.first.parts().end(),
                                            b.first.parts().begin(), b.first.parts().end(),
                                            std::greater<>());
    });
    SymFunc out(Basis::S, f.degree());
    ShapeCounts start;
    start[{}] = 1;
    e_to_s_rec(terms, 0, terms.size(), 0, start, out);
    return out;
}

Rational e_to_s_coefficient(const SymFunc& f, const Partition& lambda) {
    if (f.basis() != Basis::E)
        throw std::invalid_argument("e_to_s_coefficient: input must be in the elementary basis");
    if (lambda.size() != f.degree())
        throw DegreeMismatch("e_to_s_coefficient: partition size differs from degree");
    const Partition shape = conjugate(lambda);
    Rational total = 0;
    for (const auto& [mu, c] : f.terms())
        total += c * Rational(kostka(shape, mu));
    return total;
}

// ---------------------------------------------------------------- evaluation

Rational specialize_ones(const SymFunc& f, int k) {
    if (k < 0)
        throw std::invalid_argument("specialize_ones: k must be nonnegative");
    Rational total = 0;
    for (const auto& [lambda, c] : f.terms()) {
        Rational value = 1;
        switch (f.basis()) {
        case Basis::M: {
            // Distinct placements of the parts into k slots.
            if (lambda.length() > k) {
                value = 0;
                break;
            }
            Integer v = factorial(k) / factorial(k - lambda.length());
            for (auto [part, mult] : MultiplicityForm::of(lambda).mult)
                v /= factorial(mult);
            value = Rational(v);
            break;
        }
        case Basis::E:
            for (int part : lambda.parts())
                value *= Rational(binomial(k, part));
            break;
        case Basis::P:
            for (std::size_t i = 0; i < lambda.parts().size(); ++i)
                value *= k;
            break;
        case Basis::S: {
            // Hook-content formula.
            const Partition conj = conjugate(lambda);
            for (int i = 0; i < lambda.length(); ++i)
                for (int j = 0; j < lambda[i]; ++j) {
                    const int hook = (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
                    Rational factor(k + j - i, hook);
                    factor.canonicalize();
                    value *= factor;
                }
            break;
        }
        }
        total += c * value;
    }
    return total;
}

std::pair<Partition, Rational> min_coefficient(const SymFunc& f) {
    if (f.is_zero())
        throw EmptyFunction("min_coefficient: function has no terms");
    auto best = f.terms().begin();
    for (auto it = f.terms().begin(); it != f.terms().end(); ++it)
        if (it->second < best->second)
            best = it;
    return {best->first, best->second};
}

}  // namespace cslab
