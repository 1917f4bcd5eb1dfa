#include "cslab/partition.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cslab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::to_string() const { return "(" + format_partition(*this) + ")"; }

bool RevLexLess::operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size())
        return a.size() < b.size();
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(),
                                        a.parts().end());
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts()) {
        h ^= static_cast<std::size_t>(x);
        h *= 0x100000001b3ULL;
    }
    return h;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_) {
        if (x < 1)
            throw std::invalid_argument("composition parts must be positive");
        n_ += x;
    }
}

std::string Composition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

MultiplicityForm MultiplicityForm::of(const Partition& p) {
    MultiplicityForm f;
    for (int x : p.parts())
        ++f.mult[x];
    return f;
}

Partition MultiplicityForm::to_partition() const {
    std::vector<int> parts;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it)
        parts.insert(parts.end(), static_cast<std::size_t>(it->second), it->first);
    return Partition(std::move(parts));
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        enumerate_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0)
        throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    enumerate_rec(n, n, cur, out);
    return out;
}

Integer partition_count(int n) {
    if (n < 0)
        return 0;
    // p(n) via counting partitions with bounded largest part.
    std::vector<Integer> table(static_cast<std::size_t>(n) + 1, 0);
    table[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int m = part; m <= n; ++m)
            table[static_cast<std::size_t>(m)] += table[static_cast<std::size_t>(m - part)];
    return table[static_cast<std::size_t>(n)];
}

Partition conjugate(const Partition& p) {
    if (p.empty())
        return {};
    std::vector<int> parts(static_cast<std::size_t>(p[0]), 0);
    for (int x : p.parts())
        for (int j = 0; j < x; ++j)
            ++parts[static_cast<std::size_t>(j)];
    return Partition(std::move(parts));
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        return false;
    int sa = 0, sb = 0;
    const int len = std::max(a.length(), b.length());
    for (int i = 0; i < len; ++i) {
        sa += a.part_or_zero(i);
        sb += b.part_or_zero(i);
        if (sa < sb)
            return false;
    }
    return true;
}

Partition merge(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.parts().size() + b.parts().size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(parts), std::greater<>());
    return Partition(std::move(parts));
}

Integer factorial(int n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

PartitionFactorials factorials(const Partition& p) {
    PartitionFactorials f{1, 1};
    for (int x : p.parts())
        f.part_factorial *= factorial(x);
    for (auto [value, count] : MultiplicityForm::of(p).mult)
        f.multiplicity_factorial *= factorial(count);
    return f;
}

bool numerical_semigroup_gap(int k, int n) {
    if (k < 2)
        throw std::invalid_argument("numerical_semigroup_gap: k must be at least 2");
    if (n >= k * (k - 1))
        return true;
    const int q = n / k;
    const int r = n % k;
    return q >= 1 && q <= k - 2 && r <= q;
}

Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad partition syntax: '" + std::string(text) + "'");
        parts.push_back(value);
        pos = end + 1;
    }
    return Partition(std::move(parts));
}

std::string format_partition(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

}  // namespace cslab
