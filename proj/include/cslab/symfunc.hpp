#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cslab/partition.hpp"

namespace cslab {

enum class Basis { M, E, P, S };

char basis_letter(Basis b);
/// Accepts "m", "e", "p", "s" (either case).
Basis parse_basis(std::string_view text);

/// Full expansions (change of basis through dense transition systems) are refused above this degree.
inline constexpr int kDefaultDegreeCap = 24;

/// Degree cap honoring the CSLAB_CAP environment override.
int default_degree_cap();

/// A homogeneous symmetric function of fixed degree, stored as a sparse
/// partition -> exact rational map in one of the m, e, p, s bases.
/// Terms iterate in reverse-lexicographic order and never hold zero.
class SymFunc {
public:
    using Terms = std::map<Partition, Rational, RevLexLess>;

    SymFunc(Basis basis, int degree);

    static SymFunc unit(Basis basis, const Partition& index, const Rational& coeff = 1);
    /// The degree-0 constant 1.
    static SymFunc one(Basis basis) { return unit(basis, Partition{}); }

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of the basis element indexed by `index` (zero when absent).
    Rational coefficient(const Partition& index) const;

    /// Adds coeff to the term at `index`; the partition must have size `degree()`.
    void add_term(const Partition& index, const Rational& coeff);

    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator-=(const SymFunc& other);
    SymFunc& operator*=(const Rational& scalar);

    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const Rational& s) { return a *= s; }
    friend SymFunc operator*(const Rational& s, SymFunc a) { return a *= s; }

    bool operator==(const SymFunc& other) const;

    /// Human-readable form such as "4e_{4} + 5e_{3,1} - 2e_{2,2}".
    std::string to_string() const;

private:
    void check_compatible(const SymFunc& other) const;

    Basis basis_;
    int degree_;
    Terms terms_;
};

/// Product in the monomial basis.
SymFunc m_multiply(const SymFunc& f, const SymFunc& g);

/// Coefficients of m_nu in m_lambda * m_mu.
std::vector<std::pair<Partition, Integer>> monomial_product(const Partition& lambda, const Partition& mu);

/// Product of two functions in the same basis. E and P multiply by concatenating
/// indices; M uses m_multiply. S is rejected.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

SymFunc e_to_m(const Partition& lambda);
SymFunc p_to_m(const Partition& lambda);
SymFunc s_to_m(const Partition& lambda);

/// Number of semistandard tableaux of shape lambda and content mu.
Integer kostka(const Partition& lambda, const Partition& mu);

/// Expansion of f in the monomial basis.
SymFunc to_monomial(const SymFunc& f);

/// Exact change of basis through the monomial basis and a solve against the
/// transition matrix {b_lambda in m : lambda |- n}. Throws TooLarge above `degree_cap`.
SymFunc change_basis(const SymFunc& f, Basis target, int degree_cap = default_degree_cap());

/// Schur expansion of an e-basis function via [s_lambda] e_mu = K_{lambda', mu}.
/// Needs no linear solve and is used where the e-expansion is already known.
SymFunc e_to_s(const SymFunc& f);

/// Single Schur coefficient of an e-basis function.
Rational e_to_s_coefficient(const SymFunc& f, const Partition& lambda);

/// f(1,...,1,0,0,...) with k ones.
Rational specialize_ones(const SymFunc& f, int k);

/// Term with the least coefficient; ties go to the term that comes first in
/// reverse-lexicographic order. Throws EmptyFunction on the zero function.
std::pair<Partition, Rational> min_coefficient(const SymFunc& f);

}  // namespace cslab
