#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cslab/errors.hpp"
#include "cslab/serialize.hpp"
#include "cslab/symfunc.hpp"
#include "oracles.hpp"

using namespace cslab;

namespace {

SymFunc make(Basis b, std::initializer_list<std::pair<Partition, int>> terms) {
    int degree = terms.size() ? terms.begin()->first.size() : 0;
    SymFunc f(b, degree);
    for (const auto& [p, c] : terms)
        f.add_term(p, c);
    return f;
}

SymFunc claw_m() {
    return make(Basis::M, {{{3, 1}, 1}, {{2, 1, 1}, 6}, {{1, 1, 1, 1}, 24}});
}

// Every [m_μ] of an explicit polynomial in `vars` variables.
void check_against_poly(const SymFunc& m, const oracle::Poly& poly, int vars) {
    for (const auto& mu : enumerate_partitions(m.degree())) {
        if (mu.length() > vars)
            continue;
        CHECK_MESSAGE(m.coefficient(mu) == Rational(oracle::coefficient_of(poly, mu, vars)), mu.to_string());
    }
}

}  // namespace

TEST_CASE("m_multiply small products") {
    const SymFunc m1 = SymFunc::unit(Basis::M, {1});
    CHECK(m_multiply(m1, m1) == make(Basis::M, {{{2}, 1}, {{1, 1}, 2}}));
    const SymFunc m11 = SymFunc::unit(Basis::M, {1, 1});
    CHECK(m_multiply(m11, m1) == make(Basis::M, {{{2, 1}, 1}, {{1, 1, 1}, 3}}));
    CHECK(change_basis(m_multiply(m11, m1), Basis::E) == SymFunc::unit(Basis::E, {2, 1}));
}

TEST_CASE("m_multiply agrees with explicit polynomials") {
    const int vars = 6;
    for (int a = 1; a <= 3; ++a)
        for (const auto& lam : enumerate_partitions(a))
            for (int b = 1; b <= 3; ++b)
                for (const auto& mu : enumerate_partitions(b)) {
                    const SymFunc prod = m_multiply(SymFunc::unit(Basis::M, lam), SymFunc::unit(Basis::M, mu));
                    check_against_poly(prod, oracle::poly_mul(oracle::monomial(lam, vars), oracle::monomial(mu, vars)),
                                       vars);
                }
}

TEST_CASE("e_to_m, p_to_m and s_to_m examples") {
    CHECK(e_to_m({1}) == SymFunc::unit(Basis::M, {1}));
    CHECK(e_to_m({2}) == SymFunc::unit(Basis::M, {1, 1}));
    CHECK(e_to_m({2, 1}) == make(Basis::M, {{{2, 1}, 1}, {{1, 1, 1}, 3}}));
    CHECK(p_to_m({2}) == SymFunc::unit(Basis::M, {2}));
    CHECK(p_to_m({1, 1}) == make(Basis::M, {{{2}, 1}, {{1, 1}, 2}}));
    CHECK(p_to_m({2, 1}) == make(Basis::M, {{{3}, 1}, {{2, 1}, 1}}));
    CHECK(s_to_m({2, 1}) == make(Basis::M, {{{2, 1}, 1}, {{1, 1, 1}, 2}}));
    CHECK(s_to_m({1, 1, 1}) == SymFunc::unit(Basis::M, {1, 1, 1}));
    for (int n = 1; n <= 5; ++n) {
        SymFunc all(Basis::M, n);
        for (const auto& mu : enumerate_partitions(n))
            all.add_term(mu, 1);
        CHECK(s_to_m(Partition({n})) == all);
    }
}

TEST_CASE("e and p products expand like explicit polynomials") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            std::vector<oracle::Poly> ef, pf;
            for (int part : lam.parts()) {
                ef.push_back(oracle::elementary(part, n));
                pf.push_back(oracle::power_sum(part, n));
            }
            check_against_poly(e_to_m(lam), oracle::product(ef, n), n);
            check_against_poly(p_to_m(lam), oracle::product(pf, n), n);
        }
}

TEST_CASE("kostka numbers match tableau enumeration") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& lam : enumerate_partitions(n))
            for (const auto& mu : enumerate_partitions(n))
                CHECK_MESSAGE(kostka(lam, mu) == oracle::ssyt_count(lam, mu), lam.to_string() << mu.to_string());
}

TEST_CASE("claw change of basis") {
    const SymFunc e = change_basis(claw_m(), Basis::E);
    CHECK(e == make(Basis::E, {{{4}, 4}, {{3, 1}, 5}, {{2, 2}, -2}, {{2, 1, 1}, 1}}));
    CHECK(e.to_string() == "4e_{4} + 5e_{3,1} - 2e_{2,2} + e_{2,1,1}");
    const SymFunc s = change_basis(claw_m(), Basis::S);
    CHECK(s == make(Basis::S, {{{3, 1}, 1}, {{2, 2}, -1}, {{2, 1, 1}, 5}, {{1, 1, 1, 1}, 8}}));
    CHECK(e_to_s(e) == s);
    CHECK(e_to_s_coefficient(e, {2, 2}) == -1);
    CHECK(min_coefficient(e) == std::pair<Partition, Rational>{{2, 2}, -2});
    CHECK(min_coefficient(s) == std::pair<Partition, Rational>{{2, 2}, -1});
}

TEST_CASE("change_basis round trips through every basis") {
    const Basis all[] = {Basis::M, Basis::E, Basis::P, Basis::S};
    CHECK(change_basis(change_basis(SymFunc::unit(Basis::E, {2, 1}), Basis::S), Basis::E) ==
          SymFunc::unit(Basis::E, {2, 1}));
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : enumerate_partitions(n))
            for (Basis from : all)
                for (Basis to : all) {
                    const SymFunc f = SymFunc::unit(from, lam, 3);
                    const SymFunc g = change_basis(f, to);
                    CHECK(g.basis() == to);
                    CHECK(change_basis(g, from) == f);
                    CHECK(to_monomial(g) == to_monomial(f));
                }
}

TEST_CASE("e_to_s agrees with the dense solve") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            const SymFunc e = SymFunc::unit(Basis::E, lam);
            CHECK(e_to_s(e) == change_basis(e, Basis::S));
        }
}

TEST_CASE("change_basis honors the degree cap") {
    CHECK_THROWS_AS(change_basis(SymFunc::unit(Basis::E, {4}), Basis::M, 3), TooLarge);
}

TEST_CASE("multiply") {
    const SymFunc e = multiply(SymFunc::unit(Basis::E, {2}), SymFunc::unit(Basis::E, {3, 1}, 2));
    CHECK(e == SymFunc::unit(Basis::E, {3, 2, 1}, 2));
    CHECK(multiply(SymFunc::one(Basis::P), SymFunc::unit(Basis::P, {2})) == SymFunc::unit(Basis::P, {2}));
    CHECK_THROWS(multiply(SymFunc::unit(Basis::S, {1}), SymFunc::unit(Basis::S, {1})));
}

TEST_CASE("specialize_ones") {
    CHECK(specialize_ones(SymFunc::unit(Basis::E, {2}, 2), 2) == 2);
    const SymFunc claw = claw_m();
    for (Basis b : {Basis::M, Basis::E, Basis::P, Basis::S}) {
        const SymFunc f = change_basis(claw, b);
        CHECK(specialize_ones(f, 1) == 0);
        CHECK(specialize_ones(f, 2) == 2);
        CHECK(specialize_ones(f, 3) == 24);
    }
}

TEST_CASE("min_coefficient") {
    CHECK(min_coefficient(SymFunc::unit(Basis::E, {2}, 2)) == std::pair<Partition, Rational>{{2}, 2});
    CHECK_THROWS_AS(min_coefficient(SymFunc(Basis::E, 3)), EmptyFunction);
}

TEST_CASE("arithmetic keeps terms canonical") {
    SymFunc f = SymFunc::unit(Basis::E, {2, 1}) + SymFunc::unit(Basis::E, {3});
    f -= SymFunc::unit(Basis::E, {2, 1});
    CHECK(f == SymFunc::unit(Basis::E, {3}));
    CHECK(f.term_count() == 1);
    CHECK_THROWS(f += SymFunc::unit(Basis::M, {3}));
    CHECK_THROWS(f.add_term({2}, 1));
}

TEST_CASE("json round trip") {
    const SymFunc e = change_basis(claw_m(), Basis::E);
    CHECK(symfunc_from_json(to_json(e)) == e);
    CHECK(to_json(e).dump() ==
          R"({"basis":"e","degree":4,"terms":[{"partition":[4],"coeff":"4"},{"partition":[3,1],"coeff":"5"},)"
          R"({"partition":[2,2],"coeff":"-2"},{"partition":[2,1,1],"coeff":"1"}]})");
    const SymFunc half = SymFunc::unit(Basis::P, {2}, Rational(1, 2));
    CHECK(symfunc_from_json(to_json(half)) == half);
}
