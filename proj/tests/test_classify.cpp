#include <doctest.h>

#include <random>

#include "fthresh/classify.hpp"
#include "support.hpp"

using namespace fthresh;
using namespace testsupport;

namespace {

// random g in m^[q] with ord(g) = q, as a combination of q-th powers
Polynomial random_bracket_element(std::mt19937_64& rng, std::uint32_t p,
                                  std::uint64_t q) {
    for (;;) {
        Polynomial g(p, 2);
        Polynomial xq = Polynomial::monomial(p, {static_cast<std::uint32_t>(q), 0});
        Polynomial yq = Polynomial::monomial(p, {0, static_cast<std::uint32_t>(q)});
        auto a = random_poly(rng, p, 2, 2, 2);
        auto b = random_poly(rng, p, 2, 2, 2);
        if (rng() % 2)
            g = xq * a + yq * b;
        else
            g = xq + yq * b;
        if (!g.is_zero() && g.ord() == q) return g;
    }
}

} // namespace

TEST_CASE("factor_d") {
    auto f = factor_d(12, 2);
    CHECK(f.q == 4);
    CHECK(f.s == 3);
    f = factor_d(7, 7);
    CHECK(f.q == 7);
    CHECK(f.s == 1);
    f = factor_d(45, 3);
    CHECK(f.q == 9);
    CHECK(f.s == 5);
    CHECK_THROWS_AS(factor_d(0, 2), precondition_error);
}

TEST_CASE("in_bracket_m") {
    CHECK(in_bracket_m(Pxy("x^4 + y^5", 2), 4));
    CHECK_FALSE(in_bracket_m(Pxy("x*y", 2), 2));
    CHECK(in_bracket_m(Pxy("x", 2), 1));
    CHECK_FALSE(in_bracket_m(Pxy("1 + x", 2), 1));
}

TEST_CASE("classify on pinned inputs") {
    // s = 1: membership in m^[q] is the whole story
    auto v = classify_minimal(Pxy("x^2 + y^6", 2));
    CHECK(v.d == 2);
    CHECK(v.q == 2);
    CHECK(v.s == 1);
    CHECK(v.minimal);
    CHECK(v.certified);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->second == Pxy("x^2 + y^6", 2));
    CHECK(v.bracket.lo < make_rat(1, 2));
    CHECK(make_rat(1, 2) <= v.bracket.hi);

    // x y has threshold 1 > 1/2: certified non-minimal
    v = classify_minimal(Pxy("x*y", 2), 4);
    CHECK_FALSE(v.minimal);
    CHECK(v.certified);
    CHECK(v.bracket.lo > make_rat(1, 2));

    // cube of a bracket element: root recovery plus membership
    auto g = Pxy("x^2 + y^4 + x*y^3", 2);
    v = classify_minimal(g.pow(3), 10);
    CHECK(v.d == 6);
    CHECK(v.q == 2);
    CHECK(v.s == 3);
    CHECK(v.minimal);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->second == g);
    CHECK(v.bracket.lo < make_rat(1, 6));
    CHECK(make_rat(1, 6) <= v.bracket.hi);

    // scalar unit in front: 2 x^2 = 2 (x)^2 over F_3 still attains 1/2
    v = classify_minimal(P("2*x^2", 3, vars_x()), 6);
    CHECK(v.minimal);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->first == Fp(2, 3));
    CHECK(v.witness->second == P("x", 3, vars_x()));

    CHECK_THROWS_AS(classify_minimal(Polynomial(2, 2)), precondition_error);
    CHECK_THROWS_AS(classify_minimal(Pxy("1 + x", 2)), precondition_error);
}

TEST_CASE("converse soundness on random bracket powers") {
    std::mt19937_64 rng(61);
    int done = 0;
    while (done < 100) {
        std::uint32_t p = (rng() % 2) ? 2 : 3;
        std::uint32_t eq = rng() % 3;
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < eq; ++i) q *= p;
        std::uint64_t s = 1 + rng() % 3;
        if (s % p == 0) continue;

        auto g = random_bracket_element(rng, p, q);
        auto f = g.pow(s);
        auto v = classify_minimal(f, 8);
        CHECK(v.minimal);
        CHECK(v.d == q * s);
        REQUIRE(v.witness.has_value());
        // bracket consistent with ft = 1/(qs)
        Rat target = make_rat(1, static_cast<long>(q * s));
        CHECK(v.bracket.lo < target);
        CHECK(target <= v.bracket.hi);
        // when s = 1, q | p^e and the upper endpoint is exactly 1/q
        if (s == 1) CHECK(v.bracket.hi == target);
        ++done;
    }
}

TEST_CASE("perturbation keeps negative verdicts honest") {
    std::mt19937_64 rng(62);
    int done = 0;
    while (done < 60) {
        std::uint32_t p = (rng() % 2) ? 2 : 3;
        std::uint64_t q = (rng() % 2) ? p : 1;
        std::uint64_t s = 1 + rng() % 2;
        if (s % p == 0) continue;
        auto g = random_bracket_element(rng, p, q);
        auto f = g.pow(s);
        // seeded perturbation of higher degree, off the bracket pattern
        std::uint32_t a = static_cast<std::uint32_t>(q * s) + 1 + rng() % 2;
        Polynomial noise = Polynomial::monomial(p, {a, 1});
        f = f + noise;
        if (f.is_zero() || f.ord() == 0) continue;

        auto v = classify_minimal(f, 6);
        Rat inv_d = make_rat(1, static_cast<long>(f.ord()));
        if (!v.minimal && v.certified) CHECK(v.bracket.lo > inv_d);
        if (v.minimal) {
            REQUIRE(v.witness.has_value());
            auto [c, w] = *v.witness;
            CHECK(w.pow(v.s).scaled(c.value()) == f); // c w^s = f
        }
        ++done;
    }
}

TEST_CASE("bracket scaling between g and g^s") {
    std::mt19937_64 rng(63);
    MonomialIdeal m = MonomialIdeal::maximal(2);
    int done = 0;
    while (done < 50) {
        std::uint32_t p = (rng() % 2) ? 2 : 3;
        auto g = random_poly(rng, p, 2, 3, 3, true);
        if (!m.radical().contains(g)) continue;
        std::uint64_t s = 2 + rng() % 2;
        std::uint32_t e = 1 + rng() % 3;
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < e; ++i) q *= p;
        CHECK(ft_bracket(g.pow(s), m, e).lo ==
              make_rat(nu_principal(g, m, e) / s, q));
        ++done;
    }
}

TEST_CASE("verdict algebra") {
    std::mt19937_64 rng(64);
    int done = 0;
    while (done < 40) {
        std::uint32_t p = (rng() % 2) ? 2 : 3;
        auto f = random_poly(rng, p, 2, 4, 4, true);
        if (f.is_zero() || f.ord() == 0) continue;
        auto v = classify_minimal(f, 5);
        CHECK(v.d == v.q * v.s);
        CHECK(factor_d(v.d, p).q == v.q);
        if (v.witness) {
            auto [c, g] = *v.witness;
            CHECK(g.pow(v.s).scaled(c.value()) == f); // c g^s = f
            CHECK(in_bracket_m(g, v.q));
            CHECK(v.minimal);
        }
        ++done;
    }
}
