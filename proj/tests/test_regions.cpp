#include <doctest.h>

#include <random>
#include <set>

#include "fthresh/regions.hpp"
#include "support.hpp"

using namespace fthresh;
using namespace testsupport;

namespace {

HTuple example214_tuple() {
    auto vx = vars_x();
    return HTuple(2, 1, {P("x", 2, vx), P("x^2", 2, vx), P("x^4", 2, vx)});
}

HTuple pair_tuple() { // h = (y, y - x) at ell = 1
    auto vx = vars_x();
    return HTuple(2, 1, {Polynomial(2, 1), P("x", 2, vx)});
}

// random tuple with distinct g_i in x^ell k[x]
HTuple random_tuple(std::mt19937_64& rng) {
    for (;;) {
        std::uint32_t p = (rng() % 2) ? 2 : 3;
        std::uint32_t ell = 1 + rng() % 2;
        std::uint32_t r = 2 + rng() % 2;
        std::vector<Polynomial> gs;
        for (std::uint32_t i = 0; i < r; ++i) {
            Polynomial g(p, 1);
            if (rng() % 4 != 0 || i > 0) {
                std::uint32_t extra = rng() % 3;
                g.add_term({ell + extra}, 1 + rng() % (p - 1));
                if (rng() % 2) g.add_term({ell + extra + 1}, 1);
            }
            gs.push_back(std::move(g));
        }
        try {
            return HTuple(p, ell, std::move(gs));
        } catch (const precondition_error&) {
            continue;
        }
    }
}

LatticePoint pt(std::vector<std::uint64_t> a, std::uint32_t e) {
    return LatticePoint{std::move(a), e};
}

// brute-force minimal-norm, lex-least upper-region point below a
std::optional<LatticePoint> critical_below_oracle(const HTuple& ht, const LatticePoint& a) {
    std::vector<std::uint64_t> best;
    std::uint64_t best_norm = UINT64_MAX;
    std::vector<std::uint64_t> u(a.a.size(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == u.size()) {
            if (!ht.in_upper(LatticePoint{u, a.e})) return;
            std::uint64_t n = 0;
            for (auto v : u) n += v;
            if (n < best_norm || (n == best_norm && u < best)) {
                best_norm = n;
                best = u;
            }
            return;
        }
        for (std::uint64_t v = 0; v <= a.a[i]; ++v) {
            u[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    if (best_norm == UINT64_MAX) return std::nullopt;
    return LatticePoint{best, a.e};
}

} // namespace

TEST_CASE("canonicalize") {
    CHECK(canonicalize(pt({2, 4, 6}, 1), 2) == pt({1, 2, 3}, 0));
    CHECK(canonicalize(pt({1, 2}, 3), 2) == pt({1, 2}, 3));
    CHECK(canonicalize(pt({3, 6}, 2), 3) == pt({1, 2}, 1));
    CHECK(is_canonical(pt({1, 2}, 3), 2));
    CHECK_FALSE(is_canonical(pt({2, 4}, 1), 2));
    // idempotent
    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i) {
        LatticePoint x{{rng() % 12, rng() % 12}, static_cast<std::uint32_t>(rng() % 4)};
        auto c = canonicalize(x, 2);
        CHECK(canonicalize(c, 2) == c);
    }
}

TEST_CASE("h-tuple validation") {
    auto vx = vars_x();
    CHECK_THROWS_AS(HTuple(2, 1, {P("x", 2, vx)}), precondition_error);
    CHECK_THROWS_AS(HTuple(2, 2, {P("x", 2, vx), P("x^2", 2, vx)}), precondition_error);
    CHECK_THROWS_AS(HTuple(2, 1, {P("x", 2, vx), P("x", 2, vx)}), precondition_error);
    auto ht = example214_tuple();
    CHECK(ht.r() == 3);
    CHECK(ht.max_degree() == 4);
    CHECK(ht.factors()[0] == Pxy("y + x", 2));
}

TEST_CASE("upper region membership") {
    auto ht = example214_tuple();
    CHECK(in_upper_region(ht, pt({1, 2, 1}, 0)));       // each h_i lies in b
    CHECK_FALSE(in_upper_region(ht, pt({1, 1, 0}, 1))); // h1 h2 has the x*y term
    CHECK(in_upper_region(ht, pt({8, 16, 8}, 4)));
}

TEST_CASE("criticality at the pinned points") {
    auto ht = example214_tuple();
    CHECK(is_critical(ht, pt({6, 13, 7}, 4)));
    CHECK(is_critical(ht, pt({4, 14, 6}, 4)));
    CHECK_FALSE(is_critical(ht, pt({1, 2, 1}, 0)));

    // (8,16,8)/16 dominates e_2 = (0,1,0), which already lies in the upper
    // region (h_2 is in b), so its first decrement stays upper and the point
    // is not critical.
    CHECK(is_critical(ht, pt({0, 1, 0}, 0)));
    CHECK(in_upper_region(ht, pt({8, 16, 8}, 4)));
    CHECK(in_upper_region(ht, pt({7, 16, 8}, 4)));
    CHECK_FALSE(is_critical(ht, pt({8, 16, 8}, 4)));
}

TEST_CASE("critical_point_below") {
    auto ht = example214_tuple();

    auto c = critical_point_below(ht, pt({1, 2, 1}, 0));
    REQUIRE(c.has_value());
    CHECK(*c == pt({0, 0, 1}, 0)); // lex-least of the norm-1 upper points

    c = critical_point_below(ht, pt({6, 13, 7}, 4));
    REQUIRE(c.has_value());
    CHECK(*c == pt({6, 13, 7}, 4)); // already critical

    // below (8,16,8)/16 the least norm-16 point of the upper region wins
    c = critical_point_below(ht, pt({8, 16, 8}, 4));
    REQUIRE(c.has_value());
    CHECK(*c == pt({0, 8, 8}, 4));
    CHECK(*c == *critical_below_oracle(ht, pt({8, 16, 8}, 4)));

    CHECK_FALSE(critical_point_below(ht, pt({1, 1, 0}, 1)).has_value());

    CHECK_THROWS_AS(critical_point_below(ht, pt({8, 16, 8}, 4), /*budget=*/0),
                    resource_limit_error);
}

TEST_CASE("critical_point_below equals the brute-force oracle") {
    std::mt19937_64 rng(42);
    int done = 0;
    while (done < 40) {
        auto ht = random_tuple(rng);
        std::uint32_t e = rng() % 3;
        std::vector<std::uint64_t> a;
        for (std::uint32_t i = 0; i < ht.r(); ++i) a.push_back(rng() % 5);
        LatticePoint x{a, e};
        auto fast = critical_point_below(ht, x);
        auto slow = critical_below_oracle(ht, x);
        CHECK(fast.has_value() == slow.has_value());
        if (fast && slow) CHECK(*fast == *slow);
        ++done;
    }
}

TEST_CASE("upward closure") {
    std::mt19937_64 rng(43);
    int done = 0;
    while (done < 200) {
        auto ht = random_tuple(rng);
        std::uint32_t e = rng() % 3;
        std::vector<std::uint64_t> a;
        for (std::uint32_t i = 0; i < ht.r(); ++i) a.push_back(rng() % 6);
        LatticePoint x{a, e};
        if (!ht.in_upper(x)) continue;
        // same denominator, larger numerators
        LatticePoint up = x;
        up.a[rng() % up.a.size()] += 1 + rng() % 3;
        CHECK(ht.in_upper(up));
        // finer denominator
        LatticePoint fine = x;
        for (auto& v : fine.a) v *= ht.p();
        fine.e += 1;
        fine.a[rng() % fine.a.size()] += rng() % 2;
        CHECK(ht.in_upper(fine));
        ++done;
    }
}

TEST_CASE("half-step refinement") {
    std::mt19937_64 rng(44);
    int done = 0;
    while (done < 200) {
        auto ht = random_tuple(rng);
        std::uint32_t e = rng() % 3;
        std::vector<std::uint64_t> a;
        for (std::uint32_t i = 0; i < ht.r(); ++i) a.push_back(rng() % 6);
        std::size_t s = rng() % a.size();
        if (a[s] == 0) continue;
        // a/q - e_s/q vs a/q - e_s/(pq)
        LatticePoint coarse{a, e};
        --coarse.a[s];
        LatticePoint fine{a, e + 1};
        for (auto& v : fine.a) v *= ht.p();
        --fine.a[s];
        CHECK(ht.in_upper(coarse) == ht.in_upper(fine));
        ++done;
    }
}

TEST_CASE("norm floor of the upper region") {
    std::mt19937_64 rng(45);
    int done = 0;
    while (done < 150) {
        auto ht = random_tuple(rng);
        std::uint32_t e = rng() % 3;
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < e; ++i) q *= ht.p();
        std::vector<std::uint64_t> a;
        for (std::uint32_t i = 0; i < ht.r(); ++i) a.push_back(rng() % (q + 2));
        LatticePoint x{a, e};
        if (lattice_norm(x, ht.p()) < 1) {
            CHECK_FALSE(ht.in_upper(x));
        } else if (ht.in_upper(x)) {
            CHECK(lattice_norm(x, ht.p()) >= 1);
        }
        ++done;
    }
}

TEST_CASE("ord of h^a along b equals the norm") {
    std::mt19937_64 rng(46);
    for (int i = 0; i < 40; ++i) {
        auto ht = random_tuple(rng);
        std::vector<std::uint64_t> a;
        std::uint64_t norm = 0;
        for (std::uint32_t k = 0; k < ht.r(); ++k) {
            a.push_back(rng() % 3);
            norm += a.back();
        }
        if (norm == 0) continue;
        Polynomial h_a = ht.factor_product(a);
        Expvec y{0, 1}, xl{ht.ell(), 0};
        CHECK(member_power(h_a, y, xl, norm));
        CHECK_FALSE(member_power(h_a, y, xl, norm + 1));
    }
}

TEST_CASE("criticality: single decrements match the global scan") {
    std::mt19937_64 rng(47);
    int done = 0;
    while (done < 60) {
        auto ht = random_tuple(rng);
        if (ht.r() != 2) continue;
        std::uint32_t e = rng() % 3; // q <= 8 in char 2, <= 9 in char 3
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < e; ++i) q *= ht.p();
        std::vector<std::uint64_t> a{rng() % (q + 3), rng() % (q + 3)};
        LatticePoint x = canonicalize(LatticePoint{a, e}, ht.p());

        bool local = is_critical(ht, x);
        // global: in U and every strictly smaller point with denominator
        // up to q p lies in L
        bool global = ht.in_upper(x);
        if (global) {
            std::vector<std::uint64_t> scaled(x.a);
            for (auto& v : scaled) v *= ht.p();
            for (std::uint64_t i = 0; i <= scaled[0] && global; ++i)
                for (std::uint64_t j = 0; j <= scaled[1] && global; ++j) {
                    if (i == scaled[0] && j == scaled[1]) continue;
                    if (ht.in_upper(LatticePoint{{i, j}, x.e + 1})) global = false;
                }
        }
        CHECK(local == global);
        ++done;
    }
}

TEST_CASE("canonicalization invariance of region membership") {
    std::mt19937_64 rng(48);
    int done = 0;
    while (done < 200) {
        auto ht = random_tuple(rng);
        std::uint32_t e = rng() % 3;
        std::vector<std::uint64_t> a;
        for (std::uint32_t i = 0; i < ht.r(); ++i) a.push_back(rng() % 8);
        LatticePoint x{a, e};
        CHECK(ht.in_upper(x) == ht.in_upper(canonicalize(x, ht.p())));
        ++done;
    }
}

TEST_CASE("enumerate_critical") {
    auto ht = example214_tuple();
    auto pts = enumerate_critical(ht, 4, Rat(2));

    auto contains = [&](std::initializer_list<std::uint64_t> a, std::uint32_t e) {
        LatticePoint want = canonicalize(LatticePoint{std::vector<std::uint64_t>(a), e}, 2);
        for (const auto& got : pts)
            if (got == want) return true;
        return false;
    };
    CHECK(contains({6, 13, 7}, 4));
    CHECK(contains({4, 14, 6}, 4));
    CHECK(contains({0, 1, 0}, 0));
    CHECK_FALSE(contains({8, 16, 8}, 4)); // dominates e_2, hence not critical

    // all canonical, all critical, sorted by (e, lex), norms in range
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(is_canonical(pts[i], 2));
        CHECK(is_critical(ht, pts[i]));
        CHECK(lattice_norm(pts[i], 2) >= 1);
        CHECK(lattice_norm(pts[i], 2) <= 2);
        if (i > 0)
            CHECK((pts[i - 1].e < pts[i].e ||
                   (pts[i - 1].e == pts[i].e && pts[i - 1].a < pts[i].a)));
    }

    // below the norm floor nothing is critical
    CHECK(enumerate_critical(ht, 4, make_rat(9, 10)).empty());

    // the two-factor tuple (y, y - x): exactly the unit points
    auto pr = pair_tuple();
    auto pp = enumerate_critical(pr, 1, Rat(1));
    REQUIRE(pp.size() == 2);
    CHECK(pp[0] == pt({0, 1}, 0));
    CHECK(pp[1] == pt({1, 0}, 0));

    CHECK_THROWS_AS(enumerate_critical(ht, 7, Rat(1)), resource_limit_error);
}

TEST_CASE("distinct critical points repel: the norm gap") {
    std::mt19937_64 rng(49);
    int done = 0;
    while (done < 12) {
        auto ht = random_tuple(rng);
        if (ht.r() > 3) continue;
        std::uint32_t e_max = ht.p() == 2 ? 4 : 2;
        auto pts = enumerate_critical(ht, e_max, Rat(2));
        Rat gap = 1 + make_rat(BigInt(ht.ell()),
                               BigInt(static_cast<unsigned long>(ht.max_degree())));
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                // rescale to a common denominator and take the join
                std::uint32_t e = std::max(pts[i].e, pts[j].e);
                std::uint64_t qi = 1, qj = 1;
                for (std::uint32_t k = pts[i].e; k < e; ++k) qi *= ht.p();
                for (std::uint32_t k = pts[j].e; k < e; ++k) qj *= ht.p();
                std::uint64_t norm = 0, q = 1;
                for (std::uint32_t k = 0; k < e; ++k) q *= ht.p();
                bool distinct = false;
                for (std::size_t k = 0; k < pts[i].a.size(); ++k) {
                    std::uint64_t bi = pts[i].a[k] * qi, cj = pts[j].a[k] * qj;
                    if (bi != cj) distinct = true;
                    norm += std::max(bi, cj);
                }
                REQUIRE(distinct);
                CHECK(make_rat(norm, q) >= gap);
            }
        ++done;
    }
}

TEST_CASE("products of y - theta_i and powers of (y, t^ell)") {
    std::mt19937_64 rng(50);
    auto vx = vars_x();
    int done = 0;
    while (done < 60) {
        std::uint32_t p = (rng() % 2) ? 2 : 3;
        std::uint32_t ell = 2 + rng() % 2;
        std::uint32_t d = 2 + rng() % 2;

        // all roots vanish to order >= ell: product lies in (y, t^ell)^d
        Polynomial prod_hi = Polynomial::constant(p, 2, 1);
        // some root has order m < ell: membership fails
        Polynomial prod_lo = Polynomial::constant(p, 2, 1);
        std::uint32_t m = 1 + rng() % (ell - 1);
        bool planted = false;
        for (std::uint32_t i = 0; i < d; ++i) {
            std::uint32_t hi_ord = ell + rng() % 2;
            Polynomial hi(p, 2);
            hi.add_term({0, 1}, 1);
            hi.add_term({hi_ord, 0}, p - 1);
            prod_hi = prod_hi * hi;

            std::uint32_t lo_ord = (i == 0 || rng() % 2) ? m : ell + rng() % 2;
            if (lo_ord < ell) planted = true;
            Polynomial lo(p, 2);
            lo.add_term({0, 1}, 1);
            lo.add_term({lo_ord, 0}, p - 1);
            prod_lo = prod_lo * lo;
        }
        REQUIRE(planted);
        Expvec y{0, 1}, tl{ell, 0};
        CHECK(member_power(prod_hi, y, tl, d));
        CHECK_FALSE(member_power(prod_lo, y, tl, d));
        ++done;
    }
}

TEST_CASE("ft_via_critical_point: exact branch") {
    auto pr = pair_tuple(); // h = (y, y - x), b = (x, y)

    // f = y^2 (y - x): threshold 1/2, computed by the critical point (1, 0)
    auto res = ft_via_critical_point(pr, {2, 1}, 10);
    REQUIRE(res.kind == FtCriticalResult::Kind::exact);
    CHECK(res.mu == make_rat(1, 2));
    REQUIRE(res.certificate.has_value());
    CHECK(*res.certificate == pt({1, 0}, 0));
    CHECK(res.lambda == make_rat(2, 3));
    CHECK(res.bracket.lo < res.mu);
    CHECK(res.mu <= res.bracket.hi);

    // f = y (y - x) is a normal crossing: threshold 1, certificate (0, 1)
    res = ft_via_critical_point(pr, {1, 1}, 10);
    REQUIRE(res.kind == FtCriticalResult::Kind::exact);
    CHECK(res.mu == Rat(1));
    CHECK(*res.certificate == pt({0, 1}, 0));

    CHECK_THROWS_AS(ft_via_critical_point(pr, {1, 0}, 4), precondition_error);

    // a starved search budget degrades to an honest undecided, never a guess
    res = ft_via_critical_point(pr, {2, 1}, 6, /*search_budget=*/1);
    CHECK(res.kind == FtCriticalResult::Kind::undecided);
    CHECK(res.bracket.certified);
    CHECK(res.bracket.lo < make_rat(1, 2));
    CHECK(make_rat(1, 2) <= res.bracket.hi);
}

TEST_CASE("ft_via_critical_point: lambda branch on the fractal example") {
    auto ht = example214_tuple();
    auto res = ft_via_critical_point(ht, {1, 2, 1}, 8);
    REQUIRE(res.kind == FtCriticalResult::Kind::lambda_branch);
    CHECK(res.lambda == make_rat(5, 16));
}
