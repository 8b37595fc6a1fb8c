#ifndef FTHRESH_REGIONS_HPP
#define FTHRESH_REGIONS_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "fthresh/bigrat.hpp"
#include "fthresh/errors.hpp"
#include "fthresh/monomial_ideal.hpp"
#include "fthresh/nu.hpp"
#include "fthresh/polynomial.hpp"

namespace fthresh {

// A point a/q of (Z[1/p]_{>=0})^r with q = p^e.
struct LatticePoint {
    std::vector<std::uint64_t> a;
    std::uint32_t e = 0;

    friend bool operator==(const LatticePoint& x, const LatticePoint& y) {
        return x.e == y.e && x.a == y.a;
    }
};

// Divides through by p while every coordinate allows it. Region membership
// is invariant under this rescaling, so canonical forms index everything.
inline LatticePoint canonicalize(LatticePoint pt, std::uint32_t p) {
    auto divisible = [&] {
        if (pt.e == 0) return false;
        for (auto v : pt.a)
            if (v % p != 0) return false;
        return true;
    };
    while (divisible()) {
        for (auto& v : pt.a) v /= p;
        --pt.e;
    }
    return pt;
}

inline bool is_canonical(const LatticePoint& pt, std::uint32_t p) {
    if (pt.e == 0) return true;
    for (auto v : pt.a)
        if (v % p != 0) return true;
    return false;
}

inline Rat lattice_norm(const LatticePoint& pt, std::uint32_t p) {
    std::uint64_t sum = 0;
    for (auto v : pt.a) sum += v;
    return make_rat(BigInt(static_cast<unsigned long>(sum)), big_pow(p, pt.e));
}

// The data of a factor tuple h_i = y - g_i with g_i in x^ell k[x], together
// with the parameter ideal b = (y, x^ell). Variable 0 is x, variable 1 is y.
class HTuple {
public:
    HTuple(std::uint32_t p, std::uint32_t ell, std::vector<Polynomial> gs)
        : p_(p), ell_(ell), gs_(std::move(gs)) {
        if (ell_ == 0) throw precondition_error("ell must be at least 1");
        if (gs_.size() < 2) throw precondition_error("need at least two factors");
        D_ = 0;
        for (std::size_t i = 0; i < gs_.size(); ++i) {
            const Polynomial& g = gs_[i];
            if (g.modulus() != p_) throw precondition_error("factor modulus mismatch");
            if (g.nvars() != 1) throw precondition_error("g_i must be univariate in x");
            if (!g.is_zero()) {
                if (g.ord() < ell_)
                    throw precondition_error("g_i must be divisible by x^ell");
                D_ = std::max<std::uint64_t>(D_, g.total_degree());
            }
            for (std::size_t j = 0; j < i; ++j)
                if (gs_[j] == g) throw precondition_error("the g_i must be distinct");
        }
        if (D_ < ell_) throw precondition_error("max degree below ell");
        for (const auto& g : gs_) {
            Polynomial h(p_, 2);
            h.add_term({0, 1}, 1);
            for (const auto& [e, c] : g.terms()) h.add_term({e[0], 0}, p_ - c);
            hs_.push_back(std::move(h));
        }
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t ell() const { return ell_; }
    std::uint32_t r() const { return static_cast<std::uint32_t>(gs_.size()); }
    std::uint64_t max_degree() const { return D_; }
    const std::vector<Polynomial>& gs() const { return gs_; }
    const std::vector<Polynomial>& factors() const { return hs_; }

    // b = (y, x^ell).
    MonomialIdeal b_ideal() const {
        return MonomialIdeal(2, {Expvec{0, 1}, Expvec{ell_, 0}});
    }

    Polynomial factor_product(const std::vector<std::uint64_t>& t) const {
        if (t.size() != gs_.size()) throw precondition_error("tuple length mismatch");
        Polynomial f = Polynomial::constant(p_, 2, 1);
        for (std::size_t i = 0; i < t.size(); ++i) f = f * hs_[i].pow(t[i]);
        return f;
    }

    // Membership of a/q in the upper region: h^a in (y^q, x^(ell q)).
    // Memoized on canonical points; the cache is internally synchronized.
    bool in_upper(const LatticePoint& pt) const {
        if (pt.a.size() != gs_.size()) throw precondition_error("point width mismatch");
        LatticePoint c = canonicalize(pt, p_);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache_.find(c);
            if (it != cache_.end()) return it->second;
        }
        bool result = compute_in_upper(c);
        std::lock_guard<std::mutex> lock(mu_);
        cache_.emplace(std::move(c), result);
        return result;
    }

private:
    bool compute_in_upper(const LatticePoint& pt) const {
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < pt.e; ++i) q *= p_;
        if (static_cast<std::uint64_t>(ell_) * q > (1ull << 31))
            throw resource_limit_error("bracket exponent exceeds the supported range");
        MonomialIdeal bq = b_ideal().bracket(q);
        Polynomial acc = reduce_mod(Polynomial::constant(p_, 2, 1), bq);
        for (std::size_t i = 0; i < hs_.size() && !acc.is_zero(); ++i)
            acc = pow_reduced(acc, hs_[i], pt.a[i], bq);
        return acc.is_zero();
    }

    static Polynomial pow_reduced(Polynomial acc, const Polynomial& base,
                                  std::uint64_t k, const MonomialIdeal& bq) {
        Polynomial sq = reduce_mod(base, bq);
        while (k && !acc.is_zero()) {
            if (k & 1) acc = mul_reduced(acc, sq, bq);
            k >>= 1;
            if (k) sq = mul_reduced(sq, sq, bq);
        }
        return acc;
    }

    struct PointLess {
        bool operator()(const LatticePoint& x, const LatticePoint& y) const {
            if (x.e != y.e) return x.e < y.e;
            return x.a < y.a;
        }
    };

    std::uint32_t p_;
    std::uint32_t ell_;
    std::vector<Polynomial> gs_;
    std::vector<Polynomial> hs_;
    std::uint64_t D_;
    mutable std::mutex mu_;
    mutable std::map<LatticePoint, bool, PointLess> cache_;
};

inline bool in_upper_region(const HTuple& ht, const LatticePoint& pt) {
    return ht.in_upper(pt);
}

// A point of the upper region all of whose single-coordinate decrements lie
// in the lower region. Criticality is invariant under canonicalization, so
// any representative may be passed.
inline bool is_critical(const HTuple& ht, const LatticePoint& pt) {
    LatticePoint c = canonicalize(pt, ht.p());
    if (!ht.in_upper(c)) return false;
    for (std::size_t s = 0; s < c.a.size(); ++s) {
        if (c.a[s] == 0) continue;
        LatticePoint dec = c;
        --dec.a[s];
        if (ht.in_upper(dec)) return false;
    }
    return true;
}

// The minimal-norm point of the upper region below a/q (same denominator),
// lexicographically least on ties. Returns nullopt when a/q itself lies in
// the lower region. Walks the region level by level; every upper-region
// point under a stays connected to a through the upper region, so the last
// nonempty level is exactly the minimal-norm set.
inline std::optional<LatticePoint> critical_point_below(const HTuple& ht,
                                                        const LatticePoint& pt,
                                                        std::uint64_t budget = 500000) {
    if (!ht.in_upper(pt)) return std::nullopt;
    std::set<std::vector<std::uint64_t>> level{pt.a};
    std::uint64_t spent = 0;
    for (;;) {
        std::set<std::vector<std::uint64_t>> next;
        for (const auto& u : level) {
            for (std::size_t s = 0; s < u.size(); ++s) {
                if (u[s] == 0) continue;
                std::vector<std::uint64_t> v = u;
                --v[s];
                if (next.count(v)) continue;
                if (++spent > budget)
                    throw resource_limit_error("critical point search budget exceeded");
                if (ht.in_upper(LatticePoint{v, pt.e})) next.insert(std::move(v));
            }
        }
        if (next.empty()) break;
        level = std::move(next);
    }
    LatticePoint c{*level.begin(), pt.e};
    if (!is_critical(ht, c))
        throw std::logic_error("minimal-norm point failed the criticality check");
    return c;
}

namespace detail {

inline bool all_divisible(const std::vector<std::uint64_t>& a, std::uint32_t p) {
    for (auto v : a)
        if (v % p != 0) return false;
    return true;
}

inline void enumerate_rec(const HTuple& ht, std::vector<std::uint64_t>& a,
                          std::size_t idx, std::uint64_t remaining, std::uint32_t e,
                          std::vector<LatticePoint>& out) {
    if (idx == a.size()) {
        if (e > 0 && all_divisible(a, ht.p())) return; // counted at a smaller e
        LatticePoint pt{a, e};
        if (is_critical(ht, pt)) out.push_back(std::move(pt));
        return;
    }
    for (std::uint64_t v = 0; v <= remaining; ++v) {
        a[idx] = v;
        enumerate_rec(ht, a, idx + 1, remaining - v, e, out);
    }
    a[idx] = 0;
}

} // namespace detail

// All canonical critical points with denominator dividing p^e_max and norm
// at most norm_bound, ordered by (e, lex). Brute-force enumeration with an
// explicit scale limit.
inline std::vector<LatticePoint> enumerate_critical(const HTuple& ht, std::uint32_t e_max,
                                                    const Rat& norm_bound) {
    std::uint64_t qmax = 1;
    for (std::uint32_t i = 0; i < e_max; ++i) qmax *= ht.p();
    if (ht.r() > 4 || qmax > 64)
        throw resource_limit_error("enumerate_critical is limited to r <= 4, p^e <= 64");

    std::vector<LatticePoint> found;
    std::uint64_t q = 1;
    for (std::uint32_t e = 0; e <= e_max; ++e, q *= ht.p()) {
        Rat bound_rat = norm_bound * Rat(static_cast<unsigned long>(q));
        if (bound_rat < 0) continue;
        BigInt floor_bound;
        mpz_fdiv_q(floor_bound.get_mpz_t(), bound_rat.get_num().get_mpz_t(),
                   bound_rat.get_den().get_mpz_t());
        if (floor_bound < 0) continue;
        std::uint64_t bound = mpz_get_ui(floor_bound.get_mpz_t());

        std::vector<std::uint64_t> a(ht.r(), 0);
        detail::enumerate_rec(ht, a, 0, bound, e, found);
    }
    return found;
}

// Outcome of the critical-point route to the F-threshold of f = h^t.
struct FtCriticalResult {
    enum class Kind { exact, lambda_branch, undecided };
    Kind kind = Kind::undecided;
    Rat mu;                                 // exact: ft^b(f) = mu
    std::optional<LatticePoint> certificate; // exact: the computing critical point
    Rat lambda;                              // always (1 + ell/D) / |t|
    ThresholdBracket bracket;                // certified nu-bracket at e_max
};

// Searches for the unique critical point computing ft^b(h^t) inside the
// strip |t'| < 1 + ell/D. Per level e: if the certified lower bound already
// clears (1 + ell/D)/|t|, the threshold cannot be computed by a critical
// point in the strip and the lambda branch is reported. Otherwise the
// critical point below ((nu+1)/q) t is located; once it stabilizes across
// two successive levels, passes the strip and box gates, and its ratio lies
// in the certified bracket, it is reported exact. Anything else ends
// undecided; exactness is never guessed.
inline FtCriticalResult ft_via_critical_point(const HTuple& ht,
                                              const std::vector<std::uint64_t>& t,
                                              std::uint32_t e_max,
                                              std::uint64_t search_budget = 500000) {
    if (t.size() != ht.r()) throw precondition_error("tuple length mismatch");
    std::uint64_t norm_t = 0;
    for (auto v : t) {
        if (v == 0) throw precondition_error("t_i must be positive");
        norm_t += v;
    }
    const std::uint32_t p = ht.p();
    const Rat one_plus = 1 + make_rat(BigInt(ht.ell()), BigInt(static_cast<unsigned long>(ht.max_degree())));
    FtCriticalResult res;
    res.lambda = one_plus / Rat(static_cast<unsigned long>(norm_t));

    Polynomial f = ht.factor_product(t);
    MonomialIdeal b = ht.b_ideal();
    auto nus = nu_principal_sequence(f, b, e_max);
    res.bracket.lo = make_rat(BigInt(static_cast<unsigned long>(nus[e_max])), big_pow(p, e_max));
    res.bracket.hi = make_rat(BigInt(static_cast<unsigned long>(nus[e_max] + 1)), big_pow(p, e_max));
    res.bracket.e = e_max;
    res.bracket.certified = true;

    std::optional<LatticePoint> prev;
    for (std::uint32_t e = 1; e <= e_max; ++e) {
        Rat lower = make_rat(BigInt(static_cast<unsigned long>(nus[e])), big_pow(p, e)) *
                    Rat(static_cast<unsigned long>(norm_t));
        if (lower >= one_plus) {
            res.kind = FtCriticalResult::Kind::lambda_branch;
            return res;
        }

        LatticePoint pt;
        pt.e = e;
        for (auto v : t) pt.a.push_back((nus[e] + 1) * v);
        std::optional<LatticePoint> c;
        try {
            c = critical_point_below(ht, pt, search_budget);
        } catch (const resource_limit_error&) {
            prev.reset(); // out of reach at this level; stabilization restarts
            continue;
        }
        if (!c) {
            prev.reset();
            continue;
        }
        LatticePoint canon = canonicalize(*c, p);
        if (prev && *prev == canon) {
            Rat norm_c = lattice_norm(canon, p);
            bool gates = norm_c < one_plus;
            Rat mu(0);
            BigInt qc = big_pow(p, canon.e);
            for (std::size_t i = 0; i < t.size() && gates; ++i) {
                Rat ci = make_rat(BigInt(static_cast<unsigned long>(canon.a[i])), qc);
                if (ci > res.lambda * Rat(static_cast<unsigned long>(t[i]))) gates = false;
                Rat ratio = ci / Rat(static_cast<unsigned long>(t[i]));
                if (ratio > mu) mu = ratio;
            }
            if (gates && res.bracket.lo < mu && mu <= res.bracket.hi) {
                res.kind = FtCriticalResult::Kind::exact;
                res.mu = mu;
                res.certificate = canon;
                return res;
            }
        }
        prev = std::move(canon);
    }
    res.kind = FtCriticalResult::Kind::undecided;
    return res;
}

} // namespace fthresh

#endif
