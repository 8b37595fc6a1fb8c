#ifndef FTHRESH_NU_HPP
#define FTHRESH_NU_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "fthresh/bigrat.hpp"
#include "fthresh/errors.hpp"
#include "fthresh/gf2.hpp"
#include "fthresh/monomial_ideal.hpp"
#include "fthresh/polynomial.hpp"

namespace fthresh {

// Certified open-closed interval (lo, hi] = (nu(q)/q, (nu(q)+1)/q] around an
// F-threshold, q = p^e. Endpoints are exact rationals.
struct ThresholdBracket {
    Rat lo;
    Rat hi;
    std::uint32_t e = 0;
    bool certified = false;
};

namespace detail {

inline void check_nu_input(const Polynomial& f, const MonomialIdeal& b) {
    if (f.is_zero()) throw precondition_error("nu of the zero polynomial");
    if (f.nvars() != b.nvars()) throw precondition_error("ring mismatch");
    if (b.generators().empty()) throw precondition_error("b must be a nonzero ideal");
    for (const auto& g : b.generators())
        if (expvec_total_degree(g) == 0)
            throw precondition_error("b must be a proper ideal");
    if (!b.radical().contains(f))
        throw precondition_error("f is not in the radical of b; nu would be infinite");
}

inline std::uint64_t checked_bracket_exponent(const MonomialIdeal& b, std::uint64_t q) {
    std::uint64_t worst = 0;
    for (const auto& g : b.generators())
        for (auto x : g) worst = std::max<std::uint64_t>(worst, x);
    if (worst * q > (1ull << 31))
        throw resource_limit_error("bracket exponent exceeds the supported range");
    return q;
}

// nu(1) plus the residue of f^{nu(1)} mod b.
inline std::pair<std::uint64_t, Polynomial> nu_level_zero(const Polynomial& f,
                                                          const MonomialIdeal& b) {
    std::uint64_t nu = 0;
    Polynomial acc = Polynomial::constant(f.modulus(), f.nvars(), 1);
    for (;;) {
        Polynomial next = mul_reduced(acc, f, b);
        if (next.is_zero()) return {nu, acc};
        acc = std::move(next);
        ++nu;
    }
}

// Level step e -> e+1 shared by both engines: the reduced residue of
// f^{p nu(q)} mod b^[pq] is the termwise Frobenius image of the previous
// residue, after which at most p-1 further multiplications by f locate
// nu(pq) inside [p nu(q), p nu(q) + p - 1].
inline std::vector<std::uint64_t> nu_sequence_sparse(const Polynomial& f,
                                                     const MonomialIdeal& b,
                                                     std::uint32_t e_max) {
    const std::uint32_t p = f.modulus();
    std::vector<std::uint64_t> nus;
    auto [nu0, acc] = nu_level_zero(f, b);
    nus.push_back(nu0);
    std::uint64_t q = 1, nu = nu0;
    for (std::uint32_t e = 1; e <= e_max; ++e) {
        q = checked_bracket_exponent(b, q * p);
        MonomialIdeal bq = b.bracket(q);
        acc = acc.frobenius_power(p);
        nu *= p;
        for (std::uint32_t k = 1; k < p; ++k) {
            Polynomial next = mul_reduced(acc, f, bq);
            if (next.is_zero()) break;
            acc = std::move(next);
            ++nu;
        }
        nus.push_back(nu);
    }
    return nus;
}

// b of the shape (x^a, y^c): residues mod b^[q] live in a rectangle and the
// bit-packed kernel applies (p = 2 only).
inline bool rectangle_bounds(const MonomialIdeal& b, std::uint32_t& xe, std::uint32_t& ye) {
    if (b.nvars() != 2 || b.generators().size() != 2) return false;
    for (const auto& g : b.generators()) {
        if (g[0] > 0 && g[1] > 0) return false;
        if (g[0] > 0)
            xe = g[0];
        else
            ye = g[1];
    }
    return xe > 0 && ye > 0;
}

inline std::vector<std::uint64_t> nu_sequence_dense(const Polynomial& f,
                                                    const MonomialIdeal& b,
                                                    std::uint32_t e_max) {
    std::uint32_t xe = 0, ye = 0;
    if (!rectangle_bounds(b, xe, ye) || f.modulus() != 2)
        throw precondition_error("dense kernel needs p = 2 and a rectangle ideal");
    std::vector<std::uint64_t> nus;
    auto [nu0, acc0] = nu_level_zero(f, b);
    nus.push_back(nu0);
    DenseGf2 acc = DenseGf2::from_sparse(acc0, xe, ye);
    std::uint64_t q = 1, nu = nu0;
    for (std::uint32_t e = 1; e <= e_max; ++e) {
        q = checked_bracket_exponent(b, q * 2);
        acc = acc.frobenius_square();
        nu *= 2;
        DenseGf2 next = acc.multiplied_by(f);
        if (!next.is_zero()) {
            acc = std::move(next);
            ++nu;
        }
        nus.push_back(nu);
    }
    return nus;
}

inline bool dense_applicable(const Polynomial& f, const MonomialIdeal& b) {
    std::uint32_t xe = 0, ye = 0;
    return f.modulus() == 2 && f.nvars() == 2 && rectangle_bounds(b, xe, ye);
}

} // namespace detail

// nu(p^e) for e = 0..e_max in one sweep, reusing reduced residues across
// levels. Incremental multiplication with reduction after every product is
// what makes large e feasible.
inline std::vector<std::uint64_t> nu_principal_sequence(const Polynomial& f,
                                                        const MonomialIdeal& b,
                                                        std::uint32_t e_max) {
    detail::check_nu_input(f, b);
    if (detail::dense_applicable(f, b)) return detail::nu_sequence_dense(f, b, e_max);
    return detail::nu_sequence_sparse(f, b, e_max);
}

// Greatest t with f^t outside b^[p^e].
inline std::uint64_t nu_principal(const Polynomial& f, const MonomialIdeal& b,
                                  std::uint32_t e) {
    return nu_principal_sequence(f, b, e).back();
}

// Greatest t such that some t-fold product of the generators stays outside
// b^[p^e]. Explores exponent compositions level by level; staying outside is
// downward closed, so the frontier of surviving residues is complete.
inline std::uint64_t nu_ideal(const std::vector<Polynomial>& gens, const MonomialIdeal& b,
                              std::uint32_t e,
                              std::uint64_t max_compositions = 10'000'000) {
    if (gens.empty()) throw precondition_error("empty generator list");
    for (const auto& g : gens) detail::check_nu_input(g, b);
    const std::uint32_t p = gens.front().modulus();
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q = detail::checked_bracket_exponent(b, q * p);
    MonomialIdeal bq = b.bracket(q);

    using Comp = std::vector<std::uint32_t>;
    std::map<Comp, Polynomial> frontier;
    frontier.emplace(Comp(gens.size(), 0),
                     reduce_mod(Polynomial::constant(p, b.nvars(), 1), bq));
    std::uint64_t explored = 1, nu = 0;
    while (!frontier.empty()) {
        std::map<Comp, Polynomial> next;
        for (const auto& [comp, residue] : frontier) {
            for (std::size_t i = 0; i < gens.size(); ++i) {
                Comp child = comp;
                ++child[i];
                if (next.count(child)) continue;
                if (++explored > max_compositions)
                    throw resource_limit_error("nu_ideal composition cap exceeded");
                Polynomial r = mul_reduced(residue, gens[i], bq);
                if (!r.is_zero()) next.emplace(std::move(child), std::move(r));
            }
        }
        if (next.empty()) break;
        ++nu;
        frontier = std::move(next);
    }
    return nu;
}

// Certified bracket (nu(q)/q, (nu(q)+1)/q] at q = p^{e_max}; the F-threshold
// of f relative to b lies strictly above lo and at most hi.
inline ThresholdBracket ft_bracket(const Polynomial& f, const MonomialIdeal& b,
                                   std::uint32_t e_max) {
    std::uint64_t nu = nu_principal(f, b, e_max);
    BigInt q = big_pow(f.modulus(), e_max);
    ThresholdBracket br;
    br.lo = make_rat(BigInt(static_cast<unsigned long>(nu)), q);
    br.hi = make_rat(BigInt(static_cast<unsigned long>(nu + 1)), q);
    br.e = e_max;
    br.certified = true;
    return br;
}

// Strict lower bounds nu(p^e)/p^e for e = 1..e_max plus a geometric
// extrapolation of the limit. The extrapolation is never certified.
struct LowerSequence {
    std::vector<Rat> values;
    Rat extrapolated;
    bool extrapolation_certified = false;
};

inline LowerSequence ft_lower_sequence(const std::vector<Polynomial>& gens,
                                       const MonomialIdeal& b, std::uint32_t e_max,
                                       std::uint64_t max_compositions = 10'000'000) {
    if (gens.empty()) throw precondition_error("empty generator list");
    LowerSequence out;
    const std::uint32_t p = gens.front().modulus();
    if (gens.size() == 1) {
        auto nus = nu_principal_sequence(gens.front(), b, e_max);
        for (std::uint32_t e = 1; e <= e_max; ++e)
            out.values.push_back(make_rat(BigInt(static_cast<unsigned long>(nus[e])),
                                          big_pow(p, e)));
    } else {
        for (std::uint32_t e = 1; e <= e_max; ++e) {
            std::uint64_t nu = nu_ideal(gens, b, e, max_compositions);
            out.values.push_back(
                make_rat(BigInt(static_cast<unsigned long>(nu)), big_pow(p, e)));
        }
    }
    const auto n = out.values.size();
    out.extrapolated = n ? out.values.back() : Rat(0);
    if (n >= 3) {
        Rat d1 = out.values[n - 1] - out.values[n - 2];
        Rat d0 = out.values[n - 2] - out.values[n - 3];
        if (d1 > 0 && d0 > 0) {
            Rat r = d1 / d0;
            if (r < 1) out.extrapolated = out.values[n - 1] + d1 * r / (1 - r);
        }
    }
    return out;
}

} // namespace fthresh

#endif
