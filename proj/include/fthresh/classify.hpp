#ifndef FTHRESH_CLASSIFY_HPP
#define FTHRESH_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "fthresh/bigrat.hpp"
#include "fthresh/errors.hpp"
#include "fthresh/local_order.hpp"
#include "fthresh/monomial_ideal.hpp"
#include "fthresh/nu.hpp"
#include "fthresh/polynomial.hpp"
#include "fthresh/series_root.hpp"

namespace fthresh {

// d split as q * s with q the p-part and gcd(s, p) = 1.
struct FactorD {
    std::uint64_t q;
    std::uint64_t s;
};

inline FactorD factor_d(std::uint64_t d, std::uint32_t p) {
    if (d == 0) throw precondition_error("d must be positive");
    std::uint64_t q = 1;
    while (d % p == 0) {
        d /= p;
        q *= p;
    }
    return FactorD{q, d};
}

// Membership in the bracket power (x_1^q, ..., x_n^q) of the maximal ideal.
inline bool in_bracket_m(const Polynomial& f, std::uint64_t q) {
    return MonomialIdeal::maximal(f.nvars()).bracket(q).contains(f);
}

// Whether the F-pure threshold attains the minimum 1/ord(f), and how sure we
// are. `minimal` implies a witness (c, g) with c g^s = f, g in m^[q]:
// ft(f) = (1/s) ft(g) and ft(g) = 1/q exactly since ord(g) = q and g lies in
// m^[q]. A negative verdict is certified only when the nu lower bound at
// e_max strictly clears 1/d; otherwise a root in the completion that is not
// a constant-scaled polynomial root has not been excluded.
struct Verdict {
    std::uint64_t d = 0;
    std::uint64_t q = 0;
    std::uint64_t s = 0;
    bool minimal = false;
    bool certified = false;
    std::optional<std::pair<Fp, Polynomial>> witness; // c, g with c * g^s = f
    ThresholdBracket bracket;
    std::uint32_t e = 0;
};

inline Verdict classify_minimal(const Polynomial& f, std::uint32_t e_max = 10) {
    if (f.is_zero()) throw precondition_error("classify of the zero polynomial");
    const std::uint32_t p = f.modulus();
    Verdict v;
    v.d = f.ord();
    if (v.d == 0) throw precondition_error("classify of a unit");
    auto [q, s] = factor_d(v.d, p);
    v.q = q;
    v.s = s;
    v.e = e_max;

    MonomialIdeal m = MonomialIdeal::maximal(f.nvars());
    v.bracket = ft_bracket(f, m, e_max);

    // Constant-scaled root search: f = c g^s with c the initial coefficient
    // of f and g the monic s-th root of f / c, when one exists.
    LocalOrder order = LocalOrder::declaration_order(f.nvars());
    Polynomial lead = initial_term(f, order);
    const std::uint32_t gamma = lead.terms().begin()->second;
    Polynomial monic = f.scaled(Fp(gamma, p).inverse().value());
    std::uint64_t precision = f.total_degree() / s + 8;
    RootResult root = sth_root(monic, s, precision, &order);

    if (root.exact() && in_bracket_m(root.root, q)) {
        v.minimal = true;
        v.certified = true;
        v.witness = std::make_pair(Fp(gamma, p), std::move(root.root));
        return v;
    }

    v.minimal = false;
    Rat inv_d = make_rat(BigInt(1), BigInt(static_cast<unsigned long>(v.d)));
    v.certified = v.bracket.lo > inv_d;
    return v;
}

} // namespace fthresh

#endif
