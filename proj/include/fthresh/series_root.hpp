#ifndef FTHRESH_SERIES_ROOT_HPP
#define FTHRESH_SERIES_ROOT_HPP

#include <cstdint>

#include "fthresh/errors.hpp"
#include "fthresh/fp.hpp"
#include "fthresh/local_order.hpp"
#include "fthresh/polynomial.hpp"

namespace fthresh {

struct bad_s : precondition_error {
    bad_s() : precondition_error("s is divisible by the characteristic") {}
};

enum class RootStatus { exact, truncated, no_root };

// Outcome of s-th root extraction. On `exact`, (scalar * root)^s = f with
// root normalized to initial coefficient 1 and scalar the least s-th root of
// the initial coefficient of f. On `truncated`, root carries every term of
// the series root up to the requested total degree.
struct RootResult {
    RootStatus status;
    Fp scalar;
    Polynomial root;

    bool exact() const { return status == RootStatus::exact; }
};

// Extracts an s-th root of f by enumerating candidate root terms from the
// greatest down under the local order. Each step solves for one coefficient:
// the initial term of f - (partial root)^s determines the next root monomial
// (exponent shifted by (s-1) times the root's initial exponent) and its
// coefficient after division by s, which is invertible since gcd(s, p) = 1.
inline RootResult sth_root(const Polynomial& f, std::uint64_t s,
                           std::uint64_t precision,
                           const LocalOrder* order_in = nullptr) {
    if (f.is_zero()) throw precondition_error("s-th root of the zero polynomial");
    if (s == 0) throw precondition_error("s must be positive");
    const std::uint32_t p = f.modulus();
    if (s % p == 0) throw bad_s();

    LocalOrder order = order_in ? *order_in : LocalOrder::declaration_order(f.nvars());
    const auto no_root = [&] {
        return RootResult{RootStatus::no_root, Fp(0, p), Polynomial(p, f.nvars())};
    };

    Polynomial ini = initial_term(f, order);
    const Expvec& lead_exp = ini.terms().begin()->first;
    const std::uint32_t lead_coeff = ini.terms().begin()->second;

    Expvec root_lead(f.nvars());
    for (std::uint32_t i = 0; i < f.nvars(); ++i) {
        if (lead_exp[i] % s != 0) return no_root();
        root_lead[i] = static_cast<std::uint32_t>(lead_exp[i] / s);
    }
    auto c = sth_root_mod_p(lead_coeff, s, p);
    if (!c) return no_root();

    // Work monic: phi = f / lead_coeff has root with initial coefficient 1.
    Polynomial phi = f.scaled(Fp(lead_coeff, p).inverse().value());
    Polynomial root = Polynomial::monomial(p, root_lead, 1);
    const std::uint32_t s_inv = Fp(s % p, p).inverse().value();

    Expvec shift(f.nvars());
    for (std::uint32_t i = 0; i < f.nvars(); ++i)
        shift[i] = static_cast<std::uint32_t>(root_lead[i] * (s - 1));

    Expvec prev = root_lead;
    for (;;) {
        Polynomial residue = phi - root.pow(s);
        if (residue.is_zero())
            return RootResult{RootStatus::exact, Fp(*c, p), std::move(root)};

        Polynomial top = initial_term(residue, order);
        const Expvec& te = top.terms().begin()->first;
        Expvec next(f.nvars());
        for (std::uint32_t i = 0; i < f.nvars(); ++i) {
            if (te[i] < shift[i]) return no_root();
            next[i] = te[i] - shift[i];
        }
        // Enumeration must strictly descend; a stall means no series root.
        if (!order.greater(prev, next)) return no_root();
        if (expvec_total_degree(next) > precision)
            return RootResult{RootStatus::truncated, Fp(*c, p), std::move(root)};

        std::uint64_t b =
            static_cast<std::uint64_t>(top.terms().begin()->second) * s_inv % p;
        root.add_term(next, b);
        prev = std::move(next);
    }
}

} // namespace fthresh

#endif
