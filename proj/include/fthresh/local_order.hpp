#ifndef FTHRESH_LOCAL_ORDER_HPP
#define FTHRESH_LOCAL_ORDER_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "fthresh/errors.hpp"
#include "fthresh/polynomial.hpp"

namespace fthresh {

// Negative-deglex local monomial order: lower total degree is greater (so 1
// is the greatest monomial), ties broken lexicographically along a variable
// precedence. Total on monomials, multiplicative, hence initial terms are
// single terms and initial_term is multiplicative.
struct LocalOrder {
    // precedence[0] is the most significant variable.
    std::vector<std::uint32_t> precedence;

    explicit LocalOrder(std::vector<std::uint32_t> prec) : precedence(std::move(prec)) {
        std::vector<bool> seen(precedence.size(), false);
        for (auto v : precedence) {
            if (v >= precedence.size() || seen[v])
                throw precondition_error("precedence is not a permutation");
            seen[v] = true;
        }
    }

    static LocalOrder declaration_order(std::uint32_t nvars) {
        std::vector<std::uint32_t> prec(nvars);
        std::iota(prec.begin(), prec.end(), 0u);
        return LocalOrder(std::move(prec));
    }

    // Strictly greater as monomials.
    bool greater(const Expvec& a, const Expvec& b) const {
        std::uint64_t da = expvec_total_degree(a), db = expvec_total_degree(b);
        if (da != db) return da < db;
        for (auto v : precedence)
            if (a[v] != b[v]) return a[v] > b[v];
        return false;
    }
};

// The greatest term of f under the order, as a one-term polynomial.
inline Polynomial initial_term(const Polynomial& f, const LocalOrder& order) {
    if (f.is_zero()) throw precondition_error("initial term of the zero polynomial");
    const Expvec* best = nullptr;
    std::uint32_t coeff = 0;
    for (const auto& [e, c] : f.terms()) {
        if (!best || order.greater(e, *best)) {
            best = &e;
            coeff = c;
        }
    }
    return Polynomial::monomial(f.modulus(), *best, coeff);
}

} // namespace fthresh

#endif
