#ifndef FTHRESH_TESTS_SUPPORT_HPP
#define FTHRESH_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fthresh/monomial_ideal.hpp"
#include "fthresh/nu.hpp"
#include "fthresh/parser.hpp"
#include "fthresh/polynomial.hpp"

namespace testsupport {

using namespace fthresh;

inline VarTable vars_x() { return VarTable({"x"}); }
inline VarTable vars_xy() { return VarTable({"x", "y"}); }
inline VarTable vars_xyz() { return VarTable({"x", "y", "z"}); }

inline Polynomial P(const std::string& s, std::uint32_t p, const VarTable& vt) {
    return parse_poly(s, p, vt);
}

inline Polynomial Pxy(const std::string& s, std::uint32_t p) { return P(s, p, vars_xy()); }

// Random nonzero polynomial with bounded exponents and term count.
inline Polynomial random_poly(std::mt19937_64& rng, std::uint32_t p, std::uint32_t nvars,
                              std::uint32_t max_exp, std::uint32_t max_terms,
                              bool nonunit = false) {
    std::uniform_int_distribution<std::uint32_t> nterms(1, max_terms);
    std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
    std::uniform_int_distribution<std::uint32_t> coeff(1, p - 1);
    for (;;) {
        Polynomial f(p, nvars);
        std::uint32_t k = nterms(rng);
        for (std::uint32_t i = 0; i < k; ++i) {
            Expvec e(nvars);
            std::uint64_t deg = 0;
            for (auto& x : e) {
                x = exp(rng);
                deg += x;
            }
            if (nonunit && deg == 0) continue;
            f.add_term(std::move(e), coeff(rng));
        }
        if (!f.is_zero()) return f;
    }
}

// Independent oracle: nu by full expansion, no intermediate reduction.
inline std::uint64_t nu_by_expansion(const Polynomial& f, const MonomialIdeal& b,
                                     std::uint32_t e) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= f.modulus();
    MonomialIdeal bq = b.bracket(q);
    std::uint64_t t = 0;
    Polynomial power = Polynomial::constant(f.modulus(), f.nvars(), 1);
    for (;;) {
        power = power * f; // full product, no reduction
        if (bq.contains(power)) return t;
        ++t;
    }
}

// Independent oracle for ideals: test every composition of each weight on
// fully expanded products.
inline std::uint64_t nu_ideal_by_expansion(const std::vector<Polynomial>& gens,
                                           const MonomialIdeal& b, std::uint32_t e) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= gens.front().modulus();
    MonomialIdeal bq = b.bracket(q);
    std::uint64_t nu = 0;
    for (std::uint64_t t = 1;; ++t) {
        bool some_outside = false;
        std::vector<std::uint64_t> comp(gens.size(), 0);
        // enumerate compositions of t
        auto rec = [&](auto&& self, std::size_t idx, std::uint64_t rest) -> void {
            if (some_outside) return;
            if (idx + 1 == gens.size()) {
                comp[idx] = rest;
                Polynomial prod = Polynomial::constant(gens.front().modulus(),
                                                       gens.front().nvars(), 1);
                for (std::size_t i = 0; i < gens.size(); ++i)
                    prod = prod * gens[i].pow(comp[i]);
                if (!bq.contains(prod)) some_outside = true;
                return;
            }
            for (std::uint64_t v = 0; v <= rest; ++v) {
                comp[idx] = v;
                self(self, idx + 1, rest - v);
            }
        };
        rec(rec, 0, t);
        if (!some_outside) return nu;
        nu = t;
    }
}

} // namespace testsupport

#endif
