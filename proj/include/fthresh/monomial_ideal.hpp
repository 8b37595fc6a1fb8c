#ifndef FTHRESH_MONOMIAL_IDEAL_HPP
#define FTHRESH_MONOMIAL_IDEAL_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fthresh/errors.hpp"
#include "fthresh/polynomial.hpp"

namespace fthresh {

// Monomial ideal held by a minimal generating set of exponent vectors.
// Membership of a polynomial reduces to divisibility term by term.
class MonomialIdeal {
public:
    MonomialIdeal(std::uint32_t nvars, std::vector<Expvec> gens) : nvars_(nvars) {
        for (const auto& g : gens)
            if (g.size() != nvars) throw precondition_error("generator width mismatch");
        // Drop generators divisible by another; duplicates collapse.
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        for (std::size_t i = 0; i < gens.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
                if (i != j && expvec_divides(gens[j], gens[i]) && gens[j] != gens[i])
                    redundant = true;
            if (!redundant) gens_.push_back(gens[i]);
        }
    }

    // Generators given as one-term polynomials.
    static MonomialIdeal from_monomials(const std::vector<Polynomial>& gens) {
        if (gens.empty()) throw precondition_error("empty generator list");
        std::vector<Expvec> es;
        for (const auto& g : gens) {
            if (g.term_count() != 1)
                throw precondition_error("generator is not a monomial");
            es.push_back(g.terms().begin()->first);
        }
        return MonomialIdeal(gens.front().nvars(), std::move(es));
    }

    std::uint32_t nvars() const { return nvars_; }
    const std::vector<Expvec>& generators() const { return gens_; }

    bool contains_monomial(const Expvec& e) const {
        for (const auto& g : gens_)
            if (expvec_divides(g, e)) return true;
        return false;
    }

    bool contains(const Polynomial& f) const {
        if (f.nvars() != nvars_) throw precondition_error("ring mismatch");
        for (const auto& [e, c] : f.terms())
            if (!contains_monomial(e)) return false;
        return true;
    }

    // Frobenius bracket power: generators raised to the q-th power.
    MonomialIdeal bracket(std::uint64_t q) const {
        std::vector<Expvec> gens;
        gens.reserve(gens_.size());
        for (const auto& g : gens_) {
            Expvec e(nvars_);
            for (std::uint32_t i = 0; i < nvars_; ++i) {
                std::uint64_t exp = g[i] * q;
                if (exp > UINT32_MAX)
                    throw resource_limit_error("bracket exponent exceeds the supported range");
                e[i] = static_cast<std::uint32_t>(exp);
            }
            gens.push_back(std::move(e));
        }
        return MonomialIdeal(nvars_, std::move(gens));
    }

    MonomialIdeal radical() const {
        std::vector<Expvec> gens;
        for (const auto& g : gens_) {
            Expvec e(nvars_);
            for (std::uint32_t i = 0; i < nvars_; ++i) e[i] = g[i] > 0 ? 1 : 0;
            gens.push_back(std::move(e));
        }
        return MonomialIdeal(nvars_, std::move(gens));
    }

    // The maximal ideal (x_1, ..., x_n).
    static MonomialIdeal maximal(std::uint32_t nvars) {
        std::vector<Expvec> gens;
        for (std::uint32_t i = 0; i < nvars; ++i) {
            Expvec e(nvars, 0);
            e[i] = 1;
            gens.push_back(std::move(e));
        }
        return MonomialIdeal(nvars, std::move(gens));
    }

private:
    std::uint32_t nvars_;
    std::vector<Expvec> gens_;
};

// Deletes every term lying in I. The residue determines membership:
// f is in I exactly when reduce_mod(f, I) = 0.
inline Polynomial reduce_mod(const Polynomial& f, const MonomialIdeal& I) {
    Polynomial r(f.modulus(), f.nvars());
    for (const auto& [e, c] : f.terms())
        if (!I.contains_monomial(e)) r.add_term(e, c);
    return r;
}

// Product with on-the-fly reduction mod I; skips term products that land in
// the ideal instead of accumulating and deleting them afterwards.
inline Polynomial mul_reduced(const Polynomial& a, const Polynomial& b,
                              const MonomialIdeal& I) {
    if (a.modulus() != b.modulus() || a.nvars() != b.nvars())
        throw precondition_error("polynomials from different rings");
    Polynomial r(a.modulus(), a.nvars());
    Expvec e(a.nvars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (std::uint32_t i = 0; i < a.nvars(); ++i) e[i] = ea[i] + eb[i];
            if (I.contains_monomial(e)) continue;
            r.add_term(e, static_cast<std::uint64_t>(ca) * cb);
            if (r.term_count() > max_poly_terms())
                throw resource_limit_error("product exceeds FTHRESH_MAX_TERMS");
        }
    }
    return r;
}

// Generators of I^[q] for polynomial generators: Frobenius is additive in
// characteristic p, so each generator is powered termwise.
inline std::vector<Polynomial> bracket_power(const std::vector<Polynomial>& gens,
                                             std::uint64_t q) {
    if (gens.empty()) throw precondition_error("empty generator list");
    std::uint32_t p = gens.front().modulus();
    if (!is_power_of(q, p))
        throw precondition_error("q is not a power of the characteristic");
    std::vector<Polynomial> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(g.frobenius_power(q));
    return out;
}

// Membership in the ordinary d-th power of a two-generated monomial ideal
// (g1, g2); the power is generated by the mixed products g1^i g2^(d-i).
inline bool member_power(const Polynomial& f, const Expvec& g1, const Expvec& g2,
                         std::uint64_t d) {
    if (d == 0) return true;
    if (f.is_zero()) return true;
    auto term_ok = [&](const Expvec& e) {
        for (std::uint64_t i = 0; i <= d; ++i) {
            bool ok = true;
            for (std::size_t k = 0; k < e.size() && ok; ++k) {
                std::uint64_t need = g1[k] * i + g2[k] * (d - i);
                ok = need <= e[k];
            }
            if (ok) return true;
        }
        return false;
    };
    for (const auto& [e, c] : f.terms())
        if (!term_ok(e)) return false;
    return true;
}

} // namespace fthresh

#endif
