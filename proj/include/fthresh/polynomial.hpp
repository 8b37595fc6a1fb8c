#ifndef FTHRESH_POLYNOMIAL_HPP
#define FTHRESH_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "fthresh/errors.hpp"
#include "fthresh/fp.hpp"

namespace fthresh {

// Exponent vector; its length always equals the number of ring variables.
using Expvec = std::vector<std::uint32_t>;

inline std::uint64_t expvec_total_degree(const Expvec& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

inline bool expvec_divides(const Expvec& a, const Expvec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Term-count ceiling for products, settable via FTHRESH_MAX_TERMS.
inline std::size_t max_poly_terms() {
    static const std::size_t cap = [] {
        if (const char* s = std::getenv("FTHRESH_MAX_TERMS")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(s, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(1) << 26;
    }();
    return cap;
}

// Sparse multivariate polynomial over F_p. Stored coefficients are nonzero
// residues in [1, p); the zero polynomial has an empty term map. Values are
// immutable in spirit: every operation returns a fresh polynomial.
class Polynomial {
public:
    using TermMap = std::map<Expvec, std::uint32_t>;

    Polynomial(std::uint32_t p, std::uint32_t nvars) : p_(p), nvars_(nvars) {
        if (!is_prime(p)) throw precondition_error("polynomial modulus is not prime");
    }

    static Polynomial constant(std::uint32_t p, std::uint32_t nvars, std::uint64_t c) {
        Polynomial f(p, nvars);
        f.add_term(Expvec(nvars, 0), c);
        return f;
    }

    static Polynomial monomial(std::uint32_t p, Expvec e, std::uint64_t c = 1) {
        Polynomial f(p, static_cast<std::uint32_t>(e.size()));
        f.add_term(std::move(e), c);
        return f;
    }

    std::uint32_t modulus() const { return p_; }
    std::uint32_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    std::uint32_t coefficient(const Expvec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    // Accumulates c into the coefficient at e, pruning a zero result.
    void add_term(Expvec e, std::uint64_t c) {
        if (e.size() != nvars_) throw precondition_error("exponent width mismatch");
        c %= p_;
        if (c == 0 && !terms_.count(e)) return;
        auto [it, fresh] = terms_.try_emplace(std::move(e), 0);
        std::uint64_t v = (it->second + c) % p_;
        if (v == 0)
            terms_.erase(it);
        else
            it->second = static_cast<std::uint32_t>(v);
    }

    std::uint64_t total_degree() const {
        if (is_zero()) throw precondition_error("degree of the zero polynomial");
        std::uint64_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, expvec_total_degree(e));
        return d;
    }

    // Order of vanishing at the origin: least total degree of a term.
    std::uint64_t ord() const {
        if (is_zero()) throw ord_of_zero();
        std::uint64_t d = UINT64_MAX;
        for (const auto& [e, c] : terms_) d = std::min(d, expvec_total_degree(e));
        return d;
    }

    Polynomial scaled(std::uint64_t c) const {
        Polynomial r(p_, nvars_);
        c %= p_;
        if (c == 0) return r;
        for (const auto& [e, v] : terms_) r.terms_[e] = static_cast<std::uint32_t>((v * c) % p_);
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        Polynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        Polynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, a.p_ - c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        Polynomial r(a.p_, a.nvars_);
        Expvec e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::uint32_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, static_cast<std::uint64_t>(ca) * cb);
                if (r.terms_.size() > max_poly_terms())
                    throw resource_limit_error("product exceeds FTHRESH_MAX_TERMS");
            }
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.p_ == b.p_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Polynomial pow(std::uint64_t k) const {
        Polynomial r = constant(p_, nvars_, 1);
        Polynomial base = *this;
        while (k) {
            if (k & 1) r = r * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return r;
    }

    // f^q for q a power of the characteristic: Frobenius acts termwise on a
    // prime-field polynomial (coefficients are fixed, exponents scale by q).
    Polynomial frobenius_power(std::uint64_t q) const {
        Polynomial r(p_, nvars_);
        for (const auto& [e, c] : terms_) {
            Expvec scaled(nvars_);
            for (std::uint32_t i = 0; i < nvars_; ++i) {
                std::uint64_t exp = e[i] * q;
                if (exp > UINT32_MAX)
                    throw resource_limit_error("exponent exceeds the supported range");
                scaled[i] = static_cast<std::uint32_t>(exp);
            }
            r.terms_.emplace(std::move(scaled), c);
        }
        return r;
    }

    // Image in the quotient by one variable: terms with a positive exponent
    // on `var` are dropped and the variable leaves the ring.
    Polynomial restrict(std::uint32_t var) const {
        if (var >= nvars_) throw precondition_error("restrict: no such variable");
        Polynomial r(p_, nvars_ - 1);
        for (const auto& [e, c] : terms_) {
            if (e[var] != 0) continue;
            Expvec cut;
            cut.reserve(nvars_ - 1);
            for (std::uint32_t i = 0; i < nvars_; ++i)
                if (i != var) cut.push_back(e[i]);
            r.terms_.emplace(std::move(cut), c);
        }
        return r;
    }

private:
    void check_ring(const Polynomial& other) const {
        if (p_ != other.p_ || nvars_ != other.nvars_)
            throw precondition_error("polynomials from different rings");
    }

    std::uint32_t p_;
    std::uint32_t nvars_;
    TermMap terms_;
};

inline bool is_power_of(std::uint64_t q, std::uint32_t p) {
    if (q == 0) return false;
    while (q % p == 0) q /= p;
    return q == 1;
}

} // namespace fthresh

#endif
