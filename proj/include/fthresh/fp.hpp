#ifndef FTHRESH_FP_HPP
#define FTHRESH_FP_HPP

#include <cstdint>
#include <optional>

#include "fthresh/errors.hpp"

namespace fthresh {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = (r * base) % m;
        base = (base * base) % m;
        exp >>= 1;
    }
    return r;
}

// Element of the prime field F_p. Carries its modulus; mixing moduli is a
// caller error.
class Fp {
public:
    Fp() : value_(0), p_(2) {}
    Fp(std::uint64_t value, std::uint32_t p) : value_(value % p), p_(p) {
        if (!is_prime(p)) throw precondition_error("modulus is not prime");
    }

    std::uint32_t value() const { return static_cast<std::uint32_t>(value_); }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return value_ == 0; }

    friend Fp operator+(Fp a, Fp b) {
        a.check(b);
        return Fp::raw((a.value_ + b.value_) % a.p_, a.p_);
    }
    friend Fp operator-(Fp a, Fp b) {
        a.check(b);
        return Fp::raw((a.value_ + a.p_ - b.value_) % a.p_, a.p_);
    }
    friend Fp operator*(Fp a, Fp b) {
        a.check(b);
        return Fp::raw((a.value_ * b.value_) % a.p_, a.p_);
    }
    friend bool operator==(Fp a, Fp b) { return a.p_ == b.p_ && a.value_ == b.value_; }

    Fp pow(std::uint64_t e) const { return raw(mod_pow(value_, e, p_), p_); }

    Fp inverse() const {
        if (value_ == 0) throw precondition_error("inverse of zero in F_p");
        return pow(p_ - 2);
    }

private:
    static Fp raw(std::uint64_t v, std::uint32_t p) {
        Fp x;
        x.value_ = v;
        x.p_ = p;
        return x;
    }
    void check(const Fp& other) const {
        if (p_ != other.p_) throw precondition_error("mixed F_p moduli");
    }

    std::uint64_t value_;
    std::uint32_t p_;
};

// Least c in [0, p) with c^s = a mod p, if one exists. Exhaustive scan; p is
// desk-scale here.
inline std::optional<std::uint32_t> sth_root_mod_p(std::uint32_t a, std::uint64_t s,
                                                   std::uint32_t p) {
    a %= p;
    for (std::uint32_t c = 0; c < p; ++c)
        if (mod_pow(c, s, p) == a) return c;
    return std::nullopt;
}

} // namespace fthresh

#endif
