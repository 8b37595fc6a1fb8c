#ifndef FTHRESH_BIGRAT_HPP
#define FTHRESH_BIGRAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "fthresh/errors.hpp"

namespace fthresh {

using BigInt = mpz_class;
using Rat = mpq_class;

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline Rat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw precondition_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den) { return make_rat(BigInt(num), BigInt(den)); }

// Lowest-terms serialization; integers print without the "/1".
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw precondition_error("malformed rational: " + s);
    if (q.get_den() == 0) throw precondition_error("rational with zero denominator");
    q.canonicalize();
    return q;
}

} // namespace fthresh

#endif
