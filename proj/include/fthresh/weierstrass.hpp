#ifndef FTHRESH_WEIERSTRASS_HPP
#define FTHRESH_WEIERSTRASS_HPP

#include <cstdint>
#include <vector>

#include "fthresh/errors.hpp"
#include "fthresh/fp.hpp"
#include "fthresh/polynomial.hpp"

namespace fthresh {

// Result of Weierstrass preparation of a bivariate f in (x, y) with y
// distinguished (variable 0 is x, variable 1 is y):
//   unit * distinguished = f  mod (x^xprec, y^yprec_used),
// distinguished = y^d + c_{d-1}(x) y^{d-1} + ... + c_0(x) with c_j(0) = 0,
// and unit has nonzero constant term.
struct WeierstrassResult {
    Polynomial unit;
    Polynomial distinguished;
    std::uint64_t d;
    std::uint64_t xprec;
    std::uint64_t yprec_used;
};

namespace detail {

// Dense y-major coefficient table for k[x]/(x^N) [y]/(y^M) arithmetic.
struct YxTable {
    std::uint64_t N, M;
    std::uint32_t p;
    std::vector<std::vector<std::uint32_t>> c; // c[j][k] = coeff of y^j x^k

    YxTable(std::uint64_t N_, std::uint64_t M_, std::uint32_t p_)
        : N(N_), M(M_), p(p_), c(M_, std::vector<std::uint32_t>(N_, 0)) {}
};

} // namespace detail

// Successive x-adic approximation in k[x]/(x^N): writing the product
// equation out by x-degree, each level k determines the distinguished
// coefficients below y^d via the inverse of the unit's x^0 part and then the
// unit's x^k part by exact division by y^d.
inline WeierstrassResult weierstrass_prepare(const Polynomial& f, std::uint64_t xprec,
                                             std::uint64_t ydeg_bound) {
    if (f.nvars() != 2) throw precondition_error("weierstrass_prepare needs 2 variables");
    if (f.is_zero()) throw not_y_regular();
    if (xprec == 0) throw precondition_error("x-adic precision must be positive");
    const std::uint32_t p = f.modulus();

    // d = least y-degree with a unit coefficient at x = 0.
    std::uint64_t d = UINT64_MAX;
    for (const auto& [e, coef] : f.terms())
        if (e[0] == 0) d = std::min<std::uint64_t>(d, e[1]);
    if (d == UINT64_MAX) throw not_y_regular();

    const std::uint64_t M = std::max<std::uint64_t>(ydeg_bound, d + 1);
    const std::uint64_t N = xprec;

    detail::YxTable ftab(N, M, p);
    for (const auto& [e, coef] : f.terms())
        if (e[0] < N && e[1] < M) ftab.c[e[1]][e[0]] = coef;

    // u0(y) = f(0, y) / y^d, invertible at y = 0.
    std::vector<std::uint32_t> u0(M, 0);
    for (std::uint64_t j = d; j < M; ++j) u0[j - d] = ftab.c[j][0];

    // inv0 = u0^{-1} mod y^d (only the first d coefficients are ever used).
    std::vector<std::uint32_t> inv0(std::max<std::uint64_t>(d, 1), 0);
    {
        const std::uint32_t lead_inv = Fp(u0[0], p).inverse().value();
        inv0[0] = lead_inv;
        for (std::uint64_t j = 1; j < d; ++j) {
            std::uint64_t acc = 0;
            for (std::uint64_t i = 1; i <= j; ++i)
                acc += static_cast<std::uint64_t>(i < M ? u0[i] : 0) * inv0[j - i] % p;
            inv0[j] = static_cast<std::uint32_t>((p - acc % p) % p * lead_inv % p);
        }
    }

    // R[k][j]: coeff of x^k y^j in the distinguished tail (j < d, k >= 1).
    // U[k][j]: coeff of x^k y^j in the unit.
    std::vector<std::vector<std::uint32_t>> R(N, std::vector<std::uint32_t>(std::max<std::uint64_t>(d, 1), 0));
    std::vector<std::vector<std::uint32_t>> U(N, std::vector<std::uint32_t>(M, 0));
    U[0] = u0;

    std::vector<std::uint32_t> w(M, 0);
    for (std::uint64_t k = 1; k < N; ++k) {
        for (std::uint64_t j = 0; j < M; ++j) w[j] = ftab.c[j][k];
        for (std::uint64_t i = 1; i < k; ++i)
            for (std::uint64_t a = 0; a < d; ++a) {
                if (R[i][a] == 0) continue;
                for (std::uint64_t bj = 0; a + bj < M; ++bj) {
                    std::uint64_t prod = static_cast<std::uint64_t>(R[i][a]) * U[k - i][bj] % p;
                    w[a + bj] = static_cast<std::uint32_t>((w[a + bj] + p - prod) % p);
                }
            }
        // R_k = (w * inv0) mod y^d, then U_k = (w - R_k u0) / y^d.
        for (std::uint64_t j = 0; j < d; ++j) {
            std::uint64_t acc = 0;
            for (std::uint64_t i = 0; i <= j; ++i)
                acc += static_cast<std::uint64_t>(w[i]) * inv0[j - i] % p;
            R[k][j] = static_cast<std::uint32_t>(acc % p);
        }
        for (std::uint64_t j = 0; j + d < M; ++j) {
            std::uint64_t acc = w[j + d] % p;
            for (std::uint64_t i = 0; i < d; ++i) {
                if (R[k][i] == 0 || j + d < i) continue;
                std::uint64_t bj = j + d - i;
                if (bj >= M) continue;
                acc = (acc + p - static_cast<std::uint64_t>(R[k][i]) * u0[bj] % p) % p;
            }
            U[k][j] = static_cast<std::uint32_t>(acc);
        }
    }

    Polynomial unit(p, 2), dist(p, 2);
    for (std::uint64_t k = 0; k < N; ++k)
        for (std::uint64_t j = 0; j < M; ++j)
            if (U[k][j])
                unit.add_term({static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(j)}, U[k][j]);
    dist.add_term({0, static_cast<std::uint32_t>(d)}, 1);
    for (std::uint64_t k = 1; k < N; ++k)
        for (std::uint64_t j = 0; j < d; ++j)
            if (R[k][j])
                dist.add_term({static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(j)}, R[k][j]);

    return WeierstrassResult{std::move(unit), std::move(dist), d, N, M};
}

} // namespace fthresh

#endif
