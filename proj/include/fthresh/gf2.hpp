#ifndef FTHRESH_GF2_HPP
#define FTHRESH_GF2_HPP

#include <cstdint>
#include <vector>

#include "fthresh/errors.hpp"
#include "fthresh/polynomial.hpp"

namespace fthresh {

// Dense bivariate polynomial over F_2 with bounded support: bit (i, j) is
// the coefficient of x^i y^j with i < xbound, j < ybound. Exactly the
// residue representation mod the rectangle ideal (x^xbound, y^ybound), so
// multiplication silently truncates to the rectangle.
class DenseGf2 {
public:
    DenseGf2(std::uint32_t xbound, std::uint32_t ybound)
        : xb_(xbound), yb_(ybound), wpr_((xbound + 63) / 64) {
        if (xbound == 0 || ybound == 0)
            throw precondition_error("empty GF(2) kernel bounds");
        std::uint64_t bits = static_cast<std::uint64_t>(wpr_) * 64 * yb_;
        if (bits > (1ull << 32))
            throw resource_limit_error("GF(2) kernel exceeds size budget");
        w_.assign(static_cast<std::size_t>(wpr_) * yb_, 0);
    }

    static DenseGf2 from_sparse(const Polynomial& f, std::uint32_t xbound,
                                std::uint32_t ybound) {
        if (f.modulus() != 2 || f.nvars() != 2)
            throw precondition_error("GF(2) kernel needs a bivariate F_2 polynomial");
        DenseGf2 d(xbound, ybound);
        for (const auto& [e, c] : f.terms())
            if (e[0] < xbound && e[1] < ybound) d.flip(e[0], e[1]);
        return d;
    }

    Polynomial to_sparse() const {
        Polynomial f(2, 2);
        for (std::uint32_t y = 0; y < yb_; ++y)
            for (std::uint32_t x = 0; x < xb_; ++x)
                if (test(x, y)) f.add_term({x, y}, 1);
        return f;
    }

    std::uint32_t xbound() const { return xb_; }
    std::uint32_t ybound() const { return yb_; }

    bool test(std::uint32_t x, std::uint32_t y) const {
        return (row(y)[x >> 6] >> (x & 63)) & 1;
    }
    void flip(std::uint32_t x, std::uint32_t y) { row(y)[x >> 6] ^= 1ull << (x & 63); }

    bool is_zero() const {
        for (auto v : w_)
            if (v) return false;
        return true;
    }

    // this ^= src shifted by (dx, dy); bits pushed past the bounds vanish.
    void xor_shifted(const DenseGf2& src, std::uint32_t dx, std::uint32_t dy) {
        if (dx >= xb_ || dy >= yb_) return;
        const std::uint32_t ws = dx >> 6, bs = dx & 63;
        const std::uint64_t tail = tail_mask();
        for (std::uint32_t y = 0; y + dy < yb_ && y < src.yb_; ++y) {
            const std::uint64_t* s = src.row(y);
            std::uint64_t* t = row(y + dy);
            const std::uint32_t swpr = src.wpr_;
            if (bs == 0) {
                for (std::uint32_t w = 0; w + ws < wpr_ && w < swpr; ++w)
                    t[w + ws] ^= s[w];
            } else {
                for (std::uint32_t w = 0; w + ws < wpr_; ++w) {
                    std::uint64_t lo = w < swpr ? s[w] : 0;
                    std::uint64_t hi = (w > 0 && w - 1 < swpr) ? s[w - 1] : 0;
                    t[w + ws] ^= (lo << bs) | (hi >> (64 - bs));
                }
            }
            t[wpr_ - 1] &= tail;
        }
    }

    // Product by a sparse F_2 multiplier, truncated to this rectangle.
    DenseGf2 multiplied_by(const Polynomial& f) const {
        if (f.modulus() != 2 || f.nvars() != 2)
            throw precondition_error("GF(2) kernel needs a bivariate F_2 polynomial");
        DenseGf2 out(xb_, yb_);
        for (const auto& [e, c] : f.terms()) out.xor_shifted(*this, e[0], e[1]);
        return out;
    }

    // Frobenius square: bit (i, j) maps to (2i, 2j) inside doubled bounds.
    DenseGf2 frobenius_square() const {
        DenseGf2 out(xb_ * 2, yb_ * 2);
        for (std::uint32_t y = 0; y < yb_; ++y) {
            const std::uint64_t* s = row(y);
            std::uint64_t* t = out.row(2 * y);
            for (std::uint32_t w = 0; w < wpr_; ++w) {
                if (!s[w]) continue;
                if (2 * w < out.wpr_) t[2 * w] = spread32(s[w] & 0xFFFFFFFFu);
                if (2 * w + 1 < out.wpr_) t[2 * w + 1] = spread32(s[w] >> 32);
            }
        }
        return out;
    }

private:
    const std::uint64_t* row(std::uint32_t y) const { return w_.data() + std::size_t(y) * wpr_; }
    std::uint64_t* row(std::uint32_t y) { return w_.data() + std::size_t(y) * wpr_; }

    std::uint64_t tail_mask() const {
        std::uint32_t used = xb_ & 63;
        return used == 0 ? ~0ull : (~0ull >> (64 - used));
    }

    static std::uint64_t spread32(std::uint64_t x) {
        x &= 0xFFFFFFFFull;
        x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
        x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
        x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
        x = (x | (x << 2)) & 0x3333333333333333ull;
        x = (x | (x << 1)) & 0x5555555555555555ull;
        return x;
    }

    std::uint32_t xb_, yb_, wpr_;
    std::vector<std::uint64_t> w_;
};

} // namespace fthresh

#endif
