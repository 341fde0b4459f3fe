// Polynomials over GF(2), stored as packed coefficient bits.
//
// BinaryPoly is the carrier for everything in this library that is a bit
// sequence: field elements, moduli, place representatives and the linear
// forms of bilinear algorithms. Coefficient i of x^i is bit i.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bilmul {

class BinaryPoly {
   public:
    BinaryPoly() = default;

    static BinaryPoly zero() { return BinaryPoly{}; }
    static BinaryPoly one() { return from_bits(1); }
    static BinaryPoly x() { return from_bits(2); }

    // Low 64 coefficients from an integer bit mask (bit i = coeff of x^i).
    static BinaryPoly from_bits(std::uint64_t bits) {
        BinaryPoly p;
        if (bits != 0) p.words_.push_back(bits);
        return p;
    }

    static BinaryPoly monomial(int degree) {
        BinaryPoly p;
        p.set_coeff(degree, true);
        return p;
    }

    // Degree of the zero polynomial is a sentinel below every real degree.
    static constexpr int kZeroDegree = -1;

    int degree() const {
        if (words_.empty()) return kZeroDegree;
        int top = static_cast<int>(words_.size()) - 1;
        return top * 64 + std::bit_width(words_.back()) - 1;
    }

    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }

    bool coeff(int i) const {
        if (i < 0) return false;
        std::size_t w = static_cast<std::size_t>(i) / 64;
        if (w >= words_.size()) return false;
        return (words_[w] >> (i % 64)) & 1u;
    }

    void set_coeff(int i, bool v) {
        if (i < 0) throw std::invalid_argument("negative coefficient index");
        std::size_t w = static_cast<std::size_t>(i) / 64;
        if (v) {
            if (w >= words_.size()) words_.resize(w + 1, 0);
            words_[w] |= std::uint64_t{1} << (i % 64);
        } else if (w < words_.size()) {
            words_[w] &= ~(std::uint64_t{1} << (i % 64));
            normalize();
        }
    }

    // Addition == subtraction == XOR in characteristic 2.
    BinaryPoly& operator+=(const BinaryPoly& o) {
        if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
        for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
        normalize();
        return *this;
    }
    friend BinaryPoly operator+(BinaryPoly a, const BinaryPoly& b) { return a += b; }

    // Multiplication by x^k.
    BinaryPoly shifted(int k) const {
        if (is_zero() || k == 0) return *this;
        if (k < 0) throw std::invalid_argument("negative shift");
        BinaryPoly r;
        int wshift = k / 64, bshift = k % 64;
        r.words_.assign(words_.size() + wshift + 1, 0);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            r.words_[i + wshift] ^= words_[i] << bshift;
            if (bshift != 0) r.words_[i + wshift + 1] ^= words_[i] >> (64 - bshift);
        }
        r.normalize();
        return r;
    }

    friend bool operator==(const BinaryPoly& a, const BinaryPoly& b) { return a.words_ == b.words_; }
    friend bool operator!=(const BinaryPoly& a, const BinaryPoly& b) { return !(a == b); }

    // Bitwise AND of coefficient masks (used for dot products of linear forms).
    friend BinaryPoly operator&(const BinaryPoly& a, const BinaryPoly& b) {
        BinaryPoly r;
        std::size_t n = std::min(a.words_.size(), b.words_.size());
        r.words_.resize(n);
        for (std::size_t i = 0; i < n; ++i) r.words_[i] = a.words_[i] & b.words_[i];
        r.normalize();
        return r;
    }

    int popcount() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    // Parity of <a, b> over GF(2); linear forms are bit masks.
    friend bool dot_parity(const BinaryPoly& a, const BinaryPoly& b) {
        std::uint64_t acc = 0;
        std::size_t n = std::min(a.words_.size(), b.words_.size());
        for (std::size_t i = 0; i < n; ++i) acc ^= a.words_[i] & b.words_[i];
        return std::popcount(acc) & 1;
    }

    // Canonical order: compare coefficient sequences read from the constant
    // term upward. The first differing coefficient decides; the polynomial
    // with a 0 there comes first.
    friend bool canonical_less(const BinaryPoly& a, const BinaryPoly& b) {
        std::size_t n = std::max(a.words_.size(), b.words_.size());
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t aw = i < a.words_.size() ? a.words_[i] : 0;
            std::uint64_t bw = i < b.words_.size() ? b.words_[i] : 0;
            std::uint64_t diff = aw ^ bw;
            if (diff != 0) {
                std::uint64_t low = diff & ~(diff - 1);
                return (aw & low) == 0;
            }
        }
        return false;
    }

    // Hex encoding, least-significant bit = constant term. x^2+x+1 -> "7".
    std::string to_hex() const {
        if (is_zero()) return "0";
        static const char* digits = "0123456789abcdef";
        std::string s;
        bool started = false;
        for (std::size_t i = words_.size(); i-- > 0;) {
            for (int nib = 15; nib >= 0; --nib) {
                unsigned v = (words_[i] >> (4 * nib)) & 0xF;
                if (!started && v == 0) continue;
                started = true;
                s.push_back(digits[v]);
            }
        }
        return s;
    }

    static BinaryPoly from_hex(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty hex string");
        BinaryPoly p;
        for (char c : s) {
            unsigned v;
            if (c >= '0' && c <= '9') v = static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f') v = static_cast<unsigned>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') v = static_cast<unsigned>(c - 'A' + 10);
            else throw std::invalid_argument("bad hex digit in polynomial: " + s);
            p = p.shifted(4);
            p += from_bits(v);
        }
        return p;
    }

    // Low 64 bits as an integer mask; requires degree < 64.
    std::uint64_t bits64() const {
        if (degree() >= 64) throw std::domain_error("polynomial does not fit in 64 bits");
        return words_.empty() ? 0 : words_[0];
    }

   private:
    void normalize() {
        while (!words_.empty() && words_.back() == 0) words_.pop_back();
    }

    std::vector<std::uint64_t> words_;
};

inline BinaryPoly poly_mul(const BinaryPoly& a, const BinaryPoly& b) {
    if (a.is_zero() || b.is_zero()) return BinaryPoly::zero();
    BinaryPoly r;
    // Shift-and-add over the set bits of the lower-degree factor.
    const BinaryPoly& lo = a.degree() <= b.degree() ? a : b;
    const BinaryPoly& hi = a.degree() <= b.degree() ? b : a;
    for (int i = 0; i <= lo.degree(); ++i)
        if (lo.coeff(i)) r += hi.shifted(i);
    return r;
}

inline BinaryPoly operator*(const BinaryPoly& a, const BinaryPoly& b) { return poly_mul(a, b); }

struct DivMod {
    BinaryPoly quotient;
    BinaryPoly remainder;
};

inline DivMod poly_divmod(const BinaryPoly& a, const BinaryPoly& m) {
    if (m.is_zero()) throw std::invalid_argument("division by zero polynomial");
    DivMod out;
    out.remainder = a;
    const int dm = m.degree();
    while (out.remainder.degree() >= dm) {
        int k = out.remainder.degree() - dm;
        out.quotient.set_coeff(k, true);
        out.remainder += m.shifted(k);
    }
    return out;
}

inline BinaryPoly poly_mod(const BinaryPoly& a, const BinaryPoly& m) { return poly_divmod(a, m).remainder; }

inline BinaryPoly poly_gcd(BinaryPoly a, BinaryPoly b) {
    while (!b.is_zero()) {
        BinaryPoly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// g = gcd(a, b) together with u satisfying u*a = g (mod b).
// Enough for modular inverses: if gcd(a, m) = 1 then u = a^-1 mod m.
inline std::pair<BinaryPoly, BinaryPoly> poly_half_ext_gcd(BinaryPoly a, BinaryPoly b) {
    BinaryPoly m = b;
    BinaryPoly u0 = BinaryPoly::one(), u1 = BinaryPoly::zero();
    while (!b.is_zero()) {
        DivMod qr = poly_divmod(a, b);
        BinaryPoly u2 = u0 + poly_mul(qr.quotient, u1);
        a = std::move(b);
        b = std::move(qr.remainder);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (!m.is_zero()) u0 = poly_mod(u0, m);
    return {a, u0};
}

inline BinaryPoly poly_inv_mod(const BinaryPoly& a, const BinaryPoly& m) {
    auto [g, u] = poly_half_ext_gcd(poly_mod(a, m), m);
    if (!g.is_one()) throw std::domain_error("polynomial is not invertible modulo m");
    return u;
}

// x^(2^k) mod m by repeated squaring; squaring is GF(2)-linear.
inline BinaryPoly poly_x_pow2k_mod(int k, const BinaryPoly& m) {
    BinaryPoly t = poly_mod(BinaryPoly::x(), m);
    for (int i = 0; i < k; ++i) t = poly_mod(poly_mul(t, t), m);
    return t;
}

// Rabin's criterion: p of degree d is irreducible over GF(2) iff
// x^(2^d) == x (mod p) and gcd(x^(2^(d/l)) - x, p) = 1 for every prime l | d.
inline bool is_irreducible(const BinaryPoly& p) {
    const int d = p.degree();
    if (d < 1) throw std::invalid_argument("irreducibility test requires degree >= 1");
    if (d == 1) return true;
    if (!p.coeff(0)) return false;  // divisible by x
    const BinaryPoly x = BinaryPoly::x();
    if (poly_x_pow2k_mod(d, p) + poly_mod(x, p) != BinaryPoly::zero()) return false;
    for (int l = 2; l <= d; ++l) {
        if (d % l != 0) continue;
        bool prime = true;
        for (int q = 2; q * q <= l; ++q)
            if (l % q == 0) { prime = false; break; }
        if (!prime) continue;
        BinaryPoly t = poly_x_pow2k_mod(d / l, p) + poly_mod(x, p);
        if (!poly_gcd(t, p).is_one()) return false;
    }
    return true;
}

// All monic irreducibles of degree d, in canonical order. The count matches
// the necklace formula (1/d) sum_{e|d} mu(e) 2^(d/e); enumeration past d = 8
// is outside the supported range.
inline std::vector<BinaryPoly> irreducibles_of_degree(int d) {
    if (d < 1 || d > 8) throw std::invalid_argument("irreducible enumeration supports 1 <= d <= 8");
    std::vector<BinaryPoly> out;
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << d); ++r) {
        BinaryPoly p = BinaryPoly::monomial(d);
        // Walk r's bits MSB-first so candidates appear in canonical order
        // (constant term varies slowest).
        for (int i = 0; i < d; ++i)
            if ((r >> (d - 1 - i)) & 1u) p.set_coeff(i, true);
        if (is_irreducible(p)) out.push_back(p);
    }
    return out;
}

// Canonically smallest irreducible of degree d; the modulus every field in
// this library uses.
inline BinaryPoly canonical_irreducible(int d) {
    if (d < 1) throw std::invalid_argument("unsupported modulus degree");
    if (d == 1) return BinaryPoly::x();
    // Canonical order with the constant term pinned to 1 (necessary from
    // degree 2 on): the highest-degree coefficients vary fastest, so bit j
    // of the counter toggles the coefficient of x^(d-1-j). The first
    // irreducible shows up after O(d) candidates; the cap is a safety net.
    const int span = std::min(d - 1, 30);
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << span); ++c) {
        BinaryPoly p = BinaryPoly::monomial(d) + BinaryPoly::one();
        for (int j = 0; j < span; ++j)
            if ((c >> j) & 1u) p.set_coeff(d - 1 - j, true);
        if (is_irreducible(p)) return p;
    }
    throw std::logic_error("no irreducible found in the canonical-order prefix");
}

}  // namespace bilmul
