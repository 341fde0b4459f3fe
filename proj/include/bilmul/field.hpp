// Binary extension fields GF(2^d) = GF(2)[x]/(Q_d) with the canonical
// modulus Q_d from gf2_poly.hpp. Elements are polynomials of degree < d.

#pragma once

#include <map>
#include <mutex>
#include <stdexcept>

#include "gf2_poly.hpp"

namespace bilmul {

struct FieldSpec {
    int extension_degree = 1;
    BinaryPoly modulus;

    static const FieldSpec& canonical(int d) {
        static std::mutex mu;
        static std::map<int, FieldSpec> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(d);
        if (it == cache.end()) {
            FieldSpec spec{d, canonical_irreducible(d)};
            it = cache.emplace(d, std::move(spec)).first;
        }
        return it->second;
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.extension_degree == b.extension_degree && a.modulus == b.modulus;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }
};

struct FieldElement {
    FieldSpec spec;
    BinaryPoly value;  // degree < spec.extension_degree

    FieldElement() = default;
    FieldElement(FieldSpec s, BinaryPoly v) : spec(std::move(s)), value(poly_mod(std::move(v), spec.modulus)) {}

    bool is_zero() const { return value.is_zero(); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.spec == b.spec && a.value == b.value;
    }
};

inline FieldElement field_add(const FieldElement& a, const FieldElement& b) {
    if (a.spec != b.spec) throw std::invalid_argument("field mismatch in addition");
    return FieldElement{a.spec, a.value + b.value};
}

inline FieldElement field_mul(const FieldElement& a, const FieldElement& b) {
    if (a.spec != b.spec) throw std::invalid_argument("field mismatch in multiplication");
    return FieldElement{a.spec, poly_mod(poly_mul(a.value, b.value), a.spec.modulus)};
}

// Value-level helpers, for code that keeps the spec implicit.
inline BinaryPoly field_mul(const FieldSpec& spec, const BinaryPoly& a, const BinaryPoly& b) {
    return poly_mod(poly_mul(a, b), spec.modulus);
}

// Discrete log / antilog tables for one field, used to make exhaustive
// verification sweeps cheap. Index of an element is its bit encoding.
struct FieldTables {
    int n = 0;
    std::vector<std::uint32_t> log;       // log[e] for e != 0
    std::vector<std::uint32_t> exp;       // exp[k] = g^k, k in [0, 2^n-2]
    std::uint64_t order = 0;              // 2^n - 1

    explicit FieldTables(const FieldSpec& spec) {
        n = spec.extension_degree;
        if (n > 20) throw std::invalid_argument("field tables limited to degree <= 20");
        order = (std::uint64_t{1} << n) - 1;
        log.assign(std::uint64_t{1} << n, 0);
        exp.assign(order, 0);
        if (n == 1) {
            exp[0] = 1;
            return;
        }
        // Find a generator: try elements in encoding order until the power
        // sequence has full period.
        for (std::uint64_t g = 2; g <= order; ++g) {
            BinaryPoly gen = BinaryPoly::from_bits(g);
            BinaryPoly acc = BinaryPoly::one();
            bool full = true;
            for (std::uint64_t k = 0; k < order; ++k) {
                std::uint64_t enc = acc.bits64();
                if (k > 0 && enc == 1) { full = false; break; }
                exp[k] = static_cast<std::uint32_t>(enc);
                log[enc] = static_cast<std::uint32_t>(k);
                acc = field_mul(spec, acc, gen);
            }
            if (full) return;
        }
        throw std::logic_error("no generator found");  // unreachable
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint64_t k = log[a] + log[b];
        if (k >= order) k -= order;
        return exp[k];
    }
};

}  // namespace bilmul
