// Rank-decomposed multiplication algorithms for GF(2^n):
//
//     x * y = sum_l <a_l, x> <b_l, y> c_l
//
// with GF(2) linear forms a_l, b_l and recombination vectors c_l. The rank
// is the number of bit products, the cost measure everything here minimizes.

#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "field.hpp"

namespace bilmul {

// Unit costs: multiplications in GF(2^d) cost mu(d) bit products, and a
// truncated two-term product (mod t^2) costs mhat2 host multiplications.
struct RankBudget {
    static constexpr int mu1 = 1;
    static constexpr int mu2 = 3;
    static constexpr int mu4 = 9;
    static constexpr int mhat2 = 3;

    static constexpr int mu(int d) {
        return d == 1 ? mu1 : d == 2 ? mu2 : d == 4 ? mu4 : -1;
    }
};

struct BilinearAlgorithm {
    int n = 0;
    int rank = 0;
    FieldSpec field;                  // canonical GF(2^n)
    std::vector<BinaryPoly> a_forms;  // rank bit masks of length n
    std::vector<BinaryPoly> b_forms;
    std::vector<BinaryPoly> c_vecs;
};

inline FieldElement evaluate(const BilinearAlgorithm& alg, const FieldElement& x, const FieldElement& y) {
    if (x.spec != alg.field || y.spec != alg.field) throw std::invalid_argument("field mismatch in evaluate");
    BinaryPoly z;
    for (int l = 0; l < alg.rank; ++l)
        if (dot_parity(alg.a_forms[l], x.value) && dot_parity(alg.b_forms[l], y.value)) z += alg.c_vecs[l];
    return FieldElement{alg.field, z};
}

enum class VerifyMode { exhaustive, random };

// Seed for randomized verification; fixed so every run checks the same pairs.
inline constexpr std::uint64_t kVerifySeed = 0x62696c6d756c5eedULL;

namespace detail {

// Packed evaluation tables: word w of packed[e] holds bits <f_l, e> for
// forms l in [64w, 64w+64).
inline std::vector<std::uint64_t> pack_forms(const std::vector<BinaryPoly>& forms, int n) {
    std::size_t words = (forms.size() + 63) / 64;
    std::vector<std::uint64_t> packed((std::size_t{1} << n) * words, 0);
    for (std::uint64_t e = 0; e < (std::uint64_t{1} << n); ++e) {
        BinaryPoly ep = BinaryPoly::from_bits(e);
        for (std::size_t l = 0; l < forms.size(); ++l)
            if (dot_parity(forms[l], ep)) packed[e * words + l / 64] |= std::uint64_t{1} << (l % 64);
    }
    return packed;
}

}  // namespace detail

inline bool verify(const BilinearAlgorithm& alg, VerifyMode mode, std::uint64_t samples = 100000) {
    const int n = alg.n;
    if (mode == VerifyMode::exhaustive) {
        if (n > 12) throw std::invalid_argument("exhaustive verification supports n <= 12");
        const std::uint64_t size = std::uint64_t{1} << n;
        const std::size_t words = (static_cast<std::size_t>(alg.rank) + 63) / 64;
        auto pa = detail::pack_forms(alg.a_forms, n);
        auto pb = detail::pack_forms(alg.b_forms, n);
        // Byte-indexed XOR tables over the c vectors.
        std::vector<std::uint64_t> ctab(words * 8 * 256, 0);
        for (int l = 0; l < alg.rank; ++l) {
            std::size_t byte = static_cast<std::size_t>(l) / 8;
            std::uint64_t cbits = alg.c_vecs[l].bits64();
            for (int v = 0; v < 256; ++v)
                if ((v >> (l % 8)) & 1) ctab[(byte * 256) + static_cast<std::size_t>(v)] ^= cbits;
        }
        FieldTables tab(alg.field);
        for (std::uint64_t x = 0; x < size; ++x) {
            const std::uint64_t* ax = &pa[x * words];
            for (std::uint64_t y = 0; y < size; ++y) {
                const std::uint64_t* by = &pb[y * words];
                std::uint64_t z = 0;
                for (std::size_t w = 0; w < words; ++w) {
                    std::uint64_t hits = ax[w] & by[w];
                    for (int byte = 0; byte < 8; ++byte) {
                        unsigned idx = (hits >> (8 * byte)) & 0xFF;
                        if (idx) z ^= ctab[(w * 8 + byte) * 256 + idx];
                    }
                }
                if (z != tab.mul(x, y)) return false;
            }
        }
        return true;
    }
    std::mt19937_64 rng(kVerifySeed + static_cast<std::uint64_t>(n));
    for (std::uint64_t i = 0; i < samples; ++i) {
        BinaryPoly xv, yv;
        for (int j = 0; j < n; ++j) {
            if (rng() & 1) xv.set_coeff(j, true);
            if (rng() & 1) yv.set_coeff(j, true);
        }
        FieldElement x{alg.field, xv}, y{alg.field, yv};
        if (!(evaluate(alg, x, y) == field_mul(x, y))) return false;
    }
    return true;
}

// --- base formulas ---------------------------------------------------------

// GF(2): one bit product.
inline BilinearAlgorithm identity1() {
    BilinearAlgorithm alg;
    alg.n = 1;
    alg.rank = 1;
    alg.field = FieldSpec::canonical(1);
    alg.a_forms = {BinaryPoly::one()};
    alg.b_forms = {BinaryPoly::one()};
    alg.c_vecs = {BinaryPoly::one()};
    return alg;
}

// Karatsuba for GF(4) = GF(2)[x]/(x^2+x+1): products x0y0, x1y1,
// (x0+x1)(y0+y1); with x^2 = x+1 the result is
//   z0 = x0y0 + x1y1,  z1 = (x0+x1)(y0+y1) + x0y0.
inline BilinearAlgorithm karatsuba2() {
    BilinearAlgorithm alg;
    alg.n = 2;
    alg.rank = 3;
    alg.field = FieldSpec::canonical(2);
    alg.a_forms = {BinaryPoly::from_bits(0b01), BinaryPoly::from_bits(0b10), BinaryPoly::from_bits(0b11)};
    alg.b_forms = alg.a_forms;
    alg.c_vecs = {BinaryPoly::from_bits(0b11), BinaryPoly::from_bits(0b01), BinaryPoly::from_bits(0b10)};
    return alg;
}

// Two-term truncated product over GF(2^d): three host multiplications giving
//   c0 = f0*g0,  c1 = (f0+f1)(g0+g1) + f0*g0 + f1*g1   (mod t^2).
struct Truncated2 {
    FieldSpec coeff_field;

    explicit Truncated2(int d) : coeff_field(FieldSpec::canonical(d)) {}

    std::pair<FieldElement, FieldElement> multiply(const std::pair<FieldElement, FieldElement>& f,
                                                   const std::pair<FieldElement, FieldElement>& g) const {
        FieldElement m0 = field_mul(f.first, g.first);
        FieldElement m1 = field_mul(f.second, g.second);
        FieldElement m2 = field_mul(field_add(f.first, f.second), field_add(g.first, g.second));
        return {m0, field_add(field_add(m2, m0), m1)};
    }
};

inline Truncated2 truncated2(int d) {
    if (d != 1 && d != 2 && d != 4) throw std::invalid_argument("truncated2 supports d in {1,2,4}");
    return Truncated2(d);
}

// --- straight-line programs -------------------------------------------------

// Emits XOR/AND statements computing z = x*y from bits x0..x{n-1}, y0..y{n-1}.
// Exactly `rank` AND statements appear, one per bit product.
inline std::string codegen(const BilinearAlgorithm& alg) {
    std::ostringstream out;
    int next_tmp = 0;
    auto form_expr = [&](const BinaryPoly& form, char var) -> std::string {
        std::vector<int> bits;
        for (int j = 0; j < alg.n; ++j)
            if (form.coeff(j)) bits.push_back(j);
        if (bits.empty()) {
            std::string t = "t" + std::to_string(next_tmp++);
            out << t << " = 0\n";
            return t;
        }
        std::string cur = std::string(1, var) + std::to_string(bits[0]);
        for (std::size_t i = 1; i < bits.size(); ++i) {
            std::string t = "t" + std::to_string(next_tmp++);
            out << t << " = " << cur << " ^ " << var << bits[i] << "\n";
            cur = t;
        }
        return cur;
    };
    for (int l = 0; l < alg.rank; ++l) {
        std::string lhs = form_expr(alg.a_forms[l], 'x');
        std::string rhs = form_expr(alg.b_forms[l], 'y');
        out << "m" << l << " = " << lhs << " & " << rhs << "\n";
    }
    for (int j = 0; j < alg.n; ++j) {
        std::vector<int> terms;
        for (int l = 0; l < alg.rank; ++l)
            if (alg.c_vecs[l].coeff(j)) terms.push_back(l);
        if (terms.empty()) {
            out << "z" << j << " = 0\n";
            continue;
        }
        if (terms.size() == 1) {
            out << "z" << j << " = m" << terms[0] << "\n";
            continue;
        }
        std::string cur = "m" + std::to_string(terms[0]);
        for (std::size_t i = 1; i < terms.size(); ++i) {
            std::string t = (i + 1 == terms.size()) ? ("z" + std::to_string(j))
                                                    : ("t" + std::to_string(next_tmp++));
            out << t << " = " << cur << " ^ m" << terms[i] << "\n";
            cur = t;
        }
    }
    return out.str();
}

}  // namespace bilmul
