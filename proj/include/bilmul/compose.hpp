// Composition of multiplication algorithms along a field tower:
// an algorithm for L = K[y]/(g) over K = GF(2^m) costing R_out host
// multiplications, combined with an algorithm for K over GF(2) costing R_in
// bit products, yields an algorithm for GF(2^(m*deg g)) of rank R_out*R_in.
// The basis change from the tower representation to the canonical modulus is
// folded into the linear forms.

#pragma once

#include <numeric>

#include "bilinear.hpp"

namespace bilmul {

// Multiplication algorithm for K[y]/(g) with coefficients in the host field
// K; forms and recombination vectors have K entries.
struct HostAlgorithm {
    FieldSpec host;                   // K, canonical GF(2^m)
    std::vector<BinaryPoly> modulus;  // monic g, size ext_degree+1, entries in K
    int ext_degree = 0;
    int rank = 0;
    std::vector<std::vector<BinaryPoly>> a, b, c;  // rank x ext_degree
};

namespace detail {

// Integer-value order on bit encodings (highest differing bit decides).
inline bool value_less(const BinaryPoly& a, const BinaryPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    BinaryPoly d = a + b;
    if (d.is_zero()) return false;
    return !a.coeff(d.degree());
}

}  // namespace detail

// K[y]/(g) with K = GF(2^m). Elements are vectors of K encodings; K
// arithmetic runs on log/antilog tables, so this stays usable for the
// larger fields the composed route produces.
class TowerField {
   public:
    using K = std::uint32_t;           // K element by bit encoding
    using Elem = std::vector<K>;       // component j = coefficient of y^j

    TowerField(const FieldSpec& host, const std::vector<BinaryPoly>& modulus)
        : base_(host), tables_(host), n_(static_cast<int>(modulus.size()) - 1), m_(host.extension_degree) {
        if (n_ < 1 || !modulus.back().is_one()) throw std::invalid_argument("tower modulus must be monic");
        g_.resize(modulus.size());
        for (std::size_t i = 0; i < modulus.size(); ++i) g_[i] = static_cast<K>(modulus[i].bits64());
    }

    const FieldSpec& base() const { return base_; }
    int ext_degree() const { return n_; }
    int total_degree() const { return n_ * m_; }

    K kmul(K a, K b) const { return static_cast<K>(tables_.mul(a, b)); }
    K kinv(K a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        if (a == 1) return 1;
        return static_cast<K>(tables_.exp[tables_.order - tables_.log[a]]);
    }

    Elem zero() const { return Elem(static_cast<std::size_t>(n_), 0); }
    Elem one() const {
        Elem e(static_cast<std::size_t>(n_), 0);
        e[0] = 1;
        return e;
    }

    static bool is_zero(const Elem& e) {
        for (K c : e)
            if (c != 0) return false;
        return true;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r(a);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] ^= b[i];
        return r;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        std::vector<K> prod(static_cast<std::size_t>(2 * n_ - 1), 0);
        for (int i = 0; i < n_; ++i) {
            if (a[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < n_; ++j)
                if (b[static_cast<std::size_t>(j)] != 0)
                    prod[static_cast<std::size_t>(i + j)] ^=
                        kmul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]);
        }
        for (int d = 2 * n_ - 2; d >= n_; --d) {
            K lead = prod[static_cast<std::size_t>(d)];
            if (lead == 0) continue;
            prod[static_cast<std::size_t>(d)] = 0;
            for (int j = 0; j < n_; ++j)
                prod[static_cast<std::size_t>(d - n_ + j)] ^= kmul(lead, g_[static_cast<std::size_t>(j)]);
        }
        prod.resize(static_cast<std::size_t>(n_));
        return prod;
    }

    Elem inv(const Elem& a) const {
        // Extended Euclid in K[y] modulo g; keeps u with u*a = r (mod g).
        std::vector<K> r0(g_), r1(a), u0, u1 = {1};
        trim(r1);
        if (r1.empty()) throw std::domain_error("inverse of zero tower element");
        while (!r1.empty()) {
            auto [q, r2] = kpoly_divmod(r0, r1);
            std::vector<K> u2 = kpoly_add(u0, kpoly_mul(q, u1));
            r0 = std::move(r1);
            r1 = std::move(r2);
            u0 = std::move(u1);
            u1 = std::move(u2);
        }
        if (r0.size() != 1) throw std::domain_error("tower modulus is not irreducible");
        K s = kinv(r0[0]);
        Elem out(static_cast<std::size_t>(n_), 0);
        for (std::size_t i = 0; i < u0.size(); ++i) out[i] = kmul(s, u0[i]);
        return out;
    }

    // Component bits packed side by side: component j occupies bits
    // [j*m, (j+1)*m).
    BinaryPoly to_bits(const Elem& e) const {
        BinaryPoly out;
        for (int j = 0; j < n_; ++j)
            for (int i = 0; i < m_; ++i)
                if ((e[static_cast<std::size_t>(j)] >> i) & 1u) out.set_coeff(j * m_ + i, true);
        return out;
    }

    Elem from_bits(const BinaryPoly& bits) const {
        Elem e(static_cast<std::size_t>(n_), 0);
        for (int j = 0; j < n_; ++j)
            for (int i = 0; i < m_; ++i)
                if (bits.coeff(j * m_ + i)) e[static_cast<std::size_t>(j)] |= K{1} << i;
        return e;
    }

   private:
    static void trim(std::vector<K>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }

    std::vector<K> kpoly_add(std::vector<K> a, const std::vector<K>& b) const {
        if (b.size() > a.size()) a.resize(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i) a[i] ^= b[i];
        trim(a);
        return a;
    }

    std::vector<K> kpoly_mul(const std::vector<K>& a, const std::vector<K>& b) const {
        if (a.empty() || b.empty()) return {};
        std::vector<K> r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                if (b[j] != 0) r[i + j] ^= kmul(a[i], b[j]);
        }
        trim(r);
        return r;
    }

    std::pair<std::vector<K>, std::vector<K>> kpoly_divmod(std::vector<K> a, const std::vector<K>& b) const {
        std::vector<K> q;
        K lead_inv = kinv(b.back());
        while (a.size() >= b.size()) {
            std::size_t shift = a.size() - b.size();
            K f = kmul(a.back(), lead_inv);
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] ^= f;
            for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] ^= kmul(f, b[i]);
            trim(a);
        }
        return {q, a};
    }

    FieldSpec base_;
    FieldTables tables_;
    int n_ = 0, m_ = 0;
    std::vector<K> g_;
};

namespace detail {

// Polynomials over a tower field, dense, lowest degree first.
using TPoly = std::vector<TowerField::Elem>;

inline void ttrim(TPoly& p) {
    while (!p.empty() && TowerField::is_zero(p.back())) p.pop_back();
}

inline TPoly tmul(const TowerField& T, const TPoly& a, const TPoly& b) {
    if (a.empty() || b.empty()) return {};
    TPoly r(a.size() + b.size() - 1, T.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (TowerField::is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!TowerField::is_zero(b[j])) r[i + j] = T.add(r[i + j], T.mul(a[i], b[j]));
    }
    ttrim(r);
    return r;
}

inline std::pair<TPoly, TPoly> tdivmod(const TowerField& T, TPoly a, const TPoly& b) {
    TPoly q;
    auto lead_inv = T.inv(b.back());
    while (a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        auto f = T.mul(a.back(), lead_inv);
        if (q.size() < shift + 1) q.resize(shift + 1, T.zero());
        q[shift] = T.add(q[shift], f);
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = T.add(a[i + shift], T.mul(f, b[i]));
        ttrim(a);
    }
    return {q, a};
}

inline TPoly tgcd(const TowerField& T, TPoly a, TPoly b) {
    ttrim(a);
    ttrim(b);
    while (!b.empty()) {
        TPoly r = tdivmod(T, std::move(a), b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        auto inv = T.inv(a.back());
        for (auto& c : a) c = T.mul(c, inv);
    }
    return a;
}

// All roots of a monic h that splits into distinct linear factors over T,
// found by splitting along absolute trace forms.
inline void collect_linear_roots(const TowerField& T, const TPoly& h, std::vector<TowerField::Elem>& out) {
    if (h.size() <= 1) return;
    if (h.size() == 2) {
        out.push_back(h[0]);  // monic X + c has root c in characteristic 2
        return;
    }
    const int total = T.total_degree();
    // X^(2^i) mod h for i in [0, total).
    std::vector<TPoly> pow2(static_cast<std::size_t>(total));
    TPoly xp = {T.zero(), T.one()};
    for (int i = 0; i < total; ++i) {
        pow2[static_cast<std::size_t>(i)] = xp;
        xp = tdivmod(T, tmul(T, xp, xp), h).second;
    }
    // A separating trace form exists among the bit-basis elements: for any
    // two distinct roots some basis beta has Tr(beta*(r1-r2)) = 1.
    for (int bidx = 0; bidx < total; ++bidx) {
        auto beta = T.from_bits(BinaryPoly::monomial(bidx));
        TPoly tr(h.size() - 1, T.zero());
        auto bpow = beta;
        for (int i = 0; i < total; ++i) {
            const TPoly& p = pow2[static_cast<std::size_t>(i)];
            for (std::size_t j = 0; j < p.size(); ++j) tr[j] = T.add(tr[j], T.mul(bpow, p[j]));
            bpow = T.mul(bpow, bpow);
        }
        ttrim(tr);
        TPoly g = tgcd(T, h, tr);
        if (g.size() > 1 && g.size() < h.size()) {
            collect_linear_roots(T, g, out);
            collect_linear_roots(T, tdivmod(T, h, g).first, out);
            return;
        }
    }
    throw std::logic_error("trace splitting failed to separate roots");
}

// Smallest root (by integer bit encoding) of the canonical modulus Q inside
// the tower field. Brute-force scan for small fields, trace splitting above.
inline TowerField::Elem smallest_root(const TowerField& T, const BinaryPoly& Q) {
    const int total = T.total_degree();
    if (total <= 16) {
        for (std::uint64_t e = 0; e < (std::uint64_t{1} << total); ++e) {
            auto cand = T.from_bits(BinaryPoly::from_bits(e));
            auto acc = T.zero();
            for (int d = Q.degree(); d >= 0; --d) {
                acc = T.mul(acc, cand);
                if (Q.coeff(d)) acc = T.add(acc, T.one());
            }
            if (TowerField::is_zero(acc)) return cand;
        }
        throw std::logic_error("canonical modulus has no root in the tower field");
    }
    TPoly h(static_cast<std::size_t>(Q.degree()) + 1, T.zero());
    for (int d = 0; d <= Q.degree(); ++d)
        if (Q.coeff(d)) h[static_cast<std::size_t>(d)] = T.one();
    std::vector<TowerField::Elem> roots;
    collect_linear_roots(T, h, roots);
    if (roots.empty()) throw std::logic_error("canonical modulus has no root in the tower field");
    std::size_t best = 0;
    BinaryPoly best_enc = T.to_bits(roots[0]);
    for (std::size_t i = 1; i < roots.size(); ++i) {
        BinaryPoly enc = T.to_bits(roots[i]);
        if (value_less(enc, best_enc)) {
            best_enc = enc;
            best = i;
        }
    }
    return roots[best];
}

// Rows of the inverse of a GF(2) matrix given by rows.
inline std::vector<BinaryPoly> invert_bit_matrix(std::vector<BinaryPoly> rows, int n) {
    std::vector<BinaryPoly> inv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i)].set_coeff(i, true);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (rows[static_cast<std::size_t>(r)].coeff(col)) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("singular basis-change matrix");
        std::swap(rows[static_cast<std::size_t>(pivot)], rows[static_cast<std::size_t>(col)]);
        std::swap(inv[static_cast<std::size_t>(pivot)], inv[static_cast<std::size_t>(col)]);
        for (int r = 0; r < n; ++r)
            if (r != col && rows[static_cast<std::size_t>(r)].coeff(col)) {
                rows[static_cast<std::size_t>(r)] += rows[static_cast<std::size_t>(col)];
                inv[static_cast<std::size_t>(r)] += inv[static_cast<std::size_t>(col)];
            }
    }
    return inv;
}

}  // namespace detail

// --- host-level base formulas ------------------------------------------------

// Rank-1 multiplication of K by itself (extension degree one).
inline HostAlgorithm identity_over(int m) {
    HostAlgorithm alg;
    alg.host = FieldSpec::canonical(m);
    alg.modulus = {BinaryPoly::zero(), BinaryPoly::one()};  // y
    alg.ext_degree = 1;
    alg.rank = 1;
    alg.a = {{BinaryPoly::one()}};
    alg.b = alg.a;
    alg.c = {{BinaryPoly::one()}};
    return alg;
}

namespace detail {

// Smallest monic irreducible of the given degree over K, ordered by the
// coefficient tuple read from the constant term upward (entries by integer
// encoding). Degree 2 or 3, so irreducibility is just root-freeness.
inline std::vector<BinaryPoly> small_irreducible_over(const FieldSpec& K, int degree) {
    if (degree < 2 || degree > 3) throw std::invalid_argument("host modulus search supports degree 2 or 3");
    const int m = K.extension_degree;
    if (m > 16) throw std::invalid_argument("host modulus search supports m <= 16");
    const std::uint64_t q = std::uint64_t{1} << m;
    std::vector<std::uint64_t> enc(static_cast<std::size_t>(degree), 0);
    while (true) {
        std::vector<BinaryPoly> g;
        for (int i = 0; i < degree; ++i) g.push_back(BinaryPoly::from_bits(enc[static_cast<std::size_t>(i)]));
        g.push_back(BinaryPoly::one());
        bool has_root = false;
        for (std::uint64_t e = 0; e < q && !has_root; ++e) {
            BinaryPoly v = BinaryPoly::from_bits(e);
            BinaryPoly acc;
            for (int d = degree; d >= 0; --d) acc = field_mul(K, acc, v) + g[static_cast<std::size_t>(d)];
            has_root = acc.is_zero();
        }
        if (!has_root) return g;
        int i = degree - 1;
        while (i >= 0 && ++enc[static_cast<std::size_t>(i)] == q) {
            enc[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) throw std::logic_error("no irreducible host modulus found");
    }
}

}  // namespace detail

// Karatsuba over an arbitrary host K = GF(2^m): three host multiplications
// x0y0, x1y1, (x0+x1)(y0+y1) for the quadratic extension K[y]/(y^2+ay+b).
inline HostAlgorithm karatsuba2_over(int m) {
    HostAlgorithm alg;
    alg.host = FieldSpec::canonical(m);
    alg.modulus = detail::small_irreducible_over(alg.host, 2);
    alg.ext_degree = 2;
    alg.rank = 3;
    const BinaryPoly one = BinaryPoly::one(), zero = BinaryPoly::zero();
    const BinaryPoly b = alg.modulus[0], a = alg.modulus[1];
    alg.a = {{one, zero}, {zero, one}, {one, one}};
    alg.b = alg.a;
    // product = m0 + (m2+m0+m1) y + m1 y^2, with y^2 = a y + b.
    alg.c = {{one, one}, {b, a + one}, {zero, one}};
    return alg;
}

// Six-multiplication three-term formula over K: x_i y_i plus the three
// cross sums (x_i+x_j)(y_i+y_j), reduced by a cubic host modulus.
inline HostAlgorithm karatsuba3_over(int m) {
    HostAlgorithm alg;
    alg.host = FieldSpec::canonical(m);
    alg.modulus = detail::small_irreducible_over(alg.host, 3);
    alg.ext_degree = 3;
    alg.rank = 6;
    const BinaryPoly one = BinaryPoly::one(), zero = BinaryPoly::zero();
    alg.a = {{one, zero, zero}, {zero, one, zero}, {zero, zero, one},
             {one, one, zero},  {one, zero, one},  {zero, one, one}};
    alg.b = alg.a;
    // Raw product coefficients in terms of the six products m0,m1,m2 and
    // m01,m02,m12 (cross sums):
    //   p0 = m0
    //   p1 = m01 + m0 + m1
    //   p2 = m02 + m0 + m1 + m2
    //   p3 = m12 + m1 + m2
    //   p4 = m2
    const auto& g = alg.modulus;
    // Representation of y^k in the basis {1, y, y^2}.
    std::vector<std::vector<BinaryPoly>> red(5, std::vector<BinaryPoly>(3, zero));
    red[0][0] = one;
    red[1][1] = one;
    red[2][2] = one;
    red[3] = {g[0], g[1], g[2]};  // y^3 = g2 y^2 + g1 y + g0
    {
        std::vector<BinaryPoly> y4(4, zero);
        for (int i = 0; i < 3; ++i) y4[static_cast<std::size_t>(i + 1)] += red[3][static_cast<std::size_t>(i)];
        BinaryPoly top = y4[3];
        y4.resize(3);
        for (int i = 0; i < 3; ++i)
            y4[static_cast<std::size_t>(i)] += field_mul(alg.host, top, red[3][static_cast<std::size_t>(i)]);
        red[4] = y4;
    }
    std::vector<std::vector<int>> p_terms = {{0}, {3, 0, 1}, {4, 0, 1, 2}, {5, 1, 2}, {2}};
    alg.c.assign(6, std::vector<BinaryPoly>(3, zero));
    for (int k = 0; k < 5; ++k)
        for (int t : p_terms[static_cast<std::size_t>(k)])
            for (int j = 0; j < 3; ++j)
                alg.c[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] +=
                    red[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    return alg;
}

// Reinterprets a GF(2)-level algorithm for GF(2^t) as a host algorithm over
// K = GF(2^m); valid when the canonical degree-t modulus stays irreducible
// over K, i.e. gcd(m, t) = 1.
inline HostAlgorithm scalar_extend(const BilinearAlgorithm& alg, int m) {
    if (std::gcd(m, alg.n) != 1) throw std::invalid_argument("scalar extension requires coprime degrees");
    HostAlgorithm out;
    out.host = FieldSpec::canonical(m);
    out.ext_degree = alg.n;
    out.rank = alg.rank;
    out.modulus.resize(static_cast<std::size_t>(alg.n) + 1);
    for (int d = 0; d <= alg.n; ++d)
        out.modulus[static_cast<std::size_t>(d)] = alg.field.modulus.coeff(d) ? BinaryPoly::one() : BinaryPoly::zero();
    auto lift = [&](const std::vector<BinaryPoly>& forms) {
        std::vector<std::vector<BinaryPoly>> rows;
        for (const auto& f : forms) {
            std::vector<BinaryPoly> row(static_cast<std::size_t>(alg.n));
            for (int j = 0; j < alg.n; ++j)
                row[static_cast<std::size_t>(j)] = f.coeff(j) ? BinaryPoly::one() : BinaryPoly::zero();
            rows.push_back(std::move(row));
        }
        return rows;
    };
    out.a = lift(alg.a_forms);
    out.b = lift(alg.b_forms);
    out.c = lift(alg.c_vecs);
    return out;
}

// --- composition -------------------------------------------------------------

inline BilinearAlgorithm compose(const HostAlgorithm& outer, const BilinearAlgorithm& inner) {
    if (inner.field != outer.host) throw std::invalid_argument("inner algorithm must multiply in the outer host field");
    const int m = inner.n;
    const int n_out = outer.ext_degree;
    const int total = m * n_out;
    TowerField T(outer.host, outer.modulus);

    BilinearAlgorithm result;
    result.n = total;
    result.rank = outer.rank * inner.rank;
    result.field = FieldSpec::canonical(total);

    // Forms in the tower basis: input bit (j*m + i) is coefficient i of
    // component j.
    auto kenc = [](const BinaryPoly& p) { return static_cast<TowerField::K>(p.bits64()); };
    auto tower_form = [&](const std::vector<BinaryPoly>& outer_row, const BinaryPoly& inner_form) {
        BinaryPoly mask;
        for (int j = 0; j < n_out; ++j) {
            TowerField::K coeff = kenc(outer_row[static_cast<std::size_t>(j)]);
            if (coeff == 0) continue;
            for (int i = 0; i < m; ++i) {
                BinaryPoly scaled = BinaryPoly::from_bits(T.kmul(coeff, TowerField::K{1} << i));
                if (dot_parity(inner_form, scaled)) mask.set_coeff(j * m + i, true);
            }
        }
        return mask;
    };
    std::vector<BinaryPoly> ta, tb, tc;
    for (int l = 0; l < outer.rank; ++l) {
        for (int r = 0; r < inner.rank; ++r) {
            ta.push_back(tower_form(outer.a[static_cast<std::size_t>(l)], inner.a_forms[static_cast<std::size_t>(r)]));
            tb.push_back(tower_form(outer.b[static_cast<std::size_t>(l)], inner.b_forms[static_cast<std::size_t>(r)]));
            BinaryPoly cbits;
            TowerField::K inner_c = kenc(inner.c_vecs[static_cast<std::size_t>(r)]);
            for (int j = 0; j < n_out; ++j) {
                TowerField::K comp = T.kmul(kenc(outer.c[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)]), inner_c);
                for (int i = 0; i < m; ++i)
                    if ((comp >> i) & 1u) cbits.set_coeff(j * m + i, true);
            }
            tc.push_back(cbits);
        }
    }

    // Basis change: map the canonical generator to the smallest root of the
    // canonical modulus inside the tower.
    auto rho = detail::smallest_root(T, result.field.modulus);
    std::vector<BinaryPoly> cols(static_cast<std::size_t>(total));
    auto pw = T.one();
    for (int i = 0; i < total; ++i) {
        cols[static_cast<std::size_t>(i)] = T.to_bits(pw);
        pw = T.mul(pw, rho);
    }
    std::vector<BinaryPoly> rows(static_cast<std::size_t>(total));
    for (int r = 0; r < total; ++r)
        for (int cidx = 0; cidx < total; ++cidx)
            if (cols[static_cast<std::size_t>(cidx)].coeff(r)) rows[static_cast<std::size_t>(r)].set_coeff(cidx, true);
    auto inv_rows = detail::invert_bit_matrix(rows, total);

    for (int s = 0; s < result.rank; ++s) {
        BinaryPoly af, bf, cv;
        for (int j = 0; j < total; ++j) {
            if (dot_parity(ta[static_cast<std::size_t>(s)], cols[static_cast<std::size_t>(j)])) af.set_coeff(j, true);
            if (dot_parity(tb[static_cast<std::size_t>(s)], cols[static_cast<std::size_t>(j)])) bf.set_coeff(j, true);
            if (dot_parity(inv_rows[static_cast<std::size_t>(j)], tc[static_cast<std::size_t>(s)])) cv.set_coeff(j, true);
        }
        result.a_forms.push_back(af);
        result.b_forms.push_back(bf);
        result.c_vecs.push_back(cv);
    }

    // Composition and basis change are exact; a seeded spot check guards the
    // bookkeeping.
    std::mt19937_64 rng(kVerifySeed ^ 0x9e3779b97f4a7c15ULL);
    for (int trial = 0; trial < 128; ++trial) {
        BinaryPoly xv, yv;
        for (int j = 0; j < total; ++j) {
            if (rng() & 1) xv.set_coeff(j, true);
            if (rng() & 1) yv.set_coeff(j, true);
        }
        FieldElement x{result.field, xv}, y{result.field, yv};
        if (!(evaluate(result, x, y) == field_mul(x, y))) throw std::logic_error("composed algorithm failed self-check");
    }
    return result;
}

// Rank-9 algorithm for GF(16): Karatsuba over GF(4) on top of Karatsuba
// over GF(2).
inline BilinearAlgorithm nested4() { return compose(karatsuba2_over(2), karatsuba2()); }

}  // namespace bilmul
