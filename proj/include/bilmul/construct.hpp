// Evaluation/interpolation synthesis of multiplication algorithms for
// GF(2^n), n <= 17, over the rational function field:
//
//   * inputs are polynomials of degree <= n-1,
//   * they are evaluated at places of degree 1, 2 and 4 (monic irreducibles
//     plus the place at infinity), optionally keeping two terms of the local
//     expansion (multiplicity u = 2),
//   * residues are multiplied in the residue fields with the rank-1/3/9 base
//     formulas (two-term expansions via the three-multiplication truncated
//     product),
//   * the product of degree <= 2n-2 is recovered by CRT, the top
//     coefficients pinned by the infinity evaluations, and reduced by the
//     canonical modulus.
//
// Everything outside the bit products is GF(2)-linear and gets folded into
// the forms of the resulting BilinearAlgorithm, whose rank is exactly the
// plan cost N1 + 2*l1 + 3*N2 + 6*l2 + 9*(N4 + 2*l4).

#pragma once

#include "compose.hpp"

namespace bilmul {

struct Place {
    enum class Kind { finite, infinity };
    Kind kind = Kind::finite;
    BinaryPoly modulus;  // finite places only
    int degree = 1;

    static Place finite(BinaryPoly p) {
        Place pl;
        pl.kind = Kind::finite;
        pl.degree = p.degree();
        if (pl.degree != 1 && pl.degree != 2 && pl.degree != 4)
            throw std::invalid_argument("places have degree 1, 2 or 4");
        if (!is_irreducible(p)) throw std::invalid_argument("finite places are monic irreducibles");
        pl.modulus = std::move(p);
        return pl;
    }
    static Place infinity() {
        Place pl;
        pl.kind = Kind::infinity;
        pl.degree = 1;
        return pl;
    }
    bool is_infinity() const { return kind == Kind::infinity; }
};

struct Assignment {
    Place place;
    int u = 1;  // 1 or 2
};

struct PlanCounts {
    int N1 = 0, l1 = 0, N2 = 0, l2 = 0, N4 = 0, l4 = 0;
};

struct EvaluationPlan {
    int n = 0;
    std::vector<Assignment> assignments;
    PlanCounts counts;
    int rank = 0;

    int capacity() const {
        int c = 0;
        for (const auto& as : assignments) c += as.u * as.place.degree;
        return c;
    }
};

// The full genus-zero inventory available to plans: three rational places
// (x, x+1, infinity), the quadratic place, and the three quartic places.
// Total capacity with double evaluations is 34, enough for 2n-1 up to n=17.
inline const std::vector<Place>& place_inventory() {
    static const std::vector<Place> inv = [] {
        std::vector<Place> v;
        v.push_back(Place::finite(BinaryPoly::from_bits(0b10)));  // x
        v.push_back(Place::finite(BinaryPoly::from_bits(0b11)));  // x+1
        v.push_back(Place::infinity());
        v.push_back(Place::finite(BinaryPoly::from_bits(0b111)));  // x^2+x+1
        for (const auto& q : irreducibles_of_degree(4)) v.push_back(Place::finite(q));
        return v;
    }();
    return inv;
}

inline int place_cost(int degree, int u) {
    int unit = RankBudget::mu(degree);
    return u == 1 ? unit : RankBudget::mhat2 * unit;
}

// Exhaustive search over all multiplicity assignments (u in {0,1,2} per
// place, 3^7 configurations). Minimizes the rank cost subject to the
// injectivity capacity sum(u*deg) >= 2n-1; ties go to the assignment vector
// that is lexicographically smallest read from the highest-degree places
// down, which prefers plans concentrated on low-degree places with low
// multiplicities.
inline EvaluationPlan plan_places(int n) {
    if (n < 1 || n > 17)
        throw std::invalid_argument("plan_places supports 1 <= n <= 17; go through compose() beyond that");
    const auto& inv = place_inventory();
    const int P = static_cast<int>(inv.size());
    const int need = 2 * n - 1;

    std::vector<int> best;
    int best_cost = -1;
    std::vector<int> u(static_cast<std::size_t>(P), 0);
    auto better_tie = [&](const std::vector<int>& cand) {
        for (int i = P - 1; i >= 0; --i) {
            if (cand[static_cast<std::size_t>(i)] != best[static_cast<std::size_t>(i)])
                return cand[static_cast<std::size_t>(i)] < best[static_cast<std::size_t>(i)];
        }
        return false;
    };
    while (true) {
        int cap = 0, cost = 0;
        for (int i = 0; i < P; ++i) {
            cap += u[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(i)].degree;
            if (u[static_cast<std::size_t>(i)] > 0)
                cost += place_cost(inv[static_cast<std::size_t>(i)].degree, u[static_cast<std::size_t>(i)]);
        }
        if (cap >= need && (best_cost < 0 || cost < best_cost || (cost == best_cost && better_tie(u)))) {
            best = u;
            best_cost = cost;
        }
        int i = 0;
        while (i < P && ++u[static_cast<std::size_t>(i)] == 3) {
            u[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == P) break;
    }

    EvaluationPlan plan;
    plan.n = n;
    plan.rank = best_cost;
    for (int i = 0; i < P; ++i) {
        int ui = best[static_cast<std::size_t>(i)];
        if (ui == 0) continue;
        plan.assignments.push_back({inv[static_cast<std::size_t>(i)], ui});
        int d = inv[static_cast<std::size_t>(i)].degree;
        if (d == 1) {
            ++plan.counts.N1;
            if (ui == 2) ++plan.counts.l1;
        } else if (d == 2) {
            ++plan.counts.N2;
            if (ui == 2) ++plan.counts.l2;
        } else {
            ++plan.counts.N4;
            if (ui == 2) ++plan.counts.l4;
        }
    }
    return plan;
}

namespace detail {

// q-th power with q = 2^d: d squarings.
inline BinaryPoly poly_pow_2d(BinaryPoly f, int d) {
    for (int i = 0; i < d; ++i) f = poly_mul(f, f);
    return f;
}

// Correction term linking the canonical degree-<d representative of a
// residue class to the coefficient embedding of the residue field in the
// completion at p: sigma(c) = lift(c) + p * tau(c) (mod p^2), where
// tau(c) = (lift(c)^(2^d) - lift(c)) / p  reduced mod p. With this embedding
// the two-term local expansion multiplies coefficientwise mod t^2, which the
// plain base-p digits do not.
inline BinaryPoly teichmuller_correction(const BinaryPoly& lift, const BinaryPoly& p) {
    BinaryPoly num = poly_pow_2d(lift, p.degree()) + lift;
    DivMod qr = poly_divmod(num, p);
    if (!qr.remainder.is_zero()) throw std::logic_error("representative is not a residue of its own class");
    return poly_mod(qr.quotient, p);
}

}  // namespace detail

// Local expansion of f at a place, u terms (u in {1,2}). Residues are
// elements of GF(2^deg) as polynomials of degree < deg. For the infinity
// place the residues are the coefficients at deg_bound and deg_bound-1,
// where deg_bound is the degree cap of the polynomial being expanded (the
// reconstruction bound 2n-2 for products, n-1 for inputs).
inline std::vector<BinaryPoly> ev_place(const BinaryPoly& f, const Place& place, int u, int deg_bound) {
    if (u != 1 && u != 2) throw std::invalid_argument("multiplicity must be 1 or 2");
    std::vector<BinaryPoly> out;
    if (place.is_infinity()) {
        BinaryPoly c0, c1;
        if (f.coeff(deg_bound)) c0 = BinaryPoly::one();
        if (deg_bound >= 1 && f.coeff(deg_bound - 1)) c1 = BinaryPoly::one();
        out.push_back(c0);
        if (u == 2) out.push_back(c1);
        return out;
    }
    const BinaryPoly& p = place.modulus;
    DivMod qr = poly_divmod(f, p);
    out.push_back(qr.remainder);
    if (u == 2) {
        BinaryPoly digit1 = poly_mod(qr.quotient, p);
        out.push_back(digit1 + detail::teichmuller_correction(qr.remainder, p));
    }
    return out;
}

// Residues for every assignment of a plan, in plan order.
using ResidueVector = std::vector<std::vector<BinaryPoly>>;

inline ResidueVector ev_plan(const EvaluationPlan& plan, const BinaryPoly& f, int deg_bound) {
    ResidueVector rv;
    rv.reserve(plan.assignments.size());
    for (const auto& as : plan.assignments) rv.push_back(ev_place(f, as.place, as.u, deg_bound));
    return rv;
}

namespace detail {

// The reconstruction map as a linear function on the full residue space. It
// agrees with the inverse of the evaluation map on its image; off the image
// (possible only when the plan capacity exceeds 2n-1 strictly) it still acts
// linearly, which is what the slot-by-slot tensor assembly needs.
BinaryPoly reconstruct_linear(const EvaluationPlan& plan, const ResidueVector& residues);

}  // namespace detail

// Inverse of the evaluation map on polynomials of degree <= 2n-2: the
// infinity residues pin the top coefficients, the finite residues determine
// the rest by CRT over the moduli p^u. Residues outside the image of the
// evaluation map are rejected; they cannot come from a genuine product.
// The CRT part matches the finite residues unconditionally, so the degree
// bound and the infinity residues are the whole image condition.
inline BinaryPoly reconstruct(const EvaluationPlan& plan, const ResidueVector& residues) {
    BinaryPoly result = detail::reconstruct_linear(plan, residues);
    const int D = 2 * plan.n - 2;
    if (result.degree() > D) throw std::logic_error("inconsistent residues: reconstruction exceeds the degree bound");
    for (std::size_t i = 0; i < plan.assignments.size(); ++i) {
        const auto& as = plan.assignments[i];
        if (!as.place.is_infinity()) continue;
        if (ev_place(result, as.place, as.u, D) != residues[i])
            throw std::logic_error("inconsistent residues: top coefficients do not match");
    }
    return result;
}

namespace detail {

inline BinaryPoly reconstruct_linear(const EvaluationPlan& plan, const ResidueVector& residues) {
    if (residues.size() != plan.assignments.size()) throw std::invalid_argument("residue arity mismatch");
    const int D = 2 * plan.n - 2;

    BinaryPoly c_top;
    for (std::size_t i = 0; i < plan.assignments.size(); ++i) {
        const auto& as = plan.assignments[i];
        if (!as.place.is_infinity()) continue;
        if (static_cast<int>(residues[i].size()) != as.u) throw std::invalid_argument("residue arity mismatch");
        if (!residues[i][0].is_zero()) c_top.set_coeff(D, true);
        if (as.u == 2 && !residues[i][1].is_zero() && D >= 1) c_top.set_coeff(D - 1, true);
    }

    // Local values of (f - c_top) modulo p^u.
    std::vector<BinaryPoly> moduli, locals;
    for (std::size_t i = 0; i < plan.assignments.size(); ++i) {
        const auto& as = plan.assignments[i];
        if (as.place.is_infinity()) continue;
        if (static_cast<int>(residues[i].size()) != as.u) throw std::invalid_argument("residue arity mismatch");
        const BinaryPoly& p = as.place.modulus;
        BinaryPoly mod = as.u == 1 ? p : poly_mul(p, p);
        BinaryPoly local = residues[i][0];
        if (as.u == 2) {
            BinaryPoly digit1 = residues[i][1] + detail::teichmuller_correction(residues[i][0], p);
            local += poly_mul(p, digit1);
        }
        local += poly_mod(c_top, mod);
        moduli.push_back(std::move(mod));
        locals.push_back(std::move(local));
    }

    BinaryPoly M = BinaryPoly::one();
    for (const auto& m : moduli) M = poly_mul(M, m);
    BinaryPoly c_low;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        BinaryPoly Mi = poly_divmod(M, moduli[i]).quotient;
        BinaryPoly inv = poly_inv_mod(Mi, moduli[i]);
        c_low += poly_mul(poly_mul(locals[i], inv), Mi);
    }
    if (!M.is_one()) c_low = poly_mod(c_low, M);
    return c_top + c_low;
}

// Rank-mu(d) multiplication formulas for the residue field GF(2)[t]/(p).
struct BaseFormula {
    int rank = 0;
    std::vector<BinaryPoly> a, b, c;
};

inline BaseFormula base_formula_for(const Place& place) {
    BaseFormula f;
    if (place.is_infinity() || place.degree == 1) {
        f.rank = 1;
        f.a = f.b = f.c = {BinaryPoly::one()};
        return f;
    }
    if (place.degree == 2) {
        // The unique quadratic place is the canonical GF(4) modulus.
        BilinearAlgorithm k = karatsuba2();
        f.rank = k.rank;
        f.a = k.a_forms;
        f.b = k.b_forms;
        f.c = k.c_vecs;
        return f;
    }
    if (place.degree != 4) throw std::invalid_argument("unsupported place degree");
    // Conjugate the rank-9 GF(16) algorithm from the canonical modulus to
    // GF(2)[t]/(p): send t to the smallest root of p.
    BilinearAlgorithm k = nested4();
    const FieldSpec& F = k.field;
    BinaryPoly rho;
    bool found = false;
    for (std::uint64_t e = 0; e < 16 && !found; ++e) {
        BinaryPoly cand = BinaryPoly::from_bits(e);
        BinaryPoly acc;
        for (int d = place.modulus.degree(); d >= 0; --d) {
            acc = field_mul(F, acc, cand);
            if (place.modulus.coeff(d)) acc += BinaryPoly::one();
        }
        if (acc.is_zero()) {
            rho = cand;
            found = true;
        }
    }
    if (!found) throw std::logic_error("degree-4 place has no root in GF(16)");
    std::vector<BinaryPoly> cols(4);
    BinaryPoly pw = BinaryPoly::one();
    for (int i = 0; i < 4; ++i) {
        cols[static_cast<std::size_t>(i)] = pw;
        pw = field_mul(F, pw, rho);
    }
    std::vector<BinaryPoly> rows(4);
    for (int r = 0; r < 4; ++r)
        for (int cidx = 0; cidx < 4; ++cidx)
            if (cols[static_cast<std::size_t>(cidx)].coeff(r)) rows[static_cast<std::size_t>(r)].set_coeff(cidx, true);
    auto inv_rows = invert_bit_matrix(rows, 4);
    f.rank = k.rank;
    for (int l = 0; l < k.rank; ++l) {
        BinaryPoly af, bf, cv;
        for (int j = 0; j < 4; ++j) {
            if (dot_parity(k.a_forms[static_cast<std::size_t>(l)], cols[static_cast<std::size_t>(j)])) af.set_coeff(j, true);
            if (dot_parity(k.b_forms[static_cast<std::size_t>(l)], cols[static_cast<std::size_t>(j)])) bf.set_coeff(j, true);
            if (dot_parity(inv_rows[static_cast<std::size_t>(j)], k.c_vecs[static_cast<std::size_t>(l)])) cv.set_coeff(j, true);
        }
        f.a.push_back(af);
        f.b.push_back(bf);
        f.c.push_back(cv);
    }
    return f;
}

}  // namespace detail

// Builds the tensor for any capacity-feasible plan; the plan does not have
// to be the cost optimum.
inline BilinearAlgorithm synthesize_from_plan(const EvaluationPlan& plan) {
    const int n = plan.n;
    if (plan.capacity() < 2 * n - 1) throw std::invalid_argument("plan violates the injectivity capacity");

    BilinearAlgorithm alg;
    alg.n = n;
    alg.field = FieldSpec::canonical(n);

    // Residues of the input basis polynomials x^j, expanded to the input
    // degree bound n-1.
    std::vector<ResidueVector> basis_res;
    basis_res.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) basis_res.push_back(ev_plan(plan, BinaryPoly::monomial(j), n - 1));

    const std::size_t A = plan.assignments.size();
    std::vector<detail::BaseFormula> base;
    base.reserve(A);
    for (const auto& as : plan.assignments) base.push_back(detail::base_formula_for(as.place));

    for (std::size_t i = 0; i < A; ++i) {
        const auto& as = plan.assignments[i];
        const auto& bf = base[i];
        const int groups = as.u == 1 ? 1 : 3;
        for (int g = 0; g < groups; ++g) {
            for (int r = 0; r < bf.rank; ++r) {
                // Group selector: m0 acts on the value, m1 on the derivative
                // coefficient, m2 on their sum.
                auto select = [&](const ResidueVector& rv) {
                    if (as.u == 1) return rv[i][0];
                    if (g == 0) return rv[i][0];
                    if (g == 1) return rv[i][1];
                    return rv[i][0] + rv[i][1];
                };
                BinaryPoly aform, bform;
                for (int j = 0; j < n; ++j) {
                    BinaryPoly sel = select(basis_res[static_cast<std::size_t>(j)]);
                    if (dot_parity(bf.a[static_cast<std::size_t>(r)], sel)) aform.set_coeff(j, true);
                    if (dot_parity(bf.b[static_cast<std::size_t>(r)], sel)) bform.set_coeff(j, true);
                }
                // Product-residue contribution of this bit product: the base
                // formula's c vector lands on the value coefficient for g=0
                // and on the derivative coefficient for every group
                // (c0 = m0, c1 = m0 + m1 + m2).
                ResidueVector unit(A);
                for (std::size_t k = 0; k < A; ++k)
                    unit[k].assign(static_cast<std::size_t>(plan.assignments[k].u), BinaryPoly::zero());
                const BinaryPoly& contrib = bf.c[static_cast<std::size_t>(r)];
                if (as.u == 1) {
                    unit[i][0] = contrib;
                } else {
                    if (g == 0) unit[i][0] = contrib;
                    unit[i][1] = contrib;
                }
                // Linearity of the reconstruction lets the tensor be built
                // one product at a time, even when the unit vector is not a
                // residue tuple of an actual product (redundant plans).
                BinaryPoly cvec = poly_mod(detail::reconstruct_linear(plan, unit), alg.field.modulus);
                alg.a_forms.push_back(aform);
                alg.b_forms.push_back(bform);
                alg.c_vecs.push_back(cvec);
            }
        }
    }
    alg.rank = static_cast<int>(alg.a_forms.size());
    const auto& c = plan.counts;
    if (alg.rank != plan.rank ||
        alg.rank != c.N1 + 2 * c.l1 + 3 * c.N2 + 6 * c.l2 + RankBudget::mu4 * (c.N4 + 2 * c.l4))
        throw std::logic_error("rank accounting mismatch");
    return alg;
}

inline BilinearAlgorithm synthesize(int n) { return synthesize_from_plan(plan_places(n)); }

// Hand-assembled plan over the standard inventory; counts and rank are
// derived. Mainly for exercising non-optimal configurations.
inline EvaluationPlan make_plan(int n, const std::vector<std::pair<Place, int>>& assignments) {
    EvaluationPlan plan;
    plan.n = n;
    for (const auto& [place, u] : assignments) {
        if (u != 1 && u != 2) throw std::invalid_argument("multiplicity must be 1 or 2");
        for (const auto& prev : plan.assignments) {
            bool same = prev.place.is_infinity() == place.is_infinity() &&
                        (place.is_infinity() || prev.place.modulus == place.modulus);
            if (same) throw std::invalid_argument("each place may appear only once");
        }
        plan.assignments.push_back({place, u});
        plan.rank += place_cost(place.degree, u);
        int d = place.degree;
        int* N = d == 1 ? &plan.counts.N1 : d == 2 ? &plan.counts.N2 : &plan.counts.N4;
        int* l = d == 1 ? &plan.counts.l1 : d == 2 ? &plan.counts.l2 : &plan.counts.l4;
        ++*N;
        if (u == 2) ++*l;
    }
    if (plan.capacity() < 2 * n - 1) throw std::invalid_argument("plan violates the injectivity capacity");
    return plan;
}

}  // namespace bilmul
