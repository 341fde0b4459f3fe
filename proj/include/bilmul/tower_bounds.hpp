// Symbolic model of the recursive Artin-Schreier tower over GF(2) obtained
// by descending the optimal tower over GF(16): genus formulas and certified
// bounds per step, selection of the step that hosts a given extension
// degree, and the resulting linear bounds on the tensor rank of
// multiplication. All bound values are exact rationals.

#pragma once

#include <boost/rational.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace bilmul {

using Rational = boost::rational<long long>;

// Step (k, s) of the descended tower, s in {0, 1, 2}; (k, 2) is the same
// function field as (k+1, 0). The tower constants are p = 2, q = 4.
struct TowerStep {
    int k = 1;
    int s = 0;

    TowerStep normalized() const { return s == 2 ? TowerStep{k + 1, 0} : *this; }

    std::string label() const {
        TowerStep t = normalized();
        if (t.s == 0) return "H" + std::to_string(t.k);
        return "H" + std::to_string(t.k) + "," + std::to_string(t.s);
    }

    friend bool operator==(const TowerStep& a, const TowerStep& b) {
        TowerStep x = a.normalized(), y = b.normalized();
        return x.k == y.k && x.s == y.s;
    }
};

namespace detail {

inline long long ipow(long long base, int e) {
    long long r = 1;
    while (e-- > 0) {
        if (r > (1LL << 61) / base) throw std::overflow_error("tower formula overflow");
        r *= base;
    }
    return r;
}

inline long long rational_floor(const Rational& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

inline long long rational_ceil(const Rational& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
    return q;
}

}  // namespace detail

// Genus of the level-k field (s = 0) over GF(16) and equally over GF(2)
// after descent; closed form with q = 4, split on the parity of k.
inline long long genus_exact(int k) {
    if (k < 1) throw std::invalid_argument("tower level must be >= 1");
    const long long q = 4;
    using detail::ipow;
    if (k % 2 == 1) {
        // q^k + q^(k-1) - q^((k+1)/2) - 2 q^((k-1)/2) + 1
        return ipow(q, k) + ipow(q, k - 1) - ipow(q, (k + 1) / 2) - 2 * ipow(q, (k - 1) / 2) + 1;
    }
    // q^k + q^(k-1) - (1/2) q^(k/2+1) - (3/2) q^(k/2) - q^(k/2-1) + 1
    Rational g = Rational(ipow(q, k)) + ipow(q, k - 1) - Rational(ipow(q, k / 2 + 1), 2) -
                 Rational(3 * ipow(q, k / 2), 2) - ipow(q, k / 2 - 1) + 1;
    if (g.denominator() != 1) throw std::logic_error("even-level genus must be integral");
    return g.numerator();
}

// Certified upper bound on the genus of step (k, s): the minimum of
//   (iii)  q^(k-1) (q+1) p^s                         for k >= 1
//   (iv)   (q^k (q+1) - q^(k/2) (q-1)) / p^(2-s)     for k >= 2
// with q = 4, p = 2 (q^(k/2) = 2^k is integral for every k).
inline long long genus_upper(const TowerStep& step) {
    if (step.k < 1 || step.s < 0 || step.s > 2) throw std::invalid_argument("bad tower step");
    using detail::ipow;
    long long bound = 5 * ipow(4, step.k - 1) * ipow(2, step.s);
    if (step.k >= 2) {
        Rational iv(5 * ipow(4, step.k) - 3 * ipow(2, step.k), ipow(2, 2 - step.s));
        bound = std::min(bound, detail::rational_floor(iv));
    }
    return bound;
}

// D_{k,s} = p^(s+1) q^(k-1), the certified lower bound on the genus growth
// g_{k,s+1} - g_{k,s}.
inline long long delta_lower(const TowerStep& step) {
    if (step.s != 0 && step.s != 1) throw std::invalid_argument("genus-growth bound needs s in {0,1}");
    if (step.k < 1) throw std::invalid_argument("tower level must be >= 1");
    return detail::ipow(2, step.s + 1) * detail::ipow(4, step.k - 1);
}

// Certified lower bound on N1 + 2 N2 + 4 N4 of step (k, s):
// (q^2 - 1) q^(k-1) p^s.
inline long long place_sum_lower(const TowerStep& step) {
    if (step.k < 1 || step.s < 0 || step.s > 2) throw std::invalid_argument("bad tower step");
    return 15 * detail::ipow(4, step.k - 1) * detail::ipow(2, step.s);
}

// Certified lower bound on n0(k,s) = sup{ n : 2n <= N1 + 2N2 + 4N4
// - 2 g_{k,s} - 7 }, independent of s: ceil((5/2) q^(k-1) - 7/2).
inline long long n0_lower(const TowerStep& step) {
    if (step.k < 1) throw std::invalid_argument("tower level must be >= 1");
    return detail::rational_ceil(Rational(5 * detail::ipow(4, step.k - 1) - 7, 2));
}

// Exact genus data where available (s = 0 and s = 2 from the closed form,
// the two densified steps from the verified table), certified bounds
// otherwise.
struct GenusInfo {
    std::optional<long long> exact;
    long long lower = 0;
    long long upper = 0;
};

inline GenusInfo genus_info(const TowerStep& raw) {
    TowerStep step = raw.normalized();
    GenusInfo info;
    info.upper = genus_upper(step);
    if (step.s == 0) {
        info.exact = genus_exact(step.k);
        info.lower = *info.exact;
    } else {
        if (step.k == 1) info.exact = 2;
        if (step.k == 2) info.exact = 23;
        // Growth bound from the previous step.
        info.lower = genus_exact(step.k) + delta_lower({step.k, 0});
        if (info.exact) info.lower = std::max(info.lower, *info.exact);
    }
    return info;
}

// The step of the tower on which the evaluation argument runs for extension
// degree n. Up to n = 27 the verified table applies; beyond, the first step
// (densified order, k within the certified window) whose certified bounds
// prove N1 + 2N2 + 4N4 >= 2n + 2g + 7.
inline TowerStep select_step(long long n) {
    if (n < 2) throw std::invalid_argument("step selection requires n >= 2");
    if (n <= 5) return {1, 0};
    if (n <= 11) return {1, 1};
    if (n <= 23) return {2, 0};
    if (n <= 27) return {2, 1};
    // k >= (1/2) log2(4/5 (2n+6)), i.e. 4 (2n+6) <= 5 * 4^k.
    int k_min = 1;
    while (4 * (2 * n + 6) > 5 * detail::ipow(4, k_min)) ++k_min;
    const long long k_max = (n - 12) / 4;
    for (int k = k_min; k <= k_max; ++k) {
        for (int s = 0; s <= 1; ++s) {
            TowerStep step{k, s};
            if (place_sum_lower(step) >= 2 * n + 2 * genus_upper(step) + 7) return step;
        }
    }
    throw std::logic_error("no certified step found in the admissible window");
}

// mu_2(n) <= (9/2)(n + g + 5) + 9 l4 on any function field whose place
// counts cover degree n with l4 derivative evaluations of degree 4.
inline Rational bound_generic(long long n, long long g, long long l4) {
    if (n < 1 || g < 0 || l4 < 0) throw std::invalid_argument("bad bound arguments");
    return Rational(9, 2) * (n + g + 5) + 9 * l4;
}

// mu_2(n) <= (45/2) n + 85.5, simple evaluations only.
inline Rational bound_simple(long long n) {
    if (n < 2) throw std::invalid_argument("bound requires n >= 2");
    return Rational(45, 2) * n + Rational(171, 2);
}

// mu_2(n) <= (477/26) n + 45/2, with derivative evaluations.
inline Rational bound_derivative(long long n) {
    if (n < 2) throw std::invalid_argument("bound requires n >= 2");
    return Rational(477, 26) * n + Rational(45, 2);
}

// Piecewise cost envelope of one step in the derivative-evaluation argument:
// staying on (k, s) with extra derivative evaluations (slope 9) against
// moving to (k, s+1) (slope 9/2 with the genus growth added once).
inline Rational phi(const Rational& x, const TowerStep& step, long long n0, long long g_ks, long long dg,
                    long long D) {
    (void)step;
    if (x - n0 + 2 < Rational(D)) return 9 * (x - n0) + Rational(9, 2) * (n0 + g_ks + 5) + 9;
    return Rational(9, 2) * (x - n0) + Rational(9, 2) * (n0 + g_ks + 5 + dg);
}

// Previously published linear bounds, kept for comparison. The two per-n
// factors are prior results on the towers over GF(4) and GF(16):
// mu_4(n) <= (99/13) n and mu_16(n) <= (38/9) n; combining them with
// mu_2(2) = 3 and mu_2(4) = 9 gives the composed constants.
struct LegacyBounds {
    Rational arnaud_mu4_factor{99, 13};
    Rational arnaud_mu16_factor{38, 9};
    Rational M2_composed{297, 13};  // 3 * 99/13
    Rational M2_remark{38, 1};      // 9 * 38/9
    Rational C2{54, 1};
    Rational C3{27, 1};
};

inline LegacyBounds legacy_bounds() { return {}; }

// The generic constant C_q with mu_q(n) <= C_q n, by the published case
// analysis; q = p^r.
inline Rational legacy_Cq(long long q, long long p) {
    if (q < 2 || p < 2) throw std::invalid_argument("bad field parameters");
    long long r = 0, t = q;
    while (t % p == 0) {
        t /= p;
        ++r;
    }
    if (t != 1 || r == 0) throw std::invalid_argument("q must be a power of p");
    if (q == 2) return Rational(54);
    if (q == 3) return Rational(27);
    if (q == p && q >= 5) return 3 * (1 + Rational(4, q - 3));
    long long sqrt_q = r % 2 == 0 ? detail::ipow(p, static_cast<int>(r / 2)) : 0;
    if (r == 2 && q >= 25) return 2 * (1 + Rational(2, sqrt_q - 3));
    if (r % 2 == 0 && q >= 16) return 2 * (1 + Rational(p, sqrt_q - 3));
    if (q >= 16) return 3 * (1 + Rational(2 * p, q - 3));
    if (q > 3) return 6 * (1 + Rational(p, q - 3));
    throw std::invalid_argument("no constant defined for these parameters");
}

struct BoundReport {
    long long n = 0;
    TowerStep selected_step;
    Rational simple_bound;
    Rational derivative_bound;
    Rational legacy_composed;  // (297/13) n
    Rational legacy_remark;    // 38 n
    Rational m2_simple{45, 2};
    Rational m2_derivative{477, 26};
};

inline BoundReport bound_report(long long n) {
    BoundReport rep;
    rep.n = n;
    rep.selected_step = select_step(n);
    rep.simple_bound = bound_simple(n);
    rep.derivative_bound = bound_derivative(n);
    LegacyBounds legacy;
    rep.legacy_composed = legacy.M2_composed * n;
    rep.legacy_remark = legacy.M2_remark * n;
    return rep;
}

}  // namespace bilmul
