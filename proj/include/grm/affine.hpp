#pragma once

// Parameters and weight bounds of affine generalized Reed-Muller codes
// RM_q(d, n): evaluations of reduced polynomials of total degree <= d on all
// of GF(q)^n, for 1 <= d < n(q-1).
//
//   length           q^n
//   dimension        sum_{t<=d} sum_j (-1)^j C(n,j) C(t-jq+n-1, t-jq)
//   minimum weight   (q-b) q^{n-a-1},  d = a(q-1)+b, 0 <= b < q-1
//   second weight    computed twice (case tree on (a,b) and c-table on the
//                    (s,t) split) and asserted equal
//
// Plus the generic weight lower bounds for words whose reduced form factors
// through an extension field (the conjugate-product bounds), and the strict
// gap check of those bounds against the second weight.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "grm/gf.hpp"
#include "grm/poly.hpp"
#include "grm/rational.hpp"

namespace grm {

using std::int64_t;

// x^e with overflow detection
inline int64_t checked_pow(int64_t x, std::uint32_t e) {
    __int128 out = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        out *= x;
        if (out > INT64_MAX) throw std::overflow_error("power overflows 64 bits");
    }
    return static_cast<int64_t>(out);
}

// C(x, y) with the convention: 0 when y < 0 and 0 when 0 <= x < y
inline int64_t binom(int64_t x, int64_t y) {
    if (y < 0) return 0;
    if (x >= 0 && x < y) return 0;
    if (x < 0) throw std::invalid_argument("binomial with negative upper index");
    if (y == 0 || y == x) return 1;
    if (y > x - y) y = x - y;
    __int128 out = 1;
    for (int64_t i = 1; i <= y; ++i) {
        out = out * (x - y + i) / i;
        if (out > INT64_MAX) throw std::overflow_error("binomial overflows 64 bits");
    }
    return static_cast<int64_t>(out);
}

struct SplitAB {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
};

struct SplitST {
    std::uint32_t s = 0;
    std::uint32_t t = 0;
};

// d = a(q-1) + b with 0 <= b < q-1
inline SplitAB split_ab(std::uint32_t d, std::uint32_t q) {
    require(q >= 2, "field order below 2");
    return {d / (q - 1), d % (q - 1)};
}

// d = s(q-1) + t with 0 < t <= q-1 (defined for d >= 1)
inline SplitST split_st(std::uint32_t d, std::uint32_t q) {
    require(q >= 2, "field order below 2");
    require(d >= 1, "degree below 1");
    std::uint32_t s = (d - 1) / (q - 1);
    return {s, d - s * (q - 1)};
}

inline void check_code_range(std::uint32_t q, std::uint32_t n, std::uint32_t d) {
    factor_prime_power(q);
    require(n >= 1, "need at least one variable");
    require(1 <= d && d < n * (q - 1),
            "degree " + std::to_string(d) + " outside [1, n(q-1)) for q=" + std::to_string(q) +
                ", n=" + std::to_string(n));
}

inline int64_t dimension_affine(std::uint32_t q, std::uint32_t n, std::uint32_t d) {
    int64_t total = 0;
    for (int64_t t = 0; t <= d; ++t) {
        for (int64_t j = 0; j <= n; ++j) {
            int64_t top = t - j * static_cast<int64_t>(q);
            if (top < 0) continue;
            int64_t term = binom(n, j) * binom(top + n - 1, top);
            total += (j % 2 == 0) ? term : -term;
        }
    }
    return total;
}

inline int64_t min_distance_affine(std::uint32_t q, std::uint32_t n, std::uint32_t d) {
    check_code_range(q, n, d);
    SplitAB ab = split_ab(d, q);
    return (q - ab.b) * checked_pow(q, n - ab.a - 1);
}

namespace detail {

// case tree on d = a(q-1) + b
inline int64_t second_weight_case_tree(std::uint32_t q, std::uint32_t n, std::uint32_t d) {
    SplitAB ab = split_ab(d, q);
    std::uint32_t a = ab.a, b = ab.b;
    if (n == 1) return q - d + 1;
    if (d == 1) return checked_pow(q, n);
    if (q == 2) {
        if (d == n - 1) return 4;
        return 3 * checked_pow(2, n - d - 1);
    }
    if (d < q - 1) return checked_pow(q, n) - d * checked_pow(q, n - 1) +
                          (d - 1) * checked_pow(q, n - 2);
    if (d > (n - 1) * (q - 1)) return q - b + 1;
    // q-1 <= d <= (n-1)(q-1): here a <= n-1, and b >= 1 forces a <= n-2,
    // so every exponent below is nonnegative
    if (b == 0) return 2 * checked_pow(q, n - a - 1) * (q - 1);
    if (b == 1) {
        if (q == 3) return 8 * checked_pow(3, n - a - 2);
        return checked_pow(q, n - a);
    }
    return checked_pow(q, n - a - 2) * (q - 1) * (q - b + 1);
}

// c-table on d = s(q-1) + t; the s = n-1 rows make c q^{n-s-2} fractional,
// hence the exact-rational accumulation
inline int64_t second_weight_c_table(std::uint32_t q, std::uint32_t n, std::uint32_t d) {
    SplitST st = split_st(d, q);
    std::uint32_t s = st.s, t = st.t;
    int64_t c;
    if (s == n - 1) c = q;
    else if (t > 1) c = t - 1;
    else if (s == 0) c = q;
    else if (q >= 4) c = q;
    else if (q == 2) c = (s == n - 2) ? 2 : 1;
    else c = q - 1;  // q == 3, t == 1, 0 < s <= n-2
    Rat w1 = Rat(q - t) * Rat::pow(q, static_cast<int64_t>(n) - s - 1);
    Rat val = w1 + Rat(c) * Rat::pow(q, static_cast<int64_t>(n) - s - 2);
    return val.as_integer();
}

}  // namespace detail

inline int64_t second_weight_affine(std::uint32_t q, std::uint32_t n, std::uint32_t d) {
    check_code_range(q, n, d);
    int64_t tree = detail::second_weight_case_tree(q, n, d);
    int64_t table = detail::second_weight_c_table(q, n, d);
    if (tree != table)
        throw std::logic_error("second weight routes disagree at q=" + std::to_string(q) +
                               ", n=" + std::to_string(n) + ", d=" + std::to_string(d) + ": " +
                               std::to_string(tree) + " vs " + std::to_string(table));
    return tree;
}

struct GrmParams {
    int64_t length = 0;
    int64_t dimension = 0;
    int64_t min_distance = 0;
    int64_t second_weight = 0;
};

inline GrmParams grm_params(std::uint32_t q, std::uint32_t n, std::uint32_t d) {
    check_code_range(q, n, d);
    GrmParams out;
    out.length = checked_pow(q, n);
    out.dimension = dimension_affine(q, n, d);
    out.min_distance = min_distance_affine(q, n, d);
    out.second_weight = second_weight_affine(q, n, d);
    return out;
}

inline std::vector<felem> point_from_index(int64_t idx, std::uint32_t q, std::uint32_t n) {
    std::vector<felem> pt(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        pt[i] = static_cast<felem>(idx % q);
        idx /= q;
    }
    return pt;
}

inline int64_t count_zeros_affine(const ReducedPoly& f) {
    int64_t total = checked_pow(f.field().q(), f.nvars());
    int64_t zeros = 0;
    for (int64_t i = 0; i < total; ++i)
        if (f.evaluate(point_from_index(i, f.field().q(), f.nvars())) == 0) ++zeros;
    return zeros;
}

inline int64_t weight_affine(const ReducedPoly& f) {
    return checked_pow(f.field().q(), f.nvars()) - count_zeros_affine(f);
}

// Zero-count upper bounds for a word whose polynomial is a product of the u or
// more Frobenius conjugates of a form over a degree-u (or larger) extension:
//   generic:  N < q^n - 2 q^{n - floor(d/(u(q-1))) - 1}
//   a = 0:    N < (d/u) q^{n-1}      (only when d < q-1)
struct MlemBound {
    int64_t generic = 0;
    std::optional<Rat> a0;
};

inline MlemBound mlem_bound(std::uint32_t q, std::uint32_t n, std::uint32_t d, std::uint32_t u) {
    factor_prime_power(q);
    require(n >= 1 && d >= 1, "bad parameters");
    require(u >= 2, "extension degree bound must be at least 2");
    MlemBound out;
    std::uint32_t a2 = d / (u * (q - 1));
    require(a2 + 1 <= n, "degree too large for the generic bound");
    out.generic = checked_pow(q, n) - 2 * checked_pow(q, n - a2 - 1);
    if (split_ab(d, q).a == 0)
        out.a0 = Rat(d, u) * Rat(checked_pow(q, n - 1));
    return out;
}

// Strict comparison of the conjugate-product weight lower bound against the
// second weight.  lower_bound is the bound on the weight of any such word:
//   generic:  W > 2 q^{n - floor(d/(u(q-1))) - 1}
//   a = 0:    W > q^n - (d/u) q^{n-1}
struct NaiGap {
    Rat lower_bound;
    int64_t second_weight = 0;
    bool exceeds = false;
};

inline NaiGap nai_gap_check(std::uint32_t q, std::uint32_t n, std::uint32_t d, std::uint32_t u) {
    check_code_range(q, n, d);
    require(u >= 2, "extension degree bound must be at least 2");
    NaiGap out;
    if (split_ab(d, q).a == 0) {
        out.lower_bound = Rat(checked_pow(q, n)) - Rat(d, u) * Rat(checked_pow(q, n - 1));
    } else {
        std::uint32_t a2 = d / (u * (q - 1));
        out.lower_bound = Rat(2 * checked_pow(q, n - a2 - 1));
    }
    out.second_weight = second_weight_affine(q, n, d);
    out.exceeds = out.lower_bound > Rat(out.second_weight);
    return out;
}

// weight -> number of codewords
struct WeightDistribution {
    std::map<int64_t, int64_t> counts;
};

// k-th smallest distinct positive weight
inline int64_t kth_weight(const WeightDistribution& dist, std::uint32_t k) {
    require(k >= 1, "weight rank starts at 1");
    std::uint32_t seen = 0;
    for (const auto& [w, c] : dist.counts) {
        if (w <= 0) continue;
        if (++seen == k) return w;
    }
    throw std::invalid_argument("distribution has fewer than " + std::to_string(k) +
                                " distinct positive weights");
}

}  // namespace grm
