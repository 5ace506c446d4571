#pragma once

// Effective constants for the Weil-type zero-count estimate of a degree-d
// absolutely irreducible hypersurface, 2 <= d <= 4:
//
//   A(d) = sqrt(2) d^{5/2}   (held exactly as A^2 = 2 d^5)
//   B(d) = 4 d^2 k^{2^k},    k = d(d+1)/2
//   C(d) = B(d) + d(d-1)/2
//   q0   = ((A + sqrt(A^2 + 4C)) / 2)^2
//   q_min = smallest integer strictly above q0
//
// q_min is found with exact big-integer arithmetic only: writing
// q0 = (A^2 + S)/4 + sqrt(A^2 S)/2 with S = A^2 + 4C, the condition m > q0 is
// (4m - P)^2 > 4T with P = A^2 + S and T = A^2 S, avoiding any floating point.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace grm {

struct WeilBounds {
    std::uint32_t d = 0;
    mpz_class a_squared;  // A^2 = 2 d^5
    mpz_class b;
    mpz_class c;
    mpz_class q_min;
};

inline WeilBounds weil_bounds(std::uint32_t d) {
    if (d < 2 || d > 4)
        throw std::invalid_argument("weil bounds support 2 <= d <= 4, got " + std::to_string(d));
    WeilBounds out;
    out.d = d;
    mpz_class dd(d);
    mpz_class a2 = 2 * dd * dd * dd * dd * dd;
    std::uint32_t k = d * (d + 1) / 2;
    mpz_class kk(k);
    mpz_class kpow;
    mpz_pow_ui(kpow.get_mpz_t(), kk.get_mpz_t(), 1ull << k);
    out.a_squared = a2;
    out.b = 4 * dd * dd * kpow;
    out.c = out.b + d * (d - 1) / 2;

    mpz_class s = a2 + 4 * out.c;
    mpz_class p = a2 + s;
    mpz_class t = a2 * s;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), t.get_mpz_t());  // floor sqrt
    mpz_class m = (p + 2 * root) / 4 - 2;
    if (m < 1) m = 1;
    while (!(4 * m - p > 0 && (4 * m - p) * (4 * m - p) > 4 * t)) ++m;
    out.q_min = m;
    return out;
}

}  // namespace grm
