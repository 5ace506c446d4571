#pragma once

// Small finite fields GF(p^m), p^m <= 2^16, m <= 8.
//
// An element is its integer code in [0, q): the base-p digits of the code,
// little-endian, are the coefficients of 1, x, ..., x^{m-1}.  The modulus is
// the first monic irreducible polynomial of degree m in ascending code order,
// so every field of a given order has one canonical representation.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace grm {

using felem = std::uint16_t;

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline bool is_prime(std::uint32_t x) {
    if (x < 2) return false;
    for (std::uint32_t f = 2; f * f <= x; ++f)
        if (x % f == 0) return false;
    return true;
}

// q = p^m with p prime, or throws.
inline std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint32_t q) {
    require(q >= 2, "field order must be at least 2");
    std::uint32_t p = q;
    for (std::uint32_t f = 2; f * f <= q; ++f) {
        if (q % f == 0) { p = f; break; }
    }
    std::uint32_t m = 0, rest = q;
    while (rest % p == 0) { rest /= p; ++m; }
    require(rest == 1, "field order " + std::to_string(q) + " is not a prime power");
    return {p, m};
}

struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t m = 1;
    std::uint32_t q = 2;
    std::vector<std::uint16_t> modulus;  // m+1 digits, coeff of 1, x, ..., x^m; monic
};

class Field {
public:
    Field(std::uint32_t p, std::uint32_t m) {
        require(is_prime(p), std::to_string(p) + " is not prime");
        require(1 <= m && m <= 8, "extension degree must be in [1,8]");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) q *= p;
        require(q <= 65536, "field order exceeds 2^16");
        spec_.p = p;
        spec_.m = m;
        spec_.q = static_cast<std::uint32_t>(q);
        spec_.modulus = (m == 1) ? std::vector<std::uint16_t>{0, 1} : first_irreducible(p, m);
    }

    static Field from_order(std::uint32_t q) {
        auto [p, m] = factor_prime_power(q);
        return Field(p, m);
    }

    std::uint32_t p() const { return spec_.p; }
    std::uint32_t m() const { return spec_.m; }
    std::uint32_t q() const { return spec_.q; }
    const FieldSpec& spec() const { return spec_; }

    bool operator==(const Field& o) const {
        return spec_.p == o.spec_.p && spec_.m == o.spec_.m && spec_.modulus == o.spec_.modulus;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    felem add(felem a, felem b) const {
        check(a); check(b);
        if (spec_.m == 1) return static_cast<felem>((a + b) % spec_.p);
        if (spec_.p == 2) return static_cast<felem>(a ^ b);
        felem out = 0;
        for (std::uint32_t i = 0, scale = 1; i < spec_.m; ++i, scale *= spec_.p) {
            std::uint32_t da = a % spec_.p, db = b % spec_.p;
            a /= static_cast<felem>(spec_.p);
            b /= static_cast<felem>(spec_.p);
            out = static_cast<felem>(out + ((da + db) % spec_.p) * scale);
        }
        return out;
    }

    felem neg(felem a) const {
        check(a);
        if (spec_.p == 2) return a;
        felem out = 0;
        for (std::uint32_t i = 0, scale = 1; i < spec_.m; ++i, scale *= spec_.p) {
            std::uint32_t da = a % spec_.p;
            a /= static_cast<felem>(spec_.p);
            out = static_cast<felem>(out + ((spec_.p - da) % spec_.p) * scale);
        }
        return out;
    }

    felem sub(felem a, felem b) const { return add(a, neg(b)); }

    felem mul(felem a, felem b) const {
        check(a); check(b);
        if (spec_.m == 1) return static_cast<felem>((std::uint32_t(a) * b) % spec_.p);
        std::uint32_t da[8], db[8], prod[15] = {0};
        to_digits(a, da);
        to_digits(b, db);
        for (std::uint32_t i = 0; i < spec_.m; ++i) {
            if (!da[i]) continue;
            for (std::uint32_t j = 0; j < spec_.m; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % spec_.p;
        }
        // reduce modulo the monic modulus, high digits first
        for (std::uint32_t i = 2 * spec_.m - 2; i >= spec_.m && i < 15; --i) {
            std::uint32_t lead = prod[i];
            if (!lead) continue;
            prod[i] = 0;
            for (std::uint32_t j = 0; j < spec_.m; ++j) {
                std::uint32_t sub_ = (lead * spec_.modulus[j]) % spec_.p;
                prod[i - spec_.m + j] = (prod[i - spec_.m + j] + spec_.p - sub_) % spec_.p;
            }
        }
        return from_digits(prod);
    }

    felem pow(felem a, std::uint64_t e) const {
        check(a);
        if (e == 0) return 1;
        if (a == 0) return 0;
        e %= (spec_.q - 1);
        if (e == 0) return 1;
        felem base = a, out = 1;
        while (e) {
            if (e & 1) out = mul(out, base);
            base = mul(base, base);
            e >>= 1;
        }
        return out;
    }

    felem inv(felem a) const {
        require(a != 0, "zero has no inverse");
        return pow(a, spec_.q - 2);
    }

    // digits of the code: coefficients of 1, x, ..., x^{m-1}
    std::vector<std::uint16_t> digits(felem a) const {
        check(a);
        std::vector<std::uint16_t> out(spec_.m);
        for (std::uint32_t i = 0; i < spec_.m; ++i) {
            out[i] = static_cast<std::uint16_t>(a % spec_.p);
            a /= static_cast<felem>(spec_.p);
        }
        return out;
    }

private:
    FieldSpec spec_;

    void check(felem a) const {
        require(a < spec_.q, "element code " + std::to_string(a) + " out of range for GF(" +
                                 std::to_string(spec_.q) + ")");
    }

    void to_digits(felem a, std::uint32_t out[8]) const {
        for (std::uint32_t i = 0; i < spec_.m; ++i) {
            out[i] = a % spec_.p;
            a /= static_cast<felem>(spec_.p);
        }
    }

    felem from_digits(const std::uint32_t digs[8]) const {
        std::uint32_t out = 0;
        for (std::uint32_t i = spec_.m; i-- > 0;) out = out * spec_.p + digs[i];
        return static_cast<felem>(out);
    }

    static std::vector<std::uint16_t> first_irreducible(std::uint32_t p, std::uint32_t m) {
        // candidates are monic: lower m digits enumerate in ascending code order
        std::vector<std::uint16_t> cand(m + 1, 0);
        cand[m] = 1;
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < m; ++i) total *= p;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            for (std::uint32_t i = 0; i < m; ++i) {
                cand[i] = static_cast<std::uint16_t>(c % p);
                c /= p;
            }
            if (poly_irreducible(cand, p)) return cand;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    static bool poly_irreducible(const std::vector<std::uint16_t>& poly, std::uint32_t p) {
        std::uint32_t m = static_cast<std::uint32_t>(poly.size()) - 1;
        std::vector<std::uint16_t> div;
        for (std::uint32_t deg = 1; deg <= m / 2; ++deg) {
            std::uint64_t total = 1;
            for (std::uint32_t i = 0; i < deg; ++i) total *= p;
            div.assign(deg + 1, 0);
            div[deg] = 1;
            for (std::uint64_t code = 0; code < total; ++code) {
                std::uint64_t c = code;
                for (std::uint32_t i = 0; i < deg; ++i) {
                    div[i] = static_cast<std::uint16_t>(c % p);
                    c /= p;
                }
                if (poly_divides(div, poly, p)) return false;
            }
        }
        return true;
    }

    static bool poly_divides(const std::vector<std::uint16_t>& div,
                             const std::vector<std::uint16_t>& poly, std::uint32_t p) {
        std::vector<std::uint32_t> rem(poly.begin(), poly.end());
        std::uint32_t dd = static_cast<std::uint32_t>(div.size()) - 1;
        for (std::uint32_t i = static_cast<std::uint32_t>(rem.size()); i-- > dd;) {
            std::uint32_t lead = rem[i];
            if (!lead) continue;
            rem[i] = 0;
            for (std::uint32_t j = 0; j < dd; ++j)
                rem[i - dd + j] = (rem[i - dd + j] + lead * (p - div[j])) % p;
        }
        for (std::uint32_t j = 0; j < dd; ++j)
            if (rem[j]) return false;
        return true;
    }
};

inline Field make_field(std::uint32_t p, std::uint32_t m) { return Field(p, m); }

// Inclusion GF(p) -> GF(p^s): base elements are the constant polynomials, so the
// embedding is the identity on codes below p.  Base field must be prime.
class ExtensionMap {
public:
    ExtensionMap(const Field& base, const Field& ext) : base_(base), ext_(ext) {
        require(base.m() == 1, "extension map requires a prime base field");
        require(base.p() == ext.p(), "base and extension characteristics differ");
        require(ext.m() >= 1, "bad extension");
    }

    const Field& base() const { return base_; }
    const Field& ext() const { return ext_; }

    felem embed(felem x) const {
        require(x < base_.q(), "element not in base field");
        return x;
    }

    bool in_base(felem x) const { return x < base_.p(); }

    felem project(felem x) const {
        require(in_base(x), "element lies outside the base subfield");
        return x;
    }

    // Frobenius orbit over the prime field: x, x^p, ..., x^{p^{s-1}}
    std::vector<felem> galois_conjugates(felem x) const {
        std::vector<felem> out;
        out.reserve(ext_.m());
        felem cur = x;
        for (std::uint32_t i = 0; i < ext_.m(); ++i) {
            out.push_back(cur);
            cur = ext_.pow(cur, ext_.p());
        }
        return out;
    }

private:
    Field base_;
    Field ext_;
};

}  // namespace grm
