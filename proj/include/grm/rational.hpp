#pragma once

// Exact rational arithmetic on 64-bit components, for the bound formulas whose
// intermediate values are fractional (d/u thresholds, q^{n-s-2} with negative
// exponent).  Overflow throws; the verification grids stay far below the limits.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace grm {

class Rat {
public:
    Rat() = default;
    Rat(std::int64_t value) : num_(value) {}
    Rat(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    std::int64_t as_integer() const {
        if (!is_integer()) throw std::domain_error("rational " + str() + " is not an integer");
        return num_;
    }

    Rat operator+(const Rat& o) const {
        return Rat(checked(static_cast<__int128>(num_) * o.den_ +
                           static_cast<__int128>(o.num_) * den_),
                   checked(static_cast<__int128>(den_) * o.den_));
    }
    Rat operator-(const Rat& o) const { return *this + Rat(-o.num_, o.den_); }
    Rat operator*(const Rat& o) const {
        return Rat(checked(static_cast<__int128>(num_) * o.num_),
                   checked(static_cast<__int128>(den_) * o.den_));
    }
    Rat operator/(const Rat& o) const {
        if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
        return Rat(checked(static_cast<__int128>(num_) * o.den_),
                   checked(static_cast<__int128>(den_) * o.num_));
    }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator<=(const Rat& o) const { return !(o < *this); }
    bool operator>=(const Rat& o) const { return !(*this < o); }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

    // base^e with possibly negative e
    static Rat pow(std::int64_t base, std::int64_t e) {
        Rat out(1);
        Rat b = e >= 0 ? Rat(base) : Rat(1, base);
        for (std::int64_t i = 0, k = e >= 0 ? e : -e; i < k; ++i) out = out * b;
        return out;
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;

    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    static std::int64_t checked(__int128 v) {
        if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
            throw std::overflow_error("rational arithmetic overflow");
        return static_cast<std::int64_t>(v);
    }
};

}  // namespace grm
