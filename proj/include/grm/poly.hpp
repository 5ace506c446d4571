#pragma once

// Multivariate polynomials over a small finite field.
//
// ReducedPoly is the canonical coset representative modulo <X_i^q - X_i>:
// every exponent lies in [0, q-1], with the reduction rule e >= 1 -> the unique
// e' in [1, q-1] with e' = e mod (q-1), and e = 0 staying 0 (X^0 and X^{q-1}
// differ at X = 0).  Two functions on GF(q)^n are equal iff their reduced
// polynomials have identical term maps.
//
// HomogeneousPoly keeps raw exponents (no reduction): projective evaluation
// needs X^{q-1} and X intact as distinct polynomials.
//
// Terms are ordered graded-lexicographically: total degree first, then the
// exponent vector compared left to right.  Serialization inherits this order.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "grm/gf.hpp"

namespace grm {

using Monomial = std::vector<std::uint16_t>;

inline std::uint32_t mono_degree(const Monomial& e) {
    std::uint32_t s = 0;
    for (auto x : e) s += x;
    return s;
}

struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::uint32_t da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

using TermMap = std::map<Monomial, felem, GradedLexLess>;

namespace detail {

inline void addto(TermMap& m, const Field& f, const Monomial& e, felem c) {
    if (c == 0) return;
    auto it = m.find(e);
    if (it == m.end()) {
        m.emplace(e, c);
    } else {
        it->second = f.add(it->second, c);
        if (it->second == 0) m.erase(it);
    }
}

inline TermMap raw_mul(const TermMap& a, const TermMap& b, const Field& f) {
    TermMap out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Monomial e(ea.size());
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            addto(out, f, e, f.mul(ca, cb));
        }
    }
    return out;
}

inline std::uint16_t reduce_exponent(std::uint32_t e, std::uint32_t q) {
    if (e == 0) return 0;
    std::uint32_t r = e % (q - 1);
    return static_cast<std::uint16_t>(r == 0 ? q - 1 : r);
}

}  // namespace detail

class ReducedPoly {
public:
    ReducedPoly(const Field& field, std::uint32_t n) : field_(field), n_(n) {
        require(n >= 1, "polynomial needs at least one variable");
    }

    static ReducedPoly constant(const Field& field, std::uint32_t n, felem c) {
        ReducedPoly p(field, n);
        p.add_term(Monomial(n, 0), c);
        return p;
    }

    const Field& field() const { return field_; }
    std::uint32_t nvars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // total degree; the zero polynomial reports -1
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(mono_degree(e)));
        return d;
    }

    // adds c * X^e, folding exponents into reduced form
    void add_term(const Monomial& e, felem c) {
        require(e.size() == n_, "monomial arity mismatch");
        Monomial r(n_);
        for (std::uint32_t i = 0; i < n_; ++i)
            r[i] = detail::reduce_exponent(e[i], field_.q());
        detail::addto(terms_, field_, r, c);
    }

    felem evaluate(const std::vector<felem>& x) const {
        require(x.size() == n_, "point arity mismatch");
        felem acc = 0;
        for (const auto& [e, c] : terms_) {
            felem t = c;
            for (std::uint32_t i = 0; i < n_; ++i)
                if (e[i]) t = field_.mul(t, field_.pow(x[i], e[i]));
            acc = field_.add(acc, t);
        }
        return acc;
    }

    ReducedPoly operator+(const ReducedPoly& o) const {
        compat(o);
        ReducedPoly out = *this;
        for (const auto& [e, c] : o.terms_) detail::addto(out.terms_, field_, e, c);
        return out;
    }

    ReducedPoly operator*(const ReducedPoly& o) const {
        compat(o);
        TermMap raw = detail::raw_mul(terms_, o.terms_, field_);
        ReducedPoly out(field_, n_);
        for (const auto& [e, c] : raw) out.add_term(e, c);
        return out;
    }

    ReducedPoly scaled(felem c) const {
        ReducedPoly out(field_, n_);
        for (const auto& [e, co] : terms_) detail::addto(out.terms_, field_, e, field_.mul(co, c));
        return out;
    }

    bool operator==(const ReducedPoly& o) const {
        return field_ == o.field_ && n_ == o.n_ && terms_ == o.terms_;
    }
    bool operator!=(const ReducedPoly& o) const { return !(*this == o); }

private:
    Field field_;
    std::uint32_t n_;
    TermMap terms_;

    void compat(const ReducedPoly& o) const {
        require(field_ == o.field_ && n_ == o.n_, "polynomial field/arity mismatch");
    }
};

// re-reduction of an already reduced polynomial is the identity; exposed for
// folding arbitrary exponent data coming from deserialization
inline ReducedPoly reduce(const ReducedPoly& p) { return p; }

inline ReducedPoly reduce_terms(const Field& field, std::uint32_t n,
                                const std::vector<std::pair<Monomial, felem>>& terms) {
    ReducedPoly p(field, n);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

class HomogeneousPoly {
public:
    HomogeneousPoly(const Field& field, std::uint32_t nvars, std::uint32_t degree)
        : field_(field), nvars_(nvars), degree_(degree) {
        require(nvars >= 2, "homogeneous polynomial needs at least two variables");
    }

    const Field& field() const { return field_; }
    std::uint32_t nvars() const { return nvars_; }
    std::uint32_t degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& e, felem c) {
        require(e.size() == nvars_, "monomial arity mismatch");
        require(mono_degree(e) == degree_, "term degree " + std::to_string(mono_degree(e)) +
                                               " breaks homogeneity of degree " +
                                               std::to_string(degree_));
        detail::addto(terms_, field_, e, c);
    }

    felem evaluate(const std::vector<felem>& x) const {
        require(x.size() == nvars_, "point arity mismatch");
        felem acc = 0;
        for (const auto& [e, c] : terms_) {
            felem t = c;
            for (std::uint32_t i = 0; i < nvars_; ++i)
                if (e[i]) t = field_.mul(t, field_.pow(x[i], e[i]));
            acc = field_.add(acc, t);
        }
        return acc;
    }

    HomogeneousPoly operator+(const HomogeneousPoly& o) const {
        require(field_ == o.field_ && nvars_ == o.nvars_ && degree_ == o.degree_,
                "homogeneous polynomial mismatch");
        HomogeneousPoly out = *this;
        for (const auto& [e, c] : o.terms_) detail::addto(out.terms_, field_, e, c);
        return out;
    }

    HomogeneousPoly operator*(const HomogeneousPoly& o) const {
        require(field_ == o.field_ && nvars_ == o.nvars_, "homogeneous polynomial mismatch");
        HomogeneousPoly out(field_, nvars_, degree_ + o.degree_);
        out.terms_ = detail::raw_mul(terms_, o.terms_, field_);
        return out;
    }

    bool operator==(const HomogeneousPoly& o) const {
        return field_ == o.field_ && nvars_ == o.nvars_ && degree_ == o.degree_ &&
               terms_ == o.terms_;
    }

private:
    Field field_;
    std::uint32_t nvars_;
    std::uint32_t degree_;
    TermMap terms_;
};

// f(X_1..X_n) -> X_0^{d - deg(term)} * term, a degree-d form in n+1 variables
inline HomogeneousPoly homogenize(const ReducedPoly& f, std::uint32_t d) {
    require(f.total_degree() <= static_cast<int>(d),
            "degree exceeds homogenization target");
    HomogeneousPoly out(f.field(), f.nvars() + 1, d);
    for (const auto& [e, c] : f.terms()) {
        Monomial h(f.nvars() + 1);
        h[0] = static_cast<std::uint16_t>(d - mono_degree(e));
        std::copy(e.begin(), e.end(), h.begin() + 1);
        out.add_term(h, c);
    }
    return out;
}

// substitute X_chart = 1, renumber the remaining variables, reduce
inline ReducedPoly dehomogenize(const HomogeneousPoly& F, std::uint32_t chart) {
    require(chart < F.nvars(), "chart index out of range");
    ReducedPoly out(F.field(), F.nvars() - 1);
    for (const auto& [e, c] : F.terms()) {
        Monomial a;
        a.reserve(F.nvars() - 1);
        for (std::uint32_t i = 0; i < F.nvars(); ++i)
            if (i != chart) a.push_back(e[i]);
        out.add_term(a, c);
    }
    return out;
}

// c_1 X_1 + ... + c_n X_n + c_0
struct AffineForm {
    std::vector<felem> coeffs;
    felem constant = 0;

    bool is_zero_form() const {
        return std::all_of(coeffs.begin(), coeffs.end(), [](felem c) { return c == 0; });
    }

    felem evaluate(const Field& f, const std::vector<felem>& x) const {
        require(x.size() == coeffs.size(), "point arity mismatch");
        felem acc = constant;
        for (size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i]) acc = f.add(acc, f.mul(coeffs[i], x[i]));
        return acc;
    }

    ReducedPoly to_poly(const Field& f) const {
        ReducedPoly p(f, static_cast<std::uint32_t>(coeffs.size()));
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (!coeffs[i]) continue;
            Monomial e(coeffs.size(), 0);
            e[i] = 1;
            p.add_term(e, coeffs[i]);
        }
        p.add_term(Monomial(coeffs.size(), 0), constant);
        return p;
    }
};

// exponent vectors with every entry <= q-1 and total degree <= d, graded-lex order
inline std::vector<Monomial> reduced_monomial_basis(std::uint32_t q, std::uint32_t n,
                                                    std::uint32_t d) {
    std::vector<Monomial> out;
    Monomial cur(n, 0);
    auto rec = [&](auto&& self, std::uint32_t idx, std::uint32_t remaining) -> void {
        if (idx == n) {
            out.push_back(cur);
            return;
        }
        std::uint32_t cap = std::min(q - 1, remaining);
        for (std::uint32_t e = 0; e <= cap; ++e) {
            cur[idx] = static_cast<std::uint16_t>(e);
            self(self, idx + 1, remaining - e);
        }
        cur[idx] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

// exponent vectors of total degree exactly d in `nvars` variables, graded-lex order
inline std::vector<Monomial> homogeneous_monomial_basis(std::uint32_t nvars, std::uint32_t d) {
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    cur[nvars - 1] = static_cast<std::uint16_t>(d);
    while (true) {
        out.push_back(cur);
        // next composition of d: move one unit from the rightmost movable slot
        std::uint32_t i = nvars - 1;
        while (i > 0 && cur[i] == 0) --i;
        if (i == 0) break;
        std::uint16_t rest = cur[i];
        cur[i] = 0;
        cur[i - 1] = static_cast<std::uint16_t>(cur[i - 1] + 1);
        cur[nvars - 1] = static_cast<std::uint16_t>(rest - 1);
    }
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

}  // namespace grm
