#pragma once

// Constructors and recognizers for the extremal codeword families of RM_q(d,n):
//
//  * minimum-weight words: w0 * prod_{i<=a} (1 - (l_i - w_i)^{q-1}) * prod_{j<=b} (l_{a+1} - w'_j)
//    for independent linear forms, d = a(q-1) + b
//  * hyperplane arrangements in blocks of parallel hyperplanes with independent
//    directions, block sizes (d_1, ..., d_k): zero count q^n - q^{n-k} prod (q - d_i)
//  * the two near-second-weight block patterns S = (b-2, 2) and T = (b-2, 1, 1)
//  * conjugate-product (norm-like) forms f = prod_{sigma} g^sigma for g over an
//    extension field, whose coefficients collapse into the base field
//  * recognizers: is Z_a(f) a union of exactly d distinct hyperplanes; does f
//    have the minimum-weight block structure

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "grm/affine.hpp"
#include "grm/gf.hpp"
#include "grm/poly.hpp"

namespace grm {

// one block of parallel hyperplanes: direction . x = shift, one per shift
struct HyperplaneBlock {
    AffineForm direction;        // constant must be zero
    std::vector<felem> shifts;   // pairwise distinct
};

struct Arrangement {
    Field field;
    std::uint32_t n = 0;
    std::vector<HyperplaneBlock> blocks;
};

namespace detail {

// rank of the direction vectors over GF(q)
inline std::uint32_t form_rank(const Field& f, std::vector<std::vector<felem>> rows) {
    std::uint32_t rank = 0;
    std::uint32_t ncols = rows.empty() ? 0 : static_cast<std::uint32_t>(rows[0].size());
    for (std::uint32_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::uint32_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        felem ic = f.inv(rows[rank][col]);
        for (auto& x : rows[rank]) x = f.mul(x, ic);
        for (std::uint32_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            felem fac = rows[r][col];
            for (std::uint32_t c2 = 0; c2 < ncols; ++c2)
                rows[r][c2] = f.sub(rows[r][c2], f.mul(fac, rows[rank][c2]));
        }
        ++rank;
    }
    return rank;
}

inline void validate_arrangement(const Arrangement& arr) {
    require(!arr.blocks.empty(), "arrangement needs at least one block");
    require(arr.blocks.size() <= arr.n, "more blocks than variables");
    std::vector<std::vector<felem>> dirs;
    for (const auto& blk : arr.blocks) {
        require(blk.direction.coeffs.size() == arr.n, "direction arity mismatch");
        require(blk.direction.constant == 0, "block direction must have zero constant");
        require(!blk.direction.is_zero_form(), "zero direction");
        require(!blk.shifts.empty(), "empty shift block");
        require(blk.shifts.size() <= arr.field.q() - 1,
                "block of " + std::to_string(blk.shifts.size()) + " shifts reaches q");
        std::set<felem> uniq(blk.shifts.begin(), blk.shifts.end());
        require(uniq.size() == blk.shifts.size(), "duplicate shift in block");
        dirs.push_back(blk.direction.coeffs);
    }
    require(form_rank(arr.field, dirs) == arr.blocks.size(),
            "block directions are linearly dependent");
}

}  // namespace detail

// prod over blocks, prod over shifts of (direction . X - shift)
inline ReducedPoly arrangement_poly(const Arrangement& arr) {
    detail::validate_arrangement(arr);
    ReducedPoly out = ReducedPoly::constant(arr.field, arr.n, 1);
    for (const auto& blk : arr.blocks) {
        for (felem w : blk.shifts) {
            AffineForm shifted = blk.direction;
            shifted.constant = arr.field.neg(w);
            out = out * shifted.to_poly(arr.field);
        }
    }
    return out;
}

// q^n - q^{n-k} prod (q - d_i)
inline int64_t arrangement_zeros(const Arrangement& arr) {
    detail::validate_arrangement(arr);
    std::uint32_t q = arr.field.q();
    int64_t prod = 1;
    for (const auto& blk : arr.blocks) prod *= q - static_cast<int64_t>(blk.shifts.size());
    std::uint32_t k = static_cast<std::uint32_t>(arr.blocks.size());
    return checked_pow(q, arr.n) - checked_pow(q, arr.n - k) * prod;
}

// minimum-weight word of RM_q(d, n).  With d = a(q-1) + b: `directions` carries
// a forms when b = 0 and a+1 forms when b > 0; a_shifts has one entry per
// (q-1)-block, b_shifts has the b distinct shifts of the final block.
inline ReducedPoly maximal_codeword(const Field& field, std::uint32_t n, std::uint32_t d,
                                    const std::vector<AffineForm>& directions, felem w0,
                                    const std::vector<felem>& a_shifts,
                                    const std::vector<felem>& b_shifts) {
    std::uint32_t q = field.q();
    check_code_range(q, n, d);
    require(w0 != 0, "leading scalar must be nonzero");
    SplitAB ab = split_ab(d, q);
    std::uint32_t nforms = ab.b > 0 ? ab.a + 1 : ab.a;
    require(directions.size() == nforms,
            "need " + std::to_string(nforms) + " independent forms, got " +
                std::to_string(directions.size()));
    require(a_shifts.size() == ab.a, "need one shift per full block");
    if (ab.b == 0)
        require(b_shifts.empty(), "no partial block exists at b = 0, shifts given");
    else {
        require(b_shifts.size() == ab.b, "partial block needs exactly b shifts");
        std::set<felem> uniq(b_shifts.begin(), b_shifts.end());
        require(uniq.size() == b_shifts.size(), "duplicate shifts in partial block");
    }
    std::vector<std::vector<felem>> dirs;
    for (const auto& l : directions) {
        require(l.coeffs.size() == n, "form arity mismatch");
        require(l.constant == 0, "directions must have zero constant");
        dirs.push_back(l.coeffs);
    }
    require(detail::form_rank(field, dirs) == nforms, "forms are linearly dependent");

    ReducedPoly out = ReducedPoly::constant(field, n, w0);
    for (std::uint32_t i = 0; i < ab.a; ++i) {
        // 1 - (l_i - w_i)^{q-1}
        AffineForm shifted = directions[i];
        shifted.constant = field.neg(a_shifts[i]);
        ReducedPoly lin = shifted.to_poly(field);
        ReducedPoly pw = ReducedPoly::constant(field, n, 1);
        for (std::uint32_t e = 0; e < q - 1; ++e) pw = pw * lin;
        ReducedPoly factor = ReducedPoly::constant(field, n, 1) + pw.scaled(field.neg(1));
        out = out * factor;
    }
    for (std::uint32_t j = 0; j < ab.b; ++j) {
        AffineForm shifted = directions[ab.a];
        shifted.constant = field.neg(b_shifts[j]);
        out = out * shifted.to_poly(field);
    }
    return out;
}

// S pattern: blocks (b-2, 2); defined for d = b < q-1, b >= 3
inline Arrangement config_S(const Field& field, std::uint32_t n, std::uint32_t d,
                            const AffineForm& dir1, const AffineForm& dir2) {
    std::uint32_t q = field.q();
    check_code_range(q, n, d);
    require(d < q - 1 && d >= 3, "S pattern needs 3 <= d < q-1");
    require(n >= 2, "S pattern needs two independent directions");
    Arrangement arr{field, n, {}};
    HyperplaneBlock blk1{dir1, {}};
    for (std::uint32_t i = 0; i < d - 2; ++i) blk1.shifts.push_back(static_cast<felem>(i));
    HyperplaneBlock blk2{dir2, {0, 1}};
    arr.blocks = {blk1, blk2};
    detail::validate_arrangement(arr);
    return arr;
}

// T pattern: blocks (b-2, 1, 1); defined for d = b < q-1, b >= 3, n >= 3
inline Arrangement config_T(const Field& field, std::uint32_t n, std::uint32_t d,
                            const AffineForm& dir1, const AffineForm& dir2,
                            const AffineForm& dir3) {
    std::uint32_t q = field.q();
    check_code_range(q, n, d);
    require(d < q - 1 && d >= 3, "T pattern needs 3 <= d < q-1");
    require(n >= 3, "T pattern needs three independent directions");
    Arrangement arr{field, n, {}};
    HyperplaneBlock blk1{dir1, {}};
    for (std::uint32_t i = 0; i < d - 2; ++i) blk1.shifts.push_back(static_cast<felem>(i));
    arr.blocks = {blk1, HyperplaneBlock{dir2, {0}}, HyperplaneBlock{dir3, {0}}};
    detail::validate_arrangement(arr);
    return arr;
}

// g over GF(p^s) in n variables with at least one coefficient outside GF(p);
// the conjugate product has degree s * d_prime
struct NormFormSpec {
    ExtensionMap ext;
    ReducedPoly g;
    std::uint32_t d_prime = 0;
};

// f = prod of the s Frobenius conjugates of g, multiplied as raw polynomials;
// the product is Galois-fixed so its coefficients land in the prime field, and
// the result is reduced over the base field.
inline ReducedPoly norm_form(const NormFormSpec& spec) {
    const Field& ext = spec.ext.ext();
    const Field& base = spec.ext.base();
    require(ext.m() >= 2, "extension degree below 2");
    require(spec.g.field() == ext, "g must live over the extension field");
    require(!spec.g.is_zero(), "g must be nonzero");
    require(static_cast<int>(spec.d_prime) == spec.g.total_degree(),
            "d_prime does not match the degree of g");
    bool outside = false;
    for (const auto& [e, c] : spec.g.terms())
        if (!spec.ext.in_base(c)) outside = true;
    require(outside, "g has all coefficients in the base subfield");

    std::uint32_t s = ext.m();
    TermMap prod = spec.g.terms();
    TermMap conj = spec.g.terms();
    for (std::uint32_t i = 1; i < s; ++i) {
        TermMap next;
        for (const auto& [e, c] : conj) next.emplace(e, ext.pow(c, ext.p()));
        conj = next;
        prod = detail::raw_mul(prod, conj, ext);
    }

    ReducedPoly out(base, spec.g.nvars());
    for (const auto& [e, c] : prod) {
        require(spec.ext.in_base(c), "conjugate product has a coefficient outside the base field");
        out.add_term(e, spec.ext.project(c));
    }
    return out;
}

namespace detail {

// all direction vectors with first nonzero coordinate 1, ascending code order
inline std::vector<std::vector<felem>> normalized_directions(std::uint32_t q, std::uint32_t n) {
    std::vector<std::vector<felem>> out;
    int64_t total = checked_pow(q, n);
    for (int64_t idx = 1; idx < total; ++idx) {
        std::vector<felem> v = point_from_index(idx, q, n);
        std::uint32_t lead = 0;
        while (v[lead] == 0) ++lead;
        if (v[lead] == 1) out.push_back(v);
    }
    return out;
}

// all points of Z, as indices
inline std::vector<int64_t> zero_indices(const ReducedPoly& f) {
    std::vector<int64_t> out;
    int64_t total = checked_pow(f.field().q(), f.nvars());
    for (int64_t i = 0; i < total; ++i)
        if (f.evaluate(point_from_index(i, f.field().q(), f.nvars())) == 0) out.push_back(i);
    return out;
}

struct ContainedHyperplanes {
    // one entry per normalized direction: the shifts c with {dir.x = c} inside Z
    std::vector<std::vector<felem>> per_direction;
    std::vector<std::vector<felem>> directions;
};

inline ContainedHyperplanes contained_hyperplanes(const Field& field, std::uint32_t n,
                                                  const std::set<int64_t>& zeros) {
    ContainedHyperplanes out;
    out.directions = normalized_directions(field.q(), n);
    int64_t total = checked_pow(field.q(), n);
    for (const auto& dir : out.directions) {
        std::vector<bool> shift_ok(field.q(), true);
        for (int64_t i = 0; i < total; ++i) {
            if (zeros.count(i)) continue;
            std::vector<felem> pt = point_from_index(i, field.q(), n);
            felem v = 0;
            for (std::uint32_t j = 0; j < n; ++j)
                if (dir[j]) v = field.add(v, field.mul(dir[j], pt[j]));
            shift_ok[v] = false;  // a non-zero of f sits on this hyperplane
        }
        std::vector<felem> shifts;
        for (felem c = 0; c < field.q(); ++c)
            if (shift_ok[c]) shifts.push_back(c);
        out.per_direction.push_back(shifts);
    }
    return out;
}

}  // namespace detail

// Z_a(f) is exactly a union of d distinct affine hyperplanes.  A nonzero f of
// degree <= d can contain at most deg(f) hyperplanes (each contributes a
// distinct linear factor), so containment count d + full coverage decides it;
// inputs of larger degree fall back to a small subset search.
inline bool is_union_of_d_hyperplanes(const ReducedPoly& f, std::uint32_t d) {
    require(!f.is_zero(), "zero polynomial");
    const Field& field = f.field();
    std::uint32_t n = f.nvars();
    std::vector<int64_t> zv = detail::zero_indices(f);
    std::set<int64_t> zeros(zv.begin(), zv.end());
    auto ch = detail::contained_hyperplanes(field, n, zeros);

    struct Hyp {
        std::vector<felem> dir;
        felem shift;
    };
    std::vector<Hyp> hyps;
    for (size_t di = 0; di < ch.directions.size(); ++di)
        for (felem c : ch.per_direction[di]) hyps.push_back({ch.directions[di], c});
    if (hyps.size() < d) return false;

    int64_t total = checked_pow(field.q(), n);
    auto hyp_points = [&](const Hyp& h) {
        std::set<int64_t> pts;
        for (int64_t i = 0; i < total; ++i) {
            std::vector<felem> pt = point_from_index(i, field.q(), n);
            felem v = 0;
            for (std::uint32_t j = 0; j < n; ++j)
                if (h.dir[j]) v = field.add(v, field.mul(h.dir[j], pt[j]));
            if (v == h.shift) pts.insert(i);
        }
        return pts;
    };

    std::vector<std::set<int64_t>> pts;
    pts.reserve(hyps.size());
    for (const auto& h : hyps) pts.push_back(hyp_points(h));

    // choose d of the contained hyperplanes covering all of Z
    std::vector<std::uint32_t> pick(d);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::set<int64_t> uni;
        for (auto i : pick) uni.insert(pts[i].begin(), pts[i].end());
        if (uni == zeros) return true;
        // next combination
        std::uint32_t i = d;
        while (i > 0 && pick[i - 1] == hyps.size() - d + i - 1) --i;
        if (i == 0) return false;
        ++pick[i - 1];
        for (std::uint32_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
}

namespace detail {

// block-structure test on a zero set: a directions carrying q-1 contained
// shifts plus (when b > 0) one more direction carrying at least b, all
// linearly independent.  Any such family has exactly q^n - (q-b) q^{n-a-1}
// points, so containment plus independence forces the union to equal Z.
inline bool has_delsarte_structure(const Field& field, std::uint32_t n,
                                   const std::set<int64_t>& zeros, std::uint32_t a,
                                   std::uint32_t b) {
    auto ch = contained_hyperplanes(field, n, zeros);
    std::uint32_t q = field.q();
    std::vector<std::uint32_t> full, partial;
    for (std::uint32_t i = 0; i < ch.directions.size(); ++i) {
        size_t cnt = ch.per_direction[i].size();
        if (cnt == q - 1) full.push_back(i);
        if (b > 0 && cnt >= b) partial.push_back(i);
    }
    if (full.size() < a) return false;
    if (b > 0 && partial.empty()) return false;

    // pick a full-block directions (+ one partial direction) of full rank
    std::vector<std::uint32_t> pick;
    auto independent = [&](const std::vector<std::uint32_t>& sel) {
        std::vector<std::vector<felem>> rows;
        for (auto i : sel) rows.push_back(ch.directions[i]);
        return form_rank(field, rows) == sel.size();
    };
    auto search = [&](auto&& self, std::uint32_t from, std::uint32_t left) -> bool {
        if (left == 0) {
            if (b == 0) return independent(pick);
            for (auto pi : partial) {
                if (std::find(pick.begin(), pick.end(), pi) != pick.end()) continue;
                pick.push_back(pi);
                bool ok = independent(pick);
                pick.pop_back();
                if (ok) return true;
            }
            return false;
        }
        for (std::uint32_t i = from; i + left <= full.size(); ++i) {
            pick.push_back(full[i]);
            if (independent(pick) && self(self, i + 1, left - 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (a == 0 && b == 0) return false;
    return search(search, 0, a);
}

}  // namespace detail

// does f attain the minimum weight through the block structure: a blocks of
// q-1 parallel hyperplanes plus one block of b, independent directions
inline bool is_delsarte_maximal(const ReducedPoly& f, std::uint32_t d) {
    if (f.is_zero()) return false;
    if (f.total_degree() > static_cast<int>(d)) return false;
    SplitAB ab = split_ab(d, f.field().q());
    std::vector<int64_t> zv = detail::zero_indices(f);
    std::set<int64_t> zeros(zv.begin(), zv.end());
    return detail::has_delsarte_structure(f.field(), f.nvars(), zeros, ab.a, ab.b);
}

}  // namespace grm
