#pragma once

// Exhaustive ground-truth enumeration and the named verification suites that
// tie every closed form in the library back to brute force at desk scale.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "grm/affine.hpp"
#include "grm/constructions.hpp"
#include "grm/gf.hpp"
#include "grm/poly.hpp"
#include "grm/projective.hpp"
#include "grm/rational.hpp"

namespace grm {

enum class CodeKind { affine, projective };

inline std::string to_string(CodeKind k) {
    return k == CodeKind::affine ? "affine" : "projective";
}

struct GridPoint {
    std::uint32_t q = 0;
    std::uint32_t n = 0;
    std::uint32_t d = 0;
    CodeKind variant = CodeKind::affine;
};

inline std::string gp_str(const GridPoint& gp) {
    return to_string(gp.variant) + "(" + std::to_string(gp.q) + "," + std::to_string(gp.n) +
           "," + std::to_string(gp.d) + ")";
}

enum class CheckStatus { pass, fail, flagged };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass:
            return "pass";
        case CheckStatus::fail:
            return "fail";
        default:
            return "flagged";
    }
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string flag;
    std::string details;
};

struct VerificationReport {
    std::string suite;
    std::vector<GridPoint> grid;
    std::vector<CheckResult> checks;

    bool ok() const {
        return std::none_of(checks.begin(), checks.end(),
                            [](const CheckResult& c) { return c.status == CheckStatus::fail; });
    }
};

// report vocabulary for documented deviations surfaced by the suites
inline constexpr const char* flag_case_table_d2 = "paper-case-table-d2";
inline constexpr const char* flag_delta_family_q2 = "paper-delta-family-q2";
inline constexpr const char* flag_nai_q2_boundary = "nai-q2-boundary";
inline constexpr const char* flag_nat_display = "paper-nat-display";
inline constexpr const char* flag_s_chain_d3 = "paper-s-chain-d3";

inline int64_t default_enum_budget() {
    if (const char* env = std::getenv("GRM_ENUM_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        require(end != env && *end == '\0' && v > 0,
                "GRM_ENUM_BUDGET must be a positive integer");
        return static_cast<int64_t>(v);
    }
    return 10'000'000'000LL;
}

namespace detail {

inline int64_t mul_sat(int64_t a, int64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<int64_t>::max() / b) return std::numeric_limits<int64_t>::max();
    return a * b;
}

struct EnumPlan {
    Field field;
    std::uint32_t nvars = 0;
    std::vector<Monomial> basis;
    std::vector<std::vector<felem>> points;
    int64_t cost = 0;
};

inline EnumPlan enum_plan(const GridPoint& gp) {
    EnumPlan plan{Field::from_order(gp.q), 0, {}, {}, 0};
    if (gp.variant == CodeKind::affine) {
        check_code_range(gp.q, gp.n, gp.d);
        plan.nvars = gp.n;
        plan.basis = reduced_monomial_basis(gp.q, gp.n, gp.d);
        int64_t total = checked_pow(gp.q, gp.n);
        plan.points.reserve(static_cast<size_t>(total));
        for (int64_t i = 0; i < total; ++i)
            plan.points.push_back(point_from_index(i, gp.q, gp.n));
    } else {
        factor_prime_power(gp.q);
        require(gp.n >= 1 && gp.d >= 1, "bad projective parameters");
        plan.nvars = gp.n + 1;
        plan.basis = homogeneous_monomial_basis(gp.n + 1, gp.d);
        for (const auto& pt : proj_points(gp.q, gp.n)) plan.points.push_back(pt.coords);
    }
    plan.cost = static_cast<int64_t>(plan.points.size());
    for (size_t j = 0; j < plan.basis.size(); ++j) plan.cost = mul_sat(plan.cost, gp.q);
    return plan;
}

inline void check_budget(int64_t cost, int64_t budget, const GridPoint& gp) {
    require(budget > 0, "budget must be positive");
    if (cost <= budget) return;
    std::string need = cost == std::numeric_limits<int64_t>::max()
                           ? "more than " + std::to_string(cost)
                           : std::to_string(cost);
    throw std::invalid_argument("enumeration budget exceeded at " + gp_str(gp) + ": need " +
                                need + " point evaluations, budget " + std::to_string(budget));
}

inline std::vector<std::vector<felem>> basis_columns(const EnumPlan& plan) {
    std::vector<std::vector<felem>> cols(plan.basis.size(),
                                         std::vector<felem>(plan.points.size(), 0));
    for (size_t j = 0; j < plan.basis.size(); ++j)
        for (size_t i = 0; i < plan.points.size(); ++i) {
            felem acc = 1;
            for (std::uint32_t v = 0; v < plan.nvars; ++v)
                if (plan.basis[j][v])
                    acc = plan.field.mul(acc,
                                         plan.field.pow(plan.points[i][v], plan.basis[j][v]));
            cols[j][i] = acc;
        }
    return cols;
}

// depth-first walk over coefficient vectors with per-level partial evaluation
// sums; prefixes are dealt round-robin so merged results are independent of
// the worker count
template <typename Leaf>
inline void coefficient_walk(const EnumPlan& plan, const std::vector<std::vector<felem>>& cols,
                             std::uint32_t workers, std::uint32_t me, Leaf&& leaf) {
    const std::uint32_t q = plan.field.q();
    const std::uint32_t k = static_cast<std::uint32_t>(plan.basis.size());
    const size_t npts = plan.points.size();

    std::uint32_t prefix_len = 0;
    int64_t span = 1;
    while (span < workers && prefix_len < k) {
        span *= q;
        ++prefix_len;
    }

    std::vector<std::vector<felem>> partial(k + 1, std::vector<felem>(npts, 0));
    std::vector<felem> coeff(k, 0);

    auto extend = [&](std::uint32_t level, felem c) {
        const std::vector<felem>& col = cols[level];
        const std::vector<felem>& src = partial[level];
        std::vector<felem>& dst = partial[level + 1];
        if (c == 0) {
            dst = src;
        } else {
            for (size_t i = 0; i < npts; ++i)
                dst[i] = plan.field.add(src[i], plan.field.mul(c, col[i]));
        }
        coeff[level] = c;
    };

    auto dfs = [&](auto&& self, std::uint32_t level) -> void {
        if (level == k) {
            leaf(static_cast<const std::vector<felem>&>(coeff),
                 static_cast<const std::vector<felem>&>(partial[k]));
            return;
        }
        for (std::uint32_t c = 0; c < q; ++c) {
            extend(level, static_cast<felem>(c));
            self(self, level + 1);
        }
    };

    std::vector<felem> digits(prefix_len, 0);
    for (int64_t p = 0; p < span; ++p) {
        if (p % workers != me) continue;
        int64_t rest = p;
        for (std::uint32_t i = prefix_len; i-- > 0;) {
            digits[i] = static_cast<felem>(rest % q);
            rest /= q;
        }
        for (std::uint32_t i = 0; i < prefix_len; ++i) extend(i, digits[i]);
        dfs(dfs, prefix_len);
    }
}

template <typename Body>
inline void run_workers(std::uint32_t workers, Body&& body) {
    if (workers == 1) {
        body(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint32_t w = 0; w < workers; ++w) pool.emplace_back([&body, w] { body(w); });
    for (auto& t : pool) t.join();
}

inline int64_t nonzero_count(const std::vector<felem>& v) {
    int64_t w = 0;
    for (felem x : v) w += x != 0;
    return w;
}

}  // namespace detail

// weight distribution of the full code by exhaustive enumeration; the affine
// variant walks all coefficient vectors over the reduced monomial basis, the
// projective variant walks homogeneous coefficient vectors and deduplicates
// codewords by evaluation vector
inline WeightDistribution enum_spectrum(const GridPoint& gp,
                                        int64_t budget = default_enum_budget(),
                                        std::uint32_t workers = 1) {
    require(workers >= 1, "worker count must be at least 1");
    detail::EnumPlan plan = detail::enum_plan(gp);
    detail::check_budget(plan.cost, budget, gp);
    auto cols = detail::basis_columns(plan);

    WeightDistribution out;
    if (gp.variant == CodeKind::affine) {
        std::vector<std::map<int64_t, int64_t>> counts(workers);
        detail::run_workers(workers, [&](std::uint32_t me) {
            detail::coefficient_walk(
                plan, cols, workers, me,
                [&](const std::vector<felem>&, const std::vector<felem>& evals) {
                    ++counts[me][detail::nonzero_count(evals)];
                });
        });
        for (const auto& m : counts)
            for (const auto& [w, c] : m) out.counts[w] += c;
    } else {
        std::vector<std::set<std::vector<felem>>> seen(workers);
        detail::run_workers(workers, [&](std::uint32_t me) {
            detail::coefficient_walk(
                plan, cols, workers, me,
                [&](const std::vector<felem>&, const std::vector<felem>& evals) {
                    seen[me].insert(evals);
                });
        });
        std::set<std::vector<felem>> all;
        for (auto& s : seen) all.merge(s);
        for (const auto& ev : all) ++out.counts[detail::nonzero_count(ev)];
    }
    return out;
}

// every codeword of the affine code exactly once, with its evaluation vector
// over the points in index order
inline void enumerate_affine_words(
    std::uint32_t q, std::uint32_t n, std::uint32_t d,
    const std::function<void(const ReducedPoly&, const std::vector<felem>&)>& visitor,
    int64_t budget = default_enum_budget()) {
    GridPoint gp{q, n, d, CodeKind::affine};
    detail::EnumPlan plan = detail::enum_plan(gp);
    detail::check_budget(plan.cost, budget, gp);
    auto cols = detail::basis_columns(plan);
    detail::coefficient_walk(plan, cols, 1, 0,
                             [&](const std::vector<felem>& coeff,
                                 const std::vector<felem>& evals) {
                                 ReducedPoly f(plan.field, n);
                                 for (size_t j = 0; j < coeff.size(); ++j)
                                     if (coeff[j]) f.add_term(plan.basis[j], coeff[j]);
                                 visitor(f, evals);
                             });
}

namespace detail {

// every codeword of the projective code exactly once: homogeneous coefficient
// vectors deduplicated by evaluation vector, first polynomial representative
// kept
inline void enumerate_proj_functions(
    std::uint32_t q, std::uint32_t n, std::uint32_t d,
    const std::function<void(const HomogeneousPoly&, const std::vector<felem>&)>& visitor,
    int64_t budget) {
    GridPoint gp{q, n, d, CodeKind::projective};
    EnumPlan plan = enum_plan(gp);
    check_budget(plan.cost, budget, gp);
    auto cols = basis_columns(plan);
    std::set<std::vector<felem>> seen;
    coefficient_walk(plan, cols, 1, 0,
                     [&](const std::vector<felem>& coeff, const std::vector<felem>& evals) {
                         if (!seen.insert(evals).second) return;
                         HomogeneousPoly F(plan.field, n + 1, d);
                         for (size_t j = 0; j < coeff.size(); ++j)
                             if (coeff[j]) F.add_term(plan.basis[j], coeff[j]);
                         visitor(F, evals);
                     });
}

}  // namespace detail

// dimension recomputed as the rank over GF(q) of the evaluation matrix
// (monomial basis rows, one column per point) via exact elimination
inline int64_t dimension_rank_oracle(const GridPoint& gp, int64_t budget = default_enum_budget()) {
    detail::EnumPlan plan = detail::enum_plan(gp);
    int64_t cost = detail::mul_sat(static_cast<int64_t>(plan.basis.size()),
                                   static_cast<int64_t>(plan.points.size()));
    detail::check_budget(cost, budget, gp);
    return detail::form_rank(plan.field, detail::basis_columns(plan));
}

namespace detail {

inline std::uint32_t smallest_prime_factor(std::uint32_t m) {
    require(m >= 2, "number below 2");
    for (std::uint32_t p = 2; p * p <= m; ++p)
        if (m % p == 0) return p;
    return m;
}

inline const std::vector<std::uint32_t>& small_prime_powers() {
    static const std::vector<std::uint32_t> qs = {2, 3, 4, 5, 7, 8, 9};
    return qs;
}

inline std::vector<GridPoint> affine_code_grid() {
    return {{2, 2, 1, CodeKind::affine}, {2, 3, 2, CodeKind::affine},
            {2, 4, 2, CodeKind::affine}, {3, 2, 2, CodeKind::affine},
            {3, 2, 3, CodeKind::affine}, {4, 2, 2, CodeKind::affine},
            {4, 2, 3, CodeKind::affine}, {5, 2, 2, CodeKind::affine}};
}

inline std::vector<GridPoint> projective_code_grid() {
    return {{2, 1, 1, CodeKind::projective}, {2, 2, 2, CodeKind::projective},
            {2, 2, 3, CodeKind::projective}, {3, 1, 2, CodeKind::projective},
            {3, 2, 2, CodeKind::projective}, {4, 1, 2, CodeKind::projective},
            {4, 1, 3, CodeKind::projective}};
}

// unions of d hyperplanes are degree-d objects even where the code range
// excludes d, so the arrangement grid may sit on d = n(q-1)
inline std::vector<GridPoint> arrangement_grid() {
    return {{2, 2, 2, CodeKind::affine}, {3, 2, 2, CodeKind::affine},
            {3, 2, 3, CodeKind::affine}, {4, 2, 2, CodeKind::affine},
            {2, 3, 3, CodeKind::affine}};
}

inline std::vector<GridPoint> structure_grid() {
    return {{3, 2, 2, CodeKind::affine}, {4, 2, 2, CodeKind::affine},
            {2, 3, 2, CodeKind::affine}};
}

inline std::vector<GridPoint> nai_grid() {
    std::vector<GridPoint> out;
    for (const auto& gp : affine_code_grid())
        if (gp.d >= 2) out.push_back(gp);
    return out;
}

inline std::vector<GridPoint> delta_grid() {
    std::vector<GridPoint> out;
    for (std::uint32_t q : small_prime_powers())
        for (std::uint32_t n = 2; n <= 4; ++n)
            for (std::uint32_t d = 2; d <= n * (q - 1); ++d)
                out.push_back({q, n, d, CodeKind::affine});
    return out;
}

inline std::vector<GridPoint> crosscheck_grid() {
    std::vector<GridPoint> out;
    for (std::uint32_t q : small_prime_powers())
        for (std::uint32_t n = 1; n <= 4; ++n)
            for (std::uint32_t d = 1; d + 1 <= n * (q - 1); ++d)
                out.push_back({q, n, d, CodeKind::affine});
    return out;
}

inline std::vector<GridPoint> st_grid() {
    std::vector<GridPoint> out;
    for (std::uint32_t q : {7u, 8u, 9u})
        for (std::uint32_t n = 2; n <= 3; ++n)
            for (std::uint32_t d = 3; d + 2 <= q; ++d)
                out.push_back({q, n, d, CodeKind::affine});
    return out;
}

inline CheckResult make_check(std::string name, bool ok, std::string details) {
    return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, "",
            std::move(details)};
}

inline CheckResult make_flagged(std::string name, const char* flag, std::string details) {
    return {std::move(name), CheckStatus::flagged, flag, std::move(details)};
}

inline void require_variant(const std::vector<GridPoint>& grid, CodeKind kind,
                            const std::string& suite) {
    for (const auto& gp : grid)
        require(gp.variant == kind,
                "suite " + suite + " expects " + to_string(kind) + " grid points");
}

inline void suite_min_distance(VerificationReport& rep, int64_t budget, std::uint32_t workers) {
    if (rep.grid.empty()) rep.grid = affine_code_grid();
    require_variant(rep.grid, CodeKind::affine, rep.suite);
    for (const auto& gp : rep.grid) {
        WeightDistribution dist = enum_spectrum(gp, budget, workers);
        int64_t got = kth_weight(dist, 1);
        int64_t formula = min_distance_affine(gp.q, gp.n, gp.d);
        rep.checks.push_back(make_check(gp_str(gp) + " min weight", got == formula,
                                        "enum=" + std::to_string(got) +
                                            " formula=" + std::to_string(formula)));
    }
}

inline void suite_second_weight(VerificationReport& rep, int64_t budget,
                                std::uint32_t workers) {
    if (rep.grid.empty()) rep.grid = affine_code_grid();
    require_variant(rep.grid, CodeKind::affine, rep.suite);
    for (const auto& gp : rep.grid) {
        WeightDistribution dist = enum_spectrum(gp, budget, workers);
        int64_t got = kth_weight(dist, 2);
        int64_t formula = second_weight_affine(gp.q, gp.n, gp.d);
        rep.checks.push_back(make_check(gp_str(gp) + " second weight", got == formula,
                                        "enum=" + std::to_string(got) +
                                            " formula=" + std::to_string(formula)));
    }
}

inline void suite_delsarte(VerificationReport& rep, int64_t budget, std::uint32_t workers) {
    (void)workers;
    if (rep.grid.empty()) rep.grid = structure_grid();
    require_variant(rep.grid, CodeKind::affine, rep.suite);
    for (const auto& gp : rep.grid) {
        int64_t w1 = min_distance_affine(gp.q, gp.n, gp.d);
        int64_t nmin = 0;
        int64_t mismatches = 0;
        enumerate_affine_words(
            gp.q, gp.n, gp.d,
            [&](const ReducedPoly& f, const std::vector<felem>& evals) {
                if (f.is_zero()) return;
                bool minimal = nonzero_count(evals) == w1;
                bool structured = is_delsarte_maximal(f, gp.d);
                if (minimal) ++nmin;
                if (minimal != structured) ++mismatches;
            },
            budget);
        rep.checks.push_back(
            make_check(gp_str(gp) + " block structure equivalence",
                       mismatches == 0 && nmin > 0,
                       "min_weight_words=" + std::to_string(nmin) +
                           " mismatches=" + std::to_string(mismatches)));
    }
}

inline void suite_lemma_mini(VerificationReport& rep, int64_t budget, std::uint32_t workers) {
    (void)budget;
    (void)workers;
    if (rep.grid.empty()) rep.grid = arrangement_grid();
    require_variant(rep.grid, CodeKind::affine, rep.suite);
    for (const auto& gp : rep.grid) {
        require(gp.n >= 2, "hyperplane union bound needs n >= 2");
        Field field = Field::from_order(gp.q);
        int64_t total = checked_pow(gp.q, gp.n);
        auto dirs = normalized_directions(gp.q, gp.n);

        std::vector<std::vector<char>> masks;
        for (const auto& dir : dirs)
            for (std::uint32_t c = 0; c < gp.q; ++c) {
                std::vector<char> mask(static_cast<size_t>(total), 0);
                for (int64_t i = 0; i < total; ++i) {
                    std::vector<felem> pt = point_from_index(i, gp.q, gp.n);
                    felem v = 0;
                    for (std::uint32_t j = 0; j < gp.n; ++j)
                        if (dir[j]) v = field.add(v, field.mul(dir[j], pt[j]));
                    if (v == c) mask[static_cast<size_t>(i)] = 1;
                }
                masks.push_back(std::move(mask));
            }

        std::uint32_t d = gp.d;
        require(masks.size() >= d, "fewer hyperplanes than the union size");
        int64_t bound = d * checked_pow(gp.q, gp.n - 1) -
                        static_cast<int64_t>(d) * (d - 1) / 2 * checked_pow(gp.q, gp.n - 2);
        int64_t subsets = 0;
        int64_t min_union = total;
        std::vector<std::uint32_t> pick(d);
        for (std::uint32_t i = 0; i < d; ++i) pick[i] = i;
        std::vector<char> scratch(static_cast<size_t>(total));
        while (true) {
            std::fill(scratch.begin(), scratch.end(), 0);
            for (auto idx : pick)
                for (size_t i = 0; i < scratch.size(); ++i)
                    scratch[i] = static_cast<char>(scratch[i] | masks[idx][i]);
            int64_t cnt = 0;
            for (char x : scratch) cnt += x;
            min_union = std::min(min_union, cnt);
            ++subsets;
            std::uint32_t i = d;
            while (i > 0 && pick[i - 1] == masks.size() - d + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::uint32_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
        }
        rep.checks.push_back(make_check(
            gp_str(gp) + " union lower bound", min_union >= bound,
            "subsets=" + std::to_string(subsets) + " min=" + std::to_string(min_union) +
                " bound=" + std::to_string(bound)));
    }
}

struct NormCase {
    std::uint32_t q = 0;
    std::uint32_t s = 0;
    std::uint32_t n = 0;
    bool quadratic = false;
    int64_t expected = 0;
};

// conjugate product of X1 + x X2 (linear) or X1^2 + x X2 (quadratic), with x
// the canonical generator of the extension field
inline ReducedPoly build_norm_word(const NormCase& c) {
    Field base = Field::from_order(c.q);
    int64_t ext_order = checked_pow(c.q, c.s);
    Field ext = Field::from_order(static_cast<std::uint32_t>(ext_order));
    ExtensionMap em(base, ext);
    ReducedPoly g(ext, c.n);
    Monomial lead(c.n, 0);
    lead[0] = c.quadratic ? 2 : 1;
    g.add_term(lead, 1);
    Monomial tail(c.n, 0);
    tail[1] = 1;
    g.add_term(tail, static_cast<felem>(ext.p()));
    NormFormSpec spec{em, g, c.quadratic ? 2u : 1u};
    return norm_form(spec);
}

inline void suite_mlem_norm(VerificationReport& rep, int64_t budget, std::uint32_t workers) {
    (void)workers;
    require(rep.grid.empty(), "suite mlem-norm runs a fixed construction family");

    const NormCase cases[] = {
        {2, 2, 2, false, 1}, {2, 3, 2, false, 1}, {3, 2, 2, false, 1},
        {3, 3, 2, false, 1}, {5, 2, 2, false, 1}, {5, 3, 2, false, 1},
        {2, 2, 3, true, 2},  {2, 3, 4, true, 4},  {3, 2, 2, true, 1},
        {3, 3, 2, true, 1},  {5, 2, 2, true, 1},  {5, 3, 2, true, 1},
    };
    for (const NormCase& c : cases) {
        ReducedPoly f = build_norm_word(c);
        int64_t zeros = count_zeros_affine(f);
        std::uint32_t d = c.s * (c.quadratic ? 2u : 1u);
        std::uint32_t u = smallest_prime_factor(d);
        MlemBound mb = mlem_bound(c.q, c.n, d, u);
        bool ok = zeros == c.expected && zeros < mb.generic;
        std::string details = "zeros=" + std::to_string(zeros) +
                              " expected=" + std::to_string(c.expected) +
                              " generic=" + std::to_string(mb.generic);
        if (mb.a0) {
            ok = ok && Rat(zeros) < *mb.a0;
            details += " a0=" + mb.a0->str();
        }
        std::string name = std::string("norm(q=") + std::to_string(c.q) +
                           ",s=" + std::to_string(c.s) + ",deg=" +
                           (c.quadratic ? "2" : "1") + ") bounds";
        rep.checks.push_back(make_check(std::move(name), ok, std::move(details)));
    }

    // degree-2 low-weight words over GF(5) against the conjugate product
    {
        NormCase base_case{5, 2, 2, false, 1};
        ReducedPoly fnorm = build_norm_word(base_case);
        int64_t nnorm = count_zeros_affine(fnorm);
        int64_t total = checked_pow(5, 2);
        int64_t found = 0;
        int64_t min_union = total;
        int64_t max_union = 0;
        enumerate_affine_words(
            5, 2, 2,
            [&](const ReducedPoly& f, const std::vector<felem>& evals) {
                if (f.is_zero()) return;
                if (!is_union_of_d_hyperplanes(f, 2)) return;
                ++found;
                int64_t zeros = total - nonzero_count(evals);
                min_union = std::min(min_union, zeros);
                max_union = std::max(max_union, zeros);
            },
            budget);
        rep.checks.push_back(make_check(
            "compare1(5,2,2) low-weight words vs norm word",
            found > 0 && min_union == 9 && max_union == 10 && min_union > nnorm,
            "union_words=" + std::to_string(found) + " min_zeros=" +
                std::to_string(min_union) + " max_zeros=" + std::to_string(max_union) +
                " norm_zeros=" + std::to_string(nnorm)));
    }

    // degree-3 hyperplane triples over GF(7) against the cubic conjugate
    // product and the quadratic-product word
    {
        Field f7 = Field::from_order(7);
        auto dirs = normalized_directions(7, 2);
        struct Line {
            std::uint32_t dir = 0;
            felem shift = 0;
        };
        std::vector<Line> lines;
        for (std::uint32_t di = 0; di < dirs.size(); ++di)
            for (felem c = 0; c < 7; ++c) lines.push_back({di, c});

        auto meet = [&](const Line& a, const Line& b) -> int64_t {
            if (a.dir == b.dir) return -1;
            const auto& u = dirs[a.dir];
            const auto& v = dirs[b.dir];
            felem det = f7.sub(f7.mul(u[0], v[1]), f7.mul(u[1], v[0]));
            felem idet = f7.inv(det);
            felem x0 = f7.mul(f7.sub(f7.mul(a.shift, v[1]), f7.mul(b.shift, u[1])), idet);
            felem x1 = f7.mul(f7.sub(f7.mul(u[0], b.shift), f7.mul(v[0], a.shift)), idet);
            return x0 + 7 * static_cast<int64_t>(x1);
        };

        size_t m = lines.size();
        std::vector<std::vector<int64_t>> pt(m, std::vector<int64_t>(m, -1));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j) pt[i][j] = pt[j][i] = meet(lines[i], lines[j]);

        int64_t triples = 0;
        int64_t min_union = checked_pow(7, 2);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j)
                for (size_t l = j + 1; l < m; ++l) {
                    int64_t pairs = (pt[i][j] >= 0) + (pt[i][l] >= 0) + (pt[j][l] >= 0);
                    int64_t common =
                        pt[i][j] >= 0 && pt[i][j] == pt[i][l] && pt[i][j] == pt[j][l] ? 1 : 0;
                    int64_t zeros = 3 * 7 - pairs + common;
                    min_union = std::min(min_union, zeros);
                    ++triples;
                }

        NormCase cubic{7, 3, 2, false, 1};
        ReducedPoly fnorm3 = build_norm_word(cubic);
        int64_t nnorm3 = count_zeros_affine(fnorm3);

        NormCase quad{7, 2, 2, false, 1};
        ReducedPoly fnorm2 = build_norm_word(quad);
        AffineForm off{{1, 0}, 1};
        ReducedPoly fprod = fnorm2 * off.to_poly(f7);
        int64_t nprod = count_zeros_affine(fprod);

        rep.checks.push_back(make_check(
            "compare1(7,2,3) hyperplane triples vs norm words",
            triples == 27720 && min_union == 18 && nnorm3 == 1 && nprod == 8 &&
                min_union > nprod,
            "triples=" + std::to_string(triples) + " min_zeros=" + std::to_string(min_union) +
                " cubic_norm_zeros=" + std::to_string(nnorm3) +
                " product_zeros=" + std::to_string(nprod)));

        // product with an irreducible, not absolutely irreducible factor of
        // degree d' = 2: zeros below (d - d'/2) q^{n-1}
        Rat irr_bound = Rat(3) - Rat(2, 2);
        irr_bound = irr_bound * Rat(checked_pow(7, 1));
        rep.checks.push_back(make_check(
            "irreducible factor bound (7,2,3)", Rat(nprod) < irr_bound,
            "zeros=" + std::to_string(nprod) + " bound=" + irr_bound.str()));
    }
}

inline void suite_nai(VerificationReport& rep, int64_t budget, std::uint32_t workers) {
    (void)budget;
    (void)workers;
    if (rep.grid.empty()) rep.grid = nai_grid();
    require_variant(rep.grid, CodeKind::affine, rep.suite);
    for (const auto& gp : rep.grid) {
        require(gp.d >= 2, "conjugate-product words need composite degree");
        std::uint32_t u = smallest_prime_factor(gp.d);
        NaiGap gap = nai_gap_check(gp.q, gp.n, gp.d, u);
        std::string details = "bound=" + gap.lower_bound.str() +
                              " w2=" + std::to_string(gap.second_weight);
        std::string name = gp_str(gp) + " norm gap";
        if (gap.exceeds) {
            rep.checks.push_back(make_check(std::move(name), true, std::move(details)));
        } else if (gp.q == 2 && gap.lower_bound == Rat(gap.second_weight)) {
            rep.checks.push_back(
                make_flagged(std::move(name), flag_nai_q2_boundary, details + " equality"));
        } else {
            rep.checks.push_back(make_check(std::move(name), false, std::move(details)));
        }
    }
}

inline void suite_proj_min(VerificationReport& rep, int64_t budget, std::uint32_t workers) {
    (void)workers;
    if (rep.grid.empty()) rep.grid = projective_code_grid();
    require_variant(rep.grid, CodeKind::projective, rep.suite);
    for (const auto& gp : rep.grid) {
        int64_t w1 = w1_proj(gp.q, gp.n, gp.d);
        std::map<int64_t, int64_t> counts;
        int64_t nmin = 0;
        int64_t mismatches = 0;
        detail::enumerate_proj_functions(
            gp.q, gp.n, gp.d,
            [&](const HomogeneousPoly& F, const std::vector<felem>& evals) {
                int64_t weight = nonzero_count(evals);
                ++counts[weight];
                if (weight == 0) return;
                bool minimal = weight == w1;
                if (minimal) ++nmin;
                auto h = contains_proj_hyperplane(F);
                if (gp.d == 1) {
                    if (minimal && !h) ++mismatches;
                    return;
                }
                bool structured = false;
                if (h) {
                    ReducedPoly g = proj_chart_restriction(F, *h);
                    structured = is_delsarte_maximal(g, gp.d - 1);
                }
                if (minimal != structured) ++mismatches;
            },
            budget);
        WeightDistribution dist;
        dist.counts = counts;
        int64_t got = kth_weight(dist, 1);
        rep.checks.push_back(make_check(gp_str(gp) + " min weight", got == w1,
                                        "enum=" + std::to_string(got) +
                                            " formula=" + std::to_string(w1)));
        std::string cname = gp.d == 1 ? " hyperplane containment"
                                      : " maximality characterization";
        rep.checks.push_back(make_check(
            gp_str(gp) + cname, mismatches == 0 && nmin > 0,
            "minimum_words=" + std::to_string(nmin) +
                " mismatches=" + std::to_string(mismatches)));
    }
}

inline void suite_proj_second(VerificationReport& rep, int64_t budget, std::uint32_t workers) {
    if (rep.grid.empty()) {
        for (const auto& gp : projective_code_grid())
            if (gp.d >= 2) rep.grid.push_back(gp);
    }
    require_variant(rep.grid, CodeKind::projective, rep.suite);
    for (const auto& gp : rep.grid) {
        require(gp.d >= 2, "degree-1 codes carry a single positive weight");
        WeightDistribution dist = enum_spectrum(gp, budget, workers);
        int64_t w2 = kth_weight(dist, 2);
        PgrmParams pp = pgrm_params(gp.q, gp.n, gp.d);
        bool ok = pp.second_weight_lower && pp.second_weight_upper &&
                  *pp.second_weight_lower <= w2 && w2 <= *pp.second_weight_upper;
        rep.checks.push_back(make_check(
            gp_str(gp) + " second weight bracket", ok,
            "lower=" + (pp.second_weight_lower ? std::to_string(*pp.second_weight_lower) : "-") +
                " w2=" + std::to_string(w2) + " upper=" +
                (pp.second_weight_upper ? std::to_string(*pp.second_weight_upper) : "-")));

        bool affine_valid = gp.n >= 2 && gp.d >= 1 && gp.d < gp.n * (gp.q - 1);
        if (affine_valid && gp.d >= 2) {
            GridPoint agp{gp.q, gp.n, gp.d, CodeKind::affine};
            int64_t w3 = kth_weight(enum_spectrum(agp, budget, workers), 3);
            ProjSecondBounds bounds = proj_second_weight_bounds(gp.q, gp.n, gp.d, w3);
            bool rok = bounds.refined_lower && *bounds.refined_lower <= w2;
            rep.checks.push_back(make_check(
                gp_str(gp) + " refined lower bound", rok,
                "w3_affine=" + std::to_string(w3) + " refined=" +
                    (bounds.refined_lower ? std::to_string(*bounds.refined_lower) : "-") +
                    " w2=" + std::to_string(w2)));
        }
    }
}

inline void suite_delta(VerificationReport& rep, int64_t budget, std::uint32_t workers) {
    (void)budget;
    (void)workers;
    if (rep.grid.empty()) rep.grid = delta_grid();
    require_variant(rep.grid, CodeKind::affine, rep.suite);
    for (const auto& gp : rep.grid) {
        DeltaIneq di = delta_ineq(gp.q, gp.n, gp.d);
        rep.checks.push_back(make_check(gp_str(gp) + " delta sign", di.direct >= 0,
                                        "direct=" + std::to_string(di.direct)));

        std::string tname = gp_str(gp) + " case table";
        if (di.case_table) {
            rep.checks.push_back(make_check(std::move(tname), di.agree,
                                            "direct=" + std::to_string(di.direct) +
                                                " table=" + std::to_string(*di.case_table)));
        } else if (gp.d == 2) {
            Rat sub = delta_substitution(gp.q, gp.n, gp.d);
            rep.checks.push_back(make_flagged(std::move(tname), flag_case_table_d2,
                                              "direct=" + std::to_string(di.direct) +
                                                  " substitution=" + sub.str() +
                                                  " (row outside the table regime)"));
        } else if (di.direct == 1) {
            rep.checks.push_back(make_flagged(
                std::move(tname), flag_delta_family_q2,
                "direct=1 substitution=0 (saturated split at q=2)"));
        } else {
            rep.checks.push_back(make_check(std::move(tname), false,
                                            "direct=" + std::to_string(di.direct) +
                                                " expected 1 at the saturated q=2 split"));
        }

        bool f1 = gp.q == 3 && gp.d == 2 * gp.n - 1;
        bool f2 = gp.q == 2 && gp.d + 1 == gp.n;
        bool f3 = gp.d == gp.n * (gp.q - 1);
        if ((f1 || f2 || f3) && gp.d >= 3 && !(gp.q == 2 && f3)) {
            bool ok = di.direct == 0 && di.case_table && *di.case_table == 0;
            rep.checks.push_back(make_check(gp_str(gp) + " vanishing family", ok,
                                            "direct=" + std::to_string(di.direct)));
        }
    }
}

inline void suite_st_configs(VerificationReport& rep, int64_t budget, std::uint32_t workers) {
    (void)budget;
    (void)workers;
    if (rep.grid.empty()) rep.grid = st_grid();
    require_variant(rep.grid, CodeKind::affine, rep.suite);
    for (const auto& gp : rep.grid) {
        Field field = Field::from_order(gp.q);
        std::uint32_t q = gp.q, n = gp.n, d = gp.d;
        auto unit = [&](std::uint32_t i) {
            AffineForm form{std::vector<felem>(n, 0), 0};
            form.coeffs[i] = 1;
            return form;
        };

        Arrangement s_arr = config_S(field, n, d, unit(0), unit(1));
        int64_t s_count = arrangement_zeros(s_arr);
        int64_t s_closed = d * checked_pow(q, n - 1) - (2 * d - 4) * checked_pow(q, n - 2);
        int64_t s_brute = count_zeros_affine(arrangement_poly(s_arr));
        rep.checks.push_back(make_check(
            gp_str(gp) + " S zero count", s_count == s_closed && s_count == s_brute,
            "count=" + std::to_string(s_count) + " closed=" + std::to_string(s_closed) +
                " brute=" + std::to_string(s_brute)));

        if (n >= 3) {
            Arrangement t_arr = config_T(field, n, d, unit(0), unit(1), unit(2));
            int64_t t_count = arrangement_zeros(t_arr);
            int64_t t_closed = d * checked_pow(q, n - 1) - (2 * d - 3) * checked_pow(q, n - 2) +
                               (d - 2) * checked_pow(q, n - 3);
            int64_t t_brute = count_zeros_affine(arrangement_poly(t_arr));
            std::string tname = gp_str(gp) + " T zero count";
            std::string tdetails = "count=" + std::to_string(t_count) +
                                   " corrected=" + std::to_string(t_closed) +
                                   " brute=" + std::to_string(t_brute);
            if (t_count == t_closed && t_count == t_brute)
                rep.checks.push_back(make_flagged(
                    std::move(tname), flag_nat_display,
                    tdetails + " (reported display collapses the two low-order terms)"));
            else
                rep.checks.push_back(make_check(std::move(tname), false, std::move(tdetails)));

            rep.checks.push_back(make_check(gp_str(gp) + " T below S", t_count < s_count,
                                            "t=" + std::to_string(t_count) +
                                                " s=" + std::to_string(s_count)));
        }

        int64_t chain = checked_pow(q, n) - second_weight_affine(q, n, d);
        std::string cname = gp_str(gp) + " S chain";
        std::string cdetails =
            "s=" + std::to_string(s_count) + " chain_bound=" + std::to_string(chain);
        if (d == 3) {
            if (s_count == chain)
                rep.checks.push_back(make_flagged(std::move(cname), flag_s_chain_d3,
                                                  cdetails + " equality"));
            else
                rep.checks.push_back(make_check(std::move(cname), false, std::move(cdetails)));
        } else {
            rep.checks.push_back(
                make_check(std::move(cname), s_count < chain, std::move(cdetails)));
        }
    }
}

inline void suite_w2_crosscheck(VerificationReport& rep, int64_t budget,
                                std::uint32_t workers) {
    (void)budget;
    (void)workers;
    if (rep.grid.empty()) rep.grid = crosscheck_grid();
    require_variant(rep.grid, CodeKind::affine, rep.suite);
    for (const auto& gp : rep.grid) {
        // first-order codes carry exactly three weights; the gap form starts
        // at degree 2
        std::string name =
            gp_str(gp) + (gp.d == 1 ? " first-order value" : " table form");
        try {
            int64_t w2 = second_weight_affine(gp.q, gp.n, gp.d);
            if (gp.d == 1) {
                int64_t full = checked_pow(gp.q, gp.n);
                rep.checks.push_back(make_check(std::move(name), w2 == full,
                                                "w2=" + std::to_string(w2) +
                                                    " q^n=" + std::to_string(full)));
                continue;
            }
            SplitAB ab = split_ab(gp.d, gp.q);
            Rat table = Rat(min_distance_affine(gp.q, gp.n, gp.d)) +
                        Rat(w2_gap(gp.q, gp.n, ab)) *
                            Rat::pow(gp.q, static_cast<int64_t>(gp.n) - ab.a - 2);
            bool ok = table.is_integer() && table.as_integer() == w2;
            rep.checks.push_back(make_check(std::move(name), ok,
                                            "w2=" + std::to_string(w2) +
                                                " table=" + table.str()));
        } catch (const std::exception& e) {
            rep.checks.push_back(make_check(std::move(name), false, e.what()));
        }
    }
}

inline void suite_dimension(VerificationReport& rep, int64_t budget, std::uint32_t workers) {
    (void)workers;
    if (rep.grid.empty()) {
        rep.grid = affine_code_grid();
        for (const auto& gp : projective_code_grid()) rep.grid.push_back(gp);
    }
    for (const auto& gp : rep.grid) {
        int64_t rank = dimension_rank_oracle(gp, budget);
        if (gp.variant == CodeKind::affine) {
            int64_t formula = dimension_affine(gp.q, gp.n, gp.d);
            int64_t basis =
                static_cast<int64_t>(reduced_monomial_basis(gp.q, gp.n, gp.d).size());
            rep.checks.push_back(make_check(
                gp_str(gp) + " dimension", formula == basis && formula == rank,
                "formula=" + std::to_string(formula) + " basis=" + std::to_string(basis) +
                    " rank=" + std::to_string(rank)));
        } else {
            int64_t formula = dimension_proj(gp.q, gp.n, gp.d);
            rep.checks.push_back(make_check(gp_str(gp) + " dimension", formula == rank,
                                            "formula=" + std::to_string(formula) +
                                                " rank=" + std::to_string(rank)));
        }
    }
}

}  // namespace detail

inline VerificationReport run_suite(const std::string& name,
                                    const std::vector<GridPoint>& grid = {},
                                    int64_t budget = default_enum_budget(),
                                    std::uint32_t workers = 1) {
    require(workers >= 1, "worker count must be at least 1");
    VerificationReport rep;
    rep.suite = name;
    rep.grid = grid;
    if (name == "min-distance")
        detail::suite_min_distance(rep, budget, workers);
    else if (name == "second-weight")
        detail::suite_second_weight(rep, budget, workers);
    else if (name == "delsarte")
        detail::suite_delsarte(rep, budget, workers);
    else if (name == "lemma-mini")
        detail::suite_lemma_mini(rep, budget, workers);
    else if (name == "mlem-norm")
        detail::suite_mlem_norm(rep, budget, workers);
    else if (name == "nai")
        detail::suite_nai(rep, budget, workers);
    else if (name == "proj-min")
        detail::suite_proj_min(rep, budget, workers);
    else if (name == "proj-second")
        detail::suite_proj_second(rep, budget, workers);
    else if (name == "delta")
        detail::suite_delta(rep, budget, workers);
    else if (name == "st-configs")
        detail::suite_st_configs(rep, budget, workers);
    else if (name == "w2-crosscheck")
        detail::suite_w2_crosscheck(rep, budget, workers);
    else if (name == "dimension")
        detail::suite_dimension(rep, budget, workers);
    else
        throw std::invalid_argument("unknown suite " + name);
    return rep;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "min-distance", "second-weight", "delsarte",   "lemma-mini",
        "mlem-norm",    "nai",           "proj-min",   "proj-second",
        "delta",        "st-configs",    "w2-crosscheck", "dimension"};
    return names;
}

}  // namespace grm
