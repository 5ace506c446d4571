// Acceptance gate: fourteen numbered criteria, each printed as one PASS or
// FAIL line with its numeric evidence.  Every comparison is exact; there are
// no floating point tolerances anywhere in the suite.

#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "grm/constructions.hpp"
#include "grm/oracle.hpp"
#include "grm/weil.hpp"

using namespace grm;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& what, const std::string& evidence) {
    std::printf("[%2d] %s  %s  (%s)\n", idx, ok ? "PASS" : "FAIL", what.c_str(),
                evidence.c_str());
    if (!ok) ++failures;
}

void note(const std::string& text) { std::printf("      note: %s\n", text.c_str()); }

bool suite_clean(const VerificationReport& rep, std::size_t expected_checks,
                 const std::map<std::string, int>& expected_flags = {}) {
    if (!rep.ok() || rep.checks.size() != expected_checks) return false;
    std::map<std::string, int> flags;
    for (const auto& c : rep.checks)
        if (c.status == CheckStatus::flagged) ++flags[c.flag];
    return flags == expected_flags;
}

const CheckResult* find_check(const VerificationReport& rep, const std::string& name) {
    for (const auto& c : rep.checks)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace

int main() {
    const std::int64_t budget = default_enum_budget();
    const std::uint32_t workers = 3;

    // 1: brute-force minimum weight equals (q-b) q^{n-a-1} on the affine grid
    {
        VerificationReport rep = run_suite("min-distance", {}, budget, workers);
        report(1, suite_clean(rep, 8), "affine minimum distance, enumeration vs closed form",
               "8 grid points, all equal");
    }

    // 2: brute-force second weight on the grid, plus the two closed forms
    // agreeing on every admissible (q,n,d) with q <= 9, n <= 4
    {
        VerificationReport rep = run_suite("second-weight", {}, budget, workers);
        int rows = 0;
        bool formulas_agree = true;
        for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
            for (std::uint32_t n = 1; n <= 4; ++n)
                for (std::uint32_t d = 1; d < n * (q - 1); ++d) {
                    try {
                        second_weight_affine(q, n, d);  // throws if its two routes differ
                        ++rows;
                    } catch (const std::exception&) {
                        formulas_agree = false;
                    }
                }
        report(2, suite_clean(rep, 8) && formulas_agree && rows == 282,
               "affine second weight, enumeration and formula cross-check",
               "8 grid points; 282 formula rows, case tree == c-table");
    }

    // 3: block-structure characterization of minimum-weight words
    {
        VerificationReport rep = run_suite("delsarte", {}, budget, workers);
        report(3, suite_clean(rep, 3),
               "minimum-weight words are exactly the block-structured words",
               "(3,2,2), (4,2,2), (2,3,2): biconditional holds for every codeword");
    }

    // 4: dimension three-way agreement
    {
        VerificationReport rep = run_suite("dimension", {}, budget, workers);
        report(4, suite_clean(rep, 15), "dimension formula == monomial count == matrix rank",
               "8 affine + 7 projective grid points");
    }

    // 5: union-of-hyperplanes zero-count lower bound, exhaustive over d-subsets
    {
        std::vector<GridPoint> grid = {{3, 2, 2, CodeKind::affine},
                                       {3, 2, 3, CodeKind::affine},
                                       {4, 2, 2, CodeKind::affine},
                                       {2, 3, 3, CodeKind::affine}};
        VerificationReport rep = run_suite("lemma-mini", grid, budget, workers);
        report(5, suite_clean(rep, 4),
               "hyperplane union zeros >= d q^{n-1} - (d(d-1)/2) q^{n-2}",
               "all d-subsets at four grid points, no exceptions");
    }

    // 6: the quadratic norm form over GF(2) and the generated family
    VerificationReport mlem_rep = run_suite("mlem-norm", {}, budget, workers);
    {
        Field f2 = Field::from_order(2);
        Field f4 = Field::from_order(4);
        ReducedPoly g(f4, 2);
        g.add_term({1, 0}, 1);
        g.add_term({0, 1}, 2);
        ReducedPoly f = norm_form({ExtensionMap(f2, f4), g, 1});
        std::int64_t zeros = count_zeros_affine(f);
        MlemBound mb = mlem_bound(2, 2, 2, 2);
        bool example_ok = zeros == 1 && mb.generic == 2 && zeros < mb.generic;

        int family_rows = 0;
        bool family_ok = true;
        for (const auto& c : mlem_rep.checks)
            if (c.name.rfind("norm(", 0) == 0) {
                ++family_rows;
                family_ok = family_ok && c.status == CheckStatus::pass;
            }
        report(6, example_ok && family_ok && family_rows == 12,
               "norm forms meet the conjugate-product zero bounds",
               "reduced quadratic X1+X1X2+X2 has 1 zero < 2; 12 family rows over "
               "GF(2), GF(3), GF(5) with s in {2,3}");
    }

    // 7: hyperplane-union words sit strictly above norm-form words at (5,2,2)
    {
        const CheckResult* c =
            find_check(mlem_rep, "compare1(5,2,2) low-weight words vs norm word");
        bool ok = c != nullptr && c->status == CheckStatus::pass;
        report(7, ok, "union-of-hyperplanes zero counts exceed norm-form zero counts",
               c ? c->details : "check row missing");
    }

    // 8: effective Weil threshold for d = 2, exact integers only
    {
        WeilBounds w = weil_bounds(2);
        WeilBounds again = weil_bounds(2);
        bool ok = w.a_squared == 64 && w.b == 104976 && w.c == 104977 &&
                  w.q_min == 107602 && again.q_min == w.q_min;
        report(8, ok, "weil_bounds(2): A^2, B, C, and the integer threshold",
               "A^2=64, B=104976, C=104977, q_min=107602, stable across runs");
    }

    // 9: projective minimum distance and the (3,2,2) weight set
    {
        VerificationReport rep = run_suite("proj-min", {}, budget, workers);
        WeightDistribution dist = enum_spectrum({3, 2, 2, CodeKind::projective}, budget, workers);
        std::set<std::int64_t> weights;
        for (const auto& [w, c] : dist.counts)
            if (w > 0) weights.insert(w);
        ProjSecondBounds b = proj_second_weight_bounds(3, 2, 2);
        std::int64_t w2 = kth_weight(dist, 2);
        bool ok = suite_clean(rep, 14) && weights == std::set<std::int64_t>{6, 9, 12} &&
                  w2 == 9 && b.lower <= w2 && w2 <= b.upper;
        report(9, ok, "projective minimum distance and second-weight bracket",
               "7 grid points; weights at (3,2,2) = {6,9,12}, W2 = 9 in [6,9]");
    }

    // 10: maximal projective words contain a hyperplane with block-structured
    // affine complement, and only they do
    {
        std::vector<GridPoint> grid = {{2, 2, 2, CodeKind::projective},
                                       {3, 2, 2, CodeKind::projective}};
        VerificationReport rep = run_suite("proj-min", grid, budget, workers);
        report(10, suite_clean(rep, 4),
               "maximality characterization through hyperplane sections",
               "(2,2,2) and (3,2,2): biconditional holds for every nonzero word");
    }

    // 11: the high-degree regime achieves every zero count up to length - 1
    {
        bool ok = true;
        struct Pt {
            std::uint32_t q, n, d;
        };
        for (const auto& pt : {Pt{2, 2, 3}, Pt{3, 2, 5}}) {
            Field field = Field::from_order(pt.q);
            auto pts = proj_points(pt.q, pt.n);
            for (std::size_t nzeros = 0; nzeros + 1 <= pts.size(); ++nzeros) {
                std::vector<ProjPoint> zs(pts.begin(), pts.begin() + nzeros);
                HomogeneousPoly F = poly_with_zero_set(field, pt.n, pt.d, zs);
                ok = ok && count_zeros_proj(F) == static_cast<std::int64_t>(nzeros);
            }
        }
        WeightDistribution dist = enum_spectrum({2, 2, 3, CodeKind::projective}, budget, workers);
        ok = ok && kth_weight(dist, 1) == 1 && kth_weight(dist, 2) == 2 &&
             w1_proj(2, 2, 3) == 1;
        report(11, ok, "prescribed zero sets cover [0, length-1] past degree n(q-1)",
               "(2,2,3): N in [0,6]; (3,2,5): N in [0,12]; W1 = 1, W2 = 2 by enumeration");
    }

    // 12: the delta inequality across its whole validity range
    {
        VerificationReport rep = run_suite("delta", {}, budget, workers);
        bool ok = suite_clean(rep, 538,
                              {{flag_case_table_d2, 21}, {flag_delta_family_q2, 2}});
        report(12, ok, "delta >= 0 everywhere, vanishing families exactly 0, table agreement",
               "538 checks over q <= 9, n <= 4; 21 degree-2 rows flagged, not failed");
        note("binary saturated rows (2,3,3) and (2,4,4) have no case-table row because "
             "the previous degree splits with b = q-2 and a = n-1; they are flagged "
             "paper-delta-family-q2 with direct value 1 instead of entering the table "
             "comparison.");
    }

    // 13: S and T hyperplane patterns against the second-weight complement
    {
        VerificationReport rep = run_suite("st-configs", {}, budget, workers);
        bool ok = suite_clean(rep, 72, {{flag_nat_display, 12}, {flag_s_chain_d3, 6}});

        // frozen chain table: NS, the complement q^n - W2, and NT where n = 3
        struct Row {
            std::uint32_t q, n, d;
            std::int64_t ns, complement, nt;  // nt = -1 on n = 2 rows
        };
        Row rows[] = {
            {7, 2, 3, 19, 19, -1},   {7, 2, 4, 24, 25, -1},   {7, 2, 5, 29, 31, -1},
            {7, 3, 3, 133, 133, 127}, {7, 3, 4, 168, 175, 163}, {7, 3, 5, 203, 217, 199},
            {8, 2, 3, 22, 22, -1},   {8, 2, 4, 28, 29, -1},   {8, 2, 5, 34, 36, -1},
            {8, 2, 6, 40, 43, -1},   {8, 3, 3, 176, 176, 169}, {8, 3, 4, 224, 232, 218},
            {8, 3, 5, 272, 288, 267}, {8, 3, 6, 320, 344, 316}, {9, 2, 3, 25, 25, -1},
            {9, 2, 4, 32, 33, -1},   {9, 2, 5, 39, 41, -1},   {9, 2, 6, 46, 49, -1},
            {9, 2, 7, 53, 57, -1},   {9, 3, 3, 225, 225, 217}, {9, 3, 4, 288, 297, 281},
            {9, 3, 5, 351, 369, 345}, {9, 3, 6, 414, 441, 409}, {9, 3, 7, 477, 513, 473},
        };
        bool table_ok = true;
        for (const auto& r : rows) {
            Field field = Field::from_order(r.q);
            AffineForm e0, e1, e2;
            e0.coeffs.assign(r.n, 0);
            e1.coeffs.assign(r.n, 0);
            e2.coeffs.assign(r.n, 0);
            e0.coeffs[0] = 1;
            e1.coeffs[1] = 1;
            if (r.n >= 3) e2.coeffs[2] = 1;
            std::int64_t ns = arrangement_zeros(config_S(field, r.n, r.d, e0, e1));
            std::int64_t complement =
                checked_pow(r.q, r.n) - second_weight_affine(r.q, r.n, r.d);
            table_ok = table_ok && ns == r.ns && complement == r.complement;
            bool chain_claimed = r.q >= 2 * r.d - 3;
            if (chain_claimed)
                table_ok = table_ok && (r.d == 3 ? ns == complement : ns < complement);
            if (r.nt >= 0) {
                std::int64_t nt = arrangement_zeros(config_T(field, r.n, r.d, e0, e1, e2));
                table_ok = table_ok && nt == r.nt && nt < ns;
            }
        }
        report(13, ok && table_ok, "S and T pattern zero counts and the comparison chain",
               "72 checks on 7 <= q <= 9; 24 frozen rows re-derived");
        note("at d = 3 the S count equals q^n - W2 exactly for every q, so the middle "
             "comparison of the chain is an equality there, strict from d = 4 on; the "
             "six d = 3 rows are flagged paper-s-chain-d3.");
        note("the displayed T closed form collapses its two low-order terms; the "
             "arrangement count, the inclusion-exclusion form d q^{n-1} - (2d-3) "
             "q^{n-2} + (d-2) q^{n-3}, and the brute-force count agree on every row, "
             "so the twelve T rows are flagged paper-nat-display and pass on the "
             "corrected form.");
    }

    // 14: conjugate-product weight bound strictly above the second weight
    {
        VerificationReport rep = run_suite("nai", {}, budget, workers);
        bool ok = suite_clean(rep, 7, {{flag_nai_q2_boundary, 1}});
        report(14, ok, "conjugate-product words weigh more than the second weight",
               "6 grid points strict for q >= 3; (2,3,2) boundary 4 = 4 flagged");
        note("at q = 2 the bound meets the second weight without exceeding it; the "
             "strict claim is restricted to q >= 3 and the binary case is flagged "
             "nai-q2-boundary.");
    }

    std::printf("%s: %d of 14 criteria passed\n", failures == 0 ? "ACCEPTED" : "REJECTED",
                14 - failures);
    return failures == 0 ? 0 : 1;
}
