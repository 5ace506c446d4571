#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "grm/constructions.hpp"

using grm::AffineForm;
using grm::Arrangement;
using grm::Field;
using grm::felem;
using grm::HyperplaneBlock;
using grm::ReducedPoly;

namespace {

AffineForm axis(std::uint32_t n, std::uint32_t i) {
    AffineForm f;
    f.coeffs.assign(n, 0);
    f.coeffs[i] = 1;
    return f;
}

}  // namespace

TEST_CASE("arrangement zero counts, closed form versus brute force") {
    struct Case {
        std::uint32_t q, n;
        std::vector<std::vector<felem>> shifts;
        std::int64_t zeros;
    };
    Case cases[] = {
        {3, 2, {{0, 1}, {0}}, 7},
        {3, 2, {{0, 1}}, 6},
        {4, 3, {{0, 1}, {0, 1, 2}, {0}}, 58},
        {5, 2, {{0, 1, 2, 3}}, 20},
    };
    for (const auto& c : cases) {
        CAPTURE(c.q, c.n);
        Field field = Field::from_order(c.q);
        Arrangement arr{field, c.n, {}};
        for (std::size_t i = 0; i < c.shifts.size(); ++i)
            arr.blocks.push_back(HyperplaneBlock{axis(c.n, static_cast<std::uint32_t>(i)),
                                                 c.shifts[i]});
        REQUIRE(grm::arrangement_zeros(arr) == c.zeros);
        ReducedPoly f = grm::arrangement_poly(arr);
        REQUIRE(grm::count_zeros_affine(f) == c.zeros);
    }
}

TEST_CASE("arrangement validation") {
    Field f3 = Field::from_order(3);
    // shift outside the field
    Arrangement bad1{f3, 2, {HyperplaneBlock{axis(2, 0), {0, 3}}}};
    REQUIRE_THROWS_AS(grm::arrangement_poly(bad1), std::invalid_argument);
    // duplicate shifts
    Arrangement bad2{f3, 2, {HyperplaneBlock{axis(2, 0), {1, 1}}}};
    REQUIRE_THROWS_AS(grm::arrangement_poly(bad2), std::invalid_argument);
    // dependent directions
    AffineForm sum;
    sum.coeffs = {1, 1};
    Arrangement bad3{f3, 2,
                     {HyperplaneBlock{axis(2, 0), {0}}, HyperplaneBlock{axis(2, 1), {0}},
                      HyperplaneBlock{sum, {0}}}};
    REQUIRE_THROWS_AS(grm::arrangement_poly(bad3), std::invalid_argument);
}

TEST_CASE("minimum weight words hit the minimum distance") {
    struct Point {
        std::uint32_t q, n, d;
    };
    for (const auto& gp : {Point{2, 3, 2}, Point{3, 2, 2}, Point{4, 2, 3}, Point{5, 2, 2}}) {
        CAPTURE(gp.q, gp.n, gp.d);
        Field field = Field::from_order(gp.q);
        grm::SplitAB ab = grm::split_ab(gp.d, gp.q);
        std::uint32_t nforms = ab.b > 0 ? ab.a + 1 : ab.a;
        std::vector<AffineForm> dirs;
        for (std::uint32_t i = 0; i < nforms; ++i) dirs.push_back(axis(gp.n, i));
        std::vector<felem> a_shifts(ab.a, 0);
        std::vector<felem> b_shifts;
        for (std::uint32_t i = 0; i < ab.b; ++i) b_shifts.push_back(static_cast<felem>(i));
        ReducedPoly f = grm::maximal_codeword(field, gp.n, gp.d, dirs, 1, a_shifts, b_shifts);
        REQUIRE(f.total_degree() <= static_cast<int>(gp.d));
        std::int64_t weight =
            grm::checked_pow(gp.q, gp.n) - grm::count_zeros_affine(f);
        REQUIRE(weight == grm::min_distance_affine(gp.q, gp.n, gp.d));
        REQUIRE(grm::is_delsarte_maximal(f, gp.d));
    }
}

TEST_CASE("minimum weight word argument validation") {
    Field f5 = Field::from_order(5);
    // d = 2 over GF(5) splits as a = 0, b = 2: one direction, two shifts
    REQUIRE_THROWS_AS(grm::maximal_codeword(f5, 2, 2, {axis(2, 0)}, 1, {0}, {0, 1}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(grm::maximal_codeword(f5, 2, 2, {axis(2, 0)}, 1, {}, {0, 0}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(grm::maximal_codeword(f5, 2, 2, {axis(2, 0)}, 0, {}, {0, 1}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(
        grm::maximal_codeword(f5, 2, 2, {axis(2, 0), axis(2, 1)}, 1, {}, {0, 1}),
        std::invalid_argument);
}

TEST_CASE("S and T hyperplane patterns") {
    Field f7 = Field::from_order(7);
    SECTION("zero counts at q = 7") {
        Arrangement s23 = grm::config_S(f7, 2, 3, axis(2, 0), axis(2, 1));
        REQUIRE(grm::arrangement_zeros(s23) == 19);
        REQUIRE(grm::count_zeros_affine(grm::arrangement_poly(s23)) == 19);

        Arrangement s24 = grm::config_S(f7, 2, 4, axis(2, 0), axis(2, 1));
        REQUIRE(grm::arrangement_zeros(s24) == 24);

        Arrangement t33 = grm::config_T(f7, 3, 3, axis(3, 0), axis(3, 1), axis(3, 2));
        REQUIRE(grm::arrangement_zeros(t33) == 127);
        REQUIRE(grm::count_zeros_affine(grm::arrangement_poly(t33)) == 127);
    }
    SECTION("S touches the second weight exactly at d = 3") {
        std::int64_t complement = grm::checked_pow(7, 2) - grm::second_weight_affine(7, 2, 3);
        REQUIRE(complement == 19);
        // and stays strictly below it from d = 4 on
        REQUIRE(grm::checked_pow(7, 2) - grm::second_weight_affine(7, 2, 4) == 25);
    }
    SECTION("T sits strictly below S") {
        Arrangement s33 = grm::config_S(f7, 3, 3, axis(3, 0), axis(3, 1));
        REQUIRE(grm::arrangement_zeros(s33) == 133);
        REQUIRE(127 < 133);
    }
    SECTION("range validation") {
        REQUIRE_THROWS_AS(grm::config_S(f7, 2, 6, axis(2, 0), axis(2, 1)),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(grm::config_S(f7, 2, 2, axis(2, 0), axis(2, 1)),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(grm::config_T(f7, 2, 3, axis(2, 0), axis(2, 1), axis(2, 1)),
                          std::invalid_argument);
    }
}

TEST_CASE("norm form construction") {
    Field f2 = Field::from_order(2);
    Field f4 = Field::from_order(4);
    grm::ExtensionMap inc(f2, f4);

    // g = X1 + x X2 with x the generator of GF(4)
    ReducedPoly g(f4, 2);
    g.add_term({1, 0}, 1);
    g.add_term({0, 1}, 2);
    ReducedPoly f = grm::norm_form({inc, g, 1});

    ReducedPoly expect(f2, 2);
    expect.add_term({1, 0}, 1);
    expect.add_term({1, 1}, 1);
    expect.add_term({0, 1}, 1);
    REQUIRE(f == expect);
    REQUIRE(grm::count_zeros_affine(f) == 1);

    // norm values are Galois fixed, so f agrees with the norm of g pointwise
    for (felem x = 0; x < 2; ++x)
        for (felem y = 0; y < 2; ++y) {
            felem gv = g.evaluate({x, y});
            felem nv = f4.mul(gv, f4.pow(gv, 2));
            REQUIRE(f.evaluate({x, y}) == nv);
        }
}

TEST_CASE("norm form validation") {
    Field f2 = Field::from_order(2);
    Field f4 = Field::from_order(4);
    grm::ExtensionMap inc(f2, f4);

    ReducedPoly base_only(f4, 2);
    base_only.add_term({1, 0}, 1);
    REQUIRE_THROWS_AS(grm::norm_form({inc, base_only, 1}), std::invalid_argument);

    ReducedPoly zero(f4, 2);
    REQUIRE_THROWS_AS(grm::norm_form({inc, zero, 1}), std::invalid_argument);

    ReducedPoly g(f4, 2);
    g.add_term({1, 0}, 1);
    g.add_term({0, 1}, 2);
    REQUIRE_THROWS_AS(grm::norm_form({inc, g, 2}), std::invalid_argument);
}

TEST_CASE("normalized direction enumeration") {
    auto dirs = grm::detail::normalized_directions(3, 2);
    REQUIRE(dirs.size() == 4);
    for (const auto& dir : dirs) {
        std::size_t lead = 0;
        while (lead < dir.size() && dir[lead] == 0) ++lead;
        REQUIRE(lead < dir.size());
        REQUIRE(dir[lead] == 1);
    }
    REQUIRE(grm::detail::normalized_directions(4, 3).size() == 21);
}

TEST_CASE("hyperplane union recognizer") {
    Field f3 = Field::from_order(3);
    // X1(X1 - 1): two parallel hyperplanes
    ReducedPoly f(f3, 2);
    f.add_term({2, 0}, 1);
    f.add_term({1, 0}, 2);
    REQUIRE(grm::is_union_of_d_hyperplanes(f, 2));
    REQUIRE_FALSE(grm::is_union_of_d_hyperplanes(f, 1));

    // X1 X2: two transversal hyperplanes
    ReducedPoly g(f3, 2);
    g.add_term({1, 1}, 1);
    REQUIRE(grm::is_union_of_d_hyperplanes(g, 2));

    // X1^2 + X2^2 + 1 has four zeros and contains no hyperplane
    ReducedPoly conic(f3, 2);
    conic.add_term({2, 0}, 1);
    conic.add_term({0, 2}, 1);
    conic.add_term({0, 0}, 1);
    REQUIRE(grm::count_zeros_affine(conic) == 4);
    REQUIRE_FALSE(grm::is_union_of_d_hyperplanes(conic, 2));
}

TEST_CASE("block structure recognizer") {
    Field f3 = Field::from_order(3);
    // d = 2 over GF(3) splits as one full parallel block; X1 X2 uses two
    // directions and must be rejected even though it is a hyperplane union
    ReducedPoly g(f3, 2);
    g.add_term({1, 1}, 1);
    REQUIRE_FALSE(grm::is_delsarte_maximal(g, 2));

    ReducedPoly f(f3, 2);
    f.add_term({2, 0}, 1);
    f.add_term({1, 0}, 2);
    REQUIRE(grm::is_delsarte_maximal(f, 2));

    ReducedPoly conic(f3, 2);
    conic.add_term({2, 0}, 1);
    conic.add_term({0, 2}, 1);
    conic.add_term({0, 0}, 1);
    REQUIRE_FALSE(grm::is_delsarte_maximal(conic, 2));

    ReducedPoly zero(f3, 2);
    REQUIRE_FALSE(grm::is_delsarte_maximal(zero, 2));
}

TEST_CASE("evaluation matrix rank matches the monomial count") {
    Field f3 = Field::from_order(3);
    auto basis = grm::reduced_monomial_basis(3, 2, 2);
    std::vector<std::vector<felem>> rows;
    for (const auto& e : basis) {
        std::vector<felem> row;
        for (felem x = 0; x < 3; ++x)
            for (felem y = 0; y < 3; ++y) {
                felem v = f3.mul(f3.pow(x, e[0]), f3.pow(y, e[1]));
                row.push_back(v);
            }
        rows.push_back(row);
    }
    REQUIRE(grm::detail::form_rank(f3, rows) == basis.size());
}
