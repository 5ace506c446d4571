#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "grm/poly.hpp"

using grm::Field;
using grm::felem;
using grm::Monomial;
using grm::ReducedPoly;

TEST_CASE("terms iterate in graded-lex order") {
    Field f = Field::from_order(3);
    ReducedPoly p(f, 2);
    p.add_term({2, 0}, 1);
    p.add_term({0, 0}, 2);
    p.add_term({0, 1}, 1);
    p.add_term({1, 0}, 1);
    p.add_term({1, 1}, 2);
    std::vector<Monomial> order;
    for (const auto& [e, c] : p.terms()) order.push_back(e);
    REQUIRE(order == std::vector<Monomial>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}});
}

TEST_CASE("exponent folding x^q -> x") {
    Field f2 = Field::from_order(2);
    ReducedPoly p(f2, 1);
    p.add_term({2}, 1);
    REQUIRE(p.terms().count({1}) == 1);
    REQUIRE(p.total_degree() == 1);

    // X^3 = X over GF(3) as functions, X^4 = X^2
    Field f3 = Field::from_order(3);
    ReducedPoly q3(f3, 1);
    q3.add_term({3}, 1);
    REQUIRE(q3.terms().count({1}) == 1);
    ReducedPoly q4(f3, 1);
    q4.add_term({4}, 1);
    REQUIRE(q4.terms().count({2}) == 1);
    for (felem x = 0; x < 3; ++x) REQUIRE(q4.evaluate({x}) == f3.mul(x, x));
}

TEST_CASE("coefficient folding and cancellation") {
    Field f = Field::from_order(2);
    ReducedPoly p(f, 2);
    p.add_term({2, 0}, 1);
    p.add_term({1, 0}, 1);
    REQUIRE(p.is_zero());
    REQUIRE(p.total_degree() == -1);
}

TEST_CASE("ring operations agree with pointwise evaluation") {
    Field f = Field::from_order(4);
    ReducedPoly a(f, 2), b(f, 2);
    a.add_term({1, 0}, 2);
    a.add_term({0, 1}, 1);
    b.add_term({1, 1}, 3);
    b.add_term({0, 0}, 1);
    ReducedPoly sum = a + b;
    ReducedPoly prod = a * b;
    for (felem x = 0; x < 4; ++x)
        for (felem y = 0; y < 4; ++y) {
            REQUIRE(sum.evaluate({x, y}) == f.add(a.evaluate({x, y}), b.evaluate({x, y})));
            REQUIRE(prod.evaluate({x, y}) == f.mul(a.evaluate({x, y}), b.evaluate({x, y})));
        }
}

TEST_CASE("reduced monomial basis") {
    auto basis = grm::reduced_monomial_basis(2, 2, 1);
    REQUIRE(basis == std::vector<Monomial>{{0, 0}, {0, 1}, {1, 0}});
    // exponents stay below q and total degree at most d
    for (const auto& e : grm::reduced_monomial_basis(3, 3, 4)) {
        REQUIRE(grm::mono_degree(e) <= 4);
        for (auto x : e) REQUIRE(x <= 2);
    }
    REQUIRE(grm::reduced_monomial_basis(3, 3, 4).size() == 23);
    // full function space once d reaches n(q-1)
    REQUIRE(grm::reduced_monomial_basis(3, 2, 4).size() == 9);
}

TEST_CASE("homogeneous polynomials") {
    Field f = Field::from_order(3);
    grm::HomogeneousPoly F(f, 3, 2);
    F.add_term({2, 0, 0}, 1);
    F.add_term({0, 1, 1}, 2);
    REQUIRE_THROWS_AS(F.add_term({1, 0, 0}, 1), std::invalid_argument);

    // scaling law F(lambda x) = lambda^d F(x)
    for (felem l = 1; l < 3; ++l)
        for (felem x = 0; x < 3; ++x)
            for (felem y = 0; y < 3; ++y)
                for (felem z = 0; z < 3; ++z) {
                    felem lhs = F.evaluate({f.mul(l, x), f.mul(l, y), f.mul(l, z)});
                    felem rhs = f.mul(f.pow(l, 2), F.evaluate({x, y, z}));
                    REQUIRE(lhs == rhs);
                }

    REQUIRE(grm::homogeneous_monomial_basis(3, 2).size() == 6);
    REQUIRE(grm::homogeneous_monomial_basis(2, 5).size() == 6);
}

TEST_CASE("homogenize and dehomogenize") {
    Field f = Field::from_order(3);
    ReducedPoly g(f, 2);
    g.add_term({1, 0}, 1);
    g.add_term({0, 0}, 2);
    grm::HomogeneousPoly G = grm::homogenize(g, 2);
    REQUIRE(G.nvars() == 3);
    // the homogenizing variable sits at position 0; that chart recovers g
    REQUIRE(grm::dehomogenize(G, 0) == g);
    // degree cap below the total degree is rejected
    ReducedPoly h(f, 2);
    h.add_term({2, 1}, 1);
    REQUIRE_THROWS_AS(grm::homogenize(h, 2), std::invalid_argument);
}

TEST_CASE("affine forms") {
    Field f = Field::from_order(5);
    grm::AffineForm form{{2, 0, 1}, 3};
    REQUIRE_FALSE(form.is_zero_form());
    REQUIRE(form.evaluate(f, {1, 0, 0}) == 0);
    ReducedPoly p = form.to_poly(f);
    for (felem x = 0; x < 5; ++x)
        for (felem z = 0; z < 5; ++z)
            REQUIRE(p.evaluate({x, 0, z}) == form.evaluate(f, {x, 0, z}));
    REQUIRE(grm::AffineForm{{0, 0}, 4}.is_zero_form());
}
