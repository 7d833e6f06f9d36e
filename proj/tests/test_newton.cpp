#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <specinf/errors.hpp>
#include <specinf/newton.hpp>

#include <algorithm>

using namespace specinf;

static const std::vector<std::string> XY{"x", "y"};
static const std::vector<std::string> X{"x"};

TEST_CASE("hull of the P2 mirror is a triangle") {
    auto f = parse_laurent("x + y + x^-1*y^-1", XY);
    auto P = newton_polytope(f);
    CHECK(P.full_dimensional);
    REQUIRE(P.vertices.size() == 3);
    auto has_vertex = [&](ExponentVector v) {
        return std::find(P.vertices.begin(), P.vertices.end(), v) != P.vertices.end();
    };
    CHECK(has_vertex({1, 0}));
    CHECK(has_vertex({0, 1}));
    CHECK(has_vertex({-1, -1}));
    CHECK(P.facets.size() == 3);
    // 3 vertices + 3 edges
    CHECK(P.faces.size() == 6);
}

TEST_CASE("one-variable hulls are segments") {
    auto P = newton_polytope(parse_laurent("x + x^-1", X));
    REQUIRE(P.vertices.size() == 2);
    CHECK(P.full_dimensional);
    auto Q = newton_polytope(parse_laurent("x^2 + x^-1", X));
    REQUIRE(Q.vertices.size() == 2);
    CHECK(normalized_volume(Q) == 3);
}

TEST_CASE("interior monomials are not vertices") {
    auto f = parse_laurent("x + y + x^-1*y^-1 + 1", XY); // constant term interior
    CHECK(newton_polytope(f).vertices.size() == 3);
}

TEST_CASE("is_convenient") {
    CHECK(is_convenient(parse_laurent("x + y + x^-1*y^-1", XY)));
    CHECK(!is_convenient(parse_laurent("x + y", XY)));   // 0 on the boundary/outside
    CHECK(is_convenient(parse_laurent("x + x^-1", X)));
    CHECK(!is_convenient(parse_laurent("x + x^2", X)));
    CHECK(is_convenient(parse_laurent("x + x^-1 + y + y^-1", XY)));
}

TEST_CASE("newton_degree examples") {
    auto P2 = newton_polytope(parse_laurent("x + y + x^-1*y^-1", XY));
    CHECK(newton_degree(P2, {0, 0}) == Rational(0));
    CHECK(newton_degree(P2, {1, 0}) == Rational(1));
    CHECK(newton_degree(P2, {1, 1}) == rational(2));
    CHECK(newton_degree(P2, {-1, -1}) == Rational(1));

    auto D = newton_polytope(parse_laurent("x + x^-1 + y + y^-1", XY));
    CHECK(newton_degree(D, {1, 1}) == rational(2));
    CHECK(newton_degree(D, {2, 0}) == rational(2));

    auto S = newton_polytope(parse_laurent("x^2 + x^-1", X));
    CHECK(newton_degree(S, {1}) == rational(1, 2));
    CHECK(newton_degree(S, {-1}) == Rational(1));
    CHECK(newton_degree(S, {2}) == Rational(1));
}

TEST_CASE("newton_degree is subadditive and homogeneous") {
    auto P = newton_polytope(parse_laurent("x + y + x^-1*y^-1", XY));
    for (long i = -3; i <= 3; ++i)
        for (long j = -3; j <= 3; ++j) {
            ExponentVector m{i, j};
            for (long k = 0; k <= 3; ++k) CHECK(newton_degree(P, k * m) == k * newton_degree(P, m));
            for (long a = -2; a <= 2; ++a)
                for (long b = -2; b <= 2; ++b) {
                    ExponentVector mp{a, b};
                    CHECK(newton_degree(P, m + mp) <= newton_degree(P, m) + newton_degree(P, mp));
                }
        }
}

TEST_CASE("normalized volumes") {
    CHECK(normalized_volume(newton_polytope(parse_laurent("x + y + x^-1*y^-1", XY))) == 3);
    CHECK(normalized_volume(newton_polytope(parse_laurent("x + x^-1", X))) == 2);
    CHECK(normalized_volume(newton_polytope(parse_laurent("x + x^-1 + y + y^-1", XY))) == 4);
}

TEST_CASE("lattice_points") {
    auto S = newton_polytope(parse_laurent("x + x^-1", X));
    CHECK(lattice_points(S, 1).size() == 3);  // -1, 0, 1
    CHECK(lattice_points(S, 2).size() == 5);
    CHECK(lattice_points(S, 0).size() == 1);  // just the origin
    auto P2 = newton_polytope(parse_laurent("x + y + x^-1*y^-1", XY));
    CHECK(lattice_points(P2, 1).size() == 4); // 3 vertices + origin
    // scale 2: points m with nu(m) <= 2
    auto pts = lattice_points(P2, 2);
    for (const auto& m : pts) CHECK(newton_degree(P2, m) <= rational(2));
    CHECK(pts.size() == 10); // Ehrhart of the reflexive triangle: 1 + 3k(k+1)/2
}

TEST_CASE("is_nondegenerate") {
    CHECK(is_nondegenerate(parse_laurent("x + y + x^-1*y^-1", XY)));
    CHECK(is_nondegenerate(parse_laurent("x + x^-1", X)));
    CHECK(!is_nondegenerate(parse_laurent("x^2 + 2*x*y + y^2 + x^-1*y^-1", XY)));
    CHECK(is_nondegenerate(parse_laurent("x^2 + x^-1", X)));
    CHECK(is_nondegenerate(parse_laurent("x + x^-1 + y + y^-1", XY)));
}

TEST_CASE("degenerate inputs raise") {
    CHECK_THROWS_AS(newton_polytope(LaurentPolynomial(2)), EmptyPolynomial);
    auto P = newton_polytope(parse_laurent("x + y", XY));
    CHECK(!P.full_dimensional); // hull of two points is a segment in Z^2
    CHECK_THROWS_AS(newton_degree(P, {1, 0}), Error);
}
