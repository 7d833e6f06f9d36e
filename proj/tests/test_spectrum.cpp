#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <specinf/errors.hpp>
#include <specinf/spectrum.hpp>

using namespace specinf;

static const std::vector<std::string> XY{"x", "y"};
static const std::vector<std::string> X{"x"};

TEST_CASE("jacobian_ideal clears the log derivatives") {
    auto f = parse_laurent("x + x^-1", X);
    auto J = jacobian_ideal(f);
    REQUIRE(J.generators.size() == 1);
    CHECK(J.generators[0] == parse_laurent("x^2 - 1", X));

    auto g = parse_laurent("x + y + x^-1*y^-1", XY);
    auto J2 = jacobian_ideal(g);
    REQUIRE(J2.generators.size() == 2);
    CHECK(J2.generators[0] == parse_laurent("x^2*y - 1", XY));
    CHECK(J2.generators[1] == parse_laurent("x*y^2 - 1", XY));
}

TEST_CASE("milnor numbers equal the normalized volume") {
    CHECK(milnor_number(parse_laurent("x + x^-1", X)) == 2);
    CHECK(milnor_number(parse_laurent("x + y + x^-1*y^-1", XY)) == 3);
    CHECK(milnor_number(parse_laurent("x^2 + x^-1", X)) == 3);
    CHECK(milnor_number(parse_laurent("x + x^-1 + y + y^-1", XY)) == 4);
}

TEST_CASE("hypothesis violations raise") {
    CHECK_THROWS_AS(jacobian_quotient(parse_laurent("x + y", XY)), NotConvenient);
    CHECK_THROWS_AS(jacobian_quotient(parse_laurent("x^2 + 2*x*y + y^2 + x^-1*y^-1", XY)),
                    Degenerate);
    // skipping the check leaves a computable (wrong-hypothesis) quotient or throws later;
    // here the saturated quotient is still finite
    auto Q = jacobian_quotient(parse_laurent("x^2 + 2*x*y + y^2 + x^-1*y^-1", XY),
                               MonomialOrder::Grevlex, false);
    CHECK(Q.dimension > 0);
}

TEST_CASE("spectrum of x + 1/x") {
    auto S = spectrum_at_infinity(parse_laurent("x + x^-1", X));
    REQUIRE(S.entries.size() == 2);
    CHECK(S.entries[0] == std::pair<Rational, long>{Rational(0), 1});
    CHECK(S.entries[1] == std::pair<Rational, long>{Rational(1), 1});
    CHECK(S.total_multiplicity() == 2);
    CHECK(check_spectrum_symmetry(S));
}

TEST_CASE("spectrum of the P2 mirror is 0,1,2") {
    auto S = spectrum_at_infinity(parse_laurent("x + y + x^-1*y^-1", XY));
    REQUIRE(S.entries.size() == 3);
    CHECK(S.multiplicity(Rational(0)) == 1);
    CHECK(S.multiplicity(Rational(1)) == 1);
    CHECK(S.multiplicity(rational(2)) == 1);
    CHECK(check_spectrum_symmetry(S));
}

TEST_CASE("spectrum of x^2 + 1/x has a half-integer") {
    auto S = spectrum_at_infinity(parse_laurent("x^2 + x^-1", X));
    CHECK(S.total_multiplicity() == 3);
    CHECK(S.multiplicity(Rational(0)) == 1);
    CHECK(S.multiplicity(rational(1, 2)) == 1);
    CHECK(S.multiplicity(Rational(1)) == 1);
    CHECK(check_spectrum_symmetry(S));
}

TEST_CASE("spectrum of the P1xP1 mirror") {
    auto S = spectrum_at_infinity(parse_laurent("x + x^-1 + y + y^-1", XY));
    CHECK(S.total_multiplicity() == 4);
    CHECK(S.multiplicity(Rational(0)) == 1);
    CHECK(S.multiplicity(Rational(1)) == 2);
    CHECK(S.multiplicity(rational(2)) == 1);
}

TEST_CASE("check_spectrum_symmetry rejects asymmetric tables") {
    SpectrumTable bad;
    bad.arity = 1;
    bad.entries = {{Rational(0), 2}, {Rational(1), 1}};
    CHECK(!check_spectrum_symmetry(bad));
    SpectrumTable good;
    good.arity = 2;
    good.entries = {{rational(1, 2), 1}, {rational(3, 2), 1}};
    CHECK(check_spectrum_symmetry(good));
}

TEST_CASE("spectral_multiplicity reads delta at alpha + n - p") {
    auto S = spectrum_at_infinity(parse_laurent("x + y + x^-1*y^-1", XY));
    CHECK(spectral_multiplicity(S, Rational(0), 2) == 1); // delta_0
    CHECK(spectral_multiplicity(S, Rational(0), 1) == 1); // delta_1
    CHECK(spectral_multiplicity(S, Rational(0), 0) == 1); // delta_2
    CHECK(spectral_multiplicity(S, Rational(0), 3) == 0);
    CHECK(spectral_multiplicity(S, rational(1, 2), 2) == 0);

    auto T = spectrum_at_infinity(parse_laurent("x^2 + x^-1", X));
    CHECK(spectral_multiplicity(T, rational(1, 2), 1) == 1); // delta_{1/2}
    CHECK(spectral_multiplicity(T, rational(1, 2), 0) == 0);
}

TEST_CASE("invariance under monomial change of coordinates") {
    auto f = parse_laurent("x + y + x^-1*y^-1", XY);
    auto S = spectrum_at_infinity(f);
    // GL(2,Z): x -> xy, y -> y (exponents through U = [[1,0],[1,1]])
    auto g = apply_exponent_matrix(f, {{1, 0}, {1, 1}});
    auto T = spectrum_at_infinity(g);
    CHECK(S.entries == T.entries);
    // and a reflection
    auto h = apply_exponent_matrix(f, {{0, 1}, {1, 0}});
    CHECK(spectrum_at_infinity(h).entries == S.entries);
}

TEST_CASE("order independence") {
    for (const char* s : {"x + x^-1", "x^2 + x^-1", "x + y + x^-1*y^-1",
                          "x + x^-1 + y + y^-1", "2*x + 3*y + 5*x^-1*y^-1"}) {
        bool has_y = std::string(s).find('y') != std::string::npos;
        auto f = parse_laurent(s, has_y ? XY : X);
        auto a = spectrum_at_infinity(f, MonomialOrder::Grevlex);
        auto b = spectrum_at_infinity(f, MonomialOrder::Lex);
        CHECK(a.entries == b.entries);
    }
}
