#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <specinf/exponent.hpp>

#include <algorithm>
#include <vector>

using namespace specinf;

TEST_CASE("vector arithmetic and norms") {
    ExponentVector a{2, -1, 0}, b{1, 1, 1};
    CHECK(a + b == ExponentVector{3, 0, 1});
    CHECK(a - b == ExponentVector{1, -2, -1});
    CHECK(3 * a == ExponentVector{6, -3, 0});
    CHECK(total_degree(a) == 1);
    CHECK(plus_norm(a) == 2);
    CHECK(plus_norm(ExponentVector{-3, -1}) == 0);
    CHECK(all_nonnegative(b));
    CHECK(!all_nonnegative(a));
}

TEST_CASE("grlex order") {
    // degree first, then lex
    CHECK(monomial_less({1, 0}, {0, 2}, MonomialOrder::Grlex));
    CHECK(monomial_less({0, 2}, {1, 1}, MonomialOrder::Grlex));
    CHECK(monomial_less({1, 1}, {2, 0}, MonomialOrder::Grlex));
    CHECK(!monomial_less({2, 0}, {2, 0}, MonomialOrder::Grlex));
}

TEST_CASE("grevlex order") {
    // degree first, then reverse lex on the last differing entry
    CHECK(monomial_less({0, 2}, {1, 1}, MonomialOrder::Grevlex));
    CHECK(monomial_less({1, 1}, {2, 0}, MonomialOrder::Grevlex));
    // classic grlex/grevlex split in 3 variables: x z^2 vs y^3... use
    // x^2 y z vs x y^3: same degree 4; grevlex compares last exponents.
    CHECK(monomial_less({2, 1, 1}, {1, 3, 0}, MonomialOrder::Grevlex));
    CHECK(monomial_less({1, 3, 0}, {2, 1, 1}, MonomialOrder::Grlex));
}

TEST_CASE("lex order ignores degree") {
    CHECK(monomial_less({0, 5}, {1, 0}, MonomialOrder::Lex));
    CHECK(monomial_less({1, 0}, {1, 1}, MonomialOrder::Lex));
    CHECK(!monomial_less({2, 0}, {1, 9}, MonomialOrder::Lex));
}

TEST_CASE("orders are strict total orders on a sample grid") {
    std::vector<ExponentVector> grid;
    for (long i = 0; i <= 3; ++i)
        for (long j = 0; j <= 3; ++j) grid.push_back({i, j});
    for (auto ord : {MonomialOrder::Grlex, MonomialOrder::Grevlex, MonomialOrder::Lex}) {
        for (const auto& a : grid)
            for (const auto& b : grid) {
                if (a == b) {
                    CHECK(!monomial_less(a, b, ord));
                } else {
                    CHECK(monomial_less(a, b, ord) != monomial_less(b, a, ord));
                }
                for (const auto& c : grid)
                    if (monomial_less(a, b, ord) && monomial_less(b, c, ord))
                        CHECK(monomial_less(a, c, ord));
            }
        // multiplicative: a < b => a+c < b+c
        for (const auto& a : grid)
            for (const auto& b : grid)
                if (monomial_less(a, b, ord))
                    CHECK(monomial_less(a + ExponentVector{1, 2}, b + ExponentVector{1, 2}, ord));
    }
}

TEST_CASE("elimination block order") {
    // block = 1: any positive power of the first variable beats none
    CHECK(elimination_less({0, 7}, {1, 0}, 1, MonomialOrder::Grevlex));
    CHECK(!elimination_less({1, 0}, {0, 7}, 1, MonomialOrder::Grevlex));
    // equal block degree: falls back to the inner order on full vectors
    CHECK(elimination_less({1, 0}, {1, 1}, 1, MonomialOrder::Grevlex));
}

TEST_CASE("GrlexDescending sorts leading term first") {
    std::vector<ExponentVector> v{{0, 0}, {2, 0}, {1, 1}, {0, 1}};
    std::sort(v.begin(), v.end(), GrlexDescending{});
    CHECK(v.front() == ExponentVector{2, 0});
    CHECK(v.back() == ExponentVector{0, 0});
}
