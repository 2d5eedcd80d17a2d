#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace yangian;

namespace {

// Dual Coxeter number and lacing number per type, as a table independent of build_cartan.
std::pair<int, int> hdual_and_lacing(family f, int r)
{
    switch (f) {
    case family::A: return {r + 1, 1};
    case family::B: return {2 * r - 1, 2};
    case family::C: return {r + 1, 2};
    case family::D: return {2 * r - 2, 1};
    case family::E: return {r == 6 ? 12 : r == 7 ? 18 : 30, 1};
    case family::F: return {9, 2};
    case family::G: return {4, 3};
    }
    return {0, 0};
}

} // namespace

TEST_CASE("A2 datum", "[cartan]")
{
    const cartan_datum c = build_cartan(family::A, 2);
    CHECK(c.two_kappa == 3);
    CHECK(c.d(1) == 1);
    CHECK(c.d(2) == 1);
    CHECK(c.star(1) == 2);
    CHECK(c.star(2) == 1);
    CHECK(c.simply_laced);
}

TEST_CASE("G2 has 2kappa = 12", "[cartan]")
{
    const cartan_datum c = build_cartan(family::G, 2);
    CHECK(c.two_kappa == 12);
    CHECK_FALSE(c.simply_laced);
}

TEST_CASE("D4 has trivial star and 2kappa = 6", "[cartan]")
{
    const cartan_datum c = build_cartan(family::D, 4);
    CHECK(c.two_kappa == 6);
    for (int i = 1; i <= 4; ++i)
        CHECK(c.star(i) == i);
    CHECK(verify_star_map(c).empty());
}

TEST_CASE("B2 uses Bourbaki labels", "[cartan]")
{
    const cartan_datum c = build_cartan(family::B, 2);
    CHECK(c.d(1) == 2);
    CHECK(c.d(2) == 1);
    CHECK(c.a(1, 2) == -1);
    CHECK(c.a(2, 1) == -2);
    CHECK(c.two_kappa == 6);
}

TEST_CASE("invalid types are rejected", "[cartan]")
{
    CHECK_THROWS_AS(build_cartan(family::A, 0), invalid_type);
    CHECK_THROWS_AS(build_cartan(family::B, 1), invalid_type);
    CHECK_THROWS_AS(build_cartan(family::C, 1), invalid_type);
    CHECK_THROWS_AS(build_cartan(family::D, 3), invalid_type);
    CHECK_THROWS_AS(build_cartan(family::E, 5), invalid_type);
    CHECK_THROWS_AS(build_cartan(family::E, 9), invalid_type);
    CHECK_THROWS_AS(build_cartan(family::F, 3), invalid_type);
    CHECK_THROWS_AS(build_cartan(family::G, 3), invalid_type);
    CHECK_THROWS_AS(build_cartan('X', 2), invalid_type);
}

TEST_CASE("catalog has 32 types up to rank 8", "[cartan]")
{
    CHECK(catalog(8).size() == 32);
}

TEST_CASE("catalog invariants", "[cartan]")
{
    for (const auto& [f, r] : catalog(8)) {
        const cartan_datum c = build_cartan(f, r);
        INFO(c.name());
        CHECK(check_invariants(c).empty());
        const auto [h, lacing] = hdual_and_lacing(f, r);
        CHECK(c.dual_coxeter == h);
        CHECK(c.two_kappa == lacing * h);
        for (int i = 1; i <= r; ++i) {
            CHECK(c.a(i, i) == 2);
            CHECK(c.star(c.star(i)) == i);
            CHECK(c.d(c.star(i)) == c.d(i));
            for (int j = 1; j <= r; ++j) {
                if (i != j)
                    CHECK(c.a(i, j) <= 0);
                CHECK(c.d(i) * c.a(i, j) == c.d(j) * c.a(j, i));
            }
        }
        if (c.simply_laced) {
            CHECK(c.two_kappa == c.dual_coxeter);
            for (int i = 1; i <= r; ++i)
                CHECK(c.d(i) == 1);
        }
        CHECK(verify_star_map(c).empty());
    }
}

TEST_CASE("star tables for A, odd D and E6", "[cartan]")
{
    const cartan_datum a5 = build_cartan(family::A, 5);
    for (int i = 1; i <= 5; ++i)
        CHECK(a5.star(i) == 6 - i);
    const cartan_datum d5 = build_cartan(family::D, 5);
    CHECK(d5.star(4) == 5);
    CHECK(d5.star(5) == 4);
    CHECK(d5.star(3) == 3);
    const cartan_datum e6 = build_cartan(family::E, 6);
    CHECK(e6.star(1) == 6);
    CHECK(e6.star(3) == 5);
    CHECK(e6.star(2) == 2);
    CHECK(e6.star(4) == 4);
}
