#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace yangian;

TEST_CASE("simple reflections", "[coxeter]")
{
    const cartan_datum a1 = build_cartan(family::A, 1);
    CHECK(simple_reflection(a1, 1, simple_root(a1, 1)) == root_vector{-1});
    const cartan_datum a2 = build_cartan(family::A, 2);
    CHECK(simple_reflection(a2, 1, simple_root(a2, 2)) == root_vector{1, 1});

    std::mt19937 rng(1);
    std::uniform_int_distribution<long> coord(-5, 5);
    for (const auto& [f, r] : catalog(8)) {
        const cartan_datum c = build_cartan(f, r);
        for (int trial = 0; trial < 100; ++trial) {
            root_vector v;
            for (int k = 0; k < r; ++k)
                v.push_back(coord(rng));
            for (int i = 1; i <= r; ++i)
                CHECK(simple_reflection(c, i, simple_reflection(c, i, v)) == v);
        }
    }
}

TEST_CASE("sink and source classes", "[coxeter]")
{
    const coxeter_data a1 = coxeter_setup(build_cartan(family::A, 1), 1);
    CHECK(a1.sinks == std::set<int>{1});
    CHECK(a1.sources.empty());
    CHECK(a1.gamma == root_vector{1});

    const coxeter_data a2 = coxeter_setup(build_cartan(family::A, 2), 1);
    CHECK(a2.sinks == std::set<int>{1});
    CHECK(a2.sources == std::set<int>{2});
    CHECK(a2.gamma == root_vector{1, 1});

    const coxeter_data d4 = coxeter_setup(build_cartan(family::D, 4), 2);
    CHECK(d4.sinks == std::set<int>{2});
    CHECK(d4.sources == std::set<int>{1, 3, 4});
    CHECK(d4.gamma == root_vector{1, 1, 1, 1});

    CHECK_THROWS_AS(coxeter_setup(build_cartan(family::B, 2), 1), unsupported_type);
}

TEST_CASE("v_ij from the Coxeter element", "[coxeter]")
{
    const cartan_datum a1 = build_cartan(family::A, 1), a2 = build_cartan(family::A, 2);
    CHECK(vij_via_coxeter(a1, 1, 1, 1) == 1);
    CHECK(vij_via_coxeter(a2, 1, 2, 2) == 1);
    CHECK(vij_via_coxeter(a2, 1, 1, 2) == 0);
}

TEST_CASE("Coxeter positivity", "[coxeter]")
{
    for (const auto& [f, r] : std::vector<std::pair<family, int>>{{family::A, 2}, {family::D, 4}, {family::E, 6}})
        CHECK(verify_fuj_her(qcartan_data(build_cartan(f, r))).ok());
    for (const auto& [f, r] : catalog(8)) {
        const qcartan_data qc(build_cartan(f, r));
        if (!qc.datum().simply_laced)
            continue;
        const fuj_her_report rep = verify_fuj_her(qc);
        INFO(qc.datum().name() << ": " << rep.detail);
        CHECK(rep.ok());
    }
}

TEST_CASE("longest element", "[coxeter]")
{
    for (const auto& [f, r] : catalog(8)) {
        const cartan_datum c = build_cartan(f, r);
        const auto roots = oracle::all_roots(c);
        const auto word = longest_element_word(c);
        INFO(c.name());
        // A reduced word for w0 has one letter per positive root.
        CHECK(word.size() * 2 == roots.size());
        // w0 sends every positive root to a negative root.
        for (const auto& v : roots) {
            if (!is_positive_root_vector(v))
                continue;
            root_vector image = apply_word(c, word, v);
            for (auto& x : image)
                x = -x;
            CHECK(is_positive_root_vector(image));
        }
        CHECK(verify_star_map(c).empty());
    }
}
