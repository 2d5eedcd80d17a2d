#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace yangian;

namespace {

rational half(long k)
{
    return make_rational(k, 2);
}

point_set points(std::initializer_list<rational> xs)
{
    point_set out;
    for (const auto& x : xs)
        out.insert(spectral_point(x));
    return out;
}

rational_fn ratio(const rational& num_root, const rational& den_root)
{
    return rational_fn(upoly::linear(num_root), upoly::linear(den_root));
}

} // namespace

TEST_CASE("rational functions", "[explicit_reps]")
{
    const rational_fn f(upoly::linear(1) * upoly::linear(2), upoly::linear(1) * upoly::linear(3));
    CHECK(f == ratio(2, 3));
    CHECK(f(rational(5)) == make_rational(3, 2));
    const auto e = ratio(-1, 0).expand_at_infinity(4); // (u+1)/u = 1 + u^-1
    CHECK(e == std::vector<rational>{1, 1, 0, 0});
    CHECK(rational_roots(upoly::linear(half(1)) * upoly::linear(half(1)) * upoly::linear(-3)) ==
          std::map<rational, int>{{rational(-3), 1}, {half(1), 2}});
    CHECK_THROWS_AS(rational_roots(upoly(std::vector<rational>{-2, 0, 1})), irrational_pole);
}

TEST_CASE("sl2 fundamental", "[explicit_reps]")
{
    const explicit_module m = build_sln_fundamental(2, 1, 0);
    REQUIRE(m.dim == 2);
    CHECK(m.xi[0].get(0, 0) == ratio(-1, 0));
    CHECK(m.xp[0].get(0, 1) == rational_fn(upoly(1), upoly::linear(0)));
    CHECK(build_sln_fundamental(4, 2, 0).dim == 6);
}

TEST_CASE("highest weight eigenvalue of sl_n fundamentals", "[explicit_reps]")
{
    for (int n = 2; n <= 5; ++n)
        for (int mm = 1; mm < n; ++mm)
            for (const rational& a : {rational(0), half(1), rational(-3)}) {
                const explicit_module m = build_sln_fundamental(n, mm, a);
                REQUIRE(m.labels.at(0).rfind("|1", 0) == 0);
                for (int i = 1; i < n; ++i) {
                    const rational_fn want = i == mm ? ratio(a - 1, a) : rational_fn(1);
                    CHECK(m.xi[static_cast<std::size_t>(i - 1)].get(0, 0) == want);
                }
            }
}

TEST_CASE("sl2 evaluation modules", "[explicit_reps]")
{
    const explicit_module triv = build_sl2_eval(0, 0);
    CHECK(triv.dim == 1);
    CHECK(triv.xi[0] == rfmatrix::identity(1));

    const explicit_module l1 = build_sl2_eval(1, 0);
    const explicit_module f1 = build_sln_fundamental(2, 1, 0);
    CHECK(l1.xi[0] == f1.xi[0]);
    CHECK(l1.xp[0] == f1.xp[0]);
    CHECK(l1.xm[0] == f1.xm[0]);

    // Drinfeld polynomial of L_2(0) read from the highest eigenvalue: roots {0, -1}.
    const auto roots = dominant_roots(build_sl2_eval(2, 0).xi[0].get(0, 0), 1);
    REQUIRE(roots.has_value());
    CHECK(*roots == std::vector<rational>{-1, 0});

    for (int r = 1; r <= 4; ++r)
        for (const rational& a : {rational(0), half(5), rational(-2)})
            CHECK(poles_of_module(build_sl2_eval(r, a), 1).support() == oracle::sl2_string(r, a));
}

TEST_CASE("defining relations", "[explicit_reps]")
{
    for (int n = 2; n <= 5; ++n)
        for (int mm = 1; mm < n; ++mm) {
            INFO("sl" << n << " varpi_" << mm);
            CHECK(verify_relations(build_sln_fundamental(n, mm, half(1)), 3).empty());
        }
    for (int r = 0; r <= 4; ++r)
        CHECK(verify_relations(build_sl2_eval(r, rational(-3)), 3).empty());

    // Negative control: flip the sign of one entry of x^-(u).
    explicit_module bad = build_sln_fundamental(3, 1, 0);
    const auto [key, f] = *bad.xm[0].entries().begin();
    bad.xm[0].set(key.first, key.second, -f);
    CHECK_FALSE(verify_relations(bad, 2).empty());
}

TEST_CASE("resolvent reproduces stored currents", "[explicit_reps]")
{
    for (int n = 2; n <= 4; ++n)
        for (int mm = 1; mm < n; ++mm) {
            const explicit_module m = build_sln_fundamental(n, mm, half(1));
            for (int i = 1; i < n; ++i) {
                const auto idx = static_cast<std::size_t>(i - 1);
                CHECK(current_via_resolvent(m, i, current_kind::plus) == m.xp[idx]);
                CHECK(current_via_resolvent(m, i, current_kind::minus) == m.xm[idx]);
                CHECK(current_via_resolvent(m, i, current_kind::xi) == m.xi[idx]);
            }
        }
    const explicit_module triv = trivial_module(build_cartan(family::A, 2));
    for (int i = 1; i <= 2; ++i) {
        CHECK(current_via_resolvent(triv, i, current_kind::plus).entries().empty());
        CHECK(current_via_resolvent(triv, i, current_kind::xi) == rfmatrix::identity(1));
    }
}

TEST_CASE("resolvent agrees with a dense linear solve", "[explicit_reps]")
{
    const explicit_module t = tensor_product(build_sl2_eval(1, 0), build_sl2_eval(2, half(3)));
    const explicit_module u = tensor_product(build_sln_fundamental(3, 1, 0), build_sln_fundamental(3, 2, rational(2)));
    for (const explicit_module* m : {&t, &u})
        for (int i = 1; i <= m->datum.rank; ++i) {
            const auto idx = static_cast<std::size_t>(i - 1);
            for (const rational& u0 : {make_rational(7, 3), make_rational(-11, 5)}) {
                CHECK(oracle::evaluate(m->xp[idx], u0) == oracle::resolvent_at(m->t1[idx], m->xp0[idx], 1, 1, u0));
                CHECK(oracle::evaluate(m->xm[idx], u0) == oracle::resolvent_at(m->t1[idx], m->xm0[idx], -1, 1, u0));
            }
        }
}

TEST_CASE("tensor products", "[explicit_reps]")
{
    const explicit_module v = build_sln_fundamental(3, 1, half(1));
    const explicit_module tv = tensor_product(trivial_module(v.datum), v);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(tv.xi[i] == v.xi[i]);
        CHECK(tv.xp[i] == v.xp[i]);
        CHECK(tv.xm[i] == v.xm[i]);
    }

    const explicit_module a = build_sl2_eval(1, 0), b = build_sl2_eval(1, 1);
    const explicit_module ab = tensor_product(a, b);
    CHECK(verify_relations(ab, 2).empty());
    CHECK(poles_of_module(ab, 1).support() == points({0, 1}));
    CHECK(check_xi_triangular(a, b, ab, 1).empty());

    // Eigenvalues of xi(u) on L_1(0) x L_2(3/2) are the pairwise products.
    const explicit_module c = build_sl2_eval(2, half(3));
    const explicit_module ac = tensor_product(a, c);
    std::multiset<std::string> got, want;
    for (int k = 0; k < ac.dim; ++k)
        got.insert(ac.xi[0].get(k, k).str());
    for (int x = 0; x < a.dim; ++x)
        for (int y = 0; y < c.dim; ++y)
            want.insert((a.xi[0].get(x, x) * c.xi[0].get(y, y)).str());
    CHECK(got == want);

    CHECK_THROWS_AS(tensor_product(trivial_module(build_cartan(family::B, 2)), trivial_module(build_cartan(family::B, 2))),
                    unsupported_type);
}

TEST_CASE("poles of modules", "[explicit_reps]")
{
    for (int n = 2; n <= 5; ++n)
        for (int mm = 1; mm < n; ++mm) {
            const explicit_module m = build_sln_fundamental(n, mm, half(-1));
            for (int i = 1; i < n; ++i) {
                const pole_multiset p = poles_of_module(m, i);
                CHECK(p.support() == shift(sln_sigma_closed_form(n, i, mm), half(-1)));
                for (const auto& [pt, order] : p.points())
                    CHECK(order == 1);
            }
        }
    CHECK(poles_of_module(trivial_module(build_cartan(family::A, 3)), 2).empty());

    // Currents with different poles are reported.
    explicit_module bad = build_sl2_eval(1, 0);
    bad.xp[0].set(0, 1, rational_fn(upoly(1), upoly::linear(5)));
    CHECK_THROWS_AS(poles_of_module(bad, 1), pole_mismatch);
}

TEST_CASE("maximal chains", "[explicit_reps]")
{
    const maximal_chain_t sl2 = maximal_chain(build_sl2_eval(1, half(3)));
    REQUIRE(sl2.size() == 1);
    CHECK(sl2[0] == chain_step{1, spectral_point(half(3)), 0});
    pole_multiset one;
    one.add(spectral_point(half(3)));
    CHECK(baxter_from_chain(sl2, 1) == one);

    const maximal_chain_t none = maximal_chain(trivial_module(build_cartan(family::A, 2)));
    CHECK(none.empty());
    CHECK(baxter_from_chain(none, 1).empty());

    for (int n = 2; n <= 6; ++n) {
        const qcartan_data qc(build_cartan(family::A, n - 1));
        for (int mm = 1; mm < n; ++mm) {
            const maximal_chain_t chain = maximal_chain(build_sln_fundamental(n, mm, 0));
            for (int i = 1; i < n; ++i)
                CHECK(baxter_from_chain(chain, i) == baxter_fundamental(qc, i, mm));
        }
    }
}

TEST_CASE("dominant weights", "[explicit_reps]")
{
    const auto simple = dominant_roots(ratio(-1, 0), 1);
    REQUIRE(simple.has_value());
    CHECK(*simple == std::vector<rational>{0});

    // (u-1)/(u+1): the numerator root 1 lies above the denominator root -1.
    CHECK_FALSE(dominant_roots(ratio(1, -1), 1).has_value());

    // (u+1)/(u-1) = P(u+1)/P(u) for P = u(u-1).
    const auto two = dominant_roots(ratio(-1, 1), 1);
    REQUIRE(two.has_value());
    CHECK(*two == std::vector<rational>{0, 1});

    CHECK_THROWS_AS(dominant_roots(rational_fn(upoly::linear(0), upoly(1)), 1), not_same_degree);
    CHECK(sigma_from_eigenvalues({ratio(-1, 0), ratio(1, -1), rational_fn(1)}, 1) == points({0}));

    for (int n = 2; n <= 6; ++n)
        for (int mm = 1; mm < n; ++mm) {
            const explicit_module m = build_sln_fundamental(n, mm, 0);
            for (int i = 1; i < n; ++i)
                CHECK(sigma_from_dominant_weights(m, i) == sln_sigma_closed_form(n, i, mm));
        }
}
