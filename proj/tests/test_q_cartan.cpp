#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace yangian;

namespace {

laurent_poly q(int e, long c = 1)
{
    return laurent_poly::monomial(e, rational(c));
}

qcartan_data sl(int n)
{
    return qcartan_data(build_cartan(family::A, n - 1));
}

} // namespace

TEST_CASE("q-Cartan matrices", "[q_cartan]")
{
    const laurent_matrix b2 = qcartan_matrix(build_cartan(family::A, 1));
    CHECK(b2[0][0] == q(1) + q(-1));

    const laurent_matrix b3 = qcartan_matrix(build_cartan(family::A, 2));
    CHECK(b3[0][0] == q(1) + q(-1));
    CHECK(b3[0][1] == laurent_poly(-1));
    CHECK(b3[1][0] == laurent_poly(-1));

    const laurent_matrix bb2 = qcartan_matrix(build_cartan(family::B, 2));
    CHECK(bb2[0][0] == oracle::qint(4));
    CHECK(bb2[0][1] == -oracle::qint(2));
    CHECK(bb2[1][0] == -oracle::qint(2));
    CHECK(bb2[1][1] == oracle::qint(2));
}

TEST_CASE("C(q) for sl_n matches the product formula", "[q_cartan]")
{
    CHECK(sl(2).c(1, 1) == laurent_poly(1));
    const qcartan_data s3 = sl(3);
    CHECK(s3.c(1, 1) == q(1) + q(-1));
    CHECK(s3.c(1, 2) == laurent_poly(1));
    for (int n = 2; n <= 9; ++n) {
        const qcartan_data qc = sl(n);
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) {
                INFO("n = " << n << " (" << i << "," << j << ")");
                CHECK(qc.c(i, j) == oracle::sln_c(n, i, j));
            }
    }
}

TEST_CASE("B C = [2kappa] I for every catalog type", "[q_cartan]")
{
    for (const auto& [f, r] : catalog(8)) {
        const qcartan_data qc(build_cartan(f, r));
        INFO(qc.datum().name());
        const laurent_matrix bc = multiply(qc.B(), qc.C());
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                CHECK(bc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                      (i == j ? qnum(qc.datum().two_kappa) : laurent_poly()));
    }
}

TEST_CASE("v windows", "[q_cartan]")
{
    using v = std::vector<integer>;
    CHECK(sl(2).vij_window(1, 1).coeffs == v{0, 1, 0, -1, 0});
    CHECK(sl(3).vij_window(1, 2).coeffs == v{0, 0, 1, 0, -1, 0, 0});
    for (const auto& [f, r] : catalog(8)) {
        const qcartan_data qc(build_cartan(f, r));
        const cartan_datum& c = qc.datum();
        INFO(c.name());
        CHECK(qc.window() == 2 * c.two_kappa);
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j) {
                CHECK(qc.v(i, j, 0) == 0);
                CHECK(qc.vij_window(i, j).coeffs == oracle::v_window(qc.c(i, j), c.d(j), c.two_kappa, qc.window()));
            }
    }
}

TEST_CASE("p_ij", "[q_cartan]")
{
    CHECK(sl(2).pij(1, 1) == laurent_poly(1));
    CHECK(sl(3).pij(1, 2) == q(-1));
    for (int n = 2; n <= 8; ++n) {
        const qcartan_data qc = sl(n);
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) {
                laurent_poly want;
                for (int b = std::max(1, i + j + 1 - n); b <= std::min(i, j); ++b)
                    want += q(2 * b - i - j);
                CHECK(qc.pij(i, j) == want);
            }
    }
    // The support and coefficient assertions inside pij hold for every type.
    for (const auto& [f, r] : catalog(8)) {
        const qcartan_data qc(build_cartan(f, r));
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j)
                CHECK_NOTHROW(qc.pij(i, j));
    }
}
