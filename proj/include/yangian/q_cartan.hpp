#pragma once

#include "cartan.hpp"
#include "errors.hpp"
#include "laurent.hpp"

#include <string>
#include <vector>

namespace yangian {

using laurent_matrix = std::vector<std::vector<laurent_poly>>;

/// B(q) = ([d_i a_ij]_q).
inline laurent_matrix qcartan_matrix(const cartan_datum& c)
{
    laurent_matrix b(c.rank, std::vector<laurent_poly>(c.rank));
    for (int i = 1; i <= c.rank; ++i)
        for (int j = 1; j <= c.rank; ++j)
            b[i - 1][j - 1] = qnum(c.d(i) * c.a(i, j));
    return b;
}

inline laurent_matrix multiply(const laurent_matrix& a, const laurent_matrix& b)
{
    const std::size_t n = a.size();
    const std::size_t m = b.empty() ? 0 : b[0].size();
    laurent_matrix out(n, std::vector<laurent_poly>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero())
                continue;
            for (std::size_t j = 0; j < m; ++j)
                out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

/// Solves B X = rhs * I over Q(q) by fraction-free elimination and returns X,
/// asserting that every entry is a Laurent polynomial.
///
/// The leading principal minors of B(q) are nonzero because B(1) is the
/// symmetrized Cartan matrix, which is positive definite; no pivoting needed.
inline laurent_matrix solve_scaled_inverse(const laurent_matrix& b, const laurent_poly& rhs)
{
    const std::size_t n = b.size();
    laurent_matrix m(n, std::vector<laurent_poly>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = b[i][j];
        m[i][n + i] = rhs;
    }

    laurent_poly previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero())
            throw error("solve_scaled_inverse: vanishing leading minor");
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < 2 * n; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], previous);
            m[i][k] = laurent_poly();
        }
        previous = m[k][k];
    }
    const laurent_poly det = m[n - 1][n - 1];
    if (det.is_zero())
        throw error("solve_scaled_inverse: singular matrix");

    // y = det * X is polynomial (adjugate scaled by rhs); back-substitute for y.
    laurent_matrix y(n, std::vector<laurent_poly>(n));
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t k = n; k-- > 0;) {
            laurent_poly acc = det * m[k][n + col];
            for (std::size_t l = k + 1; l < n; ++l)
                acc -= m[k][l] * y[l][col];
            y[k][col] = exact_div(acc, m[k][k]);
        }
    }
    laurent_matrix x(n, std::vector<laurent_poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            x[i][j] = exact_div(y[i][j], det);
    return x;
}

/// B(q), C(q) = [2 kappa]_q B(q)^{-1}, and the v_ij windows on 0..4 kappa.
class qcartan_data {
public:
    explicit qcartan_data(cartan_datum datum)
        : m_datum(std::move(datum))
    {
        const int n = m_datum.rank;
        m_b = qcartan_matrix(m_datum);
        m_c = solve_scaled_inverse(m_b, qnum(m_datum.two_kappa));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const laurent_poly& cij = m_c[i][j];
                if (!cij.is_integral() || !cij.has_nonnegative_coefficients())
                    throw negative_coefficient("c_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                               "(q) = " + cij.str() + " in type " + m_datum.name());
            }

        const laurent_poly q_minus_qinv = laurent_poly::monomial(1) - laurent_poly::monomial(-1);
        m_v.assign(n, std::vector<series_window>(n));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                m_v[i - 1][j - 1] = series_div_window(q_minus_qinv * qnum(m_datum.d(j)) * c(i, j),
                                                      m_datum.two_kappa, window());
    }

    const cartan_datum& datum() const { return m_datum; }
    const laurent_matrix& B() const { return m_b; }
    const laurent_matrix& C() const { return m_c; }
    const laurent_poly& b(int i, int j) const { return m_b.at(i - 1).at(j - 1); }
    const laurent_poly& c(int i, int j) const { return m_c.at(i - 1).at(j - 1); }

    /// Upper end of the stored windows, 4 kappa.
    int window() const { return 2 * m_datum.two_kappa; }

    const series_window& vij_window(int i, int j) const { return m_v.at(i - 1).at(j - 1); }

    /// v_ij^{(r)}; zero for r < 0.
    integer v(int i, int j, int r) const { return vij_window(i, j).at(r); }

    /// p_ij(q), checked against its support bound and the v-coefficients.
    laurent_poly pij(int i, int j) const
    {
        const int two_kappa = m_datum.two_kappa;
        const int di = m_datum.d(i);
        const int dj = m_datum.d(j);
        const laurent_poly num = (laurent_poly::monomial(2 * dj) - 1) *
                                 (c(i, m_datum.star(j)) + laurent_poly::monomial(two_kappa) * c(i, j));
        const laurent_poly p = exact_div(num, laurent_poly::monomial(2 * two_kappa) - 1);
        const std::string where = "p_" + std::to_string(i) + "," + std::to_string(j) + " in type " +
                                  m_datum.name();
        for (const auto& [e, coeff] : p.terms()) {
            const int r = -e;
            if (r < di - dj || r > two_kappa - di - dj)
                throw support_violation(where + ": exponent " + std::to_string(e) + " out of range");
            if (!is_integer(coeff) || coeff < 0)
                throw support_violation(where + ": coefficient " + coeff.get_str());
        }
        for (int r = di - dj; r <= two_kappa - di - dj; ++r)
            if (p.coeff(-r) != v(i, j, r + dj))
                throw support_violation(where + ": coefficient of q^" + std::to_string(-r) +
                                        " differs from v^(" + std::to_string(r + dj) + ")");
        return p;
    }

private:
    cartan_datum m_datum;
    laurent_matrix m_b;
    laurent_matrix m_c;
    std::vector<std::vector<series_window>> m_v;
};

} // namespace yangian
