#pragma once

#include "errors.hpp"
#include "q_cartan.hpp"
#include "spectral.hpp"

#include <algorithm>
#include <string>

namespace yangian {

/// Q_ij(u) = prod_{s=d_i}^{2 kappa - d_i} (u - (s - d_j)/2)^{v_ij^(s)}, as a root multiset.
inline pole_multiset baxter_fundamental(const qcartan_data& qc, int i, int j)
{
    const cartan_datum& c = qc.datum();
    pole_multiset out;
    for (int s = c.d(i); s <= c.two_kappa - c.d(i); ++s) {
        const integer v = qc.v(i, j, s);
        if (v < 0)
            throw support_violation("negative v_" + std::to_string(i) + std::to_string(j) + "^(" +
                                    std::to_string(s) + ") in type " + c.name());
        if (v > 0)
            out.add(spectral_point(make_rational(s - c.d(j), 2)), static_cast<int>(to_long(v)));
    }
    return out;
}

/// sigma_i(L_{varpi_j}): the zero set of Q_ij.
inline point_set sigma_fundamental(const qcartan_data& qc, int i, int j)
{
    const cartan_datum& c = qc.datum();
    point_set out = baxter_fundamental(qc, i, j).support();
    const rational lo = make_rational(c.d(i) - c.d(j), 2);
    const rational hi = make_rational(c.two_kappa - c.d(i) - c.d(j), 2);
    for (const auto& p : out)
        if (p.offset < lo || p.offset > hi)
            throw support_violation("sigma_" + std::to_string(i) + "(L_" + std::to_string(j) +
                                    ") leaves its bounding interval in type " + c.name());
    return out;
}

/// Q_{i,V}(u) = prod_j prod_s P_j(u - (s - d_j)/2)^{v_ij^(s)}.
inline pole_multiset baxter_general(const qcartan_data& qc, const drinfeld_tuple& p, int i)
{
    pole_multiset out;
    for (const auto& [j, roots] : p) {
        const pole_multiset q = baxter_fundamental(qc, i, j);
        for (const auto& [a, ma] : roots.points())
            for (const auto& [b, mb] : q.points())
                out.add(a.shifted(b.offset), ma * mb);
    }
    return out;
}

/// sigma_i(V) = union_j (Z(P_j) + sigma_i(L_{varpi_j})).
inline point_set sigma_irreducible(const qcartan_data& qc, const drinfeld_tuple& p, int i)
{
    point_set out;
    for (const auto& [j, roots] : p) {
        if (roots.empty())
            continue;
        const point_set s = sigma_fundamental(qc, i, j);
        for (const auto& [a, m] : roots.points())
            for (const auto& b : s)
                out.insert(a.shifted(b.offset));
    }
    return out;
}

inline point_set sigma_full(const qcartan_data& qc, const drinfeld_tuple& p)
{
    point_set out;
    for (int i = 1; i <= qc.datum().rank; ++i)
        out = set_union(std::move(out), sigma_irreducible(qc, p, i));
    return out;
}

/// Drinfeld tuple of L_{l varpi_j}: P_j(u) = prod_{b<l} (u + b).
inline drinfeld_tuple kr_tuple(int j, int ell, const spectral_point& a = {})
{
    drinfeld_tuple out;
    for (int b = 0; b < ell; ++b)
        out[j].add(a.shifted(-b));
    return out;
}

/// sigma_i(L_{l varpi_j}) = sigma_i(L_{varpi_j}) - {0, ..., l-1}.
inline point_set kr_sigma(const qcartan_data& qc, int i, int j, int ell)
{
    if (ell < 1)
        throw std::invalid_argument("kr_sigma: ell must be positive");
    point_set out;
    const point_set s = sigma_fundamental(qc, i, j);
    for (int b = 0; b < ell; ++b)
        out = set_union(std::move(out), shift(s, -b));
    return out;
}

/// Q_{i, L_{l varpi_j}}(u) = prod_{b<l} prod_s (u - (s - d_j - 2b)/2)^{v_ij^(s)}.
inline pole_multiset kr_baxter(const qcartan_data& qc, int i, int j, int ell)
{
    if (ell < 1)
        throw std::invalid_argument("kr_baxter: ell must be positive");
    const cartan_datum& c = qc.datum();
    pole_multiset out;
    for (int b = 0; b < ell; ++b)
        for (int s = c.d(i); s <= c.two_kappa - c.d(i); ++s) {
            const integer v = qc.v(i, j, s);
            if (v > 0)
                out.add(spectral_point(make_rational(s - c.d(j) - 2 * b, 2)),
                        static_cast<int>(to_long(v)));
        }
    return out;
}

/// sigma_i(L_{varpi_j}) for sl_n: {(i+j)/2 - b : b in [i+j+1-n, i] and [1, j]}.
inline point_set sln_sigma_closed_form(int n, int i, int j)
{
    if (i < 1 || j < 1 || i > n - 1 || j > n - 1)
        throw std::invalid_argument("sln_sigma_closed_form: node out of range");
    point_set out;
    const int lo = std::max(i + j + 1 - n, 1);
    const int hi = std::min(i, j);
    for (int b = lo; b <= hi; ++b)
        out.insert(spectral_point(make_rational(i + j - 2 * b, 2)));
    return out;
}

} // namespace yangian
