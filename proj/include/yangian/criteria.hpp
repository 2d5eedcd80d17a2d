#pragma once

#include "pole_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace yangian {

/// Sufficient condition for L(P) (x) L(Q) to be highest weight:
/// (Z(Q_i) - d_i) misses sigma_i(L(P)) at every node.
inline bool cyclic_sufficient(const qcartan_data& qc, const drinfeld_tuple& p, const drinfeld_tuple& q)
{
    for (const auto& [i, roots] : q) {
        if (roots.empty())
            continue;
        const point_set sigma = sigma_irreducible(qc, p, i);
        for (const auto& [a, m] : roots.points())
            if (sigma.count(a.shifted(-qc.datum().d(i))))
                return false;
    }
    return true;
}

/// Sufficient condition for L(P) (x) L(Q) = L(PQ).
inline bool irreducible_sufficient(const qcartan_data& qc, const drinfeld_tuple& p, const drinfeld_tuple& q)
{
    return cyclic_sufficient(qc, p, q) && cyclic_sufficient(qc, q, p);
}

/// True iff no root a of P_j has -a in sigma(L_{varpi_j}).
inline bool double_admissible(const qcartan_data& qc, const drinfeld_tuple& p)
{
    for (const auto& [j, roots] : p) {
        if (roots.empty())
            continue;
        point_set full;
        for (int i = 1; i <= qc.datum().rank; ++i)
            full = set_union(std::move(full), sigma_fundamental(qc, i, j));
        for (const auto& [a, m] : roots.points())
            if (full.count(-a))
                return false;
    }
    return true;
}

/// The set C_ij for sl_n: points s with L_{varpi_i}(0) (x) L_{varpi_j}(s) not
/// highest weight.
inline point_set sln_cyclicity_set(int n, int i, int j)
{
    if (i < 1 || j < 1 || i > n - 1 || j > n - 1)
        throw std::invalid_argument("sln_cyclicity_set: node out of range");
    const int hi_node = std::max(i, j);
    const int lo_node = std::min(i, j);
    point_set out;
    for (int r = 1; r <= std::min(lo_node, n - hi_node); ++r)
        out.insert(spectral_point(make_rational(hi_node - lo_node + 2 * r, 2)));
    if (out != shift(sln_sigma_closed_form(n, i, j), 1))
        throw support_violation("sl_" + std::to_string(n) + " cyclicity set differs from sigma + 1 at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
    return out;
}

} // namespace yangian
