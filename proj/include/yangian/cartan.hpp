#pragma once

#include "errors.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace yangian {

enum class family { A, B, C, D, E, F, G };

inline char family_letter(family f)
{
    return "ABCDEFG"[static_cast<int>(f)];
}

inline family parse_family(const std::string& s)
{
    if (s.size() == 1 && s[0] >= 'A' && s[0] <= 'G')
        return static_cast<family>(s[0] - 'A');
    throw invalid_type("unknown Lie type family '" + s + "'");
}

/// Cartan data of a simple Lie algebra in Bourbaki labelling.
///
/// Nodes are numbered 1..rank in every accessor; the raw tables are 0-based.
struct cartan_datum {
    family fam = family::A;
    int rank = 0;
    std::vector<std::vector<int>> cartan; // cartan[i][j] = a_{i+1,j+1}
    std::vector<int> symmetrizers;        // d_i in {1,2,3}
    int two_kappa = 0;                    // 2*kappa, kappa = m h_dual / 2
    int dual_coxeter = 0;
    std::vector<int> star_map; // star_map[i-1] = i*
    bool simply_laced = true;

    int a(int i, int j) const { return cartan.at(i - 1).at(j - 1); }
    int d(int i) const { return symmetrizers.at(i - 1); }
    int star(int i) const { return star_map.at(i - 1); }
    std::string name() const { return std::string(1, family_letter(fam)) + std::to_string(rank); }

    friend bool operator==(const cartan_datum&, const cartan_datum&) = default;
};

namespace detail {

inline void link(std::vector<std::vector<int>>& m, int i, int j, int aij = -1, int aji = -1)
{
    m[i - 1][j - 1] = aij;
    m[j - 1][i - 1] = aji;
}

} // namespace detail

inline bool is_valid_type(family f, int rank)
{
    switch (f) {
    case family::A: return rank >= 1;
    case family::B: return rank >= 2;
    case family::C: return rank >= 2;
    case family::D: return rank >= 4;
    case family::E: return rank >= 6 && rank <= 8;
    case family::F: return rank == 4;
    case family::G: return rank == 2;
    }
    return false;
}

inline cartan_datum build_cartan(family f, int rank)
{
    if (!is_valid_type(f, rank))
        throw invalid_type(std::string("no simple Lie algebra of type ") + family_letter(f) +
                           std::to_string(rank));

    cartan_datum out;
    out.fam = f;
    out.rank = rank;
    out.cartan.assign(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i)
        out.cartan[i][i] = 2;
    out.symmetrizers.assign(rank, 1);
    out.star_map.resize(rank);
    for (int i = 0; i < rank; ++i)
        out.star_map[i] = i + 1;

    auto& m = out.cartan;
    int m_factor = 1;
    switch (f) {
    case family::A:
        for (int i = 1; i < rank; ++i)
            detail::link(m, i, i + 1);
        for (int i = 1; i <= rank; ++i)
            out.star_map[i - 1] = rank + 1 - i;
        out.dual_coxeter = rank + 1;
        break;
    case family::B:
        for (int i = 1; i < rank - 1; ++i)
            detail::link(m, i, i + 1);
        detail::link(m, rank - 1, rank, -1, -2);
        for (int i = 1; i < rank; ++i)
            out.symmetrizers[i - 1] = 2;
        out.dual_coxeter = 2 * rank - 1;
        m_factor = 2;
        break;
    case family::C:
        for (int i = 1; i < rank - 1; ++i)
            detail::link(m, i, i + 1);
        detail::link(m, rank - 1, rank, -2, -1);
        out.symmetrizers[rank - 1] = 2;
        out.dual_coxeter = rank + 1;
        m_factor = 2;
        break;
    case family::D:
        for (int i = 1; i < rank - 1; ++i)
            detail::link(m, i, i + 1);
        detail::link(m, rank - 2, rank);
        if (rank % 2 == 1)
            std::swap(out.star_map[rank - 2], out.star_map[rank - 1]);
        out.dual_coxeter = 2 * rank - 2;
        break;
    case family::E:
        detail::link(m, 1, 3);
        detail::link(m, 3, 4);
        detail::link(m, 2, 4);
        for (int i = 4; i < rank; ++i)
            detail::link(m, i, i + 1);
        if (rank == 6) {
            out.star_map = {6, 2, 5, 4, 3, 1};
            out.dual_coxeter = 12;
        } else {
            out.dual_coxeter = rank == 7 ? 18 : 30;
        }
        break;
    case family::F:
        detail::link(m, 1, 2);
        detail::link(m, 2, 3, -1, -2);
        detail::link(m, 3, 4);
        out.symmetrizers = {2, 2, 1, 1};
        out.dual_coxeter = 9;
        m_factor = 2;
        break;
    case family::G:
        detail::link(m, 1, 2, -3, -1);
        out.symmetrizers = {1, 3};
        out.dual_coxeter = 4;
        m_factor = 3;
        break;
    }
    out.two_kappa = m_factor * out.dual_coxeter;
    out.simply_laced = (m_factor == 1);
    return out;
}

inline cartan_datum build_cartan(char letter, int rank)
{
    return build_cartan(parse_family(std::string(1, letter)), rank);
}

/// Every type A_1..A_n, B_2..B_n, C_2..C_n, D_4..D_n, E_6..E_8, F_4, G_2 with
/// rank at most max_rank.
inline std::vector<std::pair<family, int>> catalog(int max_rank = 8)
{
    std::vector<std::pair<family, int>> out;
    for (int r = 1; r <= max_rank; ++r)
        out.emplace_back(family::A, r);
    for (int r = 2; r <= max_rank; ++r)
        out.emplace_back(family::B, r);
    for (int r = 2; r <= max_rank; ++r)
        out.emplace_back(family::C, r);
    for (int r = 4; r <= max_rank; ++r)
        out.emplace_back(family::D, r);
    for (int r = 6; r <= std::min(8, max_rank); ++r)
        out.emplace_back(family::E, r);
    if (max_rank >= 4)
        out.emplace_back(family::F, 4);
    if (max_rank >= 2)
        out.emplace_back(family::G, 2);
    return out;
}

/// Returns a description of the first violated invariant, or an empty string.
inline std::string check_invariants(const cartan_datum& c)
{
    const int n = c.rank;
    for (int i = 1; i <= n; ++i) {
        if (c.a(i, i) != 2)
            return "a_ii != 2 at node " + std::to_string(i);
        if (c.star(c.star(i)) != i)
            return "star is not an involution at node " + std::to_string(i);
        if (c.d(c.star(i)) != c.d(i))
            return "d is not star-invariant at node " + std::to_string(i);
        for (int j = 1; j <= n; ++j) {
            if (i != j && c.a(i, j) > 0)
                return "positive off-diagonal entry";
            if (c.d(i) * c.a(i, j) != c.d(j) * c.a(j, i))
                return "d_i a_ij != d_j a_ji at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
    }
    if (c.simply_laced) {
        for (int i = 1; i <= n; ++i)
            if (c.d(i) != 1)
                return "simply laced type with d_i != 1";
        if (c.two_kappa != c.dual_coxeter)
            return "simply laced type with 2 kappa != h_dual";
    }
    return {};
}

} // namespace yangian
