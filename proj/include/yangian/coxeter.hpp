#pragma once

#include "cartan.hpp"
#include "errors.hpp"
#include "q_cartan.hpp"

#include <queue>
#include <set>
#include <string>
#include <vector>

namespace yangian {

/// Integer coordinates in the basis of simple roots, 0-based storage.
using root_vector = std::vector<long>;

inline root_vector simple_root(const cartan_datum& c, int i)
{
    root_vector v(static_cast<std::size_t>(c.rank), 0);
    v.at(static_cast<std::size_t>(i - 1)) = 1;
    return v;
}

/// s_i(v) = v - (sum_k a_ik n_k) alpha_i.
inline root_vector simple_reflection(const cartan_datum& c, int i, root_vector v)
{
    long pairing = 0;
    for (int k = 1; k <= c.rank; ++k)
        pairing += c.a(i, k) * v.at(static_cast<std::size_t>(k - 1));
    v[static_cast<std::size_t>(i - 1)] -= pairing;
    return v;
}

inline bool is_positive_root_vector(const root_vector& v)
{
    bool nonzero = false;
    for (long x : v) {
        if (x < 0)
            return false;
        nonzero = nonzero || x != 0;
    }
    return nonzero;
}

/// Reduced word of w0 (first letter applied first), found by descending from
/// rho: reflect in any s_i with a positive coordinate in the fundamental weight basis.
inline std::vector<int> longest_element_word(const cartan_datum& c)
{
    std::vector<long> lambda(static_cast<std::size_t>(c.rank), 1);
    std::vector<int> word;
    for (;;) {
        int i = 0;
        for (int k = 1; k <= c.rank && i == 0; ++k)
            if (lambda[static_cast<std::size_t>(k - 1)] > 0)
                i = k;
        if (i == 0)
            break;
        const long li = lambda[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= c.rank; ++j)
            lambda[static_cast<std::size_t>(j - 1)] -= li * c.a(j, i);
        word.push_back(i);
    }
    return word;
}

inline root_vector apply_word(const cartan_datum& c, const std::vector<int>& word, root_vector v)
{
    for (int i : word)
        v = simple_reflection(c, i, std::move(v));
    return v;
}

/// Returns an empty string if -w0(alpha_i) = alpha_{i*} for every node.
inline std::string verify_star_map(const cartan_datum& c)
{
    const auto word = longest_element_word(c);
    for (int i = 1; i <= c.rank; ++i) {
        root_vector image = apply_word(c, word, simple_root(c, i));
        for (auto& x : image)
            x = -x;
        if (image != simple_root(c, c.star(i)))
            return "-w0(alpha_" + std::to_string(i) + ") != alpha_" + std::to_string(c.star(i)) + " in type " +
                   c.name();
    }
    return {};
}

struct coxeter_data {
    std::set<int> sinks;   // the class containing i
    std::set<int> sources; // the other class
    root_vector gamma;     // alpha_i - sum_{j in sources} a_ji alpha_j
};

/// Bipartite sink/source split of the Dynkin graph with i among the sinks.
inline coxeter_data coxeter_setup(const cartan_datum& c, int i)
{
    if (!c.simply_laced)
        throw unsupported_type("Coxeter element formulas need a simply laced type");
    std::vector<int> color(static_cast<std::size_t>(c.rank), -1);
    std::queue<int> q;
    color[static_cast<std::size_t>(i - 1)] = 0;
    q.push(i);
    while (!q.empty()) {
        const int k = q.front();
        q.pop();
        for (int l = 1; l <= c.rank; ++l) {
            if (l == k || c.a(k, l) == 0)
                continue;
            auto& cl = color[static_cast<std::size_t>(l - 1)];
            const int want = 1 - color[static_cast<std::size_t>(k - 1)];
            if (cl < 0) {
                cl = want;
                q.push(l);
            } else if (cl != want) {
                throw error("Dynkin graph is not bipartite");
            }
        }
    }
    coxeter_data out;
    for (int k = 1; k <= c.rank; ++k)
        (color[static_cast<std::size_t>(k - 1)] == 0 ? out.sinks : out.sources).insert(k);
    out.gamma = simple_root(c, i);
    for (int j : out.sources)
        out.gamma[static_cast<std::size_t>(j - 1)] -= c.a(j, i);
    return out;
}

/// tau = (product of source reflections)(product of sink reflections).
inline root_vector apply_tau(const cartan_datum& c, const coxeter_data& cd, root_vector v)
{
    for (int k : cd.sinks)
        v = simple_reflection(c, k, std::move(v));
    for (int k : cd.sources)
        v = simple_reflection(c, k, std::move(v));
    return v;
}

inline root_vector tau_power(const cartan_datum& c, const coxeter_data& cd, int k)
{
    root_vector v = cd.gamma;
    for (int s = 0; s < k; ++s)
        v = apply_tau(c, cd, std::move(v));
    return v;
}

/// v_ij^(r) from the Coxeter orbit of gamma_i.
inline long vij_via_coxeter(const cartan_datum& c, int i, int j, int r)
{
    const coxeter_data cd = coxeter_setup(c, i);
    if (cd.sinks.count(j) && r % 2 == 1 && r >= 1)
        return tau_power(c, cd, (r - 1) / 2).at(static_cast<std::size_t>(j - 1));
    if (cd.sources.count(j) && r % 2 == 0 && r >= 2)
        return tau_power(c, cd, (r - 2) / 2).at(static_cast<std::size_t>(j - 1));
    return 0;
}

struct fuj_her_report {
    bool positive_orbits = true; // tau^k(gamma_i) positive for k <= (h-2)/2
    bool some_positive = true;   // each (i, r) has a j with v_ij^(r) > 0
    bool matches_q_cartan = true;
    std::string detail;
    bool ok() const { return positive_orbits && some_positive && matches_q_cartan; }
};

inline fuj_her_report verify_fuj_her(const qcartan_data& qc)
{
    const cartan_datum& c = qc.datum();
    fuj_her_report rep;
    const int h = c.dual_coxeter;
    for (int i = 1; i <= c.rank; ++i) {
        const coxeter_data cd = coxeter_setup(c, i);
        for (int k = 0; k <= (h - 2) / 2; ++k)
            if (!is_positive_root_vector(tau_power(c, cd, k))) {
                rep.positive_orbits = false;
                rep.detail += "tau^" + std::to_string(k) + "(gamma_" + std::to_string(i) + ") not positive; ";
            }
        for (int r = 1; r <= h - 1; ++r) {
            bool any = false;
            for (int j = 1; j <= c.rank; ++j) {
                const long v = vij_via_coxeter(c, i, j, r);
                any = any || v > 0;
                if (qc.v(i, j, r) != v) {
                    rep.matches_q_cartan = false;
                    rep.detail += "v_" + std::to_string(i) + std::to_string(j) + "^(" + std::to_string(r) +
                                  ") mismatch; ";
                }
            }
            if (!any) {
                rep.some_positive = false;
                rep.detail += "no positive v_" + std::to_string(i) + "j^(" + std::to_string(r) + "); ";
            }
        }
    }
    return rep;
}

} // namespace yangian
