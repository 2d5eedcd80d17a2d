#pragma once

#include "cartan.hpp"
#include "errors.hpp"
#include "sparse.hpp"
#include "spectral.hpp"
#include "upoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace yangian {

/// A finite-dimensional representation of the Yangian given by its rational
/// currents, with hbar = 1. Node-indexed vectors are 0-based: xi[i - 1] is xi_i(u).
struct explicit_module {
    cartan_datum datum;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> weights; // weights[v][i - 1] = eigenvalue of h_i

    std::vector<rfmatrix> xi, xp, xm;

    std::vector<qmatrix> xi0, xp0, xm0, t1;

    // Type A only: E_ab for a < b (raising) and E_ba (lowering), keyed by (a, b).
    std::map<std::pair<int, int>, qmatrix> root_plus, root_minus;
};

namespace detail {

inline void resize_nodes(explicit_module& m)
{
    const auto r = static_cast<std::size_t>(m.datum.rank);
    m.xi.assign(r, rfmatrix::identity(m.dim));
    m.xp.assign(r, rfmatrix(m.dim));
    m.xm.assign(r, rfmatrix(m.dim));
}

inline std::vector<int> weights_from_xi0(const explicit_module& m, int v)
{
    std::vector<int> w;
    for (int i = 1; i <= m.datum.rank; ++i) {
        const rational h = m.xi0[static_cast<std::size_t>(i - 1)].get(v, v) / m.datum.d(i);
        if (!is_integer(h))
            throw error("non-integral weight");
        w.push_back(static_cast<int>(to_long(h.get_num())));
    }
    return w;
}

} // namespace detail

/// Fills xi0, xp0, xm0 from the u^{-1} coefficients of the currents and
/// t_{i,1} = xi_{i,1} - xi_{i,0}^2 / 2, then the weights (xi_{i,0} must be diagonal).
inline void derive_constants(explicit_module& m)
{
    const auto r = static_cast<std::size_t>(m.datum.rank);
    m.xi0.assign(r, qmatrix(m.dim));
    m.xp0.assign(r, qmatrix(m.dim));
    m.xm0.assign(r, qmatrix(m.dim));
    m.t1.assign(r, qmatrix(m.dim));
    for (std::size_t i = 0; i < r; ++i) {
        const auto e = m.xi[i].expand_at_infinity(3);
        m.xi0[i] = e[1];
        m.t1[i] = e[2] - rational(1, 2) * (e[1] * e[1]);
        m.xp0[i] = m.xp[i].expand_at_infinity(2)[1];
        m.xm0[i] = m.xm[i].expand_at_infinity(2)[1];
        if (!m.xi0[i].is_diagonal())
            throw error("xi_{i,0} is not diagonal in the stored basis");
    }
    m.weights.clear();
    for (int v = 0; v < m.dim; ++v)
        m.weights.push_back(detail::weights_from_xi0(m, v));
}

/// Root vectors E_ab, E_ba of sl_n from brackets of the simple ones:
/// E_ab = [E_{a,a+1}, E_{a+1,b}], E_ba = [E_{b,a+1}, E_{a+1,a}].
inline void build_root_vectors(explicit_module& m)
{
    if (m.datum.fam != family::A)
        throw unsupported_type("root vectors are only built in type A");
    const int n = m.datum.rank + 1;
    m.root_plus.clear();
    m.root_minus.clear();
    for (int len = 1; len < n; ++len)
        for (int a = 1; a + len <= n; ++a) {
            const int b = a + len;
            if (len == 1) {
                m.root_plus[{a, b}] = m.xp0[static_cast<std::size_t>(a - 1)];
                m.root_minus[{a, b}] = m.xm0[static_cast<std::size_t>(a - 1)];
            } else {
                m.root_plus[{a, b}] = commutator(m.root_plus.at({a, a + 1}), m.root_plus.at({a + 1, b}));
                m.root_minus[{a, b}] = commutator(m.root_minus.at({a + 1, b}), m.root_minus.at({a, a + 1}));
            }
        }
}

inline explicit_module trivial_module(const cartan_datum& datum)
{
    explicit_module m;
    m.datum = datum;
    m.dim = 1;
    m.labels = {"1"};
    detail::resize_nodes(m);
    derive_constants(m);
    if (datum.fam == family::A)
        build_root_vectors(m);
    return m;
}

/// The fundamental module L_{varpi_m}(a) of Y(sl_n) on the m-subsets of {1..n}.
/// Basis order is lexicographic, so index 0 is the highest weight vector |1..m>.
inline explicit_module build_sln_fundamental(int n, int m, const rational& a)
{
    if (n < 2 || m < 1 || m > n - 1)
        throw std::invalid_argument("build_sln_fundamental: need 1 <= m <= n-1");
    explicit_module mod;
    mod.datum = build_cartan(family::A, n - 1);

    std::vector<std::vector<int>> basis;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == m) {
            basis.push_back(cur);
            return;
        }
        for (int p = next; p <= n; ++p) {
            cur.push_back(p);
            rec(p + 1);
            cur.pop_back();
        }
    };
    rec(1);
    std::map<std::vector<int>, int> index;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        index[basis[k]] = static_cast<int>(k);
        std::string label = "|";
        for (std::size_t l = 0; l < basis[k].size(); ++l)
            label += (l ? "," : "") + std::to_string(basis[k][l]);
        mod.labels.push_back(label + ">");
    }
    mod.dim = static_cast<int>(basis.size());
    detail::resize_nodes(mod);

    auto b_ik = [&](int i, int k) -> rational { return a + make_rational(m + i - 2 * k, 2); };
    for (int i = 1; i < n; ++i) {
        auto& xi = mod.xi[static_cast<std::size_t>(i - 1)];
        auto& xp = mod.xp[static_cast<std::size_t>(i - 1)];
        auto& xm = mod.xm[static_cast<std::size_t>(i - 1)];
        for (std::size_t v = 0; v < basis.size(); ++v) {
            const auto& p = basis[v];
            const auto has_i = std::find(p.begin(), p.end(), i);
            const auto has_i1 = std::find(p.begin(), p.end(), i + 1);
            const int col = static_cast<int>(v);
            if (has_i != p.end() && has_i1 == p.end()) {
                const int k = static_cast<int>(has_i - p.begin()) + 1;
                const rational b = b_ik(i, k);
                xi.set(col, col, rational_fn(upoly::linear(b - 1), upoly::linear(b)));
                auto q = p;
                q[static_cast<std::size_t>(k - 1)] = i + 1;
                xm.set(index.at(q), col, rational_fn(upoly(1), upoly::linear(b)));
            } else if (has_i1 != p.end() && has_i == p.end()) {
                const int k = static_cast<int>(has_i1 - p.begin()) + 1;
                const rational b = b_ik(i, k);
                xi.set(col, col, rational_fn(upoly::linear(b + 1), upoly::linear(b)));
                auto q = p;
                q[static_cast<std::size_t>(k - 1)] = i;
                xp.set(index.at(q), col, rational_fn(upoly(1), upoly::linear(b)));
            }
        }
    }
    derive_constants(mod);
    build_root_vectors(mod);
    return mod;
}

/// The evaluation module L_r(a) of Y(sl_2) on v_0..v_r.
inline explicit_module build_sl2_eval(int r, const rational& a)
{
    if (r < 0)
        throw std::invalid_argument("build_sl2_eval: r must be nonnegative");
    explicit_module mod;
    mod.datum = build_cartan(family::A, 1);
    mod.dim = r + 1;
    for (int i = 0; i <= r; ++i)
        mod.labels.push_back("v" + std::to_string(i));
    detail::resize_nodes(mod);
    auto lin = [&](long shift) { return upoly::linear(a - shift); }; // u - a + shift
    for (int i = 0; i <= r; ++i) {
        mod.xi[0].set(i, i, rational_fn(lin(-1) * lin(r), lin(i - 1) * lin(i)));
        if (i > 0)
            mod.xp[0].set(i - 1, i, rational_fn(upoly(rational(r - i + 1)), lin(i - 1)));
        if (i < r)
            mod.xm[0].set(i + 1, i, rational_fn(upoly(rational(i + 1)), lin(i)));
    }
    derive_constants(mod);
    build_root_vectors(mod);
    return mod;
}

enum class current_kind { xi, plus, minus };

namespace detail {

inline sparse_vector flatten(const qmatrix& m)
{
    sparse_vector out;
    const int n = m.size();
    for (int i = 0; i < n; ++i)
        for (const auto& [j, v] : m.row(i))
            out.emplace(i * n + j, v);
    return out;
}

/// Krylov sequence K_0 = X, K_{k+1} = A K_k up to the first dependency, and the
/// monic minimal polynomial of A on X.
inline std::pair<std::vector<qmatrix>, upoly> krylov(const qmatrix& x, const std::function<qmatrix(const qmatrix&)>& op)
{
    struct reduced {
        sparse_vector vec;         // eliminated vector
        int pivot;                 // its leading index
        std::vector<rational> how; // vec = sum how[k] K_k
    };
    std::vector<qmatrix> seq{x};
    std::vector<reduced> basis;
    for (;;) {
        const std::size_t k = seq.size() - 1;
        sparse_vector vec = flatten(seq.back());
        std::vector<rational> how(k + 1);
        how[k] = 1;
        for (const auto& b : basis) {
            auto it = vec.find(b.pivot);
            if (it == vec.end())
                continue;
            const rational f = it->second / b.vec.at(b.pivot);
            axpy(vec, -f, b.vec);
            for (std::size_t l = 0; l < b.how.size(); ++l)
                how[l] -= f * b.how[l];
        }
        if (vec.empty()) {
            seq.pop_back();
            return {seq, upoly(how)};
        }
        // Keep the basis in a form where every pivot is absent from later vectors.
        const int pivot = vec.begin()->first;
        basis.push_back({std::move(vec), pivot, std::move(how)});
        seq.push_back(op(seq.back()));
    }
}

} // namespace detail

/// x_i^{+-}(u) = (u -+ ad(t_{i,1})/(2 d_i))^{-1} x_{i,0}^{+-} and
/// xi_i(u) = 1 + [x_i^+(u), x_{i,0}^-], computed on the Krylov space of x_{i,0}^{+-}.
inline rfmatrix current_via_resolvent(const explicit_module& m, int i, current_kind which)
{
    const auto idx = static_cast<std::size_t>(i - 1);
    const qmatrix& t = m.t1.at(idx);
    const int sign = which == current_kind::minus ? -1 : 1;
    const rational scale = make_rational(sign, 2 * m.datum.d(i));
    const qmatrix& x0 = which == current_kind::minus ? m.xm0.at(idx) : m.xp0.at(idx);

    if (x0.is_zero())
        return which == current_kind::xi ? rfmatrix::identity(m.dim) : rfmatrix(m.dim);

    auto op = [&](const qmatrix& x) { return scale * commutator(t, x); };
    auto [seq, mu] = detail::krylov(x0, op);
    const int deg = mu.degree();

    // q_k(u) = sum_{j > k} mu_j u^{j-1-k}
    std::vector<upoly> qk;
    for (int k = 0; k < deg; ++k) {
        std::vector<rational> c;
        for (int j = k + 1; j <= deg; ++j)
            c.push_back(mu.coeff(j));
        qk.push_back(upoly(std::move(c)));
    }

    std::vector<qmatrix> terms = seq;
    if (which == current_kind::xi)
        for (auto& k : terms)
            k = commutator(k, m.xm0.at(idx));

    std::map<std::pair<int, int>, upoly> num;
    for (int k = 0; k < deg; ++k)
        for (int r = 0; r < m.dim; ++r)
            for (const auto& [c, v] : terms[static_cast<std::size_t>(k)].row(r))
                num[{r, c}] += upoly(v) * qk[static_cast<std::size_t>(k)];
    if (which == current_kind::xi)
        for (int r = 0; r < m.dim; ++r)
            num[{r, r}] += mu;

    rfmatrix out(m.dim);
    for (const auto& [key, p] : num)
        out.set(key.first, key.second, rational_fn(p, mu));
    return out;
}

/// Tensor product V (x) W over Y(sl_n): constants are primitive and
/// t_{i,1} -> t (x) 1 + 1 (x) t - sum_{alpha > 0} (alpha_i, alpha) x_alpha^- (x) x_alpha^+.
inline explicit_module tensor_product(const explicit_module& v, const explicit_module& w)
{
    if (v.datum.fam != family::A || w.datum.fam != family::A)
        throw unsupported_type("tensor products are implemented in type A only");
    if (!(v.datum == w.datum))
        throw std::invalid_argument("tensor_product: factors over different algebras");
    explicit_module out;
    out.datum = v.datum;
    out.dim = v.dim * w.dim;
    for (const auto& a : v.labels)
        for (const auto& b : w.labels)
            out.labels.push_back(a + "(x)" + b);
    const int rank = v.datum.rank;
    const qmatrix iv = qmatrix::identity(v.dim), iw = qmatrix::identity(w.dim);
    auto primitive = [&](const qmatrix& a, const qmatrix& b) { return kron(a, iw) + kron(iv, b); };
    for (std::size_t i = 0; i < static_cast<std::size_t>(rank); ++i) {
        out.xi0.push_back(primitive(v.xi0[i], w.xi0[i]));
        out.xp0.push_back(primitive(v.xp0[i], w.xp0[i]));
        out.xm0.push_back(primitive(v.xm0[i], w.xm0[i]));
        qmatrix t = primitive(v.t1[i], w.t1[i]);
        const int node = static_cast<int>(i) + 1;
        for (const auto& [ab, ep] : w.root_plus) {
            const auto [a, b] = ab;
            const int pairing = (node == a) - (node == b) - (node + 1 == a) + (node + 1 == b);
            if (pairing != 0)
                t -= rational(pairing) * kron(v.root_minus.at(ab), ep);
        }
        out.t1.push_back(std::move(t));
    }
    out.weights.clear();
    for (int k = 0; k < out.dim; ++k)
        out.weights.push_back(detail::weights_from_xi0(out, k));
    build_root_vectors(out);
    for (int i = 1; i <= rank; ++i) {
        out.xi.push_back(current_via_resolvent(out, i, current_kind::xi));
        out.xp.push_back(current_via_resolvent(out, i, current_kind::plus));
        out.xm.push_back(current_via_resolvent(out, i, current_kind::minus));
    }
    return out;
}

/// Pole locations of a current with their maximal orders over all entries.
inline std::map<rational, int> poles_of_current(const rfmatrix& f)
{
    std::map<rational, int> out;
    std::set<std::vector<rational>> seen;
    for (const auto& [key, g] : f.entries()) {
        if (g.den().degree() <= 0 || !seen.insert(g.den().coeffs()).second)
            continue;
        for (const auto& [b, order] : rational_roots(g.den()))
            out[b] = std::max(out[b], order);
    }
    return out;
}

/// sigma_i(V) with pole orders, asserting that xi_i, x_i^+ and x_i^- agree.
inline pole_multiset poles_of_module(const explicit_module& m, int i)
{
    const auto idx = static_cast<std::size_t>(i - 1);
    const auto from_xi = poles_of_current(m.xi.at(idx));
    const auto from_xp = poles_of_current(m.xp.at(idx));
    const auto from_xm = poles_of_current(m.xm.at(idx));
    if (from_xi != from_xp || from_xi != from_xm)
        throw pole_mismatch("currents at node " + std::to_string(i) + " have different poles");
    pole_multiset out;
    for (const auto& [b, order] : from_xi)
        out.add(spectral_point(b), order);
    return out;
}

/// Coefficient matrices of the currents at one node, up to index count - 1.
struct node_coefficients {
    std::vector<qmatrix> xi, xp, xm; // xi[r] = xi_{i,r}
};

inline std::vector<node_coefficients> coefficients(const explicit_module& m, int count)
{
    std::vector<node_coefficients> out;
    for (std::size_t i = 0; i < static_cast<std::size_t>(m.datum.rank); ++i) {
        node_coefficients c;
        auto drop_first = [](std::vector<qmatrix> v) {
            v.erase(v.begin());
            return v;
        };
        c.xi = drop_first(m.xi[i].expand_at_infinity(count + 1));
        c.xp = drop_first(m.xp[i].expand_at_infinity(count + 1));
        c.xm = drop_first(m.xm[i].expand_at_infinity(count + 1));
        out.push_back(std::move(c));
    }
    return out;
}

struct relation_violation {
    std::string relation;
    int i, j, r, s;
    friend bool operator==(const relation_violation&, const relation_violation&) = default;
};

/// Checks the defining relations on coefficients for 0 <= r, s <= R (hbar = 1):
///   Y1 [xi_ir, xi_js] = 0
///   Y2 [xi_i0, x+-_js] = +-d_i a_ij x+-_js
///   Y3 [xi_i,r+1, x+-_js] - [xi_ir, x+-_j,s+1] = +-(d_i a_ij / 2)(xi_ir x+-_js + x+-_js xi_ir)
///   Y4 [x+-_i,r+1, x+-_js] - [x+-_ir, x+-_j,s+1] = +-(d_i a_ij / 2)(x+-_ir x+-_js + x+-_js x+-_ir)
///   Y5 [x+_ir, x-_js] = delta_ij xi_i,r+s
inline std::vector<relation_violation> verify_relations(const explicit_module& m, int R)
{
    const int n = m.datum.rank;
    const auto c = coefficients(m, 2 * R + 2);
    std::vector<relation_violation> out;
    auto at = [](const std::vector<qmatrix>& v, int k) -> const qmatrix& {
        return v.at(static_cast<std::size_t>(k));
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const auto& ci = c[static_cast<std::size_t>(i - 1)];
            const auto& cj = c[static_cast<std::size_t>(j - 1)];
            const int dij = m.datum.d(i) * m.datum.a(i, j);
            const rational half = make_rational(dij, 2);
            for (int s = 0; s <= R; ++s) {
                for (int sign : {1, -1}) {
                    const auto& xj = sign > 0 ? cj.xp : cj.xm;
                    const char* name = sign > 0 ? "Y2+" : "Y2-";
                    if (commutator(at(ci.xi, 0), at(xj, s)) != rational(sign * dij) * at(xj, s))
                        out.push_back({name, i, j, 0, s});
                }
                for (int r = 0; r <= R; ++r) {
                    if (!commutator(at(ci.xi, r), at(cj.xi, s)).is_zero())
                        out.push_back({"Y1", i, j, r, s});
                    for (int sign : {1, -1}) {
                        const auto& xi_ = sign > 0 ? ci.xp : ci.xm;
                        const auto& xj = sign > 0 ? cj.xp : cj.xm;
                        const qmatrix y3 = commutator(at(ci.xi, r + 1), at(xj, s)) -
                                           commutator(at(ci.xi, r), at(xj, s + 1)) -
                                           rational(sign * half) * anticommutator(at(ci.xi, r), at(xj, s));
                        if (!y3.is_zero())
                            out.push_back({sign > 0 ? "Y3+" : "Y3-", i, j, r, s});
                        const qmatrix y4 = commutator(at(xi_, r + 1), at(xj, s)) -
                                           commutator(at(xi_, r), at(xj, s + 1)) -
                                           rational(sign * half) * anticommutator(at(xi_, r), at(xj, s));
                        if (!y4.is_zero())
                            out.push_back({sign > 0 ? "Y4+" : "Y4-", i, j, r, s});
                    }
                    qmatrix y5 = commutator(at(ci.xp, r), at(cj.xm, s));
                    if (i == j)
                        y5 -= at(ci.xi, r + s);
                    if (!y5.is_zero())
                        out.push_back({"Y5", i, j, r, s});
                }
            }
        }
    return out;
}

/// One step X^-_{k; b, n} of a maximal chain.
struct chain_step {
    int node;
    spectral_point pole;
    int order_index; // n, with n + 1 the pole order
    friend bool operator==(const chain_step&, const chain_step&) = default;
};

using maximal_chain_t = std::vector<chain_step>;

/// Weight in simple-root coordinates: solves sum_k n_k a_ik = weight_i.
inline std::vector<rational> weight_to_root_coords(const cartan_datum& c, const std::vector<int>& weight)
{
    const int n = c.rank;
    std::vector<std::vector<rational>> a(n, std::vector<rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k)
            a[i][k] = c.a(i + 1, k + 1);
        a[i][n] = weight.at(static_cast<std::size_t>(i));
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (a[piv][col] == 0)
            ++piv;
        std::swap(a[piv], a[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            const rational f = a[r][col] / a[col][col];
            for (int k = col; k <= n; ++k)
                a[r][k] -= f * a[col][k];
        }
    }
    std::vector<rational> out;
    for (int i = 0; i < n; ++i)
        out.push_back(a[i][n] / a[i][i]);
    return out;
}

/// Greedy maximal chain of lowering operators from the highest weight vector
/// (basis index 0). Ties: lowest node first, then the largest pole.
inline maximal_chain_t maximal_chain(const explicit_module& m)
{
    const int n = m.datum.rank;
    sparse_vector v{{0, 1}};
    for (int i = 1; i <= n; ++i)
        if (!m.xp[static_cast<std::size_t>(i - 1)].apply(v).empty())
            throw chain_stuck("basis vector 0 is not a highest weight vector");

    maximal_chain_t chain;
    for (;;) {
        bool moved = false;
        for (int k = 1; k <= n && !moved; ++k) {
            const auto image = m.xm[static_cast<std::size_t>(k - 1)].apply(v);
            if (image.empty())
                continue;
            std::map<rational, int> poles;
            for (const auto& [row, f] : image)
                for (const auto& [b, order] : rational_roots(f.den()))
                    poles[b] = std::max(poles[b], order);
            if (poles.empty())
                throw chain_stuck("lowering current with no poles");
            const auto& [b, order] = *poles.rbegin();
            sparse_vector next;
            for (const auto& [row, f] : image) {
                const rational c = f.leading_laurent_coeff(b, order);
                if (c != 0)
                    next.emplace(row, c);
            }
            chain.push_back({k, spectral_point(b), order - 1});
            v = std::move(next);
            moved = true;
        }
        if (!moved)
            break;
    }

    // The end point must be the lowest weight vector, of weight -lambda^*.
    const auto& top = m.weights.at(0);
    std::vector<int> lowest(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        lowest[static_cast<std::size_t>(i - 1)] = -top.at(static_cast<std::size_t>(m.datum.star(i) - 1));
    for (const auto& [idx, c] : v)
        if (m.weights.at(static_cast<std::size_t>(idx)) != lowest)
            throw chain_stuck("maximal chain stopped outside the lowest weight space");
    return chain;
}

inline pole_multiset baxter_from_chain(const maximal_chain_t& chain, int i)
{
    pole_multiset out;
    for (const auto& step : chain)
        if (step.node == i)
            out.add(step.pole);
    return out;
}

/// Roots of P when mu(u) = P(u + d) / P(u), or nullopt if mu is not of that form.
/// Each denominator root b is matched to a numerator root b - l d (l > 0) by
/// augmenting paths; a perfect matching yields the strings {b, b - d, ..., b - (l-1) d}.
inline std::optional<std::vector<rational>> dominant_roots(const rational_fn& mu, int d)
{
    if (mu.num().degree() != mu.den().degree())
        throw not_same_degree("eigenvalue " + mu.str() + " has numerator and denominator of different degree");
    if (mu.num().lead() != 1)
        return std::nullopt;
    std::vector<rational> bs, cs;
    for (const auto& [b, mult] : rational_roots(mu.den()))
        bs.insert(bs.end(), static_cast<std::size_t>(mult), b);
    for (const auto& [c, mult] : rational_roots(mu.num()))
        cs.insert(cs.end(), static_cast<std::size_t>(mult), c);

    auto gap = [&](std::size_t bi, std::size_t ci) -> long {
        const rational l = (bs[bi] - cs[ci]) / d;
        if (!is_integer(l) || l <= 0)
            return 0;
        return to_long(l.get_num());
    };
    std::vector<int> match_of_c(cs.size(), -1);
    std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t bi, std::vector<bool>& used) {
        for (std::size_t ci = 0; ci < cs.size(); ++ci) {
            if (used[ci] || gap(bi, ci) == 0)
                continue;
            used[ci] = true;
            if (match_of_c[ci] < 0 || augment(static_cast<std::size_t>(match_of_c[ci]), used)) {
                match_of_c[ci] = static_cast<int>(bi);
                return true;
            }
        }
        return false;
    };
    for (std::size_t bi = 0; bi < bs.size(); ++bi) {
        std::vector<bool> used(cs.size(), false);
        if (!augment(bi, used))
            return std::nullopt;
    }
    std::vector<rational> roots;
    for (std::size_t ci = 0; ci < cs.size(); ++ci) {
        const auto bi = static_cast<std::size_t>(match_of_c[ci]);
        const long l = gap(bi, ci);
        for (long k = 0; k < l; ++k)
            roots.push_back(bs[bi] - rational(k * d));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Union of Z(P_mu) over the i-dominant eigenvalues mu of xi_i(u).
inline point_set sigma_from_eigenvalues(const std::vector<rational_fn>& eigenvalues, int d)
{
    point_set out;
    for (const auto& mu : eigenvalues)
        if (auto roots = dominant_roots(mu, d))
            for (const auto& r : *roots)
                out.insert(spectral_point(r));
    return out;
}

inline point_set sigma_from_dominant_weights(const explicit_module& m, int i)
{
    const auto& xi = m.xi.at(static_cast<std::size_t>(i - 1));
    if (!xi.is_diagonal())
        throw error("sigma_from_dominant_weights needs xi_i(u) diagonal in the stored basis");
    std::vector<rational_fn> eigenvalues;
    for (int v = 0; v < m.dim; ++v)
        eigenvalues.push_back(xi.get(v, v));
    return sigma_from_eigenvalues(eigenvalues, m.datum.d(i));
}

/// Checks that xi_i(u) on V (x) W is xi_i (x) xi_i plus terms that lower the
/// first factor and raise the second by a nonzero element of Q_+. Both factors
/// must have diagonal xi_i(u). Returns an empty string on success.
inline std::string check_xi_triangular(const explicit_module& v, const explicit_module& w,
                                       const explicit_module& t, int i)
{
    const auto idx = static_cast<std::size_t>(i - 1);
    if (!v.xi[idx].is_diagonal() || !w.xi[idx].is_diagonal())
        return "factor with non-diagonal xi";
    const int nw = w.dim;
    for (int a = 0; a < v.dim; ++a)
        for (int b = 0; b < nw; ++b) {
            const int diag = a * nw + b;
            if (t.xi[idx].get(diag, diag) != v.xi[idx].get(a, a) * w.xi[idx].get(b, b))
                return "diagonal entry " + std::to_string(diag) + " is not the product of factor eigenvalues";
        }
    for (const auto& [key, f] : t.xi[idx].entries()) {
        if (key.first == key.second)
            continue;
        const int b_row = key.first % nw, b_col = key.second % nw;
        std::vector<int> diff;
        for (std::size_t k = 0; k < w.weights[0].size(); ++k)
            diff.push_back(w.weights[static_cast<std::size_t>(b_row)][k] - w.weights[static_cast<std::size_t>(b_col)][k]);
        const auto coords = weight_to_root_coords(t.datum, diff);
        bool positive = false;
        for (const auto& c : coords) {
            if (c < 0 || !is_integer(c))
                return "off-diagonal entry with second-factor shift outside Q_+";
            positive = positive || c > 0;
        }
        if (!positive)
            return "off-diagonal entry with zero second-factor shift";
    }
    return {};
}

} // namespace yangian
