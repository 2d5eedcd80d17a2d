#pragma once

#include "cartan.hpp"
#include "explicit_reps.hpp"
#include "laurent.hpp"
#include "q_cartan.hpp"
#include "spectral.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace yangian {

using json = nlohmann::json;

namespace detail {

inline json integer_to_json(const integer& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str(); // too large for a JSON number; keep it exact as text
}

inline integer integer_from_json(const json& j)
{
    if (j.is_number_integer())
        return integer(j.get<long>());
    if (j.is_string())
        return integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

} // namespace detail

/// [num, den]
inline json rational_to_json(const rational& r)
{
    return json::array({detail::integer_to_json(r.get_num()), detail::integer_to_json(r.get_den())});
}

inline rational rational_from_json(const json& j)
{
    if (j.is_array() && j.size() == 2)
        return make_rational(detail::integer_from_json(j[0]), detail::integer_from_json(j[1]));
    if (j.is_number_integer())
        return rational(j.get<long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected [num, den], got " + j.dump());
}

/// [orbit, num, den]
inline json point_to_json(const spectral_point& p)
{
    return json::array({p.orbit, detail::integer_to_json(p.offset.get_num()),
                        detail::integer_to_json(p.offset.get_den())});
}

inline spectral_point point_from_json(const json& j)
{
    if (!j.is_array() || j.size() < 3 || !j[0].is_string())
        throw std::invalid_argument("expected [orbit, num, den], got " + j.dump());
    return {j[0].get<std::string>(),
            make_rational(detail::integer_from_json(j[1]), detail::integer_from_json(j[2]))};
}

inline json point_set_to_json(const point_set& s)
{
    json out = json::array();
    for (const auto& p : s)
        out.push_back(point_to_json(p));
    return out;
}

inline point_set point_set_from_json(const json& j)
{
    point_set out;
    for (const auto& e : j)
        out.insert(point_from_json(e));
    return out;
}

/// [[orbit, num, den, mult], ...]
inline json multiset_to_json(const pole_multiset& m)
{
    json out = json::array();
    for (const auto& [p, mult] : m.points()) {
        json e = point_to_json(p);
        e.push_back(mult);
        out.push_back(std::move(e));
    }
    return out;
}

inline pole_multiset multiset_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected a list of roots, got " + j.dump());
    pole_multiset out;
    for (const auto& e : j) {
        const int mult = e.size() >= 4 ? e[3].get<int>() : 1;
        if (mult < 1)
            throw std::invalid_argument("root multiplicity must be positive");
        out.add(point_from_json(e), mult);
    }
    return out;
}

/// {"1": [[orbit, num, den, mult], ...], ...}
inline json drinfeld_to_json(const drinfeld_tuple& p)
{
    json out = json::object();
    for (const auto& [node, roots] : p)
        if (!roots.empty())
            out[std::to_string(node)] = multiset_to_json(roots);
    return out;
}

inline drinfeld_tuple drinfeld_from_json(const json& j, const cartan_datum& datum)
{
    if (!j.is_object())
        throw std::invalid_argument("a Drinfeld tuple must be a JSON object keyed by node");
    drinfeld_tuple out;
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        int node = 0;
        try {
            node = std::stoi(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || node < 1 || node > datum.rank)
            throw std::invalid_argument("node '" + key + "' is not in 1.." + std::to_string(datum.rank));
        pole_multiset roots = multiset_from_json(value);
        if (!roots.empty())
            out[node] = std::move(roots);
    }
    return out;
}

/// [[exp, num, den], ...], exponents ascending.
inline json laurent_to_json(const laurent_poly& p)
{
    json out = json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back(json::array({e, detail::integer_to_json(c.get_num()), detail::integer_to_json(c.get_den())}));
    return out;
}

inline laurent_poly laurent_from_json(const json& j)
{
    laurent_poly out;
    for (const auto& e : j)
        out.add_to(e.at(0).get<int>(), make_rational(detail::integer_from_json(e.at(1)), detail::integer_from_json(e.at(2))));
    return out;
}

inline json laurent_matrix_to_json(const laurent_matrix& m)
{
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& e : row)
            r.push_back(laurent_to_json(e));
        out.push_back(std::move(r));
    }
    return out;
}

inline json window_to_json(const series_window& w)
{
    json out = json::array();
    for (const auto& c : w.coeffs)
        out.push_back(detail::integer_to_json(c));
    return out;
}

inline json cartan_to_json(const cartan_datum& c)
{
    json star = json::array();
    for (int i = 1; i <= c.rank; ++i)
        star.push_back(c.star(i));
    return {{"family", std::string(1, family_letter(c.fam))},
            {"rank", c.rank},
            {"cartan", c.cartan},
            {"d", c.symmetrizers},
            {"two_kappa", c.two_kappa},
            {"h_dual", c.dual_coxeter},
            {"star", star}};
}

inline json qcartan_to_json(const qcartan_data& qc)
{
    json v = json::object();
    for (int i = 1; i <= qc.datum().rank; ++i)
        for (int j = 1; j <= qc.datum().rank; ++j)
            v[std::to_string(i) + "," + std::to_string(j)] = window_to_json(qc.vij_window(i, j));
    return {{"type", cartan_to_json(qc.datum())},
            {"B", laurent_matrix_to_json(qc.B())},
            {"C", laurent_matrix_to_json(qc.C())},
            {"window", qc.window()},
            {"v", v}};
}

/// Sparse triplets [row, col, "(num coeffs)/(den coeffs)"].
inline json rfmatrix_to_json(const rfmatrix& m)
{
    json out = json::array();
    for (const auto& [key, f] : m.entries())
        out.push_back(json::array({key.first, key.second, f.str()}));
    return out;
}

inline json module_to_json(const explicit_module& m)
{
    json nodes = json::array();
    for (int i = 1; i <= m.datum.rank; ++i) {
        const auto idx = static_cast<std::size_t>(i - 1);
        nodes.push_back({{"node", i},
                         {"xi", rfmatrix_to_json(m.xi[idx])},
                         {"x+", rfmatrix_to_json(m.xp[idx])},
                         {"x-", rfmatrix_to_json(m.xm[idx])}});
    }
    return {{"type", m.datum.name()}, {"dim", m.dim}, {"basis", m.labels}, {"weights", m.weights}, {"currents", nodes}};
}

} // namespace yangian
