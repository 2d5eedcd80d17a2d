#pragma once

#include "rational.hpp"

#include <compare>
#include <initializer_list>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace yangian {

/// A point of C written as orbit + offset, in units of hbar.
///
/// Orbit "0" is the rational line through the origin. Any other label stands
/// for a generic translate c + Q that never meets another orbit.
struct spectral_point {
    std::string orbit = "0";
    rational offset = 0;

    spectral_point() = default;
    spectral_point(const rational& r)
        : offset(r)
    {
    }
    spectral_point(std::string o, const rational& r)
        : orbit(std::move(o))
        , offset(r)
    {
    }

    spectral_point shifted(const rational& by) const { return {orbit, offset + by}; }

    friend bool operator==(const spectral_point& a, const spectral_point& b)
    {
        return a.orbit == b.orbit && a.offset == b.offset;
    }

    friend bool operator<(const spectral_point& a, const spectral_point& b)
    {
        if (a.orbit != b.orbit)
            return a.orbit < b.orbit;
        return a.offset < b.offset;
    }

    std::string str() const
    {
        if (orbit == "0")
            return offset.get_str();
        return orbit + (offset < 0 ? "" : "+") + offset.get_str();
    }
};

/// Label of the orbit -o.
inline std::string negate_orbit(const std::string& orbit)
{
    if (orbit == "0")
        return orbit;
    if (!orbit.empty() && orbit[0] == '-')
        return orbit.substr(1);
    return "-" + orbit;
}

inline spectral_point operator-(const spectral_point& p)
{
    return {negate_orbit(p.orbit), -p.offset};
}

using point_set = std::set<spectral_point>;

inline point_set shift(const point_set& s, const rational& by)
{
    point_set out;
    for (const auto& p : s)
        out.insert(p.shifted(by));
    return out;
}

inline point_set negate(const point_set& s)
{
    point_set out;
    for (const auto& p : s)
        out.insert(-p);
    return out;
}

inline point_set set_union(point_set a, const point_set& b)
{
    a.insert(b.begin(), b.end());
    return a;
}

inline bool disjoint(const point_set& a, const point_set& b)
{
    for (const auto& p : a)
        if (b.count(p))
            return false;
    return true;
}

inline bool is_subset(const point_set& a, const point_set& b)
{
    for (const auto& p : a)
        if (!b.count(p))
            return false;
    return true;
}

/// Roots of a monic polynomial counted with multiplicity, or poles with orders.
class pole_multiset {
public:
    using map_type = std::map<spectral_point, int>;

    pole_multiset() = default;
    pole_multiset(std::initializer_list<std::pair<const spectral_point, int>> init)
    {
        for (const auto& [p, m] : init)
            add(p, m);
    }

    void add(const spectral_point& p, int multiplicity = 1)
    {
        if (multiplicity < 0)
            throw std::invalid_argument("negative multiplicity");
        if (multiplicity == 0)
            return;
        m_points[p] += multiplicity;
    }

    void add(const pole_multiset& other)
    {
        for (const auto& [p, m] : other.m_points)
            add(p, m);
    }

    int multiplicity(const spectral_point& p) const
    {
        auto it = m_points.find(p);
        return it == m_points.end() ? 0 : it->second;
    }

    const map_type& points() const { return m_points; }
    bool empty() const { return m_points.empty(); }

    int degree() const
    {
        int total = 0;
        for (const auto& [p, m] : m_points)
            total += m;
        return total;
    }

    point_set support() const
    {
        point_set out;
        for (const auto& [p, m] : m_points)
            out.insert(p);
        return out;
    }

    pole_multiset shifted(const rational& by) const
    {
        pole_multiset out;
        for (const auto& [p, m] : m_points)
            out.m_points.emplace(p.shifted(by), m);
        return out;
    }

    friend bool operator==(const pole_multiset&, const pole_multiset&) = default;

private:
    map_type m_points;
};

/// Node (1-based) to the root multiset of P_i(u). Missing nodes mean P_i = 1.
using drinfeld_tuple = std::map<int, pole_multiset>;

inline drinfeld_tuple fundamental_tuple(int node, const spectral_point& root = {})
{
    drinfeld_tuple out;
    out[node].add(root);
    return out;
}

inline drinfeld_tuple product(const drinfeld_tuple& p, const drinfeld_tuple& q)
{
    drinfeld_tuple out = p;
    for (const auto& [node, roots] : q)
        out[node].add(roots);
    return out;
}

} // namespace yangian
