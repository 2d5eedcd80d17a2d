#pragma once

#include "rational.hpp"
#include "upoly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace yangian {

using sparse_vector = std::map<int, rational>;

inline void axpy(sparse_vector& y, const rational& a, const sparse_vector& x)
{
    if (a == 0)
        return;
    for (const auto& [k, v] : x) {
        auto [it, inserted] = y.try_emplace(k, a * v);
        if (!inserted) {
            it->second += a * v;
            if (it->second == 0)
                y.erase(it);
        }
    }
}

/// Square sparse matrix over Q, stored by rows; zeros are never stored.
class qmatrix {
public:
    qmatrix() = default;
    explicit qmatrix(int n)
        : m_rows(static_cast<std::size_t>(n))
    {
    }

    static qmatrix identity(int n)
    {
        qmatrix m(n);
        for (int i = 0; i < n; ++i)
            m.m_rows[static_cast<std::size_t>(i)].emplace(i, 1);
        return m;
    }

    int size() const { return static_cast<int>(m_rows.size()); }
    const sparse_vector& row(int i) const { return m_rows.at(static_cast<std::size_t>(i)); }
    const std::vector<sparse_vector>& rows() const { return m_rows; }

    rational get(int i, int j) const
    {
        const auto& r = row(i);
        auto it = r.find(j);
        return it == r.end() ? rational(0) : it->second;
    }

    void set(int i, int j, const rational& v)
    {
        check(i, j);
        auto& r = m_rows[static_cast<std::size_t>(i)];
        if (v == 0)
            r.erase(j);
        else
            r[j] = v;
    }

    void add_to(int i, int j, const rational& v)
    {
        check(i, j);
        if (v == 0)
            return;
        auto& r = m_rows[static_cast<std::size_t>(i)];
        auto [it, inserted] = r.try_emplace(j, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0)
                r.erase(it);
        }
    }

    bool is_zero() const
    {
        for (const auto& r : m_rows)
            if (!r.empty())
                return false;
        return true;
    }

    std::size_t nonzeros() const
    {
        std::size_t n = 0;
        for (const auto& r : m_rows)
            n += r.size();
        return n;
    }

    bool is_diagonal() const
    {
        for (int i = 0; i < size(); ++i)
            for (const auto& [j, v] : row(i))
                if (j != i)
                    return false;
        return true;
    }

    qmatrix& operator+=(const qmatrix& o)
    {
        same_size(o);
        for (int i = 0; i < size(); ++i)
            axpy(m_rows[static_cast<std::size_t>(i)], 1, o.row(i));
        return *this;
    }
    qmatrix& operator-=(const qmatrix& o)
    {
        same_size(o);
        for (int i = 0; i < size(); ++i)
            axpy(m_rows[static_cast<std::size_t>(i)], -1, o.row(i));
        return *this;
    }
    friend qmatrix operator+(qmatrix a, const qmatrix& b) { return a += b; }
    friend qmatrix operator-(qmatrix a, const qmatrix& b) { return a -= b; }
    friend qmatrix operator*(const rational& s, const qmatrix& a)
    {
        qmatrix out(a.size());
        if (s == 0)
            return out;
        for (int i = 0; i < a.size(); ++i)
            for (const auto& [j, v] : a.row(i))
                out.m_rows[static_cast<std::size_t>(i)].emplace(j, s * v);
        return out;
    }
    friend qmatrix operator-(const qmatrix& a) { return rational(-1) * a; }

    friend qmatrix operator*(const qmatrix& a, const qmatrix& b)
    {
        a.same_size(b);
        qmatrix out(a.size());
        for (int i = 0; i < a.size(); ++i) {
            auto& target = out.m_rows[static_cast<std::size_t>(i)];
            for (const auto& [k, v] : a.row(i))
                axpy(target, v, b.row(k));
        }
        return out;
    }

    sparse_vector apply(const sparse_vector& x) const
    {
        sparse_vector y;
        for (int i = 0; i < size(); ++i) {
            rational acc = 0;
            for (const auto& [j, v] : row(i)) {
                auto it = x.find(j);
                if (it != x.end())
                    acc += v * it->second;
            }
            if (acc != 0)
                y.emplace(i, acc);
        }
        return y;
    }

    friend bool operator==(const qmatrix&, const qmatrix&) = default;

    std::string str() const
    {
        std::string out;
        for (int i = 0; i < size(); ++i)
            for (const auto& [j, v] : row(i))
                out += "(" + std::to_string(i) + "," + std::to_string(j) + ")=" + v.get_str() + " ";
        return out;
    }

private:
    void check(int i, int j) const
    {
        if (i < 0 || j < 0 || i >= size() || j >= size())
            throw std::out_of_range("qmatrix index");
    }
    void same_size(const qmatrix& o) const
    {
        if (o.size() != size())
            throw std::invalid_argument("qmatrix size mismatch");
    }

    std::vector<sparse_vector> m_rows;
};

inline qmatrix commutator(const qmatrix& a, const qmatrix& b)
{
    return a * b - b * a;
}

inline qmatrix anticommutator(const qmatrix& a, const qmatrix& b)
{
    return a * b + b * a;
}

/// Kronecker product; basis index of e_a (x) f_b is a * dim(B) + b.
inline qmatrix kron(const qmatrix& a, const qmatrix& b)
{
    const int nb = b.size();
    qmatrix out(a.size() * nb);
    for (int i = 0; i < a.size(); ++i)
        for (const auto& [j, va] : a.row(i))
            for (int k = 0; k < nb; ++k)
                for (const auto& [l, vb] : b.row(k))
                    out.set(i * nb + k, j * nb + l, va * vb);
    return out;
}

/// Sparse square matrix of rational functions of u.
class rfmatrix {
public:
    using key = std::pair<int, int>;

    rfmatrix() = default;
    explicit rfmatrix(int n)
        : m_n(n)
    {
    }

    static rfmatrix identity(int n)
    {
        rfmatrix m(n);
        for (int i = 0; i < n; ++i)
            m.m_entries.emplace(key{i, i}, rational_fn(1));
        return m;
    }

    int size() const { return m_n; }
    const std::map<key, rational_fn>& entries() const { return m_entries; }

    rational_fn get(int i, int j) const
    {
        auto it = m_entries.find({i, j});
        return it == m_entries.end() ? rational_fn() : it->second;
    }

    void set(int i, int j, const rational_fn& f)
    {
        if (i < 0 || j < 0 || i >= m_n || j >= m_n)
            throw std::out_of_range("rfmatrix index");
        if (f.is_zero())
            m_entries.erase({i, j});
        else
            m_entries[{i, j}] = f;
    }

    bool is_diagonal() const
    {
        for (const auto& [k, f] : m_entries)
            if (k.first != k.second)
                return false;
        return true;
    }

    /// Coefficient matrices M_0..M_{count-1} of sum_k M_k u^{-k}.
    std::vector<qmatrix> expand_at_infinity(int count) const
    {
        std::vector<qmatrix> out(static_cast<std::size_t>(count), qmatrix(m_n));
        for (const auto& [k, f] : m_entries) {
            const auto e = f.expand_at_infinity(count);
            for (int r = 0; r < count; ++r)
                out[static_cast<std::size_t>(r)].set(k.first, k.second, e[static_cast<std::size_t>(r)]);
        }
        return out;
    }

    /// Applies the matrix to a constant vector.
    std::map<int, rational_fn> apply(const sparse_vector& x) const
    {
        std::map<int, rational_fn> out;
        for (const auto& [k, f] : m_entries) {
            auto it = x.find(k.second);
            if (it == x.end())
                continue;
            rational_fn term = rational_fn(it->second) * f;
            auto [pos, inserted] = out.try_emplace(k.first, term);
            if (!inserted)
                pos->second += term;
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    }

    friend bool operator==(const rfmatrix&, const rfmatrix&) = default;

private:
    int m_n = 0;
    std::map<key, rational_fn> m_entries;
};

} // namespace yangian
