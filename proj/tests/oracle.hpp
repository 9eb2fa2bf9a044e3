// Reference computations that share no code path with the library's
// evaluators. Used to check derived values.
#ifndef ADJOINT_TESTS_ORACLE_HPP
#define ADJOINT_TESTS_ORACLE_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include <adjoint/profile.hpp>
#include <adjoint/rational.hpp>

namespace oracle
{

using adjoint::Rational;

inline std::vector<Rational> coords(const adjoint::ThreefoldProfile &p, const adjoint::DivisorExpr &d)
{
    std::vector<Rational> v(p.basis().size());
    for (const auto &[sym, c] : d.terms()) {
        if (sym == "K") {
            for (const auto &[ks, kc] : p.canonical().terms()) {
                v[*p.index_of(ks)] += c * kc;
            }
        } else {
            v[*p.index_of(sym)] += c;
        }
    }
    return v;
}

// Full symmetric tensor from the stored sorted entries.
inline Rational tensor(const adjoint::ThreefoldProfile &p, std::size_t i, std::size_t j, std::size_t k)
{
    std::array<std::size_t, 3> key{i, j, k};
    std::sort(key.begin(), key.end());
    const auto it = p.triple_entries().find(key);
    return it == p.triple_entries().end() ? Rational(0) : it->second;
}

inline Rational cube(const adjoint::ThreefoldProfile &p, const std::vector<Rational> &x, const std::vector<Rational> &y,
                     const std::vector<Rational> &z)
{
    Rational s(0);
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                s += x[i] * y[j] * z[k] * tensor(p, i, j, k);
            }
        }
    }
    return s;
}

inline Rational c2dot(const adjoint::ThreefoldProfile &p, const std::vector<Rational> &x)
{
    Rational s(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * p.c2_vector()[i];
    }
    return s;
}

// Hirzebruch-Riemann-Roch in expanded form:
// D^3/6 - D^2.K/4 + D.(K^2 + c2)/12 + chi(O).
inline Rational chi(const adjoint::ThreefoldProfile &p, const adjoint::DivisorExpr &d)
{
    const auto x = coords(p, d);
    const auto k = coords(p, adjoint::DivisorExpr("K"));
    return cube(p, x, x, x) / 6 - cube(p, x, x, k) / 4 + (cube(p, x, k, k) + c2dot(p, x)) / 12 + p.chi_O();
}

// binom(n + k, k) as a polynomial in n; valid for every integer n.
inline Rational binomial_poly(const Rational &n, int k)
{
    Rational out(1);
    for (int i = 1; i <= k; ++i) {
        out *= (n + i) / Rational(i);
    }
    return out;
}

// chi(O_X(k)) on a degree-d hypersurface in P4, from the Koszul sequence.
inline Rational hypersurface_chi(int d, int k)
{
    return binomial_poly(Rational(k), 4) - binomial_poly(Rational(k - d), 4);
}

// c1, c2 coefficients of (1+H)^5 / (1+dH) up to degree 2.
inline std::pair<Rational, Rational> hypersurface_chern(int d)
{
    const std::array<Rational, 3> num{Rational(1), Rational(5), Rational(10)};
    const std::array<Rational, 3> inv{Rational(1), Rational(-d), Rational(d * d)};
    return {num[1] + inv[1], num[2] + num[1] * inv[1] + inv[2]};
}

// Projectivised split bundle P(O(a_1) + ... + O(a_r)) of rank-r quotients
// over P^m with m + r - 1 = 3. Classes are polynomials in xi = O(1) and the
// pulled-back hyperplane h; integration uses the Segre class identities
// pi_*(xi^{r-1+i}) = h_i(a) h^i.
class ProjectiveBundle
{
public:
    // Monomial xi^a h^b as (a, b).
    using Poly = std::map<std::pair<int, int>, Rational>;

    ProjectiveBundle(int base_dim, std::vector<int> twists) : m_base(base_dim), m_a(std::move(twists)) {}

    static Poly xi()
    {
        return {{{1, 0}, Rational(1)}};
    }
    static Poly h()
    {
        return {{{0, 1}, Rational(1)}};
    }
    static Poly constant(const Rational &c)
    {
        return {{{0, 0}, c}};
    }

    static Poly add(Poly a, const Poly &b, const Rational &s = Rational(1))
    {
        for (const auto &[m, c] : b) {
            a[m] += s * c;
        }
        return a;
    }
    Poly mul(const Poly &a, const Poly &b) const
    {
        Poly out;
        for (const auto &[ma, ca] : a) {
            for (const auto &[mb, cb] : b) {
                const std::pair<int, int> m{ma.first + mb.first, ma.second + mb.second};
                if (m.first + m.second <= 3 && m.second <= m_base) {
                    out[m] += ca * cb;
                }
            }
        }
        return out;
    }

    Rational integrate(const Poly &p) const
    {
        const int r = static_cast<int>(m_a.size());
        Rational s(0);
        for (const auto &[m, c] : p) {
            const auto [xa, hb] = m;
            if (xa + hb != 3) {
                continue;
            }
            const int i = xa - (r - 1);
            if (i >= 0 && hb + i == m_base) {
                s += c * complete_homogeneous(i);
            }
        }
        return s;
    }

    // Total Chern class of the tangent bundle up to degree 2:
    // (1+h)^{m+1} * prod (1 + xi - a_i h).
    std::array<Poly, 3> chern() const
    {
        Poly total = constant(Rational(1));
        for (int i = 0; i <= m_base; ++i) {
            total = mul(total, add(constant(Rational(1)), h()));
        }
        for (int a : m_a) {
            total = mul(total, add(add(constant(Rational(1)), xi()), h(), Rational(-a)));
        }
        std::array<Poly, 3> out;
        for (const auto &[m, c] : total) {
            const int deg = m.first + m.second;
            if (deg <= 2) {
                out[deg][m] += c;
            }
        }
        return out;
    }

private:
    Rational complete_homogeneous(int degree) const
    {
        // Sum over multisets of size `degree` drawn from m_a.
        std::vector<Rational> table(degree + 1, Rational(0));
        table[0] = 1;
        for (int a : m_a) {
            for (int d = 1; d <= degree; ++d) {
                table[d] += Rational(a) * table[d - 1];
            }
        }
        return table[degree];
    }

    int m_base;
    std::vector<int> m_a;
};

} // namespace oracle

#endif
