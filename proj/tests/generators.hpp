// Seeded random inputs for the property suites.
#ifndef ADJOINT_TESTS_GENERATORS_HPP
#define ADJOINT_TESTS_GENERATORS_HPP

#include <random>
#include <string>
#include <vector>

#include <adjoint/graded.hpp>
#include <adjoint/profile.hpp>

namespace gen
{

using adjoint::DivisorExpr;
using adjoint::Rational;

class Source
{
public:
    explicit Source(std::uint32_t seed) : m_rng(seed) {}

    int integer(int lo, int hi)
    {
        return std::uniform_int_distribution<int>(lo, hi)(m_rng);
    }

    Rational rational(int span = 6, int max_den = 4)
    {
        return adjoint::make_rational(integer(-span, span), integer(1, max_den));
    }

    DivisorExpr divisor(const std::vector<std::string> &symbols, int span = 4, int max_den = 3)
    {
        DivisorExpr d;
        for (const auto &s : symbols) {
            d.add(s, rational(span, max_den));
        }
        return d;
    }

    DivisorExpr integral_divisor(const std::vector<std::string> &symbols, int span = 4)
    {
        DivisorExpr d;
        for (const auto &s : symbols) {
            d.add(s, Rational(integer(-span, span)));
        }
        return d;
    }

    adjoint::ClassExpr class_of_degree(int degree, const std::vector<std::string> &symbols, bool with_c2 = false)
    {
        adjoint::ClassExpr c(degree);
        if (degree == 0) {
            return adjoint::ClassExpr::constant(rational());
        }
        for (int t = integer(1, 3); t > 0; --t) {
            adjoint::Monomial m;
            for (int i = 0; i < degree; ++i) {
                m.push_back(symbols[integer(0, static_cast<int>(symbols.size()) - 1)]);
            }
            c.add_term(m, rational());
        }
        if (with_c2 && degree == 2) {
            c.add_c2(rational());
        }
        return c;
    }

    // A profile satisfying every invariant: symmetric integral triple form,
    // integral chi(O) = -K.c2/24. The first canonical coordinate is +-1 so
    // that c2 can be corrected into the right residue class.
    adjoint::ThreefoldProfile valid_profile(int max_rank = 3)
    {
        const int n = integer(1, max_rank);
        std::vector<std::string> basis;
        for (int i = 0; i < n; ++i) {
            basis.push_back("B" + std::to_string(i));
        }
        adjoint::ThreefoldProfile p(basis);
        p.name = "random";
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                for (int k = j; k < n; ++k) {
                    if (const int v = integer(-5, 5); v != 0) {
                        p.set_triple(i, j, k, Rational(v));
                    }
                }
            }
        }
        std::vector<Rational> kc(n), c2(n);
        kc[0] = integer(0, 1) ? 1 : -1;
        for (int i = 1; i < n; ++i) {
            kc[i] = integer(-4, 4);
        }
        Rational dot(0);
        for (int i = 0; i < n; ++i) {
            c2[i] = integer(-30, 60);
            dot += kc[i] * c2[i];
        }
        // Shift c2[0] so that K.c2 is a multiple of 24.
        const long long r = static_cast<long long>(adjoint::numerator_of(dot) % 24);
        c2[0] -= kc[0] * Rational(r);
        dot -= Rational(r);
        DivisorExpr k;
        for (int i = 0; i < n; ++i) {
            k.add(basis[i], kc[i]);
        }
        p.set_canonical(k);
        p.set_c2_vector(c2);
        p.set_chi_O(-dot / 24);
        return p;
    }

private:
    std::mt19937 m_rng;
};

} // namespace gen

#endif
