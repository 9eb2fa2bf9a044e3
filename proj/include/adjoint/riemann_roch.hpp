#ifndef ADJOINT_RIEMANN_ROCH_HPP
#define ADJOINT_RIEMANN_ROCH_HPP

#include <string>
#include <utility>
#include <vector>

#include <adjoint/divisor.hpp>
#include <adjoint/graded.hpp>
#include <adjoint/profile.hpp>
#include <adjoint/rational.hpp>

namespace adjoint
{

// Symbolic Riemann-Roch right-hand side for a divisor over free symbols, K
// being the canonical class:
//   chi(D) = 1/12 D.(D-K).(2D-K) + 1/12 D.c2 + chi(O).
struct ChiExpression {
    DivisorExpr divisor;
    NumberExpr expr;
};

ChiExpression chi_expression(const DivisorExpr &d);

// Numerical chi(X, O(D)); D may use basis symbols, K and named divisors.
Rational chi_line_bundle(const ThreefoldProfile &p, const DivisorExpr &d);

// (chi(O) as stored, -1/24 K.c2).
std::pair<Rational, Rational> chi_O_consistency(const ThreefoldProfile &p);

// chi(D), which equals h^0(D) provided a vanishing flag covers D: either
// Ample(D-K) (Kodaira) or NefAndBig(D-K) (Kawamata-Viehweg).
// Throws missing_flag or non_integer_chi.
Integer h0_lower_bound_from_chi(const ThreefoldProfile &p, const DivisorExpr &d);

struct NamedIdentity {
    std::string name;
    NumberExpr lhs;
    NumberExpr rhs;
};

// The six chi and Chern-number identities behind the adjoint bounds, as
// symbolic pairs over K and A (and D for Serre duality).
std::vector<NamedIdentity> adjoint_identities();

// identity_check over adjoint_identities().
std::vector<std::pair<std::string, bool>> identity_suite();

} // namespace adjoint

#endif
