#ifndef ADJOINT_CHERN_TWIST_HPP
#define ADJOINT_CHERN_TWIST_HPP

#include <adjoint/graded.hpp>

namespace adjoint
{

// Chern data of a Q-twisted vector bundle E<delta>: rank, c1(E), c2(E) and
// the twisting class delta. Nothing beyond c1 and c2 is modelled.
struct QTwistedBundle {
    int rank = 1;
    ClassExpr c1 = ClassExpr(1);
    ClassExpr c2 = ClassExpr(2);
    ClassExpr twist = ClassExpr(1);

    QTwistedBundle() = default;
    QTwistedBundle(int rank, ClassExpr c1, ClassExpr c2, ClassExpr twist);
};

// c1(E) + r delta
ClassExpr twist_c1(const QTwistedBundle &b);

// c2(E) + (r-1) c1(E).delta + r(r-1)/2 delta^2
ClassExpr twist_c2(const QTwistedBundle &b);

// Treats the twisted Chern classes of b as an honest bundle and twists it
// again by `delta`.
QTwistedBundle retwist(const QTwistedBundle &b, const ClassExpr &delta);

// c2 of Omega_X<A/n> for an n-fold with canonical class k:
// c2(X) + (n-1)/n K.A + (n-1)/(2n) A^2.
ClassExpr cotangent_twisted_c2(int n, const ClassExpr &k, const ClassExpr &a);

} // namespace adjoint

#endif
