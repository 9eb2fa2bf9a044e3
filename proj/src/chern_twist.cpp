#include <adjoint/chern_twist.hpp>

#include <string>

#include <adjoint/error.hpp>

namespace adjoint
{

QTwistedBundle::QTwistedBundle(int rank_, ClassExpr c1_, ClassExpr c2_, ClassExpr twist_)
    : rank(rank_), c1(std::move(c1_)), c2(std::move(c2_)), twist(std::move(twist_))
{
    if (rank < 1) {
        throw Error(ErrorKind::invalid_argument, "bundle rank must be positive, got " + std::to_string(rank));
    }
    if (c1.degree() != 1 || c2.degree() != 2 || twist.degree() != 1) {
        throw Error(ErrorKind::invalid_argument, "bundle Chern data must have degrees (1, 2, 1)");
    }
}

ClassExpr twist_c1(const QTwistedBundle &b)
{
    return b.c1 + Rational(b.rank) * b.twist;
}

ClassExpr twist_c2(const QTwistedBundle &b)
{
    const Rational r(b.rank);
    return b.c2 + (r - 1) * multiply(b.c1, b.twist) + (r * (r - 1) / 2) * multiply(b.twist, b.twist);
}

QTwistedBundle retwist(const QTwistedBundle &b, const ClassExpr &delta)
{
    return QTwistedBundle(b.rank, twist_c1(b), twist_c2(b), delta);
}

ClassExpr cotangent_twisted_c2(int n, const ClassExpr &k, const ClassExpr &a)
{
    if (n < 2) {
        throw Error(ErrorKind::invalid_argument, "cotangent twist needs dimension n >= 2, got " + std::to_string(n));
    }
    const QTwistedBundle omega(n, k, ClassExpr::c2_atom(), Rational(1, n) * a);
    return twist_c2(omega);
}

} // namespace adjoint
