"""R-polynomials of orbit intervals in the rook monoid.

For a left descent s of sigma (an s with l(s sigma) < l(sigma)):

    R[theta, sigma] = R[s theta, s sigma]                      if s theta < theta
                    = q R[theta, s sigma]                      if s theta = theta
                    = (q-1) R[theta, s sigma] + q R[s theta, s sigma]
                                                               if s theta > theta

and the mirror rules on right descents when no left descent exists;
every element of positive length has a descent on at least one side.
Base cases: R[theta, theta] = 1 and R[theta, sigma] = 0 when theta is
not below sigma.  The result does not depend on the descent chosen; the
deterministic policy here (smallest-index left descent, else smallest
right) exists so that memoization is sound, and the tests check
left/right confluence explicitly.

The constant term R[theta, sigma](0) equals the Mobius function of the
interval.
"""

from __future__ import annotations

from functools import lru_cache

from . import order, renner, weyl
from .polynomials import IntPoly, Laurent, ONE, Q, Q_MINUS_1, ZERO
from .renner import Word

__all__ = ["rpoly", "mobius_via_r", "bar", "delta_identity_sum",
           "verify_delta_identity"]


def _left_descents(sigma: Word) -> list[int]:
    n = len(sigma)
    ls = renner.length(sigma)
    return [i for i in range(1, n)
            if renner.length(renner.multiply(weyl.simple_reflection(n, i), sigma)) < ls]


def _right_descents(sigma: Word) -> list[int]:
    n = len(sigma)
    ls = renner.length(sigma)
    return [i for i in range(1, n)
            if renner.length(renner.multiply(sigma, weyl.simple_reflection(n, i))) < ls]


@lru_cache(maxsize=None)
def rpoly(theta: Word, sigma: Word) -> IntPoly:
    """The R-polynomial of a same-orbit pair.

    >>> print(rpoly((0, 0, 0, 1), (0, 0, 0, 3)))
    q^2 - q
    >>> print(rpoly((0, 0, 1, 2), (0, 0, 2, 3)))
    q^2 - 2q + 1
    """
    n = len(theta)
    if renner.rank(theta) != renner.rank(sigma) or n != len(sigma):
        raise ValueError("R-polynomials are defined for same-orbit pairs")
    if theta == sigma:
        return ONE
    if not order.leq(theta, sigma):
        return ZERO
    # theta < sigma forces l(sigma) > 0, so a descent exists on some side.
    lds = _left_descents(sigma)
    if lds:
        s = weyl.simple_reflection(n, min(lds))
        s_sigma = renner.multiply(s, sigma)
        s_theta = renner.multiply(s, theta)
        diff = renner.length(s_theta) - renner.length(theta)
        if diff < 0:
            return rpoly(s_theta, s_sigma)
        if diff == 0:
            return Q * rpoly(theta, s_sigma)
        return Q_MINUS_1 * rpoly(theta, s_sigma) + Q * rpoly(s_theta, s_sigma)
    s = weyl.simple_reflection(n, min(_right_descents(sigma)))
    sigma_s = renner.multiply(sigma, s)
    theta_s = renner.multiply(theta, s)
    diff = renner.length(theta_s) - renner.length(theta)
    if diff < 0:
        return rpoly(theta_s, sigma_s)
    if diff == 0:
        return Q * rpoly(theta, sigma_s)
    return Q_MINUS_1 * rpoly(theta, sigma_s) + Q * rpoly(theta_s, sigma_s)


def mobius_via_r(theta: Word, sigma: Word) -> int:
    """Mobius function as the constant term of the R-polynomial."""
    return rpoly(theta, sigma).constant_term


def bar(p: Laurent) -> Laurent:
    """The bar involution v -> v^-1 (q -> q^-1) on Laurent polynomials."""
    return p.bar()


def delta_identity_sum(theta: Word, sigma: Word) -> Laurent:
    """sum over theta <= nu <= sigma of R[theta,nu] q^(l(sigma)-l(nu)) bar(R[nu,sigma]).

    The sum telescopes to 1 when theta = sigma and to 0 otherwise.
    """
    if renner.rank(theta) != renner.rank(sigma) or len(theta) != len(sigma):
        raise ValueError("the identity applies to same-orbit pairs")
    total = Laurent(0, ())
    if not order.leq(theta, sigma):
        return total
    l_sigma = renner.length(sigma)
    for nu in order.interval_elements(theta, sigma):
        total = total + (rpoly(theta, nu).to_laurent()
                         * Laurent.q_power(l_sigma - renner.length(nu))
                         * rpoly(nu, sigma).bar())
    return total


def verify_delta_identity(theta: Word, sigma: Word) -> bool:
    """
    >>> verify_delta_identity((0, 1), (2, 0))
    True
    """
    expected = Laurent.from_int(1 if theta == sigma else 0)
    return delta_identity_sum(theta, sigma) == expected
