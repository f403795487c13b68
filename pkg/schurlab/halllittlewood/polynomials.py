"""halllittlewood.polynomials

Hall-Littlewood P and Q functions in at most four variables, from the
symmetrization formula

    P_lambda(x; t) = (1 / v_lambda(t))
        sum_{w in S_n} w( x^lambda prod_{i<j} (x_i - t x_j) / (x_i - x_j) ),

where lambda is padded with zeros to n parts, m_i is the multiplicity of
the part i (m_0 counting the zeros) and

    v_lambda(t) = prod_{i>=0} prod_{j=1}^{m_i} (1 - t^j) / (1 - t),
    Q_lambda = b_lambda(t) P_lambda,  b_lambda(t) = prod_{i>=1} prod_{j=1}^{m_i} (1 - t^j).

The sum is formed as a polynomial in t and divided by v_lambda(t) before t
is substituted, so that t = -1, where v_lambda can vanish, is covered.
With distinct variables only t stays symbolic; repeated variables fall back
to the fully symbolic polynomial.
"""

import itertools
import logging
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import sympy
from sympy.combinatorics import Permutation

from schurlab.common.errors import InfeasibleScaleError, IntegralityError, PreconditionError
from schurlab.common.schema import EXACT, Rational
from schurlab.common.utils.numeric import to_mode
from schurlab.partitions import Partition

logger = logging.getLogger(__name__)

MAX_VARIABLES = 4

T = sympy.Symbol("t")


def _rat(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _poly(expr) -> sympy.Poly:
    return sympy.Poly(expr, T, domain=sympy.QQ)


def _q_integer(j: int) -> sympy.Poly:
    """[j]_t = 1 + t + ... + t^(j-1)."""
    return _poly(sum(T ** i for i in range(j)))


@lru_cache(maxsize=512)
def v_polynomial(partition: Partition, n: int) -> sympy.Poly:
    """v_lambda(t) for lambda padded to n parts."""
    result = _poly(1)
    for m in Counter(partition.padded(n)).values():
        for j in range(1, m + 1):
            result *= _q_integer(j)
    return result


@lru_cache(maxsize=512)
def b_polynomial(partition: Partition) -> sympy.Poly:
    """b_lambda(t) = prod_i (t; t)_{m_i}."""
    result = _poly(1)
    for m in partition.multiplicities.values():
        for j in range(1, m + 1):
            result *= _poly(1 - T ** j)
    return result


def b_lambda(partition: Partition, t: Rational) -> Fraction:
    return _fraction(b_polynomial(partition).eval(_rat(to_mode(t, EXACT))))


def _check(partition: Partition, xs: Sequence[Rational]) -> tuple[Fraction, ...]:
    if len(xs) > MAX_VARIABLES:
        raise InfeasibleScaleError(
            f"symmetrization is limited to {MAX_VARIABLES} variables, got {len(xs)}",
            variables=len(xs),
        )
    if partition.length > len(xs):
        raise PreconditionError(f"{partition} has more parts than the {len(xs)} variables")
    return tuple(to_mode(x, EXACT) for x in xs)


@lru_cache(maxsize=64)
def _symmetrizer(xs: tuple[Fraction, ...]) -> tuple[tuple[tuple[int, ...], sympy.Poly], ...]:
    """For each w, w(prod_{i<j} (x_i - t x_j) / (x_i - x_j)) as a polynomial in t."""
    terms = []
    for w in itertools.permutations(range(len(xs))):
        factor = _poly(1)
        for i, j in itertools.combinations(range(len(xs)), 2):
            a, b = xs[w[i]], xs[w[j]]
            factor *= _poly((_rat(a) - T * _rat(b)) / _rat(a - b))
        terms.append((w, factor))
    return tuple(terms)


def _p_in_t(partition: Partition, xs: tuple[Fraction, ...]) -> sympy.Poly:
    parts = partition.padded(len(xs))
    total = _poly(0)
    for w, factor in _symmetrizer(xs):
        monomial = Fraction(1)
        for i, part in enumerate(parts):
            monomial *= xs[w[i]] ** part
        total += factor.mul_ground(_rat(monomial))
    quotient, remainder = total.div(v_polynomial(partition, len(xs)))
    if not remainder.is_zero:
        raise IntegralityError(f"v_lambda(t) does not divide the symmetrized sum for {partition}")
    return quotient


@lru_cache(maxsize=256)
def hl_p_polynomial(parts: tuple[int, ...], n: int) -> sympy.Poly:
    """P_lambda(x_1, ..., x_n; t) as a polynomial in the x_i and t."""
    partition = Partition(parts)
    if partition.length > n:
        raise PreconditionError(f"{partition} has more parts than the {n} variables")
    xs = sympy.symbols(f"x1:{n + 1}")
    gens = (*xs, T)
    padded = partition.padded(n)
    numerator = sympy.Poly(0, *gens, domain=sympy.QQ)
    for w in itertools.permutations(range(n)):
        term = sympy.Integer(Permutation(list(w)).signature())
        for i, part in enumerate(padded):
            term *= xs[w[i]] ** part
        for i, j in itertools.combinations(range(n), 2):
            term *= xs[w[i]] - T * xs[w[j]]
        numerator += sympy.Poly(term, *gens, domain=sympy.QQ)
    vandermonde = sympy.Integer(1)
    for i, j in itertools.combinations(range(n), 2):
        vandermonde *= xs[i] - xs[j]
    denominator = sympy.Poly(vandermonde, *gens, domain=sympy.QQ) \
        * sympy.Poly(v_polynomial(partition, n).as_expr(), *gens, domain=sympy.QQ)
    quotient, remainder = numerator.div(denominator)
    if not remainder.is_zero:
        raise IntegralityError(f"symmetrized sum for {partition} is not divisible")
    logger.debug("P%s in %d variables: %d terms", partition, n, len(quotient.terms()))
    return quotient


def hl_p(partition: Partition, xs: Sequence[Rational], t: Rational) -> Fraction:
    """P_lambda(xs; t) exactly.

    Raises:
        InfeasibleScaleError: If more than MAX_VARIABLES variables are given.
        PreconditionError: If lambda has more parts than there are variables.
        ModeMismatchError: If a double is passed.
    """
    xs = _check(partition, xs)
    t = to_mode(t, EXACT)
    if not xs:
        return Fraction(1)
    if len(set(xs)) == len(xs):
        return _fraction(_p_in_t(partition, xs).eval(_rat(t)))
    poly = hl_p_polynomial(partition.parts, len(xs))
    values = [_rat(x) for x in xs] + [_rat(t)]
    return _fraction(poly.as_expr().subs(dict(zip(poly.gens, values))))


def hl_q(partition: Partition, xs: Sequence[Rational], t: Rational) -> Fraction:
    """Q_lambda(xs; t) = b_lambda(t) P_lambda(xs; t)."""
    b = b_lambda(partition, t)
    if not b:
        _check(partition, xs)
        return Fraction(0)
    return b * hl_p(partition, xs, t)
