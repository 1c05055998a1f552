"""Enumerate the points of a zero-dimensional projective system exactly.

Projective space is split into the disjoint cells x0 = ... = x_{j-1} = 0,
x_j = 1; each cell gives an affine system solved by lex Groebner basis and
back-substitution from the last variable.  Over the rationals the univariate
roots come from the rational root theorem with full integer factorization,
so for a zero-dimensional system the enumeration of rational points is
exhaustive.  Over a prime field roots are found by scanning.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .fields import FpElement, QQ
from .poly import Polynomial, ProjectivePoint, lex_key
from .groebner import groebner_basis

__all__ = ["projective_rational_solutions", "rational_roots"]


def projective_rational_solutions(gens) -> list:
    """All field-rational points of V(gens) in projective space.

    The generators must cut out a zero-dimensional projective scheme (over
    the algebraic closure); otherwise some cell has leftover freedom and a
    ValueError is raised rather than returning a silently incomplete list.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("empty system is not zero-dimensional")
    nvars = gens[0].nvars
    field = gens[0].field
    points = []
    for j in range(nvars):
        assignments = {i: 0 for i in range(j)}
        assignments[j] = 1
        cell = [g.specialize(assignments) for g in gens]
        cell = [g for g in cell if not g.is_zero()]
        if any(g.is_constant() for g in cell):
            continue  # a nonzero constant rules the whole cell out
        live = list(range(j + 1, nvars))
        for sol in _affine_points(cell, live, field):
            coords = [field.zero] * j + [field.one]
            coords += [sol[i] for i in live]
            points.append(ProjectivePoint(coords, field))
    return points


def _affine_points(gens, live, field):
    """Solutions {var: value} of an affine system supported on ``live``."""
    if not live:
        return [{}] if not gens else []
    if not gens:
        raise ValueError("system is not zero-dimensional")
    basis = groebner_basis(gens, key=lex_key)
    if basis and basis[0].is_constant():
        return []  # unit ideal
    last = live[-1]
    uni = next((g for g in basis if g.support() <= {last}), None)
    if uni is None:
        raise ValueError("system is not zero-dimensional")
    out = []
    rest = live[:-1]
    for root in _univariate_roots(uni, last, field):
        sub = [g.specialize({last: root}) for g in basis]
        sub = [g for g in sub if not g.is_zero()]
        if any(g.is_constant() for g in sub):
            continue
        if not rest:
            out.append({last: root})
            continue
        for sol in _affine_points(sub, rest, field):
            sol[last] = root
            out.append(sol)
    return out


def _univariate_roots(poly: Polynomial, var: int, field):
    if field.is_prime_field:
        p = field.p
        return [FpElement(v, p) for v in range(p)
                if not poly.specialize({var: v})]
    coeffs = {}
    denom = 1
    for mono, c in poly.terms.items():
        coeffs[mono[var]] = c
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = {e: int(c * denom) for e, c in coeffs.items()}
    return rational_roots(ints)


def rational_roots(coeffs: dict) -> list:
    """Rational roots of sum(coeffs[e] * t^e) with integer coefficients.

    Complete by the rational root theorem: every root num/den in lowest
    terms has num dividing the trailing coefficient and den dividing the
    leading one, and both divisor sets are enumerated from full integer
    factorizations.
    """
    coeffs = {e: c for e, c in coeffs.items() if c}
    if not coeffs:
        raise ValueError("the zero polynomial has every root")
    roots = []
    low = min(coeffs)
    if low > 0:
        roots.append(Fraction(0))
        coeffs = {e - low: c for e, c in coeffs.items()}
    high = max(coeffs)
    if high == 0:
        return roots
    dense = [coeffs.get(e, 0) for e in range(high + 1)]
    for num in _divisors(abs(dense[0])):
        for den in _divisors(abs(dense[high])):
            if gcd(num, den) != 1:
                continue
            for sign in (1, -1):
                cand = Fraction(sign * num, den)
                acc = 0
                for c in reversed(dense):
                    acc = acc * cand + c
                if acc == 0:
                    roots.append(cand)
    return roots


# integer factorization for the divisor lists -------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_probable_prime(n: int) -> bool:
    """Miller-Rabin; deterministic for n below 3.3e24 with these bases."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """A nontrivial factor of composite odd n."""
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"factorization failed for {n}")


def _factorize(n: int) -> dict:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    factors: dict = {}
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _brent_rho(m)
        stack.append(d)
        stack.append(m // d)
    return factors


def _divisors(n: int) -> list:
    """Positive divisors of n >= 1 in increasing order."""
    if n < 1:
        raise ValueError("divisors of a nonpositive integer")
    divs = [1]
    for p, e in _factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)
