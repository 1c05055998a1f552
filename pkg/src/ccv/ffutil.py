"""Finite-field plumbing shared by the brute-force checks.

Points of P^n(F_p) are plain int tuples in canonical form (first nonzero
coordinate 1), enumerated in a fixed order: leading-1 position ascending,
then the free tail lexicographically.  Polynomial evaluation compiles each
polynomial once into a closed-form modular expression, which keeps full
point sweeps cheap enough to use as ground truth.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .fields import FpElement

__all__ = [
    "OracleRefusal",
    "PointCapExceeded",
    "PrimeTooSmall",
    "DEFAULT_POINT_CAP",
    "projective_point_count",
    "check_point_budget",
    "enumerate_points",
    "scalar_mod",
    "compile_mod_evaluator",
]

DEFAULT_POINT_CAP = 10**7


class OracleRefusal(RuntimeError):
    """The brute-force check declines to run rather than risk a wrong answer."""


class PointCapExceeded(OracleRefusal):
    """The sweep would visit more points than the configured cap."""


class PrimeTooSmall(OracleRefusal):
    """Line containment tests are only sound when p >= every degree."""


def projective_point_count(n: int, p: int) -> int:
    """|P^n(F_p)| = (p^(n+1) - 1) / (p - 1)."""
    return (p ** (n + 1) - 1) // (p - 1)


def check_point_budget(n: int, p: int, cap) -> int:
    total = projective_point_count(n, p)
    if cap is not None and total > cap:
        raise PointCapExceeded(
            f"P^{n}(F_{p}) has {total} points, over the cap of {cap}")
    return total


def enumerate_points(n: int, p: int):
    """Canonical points of P^n(F_p): (0,...,0,1,*,...,*) as int tuples."""
    for j in range(n + 1):
        head = (0,) * j + (1,)
        for tail in product(range(p), repeat=n - j):
            yield head + tail


def scalar_mod(value, p: int) -> int:
    """Reduce an exact scalar to its residue in [0, p)."""
    if isinstance(value, FpElement):
        if value.p != p:
            raise ValueError(f"F_{value.p} scalar reduced modulo {p}")
        return value.value
    if isinstance(value, Fraction):
        if value.denominator % p == 0:
            raise ZeroDivisionError(
                f"denominator of {value} vanishes modulo {p}")
        return value.numerator * pow(value.denominator, p - 2, p) % p
    if isinstance(value, int):
        return value % p
    raise TypeError(f"cannot reduce {value!r} modulo {p}")


def compile_mod_evaluator(poly, p: int):
    """Compile a polynomial to a fast function (int tuple) -> residue.

    The generated code is a single arithmetic expression; small exponents
    are unrolled into repeated products, large ones call three-argument pow.
    """
    parts = []
    for mono, coeff in poly.terms.items():
        c = scalar_mod(coeff, p)
        if c == 0:
            continue
        factors = [str(c)]
        for i, e in enumerate(mono):
            if not e:
                continue
            if e <= 4:
                factors.extend([f"v[{i}]"] * e)
            else:
                factors.append(f"_pow(v[{i}],{e},{p})")
        parts.append("*".join(factors))
    body = " + ".join(parts) if parts else "0"
    return eval(f"lambda v: ({body}) % {p}",  # noqa: S307 - generated from exponent data only
                {"__builtins__": {}, "_pow": pow})
