"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields.

Rational scalars are ``fractions.Fraction`` values, which are always stored
reduced with a positive denominator.  Prime-field scalars are
:class:`FpElement` residues.  Field descriptors (:data:`QQ`, :func:`GF`)
coerce raw values into scalars and travel with polynomials, points, and
variety specs so that mixed-field use fails early and loudly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

__all__ = [
    "QQ",
    "GF",
    "FpElement",
    "RationalField",
    "PrimeField",
    "FieldMismatchError",
    "field_from_spec",
    "exact_str",
    "is_prime",
]


class FieldMismatchError(TypeError):
    """Scalars (or polynomials, points, ...) from different fields were mixed."""


def is_prime(n: int) -> bool:
    """Trial-division primality check; field moduli are small by design."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FpElement:
    """A residue modulo a prime, kept reduced to the range [0, p).

    Equality against plain ints compares modulo p; do not mix FpElement and
    int keys in one dict (their hashes differ).
    """

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerced(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldMismatchError(
                    f"cannot combine F_{self.p} and F_{other.p} scalars")
            return other
        if isinstance(other, bool):
            return None
        if isinstance(other, int):
            return FpElement(other, self.p)
        if isinstance(other, Fraction):
            raise FieldMismatchError("cannot combine F_p and rational scalars")
        return None

    def __add__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return FpElement(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return FpElement(self.value - other.value, self.p)

    def __rsub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return FpElement(other.value - self.value, self.p)

    def __mul__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return FpElement(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FpElement(pow(self.value, exponent, self.p), self.p)

    def inverse(self) -> "FpElement":
        if self.value == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.p}")
        return FpElement(pow(self.value, self.p - 2, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldMismatchError(
                    f"cannot compare F_{self.p} and F_{other.p} scalars")
            return self.value == other.value
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, int):
            return self.value == other % self.p
        if isinstance(other, Fraction):
            raise FieldMismatchError("cannot compare F_p and rational scalars")
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FpElement({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class RationalField:
    """Field descriptor for exact rationals."""

    is_prime_field = False
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, FpElement):
            raise FieldMismatchError("cannot coerce an F_p scalar into the rationals")
        if isinstance(value, float):
            raise TypeError("floats are not exact; pass int, str, or Fraction")
        return Fraction(value)

    def inv(self, value) -> Fraction:
        value = self(value)
        if value == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / value

    def describe(self):
        return "rational"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(RationalField)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField:
    """Field descriptor for integers modulo a prime."""

    is_prime_field = True

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
            raise ValueError(f"field modulus must be prime, got {p!r}")
        self.p = p
        self.zero = FpElement(0, p)
        self.one = FpElement(1, p)

    def __call__(self, value) -> FpElement:
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise FieldMismatchError(
                    f"cannot coerce an F_{value.p} scalar into F_{self.p}")
            return value
        if isinstance(value, bool):
            raise TypeError(f"cannot coerce {value!r} into F_{self.p}")
        if isinstance(value, int):
            return FpElement(value, self.p)
        if isinstance(value, float):
            raise TypeError("floats are not exact; pass int, str, or Fraction")
        if isinstance(value, (Fraction, str)):
            ratio = Fraction(value)
            if ratio.denominator % self.p == 0:
                raise ZeroDivisionError(
                    f"denominator of {ratio} vanishes modulo {self.p}")
            return (FpElement(ratio.numerator, self.p)
                    * FpElement(ratio.denominator, self.p).inverse())
        raise TypeError(f"cannot coerce {value!r} into F_{self.p}")

    def inv(self, value) -> FpElement:
        return self(value).inverse()

    def describe(self):
        return {"prime": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime-field", self.p))

    def __repr__(self):
        return f"GF({self.p})"


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    """The prime field with p elements (primality checked by trial division)."""
    return PrimeField(p)


def field_from_spec(spec):
    """Field descriptor from its JSON form: "rational" or {"prime": p}."""
    if spec == "rational":
        return QQ
    if isinstance(spec, dict) and set(spec) == {"prime"}:
        return GF(spec["prime"])
    raise ValueError(f"unrecognized field spec {spec!r}")


def exact_str(value) -> str:
    """Render an exact scalar ("5", "5/2", F_p residue) for reports."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)
