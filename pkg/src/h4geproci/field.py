"""Exact arithmetic in the real quadratic field Q(sqrt5) on the basis {1, phi}.

An element is a + b*phi with rational a, b, where phi = (1+sqrt5)/2 is the
golden ratio, so phi**2 = phi + 1.  All operations are exact; nothing ever
rounds.  Rationals are `fractions.Fraction`, which keeps them reduced with a
positive denominator, so equal elements have equal component pairs and the
type is hashable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rational = Fraction

_RationalLike = Union[int, Fraction]


class FieldElement:
    """An element a + b*phi of Q(phi), immutable with value semantics."""

    __slots__ = ("a", "b")

    def __init__(self, a: _RationalLike = 0, b: _RationalLike = 0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    # -- ring structure -------------------------------------------------

    def __add__(self, other: "FieldElement") -> "FieldElement":
        other = _coerce(other)
        return FieldElement(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        other = _coerce(other)
        return FieldElement(self.a - other.a, self.b - other.b)

    def __rsub__(self, other) -> "FieldElement":
        return _coerce(other) - self

    def __neg__(self) -> "FieldElement":
        return FieldElement(-self.a, -self.b)

    def __mul__(self, other) -> "FieldElement":
        # (a1 + b1 phi)(a2 + b2 phi) with phi^2 = phi + 1.
        other = _coerce(other)
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return FieldElement(a1 * a2 + b1 * b2, a1 * b2 + a2 * b1 + b1 * b2)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse via the field norm a^2 + ab - b^2."""
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(phi)")
        # conjugate(a + b phi) = (a + b) - b phi; x * conj(x) = norm(x).
        return FieldElement((self.a + self.b) / n, -self.b / n)

    def __truediv__(self, other) -> "FieldElement":
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other) -> "FieldElement":
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "FieldElement":
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- Galois structure -----------------------------------------------

    def conjugate(self) -> "FieldElement":
        """Galois conjugate, sqrt5 -> -sqrt5, i.e. a + b phi -> (a+b) - b phi."""
        return FieldElement(self.a + self.b, -self.b)

    def norm(self) -> Fraction:
        """Rational field norm N(a + b phi) = a^2 + ab - b^2."""
        return self.a * self.a + self.a * self.b - self.b * self.b

    # -- predicates and hashing -----------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = FieldElement(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"FieldElement({self.a!r}, {self.b!r})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*phi"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {abs(self.b)}*phi"

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b)}

    @classmethod
    def from_json(cls, obj) -> "FieldElement":
        """Parse {"a": "p/q", "b": "r/s"}; bare integers/strings also accepted."""
        if isinstance(obj, dict):
            return cls(Fraction(obj.get("a", 0)), Fraction(obj.get("b", 0)))
        if isinstance(obj, (int, str)):
            return cls(Fraction(obj))
        raise ValueError(f"cannot parse FieldElement from {obj!r}")


def _coerce(x) -> FieldElement:
    if isinstance(x, FieldElement):
        return x
    if isinstance(x, (int, Fraction)):
        return FieldElement(x)
    raise TypeError(f"cannot coerce {type(x).__name__} into Q(phi)")


ZERO = FieldElement(0)
ONE = FieldElement(1)
PHI = FieldElement(0, 1)
PHI2 = PHI * PHI  # 1 + phi
