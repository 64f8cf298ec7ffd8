"""Dense polynomials and truncated power series with exact coefficients.

``RatPoly`` holds rational coefficients (ascending degree) and an optional
truncation order N, meaning terms above x^N are unknown.  ``IntPoly`` holds
integer coefficients.  Trailing zero coefficients are always dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class NonIntegralCoefficient(ArithmeticError):
    def __init__(self, degree: int, value: Fraction):
        super().__init__(f"coefficient of x^{degree} is {value}, not an integer")
        self.degree = degree
        self.value = value


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True, init=False)
class RatPoly:
    coeffs: tuple[Fraction, ...]
    order: int | None = None

    def __init__(self, coeffs: Iterable = (), order: int | None = None):
        cs = [Fraction(v) for v in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError(f"truncation order must be >= 0, got {order}")
            cs = cs[: order + 1]
        object.__setattr__(self, "coeffs", _trim(cs))
        object.__setattr__(self, "order", order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __repr__(self):
        body = " + ".join(f"({v})x^{k}" for k, v in enumerate(self.coeffs) if v) or "0"
        return f"RatPoly({body}{'' if self.order is None else f' + O(x^{self.order + 1})'})"

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def truncate(self, order: int) -> "RatPoly":
        return RatPoly(self.coeffs, order if self.order is None else min(order, self.order))

    def scale(self, k) -> "RatPoly":
        k = Fraction(k)
        return RatPoly((k * v for v in self.coeffs), self.order)

    def __add__(self, other: "RatPoly") -> "RatPoly":
        return poly_add(self, other)

    def __neg__(self) -> "RatPoly":
        return self.scale(-1)

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return poly_add(self, -other)

    @classmethod
    def from_int(cls, p: "IntPoly", order: int | None = None) -> "RatPoly":
        return cls(p.coeffs, order)


@dataclass(frozen=True, init=False)
class IntPoly:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for v in coeffs:
            if isinstance(v, Fraction):
                if v.denominator != 1:
                    raise TypeError(f"non-integer coefficient {v}")
                v = v.numerator
            cs.append(int(v))
        object.__setattr__(self, "coeffs", _trim(cs))

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, a: int) -> int:
        return poly_eval(self, a)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        return poly_mul_exact(self, other)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self), len(other))
        return IntPoly(self[k] + other[k] for k in range(n))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self), len(other))
        return IntPoly(self[k] - other[k] for k in range(n))

    def scale(self, k: int) -> "IntPoly":
        return IntPoly(k * v for v in self.coeffs)

    def reversed(self, degree: int) -> "IntPoly":
        """x^degree * P(1/x) for degree >= deg P."""
        return IntPoly(self[degree - k] for k in range(degree + 1))


def _min_order(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def poly_add(P: RatPoly, Q: RatPoly) -> RatPoly:
    n = max(len(P.coeffs), len(Q.coeffs))
    return RatPoly((P[k] + Q[k] for k in range(n)), _min_order(P.order, Q.order))


def series_mul(P: RatPoly, Q: RatPoly, N: int) -> RatPoly:
    """Product of P and Q with every term above x^N dropped."""
    if N < 0:
        raise ValueError(f"order must be >= 0, got {N}")
    N = _min_order(N, _min_order(P.order, Q.order))
    a, b = P.coeffs[: N + 1], Q.coeffs[: N + 1]
    out = [Fraction(0)] * min(N + 1, max(len(a) + len(b) - 1, 0))
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b[: N + 1 - i]):
            out[i + j] += ai * bj
    return RatPoly(out, N)


def series_sqrt(P: RatPoly, N: int) -> RatPoly:
    """Square root of a series with constant term 1, to order N."""
    if P[0] != 1:
        raise ValueError(f"series_sqrt needs constant term 1, got {P[0]}")
    if P.order is not None and N > P.order:
        N = P.order
    s = [Fraction(1)]
    for k in range(1, N + 1):
        acc = sum((s[i] * s[k - i] for i in range(1, k)), Fraction(0))
        s.append((P[k] - acc) / 2)
    return RatPoly(s, N)


def to_integer_poly(P: RatPoly) -> IntPoly:
    for k, v in enumerate(P.coeffs):
        if v.denominator != 1:
            raise NonIntegralCoefficient(k, v)
    return IntPoly(v.numerator for v in P.coeffs)


def poly_mul_exact(P: IntPoly, Q: IntPoly) -> IntPoly:
    if not P.coeffs or not Q.coeffs:
        return IntPoly()
    out = [0] * (len(P.coeffs) + len(Q.coeffs) - 1)
    for i, a in enumerate(P.coeffs):
        if a:
            for j, b in enumerate(Q.coeffs):
                out[i + j] += a * b
    return IntPoly(out)


def poly_eval(P: IntPoly | Sequence[int], a: int) -> int:
    coeffs = P.coeffs if isinstance(P, IntPoly) else P
    acc = 0
    for v in reversed(coeffs):
        acc = acc * a + v
    return acc
