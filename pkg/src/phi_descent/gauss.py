"""Gauss's decomposition 4*Phi_p = A^2 - delta*p*B^2 and the descent it drives.

A and B come from the formal-series expressions

    A = 2 sqrt(Phi_p) C(t),   B = sqrt(Phi_p) S(t),

    C = sum_k (delta p / 4)^k t^(2k) / (2k)!
    S = sum_k (delta p / 4)^k t^(2k+1) / (2k+1)!

where t = sum_j (j/p) x^j / j.  C and S are cosh/cos and the matching
sinh/sin with every sqrt(p) cancelled, so one code path serves p = 1 and
p = 3 (mod 4) and all arithmetic stays rational.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .ntheory import Triple, delta as delta_sign, eval_phi, is_prime, jacobi
from .series import IntPoly, RatPoly, series_mul, series_sqrt, to_integer_poly

GUARD_TERMS = 4


class IdentityFailure(ArithmeticError):
    pass


class GuardTermNonzero(ArithmeticError):
    pass


class LemmaViolation(ArithmeticError):
    pass


class NotASolution(ValueError):
    pass


@dataclass(frozen=True)
class GaussPair:
    p: int
    delta: int
    A: IntPoly
    B: IntPoly


@dataclass(frozen=True)
class EquationInstance:
    """A solution of alpha^2 c y^l = x^2 - delta p z^2."""

    p: int
    c: int
    l: int
    alpha: int
    x: int
    y: int
    z: int

    def check(self) -> None:
        d = delta_sign(self.p)
        lhs = self.alpha ** 2 * self.c * self.y ** self.l
        rhs = self.x ** 2 - d * self.p * self.z ** 2
        if lhs != rhs:
            raise IdentityFailure(f"{lhs} != {rhs} for {self}")
        if gcd(self.x, self.z) != 1 or self.y < 1 or self.y % 2 == 0:
            raise LemmaViolation(f"instance is not proper: {self}")


def phi_poly(p: int) -> IntPoly:
    return IntPoly([1] * p)


def f_series(p: int, N: int) -> RatPoly:
    """sum_{j=1}^{N} (j/p) x^j / j, exactly."""
    if N < 1:
        raise ValueError(f"order must be >= 1, got {N}")
    return RatPoly([0] + [Fraction(jacobi(j, p), j) for j in range(1, N + 1)], N)


def even_odd_series_direct(t: RatPoly, w: Fraction, N: int) -> tuple[RatPoly, RatPoly]:
    """C and S summed term by term (Horner in u = w t^2).  O(N^3); kept as a check."""
    u = series_mul(t, t, N).scale(w)
    K = N // 2 + 1
    one = RatPoly([1], N)
    C = one
    S = one
    for k in range(K, 0, -1):
        C = one + series_mul(u, C, N).scale(Fraction(1, (2 * k - 1) * (2 * k)))
        S = one + series_mul(u, S, N).scale(Fraction(1, (2 * k) * (2 * k + 1)))
    return C, series_mul(t, S, N)


def even_odd_series(t: RatPoly, w: Fraction, N: int) -> tuple[RatPoly, RatPoly]:
    """C and S from C' = w t' S, S' = t' C, C(0) = 1, S(0) = 0.

    Requires t(0) = 0.  Same series as the term-by-term sum, in O(N^2).
    """
    if t[0] != 0:
        raise ValueError("t must have zero constant term")
    dt = [k * t[k] for k in range(1, N + 1)]
    C, S = [Fraction(1)], [Fraction(0)]
    for n in range(N):
        c_acc = s_acc = Fraction(0)
        for j in range(n + 1):
            if dt[j]:
                c_acc += dt[j] * S[n - j]
                s_acc += dt[j] * C[n - j]
        C.append(w * c_acc / (n + 1))
        S.append(s_acc / (n + 1))
    return RatPoly(C, N), RatPoly(S, N)


def _compute_pair(p: int) -> GaussPair:
    if p < 5 or not is_prime(p):
        raise ValueError(f"gauss_pair needs a prime p >= 5, got {p}")
    d = delta_sign(p)
    half = (p - 1) // 2
    N = half + GUARD_TERMS
    t = f_series(p, N)
    R = series_sqrt(RatPoly.from_int(phi_poly(p), N), N)
    C, S = even_odd_series(t, Fraction(d * p, 4), N)

    A_ser = series_mul(R, C, N).scale(2)
    B_ser = series_mul(R, S, N)
    for name, ser, deg in (("A", A_ser, half), ("B", B_ser, half - 1)):
        tail = [ser[k] for k in range(deg + 1, N + 1)]
        if any(tail):
            raise GuardTermNonzero(f"{name}_{p} has nonzero terms above x^{deg}: {tail}")
    A = to_integer_poly(A_ser)
    B = to_integer_poly(B_ser)

    if A.degree != half or B.degree != half - 1:
        raise IdentityFailure(f"degrees {A.degree}, {B.degree} for p = {p}")
    if A[0] != 2 or B[0] != 0 or B[1] != 1:
        raise IdentityFailure(f"normalization broken for p = {p}")
    if A * A - (B * B).scale(d * p) != phi_poly(p).scale(4):
        raise IdentityFailure(f"4 Phi_{p} != A^2 - ({d * p}) B^2")
    return GaussPair(p, d, A, B)


_cache: dict[int, GaussPair] = {}
_cache_lock = threading.Lock()


def gauss_pair(p: int) -> GaussPair:
    """The pair (A_p, B_p), normalized so that A(0) = 2 and B = x + O(x^2)."""
    pair = _cache.get(p)
    if pair is None:
        pair = _compute_pair(p)
        with _cache_lock:
            pair = _cache.setdefault(p, pair)
    return pair


def eval_pair(gp: GaussPair, a: int) -> tuple[int, int]:
    return gp.A(a), gp.B(a)


def pair_gcd(p: int, a: int) -> int:
    A, B = eval_pair(gauss_pair(p), a)
    d = gcd(A, B)
    if d not in (1, 2) or (p % 8 in (1, 7) and d != 2):
        raise LemmaViolation(f"gcd(A_{p}({a}), B_{p}({a})) = {d}")
    return d


def descend(t: Triple, a: int, b: int) -> EquationInstance:
    """Turn a solution c b^l = Phi_p(a) into a proper solution of
    alpha^2 c y^l = x^2 - delta p z^2 with y = b.
    """
    if b < 1 or t.c * b ** t.l != eval_phi(t.p, a):
        raise NotASolution(f"{t.c}*{b}^{t.l} != Phi_{t.p}({a})")
    A, B = eval_pair(gauss_pair(t.p), a)
    if pair_gcd(t.p, a) == 1:
        inst = EquationInstance(t.p, t.c, t.l, 2, A, b, B)
    else:
        inst = EquationInstance(t.p, t.c, t.l, 1, A // 2, b, B // 2)
    inst.check()
    return inst
