"""Binary quadratic forms of odd fundamental discriminant D = delta*p.

Form classes stand in for ideal classes of Q(sqrt(D)).  For D < 0 the two
groups coincide.  For D = p > 0 the form group is the narrow class group; it
equals the ideal class group exactly when x^2 - p y^2 = -1 is solvable, which
``class_group`` asserts instead of assuming.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from math import gcd, isqrt

from .ntheory import is_prime, jacobi, sqrt_mod_prime

DEFAULT_DISC_BOUND = 10 ** 6
DISC_BOUND_ENV = "PHI_DESCENT_DISC_BOUND"


class IncompatibleDiscriminants(ValueError):
    pass


class BoundExceeded(ValueError):
    pass


class NotSplit(ValueError):
    pass


class Ramified(ValueError):
    pass


def default_disc_bound() -> int:
    raw = os.environ.get(DISC_BOUND_ENV)
    return int(raw) if raw else DEFAULT_DISC_BOUND


@dataclass(frozen=True, order=True)
class QuadForm:
    a: int
    b: int
    c: int

    def __post_init__(self):
        D = self.D
        if D % 4 != 1 or D == 1:
            raise ValueError(f"{self.astuple()} has discriminant {D}, expected D = 1 mod 4, D != 1")
        if D > 0 and isqrt(D) ** 2 == D:
            raise ValueError(f"square discriminant {D}")
        if D < 0 and self.a <= 0:
            raise ValueError(f"definite form {self.astuple()} must have a > 0")
        if gcd(gcd(self.a, self.b), self.c) != 1:
            raise ValueError(f"{self.astuple()} is not primitive")

    @property
    def D(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def astuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def inverse(self) -> "QuadForm":
        return QuadForm(self.a, -self.b, self.c)

    def __str__(self):
        return f"({self.a}, {self.b}, {self.c})"


def from_ab(a: int, b: int, D: int) -> QuadForm:
    return QuadForm(a, b, (b * b - D) // (4 * a))


def principal_form(D: int) -> QuadForm:
    return QuadForm(1, 1, (1 - D) // 4)


def discriminant(p: int) -> int:
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"expected an odd prime, got {p}")
    return p if p % 4 == 1 else -p


# -- definite forms ----------------------------------------------------------


def _is_reduced_definite(a: int, b: int, c: int) -> bool:
    return -a < b <= a < c or (0 <= b <= a == c)


def _reduce_definite(a: int, b: int, c: int) -> tuple[int, int, int]:
    while True:
        if not -a < b <= a:
            r = (a - b) // (2 * a)
            b, c = b + 2 * r * a, a * r * r + b * r + c
        if a > c:
            a, b, c = c, -b, a
            continue
        if a == c and b < 0:
            b = -b
        return a, b, c


# -- indefinite forms --------------------------------------------------------


def _is_reduced_indefinite(a: int, b: int, c: int, D: int) -> bool:
    # 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b; D is never a square
    if b <= 0 or b * b >= D:
        return False
    m = 2 * abs(a)
    return (m + b) ** 2 > D and (m <= b or (m - b) ** 2 < D)


def _rho(a: int, b: int, c: int, D: int) -> tuple[int, int, int]:
    """(a, b, c) -> (c, b', .) with b' = -b mod 2c in the normalizing range."""
    s = isqrt(D)
    m = 2 * abs(c)
    if abs(c) > s:
        # -|c| < b' <= |c|
        b2 = abs(c) - (abs(c) + b) % m
    else:
        # sqrt(D) - 2|c| < b' < sqrt(D), i.e. s - m < b' <= s
        b2 = s - ((s + b) % m)
    return c, b2, (b2 * b2 - D) // (4 * c)


def _reduce_indefinite(a: int, b: int, c: int, D: int) -> tuple[int, int, int]:
    while not _is_reduced_indefinite(a, b, c, D):
        a, b, c = _rho(a, b, c, D)
    return a, b, c


def rho_cycle(f: QuadForm) -> list[QuadForm]:
    """The cycle of reduced indefinite forms through reduce(f)."""
    D = f.D
    start = _reduce_indefinite(f.a, f.b, f.c, D)
    cycle = [start]
    g = _rho(*start, D)
    while g != start:
        cycle.append(g)
        g = _rho(*g, D)
    return [QuadForm(*g) for g in cycle]


# -- class-level operations --------------------------------------------------


def reduce(f: QuadForm) -> QuadForm:
    D = f.D
    if D < 0:
        return QuadForm(*_reduce_definite(f.a, f.b, f.c))
    return QuadForm(*_reduce_indefinite(f.a, f.b, f.c, D))


def canonical(f: QuadForm) -> QuadForm:
    """Fixed representative of the class: the reduced form (D < 0) or the
    lexicographically least form of the rho-cycle (D > 0)."""
    if f.D < 0:
        return reduce(f)
    return min(rho_cycle(f), key=QuadForm.astuple)


def _check_same(f: QuadForm, g: QuadForm) -> int:
    if f.D != g.D:
        raise IncompatibleDiscriminants(f"{f} has D = {f.D}, {g} has D = {g.D}")
    return f.D


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def compose(f: QuadForm, g: QuadForm) -> QuadForm:
    """Dirichlet composition followed by reduction."""
    D = _check_same(f, g)
    a1, b1, _ = f.astuple()
    a2, b2, _ = g.astuple()
    s = (b1 + b2) // 2
    # e = u a1 + v a2 + w s
    e1, u1, v1 = _xgcd(a1, a2)
    e, x, w = _xgcd(e1, s)
    u, v = x * u1, x * v1
    A = a1 * a2 // (e * e)
    B = (u * a1 * b2 + v * a2 * b1 + w * (b1 * b2 + D) // 2) // e
    B %= 2 * A if A > 0 else -2 * A
    return reduce(from_ab(A, B, D))


def is_equivalent(f: QuadForm, g: QuadForm) -> bool:
    D = _check_same(f, g)
    if D < 0:
        return reduce(f) == reduce(g)
    return reduce(f) in rho_cycle(g)


def power(f: QuadForm, n: int) -> QuadForm:
    result = principal_form(f.D)
    base = reduce(f)
    while n:
        if n & 1:
            result = compose(result, base)
        base = compose(base, base)
        n >>= 1
    return result


def prime_form(D: int, q: int) -> QuadForm:
    """Reduced form of the class of a prime ideal above the split odd prime q."""
    if q == 2 or not is_prime(q):
        raise ValueError(f"q must be an odd prime, got {q}")
    if D % q == 0:
        raise Ramified(f"{q} divides {D}")
    if jacobi(D, q) != 1:
        raise NotSplit(f"({D}/{q}) = {jacobi(D, q)}")
    b = sqrt_mod_prime(D, q)
    if b % 2 == 0:
        b += q
    return reduce(from_ab(q, b, D))


def negative_pell_solvable(p: int) -> bool:
    """Whether x^2 - p y^2 = -1 has a solution: odd continued-fraction period of sqrt(p)."""
    a0 = isqrt(p)
    if a0 * a0 == p:
        return False
    m, d, a = 0, 1, a0
    period = 0
    while a != 2 * a0:
        m = d * a - m
        d = (p - m * m) // d
        a = (a0 + m) // d
        period += 1
    return period % 2 == 1


# -- the group ---------------------------------------------------------------


@dataclass(frozen=True)
class ClassGroup:
    D: int
    classes: tuple[QuadForm, ...]

    @property
    def h(self) -> int:
        return len(self.classes)

    @property
    def identity_index(self) -> int:
        return self.classes.index(canonical(principal_form(self.D)))

    def index(self, f: QuadForm) -> int:
        return self.classes.index(canonical(f))

    def lth_powers(self, l: int) -> frozenset[QuadForm]:
        return frozenset(canonical(power(g, l)) for g in self.classes)


def reduced_forms(D: int) -> list[QuadForm]:
    """Every reduced form of discriminant D, by direct enumeration."""
    out = []
    if D < 0:
        amax = isqrt(-D // 3)
        for a in range(1, amax + 1):
            for b in range(-a + 1, a + 1):
                num = b * b - D
                if num % (4 * a):
                    continue
                c = num // (4 * a)
                if _is_reduced_definite(a, b, c) and gcd(gcd(a, b), c) == 1:
                    out.append(QuadForm(a, b, c))
        return out
    s = isqrt(D)
    for b in range(1, s + 1):
        if (b - D) % 2:
            continue
        n = (D - b * b) // 4
        for a in range(1, n + 1):
            if n % a:
                continue
            for sa in (a, -a):
                c = -n // sa
                if _is_reduced_indefinite(sa, b, c, D) and gcd(gcd(sa, b), c) == 1:
                    out.append(QuadForm(sa, b, c))
    return out


_groups: dict[int, ClassGroup] = {}
_groups_lock = threading.Lock()


def class_group(D: int, bound: int | None = None) -> ClassGroup:
    bound = default_disc_bound() if bound is None else bound
    if abs(D) > bound:
        raise BoundExceeded(f"|D| = {abs(D)} exceeds the discriminant bound {bound}")
    G = _groups.get(D)
    if G is not None:
        return G
    if D % 4 != 1:
        raise ValueError(f"expected D = 1 mod 4, got {D}")
    if D > 0:
        if D % 4 != 1 or not is_prime(D):
            raise ValueError(f"positive discriminant must be a prime = 1 mod 4, got {D}")
        if not negative_pell_solvable(D):
            raise ArithmeticError(f"x^2 - {D} y^2 = -1 unsolvable; narrow and wide class groups differ")
    reps = sorted({canonical(f) for f in reduced_forms(D)}, key=QuadForm.astuple)
    G = ClassGroup(D, tuple(reps))
    with _groups_lock:
        return _groups.setdefault(D, G)


def is_lth_power_class(G: ClassGroup, f: QuadForm, l: int) -> bool:
    _check_same(G.classes[0], f)
    return canonical(f) in G.lth_powers(l)
