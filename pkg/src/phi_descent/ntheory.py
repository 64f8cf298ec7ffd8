"""Exact integer primitives on unbounded Python ints."""

from __future__ import annotations

from dataclasses import dataclass

# Strong-probable-prime bases; deterministic for n < 3317044064679887385961981,
# a strong probable-prime test above that.
_SPRP_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class InvalidTriple(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _SPRP_BASES:
        if n % q == 0:
            return n == q
    if n < 43 * 43:
        return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SPRP_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes q with lo <= q <= hi, ascending."""
    return [q for q in range(max(lo, 2), hi + 1) if is_prime(q)]


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def sqrt_mod_prime(d: int, q: int) -> int | None:
    """Square root of d modulo the odd prime q, or None for a non-residue.

    The smaller of the two roots r, q - r is returned.
    """
    if q == 2 or not is_prime(q):
        raise ValueError(f"modulus must be an odd prime, got {q}")
    d %= q
    if d == 0:
        return 0
    if jacobi(d, q) != 1:
        return None
    if q % 4 == 3:
        r = pow(d, (q + 1) // 4, q)
    else:
        # Tonelli-Shanks
        s, e = q - 1, 0
        while s % 2 == 0:
            s //= 2
            e += 1
        z = 2
        while jacobi(z, q) != -1:
            z += 1
        m, c = e, pow(z, s, q)
        t, r = pow(d, s, q), pow(d, (s + 1) // 2, q)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % q
                i += 1
            b = pow(c, 1 << (m - i - 1), q)
            m, c = i, b * b % q
            t, r = t * c % q, r * b % q
    return min(r, q - r)


def iroot(n: int, l: int) -> int:
    """Floor of the l-th root of n >= 0."""
    if n < 0 or l < 1:
        raise ValueError("iroot needs n >= 0 and l >= 1")
    if n < 2 or l == 1:
        return n
    # Newton from above, starting at a power of two that exceeds the root
    x = 1 << -(-n.bit_length() // l)
    while True:
        y = ((l - 1) * x + n // x ** (l - 1)) // l
        if y >= x:
            return x
        x = y


def is_perfect_lth_power(n: int, l: int) -> int | None:
    """Return y >= 1 with y**l == n, or None."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    y = iroot(n, l)
    return y if y ** l == n else None


def eval_phi(p: int, x: int) -> int:
    """Value of the cyclotomic polynomial 1 + x + ... + x^(p-1)."""
    if x == 1:
        return p
    return (x ** p - 1) // (x - 1)


def delta(p: int) -> int:
    """Sign (-1)^((p-1)/2) for odd p."""
    return 1 if p % 4 == 1 else -1


@dataclass(frozen=True, order=True)
class Triple:
    p: int
    c: int
    l: int

    def __post_init__(self):
        p, c, l = self.p, self.c, self.l
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in (p, c, l)):
            raise InvalidTriple(f"p, c, l must be integers: {(p, c, l)!r}")
        if p < 5 or not is_prime(p):
            raise InvalidTriple(f"p must be a prime >= 5, got {p}")
        if c < 3 or not is_prime(c):
            raise InvalidTriple(f"c must be an odd prime, got {c}")
        if c == p:
            raise InvalidTriple(f"p and c must be distinct, got {p} twice")
        if l < 2:
            raise InvalidTriple(f"l must be >= 2, got {l}")

    @property
    def delta(self) -> int:
        return delta(self.p)

    @property
    def discriminant(self) -> int:
        return delta(self.p) * self.p


def valid_triples(p_max: int, c_max: int, ls) -> list[Triple]:
    """All valid triples in the box, sorted by (p, c, l)."""
    ls = sorted(set(ls))
    return [
        Triple(p, c, l)
        for p in primes_between(5, p_max)
        for c in primes_between(3, c_max)
        if c != p
        for l in ls
        if l >= 2
    ]
