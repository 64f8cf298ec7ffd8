"""Brute-force oracles, independent of the criteria module.

``search_solutions`` scans x directly.  ``mod_q_proper_solutions`` decides
q-adic solvability of alpha^2 c y^l = x^2 - delta p z^2 by exhaustive
residue enumeration modulo a power of q large enough for Hensel lifting:
q itself when q does not divide 2pc, q^2 when q is p or c, and 8 when q = 2.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .ntheory import Triple, eval_phi, is_perfect_lth_power, is_prime
from .quadforms import BoundExceeded

MAX_Q = 10 ** 4
MAX_MODULUS = 10 ** 5


@dataclass(frozen=True, order=True)
class SolutionRecord:
    triple: Triple
    x: int
    y: int

    def check(self) -> bool:
        t = self.triple
        return self.y >= 1 and t.c * self.y ** t.l == eval_phi(t.p, self.x)


def _match(t: Triple, x: int, phi: int) -> SolutionRecord | None:
    q, r = divmod(phi, t.c)
    if r:
        return None
    y = is_perfect_lth_power(q, t.l)
    return None if y is None else SolutionRecord(t, x, y)


def scan_range(t: Triple, lo: int, hi: int) -> list[SolutionRecord]:
    """Solutions with lo <= x <= hi."""
    found = []
    for x in range(lo, hi + 1):
        rec = _match(t, x, eval_phi(t.p, x))
        if rec is not None:
            found.append(rec)
    return found


def search_solutions(t: Triple, x_bound: int, workers: int = 1) -> list[SolutionRecord]:
    """All solutions of c y^l = Phi_p(x) with |x| <= x_bound, sorted by x."""
    if x_bound < 1:
        raise ValueError(f"x_bound must be >= 1, got {x_bound}")
    if workers <= 1:
        return scan_range(t, -x_bound, x_bound)
    edges = np.linspace(-x_bound, x_bound + 1, workers + 1).astype(int).tolist()
    with ThreadPoolExecutor(workers) as pool:
        parts = pool.map(lambda k: scan_range(t, edges[k], edges[k + 1] - 1), range(workers))
    return sorted((r for part in parts for r in part), key=lambda r: r.x)


def search_many(triples, x_bound: int) -> dict[Triple, list[SolutionRecord]]:
    """search_solutions for many triples, evaluating each Phi_p(x) once."""
    out: dict[Triple, list[SolutionRecord]] = {}
    by_p: dict[int, list[Triple]] = {}
    for t in triples:
        by_p.setdefault(t.p, []).append(t)
        out[t] = []
    for p, ts in by_p.items():
        for x in range(-x_bound, x_bound + 1):
            phi = eval_phi(p, x)
            for t in ts:
                rec = _match(t, x, phi)
                if rec is not None:
                    out[t].append(rec)
    return out


# -- local solvability by residue enumeration ------------------------------


def lifting_modulus(t: Triple, q: int) -> int:
    if q == 2:
        return 8
    if q in (t.p, t.c):
        return q * q
    return q


def _sumset(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros_like(b)
    for r in np.flatnonzero(a):
        out |= np.roll(b, r)
    return out


@lru_cache(maxsize=256)
def _form_values(M: int, q: int, D: int) -> tuple[np.ndarray, np.ndarray]:
    """Values of x^2 - D z^2 mod M: over all (x, z), and over (x, z) not both
    divisible by q."""
    r = np.arange(M, dtype=np.int64)
    unit = r % q != 0
    sq = r * r % M
    x_all = np.zeros(M, bool)
    x_all[sq] = True
    x_unit = np.zeros(M, bool)
    x_unit[sq[unit]] = True
    dz = (-D * sq) % M
    z_all = np.zeros(M, bool)
    z_all[dz] = True
    z_unit = np.zeros(M, bool)
    z_unit[dz[unit]] = True
    any_vals = _sumset(x_all, z_all)
    prim_vals = _sumset(x_unit, z_all) | _sumset(x_all, z_unit)
    return any_vals, prim_vals


def mod_q_proper_solutions(t: Triple, alpha: int, q: int) -> bool:
    """Whether x^2 - delta p z^2 = alpha^2 c y^l has a solution modulo
    lifting_modulus(t, q) with x, y, z not all divisible by q."""
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if q > MAX_Q:
        raise BoundExceeded(f"q = {q} exceeds {MAX_Q}")
    M = lifting_modulus(t, q)
    if M > MAX_MODULUS:
        raise BoundExceeded(f"modulus {M} for q = {q} exceeds {MAX_MODULUS}")
    any_vals, prim_vals = _form_values(M, q, t.discriminant % M)
    k = alpha * alpha * t.c
    target = np.array([k * pow(y, t.l, M) % M for y in range(M)], dtype=np.int64)
    y_unit = np.arange(M) % q != 0
    return bool(any_vals[target[y_unit]].any() or prim_vals[target[~y_unit]].any())
