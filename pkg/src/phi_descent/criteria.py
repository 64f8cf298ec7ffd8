"""Insolubility criteria for c*y^l = Phi_p(x) and the local-solvability test.

  I    (delta p / c) = -1
  II   (c / p) = -1 and l even
  III  the class of a prime ideal above c is not an l-th power in the class
       group of Q(sqrt(delta p))

By quadratic reciprocity (delta p / c) = (c / p) for distinct odd primes, so
II always implies I.  ``verdict`` therefore tries II first, then I, then III,
and reports the first that fires: I is reported exactly when l is odd.

For III only the prime above c is tested.  Any admissible factor alpha = 2
arises when p = +-3 (mod 8); then 2 is inert, (2) is principal and does not
change any class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .ntheory import InvalidTriple, Triple, delta, jacobi
from .quadforms import QuadForm, class_group, is_lth_power_class, prime_form


class Status(str, Enum):
    NO_SOLUTIONS = "NoSolutions"
    INCONCLUSIVE = "Inconclusive"


class Criterion(str, Enum):
    I = "I"
    II = "II"
    III = "III"
    NONE = "None"


@dataclass(frozen=True)
class SymbolEvidence:
    symbol: str
    value: int


@dataclass(frozen=True)
class ClassEvidence:
    D: int
    h: int
    prime_form: QuadForm
    power_subgroup_size: int


@dataclass(frozen=True)
class Verdict:
    triple: Triple
    status: Status
    criterion: Criterion
    evidence: SymbolEvidence | ClassEvidence | None = None


@dataclass(frozen=True)
class Obstruction:
    place: int
    reason: str


@dataclass(frozen=True)
class LocalReport:
    triple: Triple
    alpha: int
    obstructions: tuple[Obstruction, ...] = field(default=())

    @property
    def everywhere_solvable(self) -> bool:
        return not self.obstructions


def _as_triple(p: int, c: int, l: int = 2) -> Triple:
    return Triple(p, c, l)


def criterion_i(p: int, c: int) -> bool:
    t = _as_triple(p, c)
    return jacobi(t.discriminant % c, c) == -1


def criterion_ii(p: int, c: int, l: int) -> bool:
    _as_triple(p, c, l)
    return l % 2 == 0 and jacobi(c, p) == -1


def _class_test(t: Triple, bound: int | None) -> ClassEvidence | None:
    """Evidence when the class above c is not an l-th power, else None."""
    D = t.discriminant
    G = class_group(D, bound)
    f = prime_form(D, t.c)
    if is_lth_power_class(G, f, t.l):
        return None
    return ClassEvidence(D, G.h, f, len(G.lth_powers(t.l)))


def criterion_iii(p: int, c: int, l: int, bound: int | None = None) -> bool:
    t = _as_triple(p, c, l)
    if jacobi(t.discriminant, c) != 1:
        raise ValueError(f"{c} is inert in Q(sqrt({t.discriminant})); criterion III needs a split c")
    return _class_test(t, bound) is not None


def local_solvability(p: int, c: int, l: int, alpha: int) -> LocalReport:
    t = _as_triple(p, c, l)
    if alpha not in (1, 2):
        raise ValueError(f"alpha must be 1 or 2, got {alpha}")
    D = t.discriminant
    obs = []
    if jacobi(D, c) != 1:
        obs.append(Obstruction(c, f"({D}/{c}) = -1"))
    if l % 2 == 0 and jacobi(c, p) != 1:
        obs.append(Obstruction(p, f"({c}/{p}) = -1 and l is even"))
    return LocalReport(t, alpha, tuple(obs))


def verdict(t: Triple, bound: int | None = None) -> Verdict:
    if not isinstance(t, Triple):
        raise InvalidTriple(f"expected a Triple, got {t!r}")
    p, c, l = t.p, t.c, t.l
    D = delta(p) * p
    sym = jacobi(c, p)
    if l % 2 == 0 and sym == -1:
        return Verdict(t, Status.NO_SOLUTIONS, Criterion.II, SymbolEvidence(f"({c}/{p})", sym))
    sym = jacobi(D, c)
    if sym == -1:
        return Verdict(t, Status.NO_SOLUTIONS, Criterion.I, SymbolEvidence(f"({D}/{c})", sym))
    ev = _class_test(t, bound)
    if ev is not None:
        return Verdict(t, Status.NO_SOLUTIONS, Criterion.III, ev)
    return Verdict(t, Status.INCONCLUSIVE, Criterion.NONE)
