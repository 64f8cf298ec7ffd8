"""JSON / CSV / text rendering of results, and JSON decoding back to values.

Every integer goes out as a decimal string so no consumer loses precision.
"""

from __future__ import annotations

import csv
import io
import json

from .criteria import ClassEvidence, Criterion, Status, SymbolEvidence, Verdict
from .gauss import GaussPair
from .ntheory import Triple
from .quadforms import ClassGroup, QuadForm
from .search import SolutionRecord
from .series import IntPoly

SCHEMA = "phi-descent/1"
SCAN_COLUMNS = ("p", "c", "l", "status", "criterion")


def _s(n: int) -> str:
    return str(int(n))


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _form(f: QuadForm) -> list[str]:
    return [_s(f.a), _s(f.b), _s(f.c)]


def _unform(v) -> QuadForm:
    return QuadForm(*(int(x) for x in v))


# -- verdicts ---------------------------------------------------------------


def verdict_to_dict(v: Verdict) -> dict:
    t = v.triple
    ev = v.evidence
    if isinstance(ev, SymbolEvidence):
        evidence = {"type": "symbol", "symbol": ev.symbol, "value": _s(ev.value)}
    elif isinstance(ev, ClassEvidence):
        evidence = {
            "type": "class",
            "D": _s(ev.D),
            "h": _s(ev.h),
            "prime_form": _form(ev.prime_form),
            "power_subgroup_size": _s(ev.power_subgroup_size),
        }
    else:
        evidence = {}
    return {
        "schema": SCHEMA,
        "kind": "verdict",
        "p": _s(t.p),
        "c": _s(t.c),
        "l": _s(t.l),
        "status": v.status.value,
        "criterion": v.criterion.value,
        "evidence": evidence,
    }


def verdict_from_dict(d: dict) -> Verdict:
    ev = d.get("evidence") or {}
    if ev.get("type") == "symbol":
        evidence = SymbolEvidence(ev["symbol"], int(ev["value"]))
    elif ev.get("type") == "class":
        evidence = ClassEvidence(
            int(ev["D"]), int(ev["h"]), _unform(ev["prime_form"]), int(ev["power_subgroup_size"])
        )
    else:
        evidence = None
    t = Triple(int(d["p"]), int(d["c"]), int(d["l"]))
    return Verdict(t, Status(d["status"]), Criterion(d["criterion"]), evidence)


def verdict_text(v: Verdict) -> str:
    t = v.triple
    line = f"{t.c}*y^{t.l} = Phi_{t.p}(x): {v.status.value}"
    ev = v.evidence
    if isinstance(ev, SymbolEvidence):
        line += f" by criterion {v.criterion.value}, {ev.symbol} = {ev.value}"
    elif isinstance(ev, ClassEvidence):
        line += (
            f" by criterion {v.criterion.value}, D = {ev.D}, h = {ev.h}, prime form {ev.prime_form}"
            f" outside the {ev.power_subgroup_size}-element subgroup of {t.l}-th powers"
        )
    return line + "\n"


def csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def verdict_row(v: Verdict) -> tuple:
    t = v.triple
    return (t.p, t.c, t.l, v.status.value, v.criterion.value)


# -- gauss pairs ------------------------------------------------------------


def gauss_to_dict(gp: GaussPair, verified: bool) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "gauss_pair",
        "p": _s(gp.p),
        "delta": _s(gp.delta),
        "A": [_s(v) for v in gp.A.coeffs],
        "B": [_s(v) for v in gp.B.coeffs],
        "identity": "verified" if verified else "failed",
    }


def gauss_from_dict(d: dict) -> GaussPair:
    return GaussPair(
        int(d["p"]), int(d["delta"]), IntPoly(int(v) for v in d["A"]), IntPoly(int(v) for v in d["B"])
    )


def gauss_text(gp: GaussPair, verified: bool) -> str:
    return (
        f"p = {gp.p}, delta = {gp.delta:+d}\n"
        f"A = {list(gp.A.coeffs)}\n"
        f"B = {list(gp.B.coeffs)}\n"
        f"identity: {'verified' if verified else 'FAILED'}\n"
    )


def gauss_rows(gp: GaussPair) -> list[tuple]:
    return [(k, gp.A[k], gp.B[k]) for k in range(len(gp.A))]


# -- class groups -----------------------------------------------------------


def classgroup_to_dict(G: ClassGroup) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "class_group",
        "D": _s(G.D),
        "h": _s(G.h),
        "classes": [_form(f) for f in G.classes],
    }


def classgroup_from_dict(d: dict) -> ClassGroup:
    return ClassGroup(int(d["D"]), tuple(_unform(f) for f in d["classes"]))


def classgroup_text(G: ClassGroup) -> str:
    lines = [f"D = {G.D}, h = {G.h}"]
    lines += [f"  {f}" for f in G.classes]
    return "\n".join(lines) + "\n"


# -- searches ---------------------------------------------------------------


def search_to_dict(t: Triple, x_bound: int, sols: list[SolutionRecord]) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "search",
        "p": _s(t.p),
        "c": _s(t.c),
        "l": _s(t.l),
        "x_bound": _s(x_bound),
        "solutions": [{"x": _s(r.x), "y": _s(r.y)} for r in sols],
    }


def search_from_dict(d: dict) -> tuple[Triple, int, list[SolutionRecord]]:
    t = Triple(int(d["p"]), int(d["c"]), int(d["l"]))
    sols = [SolutionRecord(t, int(r["x"]), int(r["y"])) for r in d["solutions"]]
    return t, int(d["x_bound"]), sols


def search_text(t: Triple, x_bound: int, sols: list[SolutionRecord]) -> str:
    head = f"{t.c}*y^{t.l} = Phi_{t.p}(x), |x| <= {x_bound}: {len(sols)} solution(s)\n"
    return head + "".join(f"  x = {r.x}, y = {r.y}\n" for r in sols)
