"""Text, line-delimited record, and DOT renderings of verdicts.

Record fields, in this order:

``diagram``  diagram spec string, e.g. ``"D4"``
``theta``    sorted list of vertices in Theta
``lambda``   sorted list of vertices in Lambda(L)
``status``   ``"VanishesAllDegrees"`` or ``"Inconclusive"``
``rule``     ``"MainTheorem"``, ``"GrassmannianOddOdd(d,e)"`` or ``null``
``witness``  witness vertex for ``MainTheorem``, else ``null``
``caveat``   always ``"assumes char(k) ≠ 2"``

Enumeration output ends with one extra ``{"totals": {...}}`` line.
"""

from __future__ import annotations

import json
from typing import Iterable

from .dynkin import DynkinDiagram
from .enumeration import ClassificationTable, mask_to_set
from .parsing import parse_diagram
from .vanishing import CAVEAT, VanishingVerdict

__all__ = [
    "RECORD_FIELDS", "to_record", "record_line", "parse_record",
    "text_report", "table_text", "table_records", "render_dot",
]

RECORD_FIELDS = ("diagram", "theta", "lambda", "status", "rule", "witness", "caveat")


def _fmt_set(vs: Iterable[int]) -> str:
    return "{" + ",".join(map(str, sorted(vs))) + "}"


def to_record(d: DynkinDiagram, theta, lam, verdict: VanishingVerdict) -> dict:
    return {
        "diagram": d.name,
        "theta": sorted(theta),
        "lambda": sorted(lam),
        "status": verdict.status.value,
        "rule": None if verdict.rule is None else str(verdict.rule),
        "witness": verdict.witness,
        "caveat": verdict.caveat,
    }


def record_line(record: dict) -> str:
    return json.dumps(record, ensure_ascii=False)


def parse_record(line: str) -> tuple[DynkinDiagram, frozenset[int], frozenset[int], dict]:
    rec = json.loads(line)
    missing = [f for f in RECORD_FIELDS if f not in rec]
    if missing:
        raise ValueError(f"record missing fields {missing}")
    return parse_diagram(rec["diagram"]), frozenset(rec["theta"]), frozenset(rec["lambda"]), rec


def text_report(d: DynkinDiagram, theta, lam, verdict: VanishingVerdict) -> str:
    lines = [
        f"diagram: {d.name}",
        d.legend(),
        f"theta: {_fmt_set(theta)}",
        f"lambda: {_fmt_set(lam)}",
        f"verdict: {verdict.status.value}",
        f"rule: {verdict.rule if verdict.rule is not None else 'none'}",
        f"witness: {verdict.witness if verdict.witness is not None else 'none'}",
    ]
    red = verdict.reduction
    if red is not None:
        lines.append(
            f"theta': {_fmt_set(red.theta_prime)} "
            f"(X_theta is the projectivization of a rank-{red.fiber_rank} bundle over X_theta')"
        )
    lines.append(f"caveat: {verdict.caveat}")
    return "\n".join(lines) + "\n"


def _mask_members():
    """Memoised sorted vertex lists per bitmask; tables repeat masks heavily."""
    mask_cache: dict[int, list[int]] = {}

    def members(mask):
        out = mask_cache.get(mask)
        if out is None:
            out = mask_cache[mask] = sorted(mask_to_set(mask))
        return out

    return members


def table_text(table: ClassificationTable) -> str:
    d = table.diagram
    members = _mask_members()
    out = [f"diagram: {d.name}", d.legend(), "theta\tlambda\tstatus\trule\twitness"]
    tails: dict[int, str] = {}
    for r in table.rows:
        v = r.verdict
        tail = tails.get(id(v))
        if tail is None:
            tail = tails[id(v)] = "\t".join([
                v.status.value,
                str(v.rule) if v.rule is not None else "-",
                str(v.witness) if v.witness is not None else "-",
            ])
        out.append(f"{_fmt_set(members(r.theta_mask))}\t{_fmt_set(members(r.lam_mask))}\t{tail}")
    totals = table.totals
    out.append(f"rows: {len(table)}")
    out.append("totals: " + ", ".join(f"{k}={n}" for k, n in totals.items()))
    out.append(f"caveat: {CAVEAT}")
    return "\n".join(out) + "\n"


def table_records(table: ClassificationTable) -> str:
    # assembled by hand for speed; tests pin byte-equality with record_line
    d = table.diagram
    members = _mask_members()
    head = '{"diagram": ' + json.dumps(d.name) + ', "theta": '
    tails: dict[int, str] = {}
    lines = []
    for r in table.rows:
        v = r.verdict
        tail = tails.get(id(v))
        if tail is None:
            rec = to_record(d, (), (), v)
            del rec["diagram"], rec["theta"], rec["lambda"]
            tail = tails[id(v)] = ", " + record_line(rec)[1:]
        lines.append(
            f"{head}{json.dumps(members(r.theta_mask))}, \"lambda\": {json.dumps(members(r.lam_mask))}{tail}"
        )
    lines.append(json.dumps({"totals": table.totals}))
    return "\n".join(lines) + "\n"


def render_dot(d: DynkinDiagram, theta, lam, verdict: VanishingVerdict | None = None) -> str:
    """DOT graph: Theta filled black, Lambda double circles, witness marked alpha."""
    theta, lam = frozenset(theta), frozenset(lam)
    witness = verdict.witness if verdict is not None else None
    out = [
        f'graph "{d.name}" {{',
        f"  // {d.legend()}",
        "  node [shape=circle];",
    ]
    for v in d.vertices:
        attrs = [f'label="{v}"']
        if v in theta:
            attrs += ["style=filled", "fillcolor=black", "fontcolor=white"]
        elif v in lam:
            attrs.append("shape=doublecircle")
        if v == witness:
            attrs.append('xlabel="α"')
        out.append(f"  {v} [{', '.join(attrs)}];")
    for i, j in sorted(d.edges):
        m = d.edge_multiplicity(i, j)
        suffix = f' [label="{m}"]' if m > 1 else ""
        out.append(f"  {i} -- {j}{suffix};")
    out.append("}")
    return "\n".join(out) + "\n"
