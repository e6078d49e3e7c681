"""Parsers for diagram specs (``D4``, ``A3xB2``) and decoration flags."""

from __future__ import annotations

import re

from .dynkin import DynkinDiagram, SimpleType, build_diagram
from .errors import SpecParseError

__all__ = ["parse_diagram", "parse_vertex_list", "parse_bundle"]

_COMPONENT = re.compile(r"([A-Ga-g])([0-9]+)")


def parse_diagram(text: str) -> DynkinDiagram:
    """Parse ``component ("x" component)*``; letters are case-insensitive.

    >>> parse_diagram("a3xB2").name
    'A3xB2'
    """
    if not text:
        raise SpecParseError(text, "empty diagram spec")
    if any(ch.isspace() for ch in text):
        raise SpecParseError(text, "whitespace is not allowed")
    comps = []
    for token in text.split("x"):
        m = _COMPONENT.fullmatch(token)
        if m is None:
            raise SpecParseError(token, "expected a letter A-G followed by a rank")
        comps.append(SimpleType(m.group(1).upper(), int(m.group(2))))
    return build_diagram(comps)


def _int_token(token: str) -> int:
    if not re.fullmatch(r"[+-]?[0-9]+", token):
        raise SpecParseError(token, "expected an integer")
    return int(token)


def parse_vertex_list(text: str, d: DynkinDiagram) -> frozenset[int]:
    if text.strip() == "":
        return frozenset()
    out = set()
    for token in text.split(","):
        v = _int_token(token)
        d.check_vertex(v)
        out.add(v)
    return frozenset(out)


def parse_bundle(text: str, d: DynkinDiagram) -> tuple[int, ...]:
    coeffs = tuple(_int_token(t) for t in text.split(","))
    if len(coeffs) != d.rank:
        raise SpecParseError(text, f"bundle needs {d.rank} coefficients, got {len(coeffs)}")
    return coeffs
