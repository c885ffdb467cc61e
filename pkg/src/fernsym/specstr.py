"""Text form of region specs: ``family:key=value,...``.

A bare integer after a list key continues that list, so ``fc:x=2,y=6,z=4,a=1,2,6,3``
gives the fern (1, 2, 6, 3).  The ``f`` key of ``mf`` holds several ferns
separated by ``/``: ``mf:x=1,y=1,z=1,g=2,f=1,1/0,1``.  Negative integers are
accepted only for ``x`` in the ``fcp`` family.
"""
from __future__ import annotations

import re

from .regions import RegionSpec

SCALARS = {
    "hex": ("x", "y", "z"),
    "s": (),
    "t": ("m", "n"),
    "fc": ("x", "y", "z"),
    "fcp": ("x", "y", "z"),
    "mf": ("x", "y", "z"),
}
LISTS = {"hex": (), "s": ("b",), "t": ("pos",), "fc": ("a",), "fcp": ("a",),
         "mf": ("g", "f")}
REQUIRED = {"hex": ("x", "y", "z"), "s": ("b",), "t": ("m", "n"),
            "fc": ("x", "y", "z"), "fcp": ("x", "y", "z"), "mf": ("x", "y", "z")}
FAMILIES = tuple(SCALARS)

_INT = re.compile(r"-?\d+\Z")


class SpecParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _int(text: str, pos: int, negative_ok: bool) -> int:
    if not _INT.match(text):
        raise SpecParseError(f"expected an integer, got {text!r}", pos)
    v = int(text)
    if v < 0 and not negative_ok:
        raise SpecParseError(f"negative value {v} not allowed", pos)
    return v


def parse_spec(text: str) -> RegionSpec:
    """Parse a spec string; errors carry the 0-based character position."""
    family, colon, body = text.partition(":")
    family = family.strip()
    if not colon:
        raise SpecParseError("missing ':' after family", len(text))
    if family not in SCALARS:
        raise SpecParseError(f"unknown family {family!r}", 0)
    params: dict = {}
    current = None  # list key that bare integers extend
    offset = len(family) + 1
    for token in body.split(",") if body else []:
        pos = offset
        offset += len(token) + 1
        tok = token.strip()
        if "=" in tok:
            key, _, value = tok.partition("=")
            key = key.strip()
            if key in params:
                raise SpecParseError(f"duplicate key {key!r}", pos)
            if key in SCALARS[family]:
                params[key] = _int(value.strip(), pos + len(key) + 1,
                                   family == "fcp" and key == "x")
                current = None
                continue
            if key not in LISTS[family]:
                raise SpecParseError(f"unknown key {key!r} for {family}", pos)
            params[key] = [[]] if key == "f" else []
            current = key
            tok = value.strip()
            pos += len(key) + 1
            if not tok:
                continue
        elif current is None:
            raise SpecParseError(f"unexpected value {tok!r}", pos)
        if current == "f":
            pieces = tok.split("/")
            for i, piece in enumerate(pieces):
                if i:
                    params["f"].append([])
                if piece.strip():
                    params["f"][-1].append(_int(piece.strip(), pos, False))
        else:
            params[current].append(_int(tok, pos, False))
    missing = [k for k in REQUIRED[family] if k not in params]
    if missing:
        raise SpecParseError(f"missing key(s) {', '.join(missing)}", len(text))
    if family == "mf":
        params.setdefault("g", [])
        params.setdefault("f", [])
    return RegionSpec(family, params)


def format_spec(spec: RegionSpec) -> str:
    """Canonical text for ``spec``; ``parse_spec`` inverts it."""
    parts = []
    p = spec.params
    for key in SCALARS[spec.family]:
        if key in p:
            parts.append(f"{key}={p[key]}")
    for key in LISTS[spec.family]:
        if key not in p:
            continue
        if key == "f":
            if not p[key]:
                continue
            body = "/".join(",".join(map(str, f)) for f in p[key])
        else:
            body = ",".join(map(str, p[key]))
        parts.append(f"{key}={body}")
    return f"{spec.family}:" + ",".join(parts)


__all__ = ["SpecParseError", "parse_spec", "format_spec", "FAMILIES"]
