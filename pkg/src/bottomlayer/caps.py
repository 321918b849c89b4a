"""Size caps that keep every computation desk-scale.

``BL_CAP`` overrides the defaults. It is either a bare integer (the matrix
size cap) or a comma-separated list such as ``matrix=64,dim=16,k=4,t=4``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import ParseError


@dataclass(frozen=True)
class Caps:
    matrix: int = 64  # largest N for materialized gl(N) matrices
    dim: int = 16  # largest natural-module dimension in tensor powers
    k: int = 4  # largest tensor power
    t: int = 4  # largest symmetric power


def parse_caps(text: str, base: Caps | None = None) -> Caps:
    base = base or Caps()
    text = text.strip()
    if not text:
        return base
    if text.isdigit():
        return replace(base, matrix=int(text))
    updates = {}
    for item in text.split(","):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in Caps.__dataclass_fields__:
            raise ParseError(f"bad BL_CAP entry {item!r}")
        try:
            updates[key] = int(value)
        except ValueError:
            raise ParseError(f"bad BL_CAP entry {item!r}") from None
    return replace(base, **updates)


def current_caps() -> Caps:
    return parse_caps(os.environ.get("BL_CAP", ""))
