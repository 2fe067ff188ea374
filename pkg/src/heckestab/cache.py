"""Append-only JSONL cache of computed constants.

One line per result, for example:

    {"mu": [1], "lambda": [1], "nu": [1], "n": 3, "b": "32",
     "method": "conv", "tool_version": "0.1.0", "wall_ms": 4}

b is a decimal string so arbitrarily large values survive JSON readers
that parse numbers as doubles.  Reads skip lines that fail to parse;
duplicate keys resolve to the highest tool_version, later lines winning
ties.  Writes only ever append.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .constants import StructEntry
from .errors import DomainError
from .partitions import Partition


@dataclass(frozen=True)
class CacheRecord:
    entry: StructEntry
    tool_version: str
    wall_ms: int


def append_entry(path, entry: StructEntry, tool_version: str, wall_ms: int) -> None:
    line = json.dumps(
        {
            "mu": list(entry.mu.parts),
            "lambda": list(entry.lam.parts),
            "nu": list(entry.nu.parts),
            "n": entry.n,
            "b": str(entry.b),
            "method": entry.method,
            "tool_version": tool_version,
            "wall_ms": wall_ms,
        },
        separators=(",", ":"),
    )
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(line + "\n")


def _version_key(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split("."))
    except ValueError:
        return (-1,)


def read_records(path) -> list[CacheRecord]:
    """Every well-formed line in file order; malformed lines are skipped."""
    out: list[CacheRecord] = []
    p = Path(path)
    if not p.exists():
        return out
    with open(p, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                raw = json.loads(line)
                entry = StructEntry(
                    mu=Partition(raw["mu"]),
                    lam=Partition(raw["lambda"]),
                    nu=Partition(raw["nu"]),
                    n=int(raw["n"]),
                    b=int(raw["b"]),
                    method=str(raw["method"]),
                )
                rec = CacheRecord(
                    entry=entry,
                    tool_version=str(raw["tool_version"]),
                    wall_ms=int(raw["wall_ms"]),
                )
            except (json.JSONDecodeError, DomainError, KeyError, TypeError, ValueError):
                continue
            out.append(rec)
    return out


def lookup(
    path,
    mu: Partition,
    lam: Partition,
    nu: Partition,
    n: int,
    method: str | None = None,
) -> CacheRecord | None:
    """Best matching record: highest tool_version, then the latest line."""
    best = None
    best_key = None
    for rec in read_records(path):
        e = rec.entry
        if (e.mu, e.lam, e.nu, e.n) != (mu, lam, nu, n):
            continue
        if method is not None and e.method != method:
            continue
        key = _version_key(rec.tool_version)
        if best is None or key >= best_key:
            best = rec
            best_key = key
    return best
