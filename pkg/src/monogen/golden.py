"""The embedded reference table of generators for -100 <= n <= 100."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from importlib import resources

TABLE_FILE = "generator_table.json"


@dataclass(frozen=True)
class GoldenEntry:
    n: int
    basis: str
    generators: tuple[tuple[int, int, int, int, int], ...]


def table_bytes() -> bytes:
    return resources.files("monogen.data").joinpath(TABLE_FILE).read_bytes()


def table_sha256() -> str:
    return hashlib.sha256(table_bytes()).hexdigest()


def parse_table(raw: bytes | str) -> dict[int, GoldenEntry]:
    doc = json.loads(raw)
    out = {}
    for e in doc["entries"]:
        gens = tuple(tuple(int(v) for v in row) for row in e["generators"])
        out[int(e["n"])] = GoldenEntry(int(e["n"]), e["basis"], gens)
    return out


def load_table() -> dict[int, GoldenEntry]:
    return parse_table(table_bytes())


def golden_generators() -> dict[int, tuple[tuple[int, ...], ...]]:
    return {n: e.generators for n, e in load_table().items()}
