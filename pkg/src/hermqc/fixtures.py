"""Bundled rows of published constructions, one JSON object per line."""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from importlib import resources
from pathlib import Path

from .fields import field_make
from .poly import p_parse
from .qc import QuasiCyclicCode, qc_build

__all__ = ["Fixture", "load_fixtures", "fixture_by_id", "FixtureError"]

REQUIRED = ("table", "id", "q2", "n", "g1", "g2", "t", "claimed_nkd", "claimed_quantum")


class FixtureError(ValueError):
    pass


@dataclass(frozen=True)
class Fixture:
    table: int | str
    id: str
    q2: int
    n: int | None
    g1: str | None
    g2: str | None
    t: str | None
    claimed_nkd: tuple | None
    claimed_quantum: tuple | None
    extra: dict = dc_field(default_factory=dict, compare=False)

    @property
    def has_code(self) -> bool:
        return self.g1 is not None

    @property
    def q(self) -> int:
        return {4: 2, 9: 3, 16: 4, 25: 5}[self.q2]

    @property
    def erratum(self) -> dict | None:
        return self.extra.get("erratum")

    def code(self) -> QuasiCyclicCode:
        if not self.has_code:
            raise FixtureError(f"row {self.id} carries no construction")
        F = field_make(self.q2)
        return qc_build(self.n, F, p_parse(self.g1, F), p_parse(self.g2, F), p_parse(self.t, F))


def _default_path():
    return resources.files("hermqc") / "data" / "fixtures.jsonl"


def load_fixtures(path: str | Path | None = None) -> list[Fixture]:
    src = _default_path() if path is None else Path(path)
    try:
        text = src.read_text(encoding="utf-8")
    except OSError as e:
        raise FixtureError(f"cannot read fixture file {src}: {e}") from e
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as e:
            raise FixtureError(f"{src}:{lineno}: {e}") from e
        missing = [k for k in REQUIRED if k not in obj]
        if missing:
            raise FixtureError(f"{src}:{lineno}: missing fields {missing}")
        extra = {k: v for k, v in obj.items() if k not in REQUIRED}
        rows.append(
            Fixture(
                obj["table"], obj["id"], obj["q2"], obj["n"], obj["g1"], obj["g2"], obj["t"],
                tuple(obj["claimed_nkd"]) if obj["claimed_nkd"] else None,
                tuple(obj["claimed_quantum"]) if obj["claimed_quantum"] else None,
                extra,
            )
        )
    return rows


def fixture_by_id(ident: str, path: str | Path | None = None) -> Fixture:
    for row in load_fixtures(path):
        if row.id == ident:
            return row
    raise FixtureError(f"no fixture row {ident!r}")
