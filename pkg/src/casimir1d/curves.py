"""Curve bundles and their byte-stable CSV/JSON encodings.

CSV layout::

    # command=figure; figure=2; bc=like; length=3; units=hbar=c=kB=1
    x,T=0,T=1,T=3
    2.0000000000000001e-01,...

Every float is written with 17 significant digits in lowercase
scientific notation, lines end in LF, and there is no trailing
delimiter.  The JSON form carries the same data; its schema ships as
``curveset.schema.json`` next to this module.
"""
from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

UNITS_NOTE = "hbar=c=kB=1"


def format_float(value: float) -> str:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"refusing to write non-finite value {value}")
    if value == 0.0:
        value = 0.0  # drop the sign of negative zero
    return f"{value:.16e}"


def format_meta_value(value) -> str:
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return ",".join(format_meta_value(v) for v in value)
    return str(value)


@dataclass
class CurveSet:
    """Named series sharing one strictly increasing abscissa.

    ``columns`` maps names to 1-D arrays; the first entry is the
    abscissa.  Insertion order is the output column order.
    """

    meta: dict
    columns: dict = field(default_factory=dict)

    def __post_init__(self):
        self.meta = {"units": UNITS_NOTE, **self.meta}
        self.columns = {k: np.asarray(v, dtype=float) for k, v in self.columns.items()}
        self.validate()

    def validate(self):
        if not self.columns:
            return
        lengths = {len(v) for v in self.columns.values()}
        if len(lengths) != 1:
            raise ValueError(f"series lengths differ: {sorted(lengths)}")
        abscissa = next(iter(self.columns.values()))
        if np.any(np.diff(abscissa) <= 0):
            raise ValueError("abscissa must be strictly increasing")
        for name in self.columns:
            if "," in name or "\n" in name:
                raise ValueError(f"bad column name {name!r}")

    @property
    def abscissa_name(self) -> str:
        return next(iter(self.columns))

    def __getitem__(self, name):
        return self.columns[name]

    def to_csv(self) -> str:
        out = io.StringIO(newline="")
        out.write("# " + "; ".join(f"{k}={format_meta_value(v)}" for k, v in self.meta.items()) + "\n")
        out.write(",".join(self.columns) + "\n")
        for row in zip(*self.columns.values()):
            out.write(",".join(format_float(v) for v in row) + "\n")
        return out.getvalue()

    def to_json(self) -> str:
        meta = {k: (v if isinstance(v, (int, float, str, bool)) else format_meta_value(v))
                for k, v in self.meta.items()}
        parts = []
        for name, values in self.columns.items():
            nums = ", ".join(format_float(v) for v in values)
            parts.append(f'    {{"name": {json.dumps(name)}, "values": [{nums}]}}')
        body = ",\n".join(parts)
        return (
            "{\n"
            f'  "meta": {json.dumps(meta, sort_keys=False)},\n'
            f'  "columns": [\n{body}\n  ]\n'
            "}\n"
        )

    def render(self, fmt: str = "csv") -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f"unknown output format {fmt!r}")

    def write(self, path, fmt: str = "csv") -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.render(fmt))
        return path


def read_csv(text: str) -> CurveSet:
    """Parse text produced by :meth:`CurveSet.to_csv`."""
    lines = text.split("\n")
    if not lines[0].startswith("# "):
        raise ValueError("missing metadata line")
    meta = {}
    for item in lines[0][2:].split("; "):
        key, _, value = item.partition("=")
        meta[key] = value
    names = lines[1].split(",")
    rows = [list(map(float, ln.split(","))) for ln in lines[2:] if ln]
    data = np.array(rows, dtype=float).reshape(-1, len(names))
    return CurveSet(meta, {n: data[:, i] for i, n in enumerate(names)})


def json_schema() -> dict:
    return json.loads(resources.files(__package__).joinpath("curveset.schema.json").read_text())
