"""Check records and lossless JSON/CSV serialization."""

from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass, field, fields, is_dataclass
from typing import Any, Optional, Sequence

import numpy as np

PASS = "pass"
FAIL = "fail"
VACUOUS = "vacuous"


@dataclass(frozen=True)
class CheckItem:
    """One machine-checked inequality.

    ``lhs`` and ``rhs`` are the two sides as evaluated; ``status`` is
    ``pass`` exactly when the named relation holds with slack ``tol``.
    ``witness`` is ``(x, y, lam)`` when a pair of vectors backs the check.
    """

    name: str
    status: str
    lhs: float
    rhs: float
    tol: float
    witness: Optional[tuple] = None
    note: str = ""

    @property
    def lam(self) -> Optional[float]:
        if self.witness is None:
            return None
        return self.witness[2]


def leq_item(name, lhs, rhs, tol, witness=None, note="") -> CheckItem:
    """Build an item asserting ``lhs <= rhs + tol``."""
    ok = bool(lhs <= rhs + tol)
    return CheckItem(name, PASS if ok else FAIL, float(lhs), float(rhs), float(tol),
                     freeze_witness(witness), note)


def freeze_witness(w):
    if w is None:
        return None
    x, y, lam = w
    x = None if x is None else tuple(float(c) for c in np.ravel(x))
    y = None if y is None else tuple(float(c) for c in np.ravel(y))
    return (x, y, None if lam is None else float(lam))


@dataclass
class CheckReport:
    space: str
    items: list = field(default_factory=list)
    config: Any = None
    wall_time: float = 0.0
    converged: bool = True

    @property
    def passed(self) -> bool:
        return all(it.status != FAIL for it in self.items)

    @property
    def failures(self) -> list:
        return [it for it in self.items if it.status == FAIL]

    def sort(self) -> None:
        # deterministic merge order: check name, then lambda (None first)
        self.items.sort(key=lambda it: (it.name, -math.inf if it.lam is None else it.lam))

    def summary(self) -> str:
        lines = []
        for it in self.items:
            lam = "" if it.lam is None else f" lam={it.lam:.4g}"
            lines.append(f"{it.status.upper():7s} {it.name}{lam}  lhs={it.lhs:.10g} rhs={it.rhs:.10g}"
                         f" tol={it.tol:.1e} {it.note}".rstrip())
        return "\n".join(lines)


class Timer:
    def __enter__(self):
        self._t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self._t0
        return False


# -- JSON ------------------------------------------------------------------

def format_real(v: float) -> str:
    """17 significant digits; round-trips every finite double."""
    v = float(v)
    if math.isnan(v):
        return "NaN"
    if math.isinf(v):
        return "Infinity" if v > 0 else "-Infinity"
    text = format(v, ".17g")
    if not any(c in text for c in ".en"):
        text += ".0"
    return text


def to_plain(obj: Any) -> Any:
    """Convert dataclasses and arrays into JSON-ready builtins (floats kept)."""
    if is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_plain(getattr(obj, f.name)) for f in fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, np.ndarray):
        return [to_plain(v) for v in obj.tolist()]
    if isinstance(obj, (list, tuple)):
        return [to_plain(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def dumps(obj: Any, indent: int = 2) -> str:
    """JSON text with every real written at 17 significant digits.

    Non-finite reals are written as the tokens ``NaN``/``Infinity``, which
    Python's ``json`` module reads back.
    """
    return _dump(to_plain(obj), indent, 0)


def _dump(v, indent, level):
    import json

    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(v, bool) or v is None:
        return json.dumps(v)
    if isinstance(v, float):
        return format_real(v)
    if isinstance(v, (int, str)):
        return json.dumps(v)
    if isinstance(v, dict):
        if not v:
            return "{}"
        body = ",\n".join(f"{pad}{json.dumps(k)}: {_dump(x, indent, level + 1)}" for k, x in v.items())
        return "{\n" + body + "\n" + end + "}"
    if isinstance(v, list):
        if not v:
            return "[]"
        if all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in v):
            return "[" + ", ".join(_dump(x, indent, level + 1) for x in v) + "]"
        body = ",\n".join(pad + _dump(x, indent, level + 1) for x in v)
        return "[\n" + body + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(v).__name__}")


# -- sweep CSV ---------------------------------------------------------------

SWEEP_HEADER = ("lambda", "value", "witness_x", "witness_y", "evaluations")


def _coords(v) -> str:
    return ";".join(format_real(c) for c in np.ravel(v))


def write_sweep_rows(fh, lambdas: Sequence[float], estimates: Sequence[Any]) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for lam, est in zip(lambdas, estimates):
        writer.writerow([format_real(lam), format_real(est.value), _coords(est.witness_x),
                         _coords(est.witness_y), int(est.evaluations)])


def read_sweep_rows(fh) -> list:
    """Parse a sweep CSV into ``(lam, value, x, y, evaluations)`` tuples."""
    reader = csv.reader(fh)
    header = next(reader)
    if tuple(header) != SWEEP_HEADER:
        raise ValueError(f"unexpected sweep header {header!r}")
    rows = []
    for rec in reader:
        lam, value, wx, wy, ev = rec
        rows.append((float(lam), float(value),
                     np.array([float(c) for c in wx.split(";")]),
                     np.array([float(c) for c in wy.split(";")]),
                     int(ev)))
    return rows
