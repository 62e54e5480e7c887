"""Serialization and text rendering shared by the CLI and the golden tables."""
from __future__ import annotations

import csv
import io
import math
from fractions import Fraction
from typing import Sequence

from exchstat.audit import AuditVerdict, StatisticsSpec, Violation
from exchstat.partitions import Partition
from exchstat.symfunc.polys import Basis

CHECK = "✓"
CROSS = "✗"
MIXED = "✗/✓"


def fmt_rational(x) -> str:
    """"p/q" for rationals, "p" for integers."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text) -> Fraction:
    if isinstance(text, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"expected a \"p/q\" string, got {text!r}")
    return Fraction(text.strip())


def fmt_float(x: float) -> str:
    return format(float(x), ".12g")


def fmt_partition(lam: Partition) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def parse_partition(text: str) -> Partition:
    inner = text.strip().strip("()[]")
    return tuple(int(p) for p in inner.split(",") if p.strip())


def jsonable(value):
    """Recursively convert rationals to "p/q" strings, floats to 12 significant digits."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return fmt_rational(value)
    if isinstance(value, Fraction):
        return fmt_rational(value)
    if isinstance(value, float):
        return fmt_float(value) if math.isfinite(value) else str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


def mark(ok: bool) -> str:
    return CHECK if ok else CROSS


def violation_json(v: Violation) -> dict:
    return {"kind": v.kind.value, "partition": fmt_partition(v.partition), "value": fmt_rational(v.value)}


def verdict_json(verdict: AuditVerdict) -> dict:
    spec = verdict.spec
    return {
        "label": spec.label,
        "n": spec.n,
        "input_side": spec.side.value,
        "partitions": [fmt_partition(p) for p in spec.partitions],
        "C": [fmt_rational(c) for c in verdict.c],
        "Omega": [fmt_rational(o) for o in verdict.omega],
        "qm_ok": verdict.qm_ok,
        "sm_ok": verdict.sm_ok,
        "qs_ok": verdict.qs_ok,
        "violations": [violation_json(v) for v in verdict.violations],
    }


def verdict_from_json(data: dict) -> AuditVerdict:
    """Rebuild a verdict from ``verdict_json`` output (re-audits from the input side)."""
    from exchstat.audit import classify

    side = Basis(data["input_side"])
    coeffs = data["C"] if side is Basis.SCHUR else data["Omega"]
    spec = StatisticsSpec(int(data["n"]), side, tuple(parse_rational(c) for c in coeffs), data["label"], allow_empty=True)
    return classify(spec)


def render_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(str(h)) for i, h in enumerate(header)]
    line = lambda cells: " | ".join(str(c).ljust(w) for c, w in zip(cells, widths)).rstrip()
    out = [line(header), "-+-".join("-" * w for w in widths)]
    out.extend(line(r) for r in rows)
    return "\n".join(out)


def render_csv(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def verdict_row(verdict: AuditVerdict) -> list[str]:
    kinds = sorted({v.kind.value for v in verdict.violations})
    return [
        verdict.spec.label or "-",
        f"QM {mark(verdict.qm_ok)}",
        f"SM {mark(verdict.sm_ok)}",
        f"QS {mark(verdict.qs_ok)}",
        ", ".join(kinds) or "-",
    ]


VERDICT_HEADER = ["Statistics", "QM", "SM", "QS", "Violations"]
