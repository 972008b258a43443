"""The ``.kcol`` colouring format and run reports."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .graph import EdgeColouring

try:
    from importlib.metadata import version as _pkg_version
    VERSION = _pkg_version("artifact")
except Exception:  # not installed, e.g. running from a checkout
    VERSION = "0.1.0"


class KcolParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def format_colouring(colouring: EdgeColouring) -> str:
    """Header ``n r`` then one row per vertex i listing colours of (i, i+1), ..., (i, n)."""
    n = colouring.n
    lines = [f"{n} {colouring.r}"]
    pos = 0
    for i in range(1, n):
        row = colouring.colours[pos:pos + n - i]
        pos += n - i
        lines.append(" ".join(map(str, row)))
    return "\n".join(lines) + "\n"


def parse_colouring(text: str) -> EdgeColouring:
    header = None
    values: list[tuple[int, int]] = []  # (colour, line number)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if header is None:
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise KcolParseError("header must be 'n r'", lineno)
            try:
                n, r = int(parts[0]), int(parts[1])
            except ValueError:
                raise KcolParseError("header must contain two integers", lineno) from None
            if n < 2 or r < 1:
                raise KcolParseError("header needs n >= 2 and r >= 1", lineno)
            header = (n, r, lineno)
            continue
        for tok in line.split():
            try:
                c = int(tok)
            except ValueError:
                raise KcolParseError(f"not an integer: {tok!r}", lineno) from None
            if not 1 <= c <= header[1]:
                raise KcolParseError(f"colour {c} outside 1..{header[1]}", lineno)
            values.append((c, lineno))
    if header is None:
        raise KcolParseError("missing header", max(1, len(text.splitlines())))
    n, r, hline = header
    need = n * (n - 1) // 2
    if len(values) != need:
        where = values[need][1] if len(values) > need else (values[-1][1] if values else hline)
        raise KcolParseError(f"expected {need} edge colours for n={n}, found {len(values)}", where)
    return EdgeColouring(n, r, tuple(c for c, _ in values))


def read_colouring(path: str | Path) -> EdgeColouring:
    return parse_colouring(Path(path).read_text())


def write_colouring(colouring: EdgeColouring, path: str | Path) -> None:
    Path(path).write_text(format_colouring(colouring))


@dataclass
class Assertion:
    clause: str
    passed: bool
    detail: str = ""


@dataclass
class RunReport:
    """Config echo, results and assertions (stable) plus timings (volatile)."""

    config: dict = field(default_factory=dict)
    results: list[dict] = field(default_factory=list)
    assertions: list[Assertion] = field(default_factory=list)
    timings: dict = field(default_factory=dict)
    version: str = VERSION

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.assertions)

    def check(self, clause: str, ok: bool, detail: str = "") -> bool:
        self.assertions.append(Assertion(clause, bool(ok), detail))
        return bool(ok)

    def to_dict(self) -> dict:
        return {
            "stable": {
                "version": self.version,
                "config": self.config,
                "results": self.results,
                "assertions": [vars(a) for a in self.assertions],
                "passed": self.passed,
            },
            "volatile": {"timings": self.timings},
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RunReport":
        st = d["stable"]
        return cls(st["config"], st["results"], [Assertion(**a) for a in st["assertions"]],
                   d.get("volatile", {}).get("timings", {}), st["version"])


def _text(report: RunReport) -> str:
    out = [f"kcolour {report.version}"]
    if report.config:
        out.append("config: " + " ".join(f"{k}={v}" for k, v in sorted(report.config.items())))
    for res in report.results:
        name = res.get("name", "result")
        fields = {k: v for k, v in res.items() if k != "name"}
        out.append(f"{name}:")
        for k in sorted(fields):
            v = fields[k]
            if isinstance(v, list):
                v = "{" + ", ".join(map(str, v)) + "}"
            out.append(f"  {k}: {v}")
    for a in report.assertions:
        out.append(f"[{'PASS' if a.passed else 'FAIL'}] {a.clause}" + (f"  ({a.detail})" if a.detail else ""))
    n_ok = sum(a.passed for a in report.assertions)
    out.append(f"{n_ok}/{len(report.assertions)} assertions passed")
    return "\n".join(out) + "\n"


def emit_report(report: RunReport, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n"
    if fmt == "text":
        return _text(report)
    raise ValueError(f"unknown format {fmt!r}")


def stable_json(report: RunReport) -> str:
    return json.dumps(report.to_dict()["stable"], sort_keys=True, indent=2)
