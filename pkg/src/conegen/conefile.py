"""Text formats: the cone file and the JSON result document.

A cone file is a header line ``n m`` followed by ``m`` rows of ``n``
rationals (``p``, ``-p`` or ``p/q``). Lines starting with ``#`` are comments
and blank lines are skipped::

    # the upper half-plane
    2 3
    1 0
    -1 0
    0 1
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .conecore import GeneratorSet
from .ratcore import Vector, format_rational, parse_rational


class ConeFileError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<input>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")


def _parse_row(tokens: list[str], lineno: int, source: str) -> Vector:
    out = []
    for tok in tokens:
        try:
            out.append(parse_rational(tok))
        except ValueError as exc:
            raise ConeFileError(str(exc), lineno, source) from None
    return tuple(out)


def parse_cone_file(text: str, source: str = "<input>") -> GeneratorSet:
    header = None
    rows: list[Vector] = []
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last = lineno
        tokens = line.split()
        if header is None:
            if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
                raise ConeFileError(f"header must be 'n m', got {line!r}", lineno, source)
            header = (int(tokens[0]), int(tokens[1]))
            if header[0] < 1:
                raise ConeFileError("ambient dimension n must be at least 1", lineno, source)
            continue
        n, m = header
        if len(rows) == m:
            raise ConeFileError(f"more than the {m} rows announced in the header", lineno, source)
        if len(tokens) != n:
            raise ConeFileError(f"expected {n} entries, got {len(tokens)}", lineno, source)
        rows.append(_parse_row(tokens, lineno, source))
    if header is None:
        raise ConeFileError("missing 'n m' header", None, source)
    if len(rows) != header[1]:
        raise ConeFileError(f"header announces {header[1]} rows, found {len(rows)}", last, source)
    return GeneratorSet(header[0], tuple(rows))


def parse_point(text: str, n: int) -> Vector:
    tokens = text.split()
    if len(tokens) != n:
        raise ConeFileError(f"point has {len(tokens)} entries, expected {n}", None, "<point>")
    return _parse_row(tokens, None, "<point>")


def format_row(v: Iterable[Fraction]) -> str:
    return " ".join(format_rational(x) for x in v)


def format_cone_file(S: GeneratorSet, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{S.ambient_dim} {len(S)}")
    lines.extend(format_row(v) for v in S)
    return "\n".join(lines) + "\n"


def digest(S: GeneratorSet) -> str:
    return "sha256:" + hashlib.sha256(format_cone_file(S).encode()).hexdigest()


def decimal_text(x: Fraction, digits: int) -> str:
    """Round half-to-even at ``digits`` places after the point (lossy)."""
    q = round(x * 10**digits)
    sign = "-" if q < 0 else ""
    q = abs(q)
    if digits == 0:
        return f"{sign}{q}"
    whole, frac = divmod(q, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


@dataclass
class ResultDocument:
    operation: str
    input_digest: str
    ambient_dim: int
    output: tuple[Vector, ...] = ()
    certificates: dict[str, tuple[Fraction, ...]] = field(default_factory=dict)
    sizes: dict[str, int] = field(default_factory=dict)
    indices: dict[str, tuple[int, ...]] = field(default_factory=dict)
    verdict: bool | None = None

    def to_dict(self) -> dict:
        return {
            "operation": self.operation,
            "input_digest": self.input_digest,
            "ambient_dim": self.ambient_dim,
            "output": [[format_rational(x) for x in v] for v in self.output],
            "certificates": {k: [format_rational(x) for x in v] for k, v in self.certificates.items()},
            "sizes": dict(self.sizes),
            "indices": {k: list(v) for k, v in self.indices.items()},
            "verdict": self.verdict,
        }

    def to_json(self, decimal: int | None = None) -> str:
        data = self.to_dict()
        if decimal is not None:
            data["decimal"] = {
                "lossy": True,
                "digits": decimal,
                "output": [[decimal_text(x, decimal) for x in v] for v in self.output],
            }
        return json.dumps(data, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ResultDocument":
        data = json.loads(text)
        return cls(
            operation=data["operation"],
            input_digest=data["input_digest"],
            ambient_dim=data["ambient_dim"],
            output=tuple(tuple(parse_rational(x) for x in v) for v in data["output"]),
            certificates={k: tuple(parse_rational(x) for x in v) for k, v in data["certificates"].items()},
            sizes=dict(data["sizes"]),
            indices={k: tuple(v) for k, v in data["indices"].items()},
            verdict=data["verdict"],
        )

    def output_set(self) -> GeneratorSet:
        return GeneratorSet(self.ambient_dim, self.output)
