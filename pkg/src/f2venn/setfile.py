"""Plain-text point-set files.

One bitstring per line, internal spaces ignored, ``#`` starts a comment line,
and blank lines separate sets.
"""

from __future__ import annotations

from pathlib import Path

from .gf2 import PointSet, format_bitstring, parse_bitstring


class SetFileError(ValueError):
    def __init__(self, message: str, path: str = "<string>", line: int | None = None):
        where = f"{path}:{line}" if line is not None else path
        super().__init__(f"{where}: {message}")
        self.path = path
        self.line = line


def parse_sets(text: str, path: str = "<string>") -> list[PointSet]:
    blocks: list[list[tuple[int, str]]] = [[]]
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            if blocks[-1]:
                blocks.append([])
            continue
        blocks[-1].append((lineno, line))
    sets = []
    for block in blocks:
        if not block:
            continue
        first_line, first = block[0]
        n = len("".join(first.split()))
        points = []
        seen: dict[int, int] = {}
        for lineno, line in block:
            digits = "".join(line.split())
            if len(digits) != n:
                raise SetFileError(
                    f"bitstring has length {len(digits)}, expected {n} (set starting at line {first_line})",
                    path, lineno)
            try:
                p = parse_bitstring(line, n)
            except ValueError as exc:
                raise SetFileError(str(exc), path, lineno) from None
            if p in seen:
                raise SetFileError(f"duplicate point (first seen at line {seen[p]})", path, lineno)
            seen[p] = lineno
            points.append(p)
        try:
            sets.append(PointSet(n, tuple(points)))
        except ValueError as exc:
            raise SetFileError(str(exc), path, first_line) from None
    return sets


def read_sets(path: str | Path) -> list[PointSet]:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise SetFileError(exc.strerror or str(exc), str(p)) from None
    return parse_sets(text, str(p))


def format_set(S: PointSet) -> str:
    return "\n".join(format_bitstring(p, S.n) for p in S.points)
