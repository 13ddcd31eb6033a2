"""Instance file format (.ps): optional '#' comment header, a count line,
then one "x y" line per point in lexicographic order.

Readers validate the Pareto-set invariants and the coordinate magnitude
bound; writers always emit sorted sets.
"""

from __future__ import annotations

import os
from typing import Iterable, Sequence

from .core import COORD_LIMIT, ParetoSet


def read_pareto_set(path: str | os.PathLike) -> ParetoSet:
    """Parse and validate a .ps instance file.

    Raises ValueError (with the offending path) on malformed content, on
    coordinates with magnitude >= 2^31, and on point sequences that are not
    sorted Pareto sets.
    """
    path = os.fspath(path)
    with open(path, "r", encoding="utf-8") as fp:
        lines = [ln.strip() for ln in fp]
    rows = [ln for ln in lines if ln and not ln.startswith("#")]
    if not rows:
        raise ValueError(f"{path}: missing point count line")
    try:
        n = int(rows[0])
    except ValueError:
        raise ValueError(f"{path}: first non-comment line must be the point count") from None
    if n < 0:
        raise ValueError(f"{path}: negative point count {n}")
    if len(rows) - 1 != n:
        raise ValueError(f"{path}: expected {n} points, found {len(rows) - 1}")
    xs: list[int] = []
    ys: list[int] = []
    for ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"{path}: malformed point line {ln!r}")
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"{path}: malformed point line {ln!r}") from None
        if abs(x) >= COORD_LIMIT or abs(y) >= COORD_LIMIT:
            raise ValueError(f"{path}: coordinate magnitude of ({x}, {y}) exceeds 2^31 - 1")
        xs.append(x)
        ys.append(y)
    try:
        return ParetoSet.from_arrays(xs, ys)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None


def write_pareto_set(
    path: str | os.PathLike,
    ps: ParetoSet | Iterable,
    header: Sequence[str] = (),
) -> None:
    """Write a .ps file; header lines are emitted as '#' comments."""
    path = os.fspath(path)
    if not isinstance(ps, ParetoSet):
        ps = ParetoSet(ps)
    chunks = [f"# {line}" for line in header]
    chunks.append(str(len(ps)))
    xs = ps.xs.tolist()
    ys = ps.ys.tolist()
    chunks.extend(f"{x} {y}" for x, y in zip(xs, ys))
    chunks.append("")
    with open(path, "w", encoding="utf-8") as fp:
        fp.write("\n".join(chunks))
