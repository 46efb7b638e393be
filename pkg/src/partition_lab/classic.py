"""Exact p(n) by Euler's pentagonal recurrence, and the leading Rademacher term."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from pathlib import Path


def pentagonal_offsets(n: int):
    """Yield ``(sign, g)`` for generalized pentagonal numbers ``g <= n``, ascending.

    For each k = 1, 2, ... the pair k(3k-1)/2, k(3k+1)/2 is produced with sign
    (-1)^(k-1).
    """
    k = 1
    while True:
        sign = 1 if k % 2 else -1
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            return
        yield sign, g1
        g2 = g1 + k
        if g2 <= n:
            yield sign, g2
        k += 1


class PartitionTable:
    """Values p(0), ..., p(max_n).

    Reads are safe from any thread.  :meth:`extend` mutates the table and
    callers sharing one instance across threads must serialize it themselves.
    """

    def __init__(self, values=None) -> None:
        self.values: list[int] = [1] if values is None else list(values)
        if not self.values or self.values[0] != 1:
            raise ValueError("a partition table must start with p(0) = 1")

    @property
    def max_n(self) -> int:
        return len(self.values) - 1

    def extend(self, max_n: int) -> None:
        values = self.values
        for n in range(len(values), max_n + 1):
            total = 0
            for sign, g in pentagonal_offsets(n):
                if sign > 0:
                    total += values[n - g]
                else:
                    total -= values[n - g]
            values.append(total)

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other) -> bool:
        return isinstance(other, PartitionTable) and self.values == other.values

    def __repr__(self) -> str:
        return f"PartitionTable(max_n={self.max_n})"


def build_table(max_n: int) -> PartitionTable:
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    table = PartitionTable()
    table.extend(max_n)
    return table


_default_table = PartitionTable()


def p_euler(n: int, table: PartitionTable | None = None) -> int:
    """p(n), extending ``table`` (or a module-level table) as needed."""
    if n < 0:
        return 0
    if table is None:
        table = _default_table
    if n > table.max_n:
        table.extend(n)
    return table[n]


class CacheParseError(ValueError):
    def __init__(self, path, line: int, text: str) -> None:
        super().__init__(f"{path}: line {line}: expected a decimal integer, got {text!r}")
        self.line = line


CACHE_ENV = "PARTITION_LAB_CACHE"


def resolve_cache_path(explicit: str | os.PathLike | None = None) -> Path | None:
    """``--cache`` wins over ``$PARTITION_LAB_CACHE``; otherwise no cache."""
    if explicit:
        return Path(explicit)
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


def load_table(path: str | os.PathLike) -> PartitionTable:
    """Read a cache file: line i (0-based) holds p(i) in decimal, no header.

    Line numbers in :class:`CacheParseError` are 1-based, as an editor shows them.
    """
    lines = Path(path).read_text(encoding="ascii", errors="replace").splitlines()
    while lines and lines[-1] == "":
        lines.pop()
    values = []
    for lineno, text in enumerate(lines, start=1):
        if not (text.isascii() and text.isdigit()):
            raise CacheParseError(path, lineno, text)
        values.append(int(text))
    if not values:
        return PartitionTable()
    if values[0] != 1:
        raise CacheParseError(path, 1, str(values[0]))
    return PartitionTable(values)


def save_table(table: PartitionTable, path: str | os.PathLike) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text("".join(f"{v}\n" for v in table.values), encoding="ascii")
    tmp.replace(path)


def cached_table(max_n: int, path: str | os.PathLike | None) -> PartitionTable:
    """Load ``path`` if it exists, extend to ``max_n``, write back if it grew."""
    if path is None:
        return build_table(max_n)
    path = Path(path)
    table = load_table(path) if path.exists() else PartitionTable()
    before = table.max_n
    table.extend(max_n)
    if table.max_n > before or not path.exists():
        save_table(table, path)
    return table


@dataclass(frozen=True)
class EstimateReport:
    n: int
    lambda_n: float
    estimate: float
    rounded: int

    @property
    def relative_error(self) -> float:
        exact = p_euler(self.n)
        return abs(self.estimate - exact) / exact


# c * lambda beyond this overflows cosh in double precision
_MAX_ARG = 700.0


def hr_leading_estimate(n: int) -> EstimateReport:
    """First (k = 1) term of the Rademacher series, derivative taken analytically.

    Double precision throughout; fine up to n of several tens of thousands,
    beyond which ``cosh`` overflows and a ``ValueError`` is raised.
    """
    if n < 1:
        raise ValueError("hr_leading_estimate needs n >= 1")
    lam = math.sqrt(n - 1 / 24)
    c = math.pi * math.sqrt(2 / 3)
    x = c * lam
    if x > _MAX_ARG:
        raise ValueError(f"n={n} is outside the double-precision range of the estimator")
    est = (x * math.cosh(x) - math.sinh(x)) / (2 * lam**3) / (math.pi * math.sqrt(2))
    return EstimateReport(n=n, lambda_n=lam, estimate=est, rounded=int(round(est)))
