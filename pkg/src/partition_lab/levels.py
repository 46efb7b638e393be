"""p(n) as a sum of level counts S_1(n) + S_2(n) + ... + S_K(n), K = isqrt(n).

Level k >= 3 is a nested sum over index vectors (a_3, ..., a_k).  For fixed
indices put D = sum m*(a_m - 1) and R = n - (k*k - 2) - D; the vector then
contributes

    a_3 * a_4 * ... * a_k * sum_{i=1}^{R // 2} i * (R - 1 - 2*(i - 1)).

Index a_m runs from 1 to (n - (k*k - m) - D_{>m}) // m, where D_{>m} only
collects the indices above m.  Level 2 is the same expression with no
indices and level 1 is just n.

The number of index vectors grows very fast (about 4e8 at n = 300), so
:func:`s_level` does not walk them one at a time.  The bound on a_m says
exactly that the remaining budget T - m*(a_m - 1) stays >= k*k, which does
not involve n.  Summing a_m-weighted terms along an arithmetic progression
can then be carried with two running sums, giving S_k for every n up to N
in O(k * N) big-integer additions (:func:`level_series`).  The vector-by-
vector route (:func:`index_vectors` + :func:`s_inner`) is kept and the two
are compared in the tests.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import isqrt, prod
from typing import Iterator


@dataclass(frozen=True)
class LevelIndexVector:
    """Outer indices of level ``k``; ``a`` is ``(a_3, ..., a_k)``."""

    k: int
    a: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError("index vectors exist for levels k >= 2")
        if len(self.a) != self.k - 2:
            raise ValueError(f"level {self.k} needs {self.k - 2} indices, got {len(self.a)}")
        if any(x < 1 for x in self.a):
            raise ValueError(f"indices must be >= 1: {self.a}")

    @property
    def offset(self) -> int:
        """D = sum of m * (a_m - 1)."""
        return sum(m * (x - 1) for m, x in enumerate(self.a, start=3))

    @property
    def weight(self) -> int:
        return prod(self.a)

    def label(self) -> str:
        """Subscript as printed in tables: level, then a_k down to a_3 (``"421"``)."""
        idx = self.a[::-1]
        if any(x > 9 for x in idx):
            return f"{self.k}_" + "_".join(map(str, idx))
        return f"{self.k}" + "".join(map(str, idx))


def inner_terms(R: int) -> Iterator[int]:
    """The summands i*(R - 1 - 2(i - 1)) for i = 1 .. R // 2."""
    for i in range(1, R // 2 + 1):
        yield i * (R - 1 - 2 * (i - 1))


def inner_sum(R: int) -> int:
    """Closed form of ``sum(inner_terms(R))``; 0 when R <= 1."""
    if R <= 1:
        return 0
    h = R // 2
    return (R + 1) * h * (h + 1) // 2 - h * (h + 1) * (2 * h + 1) // 3


def s_inner(k: int, n: int, v: LevelIndexVector | tuple[int, ...] = (), *, debug: bool = False) -> int:
    """Contribution of one index vector to level ``k``.

    With ``debug=True`` the inner sum is evaluated term by term and every
    summand is asserted to be positive.
    """
    if not isinstance(v, LevelIndexVector):
        v = LevelIndexVector(k, tuple(v))
    if v.k != k:
        raise ValueError(f"index vector is for level {v.k}, not {k}")
    R = n - (k * k - 2) - v.offset
    if debug:
        total = 0
        for term in inner_terms(R):
            assert term >= 1, (k, n, v.a, R, term)
            total += term
        assert total == inner_sum(R)
        return v.weight * total
    return v.weight * inner_sum(R)


def index_vectors(k: int, n: int) -> Iterator[LevelIndexVector]:
    """Every admissible (a_3, ..., a_k) for level ``k`` at ``n``.

    a_k is the outermost (slowest) index and a_3 the innermost, as in the
    written nesting.
    """
    if k < 3:
        raise ValueError("index_vectors needs k >= 3")
    kk = k * k
    chosen = [0] * (k - 2)

    def walk(m: int, used: int) -> Iterator[LevelIndexVector]:
        hi = (n - (kk - m) - used) // m
        for a in range(1, hi + 1):
            chosen[m - 3] = a
            if m == 3:
                yield LevelIndexVector(k, tuple(chosen))
            else:
                yield from walk(m - 1, used + m * (a - 1))

    yield from walk(k, 0)


def level_series(k: int, max_n: int) -> list[int]:
    """[S_k(0), S_k(1), ..., S_k(max_n)]."""
    if k < 1:
        raise ValueError("levels start at k = 1")
    if max_n < 0:
        return []
    if k == 1:
        return list(range(max_n + 1))
    kk = k * k
    g = [0] * (max_n + 1)
    for T in range(kk, max_n + 1):
        g[T] = inner_sum(T - (kk - 2))
    for m in range(3, k + 1):
        # h[T] = sum_{a >= 1} a * g[T - m(a-1)], c[T] = sum_{a >= 1} g[T - m(a-1)],
        # both restricted to arguments >= k*k
        h = [0] * (max_n + 1)
        c = [0] * (max_n + 1)
        for T in range(kk, max_n + 1):
            if T - m >= kk:
                c[T] = g[T] + c[T - m]
                h[T] = g[T] + h[T - m] + c[T - m]
            else:
                c[T] = h[T] = g[T]
        g = h
    return g


def s_level(k: int, n: int, *, method: str = "series") -> int:
    """S_k(n).  ``method="nested"`` sums :func:`s_inner` over :func:`index_vectors`."""
    if k < 1:
        raise ValueError("levels start at k = 1")
    if n < k * k:
        return 0
    if k == 1:
        return n
    if k == 2:
        return s_inner(2, n)
    if method == "nested":
        return sum(s_inner(k, n, v) for v in index_vectors(k, n))
    if method != "series":
        raise ValueError(f"unknown method {method!r}")
    return level_series(k, n)[n]


def level_table(max_n: int) -> dict[int, list[int]]:
    """S_k(n) for all n <= max_n, keyed by level."""
    return {k: level_series(k, max_n) for k in range(1, isqrt(max_n) + 1)}


@dataclass(frozen=True)
class LevelBreakdown:
    n: int
    per_level: dict[int, int]
    total: int
    # True only for n = 0, where there are no levels and p(0) = 1 by convention
    by_convention: bool = field(default=False)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "levels": {str(k): str(v) for k, v in self.per_level.items()},
            "total": str(self.total),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LevelBreakdown":
        n = int(data["n"])
        return cls(
            n=n,
            per_level={int(k): int(v) for k, v in data["levels"].items()},
            total=int(data["total"]),
            by_convention=(n == 0),
        )

    @classmethod
    def from_json(cls, text: str) -> "LevelBreakdown":
        return cls.from_dict(json.loads(text))


def _level_task(args: tuple[int, int]) -> int:
    k, n = args
    return s_level(k, n)


def p_combinatorial(n: int, *, parallel: bool = False, workers: int | None = None) -> LevelBreakdown:
    """Assemble p(n) from its level counts.

    With ``parallel=True`` the levels are evaluated in a process pool; the
    result is summed in level order and is identical to the sequential one.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return LevelBreakdown(0, {}, 1, by_convention=True)
    levels = list(range(1, isqrt(n) + 1))
    if parallel and len(levels) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(_level_task, [(k, n) for k in levels]))
    else:
        values = [s_level(k, n) for k in levels]
    per_level = dict(zip(levels, values))
    return LevelBreakdown(n, per_level, sum(values))
