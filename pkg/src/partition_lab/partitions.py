"""Partition enumeration, restricted counting, conjugation and Durfee squares.

Everything else in the package is checked against the routines in this
module, so they are kept deliberately simple.  Partitions are stored with
their parts in non-increasing order (the usual Young diagram convention);
:meth:`Partition.to_digits` renders them ascending, e.g. ``"1144"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Literal


@dataclass
class Limits:
    """Oracle cost guards.  Mutate :data:`LIMITS` to change them globally."""

    enumeration_cap: int = 60
    count_cap: int = 200


LIMITS = Limits()


class CapExceededError(ValueError):
    """Raised when an oracle is asked for more than its configured cap."""

    def __init__(self, what: str, n: int, cap: int) -> None:
        super().__init__(f"{what}: n={n} exceeds the configured cap of {cap}")
        self.n = n
        self.cap = cap


@dataclass(frozen=True, order=True)
class Partition:
    """A partition of ``n`` as a non-increasing tuple of positive parts."""

    parts: tuple[int, ...]
    n: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be non-increasing: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))

    @classmethod
    def of(cls, parts) -> "Partition":
        """Build from parts given in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"2224"`` (digit string, parts <= 9) or ``"[10,3,1]"``.

        The empty string and ``"[]"`` give the empty partition.
        """
        text = text.strip()
        if text.startswith("["):
            if not text.endswith("]"):
                raise ValueError(f"unterminated bracket form: {text!r}")
            body = text[1:-1].strip()
            parts = [int(x) for x in re.split(r"[,\s]+", body) if x] if body else []
        else:
            if text and not text.isdigit():
                raise ValueError(f"not a digit string: {text!r}")
            parts = [int(c) for c in text]
        return cls.of(parts)

    @classmethod
    def _trusted(cls, parts: tuple[int, ...]) -> "Partition":
        # skips validation; callers guarantee a non-increasing positive tuple
        self = object.__new__(cls)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))
        return self

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def to_digits(self) -> str:
        """Ascending rendering, ``"1144"`` style; bracketed if a part exceeds 9."""
        asc = self.parts[::-1]
        if any(p > 9 for p in asc):
            return "[" + ",".join(map(str, asc)) + "]"
        return "".join(map(str, asc))

    def __str__(self) -> str:
        return "+".join(map(str, self.parts)) if self.parts else "0"


PartsMode = Literal["exactly", "at_most"]
PartMode = Literal["greatest_equals", "each_at_most"]


@dataclass(frozen=True)
class PartitionConstraint:
    """Restriction on the number of parts and on the size of the parts.

    ``PartitionConstraint("exactly", 4, "greatest_equals", 4)`` selects
    partitions with four parts whose largest part is 4.
    """

    parts_mode: PartsMode
    a: int
    part_mode: PartMode
    b: int

    def __post_init__(self) -> None:
        if self.parts_mode not in ("exactly", "at_most"):
            raise ValueError(f"bad parts_mode {self.parts_mode!r}")
        if self.part_mode not in ("greatest_equals", "each_at_most"):
            raise ValueError(f"bad part_mode {self.part_mode!r}")
        if self.a < 0 or self.b < 0:
            raise ValueError("constraint bounds must be nonnegative")

    @classmethod
    def exact(cls, parts: int, greatest: int) -> "PartitionConstraint":
        return cls("exactly", parts, "greatest_equals", greatest)

    @classmethod
    def box(cls, max_parts: int, max_part: int) -> "PartitionConstraint":
        return cls("at_most", max_parts, "each_at_most", max_part)

    def matches(self, p: Partition) -> bool:
        k = len(p)
        if self.parts_mode == "exactly" and k != self.a:
            return False
        if self.parts_mode == "at_most" and k > self.a:
            return False
        if self.part_mode == "greatest_equals":
            return p.largest == self.b
        return p.largest <= self.b


def _check_cap(what: str, n: int, cap: int | None, default: int) -> None:
    if n < 0:
        raise ValueError(f"{what}: n must be nonnegative, got {n}")
    limit = default if cap is None else cap
    if n > limit:
        raise CapExceededError(what, n, limit)


def _lex_parts(n: int) -> Iterator[tuple[int, ...]]:
    # successor: bump the rightmost part that can grow (and has something
    # after it to borrow from), then refill the tail with ones
    if n == 0:
        yield ()
        return
    p = [1] * n
    while True:
        yield tuple(p)
        i = len(p) - 2
        while i > 0 and p[i] == p[i - 1]:
            i -= 1
        if i < 0:
            return
        rest = sum(p[i + 1:]) - 1
        p[i] += 1
        del p[i + 1:]
        p.extend([1] * rest)


def iter_partitions(n: int, *, cap: int | None = None) -> Iterator[Partition]:
    """Yield the partitions of ``n`` in lexicographic order of their part tuples."""
    _check_cap("enumerate_partitions", n, cap, LIMITS.enumeration_cap)
    for parts in _lex_parts(n):
        yield Partition._trusted(parts)


def enumerate_partitions(n: int, *, cap: int | None = None) -> list[Partition]:
    """All partitions of ``n``, each once.

    Ordering is lexicographic on the non-increasing part tuples, so for
    ``n = 4`` the result is 1111, 211, 22, 31, 4.  Raises
    :class:`CapExceededError` when ``n`` is above the enumeration cap.
    """
    return list(iter_partitions(n, cap=cap))


def iter_restricted(n: int, c: PartitionConstraint, *, cap: int | None = None) -> Iterator[Partition]:
    """Yield the partitions of ``n`` satisfying ``c`` without a full enumeration."""
    _check_cap("iter_restricted", n, cap, LIMITS.enumeration_cap)
    max_parts = c.a
    if c.part_mode == "greatest_equals":
        g = c.b
        if g == 0:
            if n == 0 and (c.parts_mode == "at_most" or c.a == 0):
                yield Partition(())
            return
        if n < g or max_parts < 1:
            return
        head = (g,)
        rest_n, rest_parts, bound = n - g, max_parts - 1, g
    else:
        head = ()
        rest_n, rest_parts, bound = n, max_parts, c.b
    exact = c.parts_mode == "exactly"

    def gen(m: int, slots: int, top: int) -> Iterator[tuple[int, ...]]:
        if m == 0:
            if not exact or slots == 0:
                yield ()
            return
        if slots == 0 or m > slots * top:
            return
        for first in range(1, min(m, top) + 1):
            for tail in gen(m - first, slots - 1, first):
                yield (first,) + tail

    for tail in gen(rest_n, rest_parts, bound):
        yield Partition._trusted(head + tail)


def _box_count(n: int, max_parts: int, max_part: int) -> int:
    """Partitions of n with at most ``max_parts`` parts, each at most ``max_part``."""
    if n < 0:
        return 0
    max_parts = min(max_parts, n)
    max_part = min(max_part, n)
    if n == 0:
        return 1
    if max_parts == 0 or max_part == 0:
        return 0
    if n > max_parts * max_part:
        return 0
    if max_parts == n:
        # parts bound is vacuous: dp over (remaining sum, current part bound)
        ways = [1] + [0] * n
        for part in range(1, max_part + 1):
            for s in range(part, n + 1):
                ways[s] += ways[s - part]
        return ways[n]
    # ways[c][s]: partitions of s into exactly c parts drawn from 1..part
    ways = [[0] * (n + 1) for _ in range(max_parts + 1)]
    ways[0][0] = 1
    for part in range(1, max_part + 1):
        for c in range(1, max_parts + 1):
            prev, row = ways[c - 1], ways[c]
            for s in range(part, n + 1):
                row[s] += prev[s - part]
    return sum(ways[c][n] for c in range(max_parts + 1))


def count_restricted(n: int, c: PartitionConstraint, *, cap: int | None = None) -> int:
    """Exact number of partitions of ``n`` satisfying ``c``, by dynamic programming.

    "Exactly ``a`` parts with greatest part ``b``" is reduced to partitions
    of ``n - b`` into ``a - 1`` parts each at most ``b``.
    """
    _check_cap("count_restricted", n, cap, LIMITS.count_cap)
    a, b = c.a, c.b
    if c.part_mode == "greatest_equals":
        if b == 0:
            return int(n == 0 and (c.parts_mode == "at_most" or a == 0))
        if a == 0:
            return 0
        n, a = n - b, a - 1
        if n < 0:
            return 0
    if c.parts_mode == "exactly":
        # subtract one from each of the a parts
        if a == 0:
            return int(n == 0)
        if b == 0:
            return 0
        return _box_count(n - a, a, b - 1)
    return _box_count(n, a, b)


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram; swaps part count and largest part."""
    parts = p.parts
    cols = []
    i = len(parts)
    for j in range(1, p.largest + 1):
        while parts[i - 1] < j:
            i -= 1
        cols.append(i)
    return Partition._trusted(tuple(cols))


def durfee_side(p: Partition) -> int:
    """Side of the largest square fitting in the diagram of ``p``."""
    d = 0
    for i, x in enumerate(p.parts, start=1):
        if x >= i:
            d = i
        else:
            break
    return d
