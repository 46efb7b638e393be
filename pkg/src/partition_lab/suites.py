"""Verification suites driven by ``partition-lab verify``.

Each suite returns a :class:`SuiteResult`; the first failing check is kept
as the counterexample.  Bounds are derived from ``max_n`` but clamped to
the oracle caps so a large ``--max-n`` does not trigger huge enumerations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import Callable

from . import closed_forms
from .classic import build_table
from .levels import p_combinatorial, s_inner, s_level
from .partitions import (
    PartitionConstraint,
    conjugate,
    count_restricted,
    durfee_side,
    iter_partitions,
)
from .qbinomial import (
    binomial_at_one,
    conjugate_witnesses_check,
    duality_check,
    grid_identity,
    interpretation_check,
    qbinom,
    rational_form_check,
    verify_finite_qbt,
    verify_infinite_qbt_truncated,
    verify_jacobi_truncated,
    verify_pascal,
)
from . import reference

ORACLE_MAX = 40


@dataclass
class SuiteResult:
    name: str
    ok: bool
    checks: int
    counterexample: str | None = None
    gating: bool = True
    rows: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        if not self.gating:
            status = "INFO"
        text = f"{status}  {self.name:<15} {self.checks} checks"
        if self.counterexample:
            text += f"  first counterexample: {self.counterexample}"
        return text


class _Tally:
    def __init__(self, name: str) -> None:
        self.name = name
        self.checks = 0
        self.first: str | None = None

    def check(self, ok: bool, where: str) -> None:
        self.checks += 1
        if not ok and self.first is None:
            self.first = where

    def result(self, **kw) -> SuiteResult:
        return SuiteResult(self.name, self.first is None, self.checks, self.first, **kw)


def suite_reference(max_n: int) -> SuiteResult:
    t = _Tally("reference")
    table = build_table(max(reference.P_VALUES))
    for n, v in reference.P_VALUES.items():
        t.check(table[n] == v, f"n={n}: p(n)={table[n]} expected {v}")
    bd = p_combinatorial(reference.WORKED_N)
    t.check(bd.per_level == reference.WORKED_LEVELS, f"n=21 levels {bd.per_level}")
    t.check(bd.total == reference.WORKED_TOTAL, f"n=21 total {bd.total}")
    for (k, idx), v in reference.WORKED_INNER.items():
        got = s_inner(k, reference.WORKED_N, idx)
        t.check(got == v, f"n=21 k={k} indices={idx}: {got} expected {v}")
    for (k, idx), row in reference.S_TABLE.items():
        for n, v in row.items():
            got = s_level(k, n) if k <= 2 else s_inner(k, n, idx)
            t.check(got == v, f"n={n} k={k} indices={idx}: {got} expected {v}")
    return t.result()


def suite_oracle(max_n: int) -> SuiteResult:
    t = _Tally("oracle")
    top = min(max_n, ORACLE_MAX)
    table = build_table(top)
    for n in range(top + 1):
        count = sum(1 for _ in iter_partitions(n))
        t.check(count == table[n], f"n={n}: enumeration {count} vs euler {table[n]}")
        box = count_restricted(n, PartitionConstraint.box(n, n))
        t.check(box == table[n], f"n={n}: dp {box} vs euler {table[n]}")
    return t.result()


def suite_theorem(max_n: int) -> SuiteResult:
    t = _Tally("theorem")
    table = build_table(max_n)
    for n in range(max_n + 1):
        bd = p_combinatorial(n)
        t.check(bd.total == table[n], f"n={n}: levels {bd.per_level} sum {bd.total} vs p(n)={table[n]}")
    return t.result()


def suite_closed_forms(max_n: int) -> SuiteResult:
    t = _Tally("closed-forms")
    rows = []
    for form in closed_forms.S2_FORMS + closed_forms.S3_FORMS:
        start = t.checks
        bad = None
        for n in range(form.shift, max(max_n, form.shift) + 1, form.period):
            got, want = form.evaluate(n), s_level(form.level, n)
            t.check(got == want, f"level {form.level}, n={n}: closed {got} vs nested {want}")
            if got != want and bad is None:
                bad = n
        status = "PASS" if bad is None else f"FAIL at n={bad}"
        rows.append(f"  {form.describe():<28} shift={form.shift:<3} {t.checks - start:>4} values  {status}")
    return t.result(rows=rows)


def suite_qbinomial(max_n: int) -> SuiteResult:
    t = _Tally("qbinomial")
    for (n, k), coeffs in reference.QBINOM_FIXTURES.items():
        t.check(list(qbinom(n, k).coeffs) == coeffs, f"[{n},{k}] = {list(qbinom(n, k).coeffs)}")
    for n in range(21):
        for k in range(n + 1):
            g = qbinom(n, k)
            t.check(g.is_palindromic(), f"[{n},{k}] not palindromic")
            t.check(g == qbinom(n, n - k), f"[{n},{k}] != [{n},{n - k}]")
            t.check(binomial_at_one(n, k), f"[{n},{k}](1) != C({n},{k})")
            if n <= 12:
                t.check(rational_form_check(n, k), f"[{n},{k}] rational form")
    for n in range(1, 16):
        for k in range(1, n + 1):
            rep = verify_pascal(n, k)
            t.check(rep.ok and rep.details["exponent"] in (k, None), f"pascal n={n} k={k} {rep.details}")
    for n in range(13):
        rep = verify_finite_qbt(n)
        t.check(rep.ok, f"finite q-binomial n={n}: {rep.counterexample}")
    rep = verify_infinite_qbt_truncated(8, 8, 8)
    t.check(rep.ok, f"infinite q-binomial K=8: {rep.counterexample}")
    rep = verify_jacobi_truncated(5, 10)
    t.check(rep.ok, f"Jacobi J=5 D=10: {rep.counterexample}")
    for n in range(1, 11):
        for k in range(n + 1):
            for r in range(k * (n - k) + 1):
                t.check(conjugate_witnesses_check(n, k, r), f"conjugate witnesses n={n} k={k} r={r}")
    return t.result()


def suite_interpretation(max_n: int) -> SuiteResult:
    t = _Tally("interpretation")
    for total in range(13):
        for n in range(total + 1):
            m = total - n
            for r in range(n * m + 2):
                rep = interpretation_check(n, m, r)
                t.check(rep.ok, f"n={n} m={m} r={r}: coeff {rep.coefficient}, new {rep.new_count}, "
                                f"classical {rep.classical_count}")
    return t.result()


def suite_grid(max_n: int) -> SuiteResult:
    t = _Tally("grid")
    for N in range(1, min(max_n, 60) + 1):
        rep = grid_identity(N)
        t.check(rep.ok, f"N={N}: {rep.details}")
    return t.result()


def suite_duality(max_n: int) -> SuiteResult:
    t = _Tally("duality")
    for N in range(1, min(max_n, ORACLE_MAX) + 1):
        for a in range(1, N + 1):
            for b in range(1, N + 2 - a):
                rep = duality_check(N, a, b, enumerate_cap=20)
                t.check(rep.ok, f"N={N} a={a} b={b}: {rep.details}")
    return t.result()


def durfee_census(n: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    for p in iter_partitions(n):
        d = durfee_side(p)
        counts[d] = counts.get(d, 0) + 1
    return counts


def suite_durfee(max_n: int) -> SuiteResult:
    """Does S_k(n) equal the number of partitions of n with Durfee side k?  Reported only."""
    t = _Tally("durfee")
    for n in range(1, min(max_n, ORACLE_MAX) + 1):
        census = durfee_census(n)
        for k in range(1, isqrt(n) + 1):
            got = s_level(k, n)
            t.check(census.get(k, 0) == got, f"n={n} k={k}: S_k={got}, durfee census {census.get(k, 0)}")
    return t.result(gating=False)


def suite_conjugation(max_n: int) -> SuiteResult:
    t = _Tally("conjugation")
    for n in range(min(max_n, ORACLE_MAX) + 1):
        for p in iter_partitions(n):
            q = conjugate(p)
            t.check(conjugate(q) == p and len(q) == p.largest, f"{p.parts}")
    return t.result()


SUITES: dict[str, Callable[[int], SuiteResult]] = {
    "reference": suite_reference,
    "oracle": suite_oracle,
    "conjugation": suite_conjugation,
    "theorem": suite_theorem,
    "closed-forms": suite_closed_forms,
    "qbinomial": suite_qbinomial,
    "interpretation": suite_interpretation,
    "grid": suite_grid,
    "duality": suite_duality,
    "durfee": suite_durfee,
}
