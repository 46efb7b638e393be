"""Gaussian polynomials and exact checks of the q-binomial identities.

Dense polynomials in q are :class:`QPolynomial`; expansions in several
variables (q and t, q/t/a, or q and a Laurent variable z) use the sparse
:class:`SparsePoly`.  Nothing here divides polynomials: the Gaussian
coefficients come from the Pascal recurrence, and every infinite product or
series is truncated before it is multiplied out.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable

from .classic import p_euler
from .partitions import (
    Partition,
    PartitionConstraint,
    conjugate,
    count_restricted,
    iter_restricted,
)


class QPolynomial:
    """Polynomial in q with integer coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPolynomial":
        return cls([0] * exponent + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, r: int) -> int:
        return self.coeffs[r] if 0 <= r < len(self.coeffs) else 0

    def shift(self, e: int) -> "QPolynomial":
        """Multiply by q**e."""
        if not self.coeffs:
            return self
        return QPolynomial((0,) * e + self.coeffs)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return QPolynomial(out)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-x for x in self.coeffs)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-other)

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, q: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms).replace("+ -", "- ")


_ONE = QPolynomial([1])
_ZERO = QPolynomial()

# Fills are idempotent, so concurrent writers at worst duplicate work.
_qbinom_memo: dict[tuple[int, int], QPolynomial] = {}
_memo_lock = threading.Lock()


def qbinom(n: int, k: int) -> QPolynomial:
    """The Gaussian polynomial [n, k]; zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("qbinom needs nonnegative arguments")
    if k > n:
        return _ZERO
    k = min(k, n - k)
    hit = _qbinom_memo.get((n, k))
    if hit is not None:
        return hit
    # row[j] = [i, j] for the current i, built with [i, j] = [i-1, j-1] + q^j [i-1, j]
    row = [_ONE] + [_ZERO] * k
    fresh = {}
    for i in range(1, n + 1):
        for j in range(min(i, k), 0, -1):
            cached = _qbinom_memo.get((i, j))
            row[j] = cached if cached is not None else row[j - 1] + row[j].shift(j)
            if 2 * j <= i and cached is None:
                fresh[(i, j)] = row[j]
    with _memo_lock:
        for key, value in fresh.items():
            _qbinom_memo.setdefault(key, value)
    return row[k]


def q_pochhammer_finite(start: int, count: int) -> QPolynomial:
    """prod_{i=0}^{count-1} (1 - q^(start + i))."""
    out = _ONE
    for i in range(count):
        out = out * (_ONE - QPolynomial.monomial(start + i))
    return out


# ---------------------------------------------------------------------------
# sparse polynomials in several variables


Exponents = tuple[int, ...]


class SparsePoly:
    """Map from exponent tuples to nonzero integer coefficients.

    Exponents may be negative (Laurent variables).  ``keep``, when given to
    :meth:`mul`, drops monomials as soon as they are produced.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Exponents, int] | None = None) -> None:
        self.terms: dict[Exponents, int] = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, nvars: int) -> "SparsePoly":
        return cls({(0,) * nvars: 1})

    def mul(self, other: "SparsePoly", keep: Callable[[Exponents], bool] | None = None) -> "SparsePoly":
        out: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                if keep is not None and not keep(e):
                    continue
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly(out)

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePoly(out)

    def restrict(self, keep: Callable[[Exponents], bool]) -> "SparsePoly":
        return SparsePoly({e: c for e, c in self.terms.items() if keep(e)})

    def __eq__(self, other) -> bool:
        return isinstance(other, SparsePoly) and self.terms == other.terms

    def first_difference(self, other: "SparsePoly") -> tuple[Exponents, int, int] | None:
        """Smallest monomial where the two disagree, with both coefficients."""
        for e in sorted(set(self.terms) | set(other.terms)):
            a, b = self.terms.get(e, 0), other.terms.get(e, 0)
            if a != b:
                return e, a, b
        return None

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"SparsePoly({len(self.terms)} terms)"


@dataclass
class CheckReport:
    """Outcome of one identity check."""

    name: str
    ok: bool
    details: dict = field(default_factory=dict)
    counterexample: object = None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = "" if self.ok else f"  first counterexample: {self.counterexample}"
        return f"{status}  {self.name}{extra}"


# ---------------------------------------------------------------------------
# identities


def verify_pascal(n: int, k: int) -> CheckReport:
    """Both q-Pascal rules at (n, k), and the exponent that makes the first one hold.

    The first rule is checked as [n,k] = q^e [n-1,k] + [n-1,k-1]; the
    exponent e is recovered from the data (it comes out as k) rather than
    assumed.  ``e`` is None when [n-1, k] vanishes (k = n).
    """
    if not 1 <= k <= n:
        raise ValueError("verify_pascal needs 1 <= k <= n")
    top, left, diag = qbinom(n, k), qbinom(n - 1, k), qbinom(n - 1, k - 1)
    rest = top - diag
    exponent = None
    if left.coeffs:
        lead = next(i for i, c in enumerate(rest.coeffs) if c) if rest.coeffs else 0
        exponent = lead
        first_ok = rest == left.shift(lead)
    else:
        first_ok = not rest.coeffs
    second_ok = top == left + diag.shift(n - k)
    return CheckReport(
        f"pascal({n},{k})",
        first_ok and second_ok,
        {"first": first_ok, "second": second_ok, "exponent": exponent, "expected_exponent": k},
        None if first_ok and second_ok else (n, k),
    )


FINITE_QBT_CAP = 30


def verify_finite_qbt(n: int) -> CheckReport:
    """prod_{k<n} (1 + q^k t) against sum_k q^(k(k-1)/2) [n,k] t^k, in (q, t)."""
    if not 0 <= n <= FINITE_QBT_CAP:
        raise ValueError(f"verify_finite_qbt supports 0 <= n <= {FINITE_QBT_CAP}")
    lhs = SparsePoly.one(2)
    for k in range(n):
        lhs = lhs.mul(SparsePoly({(0, 0): 1, (k, 1): 1}))
    rhs: dict[Exponents, int] = {}
    for k in range(n + 1):
        base = k * (k - 1) // 2
        for r, c in enumerate(qbinom(n, k).coeffs):
            if c:
                rhs[(base + r, k)] = c
    rhs_poly = SparsePoly(rhs)
    diff = lhs.first_difference(rhs_poly)
    return CheckReport(
        f"finite q-binomial theorem n={n}",
        diff is None,
        {"terms": len(lhs)},
        diff,
    )


def _geometric(step: Exponents, limit: Callable[[Exponents], bool]) -> SparsePoly:
    """1 + x + x^2 + ... for the monomial x = step, cut where ``limit`` fails."""
    terms: dict[Exponents, int] = {}
    e = tuple(0 for _ in step)
    while limit(e):
        terms[e] = 1
        e = tuple(a + b for a, b in zip(e, step))
    return SparsePoly(terms)


def verify_infinite_qbt_truncated(K: int, Dq: int, Dt: int) -> CheckReport:
    """Truncated check of sum_k (a;q)_k/(q;q)_k t^k = prod_{j>=0} (1 - a t q^j)/(1 - t q^j).

    Variables are (q, t, a).  The series is cut after k = K and the product
    after j = K; both cuts only disturb monomials with t-degree > K or
    q-degree > K, so the compared region is q <= min(Dq, K), t <= min(Dt, K).
    The product runs from j = 0: starting it at j = 1 already fails at t^1 q^0.
    """
    if K < 1 or Dq < 1 or Dt < 1:
        raise ValueError("truncation orders must be positive")
    qmax, tmax = min(Dq, K), min(Dt, K)

    def keep(e: Exponents) -> bool:
        return e[0] <= qmax and e[1] <= tmax

    lhs = SparsePoly()
    for k in range(min(K, tmax) + 1):
        term = SparsePoly({(0, k, 0): 1})
        for i in range(k):
            term = term.mul(SparsePoly({(0, 0, 0): 1, (i, 0, 1): -1}), keep)
        for i in range(1, k + 1):
            term = term.mul(_geometric((i, 0, 0), keep), keep)
        lhs = lhs + term
    rhs = SparsePoly.one(3)
    for j in range(K + 1):
        rhs = rhs.mul(SparsePoly({(0, 0, 0): 1, (j, 1, 1): -1}), keep)
        rhs = rhs.mul(_geometric((j, 1, 0), keep), keep)
    diff = lhs.first_difference(rhs)
    return CheckReport(
        f"infinite q-binomial theorem K={K}",
        diff is None,
        {"q_max": qmax, "t_max": tmax, "clipped": Dq > K or Dt > K, "terms": len(lhs)},
        diff,
    )


def verify_jacobi_truncated(J: int, D: int) -> CheckReport:
    """Jacobi triple product through q-degree D using J factors of each kind.

    Monomials are (q-exponent, z-exponent).  The first omitted factor has
    q-degree 2J + 1, so D must not exceed 2J.
    """
    if J < 1 or D < 1:
        raise ValueError("J and D must be positive")
    if D > 2 * J:
        raise ValueError(f"D={D} exceeds the validity bound 2J={2 * J}")

    def keep(e: Exponents) -> bool:
        return e[0] <= D

    lhs = SparsePoly.one(2)
    for j in range(1, J + 1):
        odd = 2 * j - 1
        lhs = lhs.mul(SparsePoly({(0, 0): 1, (odd, 1): 1}), keep)
        lhs = lhs.mul(SparsePoly({(0, 0): 1, (odd, -1): 1}), keep)
        lhs = lhs.mul(SparsePoly({(0, 0): 1, (2 * j, 0): -1}), keep)
    rhs = SparsePoly({(j * j, j): 1 for j in range(-J, J + 1)}).restrict(keep)
    diff = lhs.first_difference(rhs)
    return CheckReport(f"Jacobi triple product J={J} D={D}", diff is None, {"terms": len(lhs)}, diff)


INTERPRETATION_CAP = 14


@dataclass
class InterpretationReport:
    n: int
    m: int
    r: int
    coefficient: int
    new_count: int
    classical_count: int
    new_witnesses: list[Partition] = field(default_factory=list)
    classical_witnesses: list[Partition] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.coefficient == self.new_count == self.classical_count


def new_constraint(n: int, m: int) -> PartitionConstraint:
    """Partitions counted by [n+m, n] in the "n+1 parts, greatest m+1" reading."""
    return PartitionConstraint.exact(n + 1, m + 1)


def classical_constraint(n: int, m: int) -> PartitionConstraint:
    return PartitionConstraint.box(m, n)


def interpretation_check(n: int, m: int, r: int, *, witnesses: bool = False) -> InterpretationReport:
    """Coefficient of q^r in [n+m, n] against both partition readings.

    new: partitions of n+m+1+r into exactly n+1 parts with largest m+1;
    classical: partitions of r into at most m parts, each at most n.
    """
    if n < 0 or m < 0 or r < 0:
        raise ValueError("interpretation_check needs nonnegative arguments")
    if n + m > INTERPRETATION_CAP:
        raise ValueError(f"n + m must be <= {INTERPRETATION_CAP}")
    total = n + m + 1 + r
    report = InterpretationReport(
        n, m, r,
        coefficient=qbinom(n + m, n).coeff(r),
        new_count=count_restricted(total, new_constraint(n, m)),
        classical_count=count_restricted(r, classical_constraint(n, m)),
    )
    if witnesses:
        report.new_witnesses = list(iter_restricted(total, new_constraint(n, m), cap=max(total, 60)))
        report.classical_witnesses = list(iter_restricted(r, classical_constraint(n, m), cap=max(r, 60)))
    return report


GRID_CAP = 60


def grid_terms(N: int) -> list[tuple[int, int, int]]:
    """(parts, greatest, count) for every signature of a partition of N.

    The count of partitions of N with a parts and largest part b is read off
    as the coefficient of q^(N - a - b + 1) in [a + b - 2, a - 1].
    """
    out = []
    for a in range(1, N + 1):
        for b in range(1, N + 2 - a):
            c = qbinom(a + b - 2, a - 1).coeff(N - a - b + 1)
            if c:
                out.append((a, b, c))
    return out


def grid_identity(N: int) -> CheckReport:
    if not 1 <= N <= GRID_CAP:
        raise ValueError(f"grid_identity supports 1 <= N <= {GRID_CAP}")
    total = sum(c for _, _, c in grid_terms(N))
    expected = p_euler(N)
    return CheckReport(
        f"grid identity N={N}",
        total == expected,
        {"grid_sum": total, "p": expected},
        None if total == expected else N,
    )


DUALITY_CAP = 60


def duality_check(N: int, a: int, b: int, *, enumerate_cap: int = 40) -> CheckReport:
    """Partitions of N with (a parts, largest b) versus (b parts, largest a).

    Counts come from :func:`count_restricted`; when N <= ``enumerate_cap`` the
    witness sets are also listed and conjugation is checked to map one onto
    the other.
    """
    if not 1 <= N <= DUALITY_CAP or a < 1 or b < 1:
        raise ValueError(f"duality_check needs 1 <= N <= {DUALITY_CAP} and a, b >= 1")
    left = count_restricted(N, PartitionConstraint.exact(a, b))
    right = count_restricted(N, PartitionConstraint.exact(b, a))
    details = {"left": left, "right": right}
    ok = left == right
    if N <= enumerate_cap:
        first = set(iter_restricted(N, PartitionConstraint.exact(a, b), cap=enumerate_cap))
        second = set(iter_restricted(N, PartitionConstraint.exact(b, a), cap=enumerate_cap))
        image = {conjugate(p) for p in first}
        bijective = image == second and len(image) == len(first)
        details["bijection"] = bijective
        ok = ok and bijective and len(first) == left
    return CheckReport(f"duality N={N} a={a} b={b}", ok, details, None if ok else (N, a, b))


def coefficient_witnesses(n: int, k: int, r: int) -> list[Partition]:
    """Partitions attached to q^r of [n, k]: n+1+r into n-k+1 parts, largest k+1."""
    if not 0 <= k <= n:
        return []
    c = PartitionConstraint.exact(n - k + 1, k + 1)
    total = n + 1 + r
    return list(iter_restricted(total, c, cap=max(total, 60)))


def conjugate_witnesses_check(n: int, k: int, r: int) -> bool:
    """Conjugation is a bijection from the q^r witnesses of [n,k] to those of [n,n-k]."""
    first = coefficient_witnesses(n, k, r)
    second = set(coefficient_witnesses(n, n - k, r))
    image = {conjugate(p) for p in first}
    return len(image) == len(first) == len(second) and image == second


def rational_form_check(n: int, k: int) -> bool:
    """[n,k] * prod_{i<=k} (1 - q^i) == prod_{i<=k} (1 - q^(n-k+i)), for k <= n."""
    return qbinom(n, k) * q_pochhammer_finite(1, k) == q_pochhammer_finite(n - k + 1, k)


def binomial_at_one(n: int, k: int) -> bool:
    return qbinom(n, k)(1) == comb(n, k)
