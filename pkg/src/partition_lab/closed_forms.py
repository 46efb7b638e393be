"""Binomial-basis closed forms for S_2(n) (by parity) and S_3(n) (by n mod 6).

Each form is ``sum_t coeffs[t] * C(x, t)`` with ``x = (n - shift) // period``.
The coefficient tables below are the only place the numbers live.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class ResidueClassForm:
    level: int
    class_id: tuple[int, ...]
    shift: int
    period: int
    coeffs: tuple[int, ...]

    def applies_to(self, n: int) -> bool:
        return n >= self.shift and (n - self.shift) % self.period == 0

    def evaluate(self, n: int) -> int:
        if not self.applies_to(n):
            raise ValueError(f"n={n} is not in the class of {self.describe()}")
        x = (n - self.shift) // self.period
        return sum(c * comb(x, t) for t, c in enumerate(self.coeffs))

    def describe(self) -> str:
        if self.level == 2:
            return f"S_2, n {'odd' if self.class_id[0] else 'even'}"
        r3, parity = self.class_id
        return f"S_3, n = {r3} mod 3, n {'odd' if parity else 'even'}"


# class_id for level 2 is (n % 2,)
S2_FORMS: tuple[ResidueClassForm, ...] = (
    ResidueClassForm(2, (1,), 5, 2, (2, 6, 6, 2)),
    ResidueClassForm(2, (0,), 4, 2, (1, 4, 5, 2)),
)

# class_id for level 3 is (n % 3, n % 2)
S3_FORMS: tuple[ResidueClassForm, ...] = (
    ResidueClassForm(3, (0, 1), 9, 6, (1, 48, 310, 695, 648, 216)),
    ResidueClassForm(3, (1, 0), 10, 6, (2, 72, 390, 788, 684, 216)),
    ResidueClassForm(3, (2, 1), 11, 6, (5, 105, 483, 887, 720, 216)),
    ResidueClassForm(3, (0, 0), 12, 6, (10, 148, 590, 992, 756, 216)),
    ResidueClassForm(3, (1, 1), 13, 6, (18, 203, 712, 1103, 792, 216)),
    ResidueClassForm(3, (2, 0), 14, 6, (30, 272, 850, 1220, 828, 216)),
)


def form_for(level: int, n: int) -> ResidueClassForm:
    if level == 2:
        forms, key = S2_FORMS, (n % 2,)
    elif level == 3:
        forms, key = S3_FORMS, (n % 3, n % 2)
    else:
        raise ValueError(f"no closed forms for level {level}")
    for form in forms:
        if form.class_id == key:
            return form
    raise LookupError(f"no level-{level} form for class {key}")


def s2_closed(n: int) -> int:
    if n < 4:
        raise ValueError(f"s2_closed is defined for n >= 4, got {n}")
    return form_for(2, n).evaluate(n)


def s3_closed(n: int) -> int:
    if n < 9:
        raise ValueError(f"s3_closed is defined for n >= 9, got {n}")
    return form_for(3, n).evaluate(n)
