"""Named function families and transcribed reference polynomials.

The reference payloads are embedded verbatim as text so that a transcription
slip shows up as a failing evaluation check instead of silently matching a
recomputed value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fourier import parse_pm
from .mixed import parse_polynomial
from .truthtable import MAX_N, TruthTable


def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    if k < 4:
        return True
    if k % 2 == 0:
        return False
    d = 3
    while d * d <= k:
        if k % d == 0:
            return False
        d += 2
    return True


def prime_function(n: int) -> TruthTable:
    """Indicator of primality on {0, ..., 2^n - 1}."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in [1, {MAX_N}], got {n}")
    packed = 0
    for k in range(2, 1 << n):
        if _is_prime(k):
            packed |= 1 << k
    return TruthTable(n, packed)


def sum_two_squares_function(n: int = 4) -> TruthTable:
    """Indicator of k = a^2 + b^2 with integers a, b >= 0."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in [1, {MAX_N}], got {n}")
    limit = 1 << n
    packed = 0
    a = 0
    while a * a < limit:
        b = a
        while a * a + b * b < limit:
            packed |= 1 << (a * a + b * b)
            b += 1
        a += 1
    return TruthTable(n, packed)


@dataclass(frozen=True)
class ReferencePolynomial:
    name: str
    kind: str  # "mixed" or "pm"
    n: int
    payload: str
    expected_terms: int
    family: str  # "prime", "sum2sq", or a fixed-table name

    def polynomial(self):
        if self.kind == "mixed":
            return parse_polynomial(self.payload, self.n)
        return parse_pm(self.payload, self.n)

    def target_table(self) -> TruthTable:
        return _family_table(self.family, self.n)


def _family_table(family: str, n: int) -> TruthTable:
    if family == "prime":
        return prime_function(n)
    if family == "sum2sq":
        return sum_two_squares_function(n)
    if family == "and12":
        # AND of x_1, x_2 ignoring the rest
        return TruthTable.from_predicate(n, lambda k: (k >> (n - 1)) & (k >> (n - 2)) & 1)
    if family == "lastvar_eq":
        # x_n = 1 and x_1 = x_2
        return TruthTable.from_predicate(
            n, lambda k: (k & 1) & (1 ^ ((k >> (n - 1)) ^ (k >> (n - 2))) & 1)
        )
    if family == "point0":
        return TruthTable.from_ones(n, [0])
    raise ValueError(f"unknown function family {family!r}")


_REFERENCES = {
    "p4": ReferencePolynomial(
        "p4", "mixed", 4,
        "x1x2x4+x1x3x4+y1x2x4+y1y2x3",
        4, "prime",
    ),
    "p5": ReferencePolynomial(
        "p5", "mixed", 5,
        "y1y2y3x4+y1y2x3x5+x2x3y4x5+x1y2y3x5+x1x3x4x5+y1x2y3x4x5",
        6, "prime",
    ),
    "p6": ReferencePolynomial(
        "p6", "mixed", 6,
        "y1y2y3y4x5+y1y2y3x4x6+y2x3y4x5x6+y1x3x4y5x6"
        "+y1x2y3y4x6+y1x2x4x5x6+x1y3x4y5x6+x1y2x3x5x6"
        "+x1x3y4x5x6+x1y2x3y4y5x6+x1x2x3x4y5x6",
        11, "prime",
    ),
    "example1_stage1": ReferencePolynomial(
        "example1_stage1", "mixed", 4,
        "1+y1y2x3x4+y1x2x3y4+y1x2x3x4+x1y2x3x4+x1x2y3y4+x1x2x3y4+x1x2x3x4",
        8, "sum2sq",
    ),
    "example1_intermediate": ReferencePolynomial(
        "example1_intermediate", "mixed", 4,
        "1+y1x3x4+x2x3y4+x1x3x4+x1x2y3y4",
        5, "sum2sq",
    ),
    "example1_final": ReferencePolynomial(
        "example1_final", "mixed", 4,
        "1+x3x4+x2x3y4+x1x2y3y4",
        4, "sum2sq",
    ),
    "eq6_anf": ReferencePolynomial(
        "eq6_anf", "mixed", 3,
        "1+x1+x2+x3+x1x2+x1x3+x2x3+x1x2x3",
        8, "point0",
    ),
    "fig1b_sign": ReferencePolynomial(
        "fig1b_sign", "pm", 3,
        "-1 + x1 + x2",
        3, "and12",
    ),
    "fig1c_sign": ReferencePolynomial(
        "fig1c_sign", "pm", 3,
        "-1 + x3 + x1x2",
        3, "lastvar_eq",
    ),
    "fig2a_pm": ReferencePolynomial(
        "fig2a_pm", "pm", 3,
        "-1/2 + 1/2*x1 + 1/2*x2 + 1/2*x1x2",
        4, "and12",
    ),
}


def reference_names() -> tuple:
    return tuple(sorted(_REFERENCES))


def reference(name: str) -> ReferencePolynomial:
    try:
        return _REFERENCES[name]
    except KeyError:
        raise ValueError(f"unknown reference polynomial {name!r}") from None
