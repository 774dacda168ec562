"""The {-1,+1} world: Hadamard matrix entries, the unique +/-1 polynomial
representation via the fast Walsh-Hadamard transform, and sign-representation
checks.

Row/column conventions follow the n=3 listing used to build H_8: the c-th
column is the monomial with variable mask c (x_1 = most significant bit), the
r-th row is the vertex whose i-th coordinate is +1 when bit (n - i) of r is 0
and -1 when it is 1.  The closed form is H[r][c] = (-1)^popcount(r & c).
A {0,1}-world input index a corresponds to the row r = ~a (bitwise, within
n bits): flipping the -1 coordinates to 0 recovers a.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .anf import _mask_literals
from .truthtable import TruthTable


@dataclass(frozen=True)
class PMPolynomial:
    """Real-coefficient polynomial over the +/-1 monomial basis.

    ``coeffs`` maps variable masks to exact Fraction coefficients; absent
    masks are zero.  Coefficients coming out of wht_solve on a +/-1 valued
    function are dyadic with denominator dividing 2^n.
    """

    n: int
    coeffs: dict

    def __post_init__(self):
        full = (1 << self.n) - 1
        clean = {}
        for m, c in self.coeffs.items():
            if not 0 <= m <= full:
                raise ValueError(f"monomial mask {m:#x} out of range for n={self.n}")
            c = Fraction(c)
            if c:
                clean[m] = c
        object.__setattr__(self, "coeffs", clean)

    def term_count(self) -> int:
        return len(self.coeffs)

    def __str__(self) -> str:
        return format_pm(self)


@dataclass(frozen=True)
class PMVector:
    """Column of 2^n values indexed by the row ordering described above."""

    n: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != 1 << self.n:
            raise ValueError(f"expected {1 << self.n} entries, got {len(self.entries)}")


def hadamard_entry(n: int, r: int, c: int) -> int:
    size = 1 << n
    if not 0 <= r < size:
        raise IndexError(f"row index {r} out of range")
    if not 0 <= c < size:
        raise IndexError(f"column index {c} out of range")
    return -1 if (r & c).bit_count() & 1 else 1


def pm_vector_from_table(t: TruthTable) -> PMVector:
    """The +/-1 value column of a {0,1} table (0 -> -1, 1 -> +1)."""
    full = (1 << t.n) - 1
    return PMVector(t.n, tuple(1 if t[full ^ r] else -1 for r in range(1 << t.n)))


def _fwht(values: list) -> list:
    """In-place fast Walsh-Hadamard transform, H * values."""
    size = len(values)
    h = 1
    while h < size:
        for start in range(0, size, h * 2):
            for i in range(start, start + h):
                a, b = values[i], values[i + h]
                values[i], values[i + h] = a + b, a - b
        h *= 2
    return values


def wht_solve(b: PMVector) -> PMPolynomial:
    """Unique solution of H x = b, i.e. x = 2^-n * H * b (exact)."""
    size = 1 << b.n
    transformed = _fwht([Fraction(v) for v in b.entries])
    coeffs = {c: transformed[c] / size for c in range(size) if transformed[c]}
    return PMPolynomial(b.n, coeffs)


def pm_values(p: PMPolynomial) -> list:
    """Values of p at every row, via the same fast transform."""
    size = 1 << p.n
    vec = [Fraction(0)] * size
    for m, c in p.coeffs.items():
        vec[m] = c
    return _fwht(vec)


def pm_evaluate(p: PMPolynomial, r: int):
    if not 0 <= r < (1 << p.n):
        raise IndexError(f"row index {r} out of range for n={p.n}")
    acc = Fraction(0)
    for m, c in p.coeffs.items():
        acc += -c if (r & m).bit_count() & 1 else c
    return acc


def sign_represents(p: PMPolynomial, t: TruthTable) -> bool:
    """True iff sign(p) equals t (as +/-1 values) at every vertex.

    A zero value at any vertex counts as failure.
    """
    if p.n != t.n:
        raise ValueError(f"dimension mismatch: polynomial n={p.n}, table n={t.n}")
    full = (1 << t.n) - 1
    values = pm_values(p)
    for r in range(1 << t.n):
        v = values[r]
        if v == 0:
            return False
        if (v > 0) != bool(t[full ^ r]):
            return False
    return True


def single_monomial_sign_search(t: TruthTable) -> Optional[Tuple[int, int]]:
    """Exhaustively search all 2 * 2^n signed monomials for one that sign
    represents t; returns (mask, sign) or None."""
    size = 1 << t.n
    full = size - 1
    # positive-value pattern of the table in row order
    target = 0
    for r in range(size):
        if t[full ^ r]:
            target |= 1 << r
    all_rows = (1 << size) - 1
    for c in range(size):
        # rows where the monomial with mask c is +1
        pos = all_rows
        m = c
        while m:
            bit = m & -m
            b = bit.bit_length() - 1
            # parity flips on rows with index bit b set
            high = _rows_with_bit(size, b)
            pos ^= high
            m ^= bit
        if pos == target:
            return (c, 1)
        if pos == all_rows ^ target:
            return (c, -1)
    return None


def _rows_with_bit(size: int, b: int) -> int:
    """Bitmask over rows r in [0, size) with bit b of r set."""
    period = 1 << (b + 1)
    high = ((1 << (1 << b)) - 1) << (1 << b)
    reps = size // period
    out = 0
    for i in range(reps):
        out |= high << (i * period)
    return out


def parse_pm(text: str, n: int) -> PMPolynomial:
    """Parse the exact-fraction text form emitted by format_pm."""
    compact = "".join(text.split())
    if not compact:
        raise ValueError("empty polynomial text")
    if compact == "0":
        return PMPolynomial(n, {})
    # split into signed chunks
    chunks = []
    cur = ""
    for ch in compact:
        if ch in "+-" and cur and cur[-1] not in "+-/*":
            chunks.append(cur)
            cur = ch
        else:
            cur += ch
    chunks.append(cur)
    coeffs = {}
    for chunk in chunks:
        sign = 1
        body = chunk
        while body and body[0] in "+-":
            if body[0] == "-":
                sign = -sign
            body = body[1:]
        if "*" in body:
            coef_text, mono_text = body.split("*", 1)
        elif body and body[0] in "xy":
            coef_text, mono_text = "1", body
        else:
            coef_text, mono_text = body, ""
        try:
            coef = sign * Fraction(coef_text)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad coefficient {coef_text!r}") from None
        mask = 0
        pos = 0
        while pos < len(mono_text):
            if mono_text[pos] != "x":
                raise ValueError(f"bad monomial {mono_text!r}")
            pos += 1
            start = pos
            while pos < len(mono_text) and mono_text[pos].isdigit():
                pos += 1
            idx = int(mono_text[start:pos])
            if not 1 <= idx <= n:
                raise ValueError(f"variable index {idx} out of range for n={n}")
            mask |= 1 << (n - idx)
        coeffs[mask] = coeffs.get(mask, Fraction(0)) + coef
    return PMPolynomial(n, coeffs)


def format_pm(p: PMPolynomial) -> str:
    """Exact-fraction text form, masks ascending, e.g.
    ``-1/2 + 1/2*x1 + 1/2*x2 + 1/2*x1x2``."""
    if not p.coeffs:
        return "0"

    def by_degree_then_index(m: int) -> tuple:
        # graded order: 1, x1, x2, ..., x1x2, ... so x1 prints before x2
        return (m.bit_count(), int(f"{m:0{p.n}b}"[::-1], 2))

    parts = []
    for m in sorted(p.coeffs, key=by_degree_then_index):
        c = p.coeffs[m]
        mono = "" if m == 0 else _mask_literals(m, p.n)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
