"""Algebraic normal form: the unique multilinear GF(2) polynomial of a
Boolean function, computed by the mod-2 Moebius butterfly."""

from __future__ import annotations

from dataclasses import dataclass

from ._bitops import mobius_packed
from .truthtable import TruthTable


@dataclass(frozen=True)
class XPolynomial:
    """GF(2) polynomial over x_1..x_n.

    ``monomials`` is a frozenset of variable masks; mask bit (n - i) set means
    x_i is present, the empty mask is the constant 1.
    """

    n: int
    monomials: frozenset

    def __post_init__(self):
        full = (1 << self.n) - 1
        for m in self.monomials:
            if not 0 <= m <= full:
                raise ValueError(f"monomial mask {m:#x} out of range for n={self.n}")

    def term_count(self) -> int:
        return len(self.monomials)

    def __str__(self) -> str:
        return format_anf(self)


def anf_from_table(t: TruthTable) -> XPolynomial:
    coeffs = mobius_packed(t.packed, t.n)
    monomials = []
    m = coeffs
    while m:
        low = m & -m
        monomials.append(low.bit_length() - 1)
        m ^= low
    return XPolynomial(t.n, frozenset(monomials))


def table_from_anf(p: XPolynomial) -> TruthTable:
    coeffs = 0
    for m in p.monomials:
        coeffs |= 1 << m
    return TruthTable(p.n, mobius_packed(coeffs, p.n))


def anf_evaluate(p: XPolynomial, k: int) -> int:
    """Value of p at input index k, reduced mod 2."""
    if not 0 <= k < (1 << p.n):
        raise IndexError(f"input index {k} out of range for n={p.n}")
    acc = 0
    for m in p.monomials:
        if m & k == m:
            acc ^= 1
    return acc


def _mask_literals(mask: int, n: int) -> str:
    return "".join(f"x{i}" for i in range(1, n + 1) if (mask >> (n - i)) & 1)


def format_anf(p: XPolynomial) -> str:
    """Terms joined by '+', monomials in ascending mask order."""
    if not p.monomials:
        return "0"
    parts = []
    for m in sorted(p.monomials):
        parts.append("1" if m == 0 else _mask_literals(m, p.n))
    return "+".join(parts)
