"""Boolean polynomials with complemented literals y_i = x_i + 1.

Terms are products with, per position i, one of {absent, x_i, y_i}.  A term
is packed two bits per position (see _bitops); polynomials are GF(2) sums of
distinct terms, kept as a sorted tuple of keys so that iteration order is the
canonical one (absent < y < x, position-major).  Under this order the atom of
input index a sorts at rank a, so constructed representations list their
atoms in ascending input order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from ._bitops import (
    CODE_X,
    CODE_Y,
    atom_key,
    atom_keys_np,
    key_from_masks,
    ones_indices,
    spread_np,
    xmask_of,
    ymask_of,
)
from .anf import XPolynomial, anf_from_table
from .truthtable import TruthTable


class MixedMonomial:
    """A single term; the constant 1 is the all-absent term."""

    __slots__ = ("n", "key")

    def __init__(self, n: int, key: int):
        if not 0 <= key < (1 << (2 * n)):
            raise ValueError(f"term key {key:#x} out of range for n={n}")
        # a pair equal to 0b11 would mean x_i * y_i in one term
        if key & (key >> 1) & (((1 << (2 * n)) - 1) // 3):
            raise ValueError("term key has an invalid literal code")
        self.n = n
        self.key = key

    @classmethod
    def from_masks(cls, n: int, xmask: int, ymask: int) -> "MixedMonomial":
        if xmask & ymask:
            raise ValueError("x-mask and y-mask must be disjoint")
        if xmask >> n or ymask >> n:
            raise ValueError(f"literal mask out of range for n={n}")
        return cls(n, key_from_masks(xmask, ymask))

    @property
    def xmask(self) -> int:
        return xmask_of(self.key)

    @property
    def ymask(self) -> int:
        return ymask_of(self.key)

    def literal_count(self) -> int:
        return (self.xmask | self.ymask).bit_count()

    def literals(self) -> tuple:
        """Per-position codes, position 1 first."""
        return tuple((self.key >> (2 * (self.n - i))) & 3 for i in range(1, self.n + 1))

    def evaluate(self, a: int) -> int:
        x, y = self.xmask, self.ymask
        return 1 if a & (x | y) == x else 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MixedMonomial)
            and self.n == other.n
            and self.key == other.key
        )

    def __lt__(self, other: "MixedMonomial") -> bool:
        return self.key < other.key

    def __hash__(self) -> int:
        return hash((self.n, self.key))

    def __str__(self) -> str:
        return _format_term(self.key, self.n)

    def __repr__(self) -> str:
        return f"MixedMonomial(n={self.n}, {self})"


def _format_term(key: int, n: int) -> str:
    if key == 0:
        return "1"
    parts = []
    for i in range(1, n + 1):
        code = (key >> (2 * (n - i))) & 3
        if code == CODE_X:
            parts.append(f"x{i}")
        elif code == CODE_Y:
            parts.append(f"y{i}")
    return "".join(parts)


@dataclass(frozen=True)
class MixedPolynomial:
    """GF(2) sum of distinct mixed terms; ``keys`` is sorted ascending."""

    n: int
    keys: tuple

    @classmethod
    def from_keys(cls, n: int, keys: Iterable[int]) -> "MixedPolynomial":
        distinct = sorted(set(int(k) for k in keys))
        return cls(n, tuple(distinct))

    @classmethod
    def from_terms(cls, terms: Iterable[MixedMonomial], n: int) -> "MixedPolynomial":
        return cls.from_keys(n, (t.key for t in terms))

    @property
    def terms(self) -> tuple:
        return tuple(MixedMonomial(self.n, k) for k in self.keys)

    def term_count(self) -> int:
        return len(self.keys)

    def literal_total(self) -> int:
        odd = ((1 << (2 * self.n)) - 1) // 3
        return sum(((k | (k >> 1)) & odd).bit_count() for k in self.keys)

    def __str__(self) -> str:
        return format_mixed(self)


def dnf_atom(a: int, n: int) -> MixedMonomial:
    """The term that evaluates to 1 exactly at input index a."""
    if not 0 <= a < (1 << n):
        raise IndexError(f"input index {a} out of range for n={n}")
    return MixedMonomial(n, atom_key(a, n))


def theorem2_representation(t: TruthTable) -> MixedPolynomial:
    """Representation with at most 2^(n-1) terms: the sum of atoms over the
    1-set if that side is not larger, else 1 plus the atoms of the 0-set."""
    half = 1 << (t.n - 1)
    if t.weight() <= half:
        idx = ones_indices(t.packed, t.n)
        extra = ()
    else:
        zero_packed = t.packed ^ ((1 << (1 << t.n)) - 1)
        idx = ones_indices(zero_packed, t.n)
        extra = (0,)  # the constant term 1
    keys = atom_keys_np(idx, t.n)
    return MixedPolynomial(t.n, extra + tuple(keys.tolist()))


def mixed_evaluate(p: MixedPolynomial, a: int) -> int:
    if not 0 <= a < (1 << p.n):
        raise IndexError(f"input index {a} out of range for n={p.n}")
    acc = 0
    for k in p.keys:
        x = xmask_of(k)
        if a & (x | ymask_of(k)) == x:
            acc ^= 1
    return acc


def mixed_to_table(p: MixedPolynomial) -> TruthTable:
    """Full evaluation table; each term toggles the subcube it covers."""
    n = p.n
    full = (1 << n) - 1
    packed = 0
    for k in p.keys:
        x = xmask_of(k)
        free = full ^ x ^ ymask_of(k)
        cube = 1 << x
        while free:
            bit = free & -free
            cube |= cube << bit
            free ^= bit
        packed ^= cube
    return TruthTable(n, packed)


def substitute_y(p: MixedPolynomial) -> XPolynomial:
    """Expand every y_i as x_i + 1 and reduce mod 2: the unique ANF of the
    same function.  Computed through the evaluation table, which is the
    Moebius transform of the fully expanded sum."""
    return anf_from_table(mixed_to_table(p))


def _substitute_expand(p: MixedPolynomial) -> XPolynomial:
    """Reference implementation of substitute_y by literal expansion with
    GF(2) cancellation; used to cross-check the fast path."""
    acc = set()
    for k in p.keys:
        x = xmask_of(k)
        y = ymask_of(k)
        # x^X * prod_{i in Y}(x_i + 1) = sum over subsets S of Y of x^(X|S)
        sub = y
        while True:
            acc.symmetric_difference_update({x | sub})
            if sub == 0:
                break
            sub = (sub - 1) & y
    return XPolynomial(p.n, frozenset(acc))


def mixed_from_anf(p: XPolynomial) -> MixedPolynomial:
    """Inject an ANF into the mixed algebra (x/absent literals only)."""
    if p.n <= 24 and len(p.monomials) > 32:
        arr = np.fromiter(p.monomials, dtype=np.int64, count=len(p.monomials))
        keys = spread_np(arr) << 1  # injective, so no dedup needed
        keys.sort()
        return MixedPolynomial(p.n, tuple(keys.tolist()))
    return MixedPolynomial.from_keys(p.n, (key_from_masks(m, 0) for m in p.monomials))


def format_mixed(p: MixedPolynomial) -> str:
    if not p.keys:
        return "0"
    return "+".join(_format_term(k, p.n) for k in p.keys)


def parse_polynomial(text: str, n: Optional[int] = None) -> MixedPolynomial:
    """Parse the shared polynomial grammar (terms joined by '+', literals
    x<i>/y<i>, constant '1', zero '0').  Duplicate terms cancel mod 2.

    If n is not given it is inferred from the largest literal index.
    """
    compact = "".join(text.split())
    if not compact:
        raise ValueError("empty polynomial text")
    raw_terms = compact.split("+")
    parsed = []
    max_index = 0
    for raw in raw_terms:
        if not raw:
            raise ValueError("empty term between '+' signs")
        if raw == "0":
            if len(raw_terms) != 1:
                raise ValueError("'0' is only valid as the whole polynomial")
            return MixedPolynomial(n if n is not None else 1, ())
        if raw == "1":
            parsed.append(())
            continue
        lits = []
        pos = 0
        while pos < len(raw):
            kind = raw[pos]
            if kind not in "xy":
                raise ValueError(f"unexpected character {kind!r} in term {raw!r}")
            pos += 1
            start = pos
            while pos < len(raw) and raw[pos].isdigit():
                pos += 1
            if start == pos:
                raise ValueError(f"missing variable index in term {raw!r}")
            idx = int(raw[start:pos])
            if idx < 1:
                raise ValueError(f"variable index must be >= 1 in term {raw!r}")
            lits.append((idx, kind))
            max_index = max(max_index, idx)
        parsed.append(tuple(lits))
    if n is None:
        n = max(max_index, 1)
    elif max_index > n:
        raise ValueError(f"literal index {max_index} exceeds n={n}")
    keys = set()
    for lits in parsed:
        key = 0
        seen = 0
        for idx, kind in lits:
            bit = 1 << (n - idx)
            if seen & bit:
                raise ValueError(f"position {idx} appears twice in one term")
            seen |= bit
            code = CODE_X if kind == "x" else CODE_Y
            key |= code << (2 * (n - idx))
        keys.symmetric_difference_update({key})
    return MixedPolynomial(n, tuple(sorted(keys)))
