"""Truth tables of Boolean functions f: {0,1}^n -> {0,1}.

The table is stored packed: bit k of an integer holds f at input index k,
where the binary expansion of k has x_1 as the most significant bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from ._bitops import ones_indices

MAX_N = 24


def _check_n(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_N:
        raise ValueError(f"variable count must be an integer in [1, {MAX_N}], got {n!r}")


@dataclass(frozen=True)
class TruthTable:
    """Immutable truth table; ``packed`` holds bit k = f(k)."""

    n: int
    packed: int

    def __post_init__(self):
        _check_n(self.n)
        if not 0 <= self.packed < (1 << (1 << self.n)):
            raise ValueError("packed value out of range for table size")

    @classmethod
    def from_predicate(cls, n: int, pred: Callable[[int], int]) -> "TruthTable":
        _check_n(n)
        packed = 0
        for k in range(1 << n):
            if pred(k):
                packed |= 1 << k
        return cls(n, packed)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "TruthTable":
        seq = list(bits)
        size = len(seq)
        n = size.bit_length() - 1
        if size != 1 << n or n < 1:
            raise ValueError(f"bit count {size} is not a power of two >= 2")
        if any(b not in (0, 1) for b in seq):
            raise ValueError("table entries must be 0 or 1")
        packed = 0
        for k, b in enumerate(seq):
            if b:
                packed |= 1 << k
        return cls(n, packed)

    @classmethod
    def from_ones(cls, n: int, ones: Iterable[int]) -> "TruthTable":
        _check_n(n)
        packed = 0
        for k in ones:
            if not 0 <= k < (1 << n):
                raise ValueError(f"input index {k} out of range for n={n}")
            packed |= 1 << k
        return cls(n, packed)

    def __len__(self) -> int:
        return 1 << self.n

    def __getitem__(self, k: int) -> int:
        if not 0 <= k < (1 << self.n):
            raise IndexError(f"input index {k} out of range for n={self.n}")
        return (self.packed >> k) & 1

    @property
    def bits(self) -> tuple:
        return tuple((self.packed >> k) & 1 for k in range(1 << self.n))

    def weight(self) -> int:
        """Number of inputs mapped to 1."""
        return self.packed.bit_count()


@dataclass(frozen=True)
class SupportSplit:
    """Partition of the input indices by function value."""

    s0: frozenset
    s1: frozenset


def split_support(t: TruthTable) -> SupportSplit:
    ones = frozenset(int(k) for k in ones_indices(t.packed, t.n))
    zeros = frozenset(range(1 << t.n)) - ones
    return SupportSplit(s0=zeros, s1=ones)


def parse_table(text: str) -> TruthTable:
    """Parse the interchange format: line 1 ``n <k>``, line 2 the 2^k bits."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ValueError("expected two lines: header and bit row")
    parts = lines[0].split()
    if len(parts) != 2 or parts[0] != "n":
        raise ValueError(f"malformed header {lines[0]!r}, expected 'n <k>'")
    try:
        n = int(parts[1])
    except ValueError:
        raise ValueError(f"malformed variable count {parts[1]!r}") from None
    _check_n(n)
    row = lines[1]
    if len(row) != 1 << n:
        raise ValueError(f"expected {1 << n} bits, got {len(row)}")
    bad = set(row) - {"0", "1"}
    if bad:
        raise ValueError(f"illegal characters in bit row: {sorted(bad)}")
    packed = 0
    for k, ch in enumerate(row):
        if ch == "1":
            packed |= 1 << k
    return TruthTable(n, packed)


def emit_table(t: TruthTable) -> str:
    row = "".join("1" if (t.packed >> k) & 1 else "0" for k in range(1 << t.n))
    return f"n {t.n}\n{row}\n"
