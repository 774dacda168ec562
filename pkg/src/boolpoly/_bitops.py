"""Shared bit-twiddling helpers.

Conventions used across the package:

- An input to an n-variable Boolean function is an index k in [0, 2^n);
  variable x_i takes the value of bit (n - i) of k, i.e. x_1 is the most
  significant bit.
- A plain monomial over x_1..x_n is a mask in the same bit layout.
- A mixed monomial (literals drawn from {absent, y_i, x_i} per position) is
  packed two bits per position: code 0 = absent, 1 = y, 2 = x, with the pair
  for x_1 occupying the most significant bit pair.  Sorting keys numerically
  therefore sorts terms position-major with absent < y < x, which puts the
  atoms of an input set in ascending input-index order.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

CODE_ABSENT = 0
CODE_Y = 1
CODE_X = 2

# spread byte bits to even positions: bit b -> bit 2b
_SPREAD8 = [0] * 256
for _v in range(256):
    _s = 0
    for _b in range(8):
        if (_v >> _b) & 1:
            _s |= 1 << (2 * _b)
    _SPREAD8[_v] = _s

# inverse: collect even bits of a 16-bit value back into a byte
_UNSPREAD16 = [0] * 65536
for _v in range(65536):
    _u = 0
    for _b in range(8):
        if (_v >> (2 * _b)) & 1:
            _u |= 1 << _b
    _UNSPREAD16[_v] = _u

_SPREAD8_NP = np.array(_SPREAD8, dtype=np.int64)


def spread(v: int) -> int:
    """Interleave zeros: bit b of v moves to bit 2b."""
    out = 0
    shift = 0
    while v:
        out |= _SPREAD8[v & 0xFF] << shift
        v >>= 8
        shift += 16
    return out


def unspread(v: int) -> int:
    """Inverse of spread (odd bits of v are ignored)."""
    out = 0
    shift = 0
    while v:
        out |= _UNSPREAD16[v & 0xFFFF] << shift
        v >>= 16
        shift += 8
    return out


def key_from_masks(xmask: int, ymask: int) -> int:
    """Pack an (x-mask, y-mask) pair into a two-bit-per-position term key."""
    return (spread(xmask) << 1) | spread(ymask)


def xmask_of(key: int) -> int:
    return unspread(key >> 1)


def ymask_of(key: int) -> int:
    return unspread(key)


def atom_key(a: int, n: int) -> int:
    """Key of the term that is 1 exactly at input index a (x where the bit
    is 1, y where it is 0)."""
    return (spread(a) << 1) | spread(((1 << n) - 1) ^ a)


def atom_keys_np(indices: np.ndarray, n: int) -> np.ndarray:
    """Vectorized atom_key over an int64 index array (n <= 24)."""
    a = indices.astype(np.int64)
    comp = a ^ ((1 << n) - 1)
    sx = _SPREAD8_NP[a & 0xFF] | (_SPREAD8_NP[(a >> 8) & 0xFF] << 16) \
        | (_SPREAD8_NP[(a >> 16) & 0xFF] << 32)
    sy = _SPREAD8_NP[comp & 0xFF] | (_SPREAD8_NP[(comp >> 8) & 0xFF] << 16) \
        | (_SPREAD8_NP[(comp >> 16) & 0xFF] << 32)
    return (sx << 1) | sy


def spread_np(masks: np.ndarray) -> np.ndarray:
    """Vectorized spread over an int64 mask array (values < 2^24)."""
    m = masks.astype(np.int64)
    return _SPREAD8_NP[m & 0xFF] | (_SPREAD8_NP[(m >> 8) & 0xFF] << 16) \
        | (_SPREAD8_NP[(m >> 16) & 0xFF] << 32)


@lru_cache(maxsize=None)
def _butterfly_masks(n: int) -> tuple:
    """Masks selecting, inside a packed 2^n-bit table, the positions whose
    index bit b is zero, for b = 0..n-1."""
    width = 1 << n
    all_ones = (1 << width) - 1
    masks = []
    for b in range(n):
        period = 1 << (b + 1)
        low = (1 << (1 << b)) - 1
        masks.append(low * (all_ones // ((1 << period) - 1)))
    return tuple(masks)


def mobius_packed(packed: int, n: int) -> int:
    """Mod-2 Moebius transform (subset XOR sums) of a packed 2^n-bit table.

    Self-inverse: applying it twice gives back the input.
    """
    t = packed
    for b, mask in enumerate(_butterfly_masks(n)):
        t ^= (t & mask) << (1 << b)
    return t


def ones_indices(packed: int, n: int) -> np.ndarray:
    """Indices of the set bits of a packed 2^n-bit table, ascending."""
    width = 1 << n
    nbytes = (width + 7) // 8
    raw = np.frombuffer(packed.to_bytes(nbytes, "little"), dtype=np.uint8)
    bits = np.unpackbits(raw, bitorder="little", count=width)
    return np.nonzero(bits)[0].astype(np.int64)
