"""Term reduction: pair-merging with x_i + y_i = 1, the substitution pass,
and the four-stage reduction pipeline.

Merge semantics.  Two terms that agree everywhere except at one position
combine into a single term carrying the third literal value there:
x+y -> absent, absent+x -> y, absent+y -> x.  The paper-faithful mode allows
only the x/y pairs; the generalized mode (default) allows all three.

Merge order.  Terms live in canonical order (absent < y < x, position-major,
which is ascending key order).  Repeatedly, the lowest-ordered term that has
any partner is merged with its lowest-ordered partner, and the scan restarts.
This is equivalent to a first-fit scan over ordered pairs with restart after
every merge, and is implemented with a lazy-deletion heap: a term with no
partner can only gain one when a merged term is inserted, so it is requeued
exactly then.  If the merged term already exists in the polynomial the two
copies cancel mod 2 (count drops by 3); the trace records a cancellation.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from . import _merge_numba
from .mixed import (
    MixedMonomial,
    MixedPolynomial,
    mixed_from_anf,
    substitute_y,
    theorem2_representation,
)
from .truthtable import TruthTable

GENERALIZED = "generalized"
PAPER = "paper"
_MODES = (GENERALIZED, PAPER)


@dataclass(frozen=True)
class MergeEvent:
    """One merge: left + right -> merged; if ``canceled``, the merged term
    met an existing copy and both vanished."""

    left: MixedMonomial
    right: MixedMonomial
    merged: MixedMonomial
    canceled: bool = False

    def __str__(self) -> str:
        tail = " (canceled)" if self.canceled else ""
        return f"{self.left} + {self.right} -> {self.merged}{tail}"


@dataclass
class ReductionReport:
    n: int
    mode: str
    initial_terms: int
    after_merge_terms: int
    after_substitution_terms: int
    selected_terms: int
    selected_stage: str
    merge_trace: List[MergeEvent] = field(default_factory=list)
    elapsed: float = 0.0

    def to_text(self, include_trace: bool = False) -> str:
        lines = [
            f"n {self.n}",
            f"mode {self.mode}",
            f"initial_terms {self.initial_terms}",
            f"after_merge_terms {self.after_merge_terms}",
            f"after_substitution_terms {self.after_substitution_terms}",
            f"selected_terms {self.selected_terms}",
            f"selected_stage {self.selected_stage}",
        ]
        if include_trace:
            for ev in self.merge_trace:
                lines.append(f"merge {ev}")
        lines.append(f"elapsed_seconds {self.elapsed:.6f}")
        return "\n".join(lines) + "\n"


def _check_mode(mode: str) -> None:
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {_MODES}")


def try_merge(
    m1: MixedMonomial, m2: MixedMonomial, mode: str = GENERALIZED
) -> Optional[MixedMonomial]:
    """Merge two terms differing at exactly one position, or return None."""
    _check_mode(mode)
    if m1.n != m2.n:
        raise ValueError("terms must have the same variable count")
    merged = _merge_pair(m1.key, m2.key, mode == GENERALIZED)
    return None if merged is None else MixedMonomial(m1.n, merged)


def _merge_pair(k1: int, k2: int, generalized: bool) -> Optional[int]:
    d = k1 ^ k2
    if d == 0:
        return None
    sh = ((d.bit_length() - 1) >> 1) << 1
    if d & ~(3 << sh):
        return None  # differs at more than one position
    c1 = (k1 >> sh) & 3
    c2 = (k2 >> sh) & 3
    if not generalized and (c1 == 0 or c2 == 0):
        return None
    return k1 + ((3 - c1 - c2 - c1) << sh)


def _merge_keys_python(
    keys: Tuple[int, ...], n: int, generalized: bool
) -> Tuple[list, list]:
    """Pure-Python merge engine; same order as the JIT kernel."""
    s = set(keys)
    heap = sorted(s)
    events = []
    while heap:
        k = heapq.heappop(heap)
        if k not in s:
            continue
        best = 0
        for b in range(n):
            sh = 2 * b
            c0 = (k >> sh) & 3
            if c0 == 2:
                continue
            if c0 == 0:
                if not generalized:
                    continue
                for c2 in (1, 2):
                    k2 = k + (c2 << sh)
                    if (best == 0 or k2 < best) and k2 in s:
                        best = k2
            else:
                k2 = k + (1 << sh)
                if (best == 0 or k2 < best) and k2 in s:
                    best = k2
        if best == 0:
            continue
        kj = best
        sh = (((k ^ kj).bit_length() - 1) >> 1) << 1
        c1 = (k >> sh) & 3
        c2 = (kj >> sh) & 3
        m = k + ((3 - c1 - c2 - c1) << sh)
        s.discard(k)
        s.discard(kj)
        if m in s:
            s.discard(m)
            events.append((k, kj, m, True))
        else:
            s.add(m)
            events.append((k, kj, m, False))
            heapq.heappush(heap, m)
            for b in range(n):
                sh2 = 2 * b
                c0 = (m >> sh2) & 3
                if c0 == 0:
                    continue
                for cc in range(c0):
                    if not generalized and not (c0 == 2 and cc == 1):
                        continue
                    k2 = m + ((cc - c0) << sh2)
                    if k2 in s:
                        heapq.heappush(heap, k2)
    return sorted(s), events


def merge_fixpoint(
    p: MixedPolynomial,
    mode: str = GENERALIZED,
    force_python: bool = False,
    collect_trace: bool = True,
) -> Tuple[MixedPolynomial, List[MergeEvent]]:
    """Merge until no pair of terms is mergeable; returns the reduced
    polynomial and the ordered merge trace (empty if collect_trace is off,
    which skips per-event object construction in bulk runs)."""
    _check_mode(mode)
    generalized = mode == GENERALIZED
    if not force_python and _merge_numba.kernel_usable(p.n):
        keys, raw = _merge_numba.merge_keys_fast(p.keys, p.n, generalized, collect_trace)
    else:
        keys, raw = _merge_keys_python(p.keys, p.n, generalized)
    trace = (
        [
            MergeEvent(
                MixedMonomial(p.n, a),
                MixedMonomial(p.n, b),
                MixedMonomial(p.n, m),
                bool(c),
            )
            for a, b, m, c in raw
        ]
        if collect_trace
        else []
    )
    return MixedPolynomial(p.n, tuple(keys)), trace


def substitution_pass(
    p: MixedPolynomial, mode: str = GENERALIZED, collect_trace: bool = True
) -> Tuple[MixedPolynomial, List[MergeEvent]]:
    """Rewrite y_i as x_i + 1 (exact ANF), re-inject, and merge again."""
    return merge_fixpoint(
        mixed_from_anf(substitute_y(p)), mode, collect_trace=collect_trace
    )


def algorithm1(
    t: TruthTable, mode: str = GENERALIZED, collect_trace: bool = True
) -> Tuple[MixedPolynomial, ReductionReport]:
    """Full reduction pipeline.

    Stage 1 builds the at-most-2^(n-1)-term representation, stage 2 merges to
    a fixpoint, stage 3 substitutes and re-merges, stage 4 keeps the
    candidate with fewer terms (ties: fewer literals, then the stage-2
    polynomial).
    """
    _check_mode(mode)
    start = time.perf_counter()
    stage1 = theorem2_representation(t)
    stage2, trace2 = merge_fixpoint(stage1, mode, collect_trace=collect_trace)
    stage3, trace3 = substitution_pass(stage2, mode, collect_trace=collect_trace)
    key2 = (stage2.term_count(), stage2.literal_total())
    key3 = (stage3.term_count(), stage3.literal_total())
    if key3 < key2:
        selected, stage_name = stage3, "substitution"
    else:
        selected, stage_name = stage2, "merge"
    report = ReductionReport(
        n=t.n,
        mode=mode,
        initial_terms=stage1.term_count(),
        after_merge_terms=stage2.term_count(),
        after_substitution_terms=stage3.term_count(),
        selected_terms=selected.term_count(),
        selected_stage=stage_name,
        merge_trace=trace2 + trace3,
        elapsed=time.perf_counter() - start,
    )
    return selected, report
