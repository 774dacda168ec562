"""JIT-compiled merge kernel (optional fast path for reduce.merge_fixpoint).

Operates on sorted int64 arrays of term keys with a direct-addressed
membership table of 4^n bytes, so it is only used for n <= _MAX_KERNEL_N.
The scan order is identical to the pure-Python engine in reduce.py and the
two are cross-checked in the test suite.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

_MAX_KERNEL_N = 12

_scratch = {"buf": None, "n": -1}


def kernel_usable(n: int) -> bool:
    return HAVE_NUMBA and n <= _MAX_KERNEL_N


def _get_scratch(n: int) -> np.ndarray:
    if _scratch["buf"] is None or _scratch["n"] < n:
        _scratch["buf"] = np.zeros(4 ** n, dtype=np.uint8)
        _scratch["n"] = n
    return _scratch["buf"]


if HAVE_NUMBA:

    @njit(cache=True)
    def _merge_kernel(keys, n, generalized, table):  # pragma: no cover - jit
        nk = keys.size
        for i in range(nk):
            table[keys[i]] = 1
        cap = nk * 4 + 64
        heap = np.empty(cap, dtype=np.int64)
        hn = nk
        heap[:nk] = keys  # sorted input is already a valid min-heap
        touched = np.empty(nk * 2 + 4, dtype=np.int64)
        nt = nk
        touched[:nk] = keys
        ev = np.empty((nk + 4, 4), dtype=np.int64)
        ne = 0
        live = nk
        while hn > 0:
            k = heap[0]
            hn -= 1
            v = heap[hn]
            j = 0
            while True:
                c = 2 * j + 1
                if c >= hn:
                    break
                if c + 1 < hn and heap[c + 1] < heap[c]:
                    c += 1
                if heap[c] < v:
                    heap[j] = heap[c]
                    j = c
                else:
                    break
            heap[j] = v
            if table[k] == 0:
                continue
            # smallest partner with a larger key (only codes above k's at one
            # position give larger keys)
            best = np.int64(0)
            for b in range(n):
                sh = 2 * b
                c0 = (k >> sh) & 3
                if c0 == 2:
                    continue
                if c0 == 0:
                    if not generalized:
                        continue
                    k2 = k + (np.int64(1) << sh)
                    if (best == 0 or k2 < best) and table[k2]:
                        best = k2
                    k2 = k + (np.int64(2) << sh)
                    if (best == 0 or k2 < best) and table[k2]:
                        best = k2
                else:
                    k2 = k + (np.int64(1) << sh)
                    if (best == 0 or k2 < best) and table[k2]:
                        best = k2
            if best == 0:
                continue  # dormant until an insertion gives it a partner
            kj = best
            d = k ^ kj
            sh = 0
            dd = d >> 2
            while dd > 0:
                dd >>= 2
                sh += 2
            c1 = (k >> sh) & 3
            c2 = (kj >> sh) & 3
            m = k + ((np.int64(3) - c1 - c2 - c1) << sh)
            table[k] = 0
            table[kj] = 0
            live -= 2
            if table[m]:
                table[m] = 0
                live -= 1
                ev[ne, 0] = k
                ev[ne, 1] = kj
                ev[ne, 2] = m
                ev[ne, 3] = 1
                ne += 1
            else:
                table[m] = 1
                live += 1
                touched[nt] = m
                nt += 1
                ev[ne, 0] = k
                ev[ne, 1] = kj
                ev[ne, 2] = m
                ev[ne, 3] = 0
                ne += 1
                if hn + 2 * n + 2 >= cap:
                    cap *= 2
                    nh = np.empty(cap, dtype=np.int64)
                    nh[:hn] = heap[:hn]
                    heap = nh
                j = hn
                hn += 1
                while j > 0:
                    par = (j - 1) >> 1
                    if heap[par] > m:
                        heap[j] = heap[par]
                        j = par
                    else:
                        break
                heap[j] = m
                # requeue smaller keys that may now pair with m
                for b in range(n):
                    sh2 = 2 * b
                    c0 = (m >> sh2) & 3
                    if c0 == 0:
                        continue
                    for cc in range(c0):
                        if not generalized and not (c0 == 2 and cc == 1):
                            continue
                        k2 = m + ((np.int64(cc) - c0) << sh2)
                        if table[k2]:
                            j = hn
                            hn += 1
                            while j > 0:
                                par = (j - 1) >> 1
                                if heap[par] > k2:
                                    heap[j] = heap[par]
                                    j = par
                                else:
                                    break
                            heap[j] = k2
        out = np.empty(live, dtype=np.int64)
        i = 0
        for t in range(nt):
            kk = touched[t]
            if table[kk]:
                out[i] = kk
                i += 1
                table[kk] = 0
        out.sort()
        return out, ev[:ne]


def merge_keys_fast(keys, n, generalized, collect_events=True):
    """Run the JIT kernel; returns (sorted surviving keys, event rows)."""
    arr = np.array(keys, dtype=np.int64)
    table = _get_scratch(n)
    out, ev = _merge_kernel(arr, n, generalized, table)
    if not collect_events:
        return out.tolist(), []
    return out.tolist(), [(int(a), int(b), int(c), bool(d)) for a, b, c, d in ev]
