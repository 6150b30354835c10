"""Mixed-radix enumeration and data-parallel scan kernels.

Ambient words of Z_q^n are identified with indices 0..q^n-1 through the
big-endian mixed-radix codec below, so ascending index order is exactly
lexicographic order on words.  The two scans walk a contiguous index range in
numpy chunks:

  * max-min-distance: for every ambient word, the minimum table-weight of the
    difference to any codeword; the scan keeps the maximum and the first
    index attaining it.
  * max-coset-leader: the ambient space is partitioned into cosets u + C; a
    word is the canonical representative of its coset iff it has the smallest
    index among u + c over all codewords c.  Only canonical representatives
    contribute, each with its coset's minimum weight.

Both return (value, index) pairs that merge associatively by
(max value, then min index), so splitting the index space into any number of
disjoint contiguous ranges and merging gives bit-identical results.  Ranges
run in worker processes when workers > 1.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

import numpy as np

DEFAULT_CHUNK = 1 << 18

_SENTINEL = -1  # value reported by an empty range; loses every merge


def decode_indices(indices: np.ndarray, q: int, n: int) -> np.ndarray:
    """Indices (int64) -> (len, n) digit array, most significant digit first."""
    out = np.empty((indices.size, n), dtype=np.int16)
    rem = indices.astype(np.int64, copy=True)
    for j in range(n - 1, -1, -1):
        out[:, j] = rem % q
        rem //= q
    return out


def index_to_word(index: int, q: int, n: int) -> tuple[int, ...]:
    digits = []
    for _ in range(n):
        index, d = divmod(index, q)
        digits.append(d)
    return tuple(reversed(digits))


def word_to_index(entries, q: int) -> int:
    index = 0
    for e in entries:
        index = index * q + int(e)
    return index


def split_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    """Split [0, total) into `parts` contiguous ranges with sizes differing by <= 1."""
    parts = max(1, parts)
    base, extra = divmod(total, parts)
    ranges = []
    start = 0
    for i in range(parts):
        size = base + (1 if i < extra else 0)
        ranges.append((start, start + size))
        start += size
    return ranges


def _diff_rows(code: np.ndarray, q: int, wtab: np.ndarray) -> dict[int, np.ndarray]:
    """row[v][u] = wtab[(u - v) % q] for every residue v appearing in the code."""
    base = np.arange(q, dtype=np.int64)
    return {
        int(v): wtab[(base - int(v)) % q].astype(np.int32)
        for v in np.unique(code)
    }


def _sum_rows(code: np.ndarray, q: int, wtab: np.ndarray) -> dict[int, np.ndarray]:
    """row[v][u] = wtab[(u + v) % q]."""
    base = np.arange(q, dtype=np.int64)
    return {
        int(v): wtab[(base + int(v)) % q].astype(np.int32)
        for v in np.unique(code)
    }


def _key_rows(code: np.ndarray, q: int, n: int) -> dict[tuple[int, int], np.ndarray]:
    """key[(v, j)][u] = ((u + v) % q) * q^(n-1-j), the encode contribution of digit j."""
    base = np.arange(q, dtype=np.int64)
    rows: dict[tuple[int, int], np.ndarray] = {}
    for j in range(n):
        place = q ** (n - 1 - j)
        for v in np.unique(code):
            rows[(int(v), j)] = ((base + int(v)) % q) * place
    return rows


def _scan_min_dist_range(
    code: np.ndarray,
    q: int,
    n: int,
    wtab: np.ndarray,
    start: int,
    stop: int,
    chunk: int,
) -> tuple[int, int]:
    """(max of min distances, first attaining index) over index range [start, stop)."""
    rows = _diff_rows(code, q, wtab)
    best, best_idx = _SENTINEL, start
    for lo in range(start, stop, chunk):
        hi = min(lo + chunk, stop)
        digits = decode_indices(np.arange(lo, hi, dtype=np.int64), q, n)
        dmin: np.ndarray | None = None
        for c in code:
            acc = rows[int(c[0])][digits[:, 0]].copy()
            for j in range(1, n):
                acc += rows[int(c[j])][digits[:, j]]
            if dmin is None:
                dmin = acc
            else:
                np.minimum(dmin, acc, out=dmin)
            if not dmin.any():
                break  # whole chunk already at distance 0
        assert dmin is not None
        k = int(np.argmax(dmin))
        v = int(dmin[k])
        if v > best:
            best, best_idx = v, lo + k
    return best, best_idx


def _scan_coset_leader_range(
    code: np.ndarray,
    q: int,
    n: int,
    wtab: np.ndarray,
    start: int,
    stop: int,
    chunk: int,
) -> tuple[int, int]:
    """(max coset-leader weight, first canonical index attaining it) over [start, stop).

    Visits every ambient word but scores only canonical coset representatives,
    so each coset is counted exactly once across the whole index space.
    """
    wrows = _sum_rows(code, q, wtab)
    krows = _key_rows(code, q, n)
    best, best_idx = _SENTINEL, start
    for lo in range(start, stop, chunk):
        hi = min(lo + chunk, stop)
        own = np.arange(lo, hi, dtype=np.int64)
        digits = decode_indices(own, q, n)
        kmin: np.ndarray | None = None
        wmin: np.ndarray | None = None
        for c in code:
            enc = krows[(int(c[0]), 0)][digits[:, 0]].copy()
            wsum = wrows[int(c[0])][digits[:, 0]].copy()
            for j in range(1, n):
                enc += krows[(int(c[j]), j)][digits[:, j]]
                wsum += wrows[int(c[j])][digits[:, j]]
            if kmin is None:
                kmin, wmin = enc, wsum
            else:
                np.minimum(kmin, enc, out=kmin)
                np.minimum(wmin, wsum, out=wmin)
        assert kmin is not None and wmin is not None
        mask = kmin == own
        if not mask.any():
            continue
        reps = np.nonzero(mask)[0]
        vals = wmin[reps]
        k = int(np.argmax(vals))
        v = int(vals[k])
        if v > best:
            best, best_idx = v, lo + int(reps[k])
    return best, best_idx


_SCANNERS = {
    "min_dist": _scan_min_dist_range,
    "coset_leader": _scan_coset_leader_range,
}


def _scan_task(payload) -> tuple[int, int]:
    mode, code, q, n, wtab, start, stop, chunk = payload
    return _SCANNERS[mode](code, q, n, wtab, start, stop, chunk)


def _merge(results: list[tuple[int, int]]) -> tuple[int, int]:
    best, best_idx = _SENTINEL, 0
    for value, index in results:
        if value > best or (value == best and index < best_idx):
            best, best_idx = value, index
    return best, best_idx


def _run_scan(
    mode: str,
    code: np.ndarray,
    q: int,
    n: int,
    wtab: np.ndarray,
    workers: int,
    chunk: int,
) -> tuple[int, int, int]:
    total = q**n
    ranges = [r for r in split_ranges(total, workers) if r[0] < r[1]]
    if workers <= 1 or len(ranges) <= 1:
        results = [_SCANNERS[mode](code, q, n, wtab, start, stop, chunk) for start, stop in ranges]
    else:
        payloads = [(mode, code, q, n, wtab, start, stop, chunk) for start, stop in ranges]
        with ProcessPoolExecutor(max_workers=len(payloads)) as pool:
            results = list(pool.map(_scan_task, payloads))
    value, index = _merge(results)
    return value, index, total


def scan_max_min_distance(
    code: np.ndarray,
    q: int,
    n: int,
    wtab: np.ndarray,
    *,
    workers: int = 1,
    chunk: int = DEFAULT_CHUNK,
) -> tuple[int, int, int]:
    """Exact (radius, witness index, words examined) for max-min distance to `code`."""
    if len(code) == 0:
        raise ValueError("code must be non-empty")
    return _run_scan("min_dist", np.asarray(code, dtype=np.int16), q, n, wtab, workers, chunk)


def scan_max_coset_leader(
    code: np.ndarray,
    q: int,
    n: int,
    wtab: np.ndarray,
    *,
    workers: int = 1,
    chunk: int = DEFAULT_CHUNK,
) -> tuple[int, int, int]:
    """Exact (max leader weight, canonical index, words examined) over all cosets."""
    if len(code) == 0:
        raise ValueError("code must be non-empty")
    return _run_scan("coset_leader", np.asarray(code, dtype=np.int16), q, n, wtab, workers, chunk)
