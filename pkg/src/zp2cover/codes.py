"""Linear codes over Z_{p^2} as fully enumerated submodules.

Codes are built by enumerating all q^k coefficient vectors of a generator
matrix (or all ambient words, for duals) and deduplicating; desk-scale sizes
make this exact and simple.  Codewords are kept lexicographically sorted so
equality of codes is list equality.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

import numpy as np

from . import limits
from .errors import InvalidParameterError, UndefinedDistanceError
from .search import decode_indices
from .ring import (
    HAMMING,
    LEE,
    RingContext,
    Word,
    hamming_weight,
    lee_weight_word,
    make_ring,
)

# Full pairwise closure verification is skipped above this many word pairs;
# construction paths that enumerate a span or a dual are closed by definition.
_VERIFY_PAIR_BUDGET = 1 << 21


@dataclass(frozen=True)
class GeneratorMatrix:
    ctx: RingContext
    rows: tuple[Word, ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise InvalidParameterError("generator matrix needs at least one row")
        n = self.rows[0].n
        if n < 1:
            raise InvalidParameterError("generator matrix needs at least one column")
        for r in self.rows:
            if r.modulus != self.ctx.q:
                raise InvalidParameterError(
                    f"row modulus {r.modulus} does not match ring modulus {self.ctx.q}"
                )
            if r.n != n:
                raise InvalidParameterError("generator rows must share one length")

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return self.rows[0].n


def generator_matrix(ctx: RingContext, rows) -> GeneratorMatrix:
    return GeneratorMatrix(ctx, tuple(Word(ctx.q, tuple(int(e) for e in r)) for r in rows))


@dataclass(frozen=True)
class LinearCode:
    ctx: RingContext
    n: int
    codewords: tuple[Word, ...]
    source: GeneratorMatrix | None = field(default=None, compare=False)

    @property
    def M(self) -> int:
        return len(self.codewords)

    @cached_property
    def array(self) -> np.ndarray:
        """(M, n) int16 view of the codewords, for the scan kernels."""
        return np.array([w.entries for w in self.codewords], dtype=np.int16)

    def contains(self, w: Word) -> bool:
        return w in self._member_set

    @cached_property
    def _member_set(self) -> frozenset[Word]:
        return frozenset(self.codewords)


def _as_sorted_words(ctx: RingContext, words) -> tuple[Word, ...]:
    seen = {Word(ctx.q, tuple(int(e) for e in w)) for w in words}
    return tuple(sorted(seen))


def linear_code(
    ctx: RingContext,
    words,
    source: GeneratorMatrix | None = None,
    verify: bool | None = None,
) -> LinearCode:
    """Build a LinearCode from explicit words, checking the submodule axioms.

    verify=None checks closure exhaustively when affordable; True forces the
    check, False skips it (for construction paths closed by definition).
    """
    codewords = _as_sorted_words(ctx, words)
    if not codewords:
        raise InvalidParameterError("a linear code contains at least the zero word")
    n = codewords[0].n
    for w in codewords:
        if w.n != n:
            raise InvalidParameterError("codewords must share one length")
    zero = Word.zero(ctx.q, n)
    if zero not in codewords:
        raise InvalidParameterError("a linear code must contain the zero word")
    M = len(codewords)
    if pow(ctx.q, n) % M != 0:
        raise InvalidParameterError(
            f"cardinality {M} does not divide the ambient size {ctx.q}^{n}"
        )
    if verify is None:
        verify = M * M * n <= _VERIFY_PAIR_BUDGET
    if verify:
        members = set(codewords)
        q = ctx.q
        for u in codewords:
            for v in codewords:
                s = Word(q, tuple((a + b) % q for a, b in zip(u.entries, v.entries)))
                if s not in members:
                    raise InvalidParameterError(
                        f"not closed under addition: {u.entries} + {v.entries}"
                    )
        for a in range(2, q):
            for u in codewords:
                s = Word(q, tuple((a * e) % q for e in u.entries))
                if s not in members:
                    raise InvalidParameterError(
                        f"not closed under scalar {a} * {u.entries}"
                    )
    return LinearCode(ctx=ctx, n=n, codewords=codewords, source=source)


def span(G: GeneratorMatrix, *, cap: int | None = None) -> LinearCode:
    """The code generated by G: all Z_q-combinations of its rows, deduplicated."""
    ctx = G.ctx
    q = ctx.q
    total = q**G.k
    limits.check_cap(total, cap if cap is not None else limits.DEFAULT_SPAN_CAP, "span enumeration")
    rows = [r.entries for r in G.rows]
    n = G.n
    seen: set[tuple[int, ...]] = set()
    for coeffs in product(range(q), repeat=G.k):
        w = tuple(sum(a * row[j] for a, row in zip(coeffs, rows)) % q for j in range(n))
        seen.add(w)
    limits.check_cap(len(seen), limits.DEFAULT_MATERIALIZE_CAP, "span result")
    return linear_code(ctx, seen, source=G, verify=False)


def dual(C: LinearCode, *, cap: int | None = None) -> LinearCode:
    """All ambient words orthogonal (dot product 0 mod q) to every codeword.

    Orthogonality is tested against the generator rows when the code carries
    its source matrix; orthogonality to generators implies orthogonality to
    the whole span.
    """
    ctx = C.ctx
    q, n = ctx.q, C.n
    total = q**n
    limits.check_cap(total, cap if cap is not None else limits.DEFAULT_MATERIALIZE_CAP, "dual enumeration")
    if C.source is not None:
        probes = np.array([r.entries for r in C.source.rows], dtype=np.int64)
    else:
        probes = C.array.astype(np.int64)
    kept: list[tuple[int, ...]] = []
    chunk = 1 << 16
    for lo in range(0, total, chunk):
        hi = min(lo + chunk, total)
        digits = decode_indices(np.arange(lo, hi, dtype=np.int64), q, n).astype(np.int64)
        mask = np.ones(hi - lo, dtype=bool)
        for row in probes:
            mask &= (digits @ row) % q == 0
        for d in digits[mask]:
            kept.append(tuple(int(x) for x in d))
    result = linear_code(ctx, kept, verify=False)
    if C.M * result.M != total:
        raise InvalidParameterError(
            f"dual size check failed: {C.M} * {result.M} != {q}^{n}"
        )
    return result


def word_weight(w: Word, metric: str, ctx: RingContext) -> int:
    if metric == HAMMING:
        return hamming_weight(w)
    if metric == LEE:
        return lee_weight_word(w, ctx)
    raise InvalidParameterError(f"unknown metric {metric!r}")


def min_distance(C: LinearCode, metric: str) -> int:
    """Minimum nonzero codeword weight (equals min pairwise distance by linearity)."""
    if C.M < 2:
        raise UndefinedDistanceError("minimum distance needs at least two codewords")
    return min(
        word_weight(w, metric, C.ctx)
        for w in C.codewords
        if any(e != 0 for e in w.entries)
    )


@dataclass(frozen=True)
class WeightDistribution:
    metric: str
    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())


def weight_distribution(C: LinearCode, metric: str) -> WeightDistribution:
    """Exact census of codeword weights."""
    counts = Counter(word_weight(w, metric, C.ctx) for w in C.codewords)
    return WeightDistribution(metric=metric, counts=dict(sorted(counts.items())))


def classify_type(C: LinearCode) -> str:
    """alpha iff d_H == ceil(d_L / p); beta iff d_H exceeds it."""
    d_h = min_distance(C, HAMMING)
    d_l = min_distance(C, LEE)
    threshold = math.ceil(d_l / C.ctx.p)
    if d_h == threshold:
        return "alpha"
    if d_h > threshold:
        return "beta"
    # Impossible: each nonzero coordinate contributes at most p Lee weight.
    raise RuntimeError(
        f"classification anomaly: d_H={d_h} < ceil(d_L/p)={threshold}"
    )


# Generator-matrix text format:
#   line 1: p
#   line 2: k n
#   next k lines: n space-separated residues in [0, p^2)
# '#' starts a comment line; blank lines and extra whitespace are ignored.


def parse_generator_text(text: str) -> GeneratorMatrix:
    rows_of_ints: list[list[int]] = []
    lineno_by_row: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise InvalidParameterError(f"line {lineno}: expected integers, got {raw!r}") from None
        rows_of_ints.append(values)
        lineno_by_row.append(lineno)
    if len(rows_of_ints) < 3:
        raise InvalidParameterError("matrix file needs p, 'k n', and at least one row")
    if len(rows_of_ints[0]) != 1:
        raise InvalidParameterError(f"line {lineno_by_row[0]}: expected a single prime p")
    ctx = make_ring(rows_of_ints[0][0])
    if len(rows_of_ints[1]) != 2:
        raise InvalidParameterError(f"line {lineno_by_row[1]}: expected 'k n'")
    k, n = rows_of_ints[1]
    if k < 1 or n < 1:
        raise InvalidParameterError(f"line {lineno_by_row[1]}: k and n must be >= 1")
    data = rows_of_ints[2:]
    if len(data) != k:
        raise InvalidParameterError(f"expected {k} matrix rows, found {len(data)}")
    words = []
    for i, row in enumerate(data):
        if len(row) != len(data[0]) or len(row) != n:
            raise InvalidParameterError(
                f"line {lineno_by_row[2 + i]}: expected {n} entries, got {len(row)}"
            )
        for v in row:
            if not (0 <= v < ctx.q):
                raise InvalidParameterError(
                    f"line {lineno_by_row[2 + i]}: residue {v} out of range [0, {ctx.q})"
                )
        words.append(Word(ctx.q, tuple(row)))
    return GeneratorMatrix(ctx, tuple(words))


def format_generator_text(G: GeneratorMatrix) -> str:
    lines = [str(G.ctx.p), f"{G.k} {G.n}"]
    for r in G.rows:
        lines.append(" ".join(str(e) for e in r.entries))
    return "\n".join(lines) + "\n"


def load_generator_file(path) -> GeneratorMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_generator_text(fh.read())


def save_generator_file(G: GeneratorMatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_generator_text(G))
