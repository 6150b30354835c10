"""Shared pure-Python oracles, deliberately independent of the library kernels."""

from itertools import product

import pytest

from zp2cover.ring import HAMMING, Word


def lee_weight_oracle(x: int, p: int) -> int:
    """Independent closed form: min(x, p^2 - x, p)."""
    q = p * p
    return min(x % q, (q - x) % q, p) if x % q else 0


def weight_oracle(entries, metric: str, p: int | None) -> int:
    if metric == HAMMING:
        return sum(1 for e in entries if e != 0)
    return sum(lee_weight_oracle(e, p) for e in entries)


def radius_oracle(codewords, modulus: int, n: int, metric: str, p: int | None = None):
    """Max-min distance by direct double loop; returns (radius, deep holes)."""
    code = [tuple(w) for w in codewords]
    best, holes = -1, []
    for u in product(range(modulus), repeat=n):
        d = min(
            weight_oracle([(a - b) % modulus for a, b in zip(u, c)], metric, p)
            for c in code
        )
        if d > best:
            best, holes = d, [u]
        elif d == best:
            holes.append(u)
    return best, holes


def coset_radius_oracle(codewords, modulus: int, n: int, metric: str, p: int | None = None) -> int:
    """Largest coset-leader weight via explicit dict partition of the ambient space."""
    code = [tuple(w) for w in codewords]
    leaders: dict[frozenset, int] = {}
    for u in product(range(modulus), repeat=n):
        coset = frozenset(tuple((a + b) % modulus for a, b in zip(u, c)) for c in code)
        w = weight_oracle(u, metric, p)
        if coset not in leaders or w < leaders[coset]:
            leaders[coset] = w
    return max(leaders.values())


def words(entries_list, modulus: int):
    return [Word(modulus, tuple(e)) for e in entries_list]


@pytest.fixture
def tmp_matrix(tmp_path):
    """Write a generator-matrix file and return its path."""

    def write(p: int, rows) -> str:
        k = len(rows)
        n = len(rows[0])
        lines = [str(p), f"{k} {n}"]
        lines += [" ".join(str(x) for x in row) for row in rows]
        path = tmp_path / "matrix.txt"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return str(path)

    return write
