"""Arithmetic over Z_{p^2}: Lee and Hamming weights, distances, and the Gray map.

All residues are stored canonically in [0, modulus); every operation reduces
immediately, so words compare and hash by value.  The Lee weight used here is
the capped one natural to Z_{p^2}:

    w(x) = x        for 0 <= x <= p
    w(x) = p        for p+1 <= x <= p^2 - p
    w(x) = p^2 - x  for p^2 - p + 1 <= x < p^2

so a single coordinate never weighs more than p.  The Gray map sends a
residue x = k*p + j (0 <= j < p) to j copies of k+1 followed by p - j copies
of k, everything mod p; it carries this Lee weight to Hamming weight exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import InvalidParameterError

HAMMING = "hamming"
LEE = "lee"
METRICS = (HAMMING, LEE)


def is_prime(n: int) -> bool:
    """Deterministic trial division; ample for desk-scale primes."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class RingContext:
    """A validated prime p together with the ring modulus q = p^2."""

    p: int
    q: int

    @cached_property
    def lee_table(self) -> tuple[int, ...]:
        """Lee weight of every residue in [0, q)."""
        return tuple(lee_weight(x, self) for x in range(self.q))

    def is_unit(self, x: int) -> bool:
        return x % self.p != 0

    def zero_divisors(self) -> tuple[int, ...]:
        """Nonzero zero-divisors: the multiples of p below q."""
        return tuple(range(self.p, self.q, self.p))


def make_ring(p: int) -> RingContext:
    """Context for Z_{p^2}; rejects composites and p < 2."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise InvalidParameterError(f"p must be an integer, got {p!r}")
    if p < 2 or not is_prime(p):
        raise InvalidParameterError(f"p must be a prime >= 2, got {p}")
    return RingContext(p=p, q=p * p)


@dataclass(frozen=True, order=True)
class Word:
    """Fixed-length tuple of canonical residues modulo `modulus`."""

    modulus: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise InvalidParameterError(f"modulus must be >= 2, got {self.modulus}")
        for e in self.entries:
            if not (0 <= e < self.modulus):
                raise InvalidParameterError(
                    f"entry {e} is not a canonical residue mod {self.modulus}"
                )

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @staticmethod
    def zero(modulus: int, n: int) -> "Word":
        return Word(modulus, (0,) * n)


def word(entries, modulus: int) -> Word:
    """Build a Word, reducing entries into canonical range first."""
    return Word(modulus, tuple(int(e) % modulus for e in entries))


def _check_residue(x: int, q: int) -> None:
    if not (0 <= x < q):
        raise InvalidParameterError(f"residue {x} out of range [0, {q})")


def lee_weight(x: int, ctx: RingContext) -> int:
    """Capped Lee weight of a single residue mod p^2; 0 iff x == 0."""
    _check_residue(x, ctx.q)
    p = ctx.p
    if x <= p:
        return x
    if x <= ctx.q - p:
        return p
    return ctx.q - x


def hamming_weight(w: Word) -> int:
    """Number of nonzero coordinates."""
    return sum(1 for e in w.entries if e != 0)


def lee_weight_word(w: Word, ctx: RingContext) -> int:
    """Coordinatewise sum of Lee weights; requires modulus p^2."""
    if w.modulus != ctx.q:
        raise InvalidParameterError(
            f"Lee weight needs modulus {ctx.q}, word has modulus {w.modulus}"
        )
    table = ctx.lee_table
    return sum(table[e] for e in w.entries)


def distance(u: Word, v: Word, metric: str, ctx: RingContext | None = None) -> int:
    """Weight of the componentwise difference, under `metric`."""
    if u.modulus != v.modulus:
        raise InvalidParameterError(
            f"modulus mismatch: {u.modulus} vs {v.modulus}"
        )
    if len(u) != len(v):
        raise InvalidParameterError(f"length mismatch: {len(u)} vs {len(v)}")
    if metric == HAMMING:
        return sum(1 for a, b in zip(u.entries, v.entries) if a != b)
    if metric == LEE:
        if ctx is None:
            raise InvalidParameterError("Lee distance needs a RingContext")
        if u.modulus != ctx.q:
            raise InvalidParameterError(
                f"Lee distance is defined on modulus {ctx.q} words only,"
                f" got modulus {u.modulus}"
            )
        table = ctx.lee_table
        q = ctx.q
        return sum(table[(a - b) % q] for a, b in zip(u.entries, v.entries))
    raise InvalidParameterError(f"unknown metric {metric!r}")


def gray_element(x: int, ctx: RingContext) -> Word:
    """Gray image of one residue: x = k*p + j maps to (k+1)^j then k^(p-j), mod p."""
    _check_residue(x, ctx.q)
    p = ctx.p
    k, j = divmod(x, p)
    return Word(p, ((k + 1) % p,) * j + (k % p,) * (p - j))


def gray_word(w: Word, ctx: RingContext) -> Word:
    """Coordinatewise Gray image: length n words map to length p*n words mod p."""
    if w.modulus != ctx.q:
        raise InvalidParameterError(
            f"Gray map needs modulus {ctx.q}, word has modulus {w.modulus}"
        )
    out: list[int] = []
    for e in w.entries:
        out.extend(gray_element(e, ctx).entries)
    return Word(ctx.p, tuple(out))
