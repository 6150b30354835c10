"""Builders for repetition-style code families and the combination constructions.

Families over Z_{p^2}:

  unit_rep       span of (u, ..., u) for a unit u; p^2 codewords
  zero_div_rep   span of (z, ..., z) for a nonzero zero-divisor z; p codewords
  br_full        one block of every nonzero residue 1..p^2-1, each repeated n times
  br_drop_last   blocks 1..p^2-2 (claimed parameters are audited, not assumed)
  br_mixed       a unit block of length m plus the p-1 zero-divisor blocks of length n
  cartesian      concatenation of all codeword pairs of two codes
  stacked        span of the block matrix ((0 | G1), (G0 | A))

Prime-field repetition codes over Z_q (q prime) are provided as explicit word
lists together with their claimed closed-form covering radii; the closed
forms are audit targets, not trusted values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .codes import (
    GeneratorMatrix,
    LinearCode,
    generator_matrix,
    linear_code,
    min_distance,
    span,
    weight_distribution,
)
from .errors import InvalidParameterError
from .ring import HAMMING, LEE, RingContext, Word, is_prime, make_ring


def _assert_params(name: str, got, want) -> None:
    if got != want:
        raise RuntimeError(f"{name}: computed {got} but construction guarantees {want}")


def unit_repetition(ctx: RingContext, n: int, u: int = 1) -> LinearCode:
    """Span of (u, ..., u); an (n, p^2, n, n) code."""
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    if not (0 < u < ctx.q) or not ctx.is_unit(u):
        raise InvalidParameterError(f"u={u} is not a unit mod {ctx.q}")
    C = span(generator_matrix(ctx, [(u,) * n]))
    _assert_params("unit_repetition cardinality", C.M, ctx.q)
    _assert_params("unit_repetition d_H", min_distance(C, HAMMING), n)
    _assert_params("unit_repetition d_L", min_distance(C, LEE), n)
    return C


def zero_divisor_repetition(ctx: RingContext, n: int, z: int | None = None) -> LinearCode:
    """Span of (z, ..., z); an (n, p, n, pn) code."""
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    if z is None:
        z = ctx.p
    if z not in ctx.zero_divisors():
        raise InvalidParameterError(
            f"z={z} is not a nonzero zero-divisor mod {ctx.q}"
            f" (expected one of {ctx.zero_divisors()})"
        )
    C = span(generator_matrix(ctx, [(z,) * n]))
    _assert_params("zero_divisor_repetition cardinality", C.M, ctx.p)
    _assert_params("zero_divisor_repetition d_H", min_distance(C, HAMMING), n)
    _assert_params("zero_divisor_repetition d_L", min_distance(C, LEE), ctx.p * n)
    return C


def _block_row(ctx: RingContext, values: Iterable[int], n: int) -> tuple[int, ...]:
    row: list[int] = []
    for v in values:
        row.extend([v % ctx.q] * n)
    return tuple(row)


def block_repetition_full(ctx: RingContext, n: int) -> LinearCode:
    """Blocks of every nonzero residue; constant Lee weight p^2(p-1)n off zero."""
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    p, q = ctx.p, ctx.q
    C = span(generator_matrix(ctx, [_block_row(ctx, range(1, q), n)]))
    _assert_params("block_repetition_full length", C.n, (q - 1) * n)
    _assert_params("block_repetition_full cardinality", C.M, q)
    lee = weight_distribution(C, LEE).counts
    _assert_params("block_repetition_full Lee census", lee, {0: 1, q * (p - 1) * n: q - 1})
    ham = weight_distribution(C, HAMMING).counts
    _assert_params(
        "block_repetition_full Hamming census",
        ham,
        {0: 1, (q - p) * n: p - 1, (q - 1) * n: q - p},
    )
    return C


def block_repetition_drop_last(ctx: RingContext, n: int) -> LinearCode:
    """Blocks of residues 1..p^2-2; distance parameters are left to the audits."""
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    q = ctx.q
    C = span(generator_matrix(ctx, [_block_row(ctx, range(1, q - 1), n)]))
    _assert_params("block_repetition_drop_last length", C.n, (q - 2) * n)
    _assert_params("block_repetition_drop_last cardinality", C.M, q)
    return C


def block_repetition_mixed(ctx: RingContext, m: int, n: int) -> LinearCode:
    """Unit block of length m plus blocks of p, 2p, ..., (p-1)p, each of length n."""
    if m < 1 or n < 1:
        raise InvalidParameterError(f"m and n must be >= 1, got m={m} n={n}")
    p, q = ctx.p, ctx.q
    row = (1,) * m + _block_row(ctx, (k * p for k in range(1, p)), n)
    C = span(generator_matrix(ctx, [row]))
    _assert_params("block_repetition_mixed length", C.n, m + (p - 1) * n)
    _assert_params("block_repetition_mixed cardinality", C.M, q)
    # Zero-divisor multiples weigh (m, pm); unit multiples (m+(p-1)n, m+(p-1)np).
    _assert_params("block_repetition_mixed d_H", min_distance(C, HAMMING), m)
    _assert_params(
        "block_repetition_mixed d_L",
        min_distance(C, LEE),
        min(p * m, m + (p - 1) * n * p),
    )
    return C


def mixed_claimed_params(p: int, m: int, n: int) -> tuple[int, int, int, int]:
    """The claimed (length, M, d_H, d_L) of the mixed family, for audits."""
    return (m + (p - 1) * n, p * p, m, p * m)


def cartesian_product(C1: LinearCode, C2: LinearCode) -> LinearCode:
    """All concatenations (c1 | c2); length n1+n2, cardinality M1*M2."""
    if C1.ctx != C2.ctx:
        raise InvalidParameterError("cartesian product needs codes over the same ring")
    q = C1.ctx.q
    words = [
        u.entries + v.entries
        for u in C1.codewords
        for v in C2.codewords
    ]
    source = None
    if C1.source is not None and C2.source is not None:
        rows = [r.entries + (0,) * C2.n for r in C1.source.rows]
        rows += [(0,) * C1.n + r.entries for r in C2.source.rows]
        source = generator_matrix(C1.ctx, rows)
    C = linear_code(C1.ctx, words, source=source, verify=False)
    _assert_params("cartesian cardinality", C.M, C1.M * C2.M)
    return C


def stacked_construction(
    G0: GeneratorMatrix,
    G1: GeneratorMatrix,
    A: GeneratorMatrix | None = None,
) -> LinearCode:
    """Span of ((0 | G1), (G0 | A)); A defaults to the zero matrix."""
    if G0.ctx != G1.ctx:
        raise InvalidParameterError("stacked construction needs one common ring")
    ctx = G0.ctx
    if A is None:
        A = generator_matrix(ctx, [(0,) * G1.n for _ in range(G0.k)])
    if A.ctx != ctx:
        raise InvalidParameterError("A must live over the same ring")
    if A.k != G0.k or A.n != G1.n:
        raise InvalidParameterError(
            f"A must be {G0.k} x {G1.n}, got {A.k} x {A.n}"
        )
    rows = [(0,) * G0.n + r.entries for r in G1.rows]
    rows += [g.entries + a.entries for g, a in zip(G0.rows, A.rows)]
    return span(generator_matrix(ctx, rows))


# Prime-field repetition codes over Z_q (q prime), used via Hamming searches.


def _check_prime_field(q: int) -> None:
    if not is_prime(q):
        raise InvalidParameterError(f"q must be prime for field repetition audits, got {q}")


def field_repetition_code(q: int, n: int) -> list[Word]:
    """The q constant words of length n over Z_q."""
    _check_prime_field(q)
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    return [Word(q, (a,) * n) for a in range(q)]


def field_block_repetition_code(q: int, n: int) -> list[Word]:
    """Scalar multiples of the blocked row 1^n 2^n ... (q-1)^n over Z_q."""
    _check_prime_field(q)
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    row = []
    for v in range(1, q):
        row.extend([v] * n)
    return [Word(q, tuple((a * e) % q for e in row)) for a in range(q)]


def field_repetition_radius(q: int, n: int) -> int:
    """Claimed closed form ceil(n(q-1)/q) for the q-ary repetition code."""
    _check_prime_field(q)
    return math.ceil(n * (q - 1) / q)


def field_block_repetition_radius(q: int, n: int) -> int:
    """Claimed closed form ceil(n(q-1)^2/q) for the blocked repetition code."""
    _check_prime_field(q)
    return math.ceil(n * (q - 1) ** 2 / q)


# Serializable construction specs, shared by the CLI and the audit fixtures.

FAMILIES = (
    "unit_rep",
    "zero_div_rep",
    "br_full",
    "br_drop_last",
    "br_mixed",
    "cartesian",
    "stacked",
)


@dataclass(frozen=True)
class ConstructionSpec:
    family: str
    parameters: dict

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InvalidParameterError(
                f"unknown family {self.family!r}; expected one of {FAMILIES}"
            )

    def to_dict(self) -> dict:
        return {"family": self.family, "parameters": self.parameters}

    @staticmethod
    def from_dict(data: dict) -> "ConstructionSpec":
        if not isinstance(data, dict) or "family" not in data:
            raise InvalidParameterError("construction spec must be {family, parameters}")
        return ConstructionSpec(data["family"], dict(data.get("parameters", {})))

    def label(self) -> str:
        params = ",".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        return f"{self.family}({params})"

    def _int(self, key: str, default: int | None = None) -> int:
        if key not in self.parameters:
            if default is not None:
                return default
            raise InvalidParameterError(f"{self.family}: missing parameter {key!r}")
        value = self.parameters[key]
        if not isinstance(value, int) or isinstance(value, bool):
            raise InvalidParameterError(f"{self.family}: {key} must be an integer")
        return value

    def build(self) -> LinearCode:
        fam = self.family
        if fam == "cartesian":
            parts = self.parameters.get("components")
            if not isinstance(parts, (list, tuple)) or len(parts) != 2:
                raise InvalidParameterError("cartesian needs exactly two component specs")
            left = ConstructionSpec.from_dict(parts[0]).build()
            right = ConstructionSpec.from_dict(parts[1]).build()
            return cartesian_product(left, right)
        if fam == "stacked":
            ctx = make_ring(self._int("p"))
            g0 = self.parameters.get("g0")
            g1 = self.parameters.get("g1")
            if not g0 or not g1:
                raise InvalidParameterError("stacked needs g0 and g1 row lists")
            G0 = generator_matrix(ctx, g0)
            G1 = generator_matrix(ctx, g1)
            a = self.parameters.get("a")
            A = generator_matrix(ctx, a) if a else None
            return stacked_construction(G0, G1, A)
        ctx = make_ring(self._int("p"))
        if fam == "unit_rep":
            return unit_repetition(ctx, self._int("n"), self._int("u", 1))
        if fam == "zero_div_rep":
            return zero_divisor_repetition(ctx, self._int("n"), self._int("z", ctx.p))
        if fam == "br_full":
            return block_repetition_full(ctx, self._int("n"))
        if fam == "br_drop_last":
            return block_repetition_drop_last(ctx, self._int("n"))
        if fam == "br_mixed":
            return block_repetition_mixed(ctx, self._int("m"), self._int("n"))
        raise InvalidParameterError(f"unhandled family {fam!r}")

    def generator(self) -> GeneratorMatrix:
        """A generator matrix presenting the same code (for file export)."""
        code = self.build()
        if code.source is not None:
            return code.source
        raise InvalidParameterError(f"{self.family} does not define a generator matrix")
