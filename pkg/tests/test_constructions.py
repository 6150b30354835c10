import json
import math
import random

import pytest

from zp2cover.codes import generator_matrix, min_distance, span, weight_distribution
from zp2cover.constructions import (
    ConstructionSpec,
    block_repetition_drop_last,
    block_repetition_full,
    block_repetition_mixed,
    cartesian_product,
    field_block_repetition_code,
    field_block_repetition_radius,
    field_repetition_code,
    field_repetition_radius,
    mixed_claimed_params,
    stacked_construction,
    unit_repetition,
    zero_divisor_repetition,
)
from zp2cover.covering import covering_radius_exhaustive
from zp2cover.errors import InvalidParameterError
from zp2cover.ring import HAMMING, LEE, make_ring

C2 = make_ring(2)
C3 = make_ring(3)


def entries(code):
    return [w.entries for w in code.codewords]


def test_unit_repetition():
    assert entries(unit_repetition(C2, 2)) == [(0, 0), (1, 1), (2, 2), (3, 3)]
    assert unit_repetition(C2, 1, u=3).M == 4
    assert unit_repetition(C3, 1, u=2).M == 9
    with pytest.raises(InvalidParameterError):
        unit_repetition(C2, 2, u=2)
    with pytest.raises(InvalidParameterError):
        unit_repetition(C2, 0)


@pytest.mark.parametrize("p,n", [(2, 1), (2, 3), (3, 1), (3, 2), (5, 1)])
def test_unit_repetition_parameters(p, n):
    ctx = make_ring(p)
    code = unit_repetition(ctx, n)
    assert (code.n, code.M) == (n, p * p)
    assert min_distance(code, HAMMING) == n
    assert min_distance(code, LEE) == n


def test_zero_divisor_repetition():
    assert entries(zero_divisor_repetition(C2, 2)) == [(0, 0), (2, 2)]
    assert entries(zero_divisor_repetition(C3, 1, z=3)) == [(0,), (3,), (6,)]
    assert entries(zero_divisor_repetition(C3, 1, z=6)) == [(0,), (3,), (6,)]
    with pytest.raises(InvalidParameterError):
        zero_divisor_repetition(C3, 1, z=2)
    with pytest.raises(InvalidParameterError):
        zero_divisor_repetition(C2, 1, z=0)


@pytest.mark.parametrize("p,n", [(2, 1), (2, 4), (3, 2), (5, 1)])
def test_zero_divisor_repetition_parameters(p, n):
    ctx = make_ring(p)
    code = zero_divisor_repetition(ctx, n)
    assert (code.n, code.M) == (n, p)
    assert min_distance(code, HAMMING) == n
    assert min_distance(code, LEE) == p * n


def test_block_repetition_full_examples():
    br = block_repetition_full(C2, 1)
    assert entries(br) == entries(span(generator_matrix(C2, [(1, 2, 3)])))
    assert weight_distribution(br, LEE).counts == {0: 1, 4: 3}
    assert block_repetition_full(C2, 2).n == 6
    assert block_repetition_full(C2, 2).M == 4


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_block_repetition_full_weight_distributions(p, n):
    q = p * p
    code = block_repetition_full(make_ring(p), n)
    assert weight_distribution(code, LEE).counts == {0: 1, q * (p - 1) * n: q - 1}
    assert weight_distribution(code, HAMMING).counts == {
        0: 1, (q - p) * n: p - 1, (q - 1) * n: q - p,
    }


def test_block_repetition_drop_last():
    code = block_repetition_drop_last(C2, 1)
    assert entries(code) == [(0, 0), (1, 2), (2, 0), (3, 2)]
    # computed parameters disagree with the claimed (pn, p^2 n); reported, not asserted
    assert min_distance(code, HAMMING) == 1
    assert min_distance(code, LEE) == 2
    assert block_repetition_drop_last(C3, 1).n == 7
    assert block_repetition_drop_last(C3, 1).M == 9


def test_block_repetition_mixed():
    code = block_repetition_mixed(C2, 1, 1)
    assert entries(code) == entries(span(generator_matrix(C2, [(1, 2)])))
    assert min_distance(code, LEE) == 2  # pm with p=2, m=1
    row = block_repetition_mixed(C3, 2, 1).source.rows[0]
    assert row.entries == (1, 1, 3, 6)
    assert block_repetition_mixed(C3, 2, 1).n == 4
    assert mixed_claimed_params(3, 2, 1) == (4, 9, 2, 6)


@pytest.mark.parametrize("p,m,n", [(2, 1, 1), (2, 2, 1), (2, 1, 2), (3, 1, 1), (3, 2, 1)])
def test_block_repetition_mixed_distances(p, m, n):
    code = block_repetition_mixed(make_ring(p), m, n)
    assert min_distance(code, HAMMING) == m
    assert min_distance(code, LEE) == min(p * m, m + (p - 1) * n * p)


def test_cartesian_product_examples():
    cz = zero_divisor_repetition(C2, 1)
    prod = cartesian_product(cz, cz)
    assert entries(prod) == [(0, 0), (0, 2), (2, 0), (2, 2)]
    assert covering_radius_exhaustive(prod, LEE).radius == 2
    zero = span(generator_matrix(C2, [(0,)]))
    zz = cartesian_product(zero, zero)
    assert covering_radius_exhaustive(zz, HAMMING).radius == 2
    with pytest.raises(InvalidParameterError):
        cartesian_product(cz, zero_divisor_repetition(C3, 1))


def test_cartesian_radius_additivity_seeded():
    rng = random.Random(20250810)
    for _ in range(10):
        ctx = make_ring(rng.choice([2, 3]))
        G1 = generator_matrix(ctx, [[rng.randrange(ctx.q) for _ in range(rng.randint(1, 2))]])
        G2 = generator_matrix(ctx, [[rng.randrange(ctx.q) for _ in range(rng.randint(1, 2))]])
        A, B = span(G1), span(G2)
        for metric in (HAMMING, LEE):
            ra = covering_radius_exhaustive(A, metric).radius
            rb = covering_radius_exhaustive(B, metric).radius
            rab = covering_radius_exhaustive(cartesian_product(A, B), metric).radius
            assert rab == ra + rb


def test_stacked_construction_examples():
    G0 = generator_matrix(C2, [(2,)])
    G1 = generator_matrix(C2, [(2,)])
    code = stacked_construction(G0, G1)
    assert entries(code) == [(0, 0), (0, 2), (2, 0), (2, 2)]
    assert covering_radius_exhaustive(code, LEE).radius == 2

    ambient = stacked_construction(
        generator_matrix(C2, [(1,)]), generator_matrix(C2, [(1,)])
    )
    assert covering_radius_exhaustive(ambient, LEE).radius == 0

    mixed = stacked_construction(
        generator_matrix(C2, [(3,)]),
        generator_matrix(C2, [(2,)]),
        generator_matrix(C2, [(1,)]),
    )
    assert mixed.M == 8
    with pytest.raises(InvalidParameterError):
        stacked_construction(G0, G1, generator_matrix(C2, [(1, 1)]))


def test_stacked_subadditivity_seeded():
    rng = random.Random(77)
    for _ in range(10):
        ctx = make_ring(rng.choice([2, 3]))
        n0, n1 = rng.randint(1, 2), rng.randint(1, 2)
        G0 = generator_matrix(ctx, [[rng.randrange(ctx.q) for _ in range(n0)]])
        G1 = generator_matrix(ctx, [[rng.randrange(ctx.q) for _ in range(n1)]])
        A = generator_matrix(ctx, [[rng.randrange(ctx.q) for _ in range(n1)]])
        combined = stacked_construction(G0, G1, A)
        for metric in (HAMMING, LEE):
            r0 = covering_radius_exhaustive(span(G0), metric).radius
            r1 = covering_radius_exhaustive(span(G1), metric).radius
            rc = covering_radius_exhaustive(combined, metric).radius
            assert rc <= r0 + r1


def test_field_repetition_formula_values():
    assert field_repetition_radius(3, 4) == 3
    assert field_block_repetition_radius(2, 1) == 1
    with pytest.raises(InvalidParameterError):
        field_repetition_radius(4, 2)


@pytest.mark.parametrize("q", (2, 3, 5))
def test_field_repetition_search(q):
    # Exhaustive truth is n - ceil(n/q); the claimed ceiling formula matches
    # exactly when q divides n and overshoots by one otherwise.
    for n in range(1, 7):
        code = field_repetition_code(q, n)
        got = covering_radius_exhaustive(code, HAMMING).radius
        assert got == n - math.ceil(n / q)
        if n % q == 0:
            assert field_repetition_radius(q, n) == got
        else:
            assert field_repetition_radius(q, n) == got + 1


@pytest.mark.parametrize("q,n", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)])
def test_field_block_repetition_search(q, n):
    code = field_block_repetition_code(q, n)
    assert len(code) == q and len(code[0]) == (q - 1) * n
    got = covering_radius_exhaustive(code, HAMMING).radius
    length = (q - 1) * n
    assert got == length - math.ceil(length / q)
    claimed = field_block_repetition_radius(q, n)
    assert (claimed == got) == (length % q == 0)


def test_construction_spec_roundtrip_and_build():
    spec = ConstructionSpec("zero_div_rep", {"p": 3, "n": 2, "z": 6})
    data = json.loads(json.dumps(spec.to_dict()))
    back = ConstructionSpec.from_dict(data)
    assert back == spec
    assert entries(back.build()) == entries(zero_divisor_repetition(C3, 2, z=6))

    nested = ConstructionSpec(
        "cartesian",
        {
            "components": [
                {"family": "zero_div_rep", "parameters": {"p": 2, "n": 1, "z": 2}},
                {"family": "unit_rep", "parameters": {"p": 2, "n": 1, "u": 1}},
            ]
        },
    )
    assert nested.build().M == 2 * 4

    stacked = ConstructionSpec("stacked", {"p": 2, "g0": [[3]], "g1": [[2]], "a": [[1]]})
    assert stacked.build().M == 8
    assert stacked.label() == "stacked(a=[[1]],g0=[[3]],g1=[[2]],p=2)"


def test_construction_spec_errors():
    with pytest.raises(InvalidParameterError):
        ConstructionSpec("nonsense", {})
    with pytest.raises(InvalidParameterError):
        ConstructionSpec("br_mixed", {"p": 2, "m": 1}).build()  # missing n
    with pytest.raises(InvalidParameterError):
        ConstructionSpec("cartesian", {"components": [{"family": "br_full", "parameters": {"p": 2, "n": 1}}]}).build()
    with pytest.raises(InvalidParameterError):
        ConstructionSpec("unit_rep", {"p": 2, "n": "two"}).build()


def test_spec_generator_matches_build():
    spec = ConstructionSpec("br_mixed", {"p": 3, "m": 2, "n": 1})
    G = spec.generator()
    assert span(G).codewords == spec.build().codewords
