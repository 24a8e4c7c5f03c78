"""Ring layer: frozen oracles for radicals, ideal lattices, Wedderburn data."""

import pytest

from eplab.errors import (
    GuardExceeded,
    InputError,
    NotPrincipalError,
    UnsupportedConstruction,
)
from eplab.rings import (
    block_projections,
    exponent_of_addition,
    is_left_ideal,
    is_left_pir,
    is_right_pir,
    jacobson_radical,
    left_ideal_generated,
    left_ideals_enumerate,
    minimal_left_ideals,
    opposite_ring,
    principal_generator,
    principal_left_ideal,
    right_ideals_enumerate,
    ring_make,
    ring_quotient,
    units,
    wedderburn_data,
)


def mod_ring(n):
    return ring_make({"kind": "mod_n", "n": n})


def matrix_ring(m, q):
    return ring_make({"kind": "matrix", "m": m, "q": q})


def local_xy_ring():
    """F_2[x,y]/(x,y)^2: elements a + bx + cy encoded as a*4 + b*2 + c.

    Its maximal ideal (x, y) needs two generators, so this ring is not a
    principal-ideal ring.
    """
    def split(i):
        return (i >> 2) & 1, (i >> 1) & 1, i & 1

    def join(a, b, c):
        return a * 4 + b * 2 + c

    add = [[0] * 8 for _ in range(8)]
    mul = [[0] * 8 for _ in range(8)]
    for i in range(8):
        a1, b1, c1 = split(i)
        for j in range(8):
            a2, b2, c2 = split(j)
            add[i][j] = join((a1 + a2) % 2, (b1 + b2) % 2, (c1 + c2) % 2)
            mul[i][j] = join(
                (a1 * a2) % 2, (a1 * b2 + b1 * a2) % 2, (a1 * c2 + c1 * a2) % 2
            )
    return ring_make({"kind": "table", "add": add, "mul": mul})


def upper_triangular_ring():
    """2x2 upper triangular matrices over F_2 as a table ring."""
    els = [(a, b, d) for a in range(2) for b in range(2) for d in range(2)]
    index = {e: i for i, e in enumerate(els)}
    add = [
        [index[((a1 + a2) % 2, (b1 + b2) % 2, (d1 + d2) % 2)] for (a2, b2, d2) in els]
        for (a1, b1, d1) in els
    ]
    mul = [
        [index[((a1 * a2) % 2, (a1 * b2 + b1 * d2) % 2, (d1 * d2) % 2)] for (a2, b2, d2) in els]
        for (a1, b1, d1) in els
    ]
    return ring_make({"kind": "table", "add": add, "mul": mul})


def radical_oracle(ring):
    """Independent method: intersect the maximal left ideals."""
    ideals = left_ideals_enumerate(ring)
    proper = [set(i.members) for i in ideals if len(i.members) < ring.order]
    maximal = [
        i for i in proper if not any(i < j for j in proper)
    ]
    out = set(range(ring.order))
    for m in maximal:
        out &= m
    return tuple(sorted(out))


def test_mod6_frozen_lattice():
    r = mod_ring(6)
    assert units(r) == frozenset({1, 5})
    assert jacobson_radical(r).members == (0,)
    ideals = [i.members for i in left_ideals_enumerate(r)]
    assert ideals == [(0,), (0, 3), (0, 2, 4), (0, 1, 2, 3, 4, 5)]
    assert is_left_pir(r)
    assert is_right_pir(r)
    assert principal_generator(r, left_ideals_enumerate(r)[2]) == 2
    assert principal_generator(r, left_ideals_enumerate(r)[1]) == 3


def test_mod4_frozen():
    r = mod_ring(4)
    assert jacobson_radical(r).members == (0, 2)
    assert [i.members for i in left_ideals_enumerate(r)] == [(0,), (0, 2), (0, 1, 2, 3)]
    assert is_left_pir(r)
    quotient, proj = ring_quotient(r, jacobson_radical(r))
    assert quotient.order == 2
    assert proj == (0, 1, 0, 1)


def test_matrix_ring_m2f2_frozen():
    r = matrix_ring(2, 2)
    assert r.order == 16
    assert len(units(r)) == 6
    assert jacobson_radical(r).members == (0,)
    ideals = left_ideals_enumerate(r)
    assert len(ideals) == 5
    assert sorted(len(i.members) for i in ideals) == [1, 4, 4, 4, 16]
    minimals = minimal_left_ideals(r)
    assert len(minimals) == 3
    assert all(len(m.members) == 4 for m in minimals)
    assert is_left_pir(r)
    assert is_right_pir(r)
    # right ideal lattice has the same shape by column symmetry
    assert sorted(len(i.members) for i in right_ideals_enumerate(r)) == [1, 4, 4, 4, 16]


def test_matrix_ring_identity_encoding():
    r = matrix_ring(2, 2)
    # identity matrix (1,0,0,1) row-major base 2, first entry most significant
    assert r.one == 0b1001
    assert r.zero == 0


def test_product_ring_structure():
    r = ring_make({"kind": "product", "factors": [{"kind": "mod_n", "n": 2}, {"kind": "mod_n", "n": 3}]})
    assert r.order == 6
    assert r.one == 1 * 3 + 1
    # (1,2) + (1,1) = (0,0)
    assert r.add(5, 4) == 0
    assert wedderburn_data(r).blocks == ((1, 2), (1, 3))
    assert is_left_pir(r)


@pytest.mark.parametrize(
    "builder,expected",
    [
        (lambda: mod_ring(4), ((1, 2),)),
        (lambda: mod_ring(6), ((1, 2), (1, 3))),
        (lambda: mod_ring(12), ((1, 2), (1, 3))),
        (lambda: matrix_ring(2, 2), ((2, 2),)),
        (lambda: matrix_ring(1, 4), ((1, 4),)),
        (local_xy_ring, ((1, 2),)),
        (upper_triangular_ring, ((1, 2), (1, 2))),
    ],
)
def test_wedderburn_blocks_frozen(builder, expected):
    assert wedderburn_data(builder()).blocks == expected


@pytest.mark.parametrize(
    "builder",
    [
        lambda: mod_ring(4),
        lambda: mod_ring(6),
        lambda: mod_ring(8),
        lambda: mod_ring(12),
        lambda: matrix_ring(2, 2),
        local_xy_ring,
        upper_triangular_ring,
    ],
)
def test_radical_matches_maximal_ideal_oracle(builder):
    r = builder()
    assert jacobson_radical(r).members == radical_oracle(r)


@pytest.mark.parametrize(
    "builder",
    [lambda: mod_ring(8), lambda: mod_ring(9), local_xy_ring, upper_triangular_ring],
)
def test_radical_is_nilpotent_two_sided(builder):
    r = builder()
    rad = set(jacobson_radical(r).members)
    assert is_left_ideal(r, rad)
    assert all(r.mul(a, s) in rad for a in rad for s in r.elements())
    power = rad
    for _ in range(r.order):
        if power == {r.zero}:
            break
        power = {r.mul(a, b) for a in power for b in rad} | {r.zero}
        power = set(left_ideal_generated(r, sorted(power)).members)
    assert power == {r.zero}
    quotient, _ = ring_quotient(r, jacobson_radical(r))
    assert jacobson_radical(quotient).members == (quotient.zero,)


def test_ideal_lattice_closure_properties():
    for builder in (lambda: mod_ring(12), local_xy_ring, upper_triangular_ring):
        r = builder()
        ideals = left_ideals_enumerate(r)
        mem = {i.members for i in ideals}
        assert all(is_left_ideal(r, i.members) for i in ideals)
        for a in ideals:
            for b in ideals:
                s = left_ideal_generated(r, sorted(set(a.members) | set(b.members)))
                inter = tuple(sorted(set(a.members) & set(b.members)))
                assert s.members in mem
                assert inter in mem


def test_local_xy_ring_is_not_pir():
    r = local_xy_ring()
    assert jacobson_radical(r).members == (0, 1, 2, 3)
    assert not is_left_pir(r)
    assert not is_right_pir(r)
    bad = left_ideal_generated(r, [1, 2])
    assert bad.members == (0, 1, 2, 3)
    with pytest.raises(NotPrincipalError):
        principal_generator(r, bad)


def test_principal_ideals_and_generators():
    r = mod_ring(6)
    assert principal_left_ideal(r, 2).members == (0, 2, 4)
    assert principal_left_ideal(r, 5).members == (0, 1, 2, 3, 4, 5)
    assert left_ideal_generated(r, [2, 3]).members == (0, 1, 2, 3, 4, 5)
    r16 = matrix_ring(2, 2)
    for ideal in minimal_left_ideals(r16):
        g = principal_generator(r16, ideal)
        assert principal_left_ideal(r16, g).members == ideal.members
        assert g == min(x for x in ideal.members if x != 0)


def test_quotient_of_mod12_by_four_multiples():
    r = mod_ring(12)
    ideal = principal_left_ideal(r, 4)
    assert ideal.members == (0, 4, 8)
    quotient, proj = ring_quotient(r, ideal)
    expected = mod_ring(4)
    assert quotient.add_table == expected.add_table
    assert quotient.mul_table == expected.mul_table
    assert proj == (0, 1, 2, 3) * 3


def test_quotient_requires_two_sided_ideal():
    r = matrix_ring(2, 2)
    ideal = minimal_left_ideals(r)[0]
    with pytest.raises(InputError):
        ring_quotient(r, ideal)


def test_block_projections_structured():
    r6 = mod_ring(6)
    bps = block_projections(r6)
    assert [(b.mu, b.q) for b in bps] == [(1, 2), (1, 3)]
    assert bps[0].proj == tuple(x % 2 for x in range(6))
    assert bps[1].proj == tuple(x % 3 for x in range(6))

    rm = matrix_ring(2, 2)
    (bp,) = block_projections(rm)
    assert (bp.mu, bp.q) == (2, 2)
    assert bp.proj == tuple(range(16))

    rp = ring_make(
        {"kind": "product", "factors": [{"kind": "mod_n", "n": 3}, {"kind": "mod_n", "n": 2}]}
    )
    bps = block_projections(rp)
    assert [(b.mu, b.q) for b in bps] == [(1, 2), (1, 3)]
    # leftmost factor is most significant: index = a*2 + b for (a mod 3, b mod 2)
    assert bps[0].proj == tuple(i % 2 for i in range(6))
    assert bps[1].proj == tuple(i // 2 for i in range(6))

    with pytest.raises(UnsupportedConstruction):
        block_projections(local_xy_ring())


def test_block_projection_is_ring_map():
    for builder in (lambda: mod_ring(12), lambda: matrix_ring(2, 2)):
        r = builder()
        for bp in block_projections(r):
            block = ring_make({"kind": "matrix", "m": bp.mu, "q": bp.q})
            p = bp.proj
            assert p[r.one] == block.one
            assert p[r.zero] == block.zero
            for a in r.elements():
                for b in r.elements():
                    assert p[r.add(a, b)] == block.add(p[a], p[b])
                    assert p[r.mul(a, b)] == block.mul(p[a], p[b])


def test_opposite_ring_involution():
    r = upper_triangular_ring()
    op = opposite_ring(r)
    assert op.mul(1, 2) == r.mul(2, 1)
    assert units(op) == units(r)


def test_exponent_of_addition():
    assert exponent_of_addition(mod_ring(4)) == 4
    assert exponent_of_addition(mod_ring(6)) == 6
    assert exponent_of_addition(matrix_ring(2, 2)) == 2


def test_table_validation_rejects_bad_input():
    with pytest.raises(InputError):
        ring_make({"kind": "table", "add": [[0, 1], [1, 0]], "mul": [[0, 0], [0, 0]]})
    with pytest.raises(InputError):
        ring_make({"kind": "table", "add": [[1, 0], [0, 1]], "mul": [[0, 0], [0, 1]]})
    with pytest.raises(InputError):
        ring_make({"kind": "mod_n"})
    with pytest.raises(InputError):
        ring_make({"kind": "mystery"})


def test_guards_on_construction():
    with pytest.raises(GuardExceeded):
        ring_make({"kind": "mod_n", "n": 100})
    with pytest.raises(GuardExceeded):
        ring_make({"kind": "matrix", "m": 2, "q": 3})
    with pytest.raises(GuardExceeded):
        ring_make(
            {"kind": "product", "factors": [{"kind": "mod_n", "n": 9}, {"kind": "mod_n", "n": 9}]}
        )
