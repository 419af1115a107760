"""Orthogonal generators, closure enumeration, classical group orders."""

import pytest

from lcdkit import (MatrixFq, classical_orthogonal_order, field_create,
                    generator_set, group_closure_order, random_orthogonal)
from lcdkit.errors import DimensionTooSmall, UnsupportedShape
from lcdkit.fixtures import group_orders
from lcdkit.orthogen import (half_turn_matrix, rotation_matrix,
                             transvection_matrix)


def all_fields():
    return [field_create(2), field_create(3), field_create(2, 2),
            field_create(5), field_create(7), field_create(2, 3),
            field_create(3, 2)]


def test_transvection_is_orthogonal_involution():
    for ctx in all_fields():
        T = transvection_matrix(ctx, 5)
        assert T.is_orthogonal()
        assert T @ T == MatrixFq.identity(ctx, 5)
        assert T != MatrixFq.identity(ctx, 5)
    with pytest.raises(DimensionTooSmall):
        transvection_matrix(field_create(3), 3)


def test_rotation_matrix_when_pair_exists():
    for ctx in all_fields():
        R = rotation_matrix(ctx, 4)
        if ctx.unit_circle_pair() is None:
            assert R is None
        else:
            assert R.is_orthogonal()
            assert R != MatrixFq.identity(ctx, 4)


def test_half_turn_matrix():
    F5 = field_create(5)
    H = half_turn_matrix(F5, 4)
    assert H.is_orthogonal()
    assert H @ H == MatrixFq.identity(F5, 4)
    assert H[0, 0] == F5.neg(1) and H[2, 2] == 1


def test_generator_set_composition():
    # odd q without a unit circle pair gets the half turn
    gens3 = generator_set(field_create(3), 4)
    assert gens3.rotation is None and gens3.half_turn is not None
    gens5 = generator_set(field_create(5), 4)
    assert gens5.rotation is None and gens5.half_turn is not None
    # a unit circle pair displaces it
    gens7 = generator_set(field_create(7), 4)
    assert gens7.rotation is not None and gens7.half_turn is None
    # characteristic 2 never needs either
    gens2 = generator_set(field_create(2), 4)
    assert gens2.rotation is None and gens2.half_turn is None
    # small n: permutations only
    small = generator_set(field_create(3), 3)
    assert small.transvection is None and small.half_turn is None
    assert len(small.matrices()) == 2
    for ctx in all_fields():
        for M in generator_set(ctx, 5).matrices():
            assert M.is_orthogonal()


CLOSURES = [
    ("3", 4, 384),
    ("4", 4, 3840),
    ("5", 4, 384),
    ("2", 4, 48),
    ("3", 5, 103680),
]


@pytest.mark.parametrize("field,n,expected", CLOSURES)
def test_closure_orders(field, n, expected):
    from lcdkit import parse_field
    gens = generator_set(parse_field(field), n)
    order, complete = group_closure_order(gens)
    assert complete and order == expected


@pytest.mark.slow
@pytest.mark.parametrize("field,n,expected", [
    ("7", 4, 225792),
    ("8", 4, 258048),
    ("4", 5, 979200),
])
def test_closure_orders_large(field, n, expected):
    from lcdkit import parse_field
    gens = generator_set(parse_field(field), n)
    order, complete = group_closure_order(gens, cap=1 << 21)
    assert complete and order == expected


def test_closure_cap_semantics():
    gens = generator_set(field_create(5), 4)
    order, complete = group_closure_order(gens, cap=100)
    assert not complete and order == 100


def test_closure_members_are_orthogonal():
    # tiny case: walk the whole group and spot-check membership closure
    gens = generator_set(field_create(2), 3)
    order, complete = group_closure_order(gens)
    assert complete and order == 6     # permutations of 3 coordinates


def test_classical_orders():
    assert classical_orthogonal_order(5, 3) == 103680
    assert classical_orthogonal_order(4, 5) == 28800
    assert classical_orthogonal_order(4, 7) == 225792
    assert classical_orthogonal_order(4, 3) == 1152
    assert classical_orthogonal_order(1, 3) == 2
    assert classical_orthogonal_order(2, 5) == 8
    with pytest.raises(UnsupportedShape):
        classical_orthogonal_order(4, 4)
    with pytest.raises(DimensionTooSmall):
        classical_orthogonal_order(0, 3)


def test_classical_matches_bundled_table_for_odd_q():
    for (n, q), (_, o) in group_orders().items():
        if q % 2 == 1:
            assert classical_orthogonal_order(n, q) == o


def test_random_orthogonal_properties():
    F11 = field_create(11)
    gens = generator_set(F11, 6)
    seen = set()
    for seed in range(40):
        A = random_orthogonal(gens, 64, seed)
        assert A.is_orthogonal()
        seen.add(A)
    assert len(seen) > 30              # walks spread out
    assert random_orthogonal(gens, 64, 7) == random_orthogonal(gens, 64, 7)


def test_random_orthogonal_perm_only_group():
    # n = 3 over GF(3): generators are permutations, so walks stay there
    gens = generator_set(field_create(3), 3)
    A = random_orthogonal(gens, 50, 1)
    assert sorted(A.rows()) == sorted(
        MatrixFq.permutation(field_create(3),
                             [0, 1, 2]).rows()) or all(
        sum(1 for v in row if v) == 1 for row in A.rows())
