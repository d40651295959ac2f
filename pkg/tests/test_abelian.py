from __future__ import annotations

import random
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rgood.abelian import AbelianInvariants, h1_invariants, smith_normal_form, tensor_vanishes
from rgood.presentations import presentation
from rgood.rings import Integers, LocalizedIntegers, PrimeField, Rationals, parse_ring


def matmul(x, y):
    return [[sum(x[i][k] * y[k][j] for k in range(len(y))) for j in range(len(y[0]))] for i in range(len(x))]


def det(m):
    # Bareiss-free cofactor expansion: fine for the <= 5x5 sizes used here
    if not m:
        return 1
    return sum((-1) ** j * m[0][j] * det([row[:j] + row[j + 1 :] for row in m[1:]]) for j in range(len(m)))


def padded(diag, rows, cols):
    return [[diag[i] if i == j and i < len(diag) else 0 for j in range(cols)] for i in range(rows)]


def check_snf(m, ncols=None):
    res = smith_normal_form(m, ncols)
    rows = len(m)
    cols = len(m[0]) if m else ncols
    assert len(res.diagonal) == min(rows, cols)
    if rows and cols:
        assert matmul(matmul(res.left_transform, m), res.right_transform) == padded(res.diagonal, rows, cols)
    assert abs(det(res.left_transform)) == 1
    assert abs(det(res.right_transform)) == 1
    nonzero = [d for d in res.diagonal if d]
    assert all(d > 0 for d in nonzero)
    assert res.diagonal[: len(nonzero)] == tuple(nonzero)  # zeros trail
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    return res


def test_identity():
    assert check_snf([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).diagonal == (1, 1, 1)


def test_two_by_two_against_gcd_and_determinant():
    m = [[2, 4], [6, 8]]
    d1 = gcd(*[x for row in m for x in row])
    d2 = abs(det(m)) // d1
    assert (d1, d2) == (2, 4)
    assert check_snf(m).diagonal == (d1, d2)


def test_zero_matrix():
    assert check_snf([[0, 0, 0], [0, 0, 0]]).diagonal == (0, 0)


def test_empty_matrices():
    res = smith_normal_form([], ncols=3)
    assert res.diagonal == ()
    assert res.right_transform == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert smith_normal_form([[]]).diagonal == ()


def test_needs_divisibility_fix():
    # diag(2, 3) is not in normal form: gcd 1, product 6
    assert check_snf([[2, 0], [0, 3]]).diagonal == (1, 6)


def test_deterministic():
    m = [[3, -7, 2], [5, 1, -4]]
    a, b = smith_normal_form(m), smith_normal_form(m)
    assert (a.diagonal, a.left_transform, a.right_transform) == (b.diagonal, b.left_transform, b.right_transform)


def test_random_reconstruction():
    rng = random.Random(20261016)
    for _ in range(200):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        check_snf([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)])


@given(
    st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=1, max_size=4)
    ),
    st.randoms(use_true_random=False),
)
def test_diagonal_invariant_under_permutation(m, rnd):
    rows = m[:]
    rnd.shuffle(rows)
    perm = list(range(len(m[0])))
    rnd.shuffle(perm)
    shuffled = [[row[j] for j in perm] for row in rows]
    assert smith_normal_form(shuffled).diagonal == smith_normal_form(m).diagonal


def test_h1_examples():
    assert h1_invariants(presentation("a b")) == AbelianInvariants(2)
    assert h1_invariants(presentation("a", "a^2")) == AbelianInvariants(0, (2,))
    assert h1_invariants(presentation("a b", "a b a b^-1")) == AbelianInvariants(1, (2,))
    assert h1_invariants(presentation("a b", "a^2 b^4", "a^6 b^8")) == AbelianInvariants(0, (2, 4))


@pytest.mark.parametrize("k", range(0, 7))
def test_h1_free_group(k):
    assert h1_invariants(presentation([f"x{i}" for i in range(k)])) == AbelianInvariants(k)


def test_invariants_validation():
    with pytest.raises(ValueError):
        AbelianInvariants(0, (2, 3))
    with pytest.raises(ValueError):
        AbelianInvariants(0, (1,))
    assert str(AbelianInvariants(2, (2, 6))) == "Z^2 + Z/2 + Z/6"
    assert str(AbelianInvariants(0)) == "0"


def test_tensor_vanishes_examples():
    z2 = AbelianInvariants(0, (2,))
    assert tensor_vanishes(z2, parse_ring("Z[1/2]"))
    assert tensor_vanishes(z2, parse_ring("Z/3"))
    assert not tensor_vanishes(z2, parse_ring("Z/2"))
    assert not tensor_vanishes(z2, Integers())
    assert not tensor_vanishes(AbelianInvariants(2), Rationals())
    assert tensor_vanishes(AbelianInvariants(0, (6,)), LocalizedIntegers(frozenset({2, 3})))
    assert not tensor_vanishes(AbelianInvariants(0, (6,)), LocalizedIntegers(frozenset({2})))
    assert not tensor_vanishes(AbelianInvariants(1), PrimeField(5))


invariants = st.builds(
    lambda rank, ds: AbelianInvariants(rank, tuple(_chain(ds))),
    st.integers(0, 3),
    st.lists(st.integers(2, 12), max_size=3),
)


def _chain(ds):
    out, acc = [], 1
    for d in ds:
        acc *= d
        out.append(acc)
    return out


@given(invariants)
def test_tensor_with_q_and_z(inv):
    assert tensor_vanishes(inv, Rationals()) == (inv.free_rank == 0)
    assert tensor_vanishes(inv, Integers()) == inv.is_trivial
