from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dskit import linalg
from dskit.core import (
    OrbitSpec,
    Scalar,
    as_partition,
    dominance_leq,
    dual_partition,
    min_partition_with_r_parts,
    orbit_dim,
    partitions_of,
    rank_after_factors,
    weight,
)
from dskit.errors import InputError


# ---------------------------------------------------------------------------
# Scalar
# ---------------------------------------------------------------------------


def test_scalar_arithmetic():
    a = Scalar(Fraction(1, 2), Fraction(1, 3))
    b = Scalar(Fraction(-1, 2), Fraction(2, 3))
    assert a + b == Scalar(0, 1)
    assert a - a == 0
    assert a * Scalar(0, 1) == Scalar(Fraction(-1, 3), Fraction(1, 2))
    assert (a / a) == 1
    assert -a == Scalar(Fraction(-1, 2), Fraction(-1, 3))
    assert 1 / Scalar(0, 1) == Scalar(0, -1)


def test_scalar_equality_with_rationals():
    assert Scalar(Fraction(3, 1)) == 3
    assert Scalar(Fraction(1, 2)) == Fraction(1, 2)
    assert Scalar(0, 1) != 0
    assert hash(Scalar(3)) == hash(3)
    assert hash(Scalar(Fraction(1, 2))) == hash(Fraction(1, 2))


def test_scalar_bool_and_predicates():
    assert not Scalar(0)
    assert Scalar(0, 1)
    assert Scalar(2).is_integer()
    assert not Scalar(Fraction(1, 2)).is_integer()
    assert not Scalar(0, 1).is_rational()
    assert Scalar(5).differs_by_nonzero_int(Scalar(3))
    assert not Scalar(5).differs_by_nonzero_int(Scalar(5))
    assert not Scalar(Fraction(1, 2)).differs_by_nonzero_int(Scalar(0))
    # same imaginary part, integral real difference
    assert Scalar(1, Fraction(1, 3)).differs_by_nonzero_int(Scalar(0, Fraction(1, 3)))
    assert not Scalar(1, Fraction(1, 3)).differs_by_nonzero_int(Scalar(1, Fraction(2, 3)))


@pytest.mark.parametrize(
    "text,expected",
    [
        ("3", Scalar(3)),
        ("-1/2", Scalar(Fraction(-1, 2))),
        ("i", Scalar(0, 1)),
        ("-i", Scalar(0, -1)),
        ("2-i", Scalar(2, -1)),
        ("1/2+3/4i", Scalar(Fraction(1, 2), Fraction(3, 4))),
        ("0", Scalar(0)),
    ],
)
def test_scalar_parse(text, expected):
    assert Scalar.parse(text) == expected


def test_scalar_parse_rejects_garbage():
    for bad in ("", "one", "1+", "i2", "1//2"):
        with pytest.raises(InputError):
            Scalar.parse(bad)


def test_scalar_str_roundtrip():
    vals = [
        Scalar(3),
        Scalar(Fraction(-1, 2)),
        Scalar(0, 1),
        Scalar(0, -1),
        Scalar(2, -1),
        Scalar(Fraction(1, 2), Fraction(3, 4)),
        Scalar(Fraction(-1, 3), Fraction(-2, 5)),
    ]
    for v in vals:
        assert Scalar.parse(str(v)) == v


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------


def test_as_partition_validates():
    assert as_partition([3, 2, 1]) == (3, 2, 1)
    assert as_partition((4,)) == (4,)
    with pytest.raises(InputError):
        as_partition([1, 3, 2])  # must be weakly decreasing
    with pytest.raises(InputError):
        as_partition([2, 0])
    with pytest.raises(InputError):
        as_partition([-1])


def test_dual_partition():
    assert dual_partition((3, 2)) == (2, 2, 1)
    assert dual_partition((2, 2, 1)) == (3, 2)
    assert dual_partition((5,)) == (1, 1, 1, 1, 1)
    assert dual_partition(()) == ()


@given(st.lists(st.integers(min_value=1, max_value=9), min_size=1, max_size=7))
def test_dual_is_an_involution(parts):
    p = as_partition(sorted(parts, reverse=True))
    assert dual_partition(dual_partition(p)) == p
    assert weight(dual_partition(p)) == weight(p)


def test_dominance_basic():
    assert dominance_leq((2, 2), (3, 1))
    assert dominance_leq((1, 1, 1, 1), (4,))
    assert not dominance_leq((3, 1), (2, 2))
    assert dominance_leq((3, 1), (3, 1))
    with pytest.raises(InputError):
        dominance_leq((2,), (1, 1, 1))


def test_dominance_reverses_under_duality():
    parts = list(partitions_of(6))
    for p in parts:
        for q in parts:
            assert dominance_leq(p, q) == dominance_leq(dual_partition(q), dual_partition(p))


def test_min_partition_with_r_parts():
    assert min_partition_with_r_parts(1, 7) == (7,)
    assert min_partition_with_r_parts(3, 7) == (3, 2, 2)
    assert min_partition_with_r_parts(7, 7) == (1,) * 7
    assert min_partition_with_r_parts(9, 7) == (1,) * 7
    assert min_partition_with_r_parts(2, 5) == (3, 2)


def test_min_partition_is_dominance_least_with_few_parts():
    for m in range(1, 9):
        for r in range(1, m + 2):
            rho = min_partition_with_r_parts(r, m)
            assert len(rho) == min(r, m)
            for q in partitions_of(m):
                if len(q) <= r:
                    assert dominance_leq(rho, q)


def test_partitions_of_count_and_order():
    # p(0..9) = 1 1 2 3 5 7 11 15 22 30
    counts = [len(list(partitions_of(m))) for m in range(10)]
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions_of(5, max_part=2)) == [(2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]


# ---------------------------------------------------------------------------
# OrbitSpec
# ---------------------------------------------------------------------------


def test_orbit_validation():
    with pytest.raises(InputError):
        OrbitSpec(0, [])
    with pytest.raises(InputError):
        OrbitSpec(2, [(0, (1,))])  # weights must sum to n
    with pytest.raises(InputError):
        OrbitSpec(2, [(0, (1,)), (0, (1,))])  # duplicate eigenvalue
    o = OrbitSpec(3, [(1, (2,)), (0, (1,))])
    assert o.eigenvalues() == (Scalar(0), Scalar(1))  # sorted


def test_orbit_invariants():
    o = OrbitSpec(4, [(Fraction(1, 2), (2, 1)), (-1, (1,))])
    assert o.trace() == Scalar(Fraction(1, 2)) * 3 + Scalar(-1)
    assert o.determinant() == Scalar(Fraction(1, 8)) * Scalar(-1)
    assert o.multiplicity(Fraction(1, 2)) == 3
    assert o.max_block(Fraction(1, 2)) == 2
    assert o.block_count(Fraction(1, 2)) == 2
    assert o.min_poly_degree() == 3
    assert not o.is_scalar()
    assert not o.is_nilpotent()


def test_orbit_scalar_and_nilpotent():
    assert OrbitSpec(3, [(5, (1, 1, 1))]).is_scalar()
    assert not OrbitSpec(3, [(5, (2, 1))]).is_scalar()
    assert OrbitSpec(3, [(0, (2, 1))]).is_nilpotent()
    assert not OrbitSpec(3, [(1, (2, 1))]).is_nilpotent()


def test_orbit_nonresonance():
    assert OrbitSpec(2, [(0, (1,)), (Fraction(1, 2), (1,))]).is_nonresonant()
    assert not OrbitSpec(2, [(0, (1,)), (1, (1,))]).is_nonresonant()
    assert OrbitSpec(2, [(Scalar(0, 1), (1,)), (Scalar(0, -1), (1,))]).is_nonresonant()


def test_orbit_translate_negate():
    o = OrbitSpec(3, [(1, (2,)), (0, (1,))])
    t = o.translated(Fraction(1, 2))
    assert t.eigenvalues() == (Scalar(Fraction(1, 2)), Scalar(Fraction(3, 2)))
    assert t.partition_for(Fraction(3, 2)) == (2,)
    n = o.negated()
    assert n.eigenvalues() == (Scalar(-1), Scalar(0))
    assert n.partition_for(-1) == (2,)


def test_default_factor_sequence_properties():
    o = OrbitSpec(5, [(0, (3, 1)), (2, (1,))])
    seq = o.default_factor_sequence()
    # one factor per step of the longest block, hitting each eigenvalue
    assert len(seq) == o.min_poly_degree()
    assert set(seq) == set(o.eigenvalues())
    o.validate_factor_sequence(seq)
    with pytest.raises(InputError):
        o.validate_factor_sequence(seq[:-1])


# ---------------------------------------------------------------------------
# rank_after_factors against a matrix oracle
# ---------------------------------------------------------------------------


def _rank_oracle(o: OrbitSpec, seq, j: int) -> int:
    """Multiply (J - eta_1) ... (J - eta_j) for the actual Jordan matrix."""
    jm = linalg.jordan_matrix(o)
    n = o.n
    acc = linalg.identity(n)
    for eta in seq[:j]:
        shifted = linalg.mat_sub(jm, linalg.mat_scale(Scalar.of(eta), linalg.identity(n)))
        acc = linalg.mat_mul(acc, shifted)
    return linalg.rank(acc)


def test_rank_after_factors_matches_matrix_oracle():
    cases = [
        OrbitSpec(3, [(0, (2, 1))]),
        OrbitSpec(3, [(0, (2,)), (1, (1,))]),
        OrbitSpec(4, [(0, (2, 2))]),
        OrbitSpec(4, [(Fraction(1, 2), (2, 1)), (-1, (1,))]),
        OrbitSpec(5, [(0, (3, 1)), (2, (1,))]),
        OrbitSpec(2, [(1, (1,)), (3, (1,))]),
    ]
    for o in cases:
        seq = o.default_factor_sequence()
        for j in range(len(seq) + 1):
            assert rank_after_factors(o, seq, j) == _rank_oracle(o, seq, j), (o, j)


def test_rank_after_factors_zero_at_full_length():
    o = OrbitSpec(4, [(0, (2, 1)), (1, (1,))])
    seq = o.default_factor_sequence()
    assert rank_after_factors(o, seq, len(seq)) == 0


# ---------------------------------------------------------------------------
# orbit_dim
# ---------------------------------------------------------------------------


def test_orbit_dim_known_values():
    # regular semisimple in gl_n: n^2 - n
    assert orbit_dim(OrbitSpec(2, [(0, (1,)), (Fraction(1, 2), (1,))])) == 2
    assert orbit_dim(OrbitSpec(3, [(0, (1,)), (1, (1,)), (2, (1,))])) == 6
    # regular nilpotent: n^2 - n
    assert orbit_dim(OrbitSpec(4, [(0, (4,))])) == 12
    # scalar: 0
    assert orbit_dim(OrbitSpec(3, [(7, (1, 1, 1))])) == 0
    # minimal nilpotent in gl_n: 2n - 2
    assert orbit_dim(OrbitSpec(4, [(0, (2, 1, 1))])) == 6


def _centralizer_dim(o: OrbitSpec) -> int:
    x = linalg.jordan_matrix(o)
    n = o.n
    ad = linalg.mat_sub(
        linalg.kron(x, linalg.identity(n)),
        linalg.kron(linalg.identity(n), linalg.transpose(x)),
    )
    return len(linalg.nullspace(ad))


def test_orbit_dim_matches_ad_kernel():
    cases = [
        OrbitSpec(2, [(0, (2,))]),
        OrbitSpec(3, [(0, (2, 1))]),
        OrbitSpec(3, [(0, (2,)), (Fraction(1, 3), (1,))]),
        OrbitSpec(4, [(0, (2, 2))]),
        OrbitSpec(4, [(0, (3, 1))]),
        OrbitSpec(4, [(1, (2,)), (2, (1, 1))]),
    ]
    for o in cases:
        assert orbit_dim(o) == o.n * o.n - _centralizer_dim(o), o
