"""Deligne-Simpson decisions for Coxeter-type connections on the line.

One irregular point with canonical form p(omega^{-1}) of slope r/n, one
regular-singular point with prescribed adjoint orbit: nonemptiness, the
rigidity dimension, and the rigid/not-rigid lookup for homogeneous types of
the classical families and E7.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from . import linalg
from .core import OrbitSpec, Scalar, ScalarLike, min_partition_with_r_parts, orbit_dim
from .errors import InputError, ResonantError
from .formal import CoxeterFormalType


@dataclass(frozen=True)
class CharPolySpec:
    """A characteristic polynomial prod (x - c_i)^{m_i} whose roots are
    pairwise distinct modulo Z."""

    pairs: tuple[tuple[Scalar, int], ...]

    def __init__(self, pairs: Iterable[tuple[ScalarLike, int]]):
        items = sorted(
            ((Scalar.of(c), int(m)) for c, m in pairs),
            key=lambda cm: cm[0].sort_key(),
        )
        if not items:
            raise InputError("characteristic polynomial needs at least one root")
        if any(m < 1 for _, m in items):
            raise InputError("root multiplicities must be >= 1")
        for i in range(len(items)):
            for j in range(i + 1, len(items)):
                if (items[i][0] - items[j][0]).is_integer():
                    raise ResonantError(
                        "roots must be pairwise distinct modulo Z: "
                        f"{items[i][0]} and {items[j][0]} are congruent"
                    )
        object.__setattr__(self, "pairs", tuple(items))

    @property
    def n(self) -> int:
        return sum(m for _, m in self.pairs)

    @classmethod
    def from_orbit(cls, o: OrbitSpec) -> "CharPolySpec":
        return cls((e, o.multiplicity(e)) for e in o.eigenvalues())


def ds_generator(r: int, q: CharPolySpec) -> OrbitSpec:
    """The dominance-least orbit with characteristic polynomial q among those
    with at most r Jordan blocks per eigenvalue: each root c_i of multiplicity
    m_i gets the most balanced partition of m_i into min(r, m_i) parts."""
    if r < 1:
        raise InputError(f"need r >= 1, got {r}")
    return OrbitSpec(
        q.n, [(c, min_partition_with_r_parts(r, m)) for c, m in q.pairs]
    )


def coxeter_ds_decide(ftype: CoxeterFormalType, o: OrbitSpec) -> bool:
    """Nonemptiness for (formal type, orbit): the residue-trace condition
    n p(0) + Tr(O) = 0 together with O dominating ds_generator of its own
    characteristic polynomial, i.e. at most r Jordan blocks per eigenvalue."""
    if o.n != ftype.n:
        raise InputError(
            f"orbit lives in gl_{o.n} but the formal type has n = {ftype.n}"
        )
    if not o.is_nonresonant():
        raise ResonantError(
            "orbit eigenvalues must be pairwise distinct modulo Z"
        )
    if ftype.n * ftype.p0 + o.trace() != 0:
        return False
    return all(len(part) <= ftype.r for _, part in o.blocks)


def _check_unipotent_filter(n: int, r: int, o: OrbitSpec) -> None:
    if n < 1 or r < 1:
        raise InputError("need n >= 1 and r >= 1")
    if o.n != n:
        raise InputError(f"orbit lives in gl_{o.n}, expected gl_{n}")
    if not o.is_nilpotent():
        raise InputError("orbit must be nilpotent")
    if o.block_count(0) > r:
        raise InputError(
            f"orbit has {o.block_count(0)} Jordan blocks, outside the "
            f"<= {r} filter"
        )


def h1_dimension(n: int, r: int, o: OrbitSpec) -> int:
    """dim H^1 = dim(O) + (r - n - 1)(n - 1) for a nilpotent orbit with at
    most r blocks (slope r/n in lowest terms)."""
    _check_unipotent_filter(n, r, o)
    if gcd(r, n) != 1:
        raise InputError(f"need gcd(r, n) = 1, got r={r}, n={n}")
    val = orbit_dim(o) + (r - n - 1) * (n - 1)
    assert val >= 0, "the rigidity dimension is never negative on the filter"
    return val


def is_rigid_coxeter_gl(n: int, r: int, o: OrbitSpec) -> bool:
    """Rigidity in the unipotent-monodromy regime: true exactly when O is the
    minimal orbit with <= r blocks and r divides n - 1 or n + 1."""
    _check_unipotent_filter(n, r, o)
    minimal = OrbitSpec(n, [(0, min_partition_with_r_parts(r, n))])
    return o == minimal and ((n - 1) % r == 0 or (n + 1) % r == 0)


_FAMILIES = ("A", "B", "C", "D", "E7")
_MIN_RANK = {"A": 2, "B": 2, "C": 2, "D": 3, "E7": 7}


@dataclass(frozen=True)
class SimpleTypeQuery:
    """Row key for the homogeneous rigidity table: family, the rank parameter
    as the table prints it (family A_{n-1} is keyed by the matrix size n),
    and the slope numerator r."""

    family: str
    rank: int
    r: int

    def __init__(self, family: str, rank: int, r: int):
        fam = str(family).upper()
        if fam not in _FAMILIES:
            raise InputError(
                f"unknown family {family!r}; expected one of {_FAMILIES}"
            )
        rank = int(rank)
        r = int(r)
        if fam == "E7":
            if rank != 7:
                raise InputError("family E7 has rank 7")
        elif rank < _MIN_RANK[fam]:
            raise InputError(f"family {fam} needs rank >= {_MIN_RANK[fam]}")
        if r < 1:
            raise InputError(f"need r >= 1, got {r}")
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "r", r)

    def coxeter_number(self) -> int:
        n = self.rank
        return {"A": n, "B": 2 * n, "C": 2 * n, "D": 2 * n - 2, "E7": 18}[
            self.family
        ]


def rigid_table_simple_type(qy: SimpleTypeQuery, conjunction: bool = False) -> bool:
    """Rigidity of the homogeneous type of slope r/h: true when r = 1 or
    r = h + 1, false outside 1 <= r <= h + 1, and by the family row in
    between.  The comma-separated divisibility rows (families B and D) are
    read as a disjunction by default; conjunction=True reads them as AND.
    """
    h = qy.coxeter_number()
    r = qy.r
    if gcd(r, h) != 1:
        raise InputError(
            f"slope numerator must be coprime to the Coxeter number: "
            f"gcd({r}, {h}) != 1"
        )
    if r == 1 or r == h + 1:
        return True
    if not 1 < r < h:
        return False
    n = qy.rank
    if qy.family == "A":
        return (n - 1) % r == 0 or (n + 1) % r == 0
    if qy.family == "C":
        return (2 * n - 1) % r == 0 or (2 * n + 1) % r == 0
    if qy.family == "E7":
        return r == 7
    if qy.family == "B":
        conds = ((n + 1) % r == 0, (2 * n + 1) % r == 0)
    else:  # D
        conds = ((2 * n) % r == 0, (2 * n - 1) % r == 0)
    return all(conds) if conjunction else any(conds)


def residue_representative(n: int, r: int) -> linalg.Matrix:
    """The residue term of the homogeneous form omega^{-r} dz/z: ones on the
    r-th subdiagonal (the zero matrix once r >= n).  Its Jordan type is the
    balanced partition min_partition_with_r_parts(r, n)."""
    if n < 1 or r < 1:
        raise InputError("need n >= 1 and r >= 1")
    m = linalg.zeros(n, n)
    for i in range(n - r):
        m[i + r][i] = Scalar(1)
    return m
