import itertools

import pytest
from hypothesis import given

from idealspace import naive
from idealspace.errors import (
    CarrierMismatch,
    EmptyCarrier,
    MissingEmpty,
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    NotDownClosed,
    NotUnionClosed,
    PointOutOfRange,
)
from idealspace.setspace import (
    Ideal,
    PointSet,
    closure,
    full_mask,
    ideal_contains,
    interior,
    make_ideal,
    make_space,
    mask_members,
    mask_of,
    minimal_nbhd,
    trivial_ideal,
)

from .conftest import A, B, C, small_universe, spaces


def test_mask_helpers_round_trip():
    for m in range(64):
        assert mask_of(mask_members(m)) == m
    assert full_mask(0) == 0
    assert full_mask(3) == 0b111


def test_pointset_algebra():
    s = PointSet.of(3, [0, 2])
    t = PointSet.of(3, [1, 2])
    assert (s | t).mask == 0b111
    assert (s & t).members == (2,)
    assert (s - t).members == (0,)
    assert (~s).members == (1,)
    assert 0 in s and 1 not in s
    assert len(s) == 2
    assert PointSet.empty(3) <= s <= PointSet.full(3)
    assert not PointSet.empty(3)


def test_pointset_rejects_foreign_points():
    with pytest.raises(PointOutOfRange):
        PointSet(2, 0b100)
    with pytest.raises(PointOutOfRange):
        PointSet.of(2, [5])
    with pytest.raises(CarrierMismatch):
        PointSet(2, 1) | PointSet(3, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_de_morgan_exhaustive(n):
    full = PointSet.full(n)
    for a, b in itertools.product(range(1 << n), repeat=2):
        s, t = PointSet(n, a), PointSet(n, b)
        assert full - (s | t) == (full - s) & (full - t)
        assert full - (s & t) == (full - s) | (full - t)


def test_x2_closure_and_min_nbhd(x2):
    assert closure(x2, PointSet.of(2, [0])).members == (0,)
    assert minimal_nbhd(x2, 0).mask == 0b11
    assert minimal_nbhd(x2, 1).mask == 0b10


def test_y3_interior_and_min_nbhd(y3):
    assert interior(y3, PointSet(3, A | C)).mask == A
    assert interior(y3, PointSet(3, C)).mask == 0
    assert minimal_nbhd(y3, 0).mask == A
    assert minimal_nbhd(y3, 2).mask == 0b111


def test_y3_closure_of_a(y3):
    assert closure(y3, PointSet(3, A)).mask == A | C


def test_min_nbhd_out_of_range(y3):
    with pytest.raises(PointOutOfRange):
        minimal_nbhd(y3, 3)


def test_closure_interior_match_quantifier_oracle():
    for S, _, a in small_universe(3):
        assert S.cl(a) == naive.closure(S, a)
        assert S.int_(a) == naive.interior(S, a)


def test_min_nbhd_is_intersection_of_all_nbhds():
    for S, _, _ in small_universe(2):
        for x in range(S.n):
            inter = S.full
            for u in naive.nbhds(S, x):
                inter &= u
            assert S.min_nbhd_masks[x] == inter


@given(spaces())
def test_kuratowski_axioms(S):
    for a in range(1 << S.n):
        c = S.cl(a)
        assert a & ~c == 0
        assert S.cl(c) == c
        assert S.is_closed(c)
        assert S.int_(a) == S.full & ~S.cl(S.full & ~a)
    assert S.cl(0) == 0
    for a, b in itertools.product(range(1 << S.n), repeat=2):
        assert S.cl(a | b) == S.cl(a) | S.cl(b)


class TestMakeSpaceErrors:
    def test_empty_carrier(self):
        with pytest.raises(EmptyCarrier):
            make_space(0, [[]])

    def test_missing_full(self):
        with pytest.raises(MissingEmptyOrFull):
            make_space(2, [[], [0]])

    def test_missing_empty(self):
        with pytest.raises(MissingEmptyOrFull):
            make_space(2, [[0], [0, 1]])

    def test_union(self):
        with pytest.raises(NotClosedUnderUnion) as ei:
            make_space(3, [[], [0], [1], [0, 1, 2]])
        assert ei.value.to_dict()["code"] == "NotClosedUnderUnion"

    def test_intersection(self):
        with pytest.raises(NotClosedUnderIntersection):
            make_space(3, [[], [0, 1], [1, 2], [0, 1, 2]])

    def test_point_out_of_range(self):
        with pytest.raises(PointOutOfRange):
            make_space(2, [[], [3], [0, 1]])

    def test_duplicates_are_dropped(self):
        S = make_space(2, [[], [1], [1], [0, 1]])
        assert S.open_masks == (0, 0b10, 0b11)


def test_space_equality_ignores_labels(y3):
    assert y3 == y3.relabel(None)
    assert hash(y3) == hash(y3.relabel(["p", "q", "r"]))


class TestIdeals:
    def test_family_collapses_to_generator(self):
        I = make_ideal(3, family=[[], [0], [2], [0, 2]])
        assert I == Ideal(3, A | C)

    def test_missing_empty(self):
        with pytest.raises(MissingEmpty):
            make_ideal(2, family=[[0]])

    def test_not_down_closed(self):
        with pytest.raises(NotDownClosed):
            make_ideal(2, family=[[], [0, 1]])

    def test_not_union_closed(self):
        with pytest.raises(NotUnionClosed):
            make_ideal(2, family=[[], [0], [1]])

    def test_members_equal_powerset_of_generator(self):
        for n in range(1, 5):
            for g in range(1 << n):
                I = Ideal(n, g)
                assert frozenset(I.member_masks()) == naive.members_of(I)
                assert list(I.member_masks()) == sorted(I.member_masks())

    def test_every_ideal_family_is_principal(self):
        # brute force over all families of subsets of a 3-point carrier
        n = 3
        subsets = range(1 << n)
        for bits in range(1 << (1 << n)):
            fam = [s for s in subsets if bits >> s & 1]
            ok = (
                0 in fam
                and all(t in fam for s in fam for t in subsets if t & ~s == 0)
                and all(s | t in fam for s in fam for t in fam)
            )
            if not ok:
                continue
            g = 0
            for s in fam:
                g |= s
            assert set(fam) == set(Ideal(n, g).member_masks())

    def test_contains(self):
        I = Ideal(3, A | B)
        assert ideal_contains(I, PointSet(3, B))
        assert not ideal_contains(I, PointSet(3, C))
        with pytest.raises(CarrierMismatch):
            ideal_contains(I, PointSet(2, 1))
        assert trivial_ideal(3).is_trivial
