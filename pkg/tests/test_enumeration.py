import itertools
import pytest

from idealspace.enumeration import (
    MAX_EXHAUSTIVE_POINTS,
    SAMPLE_SEED,
    UniverseBounds,
    count_topologies,
    enumerate_ideals,
    enumerate_maps,
    enumerate_topologies,
    map_at,
)
from idealspace.errors import BoundTooLarge, InputError
from idealspace.setspace import full_mask, make_space


def axiom_filter(n):
    """Every family containing ∅ and X that is closed under pairwise ∪ and ∩."""
    full = full_mask(n)
    middle = list(range(1, full))
    out = []
    for bits in range(1 << len(middle)):
        fam = {0, full} | {s for i, s in enumerate(middle) if bits >> i & 1}
        if all(a | b in fam and a & b in fam for a in fam for b in fam):
            out.append(tuple(sorted(fam)))
    return sorted(out)


def ideal_family_filter(n):
    subsets = range(1 << n)
    count = 0
    for bits in range(1 << (1 << n)):
        fam = {s for s in subsets if bits >> s & 1}
        if 0 in fam and all(t in fam for s in fam for t in subsets if t & ~s == 0) and all(
            s | t in fam for s in fam for t in fam
        ):
            count += 1
    return count


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 4), (3, 29)])
def test_counts_match_axiom_filter(n, expected):
    got = [S.open_masks for S in enumerate_topologies(n)]
    assert len(got) == expected
    assert got == axiom_filter(n)


@pytest.mark.slow
def test_four_points_match_axiom_filter():
    got = [S.open_masks for S in enumerate_topologies(4)]
    assert len(got) == 355
    assert got == axiom_filter(4)


def test_five_points_count():
    assert count_topologies(5) == 6942


def test_every_enumerated_family_validates():
    for n in range(1, 5):
        for S in enumerate_topologies(n):
            assert make_space(n, S.open_masks) == S


def test_canonical_order_and_slicing():
    tops = enumerate_topologies(3)
    keys = [S.open_masks for S in tops]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    assert enumerate_topologies(3, 5, 9) == tops[5:9]
    assert tops[-1].open_masks == (0, 0b111)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_ideal_counts(n):
    ideals = enumerate_ideals(n)
    assert len(ideals) == 2**n == ideal_family_filter(n)
    assert [I.generator_mask for I in ideals] == list(range(2**n))


def test_ideal_count_four_points():
    assert len(enumerate_ideals(4)) == 16


def test_maps():
    maps = list(enumerate_maps(2, 3))
    assert len(maps) == 9
    assert maps == sorted(maps)
    assert maps == list(itertools.product(range(3), repeat=2))
    for nx, ny in [(1, 1), (2, 3), (3, 2), (3, 3)]:
        for i, f in enumerate(enumerate_maps(nx, ny)):
            assert map_at(i, nx, ny) == f


def test_bounds():
    assert UniverseBounds.square(3) == UniverseBounds(3, 3)
    with pytest.raises(BoundTooLarge):
        UniverseBounds(6, 3)
    UniverseBounds(9, 9, sample_budget=100)
    with pytest.raises(InputError):
        UniverseBounds(0, 2)
    with pytest.raises(BoundTooLarge):
        enumerate_topologies(MAX_EXHAUSTIVE_POINTS + 1)
    d = UniverseBounds(2, 3, sample_budget=5).to_dict()
    assert d["seed"] == SAMPLE_SEED
    assert UniverseBounds(2, 3).to_dict()["seed"] is None


def test_enumeration_is_deterministic():
    from idealspace.enumeration import _nbhd_tables, _opens_from_nbhds

    fresh = sorted(_opens_from_nbhds(t) for t in _nbhd_tables(4))
    assert fresh == [S.open_masks for S in enumerate_topologies(4)]
