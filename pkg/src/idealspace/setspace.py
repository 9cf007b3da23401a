"""Point sets, finite topological spaces and ideals.

Points of an ``n``-point carrier are the indices ``0..n-1``. A set of points
is stored as an integer bit mask (bit ``i`` set iff point ``i`` is a member);
:class:`PointSet` wraps a mask together with the carrier size so carrier
mismatches are caught at the API boundary. Inner loops in the operator and
verification modules work on raw masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import (
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


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_members(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(points: Iterable[int]) -> int:
    mask = 0
    for p in points:
        mask |= 1 << p
    return mask


@dataclass(frozen=True, slots=True)
class PointSet:
    """A subset of the carrier ``{0, ..., carrier_size - 1}``."""

    carrier_size: int
    mask: int = 0

    def __post_init__(self):
        if self.carrier_size < 0:
            raise EmptyCarrier(f"carrier size must be non-negative, got {self.carrier_size}")
        if self.mask < 0 or self.mask >> self.carrier_size:
            raise PointOutOfRange(
                f"mask {self.mask:#b} references points outside a {self.carrier_size}-point carrier"
            )

    @classmethod
    def of(cls, carrier_size: int, points: Iterable[int] = ()) -> "PointSet":
        points = list(points)
        for p in points:
            if not 0 <= p < carrier_size:
                raise PointOutOfRange(f"point {p} outside carrier of size {carrier_size}", point=p)
        return cls(carrier_size, mask_of(points))

    @classmethod
    def empty(cls, carrier_size: int) -> "PointSet":
        return cls(carrier_size, 0)

    @classmethod
    def full(cls, carrier_size: int) -> "PointSet":
        return cls(carrier_size, full_mask(carrier_size))

    @property
    def members(self) -> tuple[int, ...]:
        return mask_members(self.mask)

    def _check(self, other: "PointSet") -> None:
        if self.carrier_size != other.carrier_size:
            raise CarrierMismatch(
                f"carrier sizes differ: {self.carrier_size} vs {other.carrier_size}"
            )

    def __contains__(self, point: int) -> bool:
        return 0 <= point < self.carrier_size and bool(self.mask >> point & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.carrier_size, self.mask | other.mask)

    def __and__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.carrier_size, self.mask & other.mask)

    def __sub__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.carrier_size, self.mask & ~other.mask)

    def __invert__(self) -> "PointSet":
        return PointSet(self.carrier_size, full_mask(self.carrier_size) & ~self.mask)

    def complement(self) -> "PointSet":
        return ~self

    def issubset(self, other: "PointSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __le__(self, other: "PointSet") -> bool:
        return self.issubset(other)

    def __ge__(self, other: "PointSet") -> bool:
        return other.issubset(self)

    def __repr__(self) -> str:
        return f"PointSet({self.carrier_size}, {set(self.members) or '{}'})"


class FiniteSpace:
    """A validated topology on ``{0, ..., n-1}``.

    Instances are immutable. The constructor trusts its input; use
    :func:`make_space` to build one from an unchecked family of sets.
    """

    def __init__(self, n: int, open_masks: Iterable[int], labels: Sequence[str] | None = None):
        self.n = n
        self.open_masks: tuple[int, ...] = tuple(sorted(set(open_masks)))
        self._open_lookup = frozenset(self.open_masks)
        full = full_mask(n)
        nbhd = []
        for x in range(n):
            m = full
            bit = 1 << x
            for o in self.open_masks:
                if o & bit:
                    m &= o
            nbhd.append(m)
        self.min_nbhd_masks: tuple[int, ...] = tuple(nbhd)
        self.labels: tuple[str, ...] | None = tuple(labels) if labels is not None else None

    @property
    def carrier_size(self) -> int:
        return self.n

    @property
    def full(self) -> int:
        return full_mask(self.n)

    @property
    def opens(self) -> tuple[PointSet, ...]:
        return tuple(PointSet(self.n, m) for m in self.open_masks)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        full = self.full
        return tuple(sorted(full & ~o for o in self.open_masks))

    @property
    def closeds(self) -> tuple[PointSet, ...]:
        return tuple(PointSet(self.n, m) for m in self.closed_masks)

    def is_open(self, mask: int) -> bool:
        return mask in self._open_lookup

    def is_closed(self, mask: int) -> bool:
        return (self.full & ~mask) in self._open_lookup

    def cl(self, mask: int) -> int:
        """Closure of a mask: the points whose minimal neighbourhood meets it."""
        out = 0
        for x, u in enumerate(self.min_nbhd_masks):
            if u & mask:
                out |= 1 << x
        return out

    def int_(self, mask: int) -> int:
        """Interior of a mask: the points whose minimal neighbourhood lies inside it."""
        out = 0
        for x, u in enumerate(self.min_nbhd_masks):
            if u & ~mask == 0:
                out |= 1 << x
        return out

    @cached_property
    def closed_nbhd_masks(self) -> tuple[int, ...]:
        """``Cl(U_x)`` for every point ``x``."""
        return tuple(self.cl(u) for u in self.min_nbhd_masks)

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def relabel(self, labels: Sequence[str] | None) -> "FiniteSpace":
        return FiniteSpace(self.n, self.open_masks, labels)

    def key(self) -> tuple[int, tuple[int, ...]]:
        return (self.n, self.open_masks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteSpace):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        fam = ", ".join("{" + ",".join(self.label(i) for i in mask_members(m)) + "}" for m in self.open_masks)
        return f"FiniteSpace(n={self.n}, opens=[{fam}])"


@dataclass(frozen=True, slots=True)
class Ideal:
    """The ideal ``P(generator)`` on an ``carrier_size``-point carrier.

    On a finite carrier every ideal is principal, so the generator (the union
    of all members) determines it.
    """

    carrier_size: int
    generator_mask: int = 0

    @property
    def generator(self) -> PointSet:
        return PointSet(self.carrier_size, self.generator_mask)

    def contains_mask(self, mask: int) -> bool:
        return mask & ~self.generator_mask == 0

    def member_masks(self) -> Iterator[int]:
        """All members, i.e. all submasks of the generator, in increasing order."""
        g = self.generator_mask
        sub = 0
        while True:
            yield sub
            if sub == g:
                return
            sub = (sub - g) & g

    @property
    def members_view(self) -> Iterator[PointSet]:
        return (PointSet(self.carrier_size, m) for m in self.member_masks())

    @property
    def is_trivial(self) -> bool:
        return self.generator_mask == 0

    def __repr__(self) -> str:
        return f"Ideal(P({set(mask_members(self.generator_mask)) or '{}'}) on {self.carrier_size} points)"


def _as_mask(n: int, s) -> int:
    if isinstance(s, PointSet):
        if s.carrier_size != n:
            raise CarrierMismatch(f"set lives on {s.carrier_size} points, expected {n}")
        return s.mask
    if isinstance(s, int):
        if s < 0 or s >> n:
            raise PointOutOfRange(f"mask {s:#b} outside a {n}-point carrier")
        return s
    return PointSet.of(n, s).mask


def make_space(n: int, opens: Iterable, labels: Sequence[str] | None = None) -> FiniteSpace:
    """Validate a family of open sets and build the space.

    ``opens`` may contain :class:`PointSet` values, raw masks, or iterables
    of point indices. Duplicates are dropped.
    """
    if n < 1:
        raise EmptyCarrier(f"carrier must have at least one point, got n={n}")
    if labels is not None and len(labels) != n:
        raise PointOutOfRange(f"{len(labels)} labels for {n} points")
    masks = sorted({_as_mask(n, o) for o in opens})
    lookup = set(masks)
    full = full_mask(n)
    if 0 not in lookup or full not in lookup:
        raise MissingEmptyOrFull("the empty set and the whole carrier must both be open")
    for a, b in combinations(masks, 2):
        if a | b not in lookup:
            raise NotClosedUnderUnion(
                f"union of {_fmt(n, a, labels)} and {_fmt(n, b, labels)} is not open",
                pair=[PointSet(n, a), PointSet(n, b)],
            )
    for a, b in combinations(masks, 2):
        if a & b not in lookup:
            raise NotClosedUnderIntersection(
                f"intersection of {_fmt(n, a, labels)} and {_fmt(n, b, labels)} is not open",
                pair=[PointSet(n, a), PointSet(n, b)],
            )
    return FiniteSpace(n, masks, labels)


def _fmt(n: int, mask: int, labels=None) -> str:
    names = [labels[i] if labels else str(i) for i in mask_members(mask)]
    return "{" + ",".join(names) + "}"


def _check_set(S: FiniteSpace, A: PointSet) -> int:
    if A.carrier_size != S.n:
        raise CarrierMismatch(f"set lives on {A.carrier_size} points, space has {S.n}")
    return A.mask


def closure(S: FiniteSpace, A: PointSet) -> PointSet:
    return PointSet(S.n, S.cl(_check_set(S, A)))


def interior(S: FiniteSpace, A: PointSet) -> PointSet:
    return PointSet(S.n, S.int_(_check_set(S, A)))


def minimal_nbhd(S: FiniteSpace, x: int) -> PointSet:
    """The smallest open set containing ``x``."""
    if not 0 <= x < S.n:
        raise PointOutOfRange(f"point {x} outside carrier of size {S.n}", point=x)
    return PointSet(S.n, S.min_nbhd_masks[x])


def make_ideal(n: int, family: Iterable | None = None, generator=None) -> Ideal:
    """Build an ideal from either an explicit family or a generator set.

    Explicit families are checked against the ideal axioms and then collapsed
    to their generator.
    """
    if n < 1:
        raise EmptyCarrier(f"carrier must have at least one point, got n={n}")
    if (family is None) == (generator is None):
        raise ValueError("pass exactly one of family= or generator=")
    if generator is not None:
        return Ideal(n, _as_mask(n, generator))

    masks = sorted({_as_mask(n, s) for s in family})
    lookup = set(masks)
    if 0 not in lookup:
        raise MissingEmpty("an ideal must contain the empty set")
    for a in masks:
        for p in mask_members(a):
            if a & ~(1 << p) not in lookup:
                raise NotDownClosed(
                    f"{_fmt(n, a)} is a member but its subset {_fmt(n, a & ~(1 << p))} is not",
                    witness=[PointSet(n, a), PointSet(n, a & ~(1 << p))],
                )
    for a, b in combinations(masks, 2):
        if a | b not in lookup:
            raise NotUnionClosed(
                f"union of {_fmt(n, a)} and {_fmt(n, b)} is not a member",
                pair=[PointSet(n, a), PointSet(n, b)],
            )
    generator_mask = 0
    for a in masks:
        generator_mask |= a
    return Ideal(n, generator_mask)


def trivial_ideal(n: int) -> Ideal:
    return Ideal(n, 0)


def ideal_contains(I: Ideal, A: PointSet) -> bool:
    if A.carrier_size != I.carrier_size:
        raise CarrierMismatch(f"set lives on {A.carrier_size} points, ideal on {I.carrier_size}")
    return I.contains_mask(A.mask)
