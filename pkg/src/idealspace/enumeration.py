"""Exhaustive generators for small finite universes.

Topologies are produced from their minimal-neighbourhood tables: choosing
``U_x`` for every point with ``x ∈ U_x`` and ``y ∈ U_x ⇒ U_y ⊆ U_x`` gives
exactly one topology (the unions of the ``U_x``), so a backtracking search
over those tables lists every labeled topology once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import BoundTooLarge, InputError
from .setspace import FiniteSpace, Ideal, full_mask

MAX_EXHAUSTIVE_POINTS = 5
SAMPLE_SEED = 20240611
"""Seed used whenever a universe is sampled rather than enumerated."""


@dataclass(frozen=True)
class UniverseBounds:
    max_domain_points: int
    max_codomain_points: int
    include_ideals: bool = True
    sample_budget: int | None = None
    seed: int = SAMPLE_SEED

    def __post_init__(self):
        if self.max_domain_points < 1 or self.max_codomain_points < 1:
            raise InputError("universe bounds must be at least 1")
        if self.sample_budget is not None and self.sample_budget < 0:
            raise InputError("sample_budget must be non-negative")
        if self.sample_budget is None and max(self.max_domain_points, self.max_codomain_points) > MAX_EXHAUSTIVE_POINTS:
            raise BoundTooLarge(
                f"exhaustive universes are capped at {MAX_EXHAUSTIVE_POINTS} points; "
                "pass a sample_budget for larger spaces"
            )

    @classmethod
    def square(cls, n: int, **kw) -> "UniverseBounds":
        return cls(n, n, **kw)

    def to_dict(self) -> dict:
        return {
            "max_domain_points": self.max_domain_points,
            "max_codomain_points": self.max_codomain_points,
            "include_ideals": self.include_ideals,
            "sample_budget": self.sample_budget,
            "seed": self.seed if self.sample_budget is not None else None,
        }


def _check_n(n: int) -> None:
    if n < 1:
        raise InputError(f"carrier must have at least one point, got n={n}")
    if n > MAX_EXHAUSTIVE_POINTS:
        raise BoundTooLarge(f"topology enumeration is capped at n <= {MAX_EXHAUSTIVE_POINTS}, got {n}")


def _nbhd_tables(n: int) -> Iterator[tuple[int, ...]]:
    full = full_mask(n)
    table = [0] * n

    def choices(x: int) -> Iterator[int]:
        bit = 1 << x
        rest = full & ~bit
        sub = 0
        while True:
            yield sub | bit
            if sub == rest:
                return
            sub = (sub - rest) & rest

    def extend(k: int) -> Iterator[tuple[int, ...]]:
        if k == n:
            yield tuple(table)
            return
        for u in choices(k):
            ok = True
            for i in range(k):
                ui = table[i]
                if (ui >> k & 1 and u & ~ui) or (u >> i & 1 and ui & ~u):
                    ok = False
                    break
            if ok:
                table[k] = u
                yield from extend(k + 1)

    return extend(0)


def _opens_from_nbhds(nbhds: tuple[int, ...]) -> tuple[int, ...]:
    opens = {0}
    for u in nbhds:
        opens |= {o | u for o in opens}
    return tuple(sorted(opens))


@lru_cache(maxsize=None)
def _topologies(n: int) -> tuple[FiniteSpace, ...]:
    families = sorted(_opens_from_nbhds(t) for t in _nbhd_tables(n))
    return tuple(FiniteSpace(n, fam) for fam in families)


def enumerate_topologies(n: int, start: int = 0, stop: int | None = None) -> tuple[FiniteSpace, ...]:
    """Every labeled topology on ``n`` points, ordered by sorted open-mask family.

    ``start``/``stop`` select an index range of the canonical sequence.
    """
    _check_n(n)
    return _topologies(n)[start:stop]


def count_topologies(n: int) -> int:
    _check_n(n)
    return len(_topologies(n))


def enumerate_ideals(n: int) -> tuple[Ideal, ...]:
    """The ``2**n`` ideals ``P(M)``, ordered by the bit mask of ``M``."""
    if n < 1:
        raise InputError(f"carrier must have at least one point, got n={n}")
    return tuple(Ideal(n, m) for m in range(1 << n))


def enumerate_maps(nx: int, ny: int) -> Iterator[tuple[int, ...]]:
    """All ``ny**nx`` assignment tables in lexicographic order."""
    if nx < 1 or ny < 1:
        raise InputError("map enumeration needs nonempty carriers")
    return itertools.product(range(ny), repeat=nx)


def map_at(index: int, nx: int, ny: int) -> tuple[int, ...]:
    """The assignment at ``index`` in :func:`enumerate_maps` order."""
    out = []
    for _ in range(nx):
        index, r = divmod(index, ny)
        out.append(r)
    return tuple(reversed(out))
