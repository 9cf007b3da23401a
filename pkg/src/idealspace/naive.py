"""Reference implementations by direct quantifier evaluation.

Nothing here uses minimal neighbourhoods or the principal form of ideals:
neighbourhood quantifiers range over every open set containing the point,
closures are intersections of closed supersets, and ideals are explicit
member families. These functions are slow on purpose and exist to check the
optimized kernels and to re-certify counterexample witnesses.
"""

from __future__ import annotations

from typing import Collection, Sequence

from .setspace import FiniteSpace, Ideal


def members_of(I: Ideal) -> frozenset[int]:
    """Explicit member family of an ideal, listed by scanning every subset."""
    g = I.generator_mask
    return frozenset(s for s in range(1 << I.carrier_size) if s | g == g)


def nbhds(S: FiniteSpace, x: int) -> list[int]:
    return [o for o in S.open_masks if o >> x & 1]


def closure(S: FiniteSpace, a: int) -> int:
    out = S.full
    for o in S.open_masks:
        c = S.full & ~o
        if a & ~c == 0:
            out &= c
    return out


def interior(S: FiniteSpace, a: int) -> int:
    out = 0
    for o in S.open_masks:
        if o & ~a == 0:
            out |= o
    return out


def _points(S: FiniteSpace, pred) -> int:
    return sum(1 << x for x in range(S.n) if pred(x))


def theta_closure(S: FiniteSpace, a: int) -> int:
    return _points(S, lambda x: all(closure(S, u) & a for u in nbhds(S, x)))


def theta_interior(S: FiniteSpace, a: int) -> int:
    return _points(
        S, lambda x: a >> x & 1 and any(closure(S, u) & ~a == 0 for u in nbhds(S, x))
    )


def is_theta_open(S: FiniteSpace, u: int) -> bool:
    return all(
        any(closure(S, v) & ~u == 0 for v in nbhds(S, x)) for x in range(S.n) if u >> x & 1
    )


def theta_opens(S: FiniteSpace) -> list[int]:
    return [u for u in range(1 << S.n) if is_theta_open(S, u)]


def local_function(S: FiniteSpace, members: Collection[int], a: int) -> int:
    return _points(S, lambda x: all((a & u) not in members for u in nbhds(S, x)))


def gamma(S: FiniteSpace, members: Collection[int], a: int) -> int:
    return _points(S, lambda x: all((closure(S, u) & a) not in members for u in nbhds(S, x)))


def tau_star_opens(S: FiniteSpace, members: Collection[int]) -> list[int]:
    out = []
    for u in range(1 << S.n):
        f = S.full & ~u
        if f | local_function(S, members, f) == f:
            out.append(u)
    return out


def sigma_opens(S: FiniteSpace, members: Collection[int]) -> list[int]:
    full = S.full
    return [
        a for a in range(1 << S.n) if a & gamma(S, members, full & ~a) == 0
    ]


def sigma_closure(S: FiniteSpace, members: Collection[int], a: int) -> int:
    """Intersection of all σ-closed supersets (``Γ(F) ⊆ F``) of ``a``."""
    out = S.full
    for f in range(1 << S.n):
        if a & ~f == 0 and gamma(S, members, f) & ~f == 0:
            out &= f
    return out


def image(assign: Sequence[int], a: int) -> int:
    return sum({1 << assign[x] for x in range(len(assign)) if a >> x & 1})


def preimage(assign: Sequence[int], b: int) -> int:
    return sum(1 << x for x, y in enumerate(assign) if b >> y & 1)


def _pointwise(dom_opens_at, cod_opens_at, assign, good) -> bool:
    # for all x, for all V around f(x), there is U around x with good(U, V)
    return all(
        any(good(u, v) for u in dom_opens_at(x))
        for x in range(len(assign))
        for v in cod_opens_at(assign[x])
    )


def is_continuous(X: FiniteSpace, Y: FiniteSpace, assign: Sequence[int]) -> bool:
    return _pointwise(
        lambda x: nbhds(X, x), lambda y: nbhds(Y, y), assign,
        lambda u, v: image(assign, u) & ~v == 0,
    )


def is_continuous_by_preimage(X: FiniteSpace, Y: FiniteSpace, assign: Sequence[int]) -> bool:
    return all(X.is_open(preimage(assign, v)) for v in Y.open_masks)


def is_weakly_continuous(X: FiniteSpace, Y: FiniteSpace, assign: Sequence[int]) -> bool:
    return _pointwise(
        lambda x: nbhds(X, x), lambda y: nbhds(Y, y), assign,
        lambda u, v: image(assign, u) & ~closure(Y, v) == 0,
    )


def is_weakly_continuous_by_preimage(X: FiniteSpace, Y: FiniteSpace, assign: Sequence[int]) -> bool:
    return all(
        preimage(assign, v) & ~interior(X, preimage(assign, closure(Y, v))) == 0
        for v in Y.open_masks
    )


def is_theta_continuous(X: FiniteSpace, Y: FiniteSpace, assign: Sequence[int]) -> bool:
    return _pointwise(
        lambda x: nbhds(X, x), lambda y: nbhds(Y, y), assign,
        lambda u, v: image(assign, closure(X, u)) & ~closure(Y, v) == 0,
    )


def is_faintly_continuous(X: FiniteSpace, Y: FiniteSpace, assign: Sequence[int]) -> bool:
    y_theta = theta_opens(Y)
    return _pointwise(
        lambda x: nbhds(X, x),
        lambda y: [v for v in y_theta if v >> y & 1],
        assign,
        lambda u, v: image(assign, u) & ~v == 0,
    )


def is_tau_theta_continuous(X: FiniteSpace, Y: FiniteSpace, assign: Sequence[int]) -> bool:
    x_theta = theta_opens(X)
    y_theta = theta_opens(Y)
    return _pointwise(
        lambda x: [u for u in x_theta if u >> x & 1],
        lambda y: [v for v in y_theta if v >> y & 1],
        assign,
        lambda u, v: image(assign, u) & ~v == 0,
    )


def is_continuous_families(x_opens: Collection[int], y_opens: Collection[int], assign: Sequence[int]) -> bool:
    x_lookup = set(x_opens)
    return all(preimage(assign, v) in x_lookup for v in y_opens)


def ideal_compatible(assign: Sequence[int], ix_members: Collection[int], iy_members: Collection[int]) -> bool:
    return all(preimage(assign, b) in ix_members for b in iy_members)
