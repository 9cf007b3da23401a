"""Derived operators and topologies of a finite ideal topological space.

Every "for each U in tau(x)" quantifier collapses to a single test against
the minimal neighbourhood ``U_x``: the conditions involved (``U ∩ A ∉ I``,
``Cl(U) ∩ A ∉ I``, ``Cl(U) ⊆ A``) are monotone in ``U``, so ``U_x`` is the
extreme case. The ``*_mask`` functions are the raw-bitmask kernels; the
public functions take and return :class:`PointSet`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CarrierMismatch, InputError, InternalInvariantViolation, NonStabilization
from .setspace import FiniteSpace, Ideal, PointSet, make_space


def _check(S: FiniteSpace, A: PointSet, I: Ideal | None = None) -> int:
    if A.carrier_size != S.n:
        raise CarrierMismatch(f"set lives on {A.carrier_size} points, space has {S.n}")
    if I is not None and I.carrier_size != S.n:
        raise CarrierMismatch(f"ideal lives on {I.carrier_size} points, space has {S.n}")
    return A.mask


def _check_ideal(S: FiniteSpace, I: Ideal) -> int:
    if I.carrier_size != S.n:
        raise CarrierMismatch(f"ideal lives on {I.carrier_size} points, space has {S.n}")
    return I.generator_mask


# -- mask kernels -----------------------------------------------------------


def theta_interior_mask(S: FiniteSpace, a: int) -> int:
    out = 0
    for x, c in enumerate(S.closed_nbhd_masks):
        if a >> x & 1 and c & ~a == 0:
            out |= 1 << x
    return out


def theta_closure_mask(S: FiniteSpace, a: int) -> int:
    out = 0
    for x, c in enumerate(S.closed_nbhd_masks):
        if c & a:
            out |= 1 << x
    return out


def local_function_mask(S: FiniteSpace, m: int, a: int) -> int:
    # A ∩ U_x ∉ P(M)  iff  A ∩ U_x ⊄ M
    a &= ~m
    out = 0
    for x, u in enumerate(S.min_nbhd_masks):
        if u & a:
            out |= 1 << x
    return out


def gamma_mask(S: FiniteSpace, m: int, a: int) -> int:
    a &= ~m
    out = 0
    for x, c in enumerate(S.closed_nbhd_masks):
        if c & a:
            out |= 1 << x
    return out


def psi_gamma_mask(S: FiniteSpace, m: int, a: int) -> int:
    full = S.full
    return full & ~gamma_mask(S, m, full & ~a)


def cl_stage_masks(S: FiniteSpace, m: int, a: int) -> list[int]:
    """Stages ``CL^0 .. CL^(k+1)`` where ``k`` is the first index with ``CL^(k+1) = CL^k``."""
    stages = [a]
    for _ in range(S.n + 1):
        cur = stages[-1]
        nxt = cur | gamma_mask(S, m, cur)
        stages.append(nxt)
        if nxt == cur:
            return stages
    raise NonStabilization(f"no fixpoint within {S.n + 1} steps", stages=stages)


def sigma_closure_mask(S: FiniteSpace, m: int, a: int) -> int:
    cur = a
    for _ in range(S.n + 1):
        nxt = cur | gamma_mask(S, m, cur)
        if nxt == cur:
            return cur
        cur = nxt
    raise NonStabilization(f"no fixpoint within {S.n + 1} steps")


def _derived_space(S: FiniteSpace, opens: list[int], what: str) -> FiniteSpace:
    try:
        return make_space(S.n, opens, S.labels)
    except InputError as exc:
        raise InternalInvariantViolation(f"{what} is not a topology: {exc}") from exc


# -- public operators -------------------------------------------------------


def theta_interior(S: FiniteSpace, A: PointSet) -> PointSet:
    """Points of ``A`` having a neighbourhood whose closure stays inside ``A``.

    This is the pointwise operator; it need not return a θ-open set. The
    interior taken in the θ-topology is :func:`tau_theta_interior`.
    """
    return PointSet(S.n, theta_interior_mask(S, _check(S, A)))


def theta_closure(S: FiniteSpace, A: PointSet) -> PointSet:
    return PointSet(S.n, theta_closure_mask(S, _check(S, A)))


@lru_cache(maxsize=8192)
def tau_theta(S: FiniteSpace) -> FiniteSpace:
    """The θ-topology: sets fixed by the pointwise θ-interior."""
    opens = [u for u in range(1 << S.n) if theta_interior_mask(S, u) == u]
    return _derived_space(S, opens, "tau_theta")


def tau_theta_interior(S: FiniteSpace, A: PointSet) -> PointSet:
    return PointSet(S.n, tau_theta(S).int_(_check(S, A)))


def tau_theta_closure(S: FiniteSpace, A: PointSet) -> PointSet:
    return PointSet(S.n, tau_theta(S).cl(_check(S, A)))


def local_function(S: FiniteSpace, I: Ideal, A: PointSet) -> PointSet:
    a = _check(S, A, I)
    return PointSet(S.n, local_function_mask(S, I.generator_mask, a))


def star_closure(S: FiniteSpace, I: Ideal, A: PointSet) -> PointSet:
    a = _check(S, A, I)
    return PointSet(S.n, a | local_function_mask(S, I.generator_mask, a))


@lru_cache(maxsize=65536)
def tau_star(S: FiniteSpace, I: Ideal) -> FiniteSpace:
    m = _check_ideal(S, I)
    full = S.full
    opens = []
    for u in range(1 << S.n):
        f = full & ~u
        if f | local_function_mask(S, m, f) == f:
            opens.append(u)
    return _derived_space(S, opens, "tau_star")


def gamma(S: FiniteSpace, I: Ideal, A: PointSet) -> PointSet:
    """Local closure function."""
    a = _check(S, A, I)
    return PointSet(S.n, gamma_mask(S, I.generator_mask, a))


def psi_gamma(S: FiniteSpace, I: Ideal, A: PointSet) -> PointSet:
    a = _check(S, A, I)
    return PointSet(S.n, psi_gamma_mask(S, I.generator_mask, a))


@lru_cache(maxsize=65536)
def sigma(S: FiniteSpace, I: Ideal) -> FiniteSpace:
    m = _check_ideal(S, I)
    opens = [a for a in range(1 << S.n) if a & ~psi_gamma_mask(S, m, a) == 0]
    return _derived_space(S, opens, "sigma")


@dataclass(frozen=True)
class ClSequence:
    """Iterates ``CL^0(A) = A``, ``CL^(k+1) = CL^k ∪ Γ(CL^k)``.

    ``stages`` ends with the repeated fixpoint, so ``stages[-1] == stages[-2]``
    and ``stabilized_at == len(stages) - 2``.
    """

    stages: tuple[PointSet, ...]
    stabilized_at: int

    @property
    def fixpoint(self) -> PointSet:
        return self.stages[-1]

    def stage(self, k: int) -> PointSet:
        """``CL^k``; constant once the sequence has stabilized."""
        return self.stages[min(k, len(self.stages) - 1)]


def cl_sequence(S: FiniteSpace, I: Ideal, A: PointSet) -> ClSequence:
    a = _check(S, A, I)
    stages = cl_stage_masks(S, I.generator_mask, a)
    return ClSequence(tuple(PointSet(S.n, s) for s in stages), len(stages) - 2)


def sigma_closure(S: FiniteSpace, I: Ideal, A: PointSet) -> PointSet:
    """Closure in the σ topology, computed as the fixpoint of :func:`cl_sequence`."""
    a = _check(S, A, I)
    return PointSet(S.n, sigma_closure_mask(S, I.generator_mask, a))
