"""Continuity notions for maps between finite spaces.

Pointwise definitions quantify over neighbourhoods ``U`` of ``x`` and ``V``
of ``f(x)``. For continuity, weak continuity and θ-continuity the condition
is antitone in ``V`` and monotone in ``U`` (closure is monotone), so the
worst ``V`` is ``U_f(x)`` and the best ``U`` is ``U_x``. Each notion then
reduces to one inclusion per point.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

from .errors import CarrierMismatch, InternalInvariantViolation, InvalidMap
from .operators import sigma, tau_star, tau_theta
from .setspace import FiniteSpace, Ideal, PointSet

CROSS_CHECK = os.environ.get("IDEALSPACE_CROSS_CHECK", "") not in ("", "0")
"""When set, predicates re-derive their answer from an equivalent characterization."""


@dataclass(frozen=True)
class SpaceMap:
    domain: FiniteSpace
    codomain: FiniteSpace
    assignment: tuple[int, ...]

    def __post_init__(self):
        assignment = tuple(self.assignment)
        object.__setattr__(self, "assignment", assignment)
        if len(assignment) != self.domain.n:
            raise InvalidMap(
                f"assignment has {len(assignment)} entries for a {self.domain.n}-point domain"
            )
        for x, y in enumerate(assignment):
            if not 0 <= y < self.codomain.n:
                raise InvalidMap(f"point {x} maps to {y}, outside the {self.codomain.n}-point codomain")

    def __call__(self, x: int) -> int:
        return self.assignment[x]

    def with_topologies(self, domain: FiniteSpace | None = None, codomain: FiniteSpace | None = None) -> "SpaceMap":
        return SpaceMap(domain or self.domain, codomain or self.codomain, self.assignment)


def image_mask(assign: Sequence[int], a: int) -> int:
    out = 0
    x = 0
    while a:
        if a & 1:
            out |= 1 << assign[x]
        a >>= 1
        x += 1
    return out


def preimage_mask(assign: Sequence[int], b: int) -> int:
    out = 0
    for x, y in enumerate(assign):
        if b >> y & 1:
            out |= 1 << x
    return out


def image(f: SpaceMap, A: PointSet) -> PointSet:
    if A.carrier_size != f.domain.n:
        raise CarrierMismatch(f"set lives on {A.carrier_size} points, domain has {f.domain.n}")
    return PointSet(f.codomain.n, image_mask(f.assignment, A.mask))


def preimage(f: SpaceMap, B: PointSet) -> PointSet:
    if B.carrier_size != f.codomain.n:
        raise CarrierMismatch(f"set lives on {B.carrier_size} points, codomain has {f.codomain.n}")
    return PointSet(f.domain.n, preimage_mask(f.assignment, B.mask))


# -- kernels on (domain, codomain, assignment) -------------------------------


def continuous_between(X: FiniteSpace, Y: FiniteSpace, assign: Sequence[int]) -> bool:
    return all(X.is_open(preimage_mask(assign, v)) for v in Y.open_masks)


def weakly_continuous_between(X: FiniteSpace, Y: FiniteSpace, assign: Sequence[int]) -> bool:
    ycl = Y.closed_nbhd_masks
    return all(
        image_mask(assign, u) & ~ycl[assign[x]] == 0 for x, u in enumerate(X.min_nbhd_masks)
    )


def theta_continuous_between(X: FiniteSpace, Y: FiniteSpace, assign: Sequence[int]) -> bool:
    # Cl(U_x) ⊆ Cl(U) for every open U ∋ x, so U_x is the best witness.
    ycl = Y.closed_nbhd_masks
    return all(
        image_mask(assign, c) & ~ycl[assign[x]] == 0 for x, c in enumerate(X.closed_nbhd_masks)
    )


def prop_141_characterizations(f: SpaceMap) -> dict[str, bool]:
    """Evaluate the five equivalent forms of continuity separately.

    ``a`` is the pointwise neighbourhood definition, ``b`` open preimages,
    ``c`` ``f[Cl(A)] ⊆ Cl(f[A])``, ``d`` ``Cl(f⁻¹[B]) ⊆ f⁻¹[Cl(B)]`` and
    ``e`` ``f⁻¹[Int(B)] ⊆ Int(f⁻¹[B])``.
    """
    X, Y, assign = f.domain, f.codomain, f.assignment
    ynb = Y.min_nbhd_masks
    a = all(image_mask(assign, u) & ~ynb[assign[x]] == 0 for x, u in enumerate(X.min_nbhd_masks))
    b = continuous_between(X, Y, assign)
    c = all(
        image_mask(assign, X.cl(s)) & ~Y.cl(image_mask(assign, s)) == 0 for s in range(1 << X.n)
    )
    d = all(
        X.cl(preimage_mask(assign, t)) & ~preimage_mask(assign, Y.cl(t)) == 0
        for t in range(1 << Y.n)
    )
    e = all(
        preimage_mask(assign, Y.int_(t)) & ~X.int_(preimage_mask(assign, t)) == 0
        for t in range(1 << Y.n)
    )
    return {"a": a, "b": b, "c": c, "d": d, "e": e}


def weak_by_preimage(f: SpaceMap) -> bool:
    """``f⁻¹[V] ⊆ Int(f⁻¹[Cl(V)])`` for every open ``V`` of the codomain."""
    X, Y, assign = f.domain, f.codomain, f.assignment
    return all(
        preimage_mask(assign, v) & ~X.int_(preimage_mask(assign, Y.cl(v))) == 0
        for v in Y.open_masks
    )


def is_continuous(f: SpaceMap) -> bool:
    result = continuous_between(f.domain, f.codomain, f.assignment)
    if CROSS_CHECK:
        forms = prop_141_characterizations(f)
        if len(set(forms.values())) != 1:
            raise InternalInvariantViolation(f"continuity characterizations disagree: {forms}")
    return result


def is_weakly_continuous(f: SpaceMap) -> bool:
    result = weakly_continuous_between(f.domain, f.codomain, f.assignment)
    if CROSS_CHECK and weak_by_preimage(f) != result:
        raise InternalInvariantViolation("pointwise and preimage weak continuity disagree")
    return result


def is_theta_continuous(f: SpaceMap) -> bool:
    return theta_continuous_between(f.domain, f.codomain, f.assignment)


def is_faintly_continuous(f: SpaceMap) -> bool:
    """Continuity into the θ-topology of the codomain."""
    return continuous_between(f.domain, tau_theta(f.codomain), f.assignment)


def is_tau_theta_continuous(f: SpaceMap) -> bool:
    return continuous_between(tau_theta(f.domain), tau_theta(f.codomain), f.assignment)


def _check_ideals(f: SpaceMap, Ix: Ideal, Iy: Ideal) -> None:
    if Ix.carrier_size != f.domain.n or Iy.carrier_size != f.codomain.n:
        raise CarrierMismatch(
            f"ideals on {Ix.carrier_size}/{Iy.carrier_size} points, map is "
            f"{f.domain.n} -> {f.codomain.n}"
        )


def ideal_compatible(f: SpaceMap, Ix: Ideal, Iy: Ideal) -> bool:
    """Whether every member of ``Iy`` pulls back into ``Ix``.

    Both ideals are principal and preimage preserves inclusion, so checking
    the generator of ``Iy`` suffices.
    """
    _check_ideals(f, Ix, Iy)
    result = Ix.contains_mask(preimage_mask(f.assignment, Iy.generator_mask))
    if CROSS_CHECK:
        explicit = all(Ix.contains_mask(preimage_mask(f.assignment, b)) for b in Iy.member_masks())
        if explicit != result:
            raise InternalInvariantViolation("principal and explicit ideal compatibility disagree")
    return result


NOTIONS = ("continuous", "weak", "theta", "faint", "tau_theta")

# (P, Q): every P-continuous map is Q-continuous
DIAGRAM_ARROWS = (
    ("continuous", "theta"),
    ("continuous", "weak"),
    ("continuous", "faint"),
    ("continuous", "tau_theta"),
    ("theta", "weak"),
    ("theta", "faint"),
    ("theta", "tau_theta"),
    ("weak", "faint"),
    ("tau_theta", "faint"),
)

# Holds whenever domain or codomain is finite, fails for some infinite spaces.
FINITE_ONLY_ARROWS = (("weak", "tau_theta"),)


@dataclass(frozen=True)
class IdealResults:
    ideal_compatible: bool
    tau_star_to_sigma_continuous: bool
    sigma_to_sigma_continuous: bool


@dataclass(frozen=True)
class ContinuityReport:
    continuous: bool
    weakly_continuous: bool
    theta_continuous: bool
    faintly_continuous: bool
    tau_theta_continuous: bool
    ideal_results: IdealResults | None = None

    def flag(self, notion: str) -> bool:
        return {
            "continuous": self.continuous,
            "weak": self.weakly_continuous,
            "theta": self.theta_continuous,
            "faint": self.faintly_continuous,
            "tau_theta": self.tau_theta_continuous,
        }[notion]

    def flags(self) -> tuple[bool, ...]:
        return tuple(self.flag(n) for n in NOTIONS)

    def violated_arrows(self) -> list[tuple[str, str]]:
        return [(p, q) for p, q in DIAGRAM_ARROWS if self.flag(p) and not self.flag(q)]


def notion_flags(X: FiniteSpace, Y: FiniteSpace, assign: Sequence[int]) -> tuple[bool, ...]:
    """All five flags, ordered as :data:`NOTIONS`."""
    tx, ty = tau_theta(X), tau_theta(Y)
    return (
        continuous_between(X, Y, assign),
        weakly_continuous_between(X, Y, assign),
        theta_continuous_between(X, Y, assign),
        continuous_between(X, ty, assign),
        continuous_between(tx, ty, assign),
    )


def classify(f: SpaceMap, ideals: tuple[Ideal, Ideal] | None = None) -> ContinuityReport:
    ideal_results = None
    if ideals is not None:
        Ix, Iy = ideals
        _check_ideals(f, Ix, Iy)
        ideal_results = IdealResults(
            ideal_compatible=ideal_compatible(f, Ix, Iy),
            tau_star_to_sigma_continuous=continuous_between(
                tau_star(f.domain, Ix), sigma(f.codomain, Iy), f.assignment
            ),
            sigma_to_sigma_continuous=continuous_between(
                sigma(f.domain, Ix), sigma(f.codomain, Iy), f.assignment
            ),
        )
    report = ContinuityReport(
        continuous=is_continuous(f),
        weakly_continuous=is_weakly_continuous(f),
        theta_continuous=is_theta_continuous(f),
        faintly_continuous=is_faintly_continuous(f),
        tau_theta_continuous=is_tau_theta_continuous(f),
        ideal_results=ideal_results,
    )
    broken = report.violated_arrows()
    if broken:
        raise InternalInvariantViolation(f"report violates implications {broken}", arrows=broken)
    return report


def identity_map(S: FiniteSpace) -> SpaceMap:
    return SpaceMap(S, S, tuple(range(S.n)))


def constant_map(X: FiniteSpace, Y: FiniteSpace, y: int) -> SpaceMap:
    return SpaceMap(X, Y, (y,) * X.n)

