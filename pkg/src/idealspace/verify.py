"""Exhaustive theorem checking and counterexample mining.

Each theorem is evaluated over a universe of small spaces, ideals, maps and
subsets. Work is split into units, one per ``(nx, ny, domain index)``; each
unit walks its slice in canonical order and stops at its first violation.
All units always run, so instance counts and the reported (minimum-index)
witness do not depend on how units are distributed over worker processes.

Canonical instance order, outermost first:

* map theorems: ``nx, ny, X, Y, map``
* ideal map theorems: ``nx, ny, X, Y, map, I_X, I_Y, subset``
* ``JH_XSTAR``: ``nx, ny, X, I_X, Y, map``
* ``CLOSURESIGMA_A_E``: ``nx, X, I, subset``
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from . import naive
from .continuity import (
    DIAGRAM_ARROWS,
    FINITE_ONLY_ARROWS,
    NOTIONS,
    continuous_between,
    image_mask,
    preimage_mask,
    prop_141_characterizations,
    theta_continuous_between,
    weakly_continuous_between,
    SpaceMap,
)
from .enumeration import UniverseBounds, enumerate_maps, enumerate_topologies, map_at
from .errors import InvalidClaim, UnknownTheorem
from .operators import tau_star, tau_theta, theta_closure_mask
from .setspace import FiniteSpace, Ideal, PointSet, mask_members

THEOREM_IDS = (
    "TC1A",
    "TC1B",
    "TTC2A",
    "TTC2B",
    "TTC2C",
    "TC1_COROLLARY_THETA_IMPLIES_TAUTHETA",
    "TW1A",
    "TW1B",
    "TW2",
    "WEAK_IMPLIES_FAINT",
    "CONT_IMPLIES_TAUTHETA",
    "TAUTHETA_IMPLIES_FAINT",
    "THETA_IMPLIES_FAINT",
    "WC_FINITE_COROLLARY",
    "JH_XSTAR",
    "CLOSURESIGMA_A_E",
    "PROP_141_EQUIV",
)

NOTION_ALIASES = {
    "continuous": "continuous",
    "cont": "continuous",
    "continuity": "continuous",
    "weak": "weak",
    "weakly": "weak",
    "weakly_continuous": "weak",
    "theta": "theta",
    "θ": "theta",
    "theta_continuous": "theta",
    "faint": "faint",
    "faintly": "faint",
    "faintly_continuous": "faint",
    "tau_theta": "tau_theta",
    "τ_θ": "tau_theta",
    "τθ": "tau_theta",
    "tautheta": "tau_theta",
    "tau_theta_continuous": "tau_theta",
}

HYPOTHESIS_NAMES = frozenset(NOTIONS) | {"compatible", "x_star"}


# -- precomputed tables ------------------------------------------------------


class IdealTables:
    """Operator tables for one (space, principal ideal) pair."""

    def __init__(self, st: "SpaceTables", m: int):
        self.m = m
        n = st.space.n
        size = 1 << n
        full = st.space.full
        keep = full & ~m
        self.gamma = [st.theta[a & keep] for a in range(size)]
        self.local = [st.cl[a & keep] for a in range(size)]
        self.stages = []
        for a in range(size):
            seq = [a]
            while True:
                nxt = seq[-1] | self.gamma[seq[-1]]
                if nxt == seq[-1]:
                    break
                seq.append(nxt)
            self.stages.append(seq)
        self.sigma_cl = [s[-1] for s in self.stages]
        self.sigma_closed = [f for f in range(size) if self.gamma[f] & ~f == 0]
        self.sigma_open = frozenset(full & ~f for f in self.sigma_closed)
        self.tau_star_open = frozenset(
            full & ~f for f in range(size) if self.local[f] & ~f == 0
        )
        self.x_star = self.local[full] == full

    def stage(self, a: int, k: int) -> int:
        seq = self.stages[a]
        return seq[min(k, len(seq) - 1)]


class SpaceTables:
    def __init__(self, space: FiniteSpace):
        self.space = space
        size = 1 << space.n
        self.cl = [space.cl(a) for a in range(size)]
        self.theta = [theta_closure_mask(space, a) for a in range(size)]
        self.tau_theta = tau_theta(space)
        self._ideals: dict[int, IdealTables] = {}

    def ideal(self, m: int) -> IdealTables:
        t = self._ideals.get(m)
        if t is None:
            t = self._ideals[m] = IdealTables(self, m)
        return t


_TABLES: dict[tuple[int, int], SpaceTables] = {}


def _tables(n: int, index: int) -> SpaceTables:
    key = (n, index)
    t = _TABLES.get(key)
    if t is None:
        t = _TABLES[key] = SpaceTables(enumerate_topologies(n)[index])
    return t


class MapCtx:
    def __init__(self, tx: SpaceTables, ty: SpaceTables, assign: tuple[int, ...]):
        self.tx = tx
        self.ty = ty
        self.assign = assign
        self.img = [image_mask(assign, a) for a in range(1 << tx.space.n)]
        self.pre = [preimage_mask(assign, b) for b in range(1 << ty.space.n)]
        self._flags: dict[str, bool] = {}

    def flag(self, notion: str) -> bool:
        v = self._flags.get(notion)
        if v is None:
            X, Y, f = self.tx.space, self.ty.space, self.assign
            if notion == "continuous":
                v = continuous_between(X, Y, f)
            elif notion == "weak":
                v = weakly_continuous_between(X, Y, f)
            elif notion == "theta":
                v = theta_continuous_between(X, Y, f)
            elif notion == "faint":
                v = continuous_between(X, self.ty.tau_theta, f)
            elif notion == "tau_theta":
                v = continuous_between(self.tx.tau_theta, self.ty.tau_theta, f)
            else:
                raise KeyError(notion)
            self._flags[notion] = v
        return v


# -- theorem definitions -----------------------------------------------------


@dataclass(frozen=True)
class TheoremSpec:
    id: str
    kind: str  # "map" | "map_ideal" | "jh" | "closure_sigma"
    hypotheses: tuple[str, ...]
    statement: str
    conclusion: Callable = field(compare=False)
    side: Optional[str] = None  # set-level claims quantify over "domain" or "codomain" subsets


def _incl(a: int, b: int, clause: str) -> Optional[str]:
    return None if a & ~b == 0 else clause


def _tc1a(c: MapCtx, ix: IdealTables, iy: IdealTables, a: int):
    return _incl(c.img[ix.gamma[a]], iy.gamma[c.img[a]], "f[Γ(A)] ⊆ Γ(f[A])")


def _tc1b(c: MapCtx, ix: IdealTables, iy: IdealTables, b: int):
    return _incl(ix.gamma[c.pre[b]], c.pre[iy.gamma[b]], "Γ(f⁻¹[B]) ⊆ f⁻¹[Γ(B)]")


def _ttc2a(c: MapCtx, ix: IdealTables, iy: IdealTables, a: int):
    fa = c.img[a]
    depth = max(len(ix.stages[a]), len(iy.stages[fa]))
    for k in range(depth + 1):
        if c.img[ix.stage(a, k)] & ~iy.stage(fa, k):
            return f"f[CL^{k}(A)] ⊆ CL^{k}(f[A])"
    return None


def _ttc2b(c: MapCtx, ix: IdealTables, iy: IdealTables, a: int):
    return _incl(c.img[ix.sigma_cl[a]], iy.sigma_cl[c.img[a]], "f[Cl_σ(A)] ⊆ Cl_σ(f[A])")


def _ttc2c(c: MapCtx, ix: IdealTables, iy: IdealTables):
    ok = all(c.pre[v] in ix.sigma_open for v in iy.sigma_open)
    return None if ok else "f: (X, σ_X) → (Y, σ_Y) continuous"


def _tw1a(c: MapCtx, ix: IdealTables, iy: IdealTables, a: int):
    return _incl(c.img[ix.local[a]], iy.gamma[c.img[a]], "f[A*] ⊆ Γ(f[A])")


def _tw1b(c: MapCtx, ix: IdealTables, iy: IdealTables, b: int):
    return _incl(ix.local[c.pre[b]], c.pre[iy.gamma[b]], "(f⁻¹[B])* ⊆ f⁻¹[Γ(B)]")


def _tw2(c: MapCtx, ix: IdealTables, iy: IdealTables):
    ok = all(c.pre[v] in ix.tau_star_open for v in iy.sigma_open)
    return None if ok else "f: (X, τ*_X) → (Y, σ_Y) continuous"


def _notion(q: str) -> Callable:
    def conclusion(c: MapCtx):
        return None if c.flag(q) else f"{q} continuity"

    conclusion.__name__ = f"_is_{q}"
    return conclusion


def _prop141(c: MapCtx):
    forms = prop_141_characterizations(SpaceMap(c.tx.space, c.ty.space, c.assign))
    if len(set(forms.values())) == 1:
        return None
    return "characterizations disagree: " + ", ".join(f"{k}={v}" for k, v in forms.items())


def _jh(X: FiniteSpace, X_star: FiniteSpace, Y: FiniteSpace, assign):
    if theta_continuous_between(X, Y, assign) == theta_continuous_between(X_star, Y, assign):
        return None
    return "θ-continuity from τ equals θ-continuity from τ*"


def sigma_closure_by_supersets(it: IdealTables, a: int) -> int:
    out = -1
    for f in it.sigma_closed:
        if a & ~f == 0:
            out &= f
    return out


def _closure_sigma(st: SpaceTables, it: IdealTables, a: int):
    seq = it.stages[a]
    n = st.space.n
    for k in range(len(seq) - 1):
        if seq[k] & ~seq[k + 1]:
            return f"a: CL^{k}(A) ⊆ CL^{k + 1}(A)"
    scl = sigma_closure_by_supersets(it, a) & st.space.full
    for k, s in enumerate(seq):
        if s & ~scl:
            return f"b: CL^{k}(A) ⊆ Cl_σ(A)"
    fix = seq[-1]
    cur = fix
    for k in range(n + 2):
        cur = cur | it.gamma[cur]
        if cur != fix:
            return f"c: CL^{len(seq) + k}(A) = CL^{len(seq) - 1}(A)"
    if len(seq) - 1 > n:
        return f"d: stabilizes within {n} steps"
    if fix != scl:
        return "e: CL^α0(A) = Cl_σ(A)"
    return None


THEOREMS: dict[str, TheoremSpec] = {
    t.id: t
    for t in (
        TheoremSpec("TC1A", "map_ideal", ("theta", "compatible"), "f[Γ(A)] ⊆ Γ(f[A]) for all A ⊆ X", _tc1a, "domain"),
        TheoremSpec("TC1B", "map_ideal", ("theta", "compatible"), "Γ(f⁻¹[B]) ⊆ f⁻¹[Γ(B)] for all B ⊆ Y", _tc1b, "codomain"),
        TheoremSpec("TTC2A", "map_ideal", ("theta", "compatible"), "f[CL^k(A)] ⊆ CL^k(f[A]) for all A ⊆ X and all k", _ttc2a, "domain"),
        TheoremSpec("TTC2B", "map_ideal", ("theta", "compatible"), "f[Cl_σ(A)] ⊆ Cl_σ(f[A]) for all A ⊆ X", _ttc2b, "domain"),
        TheoremSpec("TTC2C", "map_ideal", ("theta", "compatible"), "f: (X, σ_X) → (Y, σ_Y) is continuous", _ttc2c),
        TheoremSpec("TC1_COROLLARY_THETA_IMPLIES_TAUTHETA", "map", ("theta",), "θ-continuous ⇒ τ_θ-continuous", _notion("tau_theta")),
        TheoremSpec("TW1A", "map_ideal", ("weak", "compatible"), "f[A*] ⊆ Γ(f[A]) for all A ⊆ X", _tw1a, "domain"),
        TheoremSpec("TW1B", "map_ideal", ("weak", "compatible"), "(f⁻¹[B])* ⊆ f⁻¹[Γ(B)] for all B ⊆ Y", _tw1b, "codomain"),
        TheoremSpec("TW2", "map_ideal", ("weak", "compatible"), "f: (X, τ*_X) → (Y, σ_Y) is continuous", _tw2),
        TheoremSpec("WEAK_IMPLIES_FAINT", "map", ("weak",), "weakly continuous ⇒ faintly continuous", _notion("faint")),
        TheoremSpec("CONT_IMPLIES_TAUTHETA", "map", ("continuous",), "continuous ⇒ τ_θ-continuous", _notion("tau_theta")),
        TheoremSpec("TAUTHETA_IMPLIES_FAINT", "map", ("tau_theta",), "τ_θ-continuous ⇒ faintly continuous", _notion("faint")),
        TheoremSpec("THETA_IMPLIES_FAINT", "map", ("theta",), "θ-continuous ⇒ faintly continuous", _notion("faint")),
        TheoremSpec("WC_FINITE_COROLLARY", "map", ("weak",), "weakly continuous ⇒ τ_θ-continuous (finite spaces)", _notion("tau_theta")),
        TheoremSpec("JH_XSTAR", "jh", ("x_star",), "if X = X* then θ-continuity from τ and from τ* agree", _jh),
        TheoremSpec("CLOSURESIGMA_A_E", "closure_sigma", (), "CL^k(A) increases, stabilizes within n steps, and its fixpoint is Cl_σ(A)", _closure_sigma),
        TheoremSpec("PROP_141_EQUIV", "map", (), "the five characterizations of continuity agree", _prop141),
    )
}

assert tuple(THEOREMS) == THEOREM_IDS


# -- claims ------------------------------------------------------------------


def parse_notion(name: str) -> str:
    key = name.strip().lower().replace("-", "_").replace(" ", "_")
    try:
        return NOTION_ALIASES[key]
    except KeyError:
        raise InvalidClaim(f"unknown continuity notion {name!r}; expected one of {', '.join(NOTIONS)}") from None


@dataclass(frozen=True)
class Claim:
    """Either an implication between two notions or a theorem, optionally with hypotheses dropped."""

    theorem: Optional[str] = None
    premise: Optional[str] = None
    conclusion: Optional[str] = None
    dropped: tuple[str, ...] = ()

    @classmethod
    def implication(cls, premise: str, conclusion: str) -> "Claim":
        return cls(premise=parse_notion(premise), conclusion=parse_notion(conclusion))

    @classmethod
    def of_theorem(cls, theorem_id: str, drop: Iterable[str] = ()) -> "Claim":
        spec = get_theorem(theorem_id)
        dropped = tuple(sorted(set(drop)))
        for h in dropped:
            if h not in spec.hypotheses:
                raise InvalidClaim(
                    f"{spec.id} has no hypothesis {h!r}; its hypotheses are {list(spec.hypotheses)}"
                )
        return cls(theorem=spec.id, dropped=dropped)

    @classmethod
    def parse(cls, text: str, drop: Iterable[str] = ()) -> "Claim":
        for arrow in ("=>", "⇒", "->"):
            if arrow in text:
                left, right = text.split(arrow, 1)
                if drop:
                    raise InvalidClaim("hypotheses can only be dropped from theorem claims")
                return cls.implication(left, right)
        return cls.of_theorem(text.strip(), drop)

    def spec(self) -> TheoremSpec:
        if self.theorem is not None:
            return get_theorem(self.theorem)
        return TheoremSpec(
            f"{self.premise}=>{self.conclusion}",
            "map",
            (self.premise,),
            f"{self.premise} ⇒ {self.conclusion}",
            _notion(self.conclusion),
        )

    def hypotheses(self) -> tuple[str, ...]:
        return tuple(h for h in self.spec().hypotheses if h not in self.dropped)

    @property
    def name(self) -> str:
        base = self.spec().id
        return base + "".join(f" without {h}" for h in self.dropped)


def get_theorem(theorem_id: str) -> TheoremSpec:
    try:
        return THEOREMS[theorem_id.strip().upper()]
    except KeyError:
        raise UnknownTheorem(
            f"unknown theorem {theorem_id!r}; expected one of {', '.join(THEOREM_IDS)}"
        ) from None


# -- witnesses and reports ---------------------------------------------------


@dataclass(frozen=True)
class Witness:
    claim: Claim
    index: tuple[int, ...]
    domain_space: FiniteSpace
    codomain_space: Optional[FiniteSpace]
    map: Optional[tuple[int, ...]]
    ideals: Optional[tuple[Optional[Ideal], Optional[Ideal]]]
    subset: Optional[PointSet]
    subset_side: Optional[str]
    violated_clause: str

    def certify(self) -> bool:
        """Re-check the violation with the brute-force operators."""
        return certify(self)


@dataclass(frozen=True)
class Outcome:
    violated: bool
    witness: Optional[Witness] = None

    @property
    def status(self) -> str:
        return "Violated" if self.violated else "NoViolation"


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    statement: str
    universe: UniverseBounds
    instances_checked: int
    outcome: Outcome
    elapsed: float = field(default=0.0, compare=False)
    claim: Optional[Claim] = None

    @property
    def ok(self) -> bool:
        return not self.outcome.violated


# -- unit evaluation ---------------------------------------------------------


@dataclass(frozen=True)
class _Unit:
    nx: int
    ny: int
    ix: int


@dataclass
class _UnitResult:
    count: int = 0
    hit: Optional[tuple] = None  # (index, clause, subset_mask)


def _ideal_masks(n: int, include: bool) -> range:
    return range(1 << n) if include else range(1)


def _eval_map_ideal_instance(spec, hyps, c: MapCtx, mx: int, my: int):
    """Returns (instances, clause, subset) for one (map, I_X, I_Y)."""
    size = 1 << (c.tx.space.n if spec.side == "domain" else c.ty.space.n) if spec.side else 1
    if not all(c.flag(h) for h in hyps if h in NOTIONS):
        return size, None, None
    if "compatible" in hyps and c.pre[my] & ~mx:
        return size, None, None
    ix = c.tx.ideal(mx)
    iy = c.ty.ideal(my)
    if spec.side is None:
        return 1, spec.conclusion(c, ix, iy), None
    for s in range(size):
        clause = spec.conclusion(c, ix, iy, s)
        if clause:
            return s + 1, clause, s
    return size, None, None


def _run_unit(claim: Claim, unit: _Unit, include_ideals: bool) -> _UnitResult:
    spec = claim.spec()
    hyps = claim.hypotheses()
    res = _UnitResult()
    tx = _tables(unit.nx, unit.ix)
    X = tx.space

    if spec.kind == "closure_sigma":
        for m in _ideal_masks(unit.nx, include_ideals):
            it = tx.ideal(m)
            for a in range(1 << unit.nx):
                res.count += 1
                clause = spec.conclusion(tx, it, a)
                if clause:
                    res.hit = ((unit.nx, unit.ix, m, a), clause, a)
                    return res
        return res

    ys = enumerate_topologies(unit.ny)
    maps = list(enumerate_maps(unit.nx, unit.ny))

    if spec.kind == "jh":
        for mx in _ideal_masks(unit.nx, include_ideals):
            it = tx.ideal(mx)
            if "x_star" in hyps and not it.x_star:
                res.count += len(ys) * len(maps)
                continue
            X_star = tau_star(X, Ideal(unit.nx, mx))
            for iy, Y in enumerate(ys):
                for k, f in enumerate(maps):
                    res.count += 1
                    clause = spec.conclusion(X, X_star, Y, f)
                    if clause:
                        res.hit = ((unit.nx, unit.ny, unit.ix, mx, iy, k), clause, None)
                        return res
        return res

    for iy in range(len(ys)):
        ty = _tables(unit.ny, iy)
        for k, f in enumerate(maps):
            c = MapCtx(tx, ty, f)
            if spec.kind == "map":
                res.count += 1
                if all(c.flag(h) for h in hyps):
                    clause = spec.conclusion(c)
                    if clause:
                        res.hit = ((unit.nx, unit.ny, unit.ix, iy, k), clause, None)
                        return res
                continue
            for mx in _ideal_masks(unit.nx, include_ideals):
                for my in _ideal_masks(unit.ny, include_ideals):
                    count, clause, s = _eval_map_ideal_instance(spec, hyps, c, mx, my)
                    res.count += count
                    if clause:
                        idx = (unit.nx, unit.ny, unit.ix, iy, k, mx, my)
                        if s is not None:
                            idx += (s,)
                        res.hit = (idx, clause, s)
                        return res
    return res


def _units(spec: TheoremSpec, bounds: UniverseBounds) -> list[_Unit]:
    out = []
    for nx in range(1, bounds.max_domain_points + 1):
        ny_range = [0] if spec.kind == "closure_sigma" else range(1, bounds.max_codomain_points + 1)
        for ny in ny_range:
            for ix in range(len(enumerate_topologies(nx))):
                out.append(_Unit(nx, ny, ix))
    return out


def _run_unit_star(args):
    return _run_unit(*args)


def _run_all(claim: Claim, bounds: UniverseBounds, jobs: int, stop_early: bool = False) -> tuple[int, Optional[tuple]]:
    units = _units(claim.spec(), bounds)
    args = [(claim, u, bounds.include_ideals) for u in units]
    if jobs <= 1:
        results = []
        for a in args:
            r = _run_unit(*a)
            results.append(r)
            if stop_early and r.hit:
                break
    else:
        chunk = max(1, len(args) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_unit_star, args, chunksize=chunk))
    count = sum(r.count for r in results)
    hits = [r.hit for r in results if r.hit]
    return count, (min(hits, key=lambda h: h[0]) if hits else None)


def _witness_from_hit(claim: Claim, hit: tuple) -> Witness:
    idx, clause, s = hit
    spec = claim.spec()
    if spec.kind == "closure_sigma":
        nx, ix, m, a = idx
        X = enumerate_topologies(nx)[ix]
        return Witness(claim, idx, X, None, None, (Ideal(nx, m), None), PointSet(nx, a), "domain", clause)
    if spec.kind == "jh":
        nx, ny, ix, mx, iy, k = idx
        X = enumerate_topologies(nx)[ix]
        Y = enumerate_topologies(ny)[iy]
        return Witness(claim, idx, X, Y, map_at(k, nx, ny), (Ideal(nx, mx), None), None, None, clause)
    nx, ny, ix, iy, k = idx[:5]
    X = enumerate_topologies(nx)[ix]
    Y = enumerate_topologies(ny)[iy]
    f = map_at(k, nx, ny)
    if spec.kind == "map":
        return Witness(claim, idx, X, Y, f, None, None, None, clause)
    ideals = (Ideal(nx, idx[5]), Ideal(ny, idx[6]))
    subset = None
    if s is not None:
        subset = PointSet(nx if spec.side == "domain" else ny, s)
    return Witness(claim, idx, X, Y, f, ideals, subset, spec.side, clause)


# -- sampling ----------------------------------------------------------------


def _sample(claim: Claim, bounds: UniverseBounds) -> tuple[int, Optional[tuple]]:
    """Evaluate ``sample_budget`` randomly drawn instances, in draw order."""
    spec = claim.spec()
    hyps = claim.hypotheses()
    rng = random.Random(bounds.seed)
    count = 0
    for draw in range(bounds.sample_budget):
        nx = rng.randint(1, bounds.max_domain_points)
        ny = rng.randint(1, bounds.max_codomain_points)
        ix = rng.randrange(len(enumerate_topologies(nx)))
        tx = _tables(nx, ix)
        mx = rng.randrange(1 << nx) if bounds.include_ideals else 0
        if spec.kind == "closure_sigma":
            it = tx.ideal(mx)
            for a in range(1 << nx):
                count += 1
                clause = spec.conclusion(tx, it, a)
                if clause:
                    return count, ((nx, ix, mx, a), clause, a)
            continue
        iy = rng.randrange(len(enumerate_topologies(ny)))
        k = rng.randrange(ny ** nx)
        f = map_at(k, nx, ny)
        my = rng.randrange(1 << ny) if bounds.include_ideals else 0
        if spec.kind == "jh":
            count += 1
            it = tx.ideal(mx)
            if "x_star" in hyps and not it.x_star:
                continue
            X_star = tau_star(tx.space, Ideal(nx, mx))
            clause = spec.conclusion(tx.space, X_star, enumerate_topologies(ny)[iy], f)
            if clause:
                return count, ((nx, ny, ix, mx, iy, k), clause, None)
            continue
        c = MapCtx(tx, _tables(ny, iy), f)
        if spec.kind == "map":
            count += 1
            if all(c.flag(h) for h in hyps):
                clause = spec.conclusion(c)
                if clause:
                    return count, ((nx, ny, ix, iy, k), clause, None)
            continue
        n_inst, clause, s = _eval_map_ideal_instance(spec, hyps, c, mx, my)
        count += n_inst
        if clause:
            idx = (nx, ny, ix, iy, k, mx, my) + ((s,) if s is not None else ())
            return count, (idx, clause, s)
    return count, None


# -- public API --------------------------------------------------------------


def check_claim(claim: Claim, bounds: UniverseBounds, jobs: int = 1) -> VerificationReport:
    spec = claim.spec()
    t0 = time.perf_counter()
    if bounds.sample_budget is not None:
        count, hit = _sample(claim, bounds)
    else:
        count, hit = _run_all(claim, bounds, jobs)
    outcome = Outcome(False) if hit is None else Outcome(True, _witness_from_hit(claim, hit))
    return VerificationReport(
        theorem=claim.name,
        statement=spec.statement,
        universe=bounds,
        instances_checked=count,
        outcome=outcome,
        elapsed=time.perf_counter() - t0,
        claim=claim,
    )


def check_theorem(theorem_id: str, bounds: UniverseBounds, jobs: int = 1) -> VerificationReport:
    """Quantify one theorem over every instance of the universe."""
    return check_claim(Claim.of_theorem(theorem_id), bounds, jobs)


def mine_counterexample(claim: Claim | str, bounds: UniverseBounds, jobs: int = 1) -> Optional[Witness]:
    """First instance in canonical order that satisfies the hypotheses but not the conclusion."""
    if isinstance(claim, str):
        claim = Claim.parse(claim)
    if bounds.sample_budget is not None:
        _, hit = _sample(claim, bounds)
    else:
        _, hit = _run_all(claim, bounds, jobs, stop_early=True)
    return None if hit is None else _witness_from_hit(claim, hit)


# -- implication matrix ------------------------------------------------------


@dataclass(frozen=True)
class MatrixEntry:
    premise: str
    conclusion: str
    holds: bool
    witness: Optional[Witness] = None
    annotation: Optional[str] = None

    @property
    def in_diagram(self) -> bool:
        return (self.premise, self.conclusion) in DIAGRAM_ARROWS


@dataclass(frozen=True)
class ImplicationMatrix:
    bounds: UniverseBounds
    maps_checked: int
    entries: dict[tuple[str, str], MatrixEntry]

    def entry(self, premise: str, conclusion: str) -> MatrixEntry:
        return self.entries[(parse_notion(premise), parse_notion(conclusion))]

    def holding_arrows(self) -> list[tuple[str, str]]:
        return [k for k, e in self.entries.items() if e.holds and k[0] != k[1]]


FINITE_ONLY_NOTES = {
    ("weak", "tau_theta"): (
        "finite-only: holds whenever the domain or the codomain is finite "
        "(WC_FINITE_COROLLARY); fails for suitable infinite spaces"
    ),
    ("faint", "tau_theta"): (
        "finite-only: in a finite space the θ-open sets are exactly the clopen sets, "
        "so faint and τ_θ-continuity coincide; the infinite weakly continuous map that is "
        "not τ_θ-continuous is faintly continuous, so this fails in general"
    ),
}


def _matrix_unit(unit: _Unit):
    tx = _tables(unit.nx, unit.ix)
    first: dict[tuple[str, str], tuple] = {}
    count = 0
    for iy in range(len(enumerate_topologies(unit.ny))):
        ty = _tables(unit.ny, iy)
        for k, f in enumerate(enumerate_maps(unit.nx, unit.ny)):
            count += 1
            c = MapCtx(tx, ty, f)
            flags = [c.flag(q) for q in NOTIONS]
            for i, p in enumerate(NOTIONS):
                if not flags[i]:
                    continue
                for j, q in enumerate(NOTIONS):
                    if not flags[j] and (p, q) not in first:
                        first[(p, q)] = (unit.nx, unit.ny, unit.ix, iy, k)
    return count, first


def implication_matrix(bounds: UniverseBounds, jobs: int = 1) -> ImplicationMatrix:
    """Entry (P, Q) holds iff no enumerated map is P-continuous without being Q-continuous."""
    units = [
        _Unit(nx, ny, ix)
        for nx in range(1, bounds.max_domain_points + 1)
        for ny in range(1, bounds.max_codomain_points + 1)
        for ix in range(len(enumerate_topologies(nx)))
    ]
    if jobs <= 1:
        results = [_matrix_unit(u) for u in units]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_matrix_unit, units, chunksize=max(1, len(units) // (jobs * 8))))
    count = sum(r[0] for r in results)
    first: dict[tuple[str, str], tuple] = {}
    for _, part in results:
        for key, idx in part.items():
            if key not in first or idx < first[key]:
                first[key] = idx
    entries = {}
    for p in NOTIONS:
        for q in NOTIONS:
            idx = first.get((p, q))
            if idx is None:
                note = FINITE_ONLY_NOTES.get((p, q)) if (p, q) not in DIAGRAM_ARROWS else None
                entries[(p, q)] = MatrixEntry(p, q, True, None, note)
            else:
                claim = Claim(premise=p, conclusion=q)
                w = _witness_from_hit(claim, (idx, f"{q} continuity", None))
                entries[(p, q)] = MatrixEntry(p, q, False, w)
    return ImplicationMatrix(bounds, count, entries)


# -- independent re-certification --------------------------------------------


def _naive_flag(notion: str, X: FiniteSpace, Y: FiniteSpace, f) -> bool:
    return {
        "continuous": naive.is_continuous,
        "weak": naive.is_weakly_continuous,
        "theta": naive.is_theta_continuous,
        "faint": naive.is_faintly_continuous,
        "tau_theta": naive.is_tau_theta_continuous,
    }[notion](X, Y, f)


def _naive_stage(X: FiniteSpace, members, a: int, k: int) -> int:
    for _ in range(k):
        a |= naive.gamma(X, members, a)
    return a


def certify(w: Witness) -> bool:
    """True iff the brute-force operators confirm hypotheses hold and the conclusion fails."""
    claim = w.claim
    spec = claim.spec()
    hyps = claim.hypotheses()
    X, Y, f = w.domain_space, w.codomain_space, w.map

    if spec.kind == "closure_sigma":
        mem = naive.members_of(w.ideals[0])
        a = w.subset.mask
        n = X.n
        stages = [_naive_stage(X, mem, a, k) for k in range(2 * n + 4)]
        scl = naive.sigma_closure(X, mem, a)
        stab = next(k for k in range(len(stages) - 1) if stages[k] == stages[k + 1])
        ok = (
            all(stages[k] & ~stages[k + 1] == 0 for k in range(len(stages) - 1))
            and all(s & ~scl == 0 for s in stages)
            and stab <= n
            and stages[stab] == scl
        )
        return not ok

    if spec.kind == "jh":
        mem = naive.members_of(w.ideals[0])
        if "x_star" in hyps and naive.local_function(X, mem, X.full) != X.full:
            return False
        X_star = FiniteSpace(X.n, naive.tau_star_opens(X, mem))
        return naive.is_theta_continuous(X, Y, f) != naive.is_theta_continuous(X_star, Y, f)

    for h in hyps:
        if h in NOTIONS and not _naive_flag(h, X, Y, f):
            return False

    if spec.kind == "map":
        if spec.id == "PROP_141_EQUIV":
            forms = [
                naive.is_continuous(X, Y, f),
                naive.is_continuous_by_preimage(X, Y, f),
                all(
                    naive.image(f, naive.closure(X, a)) & ~naive.closure(Y, naive.image(f, a)) == 0
                    for a in range(1 << X.n)
                ),
                all(
                    naive.closure(X, naive.preimage(f, b)) & ~naive.preimage(f, naive.closure(Y, b)) == 0
                    for b in range(1 << Y.n)
                ),
                all(
                    naive.preimage(f, naive.interior(Y, b)) & ~naive.interior(X, naive.preimage(f, b)) == 0
                    for b in range(1 << Y.n)
                ),
            ]
            return len(set(forms)) > 1
        target = claim.conclusion if claim.theorem is None else _NOTION_CONCLUSIONS[spec.id]
        return not _naive_flag(target, X, Y, f)

    Ix, Iy = w.ideals
    mx, my = naive.members_of(Ix), naive.members_of(Iy)
    if "compatible" in hyps and not naive.ideal_compatible(f, mx, my):
        return False
    img = lambda a: naive.image(f, a)  # noqa: E731
    pre = lambda b: naive.preimage(f, b)  # noqa: E731
    gx = lambda a: naive.gamma(X, mx, a)  # noqa: E731
    gy = lambda b: naive.gamma(Y, my, b)  # noqa: E731
    s = w.subset.mask if w.subset is not None else None
    tid = spec.id
    if tid == "TC1A":
        return img(gx(s)) & ~gy(img(s)) != 0
    if tid == "TC1B":
        return gx(pre(s)) & ~pre(gy(s)) != 0
    if tid == "TTC2A":
        fa = img(s)
        return any(
            img(_naive_stage(X, mx, s, k)) & ~_naive_stage(Y, my, fa, k) for k in range(X.n + Y.n + 3)
        )
    if tid == "TTC2B":
        return img(naive.sigma_closure(X, mx, s)) & ~naive.sigma_closure(Y, my, img(s)) != 0
    if tid == "TTC2C":
        return not naive.is_continuous_families(naive.sigma_opens(X, mx), naive.sigma_opens(Y, my), f)
    if tid == "TW1A":
        return img(naive.local_function(X, mx, s)) & ~gy(img(s)) != 0
    if tid == "TW1B":
        return naive.local_function(X, mx, pre(s)) & ~pre(gy(s)) != 0
    if tid == "TW2":
        return not naive.is_continuous_families(naive.tau_star_opens(X, mx), naive.sigma_opens(Y, my), f)
    raise UnknownTheorem(tid)


_NOTION_CONCLUSIONS = {
    "TC1_COROLLARY_THETA_IMPLIES_TAUTHETA": "tau_theta",
    "WEAK_IMPLIES_FAINT": "faint",
    "CONT_IMPLIES_TAUTHETA": "tau_theta",
    "TAUTHETA_IMPLIES_FAINT": "faint",
    "THETA_IMPLIES_FAINT": "faint",
    "WC_FINITE_COROLLARY": "tau_theta",
}


def check_all(bounds: UniverseBounds, jobs: int = 1, ids: Sequence[str] = THEOREM_IDS) -> list[VerificationReport]:
    return [check_theorem(t, bounds, jobs) for t in ids]


