"""Report documents. Witnesses are written with point labels, never raw indices."""

from __future__ import annotations

from .continuity import NOTIONS, ContinuityReport, SpaceMap
from .documents import FORMAT_VERSION, labels_of, set_labels, space_doc
from .verify import ImplicationMatrix, VerificationReport, Witness


def _report(kind: str, **payload) -> dict:
    return {"format_version": FORMAT_VERSION, "kind": "report", "report": kind, **payload}


def witness_doc(w: Witness) -> dict:
    X, Y = w.domain_space, w.codomain_space
    doc: dict = {
        "claim": w.claim.name,
        "index": list(w.index),
        "domain": space_doc(X),
        "codomain": space_doc(Y) if Y is not None else None,
        "map": None,
        "ideals": None,
        "subset": None,
        "violated_clause": w.violated_clause,
        "certified": w.certify(),
    }
    if w.map is not None:
        dom, cod = labels_of(X), labels_of(Y)
        doc["map"] = {dom[x]: cod[y] for x, y in enumerate(w.map)}
    if w.ideals is not None:
        ix, iy = w.ideals
        doc["ideals"] = {
            "domain": set_labels(X, ix.generator_mask) if ix is not None else None,
            "codomain": set_labels(Y, iy.generator_mask) if iy is not None else None,
        }
    if w.subset is not None:
        space = X if w.subset_side == "domain" else Y
        doc["subset"] = {"side": w.subset_side, "points": set_labels(space, w.subset.mask)}
    return doc


def verification_doc(r: VerificationReport) -> dict:
    outcome: dict = {"status": r.outcome.status}
    if r.outcome.witness is not None:
        outcome["witness"] = witness_doc(r.outcome.witness)
    return {
        "theorem": r.theorem,
        "statement": r.statement,
        "universe": r.universe.to_dict(),
        "instances_checked": r.instances_checked,
        "outcome": outcome,
    }


def verify_report(reports: list[VerificationReport]) -> dict:
    if len(reports) == 1:
        return _report("verify", **verification_doc(reports[0]))
    return _report("verify", results=[verification_doc(r) for r in reports])


def mine_report(claim_name: str, bounds, witness: Witness | None) -> dict:
    return _report(
        "mine",
        claim=claim_name,
        universe=bounds.to_dict(),
        found=witness is not None,
        witness=witness_doc(witness) if witness is not None else None,
    )


def matrix_report(m: ImplicationMatrix) -> dict:
    entries = []
    for p in NOTIONS:
        for q in NOTIONS:
            e = m.entries[(p, q)]
            entries.append(
                {
                    "premise": p,
                    "conclusion": q,
                    "status": "Holds" if e.holds else "Counterexample",
                    "in_diagram": e.in_diagram,
                    "annotation": e.annotation,
                    "witness": witness_doc(e.witness) if e.witness is not None else None,
                }
            )
    return _report(
        "matrix",
        universe=m.bounds.to_dict(),
        maps_checked=m.maps_checked,
        notions=list(NOTIONS),
        holding_arrows=[f"{p}=>{q}" for p, q in m.holding_arrows()],
        entries=entries,
    )


def classify_report(f: SpaceMap, r: ContinuityReport) -> dict:
    doc = _report(
        "classify",
        notions=list(NOTIONS),
        flags=list(r.flags()),
        continuous=r.continuous,
        weakly_continuous=r.weakly_continuous,
        theta_continuous=r.theta_continuous,
        faintly_continuous=r.faintly_continuous,
        tau_theta_continuous=r.tau_theta_continuous,
        ideal_results=None,
    )
    if r.ideal_results is not None:
        doc["ideal_results"] = {
            "ideal_compatible": r.ideal_results.ideal_compatible,
            "tau_star_to_sigma_continuous": r.ideal_results.tau_star_to_sigma_continuous,
            "sigma_to_sigma_continuous": r.ideal_results.sigma_to_sigma_continuous,
        }
    return doc


def operator_report(name: str, **payload) -> dict:
    return _report("operator", operator=name, **payload)


def enumerate_report(what: str, n: int, items: list) -> dict:
    return _report("enumerate", what=what, n=n, count=len(items), items=items)
