import itertools

import pytest

from idealspace import naive
from idealspace.enumeration import UniverseBounds, enumerate_maps, enumerate_topologies
from idealspace.errors import InvalidClaim, UnknownTheorem
from idealspace.verify import (
    THEOREM_IDS,
    Claim,
    check_claim,
    check_theorem,
    get_theorem,
    implication_matrix,
    mine_counterexample,
)

NAIVE = {
    "continuous": naive.is_continuous,
    "weak": naive.is_weakly_continuous,
    "theta": naive.is_theta_continuous,
    "faint": naive.is_faintly_continuous,
    "tau_theta": naive.is_tau_theta_continuous,
}


def first_violation(p, q, max_x, max_y):
    """Minimal (nx, ny, ix, iy, k) with p true and q false, by direct search."""
    for nx in range(1, max_x + 1):
        for ny in range(1, max_y + 1):
            for ix, X in enumerate(enumerate_topologies(nx)):
                for iy, Y in enumerate(enumerate_topologies(ny)):
                    for k, f in enumerate(enumerate_maps(nx, ny)):
                        if NAIVE[p](X, Y, f) and not NAIVE[q](X, Y, f):
                            return (nx, ny, ix, iy, k)
    return None


class TestClaims:
    def test_parse_arrows(self):
        for text in ("tau_theta=>theta", "τθ ⇒ θ", "tau-theta -> theta"):
            c = Claim.parse(text)
            assert (c.premise, c.conclusion) == ("tau_theta", "theta")

    def test_parse_theorem_with_drop(self):
        c = Claim.parse("tc1a", drop=["compatible"])
        assert c.theorem == "TC1A"
        assert c.hypotheses() == ("theta",)
        assert c.name == "TC1A without compatible"

    def test_bad_drop(self):
        with pytest.raises(InvalidClaim):
            Claim.of_theorem("TC1A", drop=["weak"])
        with pytest.raises(InvalidClaim):
            Claim.parse("weak=>theta", drop=["weak"])

    def test_unknown(self):
        with pytest.raises(UnknownTheorem):
            get_theorem("TC9")
        with pytest.raises(InvalidClaim):
            Claim.parse("weak=>smooth")

    def test_registry_is_closed_list(self):
        assert len(THEOREM_IDS) == 17
        for tid in THEOREM_IDS:
            assert get_theorem(tid).id == tid


@pytest.mark.parametrize("tid", THEOREM_IDS)
def test_theorems_hold_up_to_two_points(tid):
    r = check_theorem(tid, UniverseBounds.square(2))
    assert r.outcome.status == "NoViolation"
    assert r.instances_checked > 0


@pytest.mark.parametrize(
    "tid,drop",
    [("TC1A", "compatible"), ("TC1B", "compatible"), ("TW1A", "compatible"), ("TW1B", "compatible"),
     ("TTC2A", "compatible"), ("TTC2B", "compatible"), ("TTC2C", "compatible"), ("TW2", "compatible")],
)
def test_dropping_compatibility_breaks_theorem(tid, drop):
    w = mine_counterexample(Claim.of_theorem(tid, [drop]), UniverseBounds.square(2))
    assert w is not None
    assert w.certify()


def test_dropping_theta_breaks_tc1a():
    w = mine_counterexample(Claim.of_theorem("TC1A", ["theta"]), UniverseBounds.square(2))
    assert w is not None and w.certify()


@pytest.mark.parametrize("p,q", [("tau_theta", "theta"), ("tau_theta", "weak"), ("faint", "continuous"), ("weak", "theta")])
def test_mined_witness_is_canonical_minimum(p, q):
    bounds = UniverseBounds(2, 3) if q != "theta" or p != "weak" else UniverseBounds(3, 3)
    w = mine_counterexample(f"{p}=>{q}", bounds)
    assert w is not None and w.certify()
    assert w.index == first_violation(p, q, bounds.max_domain_points, bounds.max_codomain_points)


def test_tau_theta_not_theta_witness_is_sierpinski_into_y3_shape():
    w = mine_counterexample("tau_theta=>theta", UniverseBounds(2, 3))
    assert w.index == (2, 3, 1, 3, 1)
    assert w.domain_space.open_masks == (0, 0b01, 0b11)
    assert w.codomain_space.open_masks == (0, 0b001, 0b010, 0b011, 0b111)
    assert w.map == (0, 1)


def test_true_implication_has_no_witness():
    assert mine_counterexample("continuous=>theta", UniverseBounds(2, 3)) is None


def test_parallel_matches_serial():
    b = UniverseBounds.square(2)
    c = Claim.of_theorem("TTC2A", ["compatible"])
    serial = check_claim(c, b, jobs=1)
    par = check_claim(c, b, jobs=4)
    assert serial == par
    assert serial.outcome.witness.index == par.outcome.witness.index
    assert mine_counterexample(c, b, jobs=1) == mine_counterexample(c, b, jobs=3)


def test_sampling_is_reproducible():
    b = UniverseBounds(4, 4, sample_budget=200)
    a = check_theorem("TC1A", b)
    assert a == check_theorem("TC1A", b)
    assert a.outcome.status == "NoViolation"
    w = mine_counterexample(Claim.of_theorem("TC1A", ["compatible"]), UniverseBounds(4, 4, sample_budget=500))
    assert w is not None and w.certify()


def test_no_ideals_universe_is_smaller():
    full = check_theorem("TC1A", UniverseBounds.square(2))
    trivial = check_theorem("TC1A", UniverseBounds.square(2, include_ideals=False))
    assert trivial.instances_checked < full.instances_checked
    assert trivial.outcome.status == "NoViolation"


def test_matrix_small():
    m = implication_matrix(UniverseBounds.square(2))
    for (p, q), e in m.entries.items():
        if p == q:
            assert e.holds
        if e.witness is not None:
            assert not e.holds and e.witness.certify()
    assert m.entry("weak", "tau_theta").holds
    assert m.entry("weak", "tau_theta").annotation
