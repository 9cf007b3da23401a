"""Finite ideal topological spaces.

Closure-type operators and derived topologies, five continuity notions for
maps between finite spaces, and exhaustive checking of their relations over
enumerated small universes.
"""

from .continuity import (
    ContinuityReport,
    SpaceMap,
    classify,
    ideal_compatible,
    image,
    is_continuous,
    is_faintly_continuous,
    is_tau_theta_continuous,
    is_theta_continuous,
    is_weakly_continuous,
    preimage,
)
from .enumeration import UniverseBounds, enumerate_ideals, enumerate_maps, enumerate_topologies
from .errors import IdealSpaceError
from .operators import (
    ClSequence,
    cl_sequence,
    gamma,
    local_function,
    psi_gamma,
    sigma,
    sigma_closure,
    star_closure,
    tau_star,
    tau_theta,
    tau_theta_closure,
    tau_theta_interior,
    theta_closure,
    theta_interior,
)
from .setspace import (
    FiniteSpace,
    Ideal,
    PointSet,
    closure,
    ideal_contains,
    interior,
    make_ideal,
    make_space,
    minimal_nbhd,
    trivial_ideal,
)
from .verify import (
    Claim,
    VerificationReport,
    Witness,
    check_theorem,
    implication_matrix,
    mine_counterexample,
)

__version__ = "0.1.0"
